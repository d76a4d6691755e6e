//! Regular composition f_S ⊚ f_T, evaluated from its definition, matches
//! the operator of the opposite product TS.

use octolin::matrix::{regular_compose, regular_compose_eval};
use octolin::sample;

fn main() {
    let mut rng = sample::rng(10);
    let s = sample::matrix(&mut rng, 3, 3);
    let t = sample::matrix(&mut rng, 3, 3);
    let k = regular_compose(&s, &t).unwrap();
    let st = s.matmul(&t).unwrap();

    for _ in 0..3 {
        let x = sample::vector(&mut rng, 3);
        let lhs = regular_compose_eval(&s, &t, &x).unwrap();
        println!(
            "|(f_S ⊚ f_T)(x) - x(TS)| = {:.2e}   |(f_S ⊚ f_T)(x) - x(ST)| = {:.2e}",
            lhs.max_abs_diff(&k.apply(&x).unwrap()),
            lhs.max_abs_diff(&st.apply(&x).unwrap()),
        );
    }
}
