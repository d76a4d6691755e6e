//! The scalar actions T⊙p and p⊙T, evaluated from their definitions and
//! from the Moufang forms p T(p⁻¹x) p and p⁻¹ T(pxp).

use octolin::matrix::{scalar_action_left, scalar_action_right};
use octolin::sample;

fn main() {
    let mut rng = sample::rng(9);
    let t = sample::matrix(&mut rng, 3, 3);
    let p = sample::unit_octonion(&mut rng);
    let x = sample::vector(&mut rng, 3);

    for (name, op) in [
        ("T⊙p", scalar_action_right(&t, p)),
        ("p⊙T", scalar_action_left(p, &t)),
    ] {
        let def = op.eval(&x).unwrap();
        let moufang = op.eval_moufang(&x, 1e-9).unwrap();
        let via_matrix = op.matrix().apply(&x).unwrap();
        println!("{name}(x) = {def}");
        println!(
            "  Moufang form differs by {:.2e}",
            def.max_abs_diff(&moufang)
        );
        println!(
            "  scaled matrix differs by {:.2e}",
            def.max_abs_diff(&via_matrix)
        );
    }
}
