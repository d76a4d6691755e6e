//! Real dimension of O(Oy) = span{e_i(e_j y)} for unit vectors y in O^3.

use octolin::tolerance::Tolerances;
use octolin::{sample, Classifier, OVector, Octonion};

fn main() {
    let c = Classifier::default();
    let mut rng = sample::rng(4);

    let real = sample::real_unit_vector(&mut rng, 3);
    let r = c.stiefel_oo_y_dim(&real).unwrap();
    println!(
        "real y:            dim O(Oy) = {:>2}, fiber {}",
        r.dim_oo_y, r.fiber_dim
    );

    let s = 0.5f64.sqrt();
    let y = OVector::new(vec![
        Octonion::real(s),
        Octonion::basis(1) * s,
        Octonion::ZERO,
    ])
    .unwrap();
    for tau in [1e-6, 1e-8, 1e-10] {
        let c = Classifier::new(
            Tolerances {
                rank: tau,
                ..Tolerances::DEFAULT
            },
            42,
        );
        let r = c.stiefel_oo_y_dim(&y).unwrap();
        println!(
            "(1, e1, 0)/√2:     dim O(Oy) = {:>2} at tau_rank {tau:e}",
            r.dim_oo_y
        );
    }

    let generic = sample::unit_vector(&mut rng, 3);
    let r = c.stiefel_oo_y_dim(&generic).unwrap();
    println!(
        "random unit y:     dim O(Oy) = {:>2}, fiber {}",
        r.dim_oo_y, r.fiber_dim
    );
}
