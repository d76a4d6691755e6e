//! Runs the isometry classifier on known isometries and a random matrix,
//! printing the four equivalent verdicts side by side.

use octolin::{sample, Classifier, OMatrix, OVector, Octonion};

fn main() {
    let e = Octonion::basis;
    let k = 1.0 / 6f64.sqrt();
    let r2 = 2f64.sqrt();
    let r3 = 3f64.sqrt();
    let iso3 = OMatrix::new(vec![
        OVector::new(vec![e(4) * (r2 * k), e(1) * (r2 * k), e(2) * (r2 * k)]).unwrap(),
        OVector::new(vec![Octonion::ZERO, e(2) * (r3 * k), e(1) * (r3 * k)]).unwrap(),
        OVector::new(vec![e(4) * (-2.0 * k), e(1) * k, e(2) * k]).unwrap(),
    ])
    .unwrap();

    let mut rng = sample::rng(1);
    let cases = [
        ("Iso(3) example", iso3),
        ("random p(UQ)q", sample::isometry(&mut rng, 3)),
        ("gaussian", sample::matrix(&mut rng, 3, 3)),
    ];

    let classifier = Classifier::default();
    println!(
        "{:<22} {:>6} {:>6} {:>6} {:>6}   isometry",
        "matrix", "rows", "cols", "R", "norm"
    );
    for (name, t) in &cases {
        let r = classifier.is_isometry(t).unwrap();
        println!(
            "{name:<22} {:>6} {:>6} {:>6} {:>6}   {}",
            r.rows_weak_assoc,
            r.columns_weak_assoc,
            r.real_composition_identity,
            r.norm_preserving,
            r.is_isometry
        );
    }
    let report = classifier.is_isometry(&cases[0].1).unwrap();
    println!("\n{}", serde_json::to_string_pretty(&report).unwrap());
}
