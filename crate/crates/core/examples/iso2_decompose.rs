//! Splitting 2x2 isometries as p·U with U unitary over C_J, and the loop
//! product on classes.

use octolin::{sample, Classifier, OMatrix, OVector, Octonion};

fn main() {
    let c = Classifier::default();
    let e = Octonion::basis;
    let s = 0.5f64.sqrt();
    let row = |a: Octonion, b: Octonion| OVector::new(vec![a * s, b * s]).unwrap();

    for t in [
        OMatrix::new(vec![row(e(1), e(2)), row(e(2), e(1))]).unwrap(),
        OMatrix::new(vec![row(e(1), e(2)), row(e(1), -e(2))]).unwrap(),
    ] {
        let d = c.iso2_decompose(&t).unwrap();
        println!(
            "T =\n{t}\np = {}, J = {}\nU =\n{}\nresidual {:.1e}\n",
            d.p, d.j, d.u, d.residual
        );
    }

    let mut rng = sample::rng(12);
    let j = sample::unit_imaginary(&mut rng);
    let t = sample::cj_unitary(&mut rng, 2, j).left_scale(sample::unit_octonion(&mut rng));
    let d = c.iso2_decompose(&t).unwrap();
    println!(
        "random p·U: reconstruction error {:.2e}",
        d.matrix().max_abs_diff(&t)
    );

    let a = c
        .iso2_decompose(
            &sample::embed_real(&sample::real_orthogonal(&mut rng, 2))
                .left_scale(sample::unit_octonion(&mut rng)),
        )
        .unwrap();
    let prod = c.loop_mul(&a, &d).unwrap();
    println!("[p, U][q, S] = [{}, U S], J = {}", prod.p, prod.j);
}
