//! Parseval's identity holds for weak associative orthonormal bases and
//! fails for an orthonormal basis of O^2 that is not weak associative.

use octolin::frame::{frame_report, parseval_check, parseval_witness, Frame};
use octolin::{sample, OVector, Octonion, Tolerances};

fn main() {
    let tol = Tolerances::DEFAULT;
    let mut rng = sample::rng(3);

    let weak = Frame::new(sample::isometry(&mut rng, 2).rows().to_vec()).unwrap();
    let x = sample::vector(&mut rng, 2);
    let p = parseval_check(&weak, &x).unwrap();
    println!("weak associative basis: {:?}", frame_report(&weak, &tol));
    println!(
        "  |x|^2 = {:.12}, sum |<x, x_a>|^2 = {:.12}, reconstruction error {:.2e}",
        x.norm_sqr(),
        p.coef_energy,
        p.reconstruction_residual
    );

    let e = Octonion::basis;
    let s = 0.5f64.sqrt();
    let v = |a: usize, b: usize| OVector::new(vec![e(a) * s, e(b) * s]).unwrap();
    let four = Frame::new(vec![v(1, 2), v(4, 7), v(6, 5), v(0, 3)]).unwrap();
    println!("\nfour-element system: {:?}", frame_report(&four, &tol));
    if let Some((x, p)) = parseval_witness(&four, 1e-9) {
        println!(
            "  x = {x}: |x|^2 = {}, coefficient energy = {}",
            x.norm_sqr(),
            p.coef_energy
        );
    }
}
