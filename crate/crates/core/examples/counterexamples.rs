//! Two 2x2 matrices with unit Gram products that are not isometries.

use octolin::vector::second_associator_vec;
use octolin::{Classifier, OMatrix, OVector, Octonion};

fn row(a: Octonion, b: Octonion) -> OVector {
    OVector::new(vec![a, b]).unwrap()
}

fn show(name: &str, t: &OMatrix) {
    let d = t.dual().unwrap();
    let rep = Classifier::default().is_isometry(t).unwrap();
    println!("{name}:\n{t}");
    println!("T T* =\n{}", t.matmul(&d).unwrap());
    println!("T* T =\n{}", d.matmul(t).unwrap());
    println!(
        "rows weak associative: {}, isometry: {}, kernel dim: {}\n",
        rep.rows_weak_assoc, rep.is_isometry, rep.kernel_dim
    );
}

fn main() {
    let e = Octonion::basis;
    let s = 0.5f64.sqrt();

    let a = OMatrix::new(vec![row(e(7), e(3)), row(e(2), -e(6))])
        .unwrap()
        .scale(s);
    show("A", &a);

    let b = OMatrix::new(vec![row(e(0), e(1)), row(-e(3), e(2))])
        .unwrap()
        .scale(s);
    show("B", &b);

    let y = row(e(4), e(7));
    println!("B applied to {y} = {}", b.apply(&y).unwrap());
    let w = second_associator_vec(e(4), &row(e(0), e(1)), &row(-e(3), e(2))).unwrap();
    println!("A_e4((1, e1), (-e3, e2)) = {w}");
}
