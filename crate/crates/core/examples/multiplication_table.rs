//! Prints the basis multiplication table and a few products.

use octolin::cli::mult_table_text;
use octolin::{associator, Octonion};

fn main() {
    print!("{}", mult_table_text());

    let e = Octonion::basis;
    let p = Octonion::real(1.0) + e(1) * 2.0 - e(6);
    let q = e(2) + e(4) * 0.5;
    println!();
    println!("p = {p}");
    println!("q = {q}");
    println!("pq = {}", p * q);
    println!("qp = {}", q * p);
    println!(
        "|pq| = {:.6}, |p||q| = {:.6}",
        (p * q).norm(),
        p.norm() * q.norm()
    );
    println!("[e1, e2, e4] = {}", associator(e(1), e(2), e(4)));
    let formula = p.real_part_formula();
    println!(
        "(5/12)p - (1/12) sum e_i p e_i = {formula}, off from Re p by {:.1e}",
        formula.max_abs_diff(&Octonion::real(p.re()))
    );
}
