use octolin::{sample, Classifier, OMatrix, OVector};

fn main() {
    let c = Classifier::default();
    let mut rng = sample::rng(13);

    for k in 1..=3 {
        let mut rows = sample::weak_associative_rows(&mut rng, k, 3);
        rows.extend((k..3).map(|_| OVector::zeros(3)));
        let t = OMatrix::new(rows.clone()).unwrap();
        let r = c.is_partial_isometry(&t).unwrap();
        println!(
            "k = {k}: partial isometry {}, kernel dim {}, kernel is an O-submodule {}",
            r.is_partial_isometry, r.kernel_dim, r.kernel_is_o_submodule
        );
        if k < 3 {
            rows[k] = sample::vector(&mut rng, 3);
            let r = c.is_partial_isometry(&OMatrix::new(rows).unwrap()).unwrap();
            println!(
                "       with a random row appended: {}",
                r.is_partial_isometry
            );
        }
    }
}
