mod common;

use common::*;
use octolin::classify::Classifier;
use octolin::frame::{frame_scalar_action, is_weak_associative, Frame};
use octolin::vector::{inner, second_associator_vec};
use octolin::{associator, sample, OMatrix, OVector, Octonion, Side, Tolerances};
use proptest::prelude::*;

fn octonion() -> impl Strategy<Value = Octonion> {
    prop::array::uniform8(-4.0f64..4.0).prop_map(|c| Octonion::new(c).unwrap())
}

fn vector(n: usize) -> impl Strategy<Value = OVector> {
    prop::collection::vec(octonion(), n).prop_map(|v| OVector::new(v).unwrap())
}

fn matrix(n: usize) -> impl Strategy<Value = OMatrix> {
    prop::collection::vec(vector(n), n).prop_map(|r| OMatrix::new(r).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn product_matches_oracle(p in octonion(), q in octonion()) {
        prop_assert!(diff(&of(&(p * q)), &mul(&of(&p), &of(&q))) <= 1e-12);
    }

    #[test]
    fn norm_is_multiplicative(p in octonion(), q in octonion()) {
        let lhs = (p * q).norm();
        prop_assert!((lhs - p.norm() * q.norm()).abs() <= 1e-12 * (1.0 + lhs));
    }

    #[test]
    fn conjugation_reverses_products(p in octonion(), q in octonion()) {
        prop_assert!((p * q).conj().max_abs_diff(&(q.conj() * p.conj())) <= 1e-12);
    }

    #[test]
    fn associator_alternates(p in octonion(), q in octonion(), r in octonion()) {
        let a = associator(p, q, r);
        prop_assert!((a + associator(q, p, r)).max_abs() <= 1e-11);
        prop_assert!((a + associator(p, r, q)).max_abs() <= 1e-11);
    }

    #[test]
    fn moufang_on_octonions(p in octonion(), q in octonion(), r in octonion()) {
        let lhs = p * (q * (p * r));
        let rhs = ((p * q) * p) * r;
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-10);
    }

    #[test]
    fn inner_is_hermitian_and_matches_oracle(u in vector(3), v in vector(3)) {
        let a = inner(&u, &v).unwrap();
        prop_assert!(a.max_abs_diff(&inner(&v, &u).unwrap().conj()) <= 1e-12);
        prop_assert!(diff(&of(&a), &common::inner(&vec_of(&u), &vec_of(&v))) <= 1e-12);
    }

    #[test]
    fn second_associator_antisymmetric(p in octonion(), u in vector(2), v in vector(2)) {
        let a = second_associator_vec(p, &u, &v).unwrap();
        let b = second_associator_vec(p, &v, &u).unwrap();
        prop_assert!((a + b).max_abs() <= 1e-10);
        prop_assert!(a.re().abs() <= 1e-12);
    }

    #[test]
    fn dual_is_an_involution(t in matrix(3)) {
        prop_assert_eq!(t.dual().unwrap().dual().unwrap(), t);
    }

    #[test]
    fn matmul_matches_oracle(s in matrix(2), t in matrix(2)) {
        let lib = mat_of(&s.matmul(&t).unwrap());
        prop_assert!(mdiff(&lib, &matmul(&mat_of(&s), &mat_of(&t))) <= 1e-12);
    }

    #[test]
    fn json_round_trip(t in matrix(2)) {
        let text = serde_json::to_string(&t).unwrap();
        let back: OMatrix = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn sampled_isometries_classify(seed in any::<u64>(), n in 1usize..4) {
        let t = sample::isometry(&mut sample::rng(seed), n);
        let rep = Classifier::default().is_isometry(&t).unwrap();
        prop_assert!(rep.is_isometry && rep.verdicts_agree());
        prop_assert_eq!(rep.kernel_dim, 0);
    }

    #[test]
    fn unit_scalars_preserve_weak_frames(seed in any::<u64>(), k in 1usize..4) {
        let mut r = sample::rng(seed);
        let f = Frame::new(sample::weak_associative_rows(&mut r, k, 3)).unwrap();
        let p = sample::unit_octonion(&mut r);
        let tol = Tolerances::DEFAULT;
        for side in [Side::Left, Side::Right] {
            let g = frame_scalar_action(p, &f, side, tol.eq).unwrap();
            prop_assert!(is_weak_associative(&g, &tol).holds);
        }
    }

    #[test]
    fn kernel_dimension_matches_elimination(seed in any::<u64>()) {
        let mut r = sample::rng(seed);
        let mut rows = sample::weak_associative_rows(&mut r, 1, 2);
        rows.push(rows[0].left_mul(sample::octonion(&mut r)));
        let t = OMatrix::new(rows).unwrap();
        let lib = t.kernel(1e-8).unwrap().len();
        prop_assert_eq!(lib, 16 - rank(&real_rows(&mat_of(&t)), 1e-9));
    }
}
