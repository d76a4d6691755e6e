//! Seeded property suites covering the algebraic identities, frame
//! frame results, operator identities and classification invariants.
//!
//! Every property runs a small deterministic fixed-case set followed by
//! `trials` random cases; the summary keeps the worst residual seen.
//! Boolean properties report the number of violating cases as their
//! residual with threshold 0.

use rand::RngCore;
use serde::{Deserialize, Serialize};

use crate::classify::Classifier;
use crate::frame::{
    frame_report, frame_scalar_action, is_weak_associative, parseval_check, parseval_witness, Frame,
};
use crate::matrix::{
    regular_compose_residual, scalar_action_left, scalar_action_right, OMatrix, Side,
};
use crate::octonion::{associator, basis_mul, Octonion, TRIPLES};
use crate::sample::{self, SampleRng};
use crate::tolerance::Tolerances;
use crate::vector::{associator_vec, inner, inner_real, second_associator_vec, OVector};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub trials: usize,
    /// Deliberately breaks one property so the harness can be tested.
    pub inject_fault: bool,
    pub tol: Tolerances,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 42,
            trials: 100,
            inject_fault: false,
            tol: Tolerances::DEFAULT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyResult {
    pub name: String,
    pub threshold: f64,
    pub max_residual: f64,
    pub cases: usize,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub seed: u64,
    pub trials: usize,
    pub properties: Vec<PropertyResult>,
    pub all_passed: bool,
}

struct Suite {
    rng: SampleRng,
    trials: usize,
    results: Vec<PropertyResult>,
}

impl Suite {
    fn prop(
        &mut self,
        name: &str,
        threshold: f64,
        fixed: Vec<f64>,
        mut random: impl FnMut(&mut SampleRng) -> f64,
    ) {
        let mut worst: f64 = 0.0;
        let mut cases = 0;
        for r in fixed {
            worst = worst.max(r);
            cases += 1;
        }
        for _ in 0..self.trials {
            worst = worst.max(random(&mut self.rng));
            cases += 1;
        }
        self.push(name, threshold, worst, cases);
    }

    fn fixed(&mut self, name: &str, threshold: f64, fixed: Vec<f64>) {
        let worst = fixed.iter().cloned().fold(0.0, f64::max);
        self.push(name, threshold, worst, fixed.len());
    }

    fn push(&mut self, name: &str, threshold: f64, worst: f64, cases: usize) {
        self.results.push(PropertyResult {
            name: name.to_string(),
            threshold,
            max_residual: worst,
            cases,
            passed: worst <= threshold && worst.is_finite(),
        });
    }
}

fn e(i: usize) -> Octonion {
    Octonion::basis(i)
}

fn flag(ok: bool) -> f64 {
    if ok {
        0.0
    } else {
        1.0
    }
}

fn vec2(a: Octonion, b: Octonion) -> OVector {
    OVector::new(vec![a, b]).expect("non-empty")
}

fn unnormalized_b_rows() -> (OVector, OVector) {
    (vec2(Octonion::ONE, e(1)), vec2(-e(3), e(2)))
}

fn four_system() -> Frame {
    let s = 0.5f64.sqrt();
    Frame::new(vec![
        vec2(e(1) * s, e(2) * s),
        vec2(e(4) * s, e(7) * s),
        vec2(e(6) * s, e(5) * s),
        vec2(e(0) * s, e(3) * s),
    ])
    .expect("non-empty")
}

fn counterexample_a() -> OMatrix {
    let s = 0.5f64.sqrt();
    OMatrix::new(vec![vec2(e(7), e(3)), vec2(e(2), -e(6))])
        .expect("square")
        .scale(s)
}

fn counterexample_b() -> OMatrix {
    let (r1, r2) = unnormalized_b_rows();
    OMatrix::new(vec![r1, r2])
        .expect("square")
        .scale(0.5f64.sqrt())
}

fn iso2_example() -> OMatrix {
    OMatrix::new(vec![vec2(e(1), e(2)), vec2(e(2), e(1))])
        .expect("square")
        .scale(0.5f64.sqrt())
}

fn table_mismatches() -> f64 {
    let mut bad = 0;
    for i in 0..8 {
        for j in 0..8 {
            let (sign, index) = if i == 0 {
                (1, j)
            } else if j == 0 {
                (1, i)
            } else if i == j {
                (-1, 0)
            } else {
                let mut found = (0, 0);
                for t in TRIPLES {
                    for r in 0..3 {
                        let (a, b, c) = (t[r], t[(r + 1) % 3], t[(r + 2) % 3]);
                        if (a, b) == (i, j) {
                            found = (1, c);
                        } else if (b, a) == (i, j) {
                            found = (-1, c);
                        }
                    }
                }
                found
            };
            let p = basis_mul(i, j);
            if i64::from(p.sign) != sign || usize::from(p.index) != index {
                bad += 1;
            }
        }
    }
    bad as f64
}

fn trace_assoc_mismatches() -> f64 {
    let mut bad = 0;
    for i in 0..8 {
        for j in 0..8 {
            for k in 0..8 {
                let l = associator(e(i), e(j), e(k));
                let lhs = (e(i) * (e(j) * e(k))).re();
                let rhs = ((e(i) * e(j)) * e(k)).re();
                if lhs != rhs || l.re() != 0.0 {
                    bad += 1;
                }
            }
        }
    }
    bad as f64
}

fn weak_frame(rng: &mut SampleRng, n: usize) -> Frame {
    Frame::new(sample::isometry(rng, n).rows().to_vec()).expect("non-empty")
}

fn real_orthogonal_frame(rng: &mut SampleRng, n: usize) -> Frame {
    let q = sample::embed_real(&sample::real_orthogonal(rng, n));
    Frame::new(q.rows().to_vec()).expect("non-empty")
}

/// Max over the real basis probes and `x` of `|⟨Tx, y⟩_R - ⟨x, T*y⟩_R|`.
fn dual_real_residual(t: &OMatrix, x: &OVector, y: &OVector) -> f64 {
    let ts = t.dual().expect("square");
    let lhs = inner_real(&t.apply(x).expect("len"), y).expect("len");
    let rhs = inner_real(x, &ts.apply(y).expect("len")).expect("len");
    (lhs - rhs).abs()
}

/// Runs every property suite.
pub fn run(cfg: &VerifyConfig) -> Summary {
    let mut s = Suite {
        rng: sample::rng(cfg.seed),
        trials: cfg.trials,
        results: Vec::new(),
    };
    let tol = cfg.tol;
    let classifier = Classifier::new(tol, cfg.seed);

    s.fixed("mult_table_regeneration", 0.0, vec![table_mismatches()]);
    s.fixed("trace_associativity", 0.0, vec![trace_assoc_mismatches()]);

    s.prop(
        "norm_multiplicative",
        1e-10,
        vec![(((e(1) + e(2)) * (e(4) - e(7))).norm() - 2.0).abs()],
        |r| {
            let p = sample::octonion(r);
            let q = sample::octonion(r);
            ((p * q).norm() - p.norm() * q.norm()).abs()
        },
    );

    s.prop(
        "associator_alternating",
        1e-12,
        vec![associator(e(1), e(1), e(2)).max_abs()],
        |r| {
            let p = sample::octonion(r);
            let q = sample::octonion(r);
            associator(p, p, q)
                .max_abs()
                .max(associator(p, q, p).max_abs())
                .max(associator(q, p, p).max_abs())
        },
    );

    s.prop(
        "real_part_formula",
        1e-12,
        vec![(e(3) * 2.0 + Octonion::real(1.5))
            .real_part_formula()
            .max_abs_diff(&Octonion::real(1.5))],
        |r| {
            let p = sample::octonion(r);
            p.real_part_formula().max_abs_diff(&Octonion::real(p.re()))
        },
    );

    let (r1, r2) = unnormalized_b_rows();
    s.prop(
        "inner_hermitian",
        1e-12,
        vec![(inner(&r1, &r2).unwrap() - inner(&r2, &r1).unwrap().conj()).max_abs()],
        |r| {
            let u = sample::vector(r, 3);
            let v = sample::vector(r, 3);
            (inner(&u, &v).unwrap() - inner(&v, &u).unwrap().conj()).max_abs()
        },
    );

    let sign = if cfg.inject_fault { -1.0 } else { 1.0 };
    let antisym = |p: Octonion, u: &OVector, v: &OVector| {
        let a = second_associator_vec(p, u, v).unwrap();
        let b = second_associator_vec(p, v, u).unwrap();
        (a + b * sign).max_abs()
    };
    s.prop(
        "second_associator_antisymmetric",
        1e-10,
        vec![antisym(e(4), &r1, &r2)],
        |r| {
            let p = sample::octonion(r);
            let u = sample::vector(r, 3);
            let v = sample::vector(r, 3);
            antisym(p, &u, &v)
        },
    );

    s.prop("inner_left_scalar_expansion", 1e-10, vec![], |r| {
        let p = sample::octonion(r);
        let u = sample::vector(r, 3);
        let v = sample::vector(r, 3);
        let lhs = inner(&u, &v.left_mul(p)).unwrap();
        let rhs = inner(&u, &v).unwrap() * p.conj() + second_associator_vec(p, &u, &v).unwrap();
        lhs.max_abs_diff(&rhs)
    });

    s.prop("inner_two_scalar_expansion", 1e-10, vec![], |r| {
        let p = sample::octonion(r);
        let q = sample::octonion(r);
        let u = sample::vector(r, 3);
        let v = sample::vector(r, 3);
        let lhs = inner(&u.left_mul(p), &v.left_mul(q)).unwrap();
        let rhs = (p * inner(&u, &v).unwrap()) * q.conj()
            + second_associator_vec(p * q, &u, &v).unwrap()
            + inner(&associator_vec(p, q, &v), &u).unwrap();
        lhs.max_abs_diff(&rhs)
    });

    s.prop(
        "second_associator_imaginary",
        1e-12,
        vec![second_associator_vec(e(4), &r1, &r2).unwrap().re().abs()],
        |r| {
            let p = sample::octonion(r);
            let u = sample::vector(r, 3);
            let v = sample::vector(r, 3);
            second_associator_vec(p, &u, &v).unwrap().re().abs()
        },
    );

    s.prop("left_alternative", 1e-12, vec![], |r| {
        let p = sample::octonion(r);
        let q = sample::octonion(r);
        let x = sample::vector(r, 3);
        (&associator_vec(p, q, &x) + &associator_vec(q, p, &x)).max_abs()
    });

    s.prop("gram_hermitian", 1e-12, vec![], |r| {
        let f = Frame::new((0..3).map(|_| sample::vector(r, 2)).collect()).unwrap();
        let g = f.gram();
        let mut worst: f64 = 0.0;
        for (a, row) in g.iter().enumerate() {
            for (b, gab) in row.iter().enumerate() {
                worst = worst.max(gab.max_abs_diff(&g[b][a].conj()));
            }
        }
        worst
    });

    s.prop(
        "associative_implies_weak_associative",
        0.0,
        vec![flag(is_weak_associative(&Frame::standard(3), &tol).holds)],
        |r| {
            let f = real_orthogonal_frame(r, 3);
            flag(is_weak_associative(&f, &tol).holds)
        },
    );

    s.prop(
        "weak_basis_cardinality",
        0.0,
        vec![flag(frame_report(&Frame::standard(2), &tol).complete)],
        |r| {
            let n = 3;
            let k = 1 + (sample::octonion(r)[0].abs() * 10.0) as usize % n;
            let rows = sample::weak_associative_rows(r, k, n);
            let rep = frame_report(&Frame::new(rows).unwrap(), &tol);
            flag(rep.weak_associative && rep.complete == (k == n))
        },
    );

    s.prop("unit_scalar_action", 0.0, vec![], |r| {
        let f = weak_frame(r, 3);
        let p = sample::unit_octonion(r);
        let l = frame_scalar_action(p, &f, Side::Left, tol.eq).unwrap();
        let rt = frame_scalar_action(p, &f, Side::Right, tol.eq).unwrap();
        flag(is_weak_associative(&l, &tol).holds && is_weak_associative(&rt, &tol).holds)
    });

    let four = four_system();
    s.prop(
        "parseval_on_weak_bases",
        1e-9,
        vec![{
            let x = vec2(e(1), e(3) * 2.0);
            let p = parseval_check(&Frame::standard(2), &x).unwrap();
            (p.coef_energy - x.norm_sqr())
                .abs()
                .max(p.reconstruction_residual)
        }],
        |r| {
            let f = weak_frame(r, 3);
            let x = sample::vector(r, 3);
            let p = parseval_check(&f, &x).unwrap();
            (p.coef_energy - x.norm_sqr())
                .abs()
                .max(p.reconstruction_residual)
        },
    );
    s.fixed(
        "parseval_fails_on_four_system",
        0.0,
        vec![
            flag(!is_weak_associative(&four, &tol).holds),
            flag(parseval_witness(&four, 1e-9).is_some()),
        ],
    );

    let probes_for = |t: &OMatrix, r: &mut SampleRng| -> f64 {
        let x = sample::vector(r, t.nrows());
        let mut worst: f64 = 0.0;
        for m in 1..8 {
            let p = e(m);
            let d = &t.apply(&x.left_mul(p)).unwrap() - &t.apply(&x).unwrap().left_mul(p);
            worst = worst.max(d.real_part().max_abs());
        }
        worst
    };
    s.prop("paralinearity", 1e-12, vec![], |r| {
        let t = sample::matrix(r, 3, 3);
        probes_for(&t, r)
    });

    s.prop(
        "dual_real_relation",
        1e-10,
        vec![dual_real_residual(
            &counterexample_a(),
            &vec2(e(4), e(7)),
            &vec2(e(1), e(5)),
        )],
        |r| {
            let t = sample::matrix(r, 3, 3);
            let x = sample::vector(r, 3);
            let y = sample::vector(r, 3);
            dual_real_residual(&t, &x, &y)
        },
    );

    s.prop("dual_octonionic_on_real_vectors", 1e-10, vec![], |r| {
        let t = sample::matrix(r, 3, 3);
        let ts = t.dual().unwrap();
        let x = sample::real_vector(r, 3);
        let y = sample::vector(r, 3);
        let a = inner(&x, &ts.apply(&y).unwrap()).unwrap();
        let b = inner(&t.apply(&x).unwrap(), &y).unwrap();
        let c = inner(&y, &ts.apply(&x).unwrap()).unwrap();
        let d = inner(&t.apply(&y).unwrap(), &x).unwrap();
        a.max_abs_diff(&b).max(c.max_abs_diff(&d))
    });

    s.prop("regular_composition", 1e-9, vec![], |r| {
        let a = sample::matrix(r, 3, 3);
        let b = sample::matrix(r, 3, 3);
        let probes = vec![sample::vector(r, 3), sample::vector(r, 3)];
        regular_compose_residual(&a, &b, &probes).unwrap()
    });

    s.prop("moufang_forms", 1e-9, vec![], |r| {
        let t = sample::matrix(r, 3, 3);
        let p = sample::unit_octonion(r);
        let x = sample::vector(r, 3);
        let right = scalar_action_right(&t, p);
        let left = scalar_action_left(p, &t);
        let a = right
            .eval(&x)
            .unwrap()
            .max_abs_diff(&right.eval_moufang(&x, tol.eq).unwrap());
        let b = left
            .eval(&x)
            .unwrap()
            .max_abs_diff(&left.eval_moufang(&x, tol.eq).unwrap());
        a.max(b)
    });

    let gram_res = |t: &OMatrix| {
        let d = t.dual().unwrap();
        t.matmul(&d)
            .unwrap()
            .identity_residual()
            .max(d.matmul(t).unwrap().identity_residual())
    };
    s.prop(
        "isometry_gram_products",
        1e-9,
        vec![gram_res(&iso2_example()), gram_res(&OMatrix::identity(3))],
        |r| gram_res(&sample::isometry(r, 3)),
    );

    let web = |t: &OMatrix| {
        let rep = classifier.classify(t).unwrap();
        flag(rep.verdicts_agree())
    };
    s.prop(
        "isometry_equivalence_web",
        0.0,
        vec![
            web(&iso2_example()),
            web(&counterexample_a()),
            web(&counterexample_b()),
            web(&OMatrix::identity(2)),
        ],
        |r| {
            if r.next_u32() % 2 == 0 {
                web(&sample::isometry(r, 3))
            } else {
                web(&sample::matrix(r, 3, 3))
            }
        },
    );

    s.prop("scaled_isometry_rows", 0.0, vec![], |r| {
        let t = sample::isometry(r, 3);
        let p = sample::unit_octonion(r);
        let rows = |m: OMatrix| Frame::new(m.rows().to_vec()).unwrap();
        let a = is_weak_associative(&rows(scalar_action_right(&t, p).matrix()), &tol).holds;
        let b = is_weak_associative(&rows(scalar_action_left(p, &t).matrix()), &tol).holds;
        flag(a && b)
    });

    s.prop("partial_isometry_image", 0.0, vec![], |r| {
        let n = 3;
        let k = 1 + (r.next_u32() as usize) % 2;
        let mut rows = sample::weak_associative_rows(r, k, n);
        rows.extend((k..n).map(|_| OVector::zeros(n)));
        let t = OMatrix::new(rows).unwrap();
        let rep = classifier.classify(&t).unwrap();
        let images: Vec<OVector> = (0..k)
            .map(|i| t.apply(&OVector::unit(n, i)).unwrap())
            .collect();
        let img = is_weak_associative(&Frame::new(images).unwrap(), &tol).holds;
        flag(rep.is_partial_isometry && rep.kernel_dim == 8 * (n - k) && img)
    });

    let ca = counterexample_a();
    let cb = counterexample_b();
    let cad = ca.dual().unwrap();
    let expected_a =
        OMatrix::new(vec![vec2(Octonion::ONE, -e(4)), vec2(e(4), Octonion::ONE)]).unwrap();
    let mut fixed_cases = vec![
        ca.matmul(&cad).unwrap().identity_residual(),
        cad.matmul(&ca).unwrap().max_abs_diff(&expected_a),
        gram_res(&cb),
        cb.apply(&vec2(e(4), e(7))).unwrap().max_abs(),
        second_associator_vec(e(4), &r1, &r2)
            .unwrap()
            .max_abs_diff(&(e(7) * -2.0)),
    ];
    for t in [&ca, &cb] {
        fixed_cases.push(flag(!classifier.classify(t).unwrap().is_isometry));
    }
    s.fixed("counterexample_invariants", 1e-12, fixed_cases);

    s.prop(
        "iso2_round_trip",
        1e-9,
        vec![classifier
            .iso2_decompose(&iso2_example())
            .map(|d| d.matrix().max_abs_diff(&iso2_example()))
            .unwrap_or(f64::INFINITY)],
        |r| {
            let p = sample::unit_octonion(r);
            let j = sample::unit_imaginary(r);
            let t = sample::cj_unitary(r, 2, j).left_scale(p);
            classifier
                .iso2_decompose(&t)
                .map(|d| d.matrix().max_abs_diff(&t))
                .unwrap_or(f64::INFINITY)
        },
    );

    s.prop(
        "stiefel_dimension_bounds",
        0.0,
        vec![flag(
            classifier
                .stiefel_oo_y_dim(&OVector::unit(3, 0))
                .unwrap()
                .dim_oo_y
                == 8,
        )],
        |r| {
            let y = sample::unit_vector(r, 3);
            let d = classifier.stiefel_oo_y_dim(&y).unwrap().dim_oo_y;
            let yr = sample::real_unit_vector(r, 3);
            let dr = classifier.stiefel_oo_y_dim(&yr).unwrap().dim_oo_y;
            flag((8..=24).contains(&d) && dr == 8)
        },
    );

    let all_passed = s.results.iter().all(|p| p.passed);
    Summary {
        seed: cfg.seed,
        trials: cfg.trials,
        properties: s.results,
        all_passed,
    }
}
