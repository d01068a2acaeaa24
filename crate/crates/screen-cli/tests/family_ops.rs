//! Family patterns, the grading-element screens, and duality closure.

use screen_cli::*;
use std::sync::Arc;
use superalg_core::{AlgebraKind, LieSuperalgebra, Weight};

fn sl(m: usize, n: usize) -> Arc<LieSuperalgebra> {
    LieSuperalgebra::build(AlgebraKind::Sl, m, n).unwrap()
}

fn w(labels: &[i64]) -> Weight {
    Weight::from_ints(labels)
}

#[test]
fn family_membership_examples() {
    let alg = sl(3, 2);
    let rec = family_membership(&alg, &w(&[3, 1, 1, -1, -4])).unwrap();
    assert_eq!((rec.k, rec.p, rec.q), (1, 3, 1));
    let rec = family_membership(&alg, &w(&[0, 0, 0, 0, 0])).unwrap();
    assert_eq!((rec.k, rec.p, rec.q), (2, 0, 0));
    // The adjoint weight belongs to no family.
    assert!(family_membership(&alg, &w(&[1, 0, 0, 0, -1])).is_none());
    // Non-integral and non-balanced weights are rejected.
    assert!(family_membership(&alg, &w(&[1, 0, 0, 0, 0])).is_none());
}

#[test]
fn family_round_trip_in_window() {
    let alg = sl(3, 2);
    for k in 0..=2usize {
        for p in -6..=6i64 {
            for q in -6..=6i64 {
                if let Some(weight) = instantiate_family(&alg, k, p, q) {
                    let rec = family_membership(&alg, &weight)
                        .unwrap_or_else(|| panic!("family {k} ({p},{q}) lost"));
                    assert_eq!((rec.k, rec.p, rec.q), (k, p, q), "weight {weight}");
                }
            }
        }
    }
    let alg31 = sl(3, 1);
    for k in 0..=1usize {
        for p in 0..=6i64 {
            if let Some(weight) = instantiate_family(&alg31, k, p, 0) {
                let rec = family_membership(&alg31, &weight).unwrap();
                assert_eq!((rec.k, rec.p), (k, p));
            }
        }
    }
}

#[test]
fn lambda_of_d_examples() {
    let alg = sl(3, 2);
    assert_eq!(lambda_of_d(&alg, &w(&[1, 1, 1, -1, -2])).to_string(), "-3");
    assert_eq!(lambda_of_d(&alg, &w(&[0, 0, 0, 0, 0])).to_string(), "0");
    assert_eq!(lambda_of_d(&alg, &w(&[0, -1, -1, 1, 1])).to_string(), "2");
}

#[test]
fn d_ranges() {
    assert_eq!(d_range_of_u(&sl(3, 1)), (-3, 3));
    assert_eq!(d_range_of_u(&sl(3, 2)), (-6, 6));
    assert_eq!(d_range_of_u(&sl(2, 1)), (-2, 2));
}

#[test]
fn module_level_screen_excludes_q_two() {
    let alg = sl(3, 1);
    // Family (1) with q = 2: eigenvalues {2,3,4} exceed the range at 4.
    let weight = instantiate_family(&alg, 1, 2, 0).unwrap();
    let (pass, evals) = d_screen(&alg, &weight, (-3, 3), DScreenLevel::Module).unwrap();
    assert!(!pass);
    assert!(evals.iter().any(|x| x.to_string() == "4"));
    // q = 1 passes with eigenvalues {1,2,3}.
    let weight = instantiate_family(&alg, 1, 1, 0).unwrap();
    let (pass, evals) = d_screen(&alg, &weight, (-3, 3), DScreenLevel::Module).unwrap();
    assert!(pass);
    let strings: Vec<String> = evals.iter().map(|x| x.to_string()).collect();
    assert_eq!(strings, vec!["1", "2", "3"]);
}

#[test]
fn weight_only_screen_keeps_growing_family_one() {
    // For sl(3|2), the weight-level eigenvalue cut admits more and more
    // family-(1) weights as the window grows.
    let alg = sl(3, 2);
    let count = |window: i64| -> usize {
        let mut c = 0;
        for p in 1..=window {
            for q in -window..=1 {
                if let Some(weight) = instantiate_family(&alg, 1, p, q) {
                    let (pass, _) =
                        d_screen(&alg, &weight, (-6, 6), DScreenLevel::WeightOnly).unwrap();
                    if pass {
                        c += 1;
                    }
                }
            }
        }
        c
    };
    let at8 = count(8);
    let at12 = count(12);
    assert!(at8 > 13);
    assert!(at12 > at8, "window 8 gives {at8}, window 12 gives {at12}");
}

#[test]
fn dual_rows_and_closure() {
    let alg = sl(3, 2);
    // Row examples.
    assert_eq!(
        dual_partner(&alg, &w(&[3, 2, 2, -3, -4])).unwrap(),
        w(&[0, -1, -2, 2, 1])
    );
    assert_eq!(dual_partner(&alg, &w(&[0, 0, 0, 0, 0])).unwrap(), w(&[0, 0, 0, 0, 0]));
    assert_eq!(
        dual_partner(&alg, &w(&[1, 1, 1, -1, -2])).unwrap(),
        w(&[0, -1, -1, 1, 1])
    );
    // The closed forms are involutive across the window.
    for k in 0..=2usize {
        for p in -5..=5i64 {
            for q in -5..=5i64 {
                if let Some(weight) = instantiate_family(&alg, k, p, q) {
                    let partner = dual_partner(&alg, &weight).unwrap();
                    assert_eq!(
                        dual_partner(&alg, &partner).unwrap(),
                        weight,
                        "involution fails at family {k} ({p},{q})"
                    );
                }
            }
        }
    }

    // Filter: idempotent, and a singleton non-self-dual list empties.
    let pair = vec![w(&[1, 1, 1, -1, -2]), w(&[0, -1, -1, 1, 1])];
    let kept = dual_closure_filter(&alg, &pair);
    assert_eq!(kept.len(), 2);
    assert_eq!(dual_closure_filter(&alg, &kept), kept);
    let single = vec![w(&[1, 1, 1, -1, -2])];
    assert!(dual_closure_filter(&alg, &single).is_empty());
    let self_dual = vec![w(&[0, 0, 0, 0, 0])];
    assert_eq!(dual_closure_filter(&alg, &self_dual).len(), 1);
}

#[test]
fn kac_screen_spot_checks() {
    let alg = sl(3, 2);
    let table = L0ClassTable::new(&alg).unwrap();
    assert_eq!(table.constituents, 27);
    // The trivial weight shares a constituent.
    assert!(kac_common_constituent_screen(&table, &w(&[0, 0, 0, 0, 0])));
    // A candidate that survives the Kac screen but falls at the refined
    // stage still passes here.
    assert!(kac_common_constituent_screen(&table, &w(&[2, 1, -1, 1, -3])));
    // Far-outlying family-(1) weights fail outright.
    assert!(!kac_common_constituent_screen(&table, &w(&[7, 1, -6, 6, -8])));
}

#[test]
fn screen_rejects_bad_inputs() {
    let gl = LieSuperalgebra::build(AlgebraKind::Gl, 3, 2).unwrap();
    assert!(matches!(run_screen(&gl, 12), Err(ScreenError::NotSl)));
    assert!(matches!(
        run_screen(&sl(3, 2), 4),
        Err(ScreenError::WindowTooSmall(_))
    ));
}

#[test]
fn screen_stages_only_remove() {
    let alg = sl(3, 1);
    let report = run_screen(&alg, 8).unwrap();
    assert!(report.family_count >= report.d_surviving.len());
    for w in &report.refined {
        assert!(report.d_surviving.contains(w));
    }
    assert!(report.closed_under_duality);
    // Trivial + one contragredient pair = 2 duality orbits.
    assert_eq!(report.tau_orbit_count, 2);
}
