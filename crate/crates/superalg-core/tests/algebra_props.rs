//! Structural checks: bracket tables, gradings, the supertranspose
//! automorphism, and the defining identities, exhaustively at these sizes.

use exact_linalg::{rat, SparseVec};
use num_traits::Zero;
use superalg_core::{AlgebraKind, AlgebraPart, LieSuperalgebra, Parity, Weight};

fn sl(m: usize, n: usize) -> std::sync::Arc<LieSuperalgebra> {
    LieSuperalgebra::build(AlgebraKind::Sl, m, n).unwrap()
}

fn gl(m: usize, n: usize) -> std::sync::Arc<LieSuperalgebra> {
    LieSuperalgebra::build(AlgebraKind::Gl, m, n).unwrap()
}

fn check_consistency(alg: &LieSuperalgebra) {
    let dim = alg.dim();
    // Super-antisymmetry.
    for i in 0..dim {
        for j in 0..dim {
            let sign = if alg.parity(i).is_odd() && alg.parity(j).is_odd() {
                rat(1)
            } else {
                rat(-1)
            };
            assert_eq!(
                *alg.bracket_basis(i, j),
                alg.bracket_basis(j, i).scale(&sign),
                "antisymmetry fails at ({i},{j}) in {}",
                alg.descriptor()
            );
        }
    }
    // Parity and Z-degree additivity.
    for i in 0..dim {
        for j in 0..dim {
            for (k, _) in alg.bracket_basis(i, j).iter() {
                assert_eq!(alg.parity(*k), alg.parity(i) + alg.parity(j));
                assert_eq!(alg.z_degree(*k), alg.z_degree(i) + alg.z_degree(j));
            }
        }
    }
    // Super Jacobi identity on every basis triple.
    for x in 0..dim {
        for y in 0..dim {
            for z in 0..dim {
                let lhs = {
                    let yz = alg.bracket_basis(y, z).clone();
                    alg.bracket_vec(&SparseVec::unit(x), &yz)
                };
                let xy_z = alg.bracket_vec(&alg.bracket_basis(x, y).clone(), &SparseVec::unit(z));
                let y_xz = alg.bracket_vec(&SparseVec::unit(y), &alg.bracket_basis(x, z).clone());
                let sign = if alg.parity(x).is_odd() && alg.parity(y).is_odd() {
                    rat(-1)
                } else {
                    rat(1)
                };
                let rhs = xy_z.add_scaled(&y_xz, &sign);
                assert_eq!(lhs, rhs, "Jacobi fails at ({x},{y},{z}) in {}", alg.descriptor());
            }
        }
    }
    // The grading element reproduces z-degrees.
    if let Some(d) = alg.d_vector() {
        for i in 0..dim {
            let bracket = alg.bracket_vec(d, &SparseVec::unit(i));
            let expected = SparseVec::unit(i).scale(&rat(alg.z_degree(i)));
            assert_eq!(bracket, expected, "grading fails at {i} in {}", alg.descriptor());
        }
    }
}

#[test]
fn consistency_small_algebras() {
    for alg in [sl(2, 1), gl(2, 1), sl(3, 1)] {
        check_consistency(&alg);
        check_consistency(&alg.even_subalgebra());
    }
}

#[test]
fn consistency_sl32() {
    let alg = sl(3, 2);
    check_consistency(&alg);
    check_consistency(&alg.even_subalgebra());
}

#[test]
fn dimensions_and_errors() {
    assert_eq!(sl(2, 1).dim(), 8);
    assert_eq!(sl(3, 2).dim(), 24);
    assert_eq!(gl(3, 2).dim(), 25);
    assert_eq!(gl(4, 1).dim(), 25);
    assert!(LieSuperalgebra::build(AlgebraKind::Sl, 2, 2).is_err());
    assert!(LieSuperalgebra::build(AlgebraKind::Sl, 0, 1).is_err());
    assert!(LieSuperalgebra::build(AlgebraKind::Gl, 1, 0).is_err());
}

#[test]
fn bracket_examples_sl21() {
    let alg = sl(2, 1);
    // <X_13, X_31> = X_11 + X_33 (odd pair, anticommutator) = h_1 + h_2.
    let x13 = alg.index_of_position(1, 3).unwrap();
    let x31 = alg.index_of_position(3, 1).unwrap();
    let b = alg.bracket_basis(x13, x31);
    let h1 = alg.cartan_index(0);
    let h2 = alg.cartan_index(1);
    let expected = SparseVec::from_entries([(h1, rat(1)), (h2, rat(1))]);
    assert_eq!(*b, expected);

    // <X_12, X_21> = X_11 - X_22 = h_1.
    let x12 = alg.index_of_position(1, 2).unwrap();
    let x21 = alg.index_of_position(2, 1).unwrap();
    assert_eq!(*alg.bracket_basis(x12, x21), SparseVec::unit(h1));

    // parity(<X_13, X_23>) is even.
    let x23 = alg.index_of_position(2, 3).unwrap();
    for (k, _) in alg.bracket_basis(x13, x23).iter() {
        assert_eq!(alg.parity(*k), Parity::Even);
    }

    // <D, D> = 0.
    let d = alg.d_vector().unwrap();
    assert!(alg.bracket_vec(d, d).is_zero());
}

#[test]
fn z_degrees_follow_blocks() {
    for m in [2usize, 3, 4] {
        let alg = sl(m, 1);
        for i in 1..=m {
            let lower = alg.index_of_position(m + 1, i).unwrap();
            let upper = alg.index_of_position(i, m + 1).unwrap();
            assert_eq!(alg.z_degree(lower), 1);
            assert_eq!(alg.z_degree(upper), -1);
        }
    }
}

#[test]
fn epsilon_labels_and_relation() {
    let alg = sl(2, 1);
    assert_eq!(alg.epsilon(1).unwrap(), Weight::from_ints(&[0, -1, 1]));
    for i in 1..=3 {
        assert!(alg.epsilon(i).unwrap().sum().is_zero());
    }
    assert!(alg.check_eps_relation().unwrap());
    assert!(sl(3, 2).check_eps_relation().unwrap());
    assert!(sl(3, 1).check_eps_relation().unwrap());
    assert!(alg.epsilon(4).is_err());
    assert!(gl(2, 1).check_eps_relation().is_err());
}

#[test]
fn tau_is_an_automorphism() {
    for alg in [sl(2, 1), gl(2, 1), sl(3, 2)] {
        let dim = alg.dim();
        let tau: Vec<SparseVec> = (0..dim).map(|i| alg.tau_vec(&SparseVec::unit(i))).collect();
        for i in 0..dim {
            for j in 0..dim {
                let lhs = alg.tau_vec(alg.bracket_basis(i, j));
                let rhs = alg.bracket_vec(&tau[i], &tau[j]);
                assert_eq!(lhs, rhs, "tau automorphism fails at ({i},{j}) in {}", alg.descriptor());
            }
            // tau negates the Z-degree and fixes parity.
            for (k, _) in tau[i].iter() {
                assert_eq!(alg.z_degree(*k), -alg.z_degree(i));
                assert_eq!(alg.parity(*k), alg.parity(i));
            }
        }
        // tau fixes the Cartan up to sign.
        for pos in 0..alg.cartan_indices().len() {
            let idx = alg.cartan_index(pos);
            assert_eq!(tau[idx], SparseVec::unit(idx).scale(&rat(-1)));
        }
        // Restricted to the even part, tau is an involution.
        for i in 0..dim {
            if alg.parity(i) == Parity::Even {
                let twice = alg.tau_vec(&tau[i]);
                assert_eq!(twice, SparseVec::unit(i));
            }
        }
    }
}

#[test]
fn supertrace_and_trace_form() {
    let g = gl(3, 1);
    // Str(I) = m - n.
    let identity = g.element_from(SparseVec::from_entries(
        (0..4).map(|k| (g.cartan_index(k), rat(1))),
    ));
    assert_eq!(g.supertrace(&identity), rat(2));

    let alg = sl(2, 1);
    // Super-skew-symmetry of the trace form on the basis.
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let sign = if alg.parity(i).is_odd() && alg.parity(j).is_odd() {
                rat(1)
            } else {
                rat(-1)
            };
            assert_eq!(alg.trace_form_basis(i, j), alg.trace_form_basis(j, i) * sign);
        }
    }
    // Tr(<X_12, X_21>) = Tr(X_11 - X_22) = 0.
    let x12 = alg.element(alg.index_of_position(1, 2).unwrap());
    let x21 = alg.element(alg.index_of_position(2, 1).unwrap());
    assert!(alg.trace_form(&x12, &x21).is_zero());
}

#[test]
fn even_subalgebra_shape() {
    let alg = sl(3, 2);
    let l0 = alg.even_subalgebra();
    assert_eq!(l0.dim(), 12);
    assert_eq!(alg.positive_root_indices(AlgebraPart::Full).len(), 10);
    assert_eq!(alg.positive_root_indices(AlgebraPart::Even).len(), 4);
    assert_eq!(l0.parent_indices().unwrap().len(), 12);

    // The grading element lies in the even part and is central there.
    for m in [2usize, 3] {
        let a = sl(m, 1);
        let l0 = a.even_subalgebra();
        let d = l0.d_vector().expect("grading element exists");
        for i in 0..l0.dim() {
            assert!(l0.bracket_vec(d, &SparseVec::unit(i)).is_zero());
        }
    }
}

#[test]
fn d_equals_last_cartan_generator_for_n_one() {
    for m in [2usize, 3, 4] {
        let alg = sl(m, 1);
        let d = alg.d_vector().unwrap();
        // X_{m+1,m+1} = E_{m+1,m+1} + I/(m-1): compare matrices.
        let d_mat = alg.vec_to_matrix(d);
        let mut expected = superalg_core::Mat::unit(m + 1, m, m);
        let scale = exact_linalg::ratio(1, m as i64 - 1);
        expected = expected.add(&superalg_core::Mat::identity(m + 1).scale(&scale));
        assert_eq!(d_mat, expected);
    }
}

#[test]
fn weight_reconstruction_round_trip() {
    let alg = sl(3, 2);
    for w in [
        Weight::from_ints(&[1, 0, 0, 0, -1]),
        Weight::from_ints(&[2, 1, -1, 1, -3]),
        Weight::from_ints(&[0, 0, 0, 0, 0]),
    ] {
        let evals: Vec<_> = (0..alg.cartan_indices().len())
            .map(|pos| alg.cartan_eigenvalue(pos, &w))
            .collect();
        let back = alg.weight_from_cartan_eigenvalues(&evals).unwrap();
        assert_eq!(back, w);
    }
}
