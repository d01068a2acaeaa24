//! Construction-level checks: every module built here passes the exhaustive
//! representation-property test, and the landmark dimensions, weights and
//! gradings come out as expected.

use exact_linalg::{rat, SparseVec};
use rep_lab::*;
use std::sync::Arc;
use superalg_core::{AlgebraKind, AlgebraPart, LieSuperalgebra, Parity, Weight};

fn sl(m: usize, n: usize) -> Arc<LieSuperalgebra> {
    LieSuperalgebra::build(AlgebraKind::Sl, m, n).unwrap()
}

fn gl(m: usize, n: usize) -> Arc<LieSuperalgebra> {
    LieSuperalgebra::build(AlgebraKind::Gl, m, n).unwrap()
}

fn weight_multiset(module: &Module) -> Vec<Weight> {
    let mut v = module.weights().to_vec();
    v.sort();
    v
}

#[test]
fn trivial_and_adjoint() {
    let alg = sl(3, 2);
    let t = trivial_module(&alg);
    assert_eq!(t.dim(), 1);
    assert!(t.actions().iter().all(|a| a.is_zero()));
    t.check_representation().unwrap();

    let ad = adjoint_module(&alg);
    assert_eq!(ad.dim(), 24);
    ad.check_representation().unwrap();
    // Highest weight of the adjoint module.
    let sing = singular_vectors(&ad, AlgebraPart::Full);
    assert_eq!(sing.len(), 1);
    assert_eq!(sing[0].0, Weight::from_ints(&[1, 0, 0, 0, -1]));
}

#[test]
fn natural_modules() {
    let alg = sl(3, 2);
    let nat = natural_module(&alg, NaturalVariant::Standard).unwrap();
    nat.check_representation().unwrap();
    let sing = singular_vectors(&nat, AlgebraPart::Full);
    assert_eq!(sing.len(), 1);
    assert_eq!(sing[0].0, Weight::from_ints(&[0, -1, -1, 1, 1]));

    // Matrix-unit action: E_12 sends the second basis vector to the first.
    let g = gl(3, 1);
    let gnat = natural_module(&g, NaturalVariant::Standard).unwrap();
    gnat.check_representation().unwrap();
    let e12 = g.index_of_position(1, 2).unwrap();
    assert_eq!(*gnat.action(e12).col(1), SparseVec::unit(0));

    // Reparitized variant for n = 1: one even vector, m odd vectors.
    let shifted = natural_module(&g, NaturalVariant::OddShifted).unwrap();
    shifted.check_representation().unwrap();
    let evens = shifted.parities().iter().filter(|p| **p == Parity::Even).count();
    assert_eq!((evens, shifted.dim() - evens), (1, 3));
    assert!(natural_module(&sl(3, 2), NaturalVariant::OddShifted).is_err());

    // The weight (0,-1|1) occurs exactly once in the natural module of sl(2|1).
    let nat21 = natural_module(&sl(2, 1), NaturalVariant::Standard).unwrap();
    let target = Weight::from_ints(&[0, -1, 1]);
    assert_eq!(nat21.weights().iter().filter(|w| **w == target).count(), 1);
}

#[test]
fn duals_and_twists() {
    let alg = sl(3, 2);
    let nat = natural_module(&alg, NaturalVariant::Standard).unwrap();
    let dual = dual_module(&nat);
    dual.check_representation().unwrap();
    let sing = singular_vectors(&dual, AlgebraPart::Full);
    assert_eq!(sing[0].0, Weight::from_ints(&[1, 1, 1, -1, -2]));

    // Bidual has the same weight multiset.
    assert_eq!(weight_multiset(&dual_module(&dual)), weight_multiset(&nat));

    // tau-twist and dual have equal weight multisets.
    let small = natural_module(&sl(2, 1), NaturalVariant::Standard).unwrap();
    let tw = tau_twist(&small);
    tw.check_representation().unwrap();
    assert_eq!(weight_multiset(&tw), weight_multiset(&dual_module(&small)));

    // Grading shifts are pure metadata.
    let shifted = shift_grading(&nat, 5);
    assert_eq!(shifted.z_degree(0), nat.z_degree(0) + 5);
    assert_eq!(shifted.action(0), nat.action(0));
    let flipped = parity_flip(&nat);
    assert_eq!(flipped.parity(0), nat.parity(0).flip());
}

#[test]
fn tensor_and_powers() {
    let alg = sl(2, 1);
    let ad = adjoint_module(&alg);
    let nat = natural_module(&alg, NaturalVariant::Standard).unwrap();
    let t = tensor(&ad, &nat);
    assert_eq!(t.dim(), 24);
    t.check_representation().unwrap();

    let e2 = ext_power_eps(&ad, 2);
    assert_eq!(e2.dim(), 32); // C(4,2) + 16 + C(5,2)
    e2.check_representation().unwrap();
    let s2 = sym_power_eps(&ad, 2);
    assert_eq!(s2.dim(), 32);
    s2.check_representation().unwrap();

    // Super-symmetric square of the reparitized vector module of gl(3|1):
    // total degree 2 in one even and three odd variables.
    let g = gl(3, 1);
    let w = natural_module(&g, NaturalVariant::OddShifted).unwrap();
    let s = sym_power_eps(&w, 2);
    assert_eq!(s.dim(), 7); // 2^3 - 1
    s.check_representation().unwrap();
}

#[test]
fn sl32_exterior_square_dimension() {
    let alg = sl(3, 2);
    let ad = adjoint_module(&alg);
    let e2 = ext_power_eps(&ad, 2);
    assert_eq!(e2.dim(), 288); // C(12,2) + 144 + C(13,2)
    let s2 = sym_power_eps(&ad, 2);
    assert_eq!(s2.dim(), 288);
}

#[test]
fn realization_model() {
    let g = gl(3, 1);
    let v = realization_module(&g, 3).unwrap();
    assert_eq!(v.dim(), 7);
    v.check_representation().unwrap();

    // Eigenvalues of the grading element: 1,1,1,2,2,2,3.
    let evals: Vec<String> = v.d_eigenvalues().iter().map(|x| x.to_string()).collect();
    assert_eq!(evals, vec!["1", "1", "1", "2", "2", "2", "3"]);

    // The identity of gl(3|1) acts as zero.
    let identity = SparseVec::from_entries((0..4).map(|k| (g.cartan_index(k), rat(1))));
    for j in 0..v.dim() {
        assert!(v.apply_element(&identity, &SparseVec::unit(j)).is_zero());
    }

    // rho(E_ij) eta_k = -delta_ik eta_j on the top exterior layer.
    // eta_k corresponds to z^0 theta_{{1..m} minus k} with sign (-1)^(k-1).
    let m = 3usize;
    let eta = |k: usize| -> SparseVec {
        let set: u32 = ((1u32 << m) - 1) & !(1 << (k - 1));
        let idx = (0..v.dim())
            .find(|&i| {
                v.z_degree(i) == 1
                    && v.weight(i).labels()[k - 1] == rat(-1)
                    && (0..m).all(|t| {
                        let lab = &v.weight(i).labels()[t];
                        if t == k - 1 { *lab == rat(-1) } else { *lab == rat(0) }
                    })
            })
            .unwrap();
        let _ = set;
        let sign = if (k - 1) % 2 == 0 { 1 } else { -1 };
        SparseVec::unit(idx).scale(&rat(sign))
    };
    for i in 1..=m {
        for j in 1..=m {
            let e = g.index_of_position(i, j).or_else(|| {
                // diagonal: E_ii
                if i == j { Some(g.cartan_index(i - 1)) } else { None }
            });
            if i == j {
                continue;
            }
            let e = e.unwrap();
            for k in 1..=m {
                let got = v.action(e).apply(&eta(k));
                let expected = if i == k { eta(j).scale(&rat(-1)) } else { SparseVec::new() };
                assert_eq!(got, expected, "rho(E_{i}{j}) eta_{k}");
            }
        }
    }

    // Three even-part singular lines, one per graded layer.
    let sl_side = restrict_to_sl(&v, &sl(3, 1));
    sl_side.check_representation().unwrap();
    let sing = singular_vectors(&sl_side, AlgebraPart::Even);
    assert_eq!(sing.iter().map(|(_, v)| v.len()).sum::<usize>(), 3);
    // The full singular vector sits at weight -eps_3 + eps_4 = (0,0,-1|1).
    let full_sing = singular_vectors(&sl_side, AlgebraPart::Full);
    assert_eq!(full_sing.len(), 1);
    assert_eq!(full_sing[0].0, Weight::from_ints(&[0, 0, -1, 1]));
}

#[test]
fn d_eigenvalue_metadata() {
    let alg = sl(3, 2);
    let t = trivial_module(&alg);
    assert_eq!(t.d_eigenvalues(), vec![rat(0)]);
    // Grading shift offsets are constant per module.
    let nat = natural_module(&alg, NaturalVariant::Standard).unwrap();
    assert!(nat.grading_shift().is_some());
    let ad = adjoint_module(&alg);
    assert_eq!(ad.grading_shift().unwrap(), rat(0));
}
