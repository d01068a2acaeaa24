//! The detour through gl(m|1): invariant bilinear maps into the monomial
//! realization, the cocycle relation, and the extension identification
//! between invariant cocycles on sl(m|1) and on gl(m|1).

use ce_cohomology::*;
use exact_linalg::{rat, SparseVec};
use num_traits::Zero;
use rep_lab::*;
use std::sync::Arc;
use superalg_core::{AlgebraKind, AlgebraPart, LieSuperalgebra, Parity};

fn gl(m: usize) -> Arc<LieSuperalgebra> {
    LieSuperalgebra::build(AlgebraKind::Gl, m, 1).unwrap()
}

fn sl(m: usize) -> Arc<LieSuperalgebra> {
    LieSuperalgebra::build(AlgebraKind::Sl, m, 1).unwrap()
}

fn complexes(m: usize) -> (CochainComplex, CochainComplex) {
    let g = gl(m);
    let l = sl(m);
    let v = realization_module(&g, m).unwrap();
    let v_l = restrict_to_sl(&v, &l);
    (CochainComplex::new(v_l), CochainComplex::new(v))
}

fn opts(method: Method) -> CohomologyOptions {
    CohomologyOptions { method, ..Default::default() }
}

#[test]
fn invariant_bilinear_maps_span_dimension_three() {
    for m in [2usize, 3] {
        let (_, gc) = complexes(m);
        let inv = invariant_basis(&gc, 2);
        assert_eq!(inv.len(), 3, "m = {m}");
        let triple = invariant_pair_triple(&gc, m).unwrap();
        // The three constructed maps are independent and lie in the span.
        let mut keys: std::collections::BTreeMap<(Vec<usize>, usize), usize> = Default::default();
        let mut flat = |f: &Cochain| -> SparseVec {
            SparseVec::from_entries(f.iter().flat_map(|(t, val)| {
                val.iter()
                    .map(|(v, c)| {
                        let next = keys.len();
                        (*keys.entry((t.clone(), *v)).or_insert(next), c.clone())
                    })
                    .collect::<Vec<_>>()
            }))
        };
        let mut span = exact_linalg::RrefBuilder::new();
        for f in &inv {
            span.insert(flat(f));
        }
        let mut count = 0;
        for g in &triple {
            let fg = flat(g);
            assert!(span.reduce(fg.clone()).is_zero(), "triple member outside the invariant span");
            let mut enlarged = exact_linalg::RrefBuilder::new();
            for prev in triple.iter().take(count) {
                enlarged.insert(flat(prev));
            }
            assert!(!enlarged.reduce(fg).is_zero() || count == 0);
            count += 1;
        }
    }
}

#[test]
fn sample_values_of_the_triple() {
    // g2(E_11, E_31) = eta_1 for m = 2, and g1(E_ij, E_{m+1,k}) = d_ik eta_j.
    let m = 2;
    let (_, gc) = complexes(m);
    let g_alg = gc.algebra().clone();
    let [g1, g2, _g3] = invariant_pair_triple(&gc, m).unwrap();
    let e11 = g_alg.cartan_index(0);
    let e31 = g_alg.index_of_position(3, 1).unwrap();
    let v = eval_cochain(&gc, &g2, &[e11, e31]);
    // eta_1 = +theta_2 basis vector: degree-1 layer with first label -1.
    let module = gc.module();
    let eta1_idx = (0..module.dim())
        .find(|&i| module.z_degree(i) == 1 && module.weight(i).get(0) == &rat(-1))
        .unwrap();
    assert_eq!(v, SparseVec::unit(eta1_idx));

    let e12 = g_alg.index_of_position(1, 2).unwrap();
    let e32 = g_alg.index_of_position(3, 2).unwrap();
    // g1(E_12, E_31) = d_13? no: g1(E_ij, E_{m+1,k}) = d_ik eta_j: (i,j,k)=(1,2,1):
    // g1(E_12, E_31) = eta_2.
    let eta2_idx = (0..module.dim())
        .find(|&i| module.z_degree(i) == 1 && module.weight(i).get(1) == &rat(-1))
        .unwrap();
    let v1 = eval_cochain(&gc, &g1, &[e12, e31]);
    assert_eq!(v1, SparseVec::unit(eta2_idx).scale(&rat(-1)));
    // and g1(E_12, E_32) = 0 since i=1 != k=2.
    assert!(eval_cochain(&gc, &g1, &[e12, e32]).is_zero());
}

#[test]
fn cocycle_relation_is_a_plus_b() {
    for m in [2usize, 3] {
        let (_, gc) = complexes(m);
        let triple = invariant_pair_triple(&gc, m).unwrap();
        let kernel = cocycle_relation(&gc, &triple);
        // Solution space: a1 = 0, a2 + a3 = 0.
        assert_eq!(kernel.len(), 1, "m = {m}");
        let combo = &kernel[0];
        assert!(combo[0].is_zero());
        assert_eq!(combo[1], -combo[2].clone());
        assert!(!combo[1].is_zero());
    }
}

#[test]
fn delta_evaluation_identity_on_odd_triples() {
    // delta^2(a g2 + b g3)(E_{k,m+1}, E_{m+1,i}, E_{m+1,j})
    //   = -(a+b)(d_ki eta_j + d_kj eta_i).
    let m = 2;
    let (_, gc) = complexes(m);
    let g_alg = gc.algebra().clone();
    let module = gc.module();
    let [_, g2, g3] = invariant_pair_triple(&gc, m).unwrap();
    let eta = |k: usize| -> SparseVec {
        let idx = (0..module.dim())
            .find(|&i| module.z_degree(i) == 1 && module.weight(i).get(k - 1) == &rat(-1))
            .unwrap();
        let sign = if (k - 1) % 2 == 0 { 1 } else { -1 };
        SparseVec::unit(idx).scale(&rat(sign))
    };
    let d2 = delta_apply(&gc, 2, &g2);
    let d3 = delta_apply(&gc, 2, &g3);
    for k in 1..=m {
        for i in 1..=m {
            for j in 1..=m {
                let tuple = [
                    g_alg.index_of_position(k, m + 1).unwrap(),
                    g_alg.index_of_position(m + 1, i).unwrap(),
                    g_alg.index_of_position(m + 1, j).unwrap(),
                ];
                let mut expected = SparseVec::new();
                if k == i {
                    expected = expected.add(&eta(j));
                }
                if k == j {
                    expected = expected.add(&eta(i));
                }
                expected = expected.scale(&rat(-1));
                // (a,b) = (1,0) and (0,1) each give -(1)(..).
                assert_eq!(eval_cochain(&gc, &d2, &tuple), expected, "g2 at {k},{i},{j}");
                assert_eq!(eval_cochain(&gc, &d3, &tuple), expected, "g3 at {k},{i},{j}");
            }
        }
    }
}

#[test]
fn special_case_identity_for_invariant_cochains() {
    // For an invariant g vanishing on (degree 0) x (degree 0):
    // (delta^2 g)(A, B, C) = g(<A,B>, C) for A, B of degree zero.
    let m = 2;
    let (_, gc) = complexes(m);
    let g_alg = gc.algebra().clone();
    let [g1, g2, g3] = invariant_pair_triple(&gc, m).unwrap();
    let evens = g_alg.part_indices(AlgebraPart::Even);
    for g in [&g1, &g2, &g3] {
        // These maps vanish on pairs of even generators... of degree zero:
        for &a in &evens {
            for &b in &evens {
                assert!(eval_cochain(&gc, g, &[a, b]).is_zero());
            }
        }
        let dg = delta_apply(&gc, 2, g);
        for &a in &evens {
            for &b in &evens {
                for c in 0..g_alg.dim() {
                    let lhs = eval_cochain(&gc, &dg, &[a, b, c]);
                    // g(<a,b>, c)
                    let mut rhs = SparseVec::new();
                    for (k, coef) in g_alg.bracket_basis(a, b).iter() {
                        rhs = rhs.add_scaled(&eval_cochain(&gc, g, &[*k, c]), coef);
                    }
                    assert_eq!(lhs, rhs, "at ({a},{b},{c})");
                }
            }
        }
    }
}

#[test]
fn extension_theorem_holds() {
    for m in [2usize] {
        let (lc, gc) = complexes(m);
        assert!(check_extension_theorem(&lc, &gc).unwrap(), "m = {m}");
        // Extension of the zero cochain is zero.
        let zero = extend_to_gl(&lc, &gc, &Cochain::new()).unwrap();
        assert!(zero.is_empty());
    }
}

#[test]
fn g2_minus_g3_restricts_to_zero_and_is_not_a_coboundary() {
    for m in [2usize, 3] {
        let (lc, gc) = complexes(m);
        let [_, g2, g3] = invariant_pair_triple(&gc, m).unwrap();
        let mut g = Cochain::new();
        for (t, v) in &g2 {
            g.insert(t.clone(), v.clone());
        }
        for (t, v) in &g3 {
            let slot = g.entry(t.clone()).or_default();
            *slot = slot.add_scaled(v, &rat(-1));
        }
        g.retain(|_, v| !v.is_zero());

        // g is a cocycle on gl.
        assert!(delta_apply(&gc, 2, &g).is_empty());
        // g(A, E_{m+1,k}) = Str(A) eta_k for every basis element A.
        let g_alg = gc.algebra().clone();
        let module = gc.module();
        let eta = |k: usize| -> SparseVec {
            let idx = (0..module.dim())
                .find(|&i| module.z_degree(i) == 1 && module.weight(i).get(k - 1) == &rat(-1))
                .unwrap();
            let sign = if (k - 1) % 2 == 0 { 1 } else { -1 };
            SparseVec::unit(idx).scale(&rat(sign))
        };
        for a in 0..g_alg.dim() {
            for k in 1..=m {
                let lower = g_alg.index_of_position(m + 1, k).unwrap();
                let got = eval_cochain(&gc, &g, &[a, lower]);
                let expected = eta(k).scale(&g_alg.supertrace_vector()[a].clone());
                assert_eq!(got, expected, "A = {a}, k = {k}");
            }
        }
        // Its restriction to sl x sl vanishes identically.
        let restricted = restrict_to_l(&gc, &lc, &g);
        assert!(restricted.is_empty(), "m = {m}");
        // And it is not a coboundary: dim H^2(gl(m|1), V) = 1.
        let witness = is_coboundary(&gc, 2, &g, &opts(Method::Brute)).unwrap();
        assert!(witness.is_none(), "m = {m}");
    }
}

#[test]
fn headline_h2_values() {
    for m in [2usize, 3] {
        let (lc, gc) = complexes(m);
        let r_gl = cohomology(&gc, 2, &opts(Method::Invariant)).unwrap();
        assert_eq!(r_gl.h_dim, 1, "gl, m = {m}");
        assert!(!r_gl.representatives[0].is_coboundary);
        let r_sl = cohomology(&lc, 2, &opts(Method::Invariant)).unwrap();
        assert_eq!(r_sl.h_dim, 0, "sl, m = {m}");
    }
    // Brute-force cross-check at m = 2.
    let (lc, gc) = complexes(2);
    assert_eq!(cohomology(&gc, 2, &opts(Method::Both)).unwrap().h_dim, 1);
    assert_eq!(cohomology(&lc, 2, &opts(Method::Both)).unwrap().h_dim, 0);
}

#[test]
fn parity_check_on_invariant_basis() {
    // All three invariant maps take odd pairs to the module, consistently
    // with the super-skew symmetry on mixed pairs.
    let (_, gc) = complexes(2);
    let inv = invariant_basis(&gc, 2);
    for f in &inv {
        for tuple in f.keys() {
            let p0 = gc.algebra().parity(tuple[0]);
            let p1 = gc.algebra().parity(tuple[1]);
            assert_eq!(p0 + p1, Parity::Odd);
        }
    }
}
