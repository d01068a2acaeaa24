use std::sync::Arc;

use exact_linalg::{rat, Rational, SparseRationalMatrix, SparseVec};
use num_traits::Zero;
use superalg_core::{AlgebraKind, LieSuperalgebra};

use crate::cochain::{Cochain, CochainComplex};
use crate::cohomology::CohomologyError;
use crate::differential::{delta_apply, eval_cochain};
use crate::invariant::{invariant_basis, verify_invariant};

/// Projection of each gl basis element onto the traceless part, expressed
/// in the sl basis (the identity component is dropped).
fn sl_projections(gl: &Arc<LieSuperalgebra>, sl: &Arc<LieSuperalgebra>) -> Vec<SparseVec> {
    let size = gl.size();
    let str_i = rat(gl.m() as i64 - gl.n() as i64);
    (0..gl.dim())
        .map(|e| {
            let mat = gl.matrix(e);
            let c = mat.supertrace(|i| gl.matrix_parity_of_row(i)) / str_i.clone();
            let mut traceless = mat.clone();
            for k in 0..size {
                traceless.data[k][k] = &traceless.data[k][k] - &c;
            }
            sl.matrix_to_vec(&traceless)
                .expect("traceless part lies in sl")
        })
        .collect()
}

/// Extends a 2-cochain on sl(m|1) (with values in a gl-module on which the
/// identity acts as zero) to gl(m|1) by declaring the identity direction
/// null: the extension agrees with `f` on sl x sl and vanishes when either
/// argument is the identity.
pub fn extend_to_gl(
    sl_complex: &CochainComplex,
    gl_complex: &CochainComplex,
    f: &Cochain,
) -> Result<Cochain, CohomologyError> {
    let sl = sl_complex.algebra().clone();
    let gl = gl_complex.algebra().clone();
    assert_eq!(sl.kind(), AlgebraKind::Sl);
    assert_eq!(gl.kind(), AlgebraKind::Gl);
    // The identity must act as zero on the coefficients.
    let module = gl_complex.module();
    let identity = SparseVec::from_entries(
        (0..gl.size()).map(|k| (gl.cartan_index(k), exact_linalg::Rational::from_integer(1.into()))),
    );
    for j in 0..module.dim() {
        if !module.apply_element(&identity, &SparseVec::unit(j)).is_zero() {
            return Err(CohomologyError::Inconsistent(
                "the identity does not act as zero on the coefficient module".into(),
            ));
        }
    }

    let proj = sl_projections(&gl, &sl);
    let mut out = Cochain::new();
    for pair in gl_complex.space(2).tuples.iter() {
        let (a, b) = (pair[0], pair[1]);
        let mut val = SparseVec::new();
        for (i, ci) in proj[a].iter() {
            for (j, cj) in proj[b].iter() {
                let v = eval_cochain(sl_complex, f, &[*i, *j]);
                if !v.is_zero() {
                    val = val.add_scaled(&v, &(ci * cj));
                }
            }
        }
        if !val.is_zero() {
            out.insert(pair.clone(), val);
        }
    }
    Ok(out)
}

/// Restriction of a gl 2-cochain to sl x sl.
pub fn restrict_to_l(
    gl_complex: &CochainComplex,
    sl_complex: &CochainComplex,
    f: &Cochain,
) -> Cochain {
    let sl = sl_complex.algebra().clone();
    let gl = gl_complex.algebra().clone();
    let embed: Vec<SparseVec> = (0..sl.dim())
        .map(|e| gl.matrix_to_vec(sl.matrix(e)).expect("sl embeds into gl"))
        .collect();
    let mut out = Cochain::new();
    for pair in sl_complex.space(2).tuples.iter() {
        let (a, b) = (pair[0], pair[1]);
        let mut val = SparseVec::new();
        for (i, ci) in embed[a].iter() {
            for (j, cj) in embed[b].iter() {
                let v = eval_cochain(gl_complex, f, &[*i, *j]);
                if !v.is_zero() {
                    val = val.add_scaled(&v, &(ci * cj));
                }
            }
        }
        if !val.is_zero() {
            out.insert(pair.clone(), val);
        }
    }
    out
}

/// The three independent invariant super-skew bilinear maps of gl(m|1) into
/// the monomial realization module, supported on (even) x (odd lowering)
/// pairs and on the (last diagonal) x (odd lowering) pairs.
pub fn invariant_pair_triple(
    gl_complex: &CochainComplex,
    m: usize,
) -> Result<[Cochain; 3], CohomologyError> {
    let gl = gl_complex.algebra().clone();
    let module = gl_complex.module();
    // eta_k: the top-exterior-layer vector missing theta_k, with sign.
    let eta = |k: usize| -> SparseVec {
        let idx = (0..module.dim())
            .find(|&i| {
                module.z_degree(i) == 1
                    && (1..=m).all(|t| {
                        let lab = module.weight(i).get(t - 1);
                        if t == k { lab == &rat(-1) } else { lab.is_zero() }
                    })
            })
            .expect("eta_k exists in the realization");
        let sign = if (k - 1) % 2 == 0 { 1 } else { -1 };
        SparseVec::unit(idx).scale(&rat(sign))
    };

    let set = |cochain: &mut Cochain, x: usize, y: usize, value: SparseVec| {
        // Store the value at the normalized tuple for the ordered pair (x,y).
        let (tuple, sign) = rep_lab::normalize_tuple(&[x, y], |i| gl.parity(i), rep_lab::PowerKind::SuperExterior)
            .expect("mixed pairs never vanish");
        let slot = cochain.entry(tuple).or_default();
        *slot = slot.add(&value.scale(&rat(sign)));
    };

    let mut g1 = Cochain::new();
    let mut g2 = Cochain::new();
    let mut g3 = Cochain::new();
    for i in 1..=m {
        for j in 1..=m {
            let e_ij = if i == j {
                gl.cartan_index(i - 1)
            } else {
                gl.index_of_position(i, j).unwrap()
            };
            for k in 1..=m {
                let lower = gl.index_of_position(m + 1, k).unwrap();
                if i == k {
                    set(&mut g1, e_ij, lower, eta(j));
                }
                if i == j {
                    set(&mut g2, e_ij, lower, eta(k));
                }
            }
        }
    }
    for k in 1..=m {
        let lower = gl.index_of_position(m + 1, k).unwrap();
        let last = gl.cartan_index(m);
        set(&mut g3, last, lower, eta(k));
    }
    for g in [&g1, &g2, &g3] {
        if !verify_invariant(gl_complex, g) {
            return Err(CohomologyError::Inconsistent(
                "constructed bilinear map is not invariant".into(),
            ));
        }
    }
    Ok([g1, g2, g3])
}

/// Solves the cocycle condition inside the span of the three invariant
/// bilinear maps. Returns the coefficient-space kernel of
/// `delta^2 (a1 g1 + a2 g2 + a3 g3) = 0` as vectors `(a1, a2, a3)`.
pub fn cocycle_relation(
    gl_complex: &CochainComplex,
    triple: &[Cochain; 3],
) -> Vec<Vec<Rational>> {
    let images: Vec<Cochain> = triple.iter().map(|g| delta_apply(gl_complex, 2, g)).collect();
    let mut keys: std::collections::BTreeMap<(Vec<usize>, usize), usize> =
        std::collections::BTreeMap::new();
    let mut triplets: Vec<(usize, usize, Rational)> = Vec::new();
    for (col, img) in images.iter().enumerate() {
        for (tuple, val) in img {
            for (v, c) in val.iter() {
                let next = keys.len();
                let row = *keys.entry((tuple.clone(), *v)).or_insert(next);
                triplets.push((row, col, c.clone()));
            }
        }
    }
    let matrix = SparseRationalMatrix::from_triplets(keys.len(), 3, triplets);
    exact_linalg::kernel_basis(&matrix)
        .into_iter()
        .map(|combo| (0..3).map(|i| combo.get(i)).collect())
        .collect()
}

/// The bilinear form `(x, y) -> Tr(<x, y>)` as a 2-cochain valued in the
/// trivial module.
pub fn trace_form_cochain(complex: &CochainComplex) -> Cochain {
    let alg = complex.algebra().clone();
    assert_eq!(complex.module().dim(), 1);
    let mut out = Cochain::new();
    for pair in complex.space(2).tuples.iter() {
        let v = alg.trace_form_basis(pair[0], pair[1]);
        if !v.is_zero() {
            out.insert(pair.clone(), SparseVec::single(0, v));
        }
    }
    out
}

/// Verifies, on explicit bases, that extension and restriction identify the
/// invariant 2-cochains of sl(m|1) (values in the realization) with the
/// invariant 2-cochains of gl(m|1) vanishing on the identity, compatibly
/// with the cocycle condition in both directions.
pub fn check_extension_theorem(
    sl_complex: &CochainComplex,
    gl_complex: &CochainComplex,
) -> Result<bool, CohomologyError> {
    let inv_l = invariant_basis(sl_complex, 2);
    let inv_g = invariant_basis(gl_complex, 2);

    // 1. Extensions of invariant cochains are invariant.
    let extended: Vec<Cochain> = inv_l
        .iter()
        .map(|f| extend_to_gl(sl_complex, gl_complex, f))
        .collect::<Result<_, _>>()?;
    for g in &extended {
        if !verify_invariant(gl_complex, g) {
            return Ok(false);
        }
    }
    // 2. Restriction then extension is the identity on the sl side.
    for (f, g) in inv_l.iter().zip(&extended) {
        let back = restrict_to_l(gl_complex, sl_complex, g);
        if &back != f {
            return Ok(false);
        }
    }
    // 3. Restrictions of invariant gl cochains are invariant on the sl side.
    for g in &inv_g {
        let f = restrict_to_l(gl_complex, sl_complex, g);
        if !verify_invariant(sl_complex, &f) {
            return Ok(false);
        }
    }
    // 4. The cocycle conditions correspond: f is a cocycle iff its
    //    extension is. The bases mix cocycles and non-cocycles, so compare
    //    the kernels of both differentials as subspaces of the shared
    //    coordinate space of the invariant sl basis.
    let kernel_of = |complex: &CochainComplex, basis: &[Cochain]| -> SparseRationalMatrix {
        let images: Vec<Cochain> = basis.iter().map(|f| delta_apply(complex, 2, f)).collect();
        let mut local_keys: std::collections::BTreeMap<(Vec<usize>, usize), usize> =
            std::collections::BTreeMap::new();
        let mut triplets = Vec::new();
        for (col, img) in images.iter().enumerate() {
            for (tuple, val) in img {
                for (v, c) in val.iter() {
                    let next = local_keys.len();
                    let row = *local_keys.entry((tuple.clone(), *v)).or_insert(next);
                    triplets.push((row, col, c.clone()));
                }
            }
        }
        SparseRationalMatrix::from_triplets(local_keys.len(), basis.len(), triplets)
    };
    let k_l = exact_linalg::kernel_basis(&kernel_of(sl_complex, &inv_l));
    let k_g = exact_linalg::kernel_basis(&kernel_of(gl_complex, &extended));
    Ok(k_l == k_g)
}
