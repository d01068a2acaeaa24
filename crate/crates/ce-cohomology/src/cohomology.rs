use std::collections::BTreeMap;
use std::time::Instant;

use exact_linalg::{
    echelonize, solve, ElimOptions, Rational, RrefBuilder,
    SparseRationalMatrix, SparseVec,
};
use serde::Serialize;
use thiserror::Error;

use crate::cochain::{Cochain, CochainComplex};
use crate::differential::delta_apply;
use crate::invariant::{coadjoint_apply, invariant_basis};

#[derive(Debug, Error)]
pub enum CohomologyError {
    #[error("degree {0} out of range (0..=2)")]
    DegreeOutOfRange(usize),
    #[error("resource budget exceeded during {0}")]
    Budget(String),
    #[error("brute-force and invariant methods disagree: {0} vs {1}")]
    MethodMismatch(usize, usize),
    #[error("input is not a cocycle")]
    NotACocycle,
    #[error("{0}")]
    Inconsistent(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Invariant,
    Both,
}

impl std::str::FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> Result<Method, String> {
        match s {
            "brute" => Ok(Method::Brute),
            "invariant" => Ok(Method::Invariant),
            "both" => Ok(Method::Both),
            other => Err(format!("unknown method {other:?}")),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CohomologyOptions {
    pub method: Method,
    pub modular_prepass: bool,
    /// Wall-clock deadline; checked between elimination phases.
    pub deadline: Option<Instant>,
    /// Hard cap on the flat dimension of any assembled full complex.
    pub max_brute_dim: usize,
}

impl Default for CohomologyOptions {
    fn default() -> Self {
        CohomologyOptions {
            method: Method::Invariant,
            modular_prepass: true,
            deadline: None,
            max_brute_dim: 200_000,
        }
    }
}

/// A representative cocycle, reported as sparse coefficients.
#[derive(Clone, Debug, Serialize)]
pub struct Representative {
    /// (tuple of algebra basis indices, module basis index, coefficient).
    pub entries: Vec<(Vec<usize>, usize, String)>,
    pub is_coboundary: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CohomologyReport {
    pub algebra: String,
    pub module: String,
    pub degree: usize,
    pub method: Method,
    /// Dimensions of the cochain spaces actually used (degree n-1, n, n+1);
    /// for the invariant method these are the invariant dimensions.
    pub cochain_dims: Vec<usize>,
    pub rank_prev: usize,
    pub kernel_dim: usize,
    pub h_dim: usize,
    pub representatives: Vec<Representative>,
    pub elapsed_ms: u128,
    pub pivots: usize,
    pub notes: Vec<String>,
}

fn check_deadline(opts: &CohomologyOptions, what: &str) -> Result<(), CohomologyError> {
    if let Some(d) = opts.deadline {
        if Instant::now() > d {
            return Err(CohomologyError::Budget(what.to_string()));
        }
    }
    Ok(())
}

struct Computation {
    cochain_dims: Vec<usize>,
    rank_prev: usize,
    kernel_dim: usize,
    representatives: Vec<Cochain>,
    pivots: usize,
}

fn brute_computation(
    complex: &CochainComplex,
    n: usize,
    opts: &CohomologyOptions,
) -> Result<Computation, CohomologyError> {
    let dims = [
        if n == 0 { 0 } else { complex.space(n - 1).dim },
        complex.space(n).dim,
        complex.space(n + 1).dim,
    ];
    if dims.iter().any(|&d| d > opts.max_brute_dim) {
        return Err(CohomologyError::Budget(format!(
            "brute-force complex of dimensions {dims:?}"
        )));
    }
    let elim = ElimOptions { modular_prepass: opts.modular_prepass };
    let mut pivots = 0usize;

    check_deadline(opts, "assembling the differential")?;
    let delta_n = complex.differential(n);
    let ech = echelonize(delta_n, elim);
    pivots += ech.stats.pivots;
    let kernel = ech.kernel_vectors();
    let kernel_dim = kernel.len();

    let (rank_prev, image_cols): (usize, Vec<SparseVec>) = if n == 0 {
        (0, Vec::new())
    } else {
        check_deadline(opts, "rank of the previous differential")?;
        let prev = complex.differential(n - 1);
        let ech_prev = echelonize(prev, elim);
        pivots += ech_prev.stats.pivots;
        let cols: Vec<SparseVec> = (0..prev.cols())
            .map(|j| prev.apply(&SparseVec::unit(j)))
            .collect();
        (ech_prev.rank(), cols)
    };

    // Representatives: kernel vectors independent modulo the image.
    let mut image_span = RrefBuilder::new();
    for c in image_cols {
        image_span.insert(c);
    }
    let mut reps = Vec::new();
    let mut span = image_span.clone();
    for v in kernel {
        let residual = span.reduce(v);
        if !residual.is_zero() {
            span.insert(residual.clone());
            reps.push(unflatten(complex, n, &residual));
        }
    }
    Ok(Computation {
        cochain_dims: dims.to_vec(),
        rank_prev,
        kernel_dim,
        representatives: reps,
        pivots,
    })
}

fn unflatten(complex: &CochainComplex, n: usize, flat: &SparseVec) -> Cochain {
    let dim_v = complex.module().dim();
    let mut out = Cochain::new();
    for (idx, c) in flat.iter() {
        let tuple = complex.space(n).tuples[idx / dim_v].clone();
        let slot = out.entry(tuple).or_default();
        *slot = slot.add(&SparseVec::single(idx % dim_v, c.clone()));
    }
    out
}

/// Row-indexing for cochains in the target degree of a restricted map.
#[derive(Default)]
struct KeyIndex {
    map: BTreeMap<(Vec<usize>, usize), usize>,
}

impl KeyIndex {
    fn get(&mut self, tuple: &[usize], vec: usize) -> usize {
        let next = self.map.len();
        *self.map.entry((tuple.to_vec(), vec)).or_insert(next)
    }
}

fn cochains_to_matrix(cochains: &[Cochain], keys: &mut KeyIndex) -> SparseRationalMatrix {
    let mut triplets: Vec<(usize, usize, Rational)> = Vec::new();
    for (col, f) in cochains.iter().enumerate() {
        for (tuple, val) in f {
            for (v, c) in val.iter() {
                triplets.push((keys.get(tuple, *v), col, c.clone()));
            }
        }
    }
    SparseRationalMatrix::from_triplets(keys.map.len(), cochains.len(), triplets)
}

fn invariant_computation(
    complex: &CochainComplex,
    n: usize,
    opts: &CohomologyOptions,
) -> Result<Computation, CohomologyError> {
    let elim = ElimOptions { modular_prepass: opts.modular_prepass };
    let mut pivots = 0usize;

    check_deadline(opts, "invariant basis")?;
    let basis_n = invariant_basis(complex, n);
    let basis_prev = if n == 0 { Vec::new() } else { invariant_basis(complex, n - 1) };
    let dims = vec![basis_prev.len(), basis_n.len(), usize::MAX];

    check_deadline(opts, "restricted differentials")?;
    // delta on the degree-n invariant basis, into full degree-(n+1) keys.
    let images_n: Vec<Cochain> = basis_n.iter().map(|f| delta_apply(complex, n, f)).collect();
    // The restricted differential must land in the invariant subcomplex:
    // images are weight-zero by construction; verify the raising operators
    // kill them.
    for img in &images_n {
        for &e in complex
            .algebra()
            .simple_raising_indices(superalg_core::AlgebraPart::Even)
        {
            if !coadjoint_apply(complex, e, img).is_empty() {
                return Err(CohomologyError::Inconsistent(
                    "restricted differential leaves the invariant subcomplex".into(),
                ));
            }
        }
    }
    let mut keys_np1 = KeyIndex::default();
    let mat_n = cochains_to_matrix(&images_n, &mut keys_np1);
    let ech = echelonize(&mat_n, elim);
    pivots += ech.stats.pivots;
    let kernel_combos = ech.kernel_vectors();
    let kernel_dim = kernel_combos.len();

    let (rank_prev, image_cochains): (usize, Vec<Cochain>) = if n == 0 {
        (0, Vec::new())
    } else {
        check_deadline(opts, "previous restricted differential")?;
        let images: Vec<Cochain> =
            basis_prev.iter().map(|f| delta_apply(complex, n - 1, f)).collect();
        let mut keys_n = KeyIndex::default();
        let mat = cochains_to_matrix(&images, &mut keys_n);
        let ech_prev = echelonize(&mat, elim);
        pivots += ech_prev.stats.pivots;
        (ech_prev.rank(), images)
    };

    // Representatives: kernel combinations reduced modulo the image.
    let mut keys_n_all = KeyIndex::default();
    let image_flat: Vec<SparseVec> = image_cochains
        .iter()
        .map(|f| cochain_flat(f, &mut keys_n_all))
        .collect();
    let mut span = RrefBuilder::new();
    for v in image_flat {
        span.insert(v);
    }
    let mut reps = Vec::new();
    for combo in kernel_combos {
        let mut cochain = Cochain::new();
        for (pos, c) in combo.iter() {
            for (tuple, val) in &basis_n[*pos] {
                let slot = cochain.entry(tuple.clone()).or_default();
                *slot = slot.add(&val.scale(c));
            }
        }
        cochain.retain(|_, v| !v.is_zero());
        let flat = cochain_flat(&cochain, &mut keys_n_all);
        let residual = span.reduce(flat);
        if !residual.is_zero() {
            span.insert(residual);
            reps.push(cochain);
        }
    }

    Ok(Computation {
        cochain_dims: dims,
        rank_prev,
        kernel_dim,
        representatives: reps,
        pivots,
    })
}

fn cochain_flat(f: &Cochain, keys: &mut KeyIndex) -> SparseVec {
    let mut entries = Vec::new();
    for (tuple, val) in f {
        for (v, c) in val.iter() {
            entries.push((keys.get(tuple, *v), c.clone()));
        }
    }
    SparseVec::from_entries(entries)
}

/// Whether a cocycle is a coboundary; returns a witness when it is.
pub fn is_coboundary(
    complex: &CochainComplex,
    n: usize,
    cocycle: &Cochain,
    opts: &CohomologyOptions,
) -> Result<Option<Cochain>, CohomologyError> {
    if n == 0 {
        return if cocycle.is_empty() { Ok(Some(Cochain::new())) } else { Ok(None) };
    }
    // The input must be a cocycle.
    if !delta_apply(complex, n, cocycle).is_empty() {
        return Err(CohomologyError::NotACocycle);
    }
    if complex.space(n).dim <= opts.max_brute_dim
        && complex.space(n - 1).dim <= opts.max_brute_dim
    {
        let prev = complex.differential(n - 1);
        let target = complex.flatten(n, cocycle);
        match solve(prev, &target) {
            Some(witness_flat) => Ok(Some(unflatten(complex, n - 1, &witness_flat))),
            None => Ok(None),
        }
    } else {
        // Invariant route: an invariant cocycle is a coboundary iff it is
        // the image of an invariant cochain.
        let basis_prev = invariant_basis(complex, n - 1);
        let images: Vec<Cochain> =
            basis_prev.iter().map(|f| delta_apply(complex, n - 1, f)).collect();
        let mut keys = KeyIndex::default();
        let mat = cochains_to_matrix(&images, &mut keys);
        let target = cochain_flat(cocycle, &mut keys);
        if target.iter().any(|(i, _)| *i >= mat.rows()) {
            return Ok(None);
        }
        match solve(&mat, &target) {
            Some(combo) => {
                let mut witness = Cochain::new();
                for (pos, c) in combo.iter() {
                    for (tuple, val) in &basis_prev[*pos] {
                        let slot = witness.entry(tuple.clone()).or_default();
                        *slot = slot.add(&val.scale(c));
                    }
                }
                witness.retain(|_, v| !v.is_zero());
                Ok(Some(witness))
            }
            None => Ok(None),
        }
    }
}

/// Computes `H^n` (n = 0, 1, 2) with the chosen method and returns a full
/// report: dimensions, ranks, representatives with their coboundary status.
pub fn cohomology(
    complex: &CochainComplex,
    n: usize,
    opts: &CohomologyOptions,
) -> Result<CohomologyReport, CohomologyError> {
    if n > 2 {
        return Err(CohomologyError::DegreeOutOfRange(n));
    }
    let start = Instant::now();
    let mut notes = Vec::new();
    let comp = match opts.method {
        Method::Brute => brute_computation(complex, n, opts)?,
        Method::Invariant => invariant_computation(complex, n, opts)?,
        Method::Both => {
            let inv = invariant_computation(complex, n, opts)?;
            let brute = brute_computation(complex, n, opts)?;
            let h_inv = inv.kernel_dim - inv.rank_prev;
            let h_brute = brute.kernel_dim - brute.rank_prev;
            if h_inv != h_brute {
                return Err(CohomologyError::MethodMismatch(h_brute, h_inv));
            }
            notes.push(format!(
                "brute force agrees: kernel {} rank {}",
                brute.kernel_dim, brute.rank_prev
            ));
            inv
        }
    };
    let h_dim = comp.kernel_dim - comp.rank_prev;
    if comp.representatives.len() != h_dim {
        return Err(CohomologyError::Inconsistent(format!(
            "found {} independent representatives for h_dim {}",
            comp.representatives.len(),
            h_dim
        )));
    }
    let mut representatives = Vec::new();
    for rep in &comp.representatives {
        let witness = is_coboundary(complex, n, rep, opts)?;
        representatives.push(Representative {
            entries: rep
                .iter()
                .flat_map(|(tuple, val)| {
                    val.iter()
                        .map(|(v, c)| (tuple.clone(), *v, c.to_string()))
                        .collect::<Vec<_>>()
                })
                .collect(),
            is_coboundary: witness.is_some(),
        });
    }
    Ok(CohomologyReport {
        algebra: complex.algebra().descriptor().to_string(),
        module: complex.module().descriptor().to_string(),
        degree: n,
        method: opts.method,
        cochain_dims: comp
            .cochain_dims
            .into_iter()
            .map(|d| if d == usize::MAX { 0 } else { d })
            .collect(),
        rank_prev: comp.rank_prev,
        kernel_dim: comp.kernel_dim,
        h_dim,
        representatives,
        elapsed_ms: start.elapsed().as_millis(),
        pivots: comp.pivots,
        notes,
    })
}
