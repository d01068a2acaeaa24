use std::sync::Arc;

use exact_linalg::{rat, Rational};
use rep_lab::simple_module;
use serde::Serialize;
use superalg_core::{AlgebraKind, LieSuperalgebra, Weight};

/// A closed-form family of maximally atypical dominant integral weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyRecord {
    pub algebra: String,
    pub k: usize,
    pub p: i64,
    pub q: i64,
}

fn get_i64(w: &Weight, i: usize) -> Option<i64> {
    let v = w.get(i);
    if v.is_integer() {
        v.to_integer().try_into().ok()
    } else {
        None
    }
}

/// Instantiates family `k` with parameters `(p, q)`.
///
/// For sl(m|1): family 0 is `(p,1,..,1 | -p-(m-1))` with `p >= 1`, family 1
/// is `(0,..,0,-q | q)` with `q >= 0` (the parameter `q` is stored in `p`
/// for uniformity of the record when only one parameter exists).
/// For sl(3|2): family 0 is `(p,q,2 | -q-1,-p-1)` with `p >= q >= 2`,
/// family 1 is `(p,1,q | -q,-p-1)` with `p >= 1 >= q`, family 2 is
/// `(0,p,q | -q,-p)` with `0 >= p >= q`.
pub fn instantiate_family(alg: &Arc<LieSuperalgebra>, k: usize, p: i64, q: i64) -> Option<Weight> {
    assert_eq!(alg.kind(), AlgebraKind::Sl);
    let m = alg.m() as i64;
    let n = alg.n() as i64;
    if n == 1 {
        match k {
            0 => {
                if p < 1 {
                    return None;
                }
                let mut labels = vec![1i64; m as usize];
                labels[0] = p;
                labels.push(-p - (m - 1));
                Some(Weight::from_ints(&labels))
            }
            1 => {
                if p < 0 {
                    return None;
                }
                let mut labels = vec![0i64; m as usize];
                labels[m as usize - 1] = -p;
                labels.push(p);
                Some(Weight::from_ints(&labels))
            }
            _ => None,
        }
    } else if (m, n) == (3, 2) {
        match k {
            0 if p >= q && q >= 2 => Some(Weight::from_ints(&[p, q, 2, -q - 1, -p - 1])),
            1 if p >= 1 && q <= 1 => Some(Weight::from_ints(&[p, 1, q, -q, -p - 1])),
            2 if p <= 0 && q <= p => Some(Weight::from_ints(&[0, p, q, -q, -p])),
            _ => None,
        }
    } else {
        None
    }
}

/// Pattern-matches the closed-form families.
pub fn family_membership(alg: &Arc<LieSuperalgebra>, w: &Weight) -> Option<FamilyRecord> {
    if !w.is_integral() || !w.sum().is_integer() || w.sum() != Rational::from_integer(0.into()) {
        return None;
    }
    let m = alg.m();
    let n = alg.n();
    let record = |k: usize, p: i64, q: i64| FamilyRecord {
        algebra: alg.descriptor().to_string(),
        k,
        p,
        q,
    };
    if n == 1 {
        // Family 0: (p,1,...,1 | -p-(m-1)), p >= 1.
        let p = get_i64(w, 0)?;
        if p >= 1
            && (1..m).all(|i| get_i64(w, i) == Some(1))
            && get_i64(w, m) == Some(-p - (m as i64 - 1))
        {
            return Some(record(0, p, 0));
        }
        // Family 1: (0,...,0,-q | q), q >= 0.
        let q = get_i64(w, m)?;
        if q >= 0
            && (0..m - 1).all(|i| get_i64(w, i) == Some(0))
            && get_i64(w, m - 1) == Some(-q)
        {
            return Some(record(1, q, 0));
        }
        return None;
    }
    if (m, n) == (3, 2) {
        let l: Vec<i64> = (0..5).filter_map(|i| get_i64(w, i)).collect();
        if l.len() != 5 {
            return None;
        }
        if l[2] == 2 && l[0] >= l[1] && l[1] >= 2 && l[3] == -l[1] - 1 && l[4] == -l[0] - 1 {
            return Some(record(0, l[0], l[1]));
        }
        if l[1] == 1 && l[0] >= 1 && l[2] <= 1 && l[3] == -l[2] && l[4] == -l[0] - 1 {
            return Some(record(1, l[0], l[2]));
        }
        if l[0] == 0 && l[1] <= 0 && l[2] <= l[1] && l[3] == -l[2] && l[4] == -l[1] {
            return Some(record(2, l[1], l[2]));
        }
        return None;
    }
    None
}

/// Value of a weight on the grading element.
pub fn lambda_of_d(alg: &LieSuperalgebra, w: &Weight) -> Rational {
    w.d_eigenvalue(alg.m())
}

/// Eigenvalue range of the grading element on the enveloping algebra:
/// the odd generators each occur at most once, so the degrees span
/// `[-dim L_{-1}, +dim L_{+1}]`.
pub fn d_range_of_u(alg: &LieSuperalgebra) -> (i64, i64) {
    let down = (0..alg.dim()).filter(|&i| alg.z_degree(i) == -1).count() as i64;
    let up = (0..alg.dim()).filter(|&i| alg.z_degree(i) == 1).count() as i64;
    (-down, up)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DScreenLevel {
    /// Only the highest weight's eigenvalue is tested.
    WeightOnly,
    /// The whole eigenvalue multiset of the simple module is tested.
    Module,
}

/// Whether the weight survives the eigenvalue-range cut, together with the
/// witnessing eigenvalues.
pub fn d_screen(
    alg: &Arc<LieSuperalgebra>,
    w: &Weight,
    range: (i64, i64),
    level: DScreenLevel,
) -> Result<(bool, Vec<Rational>), rep_lab::ModuleError> {
    let in_range = |x: &Rational| *x >= rat(range.0) && *x <= rat(range.1);
    match level {
        DScreenLevel::WeightOnly => {
            let v = lambda_of_d(alg, w);
            Ok((in_range(&v), vec![v]))
        }
        DScreenLevel::Module => {
            let module = simple_module(alg, w)?;
            let mut evals = module.d_eigenvalues();
            evals.dedup();
            let ok = evals.iter().all(in_range);
            Ok((ok, evals))
        }
    }
}

/// Closed-form highest weight of the dual module, for family weights.
pub fn dual_partner(alg: &Arc<LieSuperalgebra>, w: &Weight) -> Option<Weight> {
    let rec = family_membership(alg, w)?;
    if alg.n() == 1 {
        // Families 0 and 1 with matching parameter are dual; trivial is
        // self-dual.
        return match (rec.k, rec.p) {
            (_, 0) if rec.k == 1 => Some(w.clone()),
            (0, p) => instantiate_family(alg, 1, p, 0),
            (1, q) => instantiate_family(alg, 0, q, 0),
            _ => None,
        };
    }
    let (p, q) = (rec.p, rec.q);
    match rec.k {
        0 if p > q => Some(Weight::from_ints(&[0, 1 - q, 1 - p, p - 1, q - 1])),
        0 => Some(Weight::from_ints(&[0, -p, -p, p, p])),
        1 if q < 1 => Some(Weight::from_ints(&[1 - q, 1, 1 - p, p - 1, q - 2])),
        1 if p >= 2 => Some(Weight::from_ints(&[0, 0, 1 - p, p - 1, 0])),
        1 => Some(Weight::from_ints(&[0, -1, -1, 1, 1])),
        2 => {
            // Invert the forward rows.
            if p == 0 && q == 0 {
                Some(w.clone())
            } else if p == 0 && q <= -1 {
                Some(Weight::from_ints(&[1 - q, 1, 1, -1, q - 2]))
            } else if p == q && p == -1 {
                Some(Weight::from_ints(&[1, 1, 1, -1, -2]))
            } else if p == q {
                Some(Weight::from_ints(&[-p, -p, 2, p - 1, p - 1]))
            } else {
                // 0 > p > q: partner (1-q, 1-p, 2 | p-2, q-2).
                Some(Weight::from_ints(&[1 - q, 1 - p, 2, p - 2, q - 2]))
            }
        }
        _ => None,
    }
}

/// Removes every weight whose dual partner is missing, iterating to a
/// fixpoint (the result is closed under duality, and the filter is
/// idempotent).
pub fn dual_closure_filter(alg: &Arc<LieSuperalgebra>, weights: &[Weight]) -> Vec<Weight> {
    let mut surviving: Vec<Weight> = weights.to_vec();
    loop {
        let before = surviving.len();
        surviving = surviving
            .iter()
            .filter(|w| {
                dual_partner(alg, w)
                    .map(|d| surviving.contains(&d))
                    .unwrap_or(false)
            })
            .cloned()
            .collect();
        if surviving.len() == before {
            return surviving;
        }
    }
}
