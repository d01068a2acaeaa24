use std::collections::BTreeMap;
use std::sync::Arc;

use exact_linalg::{rat, Rational, SparseVec};
use num_traits::Zero;
use superalg_core::{koszul_sign, AlgebraError, AlgebraKind, LieSuperalgebra, Parity, Weight};
use thiserror::Error;

use crate::action::ActionMatrix;

#[derive(Debug, Error)]
pub enum ModuleError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("graded natural module variant requires n = 1 (got n = {0})")]
    VariantNeedsNOne(usize),
    #[error("weight {0} is not dominant-integral per block")]
    NotDominant(String),
    #[error("subspace is not invariant under the action")]
    NotInvariant,
    #[error("{0}")]
    Inconsistent(String),
}

/// Grading convention for the natural (vector) module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NaturalVariant {
    /// Even block at degree 0, odd block at degree 1.
    Standard,
    /// For n = 1: the m-dimensional block is odd at degree -1 and the last
    /// basis vector is even at degree 0.
    OddShifted,
}

/// A finite-dimensional module: one exact sparse action matrix per algebra
/// basis element, with weight, parity and Z-degree per basis vector.
#[derive(Clone, Debug)]
pub struct Module {
    algebra: Arc<LieSuperalgebra>,
    dim: usize,
    parity: Vec<Parity>,
    z_degree: Vec<i64>,
    weights: Vec<Weight>,
    actions: Vec<ActionMatrix>,
    descriptor: String,
}

impl Module {
    pub fn new(
        algebra: Arc<LieSuperalgebra>,
        parity: Vec<Parity>,
        z_degree: Vec<i64>,
        weights: Vec<Weight>,
        actions: Vec<ActionMatrix>,
        descriptor: String,
    ) -> Module {
        let dim = parity.len();
        debug_assert_eq!(z_degree.len(), dim);
        debug_assert_eq!(weights.len(), dim);
        debug_assert_eq!(actions.len(), algebra.dim());
        Module { algebra, dim, parity, z_degree, weights, actions, descriptor }
    }

    pub fn algebra(&self) -> &Arc<LieSuperalgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parity[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parity
    }

    pub fn z_degree(&self, i: usize) -> i64 {
        self.z_degree[i]
    }

    pub fn z_degrees(&self) -> &[i64] {
        &self.z_degree
    }

    pub fn weight(&self, i: usize) -> &Weight {
        &self.weights[i]
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn action(&self, e: usize) -> &ActionMatrix {
        &self.actions[e]
    }

    pub fn actions(&self) -> &[ActionMatrix] {
        &self.actions
    }

    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    pub fn set_descriptor(&mut self, d: String) {
        self.descriptor = d;
    }

    /// Applies an algebra element given by basis coefficients.
    pub fn apply_element(&self, coeffs: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (e, c) in coeffs.iter() {
            acc = acc.add_scaled(&self.actions[*e].apply(v), c);
        }
        acc
    }

    /// Multiset of eigenvalues of the grading element, from the weights.
    pub fn d_eigenvalues(&self) -> Vec<Rational> {
        let mut out: Vec<Rational> = self
            .weights
            .iter()
            .map(|w| self.algebra.d_eigenvalue_of_weight(w))
            .collect();
        out.sort();
        out
    }

    /// Exhaustive check of the representation property, weight compatibility,
    /// and grading consistency. Quadratic in the algebra dimension; meant for
    /// tests and for small constructions.
    pub fn check_representation(&self) -> Result<(), ModuleError> {
        let alg = &self.algebra;
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let lhs = {
                    let mut acc = ActionMatrix::zero(self.dim);
                    for (k, c) in alg.bracket_basis(i, j).iter() {
                        acc = acc.add_scaled(&self.actions[*k], c);
                    }
                    acc
                };
                let sign = rat(koszul_sign(alg.parity(i), alg.parity(j)));
                let rhs = self.actions[i]
                    .compose(&self.actions[j])
                    .add_scaled(&self.actions[j].compose(&self.actions[i]), &-sign);
                if lhs != rhs {
                    return Err(ModuleError::Inconsistent(format!(
                        "representation property fails at basis pair ({i},{j}) of {}",
                        alg.descriptor()
                    )));
                }
            }
        }
        self.check_metadata()
    }

    /// Weight compatibility of every action plus diagonality of the Cartan.
    pub fn check_metadata(&self) -> Result<(), ModuleError> {
        let alg = &self.algebra;
        for e in 0..alg.dim() {
            let root = alg.root_weight(e);
            for j in 0..self.dim {
                for (i, _) in self.actions[e].col(j).iter() {
                    let expected = self.weights[j].add(root);
                    if self.weights[*i] != expected {
                        return Err(ModuleError::Inconsistent(format!(
                            "weight compatibility fails: action {e} on vector {j}"
                        )));
                    }
                    if self.parity[*i] != self.parity[j] + alg.parity(e) {
                        return Err(ModuleError::Inconsistent(format!(
                            "parity additivity fails: action {e} on vector {j}"
                        )));
                    }
                    if self.z_degree[*i] != self.z_degree[j] + alg.z_degree(e) {
                        return Err(ModuleError::Inconsistent(format!(
                            "degree additivity fails: action {e} on vector {j}"
                        )));
                    }
                }
            }
        }
        // Cartan acts diagonally with the recorded weights.
        for (pos, &idx) in alg.cartan_indices().iter().enumerate() {
            for j in 0..self.dim {
                let col = self.actions[idx].col(j);
                let expected =
                    SparseVec::unit(j).scale(&alg.cartan_eigenvalue(pos, &self.weights[j]));
                if *col != expected {
                    return Err(ModuleError::Inconsistent(format!(
                        "Cartan element {idx} is not diagonal with the stored weights at {j}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Offset between the recorded Z-degrees and the grading-element
    /// eigenvalues; `None` when the module grading is not a shift of the
    /// eigenvalue grading (or no grading element exists).
    pub fn grading_shift(&self) -> Option<Rational> {
        self.algebra.d_vector()?;
        let mut shift: Option<Rational> = None;
        for j in 0..self.dim {
            let eig = self.algebra.d_eigenvalue_of_weight(&self.weights[j]);
            let s = eig - rat(self.z_degree[j]);
            match &shift {
                None => shift = Some(s),
                Some(prev) if *prev == s => {}
                _ => return None,
            }
        }
        shift.or_else(|| Some(Rational::zero()))
    }
}

/// The one-dimensional module with zero action.
pub fn trivial_module(algebra: &Arc<LieSuperalgebra>) -> Module {
    Module::new(
        algebra.clone(),
        vec![Parity::Even],
        vec![0],
        vec![Weight::zero(algebra.size())],
        (0..algebra.dim()).map(|_| ActionMatrix::zero(1)).collect(),
        "trivial".into(),
    )
}

/// The adjoint module: actions are the structure constants.
pub fn adjoint_module(algebra: &Arc<LieSuperalgebra>) -> Module {
    let dim = algebra.dim();
    let actions = (0..dim)
        .map(|e| {
            ActionMatrix::from_cols(
                dim,
                (0..dim).map(|j| algebra.bracket_basis(e, j).clone()).collect(),
            )
        })
        .collect();
    let weights = (0..dim).map(|i| algebra.root_weight(i).clone()).collect();
    let parity = (0..dim).map(|i| algebra.parity(i)).collect();
    let z_degree = (0..dim).map(|i| algebra.z_degree(i)).collect();
    Module::new(algebra.clone(), parity, z_degree, weights, actions, "adjoint".into())
}

/// The defining (vector) module, with a choice of grading convention.
pub fn natural_module(
    algebra: &Arc<LieSuperalgebra>,
    variant: NaturalVariant,
) -> Result<Module, ModuleError> {
    let size = algebra.size();
    let m = algebra.m();
    let n = algebra.n();
    if variant == NaturalVariant::OddShifted && n != 1 {
        return Err(ModuleError::VariantNeedsNOne(n));
    }
    let actions = (0..algebra.dim())
        .map(|e| {
            let mat = algebra.matrix(e);
            let cols = (0..size)
                .map(|j| {
                    SparseVec::from_entries(
                        (0..size).filter_map(|i| {
                            let v = mat.data[i][j].clone();
                            if v.is_zero() {
                                None
                            } else {
                                Some((i, v))
                            }
                        }),
                    )
                })
                .collect();
            ActionMatrix::from_cols(size, cols)
        })
        .collect();
    let weights: Vec<Weight> = (1..=size).map(|i| algebra.epsilon(i).unwrap()).collect();
    let (parity, z_degree, tag): (Vec<Parity>, Vec<i64>, &str) = match variant {
        NaturalVariant::Standard => (
            (0..size).map(|i| if i < m { Parity::Even } else { Parity::Odd }).collect(),
            (0..size).map(|i| if i < m { 0 } else { 1 }).collect(),
            "natural",
        ),
        NaturalVariant::OddShifted => (
            (0..size).map(|i| if i < m { Parity::Odd } else { Parity::Even }).collect(),
            (0..size).map(|i| if i < m { -1 } else { 0 }).collect(),
            "natural:section3",
        ),
    };
    Ok(Module::new(algebra.clone(), parity, z_degree, weights, actions, tag.into()))
}

/// Contragredient module: `(x . f)(v) = -(-1)^(|x||f|) f(x . v)`.
pub fn dual_module(module: &Module) -> Module {
    let dim = module.dim();
    let alg = module.algebra().clone();
    let actions = (0..alg.dim())
        .map(|e| {
            let transposed = module.action(e).transpose();
            let cols = (0..dim)
                .map(|k| {
                    let sign = rat(-koszul_sign(alg.parity(e), module.parity(k)));
                    transposed.col(k).scale(&sign)
                })
                .collect();
            ActionMatrix::from_cols(dim, cols)
        })
        .collect();
    let weights = module.weights().iter().map(|w| w.neg()).collect();
    let z_degree = module.z_degrees().iter().map(|z| -z).collect();
    Module::new(
        alg,
        module.parities().to_vec(),
        z_degree,
        weights,
        actions,
        format!("dual({})", module.descriptor()),
    )
}

/// Precomposition of the action with the supertranspose automorphism.
pub fn tau_twist(module: &Module) -> Module {
    let alg = module.algebra().clone();
    let dim = module.dim();
    let actions: Vec<ActionMatrix> = (0..alg.dim())
        .map(|e| {
            let tau_e = alg.tau_vec(&SparseVec::unit(e));
            let mut acc = ActionMatrix::zero(dim);
            for (k, c) in tau_e.iter() {
                acc = acc.add_scaled(module.action(*k), c);
            }
            acc
        })
        .collect();
    let weights = module.weights().iter().map(|w| w.neg()).collect();
    let z_degree = module.z_degrees().iter().map(|z| -z).collect();
    Module::new(
        alg,
        module.parities().to_vec(),
        z_degree,
        weights,
        actions,
        format!("tau({})", module.descriptor()),
    )
}

/// Shifts the Z-degree metadata; the action is untouched.
pub fn shift_grading(module: &Module, r: i64) -> Module {
    let mut out = module.clone();
    for z in out.z_degree.iter_mut() {
        *z += r;
    }
    out.descriptor = format!("shift:{r}({})", module.descriptor());
    out
}

/// Flips the parity metadata; the action is untouched.
pub fn parity_flip(module: &Module) -> Module {
    let mut out = module.clone();
    for p in out.parity.iter_mut() {
        *p = p.flip();
    }
    out.descriptor = format!("pflip({})", module.descriptor());
    out
}

/// Restricts a gl(m|n)-module to sl(m|n).
pub fn restrict_to_sl(module: &Module, sl: &Arc<LieSuperalgebra>) -> Module {
    let gl = module.algebra();
    assert_eq!(gl.kind(), AlgebraKind::Gl);
    assert_eq!(sl.kind(), AlgebraKind::Sl);
    assert_eq!(gl.size(), sl.size());
    let dim = module.dim();
    let actions: Vec<ActionMatrix> = (0..sl.dim())
        .map(|e| {
            let gl_coeffs = gl
                .matrix_to_vec(sl.matrix(e))
                .expect("sl elements embed into gl");
            let mut acc = ActionMatrix::zero(dim);
            for (k, c) in gl_coeffs.iter() {
                acc = acc.add_scaled(module.action(*k), c);
            }
            acc
        })
        .collect();
    // Weight labels in the sl convention, from the coroot eigenvalues.
    let weights = (0..dim)
        .map(|j| {
            let evals: Vec<Rational> = (0..sl.cartan_indices().len())
                .map(|pos| {
                    let idx = sl.cartan_indices()[pos];
                    let col = actions[idx].col(j);
                    col.get(j)
                })
                .collect();
            sl.weight_from_cartan_eigenvalues(&evals)
                .expect("diagonal action determines the weight")
        })
        .collect();
    Module::new(
        sl.clone(),
        module.parities().to_vec(),
        module.z_degrees().to_vec(),
        weights,
        actions,
        format!("restrict[{}]({})", sl.descriptor(), module.descriptor()),
    )
}

/// Restricts to the Z-degree-zero subalgebra.
pub fn restrict_to_even(module: &Module) -> Module {
    let alg = module.algebra();
    let even = alg.even_subalgebra();
    let parent = even.parent_indices().unwrap().to_vec();
    let actions = parent.iter().map(|&k| module.action(k).clone()).collect();
    Module::new(
        even,
        module.parities().to_vec(),
        module.z_degrees().to_vec(),
        module.weights().to_vec(),
        actions,
        format!("even({})", module.descriptor()),
    )
}

/// Groups basis indices by weight.
pub fn weight_blocks(module: &Module) -> BTreeMap<Weight, Vec<usize>> {
    let mut map: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
    for (i, w) in module.weights().iter().enumerate() {
        map.entry(w.clone()).or_default().push(i);
    }
    map
}
