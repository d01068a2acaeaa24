use std::collections::BTreeMap;
use std::sync::OnceLock;

use exact_linalg::{SparseRationalMatrix, SparseVec};
use rep_lab::{enumerate_tuples, weight_blocks, Module, PowerKind};
use superalg_core::{LieSuperalgebra, Parity, Weight};

/// A cochain: normalized index tuple of algebra generators mapped to a
/// module vector. Missing tuples are zero.
pub type Cochain = BTreeMap<Vec<usize>, SparseVec>;

/// Basis data for one degree of the complex: the normalized super-exterior
/// tuples over the algebra basis, with their weights and gradings.
#[derive(Clone, Debug)]
pub struct CochainSpace {
    pub degree: usize,
    pub tuples: Vec<Vec<usize>>,
    pub tuple_index: BTreeMap<Vec<usize>, usize>,
    pub tuple_weight: Vec<Weight>,
    pub tuple_parity: Vec<Parity>,
    pub tuple_z: Vec<i64>,
    /// Total dimension: tuples x module dimension.
    pub dim: usize,
}

impl CochainSpace {
    fn new(algebra: &LieSuperalgebra, module_dim: usize, degree: usize) -> CochainSpace {
        let parity_of = |i: usize| algebra.parity(i);
        let tuples = enumerate_tuples(algebra.dim(), degree, parity_of, PowerKind::SuperExterior);
        let tuple_index = tuples.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let mut tuple_weight = Vec::with_capacity(tuples.len());
        let mut tuple_parity = Vec::with_capacity(tuples.len());
        let mut tuple_z = Vec::with_capacity(tuples.len());
        for t in &tuples {
            let mut w = Weight::zero(algebra.size());
            let mut p = Parity::Even;
            let mut z = 0i64;
            for &i in t {
                w = w.add(algebra.root_weight(i));
                p = p + algebra.parity(i);
                z += algebra.z_degree(i);
            }
            tuple_weight.push(w);
            tuple_parity.push(p);
            tuple_z.push(z);
        }
        let dim = tuples.len() * module_dim;
        CochainSpace { degree, tuples, tuple_index, tuple_weight, tuple_parity, tuple_z, dim }
    }

    pub fn tuple_count(&self) -> usize {
        self.tuples.len()
    }
}

/// The cochain complex `C^0 .. C^3` of an algebra with module coefficients.
pub struct CochainComplex {
    module: Module,
    spaces: Vec<CochainSpace>,
    deltas: [OnceLock<SparseRationalMatrix>; 3],
    module_blocks: BTreeMap<Weight, Vec<usize>>,
}

pub const MAX_DEGREE: usize = 3;

impl CochainComplex {
    pub fn new(module: Module) -> CochainComplex {
        let algebra = module.algebra().clone();
        let spaces = (0..=MAX_DEGREE)
            .map(|n| CochainSpace::new(&algebra, module.dim(), n))
            .collect();
        let module_blocks = weight_blocks(&module);
        CochainComplex {
            module,
            spaces,
            deltas: [OnceLock::new(), OnceLock::new(), OnceLock::new()],
            module_blocks,
        }
    }

    pub fn algebra(&self) -> &std::sync::Arc<LieSuperalgebra> {
        self.module.algebra()
    }

    pub fn module(&self) -> &Module {
        &self.module
    }

    pub fn space(&self, degree: usize) -> &CochainSpace {
        &self.spaces[degree]
    }

    pub fn module_block(&self, w: &Weight) -> &[usize] {
        self.module_blocks.get(w).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Flat index of a basis cochain within degree `n`.
    pub fn flat_index(&self, _n: usize, tuple_id: usize, vec_id: usize) -> usize {
        tuple_id * self.module.dim() + vec_id
    }

    /// Flattens a cochain into coordinates over the full degree-`n` basis.
    pub fn flatten(&self, n: usize, cochain: &Cochain) -> SparseVec {
        let mut entries = Vec::new();
        for (tuple, vec) in cochain {
            let t = self.spaces[n].tuple_index[tuple];
            for (v, c) in vec.iter() {
                entries.push((self.flat_index(n, t, *v), c.clone()));
            }
        }
        SparseVec::from_entries(entries)
    }

    /// Basis keys `(tuple_id, vec_id)` of the total-weight-zero block.
    pub fn zero_weight_keys(&self, n: usize) -> Vec<(usize, usize)> {
        let space = &self.spaces[n];
        let mut out = Vec::new();
        for (t, w) in space.tuple_weight.iter().enumerate() {
            if let Some(block) = self.module_blocks.get(w) {
                for &v in block {
                    out.push((t, v));
                }
            }
        }
        out
    }

    /// The assembled differential `C^n -> C^(n+1)` in flat coordinates,
    /// cached; on first assembly of a degree above zero the composite with
    /// the previous differential is checked to vanish.
    pub fn differential(&self, n: usize) -> &SparseRationalMatrix {
        assert!(n < MAX_DEGREE, "differential degree out of range");
        self.deltas[n].get_or_init(|| {
            let matrix = crate::differential::assemble_delta(self, n);
            if n > 0 {
                let prev = self.differential(n - 1);
                let composite = matrix.matmul(prev);
                assert!(
                    composite.is_zero(),
                    "delta^{} composed with delta^{} is nonzero",
                    n,
                    n - 1
                );
            }
            matrix
        })
    }
}
