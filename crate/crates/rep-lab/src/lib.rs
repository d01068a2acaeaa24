//! Finite-dimensional graded modules over the special/general linear Lie
//! superalgebras: explicit exact-rational action matrices with per-vector
//! weight, parity and Z-degree, plus the machinery to dissect them
//! (weight spaces, singular vectors, invariant subspaces, quotients,
//! highest-weight and Kac modules, socle/radical analysis, composition
//! factors).
//!
//! Everything is purely functional: a constructed module is immutable and
//! can be shared freely across threads.

mod action;
mod analysis;
mod freudenthal;
mod highest;
mod koszul;
mod module;
mod powers;
mod realization;
mod slk;
mod structure;

pub use action::ActionMatrix;
pub use analysis::{
    action_span, cyclic_submodule, invariants, largest_invariant_subspace, quotient_module,
    singular_vectors, submodule_module, weight_decomposition,
};
pub use freudenthal::sl_weight_multiplicities;
pub use highest::{dual_highest_weight, kac_dual_module, kac_module, simple_l0_module, simple_module};
pub use koszul::{enumerate_tuples, normalize_tuple, PowerKind};
pub use module::{
    adjoint_module, dual_module, natural_module, parity_flip, restrict_to_even, restrict_to_sl,
    shift_grading, tau_twist, trivial_module, weight_blocks, Module, ModuleError, NaturalVariant,
};
pub use powers::{ext_power_eps, sym_power_eps, tensor};
pub use realization::realization_module;
pub use slk::weyl_dim;
pub use structure::{
    analyze_w_structure, composition_factors, decompose_l0, FiltrationReport, L0Class,
};
