//! Chevalley-Eilenberg cohomology for the special/general linear Lie
//! superalgebras with coefficients in a finite-dimensional module.
//!
//! Cochains live on super-exterior powers of the algebra (even generators
//! alternate, odd generators repeat), degrees 0 through 3; the differential
//! is assembled against normalized index tuples. Cohomology in degrees 0-2
//! can be computed by brute force on the full complex or on the invariant
//! subcomplex of the reductive degree-zero part, which restricts to the
//! total-weight-zero block first and is dramatically smaller. Both routes
//! return the same dimensions; the test suite checks them against each
//! other wherever brute force is feasible.

mod cochain;
mod cohomology;
mod differential;
mod extension;
mod invariant;

pub use cochain::{Cochain, CochainComplex, CochainSpace};
pub use cohomology::{
    cohomology, is_coboundary, CohomologyError, CohomologyOptions, CohomologyReport, Method,
    Representative,
};
pub use differential::{delta_apply, eval_cochain};
pub use extension::{
    cocycle_relation, extend_to_gl, invariant_pair_triple, restrict_to_l, trace_form_cochain,
    check_extension_theorem,
};
pub use invariant::invariant_basis;
