//! Screening pipeline for atypical highest weights, the verification
//! suites, and supporting CLI plumbing (descriptors, reports, module cache).
//!
//! The screen reproduces the candidate-hunting workflow for the second
//! cohomology with coefficients in simple subquotients of the enveloping
//! algebra: enumerate the closed weight families, cut by the eigenvalue
//! range of the grading element, cut by shared even-part constituents with
//! the super-exterior square of the adjoint module (at the Kac-module
//! level, computed combinatorially so the scan window can grow), close
//! under duality, and finally refine with the actual simple modules.

pub mod cache;
pub mod descriptor;
pub mod family;
pub mod kacscreen;
pub mod report;
pub mod screen;
pub mod verify;

pub use descriptor::{parse_algebra, parse_module, parse_weight, DescriptorError};
pub use family::{
    d_range_of_u, d_screen, dual_closure_filter, dual_partner, family_membership,
    instantiate_family, lambda_of_d, DScreenLevel, FamilyRecord,
};
pub use kacscreen::{kac_common_constituent_screen, kac_screen_materialized, L0ClassTable};
pub use report::{Bundle, CheckRecord, CheckStatus};
pub use screen::{run_screen, ScreenError, ScreenReport};
pub use verify::{run_suite, Suite, VerifyOptions};
