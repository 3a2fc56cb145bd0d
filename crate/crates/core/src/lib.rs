//! Invariants of `U(g)/U(g)g0` and left integrals on Lie supergroups.
//!
//! Given a finite-dimensional Lie superalgebra by exact rational structure
//! constants, this crate
//!
//! * normalizes elements of the enveloping algebra in PBW form ([`enveloping`]),
//! * builds the Frobenius homomorphism `π: U(g) → U(g0)`, the triangular
//!   matrix `A` over `U(g0)`, its right inverse, a dual free pair and the
//!   invariant `z` of `U/Ug0` ([`frobenius`]),
//! * evaluates the resulting left integral on matrix elements of graded
//!   modules and cross-checks `z` against a direct linear solve ([`repr`]).

pub mod algebra;
pub mod cli;
pub mod enveloping;
pub mod error;
pub mod frobenius;
pub mod io;
pub mod linalg;
pub mod repr;
pub mod scalar;

pub use algebra::{EvenPartReport, LieSuperalgebra, Parity, ValidationReport, Violation};
pub use enveloping::{
    act_on_quotient, Monomial, OddFirstForm, QuotientClass, TermOrder, UEElement,
};
pub use error::{Error, Result};
pub use frobenius::{
    dual_pair, form, frobenius_pi, invariant_z, pi_parity, FrobeniusMatrix, InvariantZ,
    OddSubsetOrder,
};
pub use linalg::Matrix;
pub use repr::{
    brute_force_quotient_invariants, check_right_integral, check_semisimple_over_even,
    integral_matrix, invariant_projector, validate_module, GradedModule, IntegralMatrix,
    SemisimpleReport,
};
pub use scalar::Scalar;
