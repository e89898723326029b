//! Finite Clifford groups for arbitrary signature `(p, q)` and the
//! representation type of their spinor irreps.
//!
//! The group `Γ = {±γ_A}` generated by the gamma matrices (and its even part
//! `Γ₀`) is handled exactly as signed generator bitmasks. On top of that the
//! crate solves Burnside's relation for the spinor irreps and computes their
//! Frobenius–Schur type three ways: by summing square signs over the group, by
//! a mod-8 lookup on `p - q`, and through traces of explicit Gaussian-integer
//! gamma matrices.
//!
//! ```
//! use clifftype::{fs_indicator_brute, fs_indicator_closed, GroupKind, RepType, Signature};
//!
//! let minkowski = Signature::new(3, 1).unwrap();
//! assert_eq!(fs_indicator_brute(minkowski, GroupKind::Pin).unwrap(), RepType::Real);
//! assert_eq!(fs_indicator_closed(3, 1, GroupKind::Spin), RepType::Complex);
//! ```

pub mod clifford;
pub mod error;
pub mod group;
pub mod matrix;
pub mod rep;
pub mod scalar;
pub mod verify;

pub use clifford::{GroupKind, Sign, Signature, SignedMonomial, DEFAULT_N_MAX, HARD_N_MAX};
pub use error::{Error, Result};
pub use group::{ConjugacyClassReport, FiniteGroup};
pub use matrix::{GammaRep, GaussianMatrix};
pub use rep::{
    burnside_spinor_solve, fs_indicator_brute, fs_indicator_closed, type_table, RepType,
    SpinorIrrepInfo, TypeTable,
};
pub use scalar::ExactScalar;

/// Gaussian integer with `i64` components.
pub type GaussianInt = num_complex::Complex<i64>;
pub type GaussianMatrixI32 = GaussianMatrix<i32>;
pub type GaussianMatrixI64 = GaussianMatrix<i64>;
pub type GammaRepI64 = GammaRep<i64>;
