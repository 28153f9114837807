//! Twisted dynamical zeta functions and spectral invariants on hyperbolic-type data.
//!
//! The crate has three layers:
//!
//! * exact arithmetic for compact-group representation theory
//!   ([`repkit`]) and Plancherel polynomials ([`plancherel`]),
//! * numerical evaluation of the five twisted zeta functions from
//!   length-spectrum data ([`geodata`], [`zetafun`]),
//! * a non-self-adjoint spectral calculus on finite operator spectra
//!   ([`spectra`]): Agmon angles, eta functions, xi functions,
//!   regularized and graded determinants, and analytic torsions.
//!
//! The [`harness`] module ties the layers together: it realizes each zeta
//! function through its determinant representation on jointly generated
//! synthetic spectra and verifies the functional equations numerically,
//! emitting machine-readable reports.

pub mod geodata;
pub mod harness;
pub mod plancherel;
pub mod rat;
pub mod repkit;
pub mod spectra;
pub mod zetafun;

pub use num::complex::Complex64;
