//! Exact operator calculus for the reflection-extended superintegrable
//! system on the three-sphere.
//!
//! The crate is layered bottom-up:
//!
//! - [`exact_core`]: rationals, the parameter ring `Q[mu1..mu4]` and sparse
//!   Laurent polynomials in `s1..s4`.
//! - [`operator_engine`]: operator trees, normal ordering, commutators and
//!   reduction modulo the sphere ideal.
//! - [`realizations`]: factories for every named operator (Dunkl
//!   realizations of osp(1|2), Casimirs, conserved quantities, Hamiltonian).
//! - [`algebra_verifier`]: the identity suite and its report.
//! - [`spectral`]: the Cauchy-Kovalevskaia eigenbasis at fixed rational
//!   parameters, Jacobi closed forms and exact orthogonality.
//! - [`cli`]: the command-line front end.

pub mod algebra_verifier;
pub mod cli;
pub mod error;
pub mod exact_core;
pub mod operator_engine;
pub mod realizations;
pub mod spectral;

pub use error::{Error, Result};
