//! Explicit eigenbasis at fixed rational parameters.
//!
//! Everything here works on the gauge-transformed side: eigenfunctions of
//! the Hamiltonian are `ψ̃ · Π|s_i|^{mu_i}` and only the polynomial part
//! `ψ̃` is stored. Inner products absorb the gauge factor into the weight
//! `Π|s_i|^{2 mu_i}`.

mod basis;
mod ck;
mod closed_form;
mod context;
mod eigen;
mod fischer;
mod gamma;
mod gram;
mod identities;
mod jacobi;
pub mod linalg;
mod moments;
mod normalization;

pub use basis::{build_basis, labels, nested_ck, KernelBasisElement};
pub use ck::{ck_extend, ck_level};
pub use closed_form::{closed_form_element, ClosedForm};
pub use context::SpectralContext;
pub use eigen::{check_eigen, check_hamiltonian_on_sphere, Eigenvalues};
pub use fischer::{fischer_dims, fischer_reassembly_rank, kernel_dim_by_rank};
pub use gamma::GammaTable;
pub use gram::{gram, gram_matrix, inner_product};
pub use identities::apply_op_identities;
pub use jacobi::{jacobi, jacobi_homogeneous};
pub use moments::{monomial_moment, sphere_moment};
pub use normalization::{base_integral, eta_product, normalization_check, NormalizationResult};
