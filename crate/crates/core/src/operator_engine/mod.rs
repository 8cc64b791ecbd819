//! Operators built from multiplication by Laurent monomials, partial
//! derivatives and reflections, together with their canonical
//! normal-ordered form and reduction modulo the sphere ideal.

mod expr;
mod normal;
pub mod parse;
pub mod rewrite;
mod sphere;

pub use expr::{
    anticommutator, commutator, d, identity, inv_s, mono, mu, refl, s, scalar, Axis, OperatorExpr,
};
pub use normal::{IntoMuPoly, NormalForm, OpKey};
pub use sphere::{
    op_vanishes_on_sphere, reduce_mod_sphere, sphere_test_monomials, SphereCheck,
    SphereQuotientElem,
};

/// Canonical form of `op`; see [`NormalForm`].
pub fn normal_form(op: &OperatorExpr) -> NormalForm<crate::exact_core::MuPoly> {
    NormalForm::from_expr(op)
}
