use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Catalog of single-sign corruptions used to confirm that the identity
/// suite actually detects errors in the factories.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Mutation {
    /// `D_1 = ∂_1 + mu_1 s_1^{-1} R_1`.
    DunklSign,
    /// Tilde `D_2` with `(1 + R_2)`.
    TildeDunklSign,
    /// `E_3` with the constant shift negated (both gauges).
    EulerShiftSign,
    /// sCasimir `([D, x] + 1) / 2`.
    ScasimirShiftSign,
    /// Leading term of `D_A` negated for `|A| > 1`.
    SubsetDunklSign,
    /// Leading term of `x_A` negated for `|A| > 1`.
    SubsetCoordinateSign,
    /// `Q_∅ = +1/2`.
    EmptyCasimirSign,
    /// Rotation term of `L_12` negated.
    L12RotationSign,
    /// `mu_3 R_3` term of `L_34` negated.
    L34ReflectionSign,
    /// `mu_1 (s_3/s_1) R_1` term of `L_13` negated.
    L13RatioSign,
    /// Rotation `A_14` inside `M_134` negated.
    M134RotationSign,
    /// Constant term of `M_234` negated.
    M234ConstantSign,
    /// Reflection term of the `mu_2` potential negated.
    HPotentialSign,
    /// `J_12²` term of the Hamiltonian negated.
    HKineticSign,
}

impl Mutation {
    pub const ALL: [Mutation; 14] = [
        Mutation::DunklSign,
        Mutation::TildeDunklSign,
        Mutation::EulerShiftSign,
        Mutation::ScasimirShiftSign,
        Mutation::SubsetDunklSign,
        Mutation::SubsetCoordinateSign,
        Mutation::EmptyCasimirSign,
        Mutation::L12RotationSign,
        Mutation::L34ReflectionSign,
        Mutation::L13RatioSign,
        Mutation::M134RotationSign,
        Mutation::M234ConstantSign,
        Mutation::HPotentialSign,
        Mutation::HKineticSign,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mutation::DunklSign => "D1-sign",
            Mutation::TildeDunklSign => "Dt2-sign",
            Mutation::EulerShiftSign => "E3-shift-sign",
            Mutation::ScasimirShiftSign => "S-shift-sign",
            Mutation::SubsetDunklSign => "DA-lead-sign",
            Mutation::SubsetCoordinateSign => "xA-lead-sign",
            Mutation::EmptyCasimirSign => "Q0-sign",
            Mutation::L12RotationSign => "L12-sign",
            Mutation::L34ReflectionSign => "L34-refl-sign",
            Mutation::L13RatioSign => "L13-ratio-sign",
            Mutation::M134RotationSign => "M134-sign",
            Mutation::M234ConstantSign => "M234-const-sign",
            Mutation::HPotentialSign => "H-potential-sign",
            Mutation::HKineticSign => "H-kinetic-sign",
        }
    }
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Mutation> {
        Mutation::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown mutation {s:?}")))
    }
}
