//! Factories for every named operator of the model.
//!
//! Coordinates are 1-based throughout. The rotation generator
//! `A_jk = s_j ∂_k - s_k ∂_j` stands in for `i J_jk`, so every operator here
//! has rational coefficients and `J_jk² = -A_jk²`.

mod mutation;
mod subset;

use std::str::FromStr;

use crate::exact_core::{rat, rat_int, MuPoly, Rational};
use crate::operator_engine::parse::AtomResolver;
use crate::operator_engine::{
    commutator, d, identity, inv_s, mono, mu, refl, s, scalar, OperatorExpr,
};
use crate::{Error, Result};

pub use mutation::Mutation;
pub use subset::Subset;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GeneratorKind {
    /// Odd generator `D` (Dunkl operator).
    D,
    /// Odd generator `x`.
    X,
    /// Euler-type even generator `E`.
    E,
    /// `D²`.
    Dsq,
    /// `|x|²`.
    Xsq,
    /// sCasimir `S = ([D, x] - 1) / 2`.
    S,
    /// Casimir `Q = S · Π R_i`.
    Q,
}

impl GeneratorKind {
    pub const OSP: [GeneratorKind; 5] =
        [GeneratorKind::D, GeneratorKind::X, GeneratorKind::E, GeneratorKind::Dsq, GeneratorKind::Xsq];
}

/// Which realization: the Dunkl one, or its conjugate by `Π |s_i|^{mu_i}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Gauge {
    Plain,
    Tilde,
}

/// Conserved quantities of the Hamiltonian.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Conserved {
    /// `L_jk`, `1 <= j < k <= 4`.
    L(usize, usize),
    /// `M_A`, `|A| = 3`.
    M(Subset),
    H,
}

/// Operator factory, optionally with one deliberately corrupted sign.
#[derive(Clone, Copy, Debug, Default)]
pub struct Realizations {
    mutation: Option<Mutation>,
}

fn flip(on: bool) -> Rational {
    if on {
        rat_int(-1)
    } else {
        rat_int(1)
    }
}

/// `Π_{j=from}^{to} R_j` over every integer in the range.
fn refl_range(from: usize, to: usize) -> OperatorExpr {
    let mut out = identity();
    for j in from..=to {
        out = out * refl(j);
    }
    out
}

fn refl_product(a: Subset) -> OperatorExpr {
    a.members().into_iter().fold(identity(), |acc, i| acc * refl(i))
}

/// `A_jk = s_j ∂_k - s_k ∂_j`.
pub fn rotation(j: usize, k: usize) -> OperatorExpr {
    s(j) * d(k) - s(k) * d(j)
}

/// `γ_i = mu_i + 1/2` as a scalar operator.
fn gamma(i: usize) -> OperatorExpr {
    mu(i) + scalar(rat(1, 2))
}

impl Realizations {
    pub fn new() -> Self {
        Realizations { mutation: None }
    }

    pub fn with_mutation(mutation: Option<Mutation>) -> Self {
        Realizations { mutation }
    }

    pub fn mutation(&self) -> Option<Mutation> {
        self.mutation
    }

    fn mutated(&self, m: Mutation) -> bool {
        self.mutation == Some(m)
    }

    /// Single-coordinate generator.
    pub fn primitive(&self, i: usize, kind: GeneratorKind, gauge: Gauge) -> Result<OperatorExpr> {
        if !(1..=4).contains(&i) {
            return Err(Error::MalformedIndex(format!("coordinate {i} not in 1..=4")));
        }
        Ok(match kind {
            GeneratorKind::D => match gauge {
                Gauge::Plain => {
                    let sign = flip(self.mutated(Mutation::DunklSign) && i == 1);
                    d(i) - (mu(i) * inv_s(i) * refl(i)).scaled_rational(sign)
                }
                Gauge::Tilde => {
                    let sign = flip(self.mutated(Mutation::TildeDunklSign) && i == 2);
                    d(i) + mu(i) * inv_s(i) * (identity() - refl(i).scaled_rational(sign))
                }
            },
            GeneratorKind::X => s(i),
            GeneratorKind::E => {
                let flipped = self.mutated(Mutation::EulerShiftSign) && i == 3;
                let shift = match gauge {
                    Gauge::Plain => scalar(rat(1, 2)),
                    Gauge::Tilde => gamma(i),
                };
                s(i) * d(i) + shift.scaled_rational(flip(flipped))
            }
            GeneratorKind::Dsq => {
                let di = self.primitive(i, GeneratorKind::D, gauge)?;
                di.clone() * di
            }
            GeneratorKind::Xsq => s(i) * s(i),
            GeneratorKind::S => self.scasimir(
                &self.primitive(i, GeneratorKind::D, gauge)?,
                &self.primitive(i, GeneratorKind::X, gauge)?,
            ),
            GeneratorKind::Q => self.primitive(i, GeneratorKind::S, gauge)? * refl(i),
        })
    }

    fn scasimir(&self, dd: &OperatorExpr, x: &OperatorExpr) -> OperatorExpr {
        let sign = flip(self.mutated(Mutation::ScasimirShiftSign));
        (commutator(dd, x) - identity().scaled_rational(sign)).scaled_rational(rat(1, 2))
    }

    /// Generator of the realization attached to a subset `A`.
    ///
    /// Odd generators interleave reflections: `D_A = Σ_{i∈A} D_i Π_{j=i+1}^{sup A} R_j`,
    /// where the product runs over every integer in the range, members of
    /// `A` or not. `Q_∅ = -1/2`.
    pub fn subset(&self, a: Subset, kind: GeneratorKind, gauge: Gauge) -> Result<OperatorExpr> {
        if a.is_empty() {
            return match kind {
                GeneratorKind::Q => {
                    let sign = flip(self.mutated(Mutation::EmptyCasimirSign));
                    Ok(scalar(rat(-1, 2) * sign))
                }
                _ => Err(Error::EmptySubset(format!("{kind:?}"))),
            };
        }
        let sup = a.sup().expect("nonempty");
        let members = a.members();
        let first = members[0];
        Ok(match kind {
            GeneratorKind::D | GeneratorKind::X => {
                let mut terms = Vec::with_capacity(members.len());
                for &i in &members {
                    let sign = match kind {
                        GeneratorKind::D => {
                            self.mutated(Mutation::SubsetDunklSign) && i == first && a.len() > 1
                        }
                        _ => self.mutated(Mutation::SubsetCoordinateSign) && i == first && a.len() > 1,
                    };
                    let g = self.primitive(i, kind, gauge)?;
                    terms.push((g * refl_range(i + 1, sup)).scaled_rational(flip(sign)));
                }
                OperatorExpr::Sum(terms)
            }
            GeneratorKind::E | GeneratorKind::Xsq => {
                let parts = members
                    .iter()
                    .map(|&i| self.primitive(i, kind, gauge))
                    .collect::<Result<Vec<_>>>()?;
                OperatorExpr::Sum(parts)
            }
            GeneratorKind::Dsq => {
                let da = self.subset(a, GeneratorKind::D, gauge)?;
                da.clone() * da
            }
            GeneratorKind::S => self.scasimir(
                &self.subset(a, GeneratorKind::D, gauge)?,
                &self.subset(a, GeneratorKind::X, gauge)?,
            ),
            GeneratorKind::Q => self.subset(a, GeneratorKind::S, gauge)? * refl_product(a),
        })
    }

    /// `L_jk`, `M_A` or the Hamiltonian, written directly in coordinates.
    pub fn conserved(&self, kind: Conserved) -> Result<OperatorExpr> {
        match kind {
            Conserved::L(j, k) => {
                if !(1 <= j && j < k && k <= 4) {
                    return Err(Error::MalformedIndex(format!("L({j},{k}) needs 1 <= j < k <= 4")));
                }
                let rot_sign = flip(self.mutated(Mutation::L12RotationSign) && (j, k) == (1, 2));
                let refl_sign = flip(self.mutated(Mutation::L34ReflectionSign) && (j, k) == (3, 4));
                let ratio_sign = flip(self.mutated(Mutation::L13RatioSign) && (j, k) == (1, 3));
                let inner = rotation(j, k).scaled_rational(rot_sign)
                    + (mu(j) * s(k) * inv_s(j) * refl(j)).scaled_rational(ratio_sign)
                    - mu(k) * s(j) * inv_s(k) * refl(k);
                let body = scalar(rat(1, 2))
                    + (mu(j) * refl(j)).scaled_rational(refl_sign)
                    + mu(k) * refl(k)
                    + inner * refl_range(j + 1, k);
                Ok(body * refl(j) * refl(k))
            }
            Conserved::M(a) => {
                if a.len() != 3 {
                    return Err(Error::MalformedIndex(format!("M({a}) needs a 3-subset")));
                }
                let members = a.members();
                let constant_sign = flip(self.mutated(Mutation::M234ConstantSign) && a.bits() == 0b1110);
                let mut parts = vec![identity().scaled_rational(constant_sign)];
                for &i in &members {
                    parts.push(mu(i) * refl(i));
                }
                for (p, &j) in members.iter().enumerate() {
                    for &k in &members[p + 1..] {
                        let rot_sign = flip(
                            self.mutated(Mutation::M134RotationSign) && a.bits() == 0b1101 && (j, k) == (1, 4),
                        );
                        let inner = rotation(j, k).scaled_rational(rot_sign)
                            + s(k) * mu(j) * inv_s(j) * refl(j)
                            - s(j) * mu(k) * inv_s(k) * refl(k);
                        parts.push(inner * refl_range(j + 1, k));
                    }
                }
                Ok(OperatorExpr::Sum(parts) * refl_product(a))
            }
            Conserved::H => {
                let mut parts = Vec::new();
                for j in 1..=4 {
                    for k in j + 1..=4 {
                        let sign = flip(self.mutated(Mutation::HKineticSign) && (j, k) == (1, 2));
                        let rot = rotation(j, k);
                        parts.push(-(rot.clone() * rot).scaled_rational(sign));
                    }
                }
                parts.push(self.potential());
                Ok(OperatorExpr::Sum(parts))
            }
        }
    }

    /// `Σ_i mu_i s_i^{-2} (mu_i - R_i)`.
    fn potential(&self) -> OperatorExpr {
        let mut parts = Vec::new();
        for i in 1..=4 {
            let sign = flip(self.mutated(Mutation::HPotentialSign) && i == 2);
            let mut e = [0; 4];
            e[i - 1] = -2;
            parts.push(mu(i) * mono(e) * (mu(i) - refl(i).scaled_rational(sign)));
        }
        OperatorExpr::Sum(parts)
    }

    pub fn hamiltonian(&self) -> OperatorExpr {
        self.conserved(Conserved::H).expect("H has no indices")
    }

    /// `S_[4]² - S_[4] - 3/4`.
    pub fn hamiltonian_from_scasimir(&self, gauge: Gauge) -> OperatorExpr {
        let s4 = self
            .subset(Subset::FULL, GeneratorKind::S, gauge)
            .expect("full subset is nonempty");
        s4.clone() * s4.clone() - s4 - scalar(rat(3, 4))
    }

    /// Angular part plus `|x|²` times the potential: equals the sCasimir
    /// form identically in the ambient space.
    pub fn hamiltonian_ambient(&self) -> OperatorExpr {
        let mut parts = Vec::new();
        for j in 1..=4 {
            for k in j + 1..=4 {
                let rot = rotation(j, k);
                parts.push(-(rot.clone() * rot));
            }
        }
        let radius = OperatorExpr::Sum((1..=4).map(|i| s(i) * s(i)).collect());
        parts.push(radius * self.potential());
        OperatorExpr::Sum(parts)
    }

    /// The Hamiltonian conjugated by `Π |s_i|^{mu_i}`; acts on the
    /// polynomial parts of eigenfunctions.
    pub fn hamiltonian_tilde(&self) -> OperatorExpr {
        self.hamiltonian().gauge_conjugate()
    }

    /// Central elements `ω_1, ω_2, ω_3` of the rank-one relations built
    /// from `Q_1, Q_2, Q_3, Q_123`.
    pub fn omegas(&self) -> [OperatorExpr; 3] {
        let q = |bits: u8| {
            self.subset(Subset::from_bits(bits).expect("valid"), GeneratorKind::Q, Gauge::Plain)
                .expect("nonempty")
        };
        let (q1, q2, q3, q123) = (q(0b001), q(0b010), q(0b100), q(0b111));
        let two = |x: OperatorExpr| x.scaled_rational(rat_int(2));
        [
            two(q3.clone() * q123.clone()) + two(q1.clone() * q2.clone()),
            two(q1.clone() * q123.clone()) + two(q2.clone() * q3.clone()),
            two(q2 * q123) + two(q1 * q3),
        ]
    }
}

fn one_subset(args: &[String]) -> Result<Subset> {
    match args {
        [a] => Subset::parse(a),
        _ => Err(Error::Parse(format!("expected one subset argument, got {args:?}"))),
    }
}

impl AtomResolver for Realizations {
    fn resolve(&self, name: &str, args: &[String]) -> Option<Result<OperatorExpr>> {
        let (base, gauge) = match name.strip_suffix("t") {
            Some(b) if ["D", "x", "E", "Dsq", "xsq", "S", "Q"].contains(&b) => (b, Gauge::Tilde),
            _ => (name, Gauge::Plain),
        };
        let kind = match base {
            "D" => Some(GeneratorKind::D),
            "x" => Some(GeneratorKind::X),
            "E" => Some(GeneratorKind::E),
            "Dsq" => Some(GeneratorKind::Dsq),
            "xsq" => Some(GeneratorKind::Xsq),
            "S" => Some(GeneratorKind::S),
            "Q" => Some(GeneratorKind::Q),
            _ => None,
        };
        if let Some(kind) = kind {
            return Some(one_subset(args).and_then(|a| self.subset(a, kind, gauge)));
        }
        Some(match (name, args) {
            ("L", [j, k]) => match (usize::from_str(j), usize::from_str(k)) {
                (Ok(j), Ok(k)) => self.conserved(Conserved::L(j, k)),
                _ => Err(Error::Parse(format!("bad L indices {args:?}"))),
            },
            ("L", [jk]) if jk.len() == 2 => {
                let v: Vec<usize> = jk.chars().filter_map(|c| c.to_digit(10)).map(|x| x as usize).collect();
                self.conserved(Conserved::L(v[0], v[1]))
            }
            ("M", _) => one_subset(args).and_then(|a| self.conserved(Conserved::M(a))),
            ("H", []) => Ok(self.hamiltonian()),
            ("Htilde", []) => Ok(self.hamiltonian_tilde()),
            ("Hs", []) => Ok(self.hamiltonian_from_scasimir(Gauge::Plain)),
            ("A", [j, k]) => match (usize::from_str(j), usize::from_str(k)) {
                (Ok(j), Ok(k)) if (1..=4).contains(&j) && (1..=4).contains(&k) => Ok(rotation(j, k)),
                _ => Err(Error::Parse(format!("bad rotation indices {args:?}"))),
            },
            _ => return None,
        })
    }
}

/// `mu_i` as a symbolic scalar (1-based).
pub fn mu_poly(i: usize) -> MuPoly {
    MuPoly::var(i - 1)
}
