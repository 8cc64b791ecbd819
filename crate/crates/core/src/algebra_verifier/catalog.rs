use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{PendingCheck, SuiteConfig};
use crate::exact_core::{rat, rat_int};
use crate::operator_engine::{anticommutator, commutator, refl, scalar, OperatorExpr};
use crate::realizations::{Conserved, Gauge, GeneratorKind as K, Realizations, Subset};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// Defining relations of osp(1|2) in every subset realization.
    Osp,
    /// sCasimir anticommutes with odd and commutes with even generators.
    Scasimir,
    /// `R_i` obeys the sCasimir relations of its own copy.
    Reflection,
    /// `Q_A` commutes with the generators of the `A`-realization.
    CasimirCentral,
    /// Casimirs coincide with `mu_i`, `L_jk`, `M_A`.
    Identification,
    /// The tilde realization is the gauge conjugate of the plain one.
    Gauge,
    /// sCasimir form of the Hamiltonian, ambient and on the sphere.
    Bridge,
    /// Anticommutators `{Q_A, Q_B}` for all pairs of subsets.
    Structure,
    /// Rank-one Bannai-Ito relations and central elements.
    Rank1,
    /// Conserved quantities commute with the Hamiltonian.
    Symmetry,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Osp,
        Family::Scasimir,
        Family::Reflection,
        Family::CasimirCentral,
        Family::Identification,
        Family::Gauge,
        Family::Bridge,
        Family::Structure,
        Family::Rank1,
        Family::Symmetry,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Osp => "osp",
            Family::Scasimir => "scasimir",
            Family::Reflection => "reflection",
            Family::CasimirCentral => "casimir-central",
            Family::Identification => "identification",
            Family::Gauge => "gauge",
            Family::Bridge => "bridge",
            Family::Structure => "structure",
            Family::Rank1 => "rank1",
            Family::Symmetry => "symmetry",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check family {s:?}")))
    }
}

fn check(
    id: String,
    family: Family,
    lhs: OperatorExpr,
    rhs: OperatorExpr,
    subsets: Vec<Subset>,
) -> PendingCheck {
    PendingCheck { id, family, lhs, rhs, sphere_cap: None, subsets }
}

fn gen(r: &Realizations, a: Subset, k: K, g: Gauge) -> OperatorExpr {
    r.subset(a, k, g).expect("generator of a valid subset")
}

fn q(r: &Realizations, a: Subset) -> OperatorExpr {
    gen(r, a, K::Q, Gauge::Plain)
}

fn twice(x: OperatorExpr) -> OperatorExpr {
    x.scaled_rational(rat_int(2))
}

fn zero() -> OperatorExpr {
    OperatorExpr::zero()
}

fn gauge_tag(g: Gauge) -> &'static str {
    match g {
        Gauge::Plain => "",
        Gauge::Tilde => "~",
    }
}

pub fn osp(r: &Realizations, a: Subset, g: Gauge) -> Vec<PendingCheck> {
    let dd = gen(r, a, K::D, g);
    let x = gen(r, a, K::X, g);
    let e = gen(r, a, K::E, g);
    let d2 = gen(r, a, K::Dsq, g);
    let x2 = gen(r, a, K::Xsq, g);
    let rels: [(&str, OperatorExpr, OperatorExpr); 10] = [
        ("{x,x}=2|x|^2", anticommutator(&x, &x), twice(x2.clone())),
        ("{D,D}=2D^2", anticommutator(&dd, &dd), twice(d2.clone())),
        ("{x,D}=2E", anticommutator(&x, &dd), twice(e.clone())),
        ("[D,E]=D", commutator(&dd, &e), dd.clone()),
        ("[D,|x|^2]=2x", commutator(&dd, &x2), twice(x.clone())),
        ("[E,x]=x", commutator(&e, &x), x.clone()),
        ("[D^2,x]=2D", commutator(&d2, &x), twice(dd.clone())),
        ("[D^2,E]=2D^2", commutator(&d2, &e), twice(d2.clone())),
        ("[D^2,|x|^2]=4E", commutator(&d2, &x2), e.clone().scaled_rational(rat_int(4))),
        ("[E,|x|^2]=2|x|^2", commutator(&e, &x2), twice(x2.clone())),
    ];
    rels.into_iter()
        .map(|(name, lhs, rhs)| {
            check(format!("osp{}.{name}.A={a}", gauge_tag(g)), Family::Osp, lhs, rhs, vec![a])
        })
        .collect()
}

pub fn scasimir(r: &Realizations, a: Subset) -> Vec<PendingCheck> {
    let s = gen(r, a, K::S, Gauge::Plain);
    let mut out = Vec::new();
    for (k, name, anti) in [
        (K::D, "{S,D}=0", true),
        (K::X, "{S,x}=0", true),
        (K::E, "[S,E]=0", false),
        (K::Xsq, "[S,|x|^2]=0", false),
        (K::Dsq, "[S,D^2]=0", false),
    ] {
        let g = gen(r, a, k, Gauge::Plain);
        let lhs = if anti { anticommutator(&s, &g) } else { commutator(&s, &g) };
        out.push(check(format!("scasimir.{name}.A={a}"), Family::Scasimir, lhs, zero(), vec![a]));
    }
    out
}

pub fn reflection(r: &Realizations, i: usize) -> Vec<PendingCheck> {
    let a = Subset::from_members(&[i]).expect("valid");
    let ri = refl(i);
    let mut out = Vec::new();
    for (k, name, anti) in [
        (K::E, "[R,E]=0", false),
        (K::Xsq, "[R,|x|^2]=0", false),
        (K::Dsq, "[R,D^2]=0", false),
        (K::D, "{R,D}=0", true),
        (K::X, "{R,x}=0", true),
    ] {
        let g = gen(r, a, k, Gauge::Plain);
        let lhs = if anti { anticommutator(&ri, &g) } else { commutator(&ri, &g) };
        out.push(check(format!("reflection.{name}.i={i}"), Family::Reflection, lhs, zero(), vec![a]));
    }
    out
}

pub fn casimir_central(r: &Realizations, a: Subset) -> Vec<PendingCheck> {
    let qa = q(r, a);
    [(K::D, "D"), (K::X, "x"), (K::E, "E"), (K::Dsq, "D^2"), (K::Xsq, "|x|^2")]
        .into_iter()
        .map(|(k, name)| {
            let lhs = commutator(&qa, &gen(r, a, k, Gauge::Plain));
            check(format!("casimir.[Q,{name}]=0.A={a}"), Family::CasimirCentral, lhs, zero(), vec![a])
        })
        .collect()
}

pub fn identification(r: &Realizations) -> Vec<PendingCheck> {
    let mut out = Vec::new();
    for i in 1..=4 {
        let a = Subset::from_members(&[i]).expect("valid");
        out.push(check(
            format!("identification.S=mu*R.i={i}"),
            Family::Identification,
            gen(r, a, K::S, Gauge::Plain),
            crate::operator_engine::mu(i) * refl(i),
            vec![a],
        ));
        out.push(check(
            format!("identification.Q=mu.i={i}"),
            Family::Identification,
            q(r, a),
            crate::operator_engine::mu(i),
            vec![a],
        ));
    }
    for j in 1..=4 {
        for k in j + 1..=4 {
            let a = Subset::from_members(&[j, k]).expect("valid");
            let l = r.conserved(Conserved::L(j, k)).expect("valid pair");
            out.push(check(format!("identification.Q=L.A={a}"), Family::Identification, q(r, a), l, vec![a]));
        }
    }
    for a in Subset::nonempty().filter(|a| a.len() == 3) {
        let m = r.conserved(Conserved::M(a)).expect("3-subset");
        out.push(check(format!("identification.Q=M.A={a}"), Family::Identification, q(r, a), m, vec![a]));
    }
    out.push(check(
        "identification.Q_empty=-1/2".into(),
        Family::Identification,
        q(r, Subset::EMPTY),
        scalar(rat(-1, 2)),
        vec![Subset::EMPTY],
    ));
    out
}

pub fn gauge(r: &Realizations) -> Vec<PendingCheck> {
    let mut out = Vec::new();
    for i in 1..=4 {
        let a = Subset::from_members(&[i]).expect("valid");
        for (k, name) in [(K::D, "D"), (K::E, "E")] {
            out.push(check(
                format!("gauge.{name}~=G^-1*{name}*G.i={i}"),
                Family::Gauge,
                gen(r, a, k, Gauge::Tilde),
                gen(r, a, k, Gauge::Plain).gauge_conjugate(),
                vec![a],
            ));
        }
        out.push(check(
            format!("gauge.Q~=mu.i={i}"),
            Family::Gauge,
            gen(r, a, K::Q, Gauge::Tilde),
            crate::operator_engine::mu(i),
            vec![a],
        ));
    }
    for a in Subset::nonempty() {
        out.push(check(
            format!("gauge.S~=G^-1*S*G.A={a}"),
            Family::Gauge,
            gen(r, a, K::S, Gauge::Tilde),
            gen(r, a, K::S, Gauge::Plain).gauge_conjugate(),
            vec![a],
        ));
    }
    out
}

pub fn bridge(r: &Realizations, cap: u32) -> Vec<PendingCheck> {
    let hs = r.hamiltonian_from_scasimir(Gauge::Plain);
    let ambient = check(
        "bridge.S^2-S-3/4=J^2+|x|^2*V".into(),
        Family::Bridge,
        hs.clone(),
        r.hamiltonian_ambient(),
        vec![Subset::FULL],
    );
    let mut on_sphere = check(
        "bridge.S^2-S-3/4=H.sphere".into(),
        Family::Bridge,
        hs,
        r.hamiltonian(),
        vec![Subset::FULL],
    );
    on_sphere.sphere_cap = Some(cap);
    vec![ambient, on_sphere]
}

pub fn structure(r: &Realizations, a: Subset, b: Subset) -> PendingCheck {
    let (qa, qb) = (q(r, a), q(r, b));
    let inter = a.intersection(b);
    let rhs = q(r, a.symmetric_difference(b))
        + twice(q(r, inter) * q(r, a.union(b)))
        + twice(q(r, a.difference(inter)) * q(r, b.difference(inter)));
    check(
        format!("structure.{{Q_A,Q_B}}.A={a}.B={b}"),
        Family::Structure,
        anticommutator(&qa, &qb),
        rhs,
        vec![a, b],
    )
}

pub fn rank1(r: &Realizations) -> Vec<PendingCheck> {
    let sub = |s: &str| Subset::parse(s).expect("valid");
    let k1 = q(r, sub("12"));
    let k2 = q(r, sub("23"));
    let k3 = q(r, sub("13"));
    let [w1, w2, w3] = r.omegas();
    let within = vec![Subset::first(3)];
    let mut out = vec![
        check("rank1.{K1,K2}=K3+w3".into(), Family::Rank1, anticommutator(&k1, &k2), k3.clone() + w3.clone(), within.clone()),
        check("rank1.{K2,K3}=K1+w1".into(), Family::Rank1, anticommutator(&k2, &k3), k1.clone() + w1.clone(), within.clone()),
        check("rank1.{K3,K1}=K2+w2".into(), Family::Rank1, anticommutator(&k3, &k1), k2.clone() + w2.clone(), within.clone()),
    ];
    let ks = [("K1", &k1), ("K2", &k2), ("K3", &k3)];
    for (wn, w) in [("w1", &w1), ("w2", &w2), ("w3", &w3)] {
        for (kn, k) in ks {
            out.push(check(format!("rank1.[{wn},{kn}]=0"), Family::Rank1, commutator(w, k), zero(), within.clone()));
        }
    }
    out
}

pub fn symmetry(r: &Realizations, cap: u32) -> Vec<PendingCheck> {
    let hs = r.hamiltonian_from_scasimir(Gauge::Plain);
    let h = r.hamiltonian();
    let mut out = Vec::new();
    for a in Subset::all() {
        out.push(check(
            format!("symmetry.[Q_A,S^2-S-3/4]=0.A={a}"),
            Family::Symmetry,
            commutator(&q(r, a), &hs),
            zero(),
            vec![a],
        ));
    }
    for i in 1..=4 {
        let a = Subset::from_members(&[i]).expect("valid");
        out.push(check(format!("symmetry.[H,R]=0.i={i}"), Family::Symmetry, commutator(&h, &refl(i)), zero(), vec![a]));
    }
    for j in 1..=4 {
        for k in j + 1..=4 {
            let a = Subset::from_members(&[j, k]).expect("valid");
            let l = r.conserved(Conserved::L(j, k)).expect("valid pair");
            let mut c = check(format!("symmetry.[H,L]=0.sphere.A={a}"), Family::Symmetry, commutator(&h, &l), zero(), vec![a]);
            c.sphere_cap = Some(cap);
            out.push(c);
        }
    }
    for a in Subset::nonempty().filter(|a| a.len() == 3) {
        let m = r.conserved(Conserved::M(a)).expect("3-subset");
        let mut c = check(format!("symmetry.[H,M]=0.sphere.A={a}"), Family::Symmetry, commutator(&h, &m), zero(), vec![a]);
        c.sphere_cap = Some(cap);
        out.push(c);
    }
    out
}

/// Every check of the suite, filtered by the config, in a fixed order.
pub fn full(r: &Realizations, config: &SuiteConfig) -> Vec<PendingCheck> {
    let wanted = |f: Family| config.families.as_ref().is_none_or(|fs| fs.contains(&f));
    let mut out = Vec::new();
    if wanted(Family::Osp) {
        for g in [Gauge::Plain, Gauge::Tilde] {
            for a in Subset::nonempty() {
                out.extend(osp(r, a, g));
            }
        }
    }
    if wanted(Family::Scasimir) {
        for a in Subset::nonempty() {
            out.extend(scasimir(r, a));
        }
    }
    if wanted(Family::Reflection) {
        for i in 1..=4 {
            out.extend(reflection(r, i));
        }
    }
    if wanted(Family::CasimirCentral) {
        for a in Subset::nonempty() {
            out.extend(casimir_central(r, a));
        }
    }
    if wanted(Family::Identification) {
        out.extend(identification(r));
    }
    if wanted(Family::Gauge) {
        out.extend(gauge(r));
    }
    if wanted(Family::Bridge) {
        out.extend(bridge(r, config.sphere_cap));
    }
    if wanted(Family::Structure) {
        for a in Subset::all() {
            for b in Subset::all() {
                out.push(structure(r, a, b));
            }
        }
    }
    if wanted(Family::Rank1) {
        out.extend(rank1(r));
    }
    if wanted(Family::Symmetry) {
        out.extend(symmetry(r, config.sphere_cap));
    }
    out.retain(|c| {
        let by_subset = config.subset.is_none_or(|s| c.subsets.contains(&s));
        let by_within = config.within.is_none_or(|w| c.subsets.iter().all(|s| s.is_subset_of(w)));
        by_subset && by_within
    });
    out
}
