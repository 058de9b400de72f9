//! Post's lattice: the catalog of closed classes, class identification, and
//! inclusion between classes.
//!
//! Every class is stored as a conjunction of defining properties together
//! with one of its bases. `A ⊆ B` holds iff every base function of `A` has
//! all defining properties of `B`, which is exact because `B` is closed.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::base::BaseSet;
use super::props::{property_report, PropertyReport};
use super::table::TruthTable;
use crate::error::Result;

/// A defining property of a clone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Atom {
    R0,
    R1,
    M,
    D,
    L,
    S0,
    S1,
    S0k(u32),
    S1k(u32),
    E,
    V,
    N,
    I,
}

impl Atom {
    pub fn holds(&self, r: &PropertyReport) -> bool {
        match *self {
            Atom::R0 => r.reproducing0,
            Atom::R1 => r.reproducing1,
            Atom::M => r.monotone,
            Atom::D => r.self_dual,
            Atom::L => r.is_affine(),
            Atom::S0 => r.separating0,
            Atom::S1 => r.separating1,
            Atom::S0k(k) => r.sep_degree0.holds(k) == Some(true),
            Atom::S1k(k) => r.sep_degree1.holds(k) == Some(true),
            Atom::E => r.conjunction_like,
            Atom::V => r.disjunction_like,
            Atom::N => r.essentially_unary,
            Atom::I => r.projection_or_constant,
        }
    }
}

/// A concrete class of the lattice, e.g. `M2` or `S02^3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CloneClass {
    pub family: &'static str,
    pub degree: Option<u32>,
    pub atoms: Vec<Atom>,
    #[serde(skip)]
    pub base: Vec<TruthTable>,
}

impl CloneClass {
    pub fn name(&self) -> String {
        match self.degree {
            Some(k) => format!("{}^{k}", self.family),
            None => self.family.to_string(),
        }
    }
}

impl fmt::Display for CloneClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn t(n: u32, f: impl Fn(&[bool]) -> bool) -> TruthTable {
    TruthTable::from_fn(n, |i| {
        let a: Vec<bool> = (0..n).map(|k| (i >> (n - 1 - k)) & 1 == 1).collect();
        f(&a)
    })
    .expect("catalog arities are small")
}

fn konst(v: bool) -> TruthTable {
    TruthTable::constant(0, v).expect("arity 0")
}

fn thr(n: u32, k: u32, dual: bool) -> TruthTable {
    TruthTable::threshold(n, k, dual).expect("threshold in range")
}

fn maj(a: bool, b: bool, c: bool) -> bool {
    (a as u8 + b as u8 + c as u8) >= 2
}

/// Classes whose definition does not carry a degree parameter.
fn fixed_classes() -> Vec<CloneClass> {
    use Atom::*;
    let and = || t(2, |a| a[0] && a[1]);
    let or = || t(2, |a| a[0] || a[1]);
    let not = || t(1, |a| !a[0]);
    let xor = || t(2, |a| a[0] ^ a[1]);
    let eqv = || t(2, |a| a[0] == a[1]);
    let id = || t(1, |a| a[0]);
    let imp = || t(2, |a| !a[0] || a[1]);
    let nimp = || t(2, |a| a[0] && !a[1]);
    let c = |family, atoms: Vec<Atom>, base: Vec<TruthTable>| CloneClass {
        family,
        degree: None,
        atoms,
        base,
    };
    vec![
        c("BF", vec![], vec![and(), not()]),
        c("R0", vec![R0], vec![and(), xor()]),
        c("R1", vec![R1], vec![or(), eqv()]),
        c("R2", vec![R0, R1], vec![or(), t(3, |a| a[0] && (a[1] == a[2]))]),
        c("M", vec![M], vec![and(), or(), konst(false), konst(true)]),
        c("M0", vec![M, R0], vec![and(), or(), konst(false)]),
        c("M1", vec![M, R1], vec![and(), or(), konst(true)]),
        c("M2", vec![M, R0, R1], vec![and(), or()]),
        c("S0", vec![S0], vec![imp()]),
        c("S1", vec![S1], vec![nimp()]),
        c("S02", vec![S0, R0, R1], vec![t(3, |a| a[0] || (a[1] && !a[2]))]),
        c("S01", vec![S0, M], vec![t(3, |a| a[0] || (a[1] && a[2])), konst(true)]),
        c("S00", vec![S0, R0, R1, M], vec![t(3, |a| a[0] || (a[1] && a[2]))]),
        c("S12", vec![S1, R0, R1], vec![t(3, |a| a[0] && (a[1] || !a[2]))]),
        c("S11", vec![S1, M], vec![t(3, |a| a[0] && (a[1] || a[2])), konst(false)]),
        c("S10", vec![S1, R0, R1, M], vec![t(3, |a| a[0] && (a[1] || a[2]))]),
        c("D", vec![D], vec![t(3, |a| maj(a[0], !a[1], !a[2]))]),
        c("D1", vec![D, R0, R1], vec![t(3, |a| maj(a[0], a[1], !a[2]))]),
        c("D2", vec![D, M], vec![t(3, |a| maj(a[0], a[1], a[2]))]),
        c("L", vec![L], vec![xor(), konst(true)]),
        c("L0", vec![L, R0], vec![xor()]),
        c("L1", vec![L, R1], vec![eqv()]),
        c("L2", vec![L, R0, R1], vec![t(3, |a| a[0] ^ a[1] ^ a[2])]),
        c("L3", vec![L, D], vec![t(3, |a| !(a[0] ^ a[1] ^ a[2]))]),
        c("E", vec![E], vec![and(), konst(false), konst(true)]),
        c("E0", vec![E, R0], vec![and(), konst(false)]),
        c("E1", vec![E, R1], vec![and(), konst(true)]),
        c("E2", vec![E, R0, R1], vec![and()]),
        c("V", vec![V], vec![or(), konst(false), konst(true)]),
        c("V0", vec![V, R0], vec![or(), konst(false)]),
        c("V1", vec![V, R1], vec![or(), konst(true)]),
        c("V2", vec![V, R0, R1], vec![or()]),
        c("N", vec![N], vec![not(), konst(false), konst(true)]),
        c("N2", vec![N, D], vec![not()]),
        c("I", vec![I], vec![id(), konst(false), konst(true)]),
        c("I0", vec![I, R0], vec![id(), konst(false)]),
        c("I1", vec![I, R1], vec![id(), konst(true)]),
        c("I2", vec![I, R0, R1], vec![id()]),
    ]
}

/// The degree-`k` members of the infinite separating families.
fn degree_classes(k: u32) -> Vec<CloneClass> {
    use Atom::*;
    let imp = t(2, |a| !a[0] || a[1]);
    let nimp = t(2, |a| a[0] && !a[1]);
    let dual_t = thr(k + 1, k, true);
    let t_k = thr(k + 1, k, false);
    let c = |family, atoms: Vec<Atom>, base: Vec<TruthTable>| CloneClass {
        family,
        degree: Some(k),
        atoms,
        base,
    };
    vec![
        c("S0", vec![S0k(k)], vec![imp.clone(), dual_t.clone()]),
        c("S1", vec![S1k(k)], vec![nimp.clone(), t_k.clone()]),
        c(
            "S02",
            vec![S0k(k), R0, R1],
            vec![t(3, |a| a[0] || (a[1] && !a[2])), dual_t.clone()],
        ),
        c("S01", vec![S0k(k), M], vec![dual_t.clone(), konst(true)]),
        c(
            "S00",
            vec![S0k(k), R0, R1, M],
            vec![t(3, |a| a[0] || (a[1] && a[2])), dual_t],
        ),
        c(
            "S12",
            vec![S1k(k), R0, R1],
            vec![t(3, |a| a[0] && (a[1] || !a[2])), t_k.clone()],
        ),
        c("S11", vec![S1k(k), M], vec![t_k.clone(), konst(false)]),
        c(
            "S10",
            vec![S1k(k), R0, R1, M],
            vec![t(3, |a| a[0] && (a[1] || a[2])), t_k],
        ),
    ]
}

/// All classes, with the separating families instantiated for `2..=max_degree`.
pub fn catalog(max_degree: u32) -> Vec<CloneClass> {
    let mut out = fixed_classes();
    for k in 2..=max_degree {
        out.extend(degree_classes(k));
    }
    out
}

/// Looks a class up by name (`"M2"`, `"S02^3"`, …).
pub fn class_by_name(name: &str) -> Option<CloneClass> {
    let (family, degree) = match name.split_once('^') {
        Some((f, k)) => (f, Some(k.parse::<u32>().ok().filter(|&k| k >= 2)?)),
        None => (name, None),
    };
    match degree {
        None => fixed_classes().into_iter().find(|c| c.family == family),
        Some(k) => degree_classes(k).into_iter().find(|c| c.family == family),
    }
}

/// Property reports of catalog base functions, shared across inclusion tests.
#[derive(Default)]
pub struct ReportCache {
    reports: HashMap<TruthTable, PropertyReport>,
    bound: u32,
}

impl ReportCache {
    pub fn new(bound: u32) -> Self {
        Self {
            reports: HashMap::new(),
            bound: bound.max(2),
        }
    }

    pub fn report(&mut self, f: &TruthTable) -> Result<&PropertyReport> {
        if !self.reports.contains_key(f) {
            // degrees of catalog bases never exceed their arity
            let r = property_report(f, self.bound.max(f.arity() + 1))?;
            self.reports.insert(f.clone(), r);
        }
        Ok(&self.reports[f])
    }
}

/// `a ⊆ b`.
pub fn class_included(a: &CloneClass, b: &CloneClass, cache: &mut ReportCache) -> Result<bool> {
    for f in &a.base {
        let r = cache.report(f)?;
        if !b.atoms.iter().all(|atom| atom.holds(r)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The smallest class of the lattice containing every function of `base`.
pub fn clone_identify(base: &BaseSet, degree_bound: u32) -> Result<CloneClass> {
    let shift = base.max_arity().min(5);
    let bound = degree_bound.min(1 << shift).max(2);
    let reports = base
        .tables()
        .map(|f| property_report(f, bound))
        .collect::<Result<Vec<_>>>()?;
    identify_from_reports(&reports, bound)
}

pub(crate) fn identify_from_reports(reports: &[PropertyReport], bound: u32) -> Result<CloneClass> {
    let candidates: Vec<CloneClass> = catalog(bound)
        .into_iter()
        .filter(|c| c.atoms.iter().all(|a| reports.iter().all(|r| a.holds(r))))
        .collect();
    let mut cache = ReportCache::new(bound);
    for c in &candidates {
        let mut minimal = true;
        for d in &candidates {
            if !class_included(c, d, &mut cache)? {
                minimal = false;
                break;
            }
        }
        if minimal {
            return Ok(c.clone());
        }
    }
    // unreachable when the catalog is complete: BF always qualifies
    Err(crate::error::Error::Invalid(
        "no unique smallest class among the candidates".into(),
    ))
}

/// Table of `f` as one of the catalog's named functions, if any.
pub fn describe(f: &TruthTable) -> Vec<String> {
    catalog(3)
        .iter()
        .filter(|c| c.base.len() == 1 && &c.base[0] == f)
        .map(|c| format!("base of {c}"))
        .collect()
}
