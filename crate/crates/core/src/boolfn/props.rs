//! The clone-defining properties of a single Boolean function, computed
//! exhaustively from its truth table.

use std::fmt;

use serde::Serialize;

use super::bits::mask;
use super::table::TruthTable;
use crate::error::{Error, Result};

/// `x_{i₁} ⊕ … ⊕ x_{i_m} ⊕ c`; an empty support is a constant.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LinearForm {
    /// Variable indices, strictly ascending.
    pub support: Vec<u32>,
    pub constant: bool,
}

impl LinearForm {
    pub fn constant(c: bool) -> Self {
        Self {
            support: Vec::new(),
            constant: c,
        }
    }

    pub fn var(j: u32) -> Self {
        Self {
            support: vec![j],
            constant: false,
        }
    }

    /// Sum over GF(2).
    pub fn xor(&self, other: &Self) -> Self {
        let (a, b) = (&self.support, &other.support);
        let mut support = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    support.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    support.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        support.extend_from_slice(&a[i..]);
        support.extend_from_slice(&b[j..]);
        Self {
            support,
            constant: self.constant ^ other.constant,
        }
    }

    pub fn eval_word(&self, word: u64, n: u32) -> bool {
        self.support
            .iter()
            .fold(self.constant, |acc, &j| acc ^ super::bits::get_var(word, n, j))
    }

    pub fn max_var(&self) -> u32 {
        self.support.last().copied().unwrap_or(0)
    }

    pub fn to_table(&self, n: u32) -> Result<TruthTable> {
        if self.max_var() > n {
            return Err(Error::MissingVariable(self.max_var()));
        }
        TruthTable::from_fn(n, |i| self.eval_word(i, n))
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = self.support.iter().map(|j| format!("x{j}")).collect();
        if self.constant || terms.is_empty() {
            terms.push(if self.constant { "1" } else { "0" }.into());
        }
        f.write_str(&terms.join(" + "))
    }
}

/// How far c-separation extends along the degree chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "degree")]
pub enum SepDegree {
    /// Not even of degree 2.
    Never,
    /// Of every degree `2..=k`, not of degree `k + 1`.
    Exactly(u32),
    /// Of every degree up to the tested bound `k`; higher degrees untested.
    AtLeast(u32),
    /// c-separating outright, hence of every degree.
    All,
}

impl SepDegree {
    /// Whether degree `m ≥ 2` holds; `None` if beyond the tested bound.
    pub fn holds(&self, m: u32) -> Option<bool> {
        match *self {
            SepDegree::Never => Some(false),
            SepDegree::Exactly(k) => Some(m <= k),
            SepDegree::AtLeast(k) => (m <= k).then_some(true),
            SepDegree::All => Some(true),
        }
    }

    /// Largest degree known to hold (`u32::MAX` for `All`, 0 for `Never`).
    pub fn known_degree(&self) -> u32 {
        match *self {
            SepDegree::Never => 0,
            SepDegree::Exactly(k) | SepDegree::AtLeast(k) => k,
            SepDegree::All => u32::MAX,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub arity: u32,
    pub reproducing0: bool,
    pub reproducing1: bool,
    pub monotone: bool,
    pub self_dual: bool,
    pub affine: Option<LinearForm>,
    pub separating0: bool,
    pub separating1: bool,
    pub sep_degree0: SepDegree,
    pub sep_degree1: SepDegree,
    /// Constant or a conjunction of variables (class E shape).
    pub conjunction_like: bool,
    /// Constant or a disjunction of variables (class V shape).
    pub disjunction_like: bool,
    /// Depends on at most one variable (class N shape).
    pub essentially_unary: bool,
    /// Constant or a projection (class I shape).
    pub projection_or_constant: bool,
}

impl PropertyReport {
    pub fn is_affine(&self) -> bool {
        self.affine.is_some()
    }

    pub fn sep_degree(&self, c: bool) -> SepDegree {
        if c {
            self.sep_degree1
        } else {
            self.sep_degree0
        }
    }
}

pub fn is_reproducing(f: &TruthTable, c: bool) -> bool {
    let row = if c { f.rows() - 1 } else { 0 };
    f.get(row) == c
}

pub fn is_monotone(f: &TruthTable) -> bool {
    let n = f.arity();
    (1..=n).all(|j| {
        let bit = 1u64 << (n - j);
        (0..f.rows())
            .filter(|i| i & bit == 0)
            .all(|i| !f.get(i) || f.get(i | bit))
    })
}

pub fn is_self_dual(f: &TruthTable) -> bool {
    let top = f.rows() - 1;
    (0..f.rows()).all(|i| f.get(i) != f.get(top ^ i))
}

/// The affine form of `f`, if it has one.
///
/// The candidate is read off `f(0…0)` and the unit vectors, then checked on
/// every row.
pub fn is_affine(f: &TruthTable) -> Option<LinearForm> {
    let n = f.arity();
    let constant = f.get(0);
    let support: Vec<u32> = (1..=n)
        .filter(|&j| f.get(1u64 << (n - j)) != constant)
        .collect();
    let form = LinearForm { support, constant };
    (0..f.rows())
        .all(|i| form.eval_word(i, n) == f.get(i))
        .then_some(form)
}

/// Smallest `i` with `a_i = c` for every `a ∈ f⁻¹(c)`.
///
/// An empty preimage yields `Some(1)`: any coordinate is a vacuous witness.
pub fn separating_coordinate(f: &TruthTable, c: bool) -> Option<u32> {
    let n = f.arity();
    // coordinates where some a ∈ f⁻¹(c) has a_i ≠ c
    let spoiled = covered_coordinates(f, c);
    if f.preimage(c).next().is_none() {
        return Some(1);
    }
    (1..=n).find(|&j| spoiled & (1u64 << (n - j)) == 0)
}

/// OR over `f⁻¹(c)` of the coordinates that disagree with `c`.
fn covered_coordinates(f: &TruthTable, c: bool) -> u64 {
    let m = mask(f.arity());
    f.preimage(c)
        .fold(0u64, |acc, a| acc | if c { !a & m } else { a })
}

/// Degree of c-separation, tested up to `bound`.
///
/// Degree `m` holds iff no `m` members of `f⁻¹(c)` jointly disagree with `c`
/// on every coordinate, so the largest degree is one less than the size of a
/// minimum such cover. Subsets of size below `m` count, which keeps the chain
/// `deg m+1 ⟹ deg m` intact for small preimages.
pub fn separation_degree(f: &TruthTable, c: bool, bound: u32) -> Result<SepDegree> {
    if bound < 2 {
        return Err(Error::DegreeBoundTooSmall(bound as usize));
    }
    let n = f.arity();
    let universe = mask(n);
    if covered_coordinates(f, c) != universe || f.preimage(c).next().is_none() {
        return Ok(SepDegree::All);
    }
    let m = mask(n);
    let mut sets: Vec<u64> = f.preimage(c).map(|a| if c { !a & m } else { a }).collect();
    sets.sort_unstable();
    sets.dedup();
    // a cover never needs more than n members
    for size in 1..=bound.min(n.max(1)) + 1 {
        if covers_within(&sets, universe, size) {
            let degree = size - 1;
            return Ok(if degree < 2 {
                SepDegree::Never
            } else {
                SepDegree::Exactly(degree)
            });
        }
    }
    Ok(SepDegree::AtLeast(bound))
}

fn covers_within(sets: &[u64], uncovered: u64, depth: u32) -> bool {
    if uncovered == 0 {
        return true;
    }
    if depth == 0 {
        return false;
    }
    let j = uncovered.trailing_zeros();
    let mut cands: Vec<u64> = sets
        .iter()
        .filter(|&&s| (s >> j) & 1 == 1)
        .map(|&s| s & uncovered)
        .collect();
    cands.sort_unstable_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
    cands.dedup();
    let Some(widest) = cands.first() else {
        return false;
    };
    if widest.count_ones() * depth < uncovered.count_ones() {
        return false;
    }
    let mut kept: Vec<u64> = Vec::new();
    for c in cands {
        if kept.iter().all(|&k| c & !k != 0) {
            kept.push(c);
        }
    }
    kept.iter()
        .any(|&c| covers_within(sets, uncovered & !c, depth - 1))
}

/// Constant, or `f(x) = ⋀_{i∈S} x_i` (`disjunction = false`) / `⋁_{i∈S} x_i`.
fn is_junction(f: &TruthTable, disjunction: bool) -> bool {
    if f.is_constant().is_some() {
        return true;
    }
    let n = f.arity();
    let ess: u64 = f
        .essential_vars()
        .iter()
        .fold(0, |acc, &j| acc | (1u64 << (n - j)));
    (0..f.rows()).all(|i| {
        let v = if disjunction { i & ess != 0 } else { i & ess == ess };
        f.get(i) == v
    })
}

pub fn property_report(f: &TruthTable, degree_bound: u32) -> Result<PropertyReport> {
    if degree_bound < 2 {
        return Err(Error::DegreeBoundTooSmall(degree_bound as usize));
    }
    let essential = f.essential_vars();
    let sep_degree0 = separation_degree(f, false, degree_bound)?;
    let sep_degree1 = separation_degree(f, true, degree_bound)?;
    let projection_or_constant = match essential.as_slice() {
        [] => true,
        [j] => f.get(1u64 << (f.arity() - j)),
        _ => false,
    };
    Ok(PropertyReport {
        arity: f.arity(),
        reproducing0: is_reproducing(f, false),
        reproducing1: is_reproducing(f, true),
        monotone: is_monotone(f),
        self_dual: is_self_dual(f),
        affine: is_affine(f),
        separating0: sep_degree0 == SepDegree::All,
        separating1: sep_degree1 == SepDegree::All,
        sep_degree0,
        sep_degree1,
        conjunction_like: is_junction(f, false),
        disjunction_like: is_junction(f, true),
        essentially_unary: essential.len() <= 1,
        projection_or_constant,
    })
}
