//! Polynomial connectivity answers for the easy bases: monotone, linear,
//! and 0-separating (unquantified), and monotone or linear (quantified).

pub mod linear;
pub mod monotone;
pub mod quantified;
pub mod zerosep;

use serde::Serialize;

use crate::boolfn::bits::BitVector;
use crate::boolfn::{dispatch, BaseSet, EasyClass, DEFAULT_DEGREE_BOUND};
use crate::error::{Error, Result};
use crate::rep::Instance;

pub use linear::{linear_decide, linear_form_of};
pub use monotone::monotone_decide;
pub use quantified::qbf_easy_decide;
pub use zerosep::{zerosep_decide, zerosep_coordinate, WITNESS_SEARCH_BUDGET};

/// Why the answer holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Rationale {
    /// Every solution pair is joined by a path of Hamming length.
    Monotone,
    /// Fixing `x_coordinate = 1` forces a solution; `None` when the
    /// coordinate search was skipped or over budget.
    ZeroSeparating { coordinate: Option<u32> },
    /// The function is `⊕ support ⊕ constant`.
    Linear { support: Vec<u32>, constant: bool },
    /// Quantified linear formula whose rightmost remaining quantifier
    /// is `∃`.
    Tautology,
    /// Quantified linear formula whose rightmost remaining quantifier
    /// is `∀`.
    Unsatisfiable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EasyAnswer {
    pub connected: bool,
    pub st_connected: Option<bool>,
    pub witness_path: Option<Vec<BitVector>>,
    pub rationale: Rationale,
    /// Set when a path exists but the witness search hit its budget.
    pub witness_withheld: bool,
}

impl EasyAnswer {
    pub(crate) fn new(connected: bool, rationale: Rationale) -> Self {
        Self {
            connected,
            st_connected: None,
            witness_path: None,
            rationale,
            witness_withheld: false,
        }
    }

    /// st-connectivity of two solutions as fixed by the rationale alone:
    /// linear solutions must agree on the support, every other easy class
    /// joins all pairs. `s` and `t` are assumed to be solutions.
    pub fn st_verdict(&self, s: &BitVector, t: &BitVector) -> bool {
        match &self.rationale {
            Rationale::Linear { support, .. } => support.iter().all(|&j| s.get(j) == t.get(j)),
            _ => true,
        }
    }
}

/// Checks that `s` and `t` are given together, have dimension `n`, and
/// satisfy `obj`.
pub(crate) fn check_pair(
    obj: &Instance,
    base: &BaseSet,
    n: u32,
    s: Option<&BitVector>,
    t: Option<&BitVector>,
) -> Result<Option<(BitVector, BitVector)>> {
    let (s, t) = match (s, t) {
        (None, None) => return Ok(None),
        (Some(s), Some(t)) => (*s, *t),
        _ => return Err(Error::Invalid("s and t must be given together".into())),
    };
    for (v, which) in [(s, "s"), (t, "t")] {
        if v.dim() != n {
            return Err(Error::LengthMismatch {
                expected: n as usize,
                got: v.dim() as usize,
            });
        }
        if !obj.eval(base, &v)? {
            return Err(Error::NotASolution(format!("{which} = {v}")));
        }
    }
    Ok(Some((s, t)))
}

/// Every vertex a solution, every step one flip.
pub fn verify_path(obj: &Instance, base: &BaseSet, path: &[BitVector]) -> Result<bool> {
    for v in path {
        if !obj.eval(base, v)? {
            return Ok(false);
        }
    }
    Ok(path.windows(2).all(|w| w[0].hamming(&w[1]) == 1))
}

/// Flips the positions where `from` and `to` differ, in `order`.
pub(crate) fn flip_path(from: BitVector, to: BitVector, order: impl IntoIterator<Item = u32>) -> Vec<BitVector> {
    let mut path = vec![from];
    let mut cur = from;
    for j in order {
        if cur.get(j) != to.get(j) {
            cur = cur.flip(j);
            path.push(cur);
        }
    }
    path
}

/// Runs the algorithm matching the base's easy class.
pub fn easy_decide(
    obj: &Instance,
    base: &BaseSet,
    n: u32,
    s: Option<&BitVector>,
    t: Option<&BitVector>,
) -> Result<EasyAnswer> {
    let verdict = dispatch(base, obj.is_quantified(), DEFAULT_DEGREE_BOUND)?;
    let class = verdict
        .easy_class()
        .ok_or_else(|| Error::WrongClass(format!("dispatch says {verdict}")))?;
    if let Instance::Quantified(q) = obj {
        return qbf_easy_decide(q, base, n, s, t);
    }
    match class {
        EasyClass::Monotone => monotone_decide(obj, base, n, s, t),
        EasyClass::Linear => linear_decide(obj, base, n, s, t),
        EasyClass::ZeroSeparating => zerosep_decide(obj, base, n, s, t, WITNESS_SEARCH_BUDGET),
    }
}
