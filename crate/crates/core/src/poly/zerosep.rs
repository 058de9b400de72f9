//! 0-separating bases: some coordinate `i` forces every assignment with
//! `x_i = 1` to be a solution, so all solutions meet through that half
//! cube with at most two extra steps.

use super::{check_pair, verify_path, EasyAnswer, Rationale};
use crate::boolfn::bits::BitVector;
use crate::boolfn::props::separating_coordinate;
use crate::boolfn::BaseSet;
use crate::error::{Error, Result};
use crate::rep::{formula_to_circuit, Circuit, Instance, Node};

/// Default cap on `n` for the semantic coordinate search.
pub const WITNESS_SEARCH_BUDGET: u32 = 20;

fn require_zero_separating(base: &BaseSet) -> Result<()> {
    match base.iter().find(|(_, f)| separating_coordinate(f, false).is_none()) {
        Some((name, _)) => Err(Error::WrongClass(format!("`{name}` is not 0-separating"))),
        None => Ok(()),
    }
}

enum Chain {
    /// `f = 0` implies `x_i = 0`.
    Input(u32),
    /// The chain hit a gate that is never 0, so `f` is constant 1.
    NeverZero,
    /// Some gate has no 0-separating coordinate.
    Broken,
}

/// Follows 0-separating wires from the output gate: if a gate outputs 0,
/// so does the wire at its separating coordinate.
fn syntactic_chain(c: &Circuit, base: &BaseSet) -> Chain {
    let mut node = c.output();
    loop {
        match &c.nodes()[node] {
            Node::Input(i) => return Chain::Input(*i),
            Node::Gate { func, args } => {
                let Some(f) = base.get(func) else {
                    return Chain::Broken;
                };
                if f.preimage(false).next().is_none() {
                    return Chain::NeverZero;
                }
                match separating_coordinate(f, false) {
                    Some(k) => node = args[k as usize - 1],
                    None => return Chain::Broken,
                }
            }
        }
    }
}

/// Smallest `i` with `x_i = 1 ⟹ obj = 1`, by enumeration.
fn semantic_search(obj: &Instance, base: &BaseSet, n: u32, budget: u32) -> Result<Option<u32>> {
    if n > budget {
        return Ok(None);
    }
    let t = obj.truth_table(base, n, budget)?;
    Ok((1..=n).find(|&i| {
        let bit = 1u64 << (n - i);
        (0..1u64 << n).filter(|w| w & bit != 0).all(|w| t.get(w))
    }))
}

/// A coordinate `i` such that every assignment with `x_i = 1` satisfies
/// `obj`. The syntactic chain is tried first, then enumeration under
/// `budget`.
pub fn zerosep_coordinate(obj: &Instance, base: &BaseSet, n: u32, budget: u32) -> Result<Option<u32>> {
    if n == 0 {
        return Ok(None);
    }
    let circuit = match obj {
        Instance::Formula(f) => Some(formula_to_circuit(f)),
        Instance::Circuit(c) => Some(c.clone()),
        _ => None,
    };
    if let Some(c) = circuit {
        match syntactic_chain(&c, base) {
            Chain::Input(i) if i <= n => return Ok(Some(i)),
            Chain::NeverZero => return Ok(Some(1)),
            _ => {}
        }
    }
    semantic_search(obj, base, n, budget)
}

/// `s → (x_i := 1) → flips in index order → (x_i := 0) → t`.
pub fn detour_path(s: BitVector, t: BitVector, i: u32) -> Vec<BitVector> {
    let mut path = vec![s];
    let mut cur = s;
    if !cur.get(i) && cur != t {
        cur = cur.with(i, true);
        path.push(cur);
    }
    for j in (1..=s.dim()).filter(|&j| j != i) {
        if cur.get(j) != t.get(j) {
            cur = cur.flip(j);
            path.push(cur);
        }
    }
    if cur != t {
        cur = cur.with(i, t.get(i));
        path.push(cur);
    }
    path
}

pub fn zerosep_decide(
    obj: &Instance,
    base: &BaseSet,
    n: u32,
    s: Option<&BitVector>,
    t: Option<&BitVector>,
    search_budget: u32,
) -> Result<EasyAnswer> {
    if obj.is_quantified() {
        return Err(Error::WrongClass(
            "0-separating bases are hard for quantified formulas".into(),
        ));
    }
    require_zero_separating(base)?;
    let mut ans = EasyAnswer::new(true, Rationale::ZeroSeparating { coordinate: None });
    let Some((s, t)) = check_pair(obj, base, n, s, t)? else {
        return Ok(ans);
    };
    ans.st_connected = Some(true);
    if s == t {
        ans.witness_path = Some(vec![s]);
        return Ok(ans);
    }
    match zerosep_coordinate(obj, base, n, search_budget)? {
        Some(i) => {
            let path = detour_path(s, t, i);
            if !verify_path(obj, base, &path)? {
                return Err(Error::Invalid("0-separating witness failed verification".into()));
            }
            ans.rationale = Rationale::ZeroSeparating { coordinate: Some(i) };
            ans.witness_path = Some(path);
        }
        None => ans.witness_withheld = true,
    }
    Ok(ans)
}
