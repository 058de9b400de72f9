//! `[B]` restricted to a fixed arity, by fixpoint iteration over
//! superpositions.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::base::BaseSet;
use super::bits::mask;
use super::table::TruthTable;
use crate::error::{Error, Result};

/// Largest arity handled by the packed-word routines.
pub const WORD_ARITY: u32 = 6;

/// Row mask for packed tables of arity `a`.
pub fn row_mask(a: u32) -> u64 {
    mask(1 << a)
}

/// Packed table of `x_j` at arity `a ≤ 6`.
pub fn projection_word(a: u32, j: u32) -> u64 {
    (0..1u64 << a)
        .filter(|&i| (i >> (a - j)) & 1 == 1)
        .fold(0, |acc, i| acc | (1 << i))
}

/// `f(t₁,…,t_k)` on packed tables: the OR over the minterms of `f`.
pub fn compose_words(f: &TruthTable, args: &[u64], a: u32) -> u64 {
    let k = f.arity();
    debug_assert_eq!(args.len(), k as usize);
    let rows = row_mask(a);
    let mut out = 0u64;
    for r in 0..f.rows() {
        if !f.get(r) {
            continue;
        }
        let mut term = rows;
        for (p, &t) in args.iter().enumerate() {
            let bit = (r >> (k - 1 - p as u32)) & 1 == 1;
            term &= if bit { t } else { !t };
            if term == 0 {
                break;
            }
        }
        out |= term;
    }
    out & rows
}

/// Calls `visit` on every `k`-tuple over `all` that has at least one entry
/// from `fresh`. `old` must be `all` minus `fresh`.
pub(crate) fn for_each_fresh_tuple(
    k: usize,
    old: &[u64],
    fresh: &[u64],
    all: &[u64],
    mut visit: impl FnMut(&[u64]) -> bool,
) -> bool {
    let mut tuple = vec![0u64; k];
    for first_fresh in 0..k {
        let pools: Vec<&[u64]> = (0..k)
            .map(|p| match p.cmp(&first_fresh) {
                std::cmp::Ordering::Less => old,
                std::cmp::Ordering::Equal => fresh,
                std::cmp::Ordering::Greater => all,
            })
            .collect();
        if pools.iter().any(|p| p.is_empty()) {
            continue;
        }
        let mut idx = vec![0usize; k];
        'odometer: loop {
            for p in 0..k {
                tuple[p] = pools[p][idx[p]];
            }
            if !visit(&tuple) {
                return false;
            }
            let mut p = k;
            loop {
                if p == 0 {
                    break 'odometer;
                }
                p -= 1;
                idx[p] += 1;
                if idx[p] < pools[p].len() {
                    continue 'odometer;
                }
                idx[p] = 0;
            }
        }
    }
    true
}

/// All `a`-ary functions of `[B]`, or `BudgetExceeded` once more than
/// `budget` tables appear. No partial result is returned.
pub fn clone_closure(base: &BaseSet, a: u32, budget: usize) -> Result<BTreeSet<TruthTable>> {
    if a > WORD_ARITY {
        return Err(Error::Unsupported(format!(
            "closure above arity {WORD_ARITY}"
        )));
    }
    let rows = row_mask(a);
    let mut seen: BTreeSet<u64> = (1..=a).map(|j| projection_word(a, j)).collect();
    for f in base.tables().filter(|f| f.arity() == 0) {
        seen.insert(if f.get(0) { rows } else { 0 });
    }
    let mut fresh: Vec<u64> = seen.iter().copied().collect();
    let functions: Vec<&TruthTable> = base.tables().filter(|f| f.arity() > 0).collect();
    while !fresh.is_empty() {
        if seen.len() > budget {
            return Err(Error::BudgetExceeded(format!("closure exceeds {budget} tables")));
        }
        let all: Vec<u64> = seen.iter().copied().collect();
        let fresh_set: BTreeSet<u64> = fresh.iter().copied().collect();
        let old: Vec<u64> = all.iter().copied().filter(|t| !fresh_set.contains(t)).collect();
        let produced: BTreeSet<u64> = functions
            .par_iter()
            .map(|f| {
                let mut local = BTreeSet::new();
                for_each_fresh_tuple(f.arity() as usize, &old, &fresh, &all, |args| {
                    local.insert(compose_words(f, args, a));
                    true
                });
                local
            })
            .reduce(BTreeSet::new, |mut x, y| {
                x.extend(y);
                x
            });
        fresh = produced.into_iter().filter(|t| !seen.contains(t)).collect();
        seen.extend(fresh.iter().copied());
    }
    if seen.len() > budget {
        return Err(Error::BudgetExceeded(format!("closure exceeds {budget} tables")));
    }
    seen.into_iter()
        .map(|w| TruthTable::from_word(a, w))
        .collect()
}
