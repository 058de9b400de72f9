//! Induced paths of length `2^{k+1} − 2` in the cube of dimension `2k`.

use crate::boolfn::BitVector;
use crate::error::{Error, Result};
use crate::graph::SolutionSet;

/// Largest supported `k`.
pub const EXPDIAM_MAX_K: u32 = 14;

/// The path `P_k` in order, as words of dimension `2k`.
///
/// `P₀ = [ε]` and `P_{j+1} = [v₁·11, …, v_m·11, v_m·01, v_m·00, v_{m−1}·00, …, v₁·00]`.
pub fn expdiam_words(k: u32) -> Result<Vec<u64>> {
    if k > EXPDIAM_MAX_K {
        return Err(Error::KTooLarge(k));
    }
    let mut path = vec![0u64];
    for _ in 0..k {
        let last = *path.last().expect("nonempty");
        let mut next: Vec<u64> = path.iter().map(|v| (v << 2) | 0b11).collect();
        next.push((last << 2) | 0b01);
        next.extend(path.iter().rev().map(|v| v << 2));
        path = next;
    }
    Ok(path)
}

/// `P_k` as a solution set together with its path order.
pub fn gen_expdiam(k: u32) -> Result<(SolutionSet, Vec<BitVector>)> {
    if k == 0 {
        return Err(Error::Invalid("k must be at least 1".into()));
    }
    let words = expdiam_words(k)?;
    let path = words
        .iter()
        .map(|&w| BitVector::new(2 * k, w))
        .collect::<Result<Vec<_>>>()?;
    Ok((SolutionSet::new(2 * k, words)?, path))
}
