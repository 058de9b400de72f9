//! Dense truth tables.
//!
//! Row `i` holds `f(a)` for the assignment whose word encoding is `i`, so the
//! row string of `x₁ ∧ x₂` is `0001` and that of `x₁ → x₂` is `1101`.

use std::fmt;

use super::bits::{get_var, mask, BitVector, N_MAX};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TruthTable {
    n: u32,
    blocks: Vec<u64>,
}

fn block_count(n: u32) -> usize {
    if n <= 6 {
        1
    } else {
        1usize << (n - 6)
    }
}

impl TruthTable {
    /// Constant table of arity `n`.
    pub fn constant(n: u32, value: bool) -> Result<Self> {
        check_arity(n)?;
        let fill = if value { u64::MAX } else { 0 };
        let mut t = Self {
            n,
            blocks: vec![fill; block_count(n)],
        };
        t.trim();
        Ok(t)
    }

    pub fn from_fn(n: u32, mut f: impl FnMut(u64) -> bool) -> Result<Self> {
        let mut t = Self::constant(n, false)?;
        for i in 0..t.rows() {
            if f(i) {
                t.set(i, true);
            }
        }
        Ok(t)
    }

    /// Table of arity `n ≤ 6` from its packed row word.
    pub fn from_word(n: u32, word: u64) -> Result<Self> {
        if n > 6 {
            return Err(Error::ArityOverflow { got: n, max: 6 });
        }
        let mut t = Self { n, blocks: vec![word] };
        t.trim();
        Ok(t)
    }

    /// Packed row word of a table of arity `≤ 6`.
    pub fn as_word(&self) -> Option<u64> {
        (self.n <= 6).then(|| self.blocks[0])
    }

    /// Projection `x_j` as an `n`-ary function.
    pub fn projection(n: u32, j: u32) -> Result<Self> {
        if j == 0 || j > n {
            return Err(Error::Invalid(format!("projection x{j} out of range for arity {n}")));
        }
        Self::from_fn(n, |i| get_var(i, n, j))
    }

    /// Threshold function `Tⁿ_k`, or its dual when `dualize` is set.
    pub fn threshold(n: u32, k: u32, dualize: bool) -> Result<Self> {
        if k > n + 1 {
            return Err(Error::BadThreshold { n, k });
        }
        let t = Self::from_fn(n, |i| i.count_ones() >= k)?;
        Ok(if dualize { t.dual() } else { t })
    }

    pub fn arity(&self) -> u32 {
        self.n
    }

    pub fn rows(&self) -> u64 {
        1u64 << self.n
    }

    pub fn get(&self, row: u64) -> bool {
        (self.blocks[(row >> 6) as usize] >> (row & 63)) & 1 == 1
    }

    pub fn set(&mut self, row: u64, value: bool) {
        let b = &mut self.blocks[(row >> 6) as usize];
        if value {
            *b |= 1 << (row & 63);
        } else {
            *b &= !(1 << (row & 63));
        }
    }

    pub(crate) fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    pub(crate) fn from_blocks(n: u32, blocks: Vec<u64>) -> Self {
        debug_assert_eq!(blocks.len(), block_count(n));
        let mut t = Self { n, blocks };
        t.trim();
        t
    }

    fn trim(&mut self) {
        if self.n < 6 {
            self.blocks[0] &= mask(1 << self.n);
        }
    }

    pub fn eval(&self, a: &BitVector) -> Result<bool> {
        if a.dim() != self.n {
            return Err(Error::ArityMismatch {
                name: "truth table".into(),
                got: a.dim() as usize,
                want: self.n as usize,
            });
        }
        Ok(self.get(a.word()))
    }

    pub fn count_ones(&self) -> u64 {
        self.blocks.iter().map(|b| b.count_ones() as u64).sum()
    }

    /// Rows with value `c`, ascending.
    pub fn preimage(&self, c: bool) -> impl Iterator<Item = u64> + '_ {
        (0..self.rows()).filter(move |&i| self.get(i) == c)
    }

    pub fn is_constant(&self) -> Option<bool> {
        match self.count_ones() {
            0 => Some(false),
            x if x == self.rows() => Some(true),
            _ => None,
        }
    }

    pub fn negate(&self) -> Self {
        Self::from_blocks(self.n, self.blocks.iter().map(|b| !b).collect())
    }

    /// `dual(f)(x) = ¬f(¬x)`.
    pub fn dual(&self) -> Self {
        let top = self.rows() - 1;
        let mut out = Self::constant(self.n, false).expect("arity already validated");
        for i in 0..self.rows() {
            if !self.get(top ^ i) {
                out.set(i, true);
            }
        }
        out
    }

    /// Whether the function depends on `x_j`.
    pub fn depends_on(&self, j: u32) -> bool {
        let bit = 1u64 << (self.n - j);
        (0..self.rows())
            .filter(|i| i & bit == 0)
            .any(|i| self.get(i) != self.get(i | bit))
    }

    /// Indices of the non-fictive variables, ascending.
    pub fn essential_vars(&self) -> Vec<u32> {
        (1..=self.n).filter(|&j| self.depends_on(j)).collect()
    }

    /// Re-reads the table with `map[j-1]` as the new index of `x_j` in a
    /// table of arity `new_n`; variables of `new_n` not hit by `map` are fictive.
    pub fn remap(&self, new_n: u32, map: &[u32]) -> Result<Self> {
        if map.len() != self.n as usize {
            return Err(Error::Invalid("variable map has the wrong length".into()));
        }
        Self::from_fn(new_n, |i| {
            let row = map
                .iter()
                .fold(0u64, |acc, &j| (acc << 1) | get_var(i, new_n, j) as u64);
            self.get(row)
        })
    }
}

fn check_arity(n: u32) -> Result<()> {
    if n > N_MAX {
        Err(Error::ArityOverflow { got: n, max: N_MAX })
    } else {
        Ok(())
    }
}

/// Parses a row string of length `2ⁿ`.
pub fn tt_parse(text: &str, n: u32) -> Result<TruthTable> {
    check_arity(n)?;
    let expected = 1usize << n;
    let got = text.chars().count();
    if got != expected {
        return Err(Error::LengthMismatch { expected, got });
    }
    let mut t = TruthTable::constant(n, false)?;
    for (pos, ch) in text.chars().enumerate() {
        match ch {
            '0' => {}
            '1' => t.set(pos as u64, true),
            _ => return Err(Error::BadCharacter { ch, pos }),
        }
    }
    Ok(t)
}

pub fn tt_print(t: &TruthTable) -> String {
    (0..t.rows()).map(|i| if t.get(i) { '1' } else { '0' }).collect()
}

pub fn tt_eval(t: &TruthTable, a: &BitVector) -> Result<bool> {
    t.eval(a)
}

pub fn threshold_tt(n: u32, k: u32, dualize: bool) -> Result<TruthTable> {
    TruthTable::threshold(n, k, dualize)
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n <= 10 {
            f.write_str(&tt_print(self))
        } else {
            write!(f, "<{}-ary table, {} ones>", self.n, self.count_ones())
        }
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthTable({}, {})", self.n, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        let and = tt_parse("0001", 2).unwrap();
        assert!(and.get(0b11));
        assert_eq!(and.count_ones(), 1);
        let imp = tt_parse("1101", 2).unwrap();
        assert!(!tt_eval(&imp, &"10".parse().unwrap()).unwrap());
        assert!(tt_eval(&and, &"11".parse().unwrap()).unwrap());
        assert!(!tt_eval(&and, &"10".parse().unwrap()).unwrap());
        let xor = tt_parse("0110", 2).unwrap();
        assert!(xor.get(0b01) && xor.get(0b10) && !xor.get(0b11));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            tt_parse("000", 2),
            Err(Error::LengthMismatch { expected: 4, got: 3 })
        );
        assert_eq!(
            tt_parse("00x1", 2),
            Err(Error::BadCharacter { ch: 'x', pos: 2 })
        );
        assert!(tt_eval(&tt_parse("01", 1).unwrap(), &"11".parse().unwrap()).is_err());
    }

    #[test]
    fn thresholds() {
        assert_eq!(tt_print(&threshold_tt(3, 2, false).unwrap()), "00010111");
        assert_eq!(tt_print(&threshold_tt(2, 2, false).unwrap()), "0001");
        assert_eq!(tt_print(&threshold_tt(1, 1, true).unwrap()), "01");
        assert!(threshold_tt(2, 4, false).is_err());
        assert_eq!(tt_print(&threshold_tt(2, 3, false).unwrap()), "0000");
    }

    #[test]
    fn essential_and_remap() {
        let and = tt_parse("0001", 2).unwrap();
        let lifted = and.remap(3, &[1, 3]).unwrap();
        assert_eq!(tt_print(&lifted), "00000101");
        assert_eq!(lifted.essential_vars(), vec![1, 3]);
    }

    #[test]
    fn large_tables_use_blocks() {
        let t = TruthTable::threshold(8, 8, false).unwrap();
        assert_eq!(t.count_ones(), 1);
        assert!(t.get(255));
        assert_eq!(t.dual().count_ones(), 255);
    }

    proptest! {
        #[test]
        fn print_inverts_parse(n in 0u32..=10, seed in any::<u64>()) {
            let rows = 1usize << n;
            let s: String = (0..rows)
                .map(|i| if (seed.rotate_left(i as u32 % 64) ^ (i as u64 * 0x9e37)) & 1 == 1 { '1' } else { '0' })
                .collect();
            let t = tt_parse(&s, n).unwrap();
            prop_assert_eq!(tt_print(&t), s);
        }

        #[test]
        fn dual_is_an_involution(n in 0u32..=5, word in any::<u64>()) {
            let t = TruthTable::from_word(n, word).unwrap();
            prop_assert_eq!(t.dual().dual(), t);
        }
    }
}
