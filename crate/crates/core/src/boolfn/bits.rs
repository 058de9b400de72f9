//! Assignments to `x₁…xₙ` packed into a machine word.
//!
//! The word encoding is the row index of a truth table: `x₁` is the most
//! significant of the `n` low bits, `xₙ` the least significant.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest dimension accepted anywhere in the library.
pub const N_MAX: u32 = 30;

/// An assignment `a₁…aₙ` with `1 ≤ n ≤ N_MAX`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    n: u32,
    word: u64,
}

impl BitVector {
    pub fn new(n: u32, word: u64) -> Result<Self> {
        if n == 0 || n > N_MAX {
            return Err(Error::ArityOverflow { got: n, max: N_MAX });
        }
        if word >> n != 0 {
            return Err(Error::Invalid(format!("word {word:#x} has bits above dimension {n}")));
        }
        Ok(Self { n, word })
    }

    /// Builds a vector from `bits[j-1] = a_j`.
    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        let word = bits.iter().fold(0u64, |acc, &b| (acc << 1) | b as u64);
        Self::new(bits.len() as u32, word)
    }

    pub fn ones(n: u32) -> Result<Self> {
        Self::new(n, mask(n))
    }

    pub fn zeros(n: u32) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn dim(&self) -> u32 {
        self.n
    }

    pub fn word(&self) -> u64 {
        self.word
    }

    /// Value of `x_j`, 1-based.
    pub fn get(&self, j: u32) -> bool {
        debug_assert!(j >= 1 && j <= self.n);
        get_var(self.word, self.n, j)
    }

    pub fn with(&self, j: u32, value: bool) -> Self {
        let bit = var_bit(self.n, j);
        let word = if value { self.word | bit } else { self.word & !bit };
        Self { n: self.n, word }
    }

    pub fn flip(&self, j: u32) -> Self {
        Self {
            n: self.n,
            word: self.word ^ var_bit(self.n, j),
        }
    }

    pub fn weight(&self) -> u32 {
        self.word.count_ones()
    }

    pub fn hamming(&self, other: &Self) -> u32 {
        (self.word ^ other.word).count_ones()
    }

    pub fn complement(&self) -> Self {
        Self {
            n: self.n,
            word: !self.word & mask(self.n),
        }
    }
}

/// Bit mask of the `n` low bits.
pub fn mask(n: u32) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Single-bit mask for variable `x_j` in dimension `n`.
pub fn var_bit(n: u32, j: u32) -> u64 {
    1u64 << (n - j)
}

pub fn get_var(word: u64, n: u32, j: u32) -> bool {
    (word >> (n - j)) & 1 == 1
}

/// Renders the low `n` bits of `word` as `x₁…xₙ`.
pub fn word_to_string(word: u64, n: u32) -> String {
    (1..=n)
        .map(|j| if get_var(word, n, j) { '1' } else { '0' })
        .collect()
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&word_to_string(self.word, self.n))
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

/// Serialized as its bitstring, `x₁` first.
impl serde::Serialize for BitVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut word = 0u64;
        let mut n = 0u32;
        for (pos, ch) in s.chars().enumerate() {
            let b = match ch {
                '0' => 0,
                '1' => 1,
                _ => return Err(Error::BadCharacter { ch, pos }),
            };
            n += 1;
            if n > N_MAX {
                return Err(Error::ArityOverflow { got: n, max: N_MAX });
            }
            word = (word << 1) | b;
        }
        Self::new(n, word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn textual_form_is_x1_first() {
        let v: BitVector = "100".parse().unwrap();
        assert_eq!(v.word(), 0b100);
        assert!(v.get(1));
        assert!(!v.get(3));
        assert_eq!(v.to_string(), "100");
        assert_eq!(v.flip(3).to_string(), "101");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            "10a".parse::<BitVector>(),
            Err(Error::BadCharacter { ch: 'a', pos: 2 })
        ));
        assert!("".parse::<BitVector>().is_err());
        assert!(BitVector::new(2, 0b100).is_err());
        assert!(BitVector::new(31, 0).is_err());
    }

    #[test]
    fn hamming_and_weight() {
        let a: BitVector = "0110".parse().unwrap();
        let b: BitVector = "1100".parse().unwrap();
        assert_eq!(a.hamming(&b), 2);
        assert_eq!(a.weight(), 2);
        assert_eq!(a.complement().to_string(), "1001");
    }
}
