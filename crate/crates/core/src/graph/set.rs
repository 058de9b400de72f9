//! Explicit solution sets, the `.rel` file format, and random relations.

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::boolfn::bits::{mask, word_to_string, BitVector, N_MAX};
use crate::boolfn::{BaseSet, TruthTable};
use crate::error::{Error, Result};
use crate::rep::Instance;

/// Vertices of a solution graph: sorted, distinct `n`-bit words.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SolutionSet {
    n: u32,
    words: Vec<u64>,
}

impl SolutionSet {
    pub fn new(n: u32, mut words: Vec<u64>) -> Result<Self> {
        if n > N_MAX {
            return Err(Error::ArityOverflow {
                got: n,
                max: N_MAX,
            });
        }
        if let Some(&w) = words.iter().find(|&&w| w & !mask(n) != 0) {
            return Err(Error::Invalid(format!("word {w} does not fit in {n} bits")));
        }
        words.sort_unstable();
        words.dedup();
        Ok(Self { n, words })
    }

    pub fn empty(n: u32) -> Self {
        Self { n, words: Vec::new() }
    }

    /// `f⁻¹(1)`.
    pub fn from_table(t: &TruthTable) -> Self {
        Self {
            n: t.arity(),
            words: t.preimage(true).collect(),
        }
    }

    pub fn from_vectors(n: u32, vs: &[BitVector]) -> Result<Self> {
        if let Some(v) = vs.iter().find(|v| v.dim() != n) {
            return Err(Error::LengthMismatch {
                expected: n as usize,
                got: v.dim() as usize,
            });
        }
        Self::new(n, vs.iter().map(BitVector::word).collect())
    }

    pub fn dim(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn index_of(&self, word: u64) -> Option<usize> {
        self.words.binary_search(&word).ok()
    }

    pub fn contains(&self, word: u64) -> bool {
        self.index_of(word).is_some()
    }

    pub fn vector(&self, idx: usize) -> BitVector {
        BitVector::new(self.n, self.words[idx]).expect("stored words fit")
    }

    pub fn vectors(&self) -> impl Iterator<Item = BitVector> + '_ {
        (0..self.len()).map(|i| self.vector(i))
    }

    /// Indices of the Hamming-1 neighbours of vertex `idx`.
    pub fn neighbors(&self, idx: usize) -> impl Iterator<Item = usize> + '_ {
        let w = self.words[idx];
        (0..self.n).filter_map(move |b| self.index_of(w ^ (1 << b)))
    }

    pub fn degree(&self, idx: usize) -> usize {
        self.neighbors(idx).count()
    }

    /// Relabels variables: coordinate `j` of the result is coordinate
    /// `perm[j-1]` of the input.
    pub fn permute(&self, perm: &[u32]) -> Result<Self> {
        if perm.len() != self.n as usize {
            return Err(Error::Invalid("permutation has the wrong length".into()));
        }
        let n = self.n;
        let words = self
            .words
            .iter()
            .map(|&w| {
                perm.iter()
                    .fold(0u64, |acc, &src| (acc << 1) | (w >> (n - src)) & 1)
            })
            .collect();
        Self::new(n, words)
    }

    /// Appends `extra` coordinates holding `pad` to every vertex.
    pub fn extend(&self, extra: u32, pad: u64) -> Result<Self> {
        Self::new(
            self.n + extra,
            self.words.iter().map(|&w| (w << extra) | pad).collect(),
        )
    }

    pub fn parse_rel(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::HeaderMismatch("empty relation file".into()))?;
        let n: u32 = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["n", dim] => dim
                .parse()
                .map_err(|_| Error::HeaderMismatch(format!("bad dimension `{dim}`")))?,
            _ => return Err(Error::HeaderMismatch(format!("expected `n <dim>`, got `{header}`"))),
        };
        let words = lines
            .map(|l| {
                if l.len() != n as usize {
                    return Err(Error::LengthMismatch {
                        expected: n as usize,
                        got: l.len(),
                    });
                }
                Ok(l.parse::<BitVector>()?.word())
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, words)
    }

    pub fn to_rel(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for &w in &self.words {
            out.push_str(&word_to_string(w, self.n));
            out.push('\n');
        }
        out
    }
}

/// `G(obj)` in dimension `n`, refusing `n > budget`.
pub fn enumerate_solutions(obj: &Instance, base: &BaseSet, n: u32, budget: u32) -> Result<SolutionSet> {
    Ok(SolutionSet::from_table(&obj.truth_table(base, n, budget)?))
}

/// `size` distinct words of `{0,1}ⁿ`, uniform without replacement and
/// reproducible per seed.
pub fn random_relation(n: u32, size: usize, seed: u64) -> Result<SolutionSet> {
    if n > N_MAX {
        return Err(Error::ArityOverflow {
            got: n,
            max: N_MAX,
        });
    }
    let space = 1usize << n;
    if size > space {
        return Err(Error::SizeOverflow { n, size });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words = index::sample(&mut rng, space, size)
        .into_iter()
        .map(|i| i as u64)
        .collect();
    SolutionSet::new(n, words)
}
