//! DIMACS CNF formulas.

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::formula::Formula;
use crate::boolfn::bits::get_var;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: u32,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(num_vars: u32, clauses: Vec<Vec<i32>>) -> Result<Self> {
        for clause in &clauses {
            if clause.is_empty() {
                return Err(Error::EmptyClause);
            }
            for &lit in clause {
                if lit == 0 || lit.unsigned_abs() > num_vars {
                    return Err(Error::LiteralOutOfRange {
                        lit: lit as i64,
                        vars: num_vars,
                    });
                }
            }
        }
        Ok(Self { num_vars, clauses })
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    pub fn is_3cnf(&self) -> bool {
        self.clauses.iter().all(|c| c.len() <= 3)
    }

    pub fn eval_word(&self, word: u64, n: u32) -> Result<bool> {
        if self.num_vars > n {
            return Err(Error::MissingVariable(self.num_vars));
        }
        Ok(self.clauses.iter().all(|c| {
            c.iter()
                .any(|&lit| get_var(word, n, lit.unsigned_abs()) == (lit > 0))
        }))
    }

    /// Rendering over the standard base `{not, and, or}`, clauses folded
    /// left to right.
    pub fn to_formula(&self) -> Result<Formula> {
        let literal = |lit: i32| {
            let v = Formula::Var(lit.unsigned_abs());
            if lit > 0 {
                v
            } else {
                Formula::apply("not", vec![v])
            }
        };
        let fold = |op: &str, items: Vec<Formula>| {
            items
                .into_iter()
                .reduce(|acc, f| Formula::apply(op, vec![acc, f]))
        };
        let clauses: Vec<Formula> = self
            .clauses
            .iter()
            .map(|c| fold("or", c.iter().map(|&l| literal(l)).collect()).expect("nonempty clause"))
            .collect();
        fold("and", clauses)
            .ok_or_else(|| Error::Unsupported("an empty CNF has no rendering without constants".into()))
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            for lit in c {
                write!(out, "{lit} ").unwrap();
            }
            out.push_str("0\n");
        }
        out
    }
}

pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(u32, usize)> = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(Error::HeaderMismatch("second problem line".into()));
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parsed = match fields.as_slice() {
                ["p", "cnf", n, m] => n.parse().ok().zip(m.parse().ok()),
                _ => None,
            };
            header = Some(parsed.ok_or_else(|| {
                Error::HeaderMismatch(format!("expected `p cnf <vars> <clauses>`, got `{line}`"))
            })?);
            continue;
        }
        let (n, _) = header.ok_or_else(|| Error::HeaderMismatch("clause before header".into()))?;
        for tok in line.split_whitespace() {
            let lit: i64 = tok
                .parse()
                .map_err(|_| Error::HeaderMismatch(format!("bad literal `{tok}`")))?;
            if lit == 0 {
                if current.is_empty() {
                    return Err(Error::EmptyClause);
                }
                clauses.push(std::mem::take(&mut current));
            } else if lit.unsigned_abs() > n as u64 {
                return Err(Error::LiteralOutOfRange { lit, vars: n });
            } else {
                current.push(lit as i32);
            }
        }
    }
    let (n, m) = header.ok_or_else(|| Error::HeaderMismatch("missing header".into()))?;
    if !current.is_empty() {
        clauses.push(current);
    }
    if clauses.len() != m {
        return Err(Error::HeaderMismatch(format!(
            "header declares {m} clauses, found {}",
            clauses.len()
        )));
    }
    CnfFormula::new(n, clauses)
}

/// `m` random clauses of width `min(3, n)` over distinct variables,
/// reproducible per seed. Every variable occurs when `3m ≥ n`. With
/// `one_reproducing` each clause gets at least one positive literal.
pub fn random_3cnf(n: u32, m: usize, seed: u64, one_reproducing: bool) -> Result<CnfFormula> {
    if n == 0 {
        return Err(Error::Invalid("a CNF needs at least one variable".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let width = n.min(3) as usize;
    let mut order: Vec<u32> = (1..=n).collect();
    order.shuffle(&mut rng);
    let clauses = (0..m)
        .map(|c| {
            let mut vars: Vec<u32> = order.iter().skip(c * width).take(width).copied().collect();
            while vars.len() < width {
                let v = rng.gen_range(1..=n);
                if !vars.contains(&v) {
                    vars.push(v);
                }
            }
            let mut clause: Vec<i32> = vars
                .iter()
                .map(|&v| if rng.gen_bool(0.5) { v as i32 } else { -(v as i32) })
                .collect();
            if one_reproducing && clause.iter().all(|&l| l < 0) {
                let p = rng.gen_range(0..clause.len());
                clause[p] = -clause[p];
            }
            clause
        })
        .collect();
    CnfFormula::new(n, clauses)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::BaseSet;

    #[test]
    fn parses_examples() {
        let f = parse_dimacs("c demo\np cnf 2 2\n1 2 0\n-1 2 0\n").unwrap();
        assert_eq!(f.clauses(), &[vec![1, 2], vec![-1, 2]]);
        assert!(f.is_3cnf());
        let g = parse_dimacs("p cnf 1 1\n-1 0\n").unwrap();
        assert_eq!(g.clauses(), &[vec![-1]]);
        assert_eq!(parse_dimacs(&f.to_dimacs()).unwrap(), f);
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_dimacs("p cnf 2 1\n1 -3 0\n"),
            Err(Error::LiteralOutOfRange { lit: -3, vars: 2 })
        );
        assert_eq!(parse_dimacs("p cnf 2 1\n0\n"), Err(Error::EmptyClause));
        assert!(matches!(parse_dimacs("p dnf 2 1\n1 0\n"), Err(Error::HeaderMismatch(_))));
        assert!(matches!(parse_dimacs("p cnf 2 2\n1 0\n"), Err(Error::HeaderMismatch(_))));
    }

    #[test]
    fn rendering_agrees() {
        let f = parse_dimacs("p cnf 3 3\n1 -2 3 0\n-1 0\n2 3 0\n").unwrap();
        let std = BaseSet::standard();
        let g = f.to_formula().unwrap();
        for w in 0..8 {
            assert_eq!(f.eval_word(w, 3).unwrap(), g.eval_word(&std, w, 3).unwrap());
        }
    }

    #[test]
    fn random_cnfs() {
        let a = random_3cnf(6, 5, 7, true).unwrap();
        assert_eq!(a, random_3cnf(6, 5, 7, true).unwrap());
        assert!(a.is_3cnf());
        assert!(a.eval_word(0b111111, 6).unwrap());
        let used: std::collections::BTreeSet<u32> =
            a.clauses().iter().flatten().map(|l| l.unsigned_abs()).collect();
        assert_eq!(used.len(), 6);
        assert!(a.clauses().iter().all(|c| c.len() == 3));
        assert_eq!(random_3cnf(2, 3, 1, false).unwrap().clauses()[0].len(), 2);
    }
}
