//! Quantified B-formulas in prenex form: `A x3 E x4 : and(x1,or(x3,x4))`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::formula::{as_variable, parse_expr, Formula, Parser};
use crate::boolfn::bits::{get_var, BitVector};
use crate::boolfn::BaseSet;
use crate::error::{Error, Result};

/// Default cap on quantified variables for expansion.
pub const EXPANSION_BUDGET: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Quantifier {
    Exists,
    Forall,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantifiedFormula {
    prefix: Vec<(Quantifier, u32)>,
    matrix: Formula,
}

impl QuantifiedFormula {
    pub fn new(prefix: Vec<(Quantifier, u32)>, matrix: Formula) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &(_, v) in &prefix {
            if v == 0 {
                return Err(Error::Invalid("variable index 0".into()));
            }
            if !seen.insert(v) {
                return Err(Error::DuplicateName(format!("x{v}")));
            }
        }
        Ok(Self { prefix, matrix })
    }

    pub fn unquantified(matrix: Formula) -> Self {
        Self {
            prefix: Vec::new(),
            matrix,
        }
    }

    pub fn prefix(&self) -> &[(Quantifier, u32)] {
        &self.prefix
    }

    pub fn matrix(&self) -> &Formula {
        &self.matrix
    }

    pub fn bound_vars(&self) -> BTreeSet<u32> {
        self.prefix.iter().map(|&(_, v)| v).collect()
    }

    /// Free variables in index order: matrix variables not bound by the
    /// prefix.
    pub fn free_vars(&self) -> Vec<u32> {
        let bound = self.bound_vars();
        self.matrix.vars().into_iter().filter(|v| !bound.contains(v)).collect()
    }

    /// The free variables padded with the smallest unused indices until
    /// there are `dim` of them; the extra ones are fictive.
    pub fn free_vars_padded(&self, dim: u32) -> Result<Vec<u32>> {
        let mut free = self.free_vars();
        if (dim as usize) < free.len() {
            return Err(Error::Invalid(format!(
                "dimension {dim} is below the {} free variables",
                free.len()
            )));
        }
        let bound = self.bound_vars();
        let mut next = 1;
        while free.len() < dim as usize {
            if !bound.contains(&next) && !free.contains(&next) {
                free.push(next);
            }
            next += 1;
        }
        free.sort_unstable();
        Ok(free)
    }

    /// Evaluates by recursive expansion, leftmost quantifier outermost.
    /// `free` assigns the (padded) free variables in index order.
    pub fn eval(&self, base: &BaseSet, free: &BitVector) -> Result<bool> {
        let vars = self.free_vars_padded(free.dim())?;
        self.eval_word(base, free.word(), &vars)
    }

    pub(crate) fn eval_word(&self, base: &BaseSet, free: u64, vars: &[u32]) -> Result<bool> {
        if self.prefix.len() > EXPANSION_BUDGET {
            return Err(Error::BudgetExceeded(format!(
                "{} quantified variables exceed the expansion budget of {EXPANSION_BUDGET}",
                self.prefix.len()
            )));
        }
        let total = namespace(self, vars);
        if total == 0 {
            return self.matrix.eval_word(base, 0, 0);
        }
        let k = vars.len() as u32;
        let mut word = 0u64;
        for (p, &v) in vars.iter().enumerate() {
            if get_var(free, k, p as u32 + 1) {
                word |= 1 << (total - v);
            }
        }
        self.expand(base, 0, word, total)
    }

    fn expand(&self, base: &BaseSet, depth: usize, word: u64, total: u32) -> Result<bool> {
        let Some(&(q, v)) = self.prefix.get(depth) else {
            return self.matrix.eval_word(base, word, total);
        };
        let bit = 1u64 << (total - v);
        let lo = self.expand(base, depth + 1, word & !bit, total)?;
        match (q, lo) {
            (Quantifier::Exists, true) => Ok(true),
            (Quantifier::Forall, false) => Ok(false),
            _ => self.expand(base, depth + 1, word | bit, total),
        }
    }
}

/// Largest variable index in play: matrix, prefix, or padded free list.
pub(crate) fn namespace(q: &QuantifiedFormula, vars: &[u32]) -> u32 {
    let bound_max = q.prefix.iter().map(|&(_, v)| v).max().unwrap_or(0);
    let free_max = vars.iter().copied().max().unwrap_or(0);
    q.matrix.max_var().max(bound_max).max(free_max)
}

impl fmt::Display for QuantifiedFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (q, v) in &self.prefix {
            let c = match q {
                Quantifier::Exists => 'E',
                Quantifier::Forall => 'A',
            };
            write!(f, "{c} x{v} ")?;
        }
        if !self.prefix.is_empty() {
            f.write_str(": ")?;
        }
        write!(f, "{}", self.matrix)
    }
}

/// Parses `Q xN … : matrix`; a bare formula gets the empty prefix.
pub fn parse_qbf(text: &str, base: &BaseSet) -> Result<QuantifiedFormula> {
    let mut p = Parser::new(text);
    let mut prefix = Vec::new();
    loop {
        let save = p.pos;
        let q = match p.peek() {
            Some(b'A') => Quantifier::Forall,
            Some(b'E') => Quantifier::Exists,
            Some(b':') => {
                p.pos += 1;
                break;
            }
            _ if prefix.is_empty() => break,
            _ => return Err(p.error("expected a quantifier or `:`")),
        };
        let (_, tok) = p.ident()?;
        if tok.len() != 1 {
            p.pos = save;
            return Err(p.error(format!("bad quantifier `{tok}`")));
        }
        let (start, var) = p.ident()?;
        let v = as_variable(var).ok_or(Error::SyntaxError {
            pos: start,
            msg: format!("expected a variable after the quantifier, got `{var}`"),
        })?;
        prefix.push((q, v));
    }
    let matrix = parse_expr(&mut p, base)?;
    if !p.at_end() {
        return Err(p.error("trailing input"));
    }
    QuantifiedFormula::new(prefix, matrix)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base() -> BaseSet {
        BaseSet::from_rows(&[("and", "0001"), ("or", "0111"), ("xor", "0110")]).unwrap()
    }

    fn eval1(text: &str, x1: bool) -> bool {
        let b = base();
        let q = parse_qbf(text, &b).unwrap();
        q.eval(&b, &BitVector::from_bits(&[x1]).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        assert!(eval1("E x2 : and(x1,x2)", true));
        assert!(!eval1("A x2 : xor(x1,x2)", false));
        assert!(!eval1("A x2 : or(x1,x2)", false));
        assert!(eval1("A x2 : or(x1,x2)", true));
    }

    #[test]
    fn syntax() {
        let b = base();
        let q = parse_qbf("A x3 E x4 : and(x1,or(x3,x4))", &b).unwrap();
        assert_eq!(q.prefix(), &[(Quantifier::Forall, 3), (Quantifier::Exists, 4)]);
        assert_eq!(q.free_vars(), vec![1]);
        assert_eq!(q.free_vars_padded(3).unwrap(), vec![1, 2, 5]);
        assert_eq!(q.to_string(), "A x3 E x4 : and(x1,or(x3,x4))");
        assert_eq!(parse_qbf(&q.to_string(), &b).unwrap(), q);
        assert!(parse_qbf("and(x1,x2)", &b).unwrap().prefix().is_empty());
        assert!(matches!(parse_qbf("A x1 A x1 : x1", &b), Err(Error::DuplicateName(_))));
        assert!(matches!(parse_qbf("A and : x1", &b), Err(Error::SyntaxError { .. })));
        assert!(matches!(parse_qbf("A x1 and(x1,x1)", &b), Err(Error::SyntaxError { .. })));
    }

    #[test]
    fn empty_prefix_is_matrix() {
        let b = base();
        let q = parse_qbf("xor(x1,x2)", &b).unwrap();
        for w in 0..4 {
            let a = BitVector::new(2, w).unwrap();
            assert_eq!(q.eval(&b, &a).unwrap(), q.matrix().eval(&b, &a).unwrap());
        }
    }
}
