//! B-formulas: syntax tree, parser, printer, and point evaluation.
//!
//! Grammar (whitespace-insensitive, `#` starts a comment):
//!
//! ```text
//! expr := 'x' [1-9][0-9]*
//!       | name '(' expr { ',' expr } ')'
//!       | name                       -- arity-0 function
//! ```

use std::collections::BTreeSet;
use std::fmt;

use crate::boolfn::bits::{get_var, BitVector};
use crate::boolfn::{BaseSet, TruthTable};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    /// `x_i`, `i ≥ 1`.
    Var(u32),
    Apply(String, Vec<Formula>),
}

impl Formula {
    pub fn var(i: u32) -> Self {
        Formula::Var(i)
    }

    pub fn apply(name: impl Into<String>, args: Vec<Formula>) -> Self {
        Formula::Apply(name.into(), args)
    }

    /// Largest variable index, 0 for a closed formula.
    pub fn max_var(&self) -> u32 {
        match self {
            Formula::Var(i) => *i,
            Formula::Apply(_, args) => args.iter().map(Formula::max_var).max().unwrap_or(0),
        }
    }

    pub fn vars(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<u32>) {
        match self {
            Formula::Var(i) => {
                out.insert(*i);
            }
            Formula::Apply(_, args) => args.iter().for_each(|a| a.collect_vars(out)),
        }
    }

    /// Node count: variables plus function occurrences.
    pub fn size(&self) -> usize {
        match self {
            Formula::Var(_) => 1,
            Formula::Apply(_, args) => 1 + args.iter().map(Formula::size).sum::<usize>(),
        }
    }

    /// Number of function occurrences.
    pub fn applications(&self) -> usize {
        match self {
            Formula::Var(_) => 0,
            Formula::Apply(_, args) => 1 + args.iter().map(Formula::applications).sum::<usize>(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Var(_) => 0,
            Formula::Apply(_, args) => 1 + args.iter().map(Formula::depth).max().unwrap_or(0),
        }
    }

    /// Replaces every `x_i` by `subst(i)`.
    pub fn substitute(&self, subst: &impl Fn(u32) -> Formula) -> Formula {
        match self {
            Formula::Var(i) => subst(*i),
            Formula::Apply(name, args) => Formula::Apply(
                name.clone(),
                args.iter().map(|a| a.substitute(subst)).collect(),
            ),
        }
    }

    /// Renames function symbols.
    pub fn rename(&self, map: &impl Fn(&str) -> String) -> Formula {
        match self {
            Formula::Var(i) => Formula::Var(*i),
            Formula::Apply(name, args) => {
                Formula::Apply(map(name), args.iter().map(|a| a.rename(map)).collect())
            }
        }
    }

    /// Checks every application against the base.
    pub fn validate(&self, base: &BaseSet) -> Result<()> {
        match self {
            Formula::Var(0) => Err(Error::Invalid("variable index 0".into())),
            Formula::Var(_) => Ok(()),
            Formula::Apply(name, args) => {
                let f = base
                    .get(name)
                    .ok_or_else(|| Error::UnknownFunction(name.clone()))?;
                if f.arity() as usize != args.len() {
                    return Err(Error::ArityMismatch {
                        name: name.clone(),
                        got: args.len(),
                        want: f.arity() as usize,
                    });
                }
                args.iter().try_for_each(|a| a.validate(base))
            }
        }
    }

    /// Evaluates on a packed assignment of dimension `n`.
    pub fn eval_word(&self, base: &BaseSet, word: u64, n: u32) -> Result<bool> {
        match self {
            Formula::Var(i) => {
                if *i == 0 || *i > n {
                    return Err(Error::MissingVariable(*i));
                }
                Ok(get_var(word, n, *i))
            }
            Formula::Apply(name, args) => {
                let f = lookup(base, name, args.len())?;
                let mut row = 0u64;
                for a in args {
                    row = (row << 1) | a.eval_word(base, word, n)? as u64;
                }
                Ok(f.get(row))
            }
        }
    }

    pub fn eval(&self, base: &BaseSet, a: &BitVector) -> Result<bool> {
        self.eval_word(base, a.word(), a.dim())
    }
}

pub(crate) fn lookup<'a>(base: &'a BaseSet, name: &str, args: usize) -> Result<&'a TruthTable> {
    let f = base
        .get(name)
        .ok_or_else(|| Error::UnknownFunction(name.to_string()))?;
    if f.arity() as usize != args {
        return Err(Error::ArityMismatch {
            name: name.to_string(),
            got: args,
            want: f.arity() as usize,
        });
    }
    Ok(f)
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Var(i) => write!(f, "x{i}"),
            Formula::Apply(name, args) if args.is_empty() => f.write_str(name),
            Formula::Apply(name, args) => {
                write!(f, "{name}(")?;
                for (k, a) in args.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Byte-oriented recursive-descent parser shared with the quantified syntax.
pub(crate) struct Parser<'a> {
    src: &'a [u8],
    pub(crate) pos: usize,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        Self {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    pub(crate) fn skip_ws(&mut self) {
        while let Some(&c) = self.src.get(self.pos) {
            if c == b'#' {
                while self.pos < self.src.len() && self.src[self.pos] != b'\n' {
                    self.pos += 1;
                }
            } else if c.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    pub(crate) fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    pub(crate) fn error(&self, msg: impl Into<String>) -> Error {
        Error::SyntaxError {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    /// `[a-zA-Z_][a-zA-Z0-9_]*`; validity is checked by the caller.
    pub(crate) fn ident(&mut self) -> Result<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        while let Some(&c) = self.src.get(self.pos) {
            if c.is_ascii_alphanumeric() || c == b'_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        if start == self.pos {
            return Err(self.error("expected a variable or function name"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii slice");
        Ok((start, text))
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

/// `x<digits>` with no leading zero.
pub(crate) fn as_variable(ident: &str) -> Option<u32> {
    let digits = ident.strip_prefix('x')?;
    if digits.is_empty() || digits.starts_with('0') || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

pub(crate) fn parse_expr(p: &mut Parser<'_>, base: &BaseSet) -> Result<Formula> {
    let (start, ident) = p.ident()?;
    if let Some(i) = as_variable(ident) {
        return Ok(Formula::Var(i));
    }
    if ident.starts_with('x') && ident.len() > 1 && ident[1..].bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::SyntaxError {
            pos: start,
            msg: format!("bad variable `{ident}`"),
        });
    }
    let f = base
        .get(ident)
        .ok_or_else(|| Error::UnknownFunction(ident.to_string()))?;
    let mut args = Vec::new();
    if p.peek() == Some(b'(') {
        p.pos += 1;
        loop {
            args.push(parse_expr(p, base)?);
            match p.peek() {
                Some(b',') => p.pos += 1,
                Some(b')') => {
                    p.pos += 1;
                    break;
                }
                _ => return Err(p.error("expected `,` or `)`")),
            }
        }
    }
    if f.arity() as usize != args.len() {
        return Err(Error::ArityMismatch {
            name: ident.to_string(),
            got: args.len(),
            want: f.arity() as usize,
        });
    }
    Ok(Formula::Apply(ident.to_string(), args))
}

pub fn parse_formula(text: &str, base: &BaseSet) -> Result<Formula> {
    let mut p = Parser::new(text);
    let f = parse_expr(&mut p, base)?;
    if !p.at_end() {
        return Err(p.error("trailing input"));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h_base() -> BaseSet {
        BaseSet::from_rows(&[("h", "0010")]).unwrap()
    }

    #[test]
    fn parses_nested_applications() {
        let std = BaseSet::standard();
        let f = parse_formula("and(x1, or(x2,\n x3))", &std).unwrap();
        assert_eq!(
            f,
            Formula::apply(
                "and",
                vec![Formula::Var(1), Formula::apply("or", vec![Formula::Var(2), Formula::Var(3)])]
            )
        );
        assert_eq!(f.to_string(), "and(x1,or(x2,x3))");
        assert_eq!(f.max_var(), 3);
        assert_eq!(f.applications(), 2);
    }

    #[test]
    fn h_identity_evaluates_to_and() {
        let b = h_base();
        let f = parse_formula("h(x1,h(x1,x2))", &b).unwrap();
        for w in 0..4u64 {
            assert_eq!(f.eval_word(&b, w, 2).unwrap(), w == 3);
        }
    }

    #[test]
    fn parse_errors() {
        let std = BaseSet::standard();
        assert_eq!(
            parse_formula("and(x1)", &std),
            Err(Error::ArityMismatch {
                name: "and".into(),
                got: 1,
                want: 2
            })
        );
        assert_eq!(
            parse_formula("nand(x1,x2)", &std),
            Err(Error::UnknownFunction("nand".into()))
        );
        assert!(matches!(
            parse_formula("and(x1,,x2)", &std),
            Err(Error::SyntaxError { .. })
        ));
        assert!(matches!(
            parse_formula("x0", &std),
            Err(Error::SyntaxError { pos: 0, .. })
        ));
        assert!(matches!(
            parse_formula("x1 x2", &std),
            Err(Error::SyntaxError { pos: 3, .. })
        ));
    }

    #[test]
    fn constants_and_comments() {
        let b = BaseSet::from_rows(&[("one", "1"), ("and", "0001")]).unwrap();
        let f = parse_formula("# a constant\nand(one, x1) # done", &b).unwrap();
        assert_eq!(f.to_string(), "and(one,x1)");
        assert!(f.eval_word(&b, 1, 1).unwrap());
    }

    #[test]
    fn missing_variable() {
        let std = BaseSet::standard();
        let f = parse_formula("and(x1,x3)", &std).unwrap();
        assert_eq!(f.eval_word(&std, 0, 2), Err(Error::MissingVariable(3)));
    }
}
