//! Named finite sets of Boolean functions and the `.tt` base file format.
//!
//! ```text
//! # name arity bits
//! and 2 0001
//! or  2 0111
//! one 0 1
//! ```

use std::collections::BTreeMap;
use std::fmt;

use super::table::{tt_parse, tt_print, TruthTable};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct BaseSet {
    entries: BTreeMap<String, TruthTable>,
}

pub fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some('a'..='z'))
        && chars.all(|c| matches!(c, 'a'..='z' | '0'..='9' | '_'))
}

impl BaseSet {
    pub fn new<S: Into<String>>(entries: impl IntoIterator<Item = (S, TruthTable)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (name, table) in entries {
            let name = name.into();
            if !valid_name(&name) {
                return Err(Error::Invalid(format!("bad function name `{name}`")));
            }
            if map.insert(name.clone(), table).is_some() {
                return Err(Error::DuplicateName(name));
            }
        }
        if map.is_empty() {
            return Err(Error::Invalid("a base needs at least one function".into()));
        }
        Ok(Self { entries: map })
    }

    /// Convenience constructor from `(name, row string)` pairs.
    pub fn from_rows(entries: &[(&str, &str)]) -> Result<Self> {
        let parsed = entries
            .iter()
            .map(|(name, rows)| {
                let len = rows.len();
                if !len.is_power_of_two() {
                    return Err(Error::LengthMismatch {
                        expected: len.next_power_of_two(),
                        got: len,
                    });
                }
                Ok((name.to_string(), tt_parse(rows, len.trailing_zeros())?))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parsed)
    }

    /// `{not, and, or}`, used for CNF rendering and intermediate formulas.
    pub fn standard() -> Self {
        Self::from_rows(&[("not", "10"), ("and", "0001"), ("or", "0111")])
            .expect("standard base is well formed")
    }

    pub fn get(&self, name: &str) -> Option<&TruthTable> {
        self.entries.get(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &TruthTable)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn tables(&self) -> impl Iterator<Item = &TruthTable> {
        self.entries.values()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_arity(&self) -> u32 {
        self.tables().map(|t| t.arity()).max().unwrap_or(0)
    }

    /// First function (in name order) with exactly this table.
    pub fn name_of(&self, table: &TruthTable) -> Option<&str> {
        self.iter().find(|(_, t)| *t == table).map(|(n, _)| n)
    }

    /// Union of two bases; clashing names must carry equal tables.
    pub fn merged(&self, other: &BaseSet) -> Result<Self> {
        let mut entries = self.entries.clone();
        for (name, table) in other.iter() {
            match entries.get(name) {
                Some(t) if t != table => return Err(Error::DuplicateName(name.to_string())),
                _ => {
                    entries.insert(name.to_string(), table.clone());
                }
            }
        }
        Ok(Self { entries })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let bad = |msg: &str| Error::Invalid(format!("base file line {}: {msg}", lineno + 1));
            let [name, arity, bits] = fields.as_slice() else {
                return Err(bad("expected `name arity bits`"));
            };
            let arity: u32 = arity.parse().map_err(|_| bad("arity is not a number"))?;
            entries.push((name.to_string(), tt_parse(bits, arity)?));
        }
        Self::new(entries)
    }

    pub fn to_text(&self) -> String {
        self.iter()
            .map(|(name, t)| format!("{name} {} {}\n", t.arity(), tt_print(t)))
            .collect()
    }
}

impl fmt::Debug for BaseSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_base_file() {
        let b = BaseSet::parse("# demo\r\nand 2 0001\n\nor 2 0111 # trailing\none 0 1\n").unwrap();
        assert_eq!(b.len(), 3);
        assert_eq!(b.get("one").unwrap().arity(), 0);
        assert_eq!(BaseSet::parse(&b.to_text()).unwrap(), b);
    }

    #[test]
    fn rejects_bad_files() {
        assert!(matches!(
            BaseSet::parse("and 2 0001\nand 2 0111\n"),
            Err(Error::DuplicateName(_))
        ));
        assert!(BaseSet::parse("And 2 0001").is_err());
        assert!(BaseSet::parse("and 2 001").is_err());
        assert!(BaseSet::parse("# nothing\n").is_err());
        assert!(BaseSet::parse("and 2").is_err());
    }
}
