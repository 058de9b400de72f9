//! Finding a B-formula for a given truth table.
//!
//! Small arities go through bottom-up enumeration by formula size, keyed
//! on packed truth tables so each table keeps only its smallest formula
//! (ties broken by printed form). When the tables found so far are closed
//! under the base the search has exhausted `[B]` at that arity and the
//! target is reported unrealizable. Bases that express `not`, `and` and
//! `or` fall back to Shannon expansion over those gadgets.

use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use crate::boolfn::closure::{compose_words, projection_word, row_mask, WORD_ARITY};
use crate::boolfn::{BaseSet, TruthTable};
use crate::error::{Error, Result};
use crate::rep::{parse_formula, truth_table_of, Formula, Instance};

/// Above this many compositions the closedness test is skipped.
const CLOSURE_CHECK_LIMIT: f64 = 4e6;

/// Deterministic limits on the enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SynthBudget {
    /// Largest formula size (node count) enumerated.
    pub max_size: usize,
    /// Largest number of distinct tables kept.
    pub max_tables: usize,
    /// Largest number of compositions evaluated per target.
    pub max_steps: u64,
}

impl Default for SynthBudget {
    fn default() -> Self {
        Self {
            max_size: 24,
            max_tables: 1 << 18,
            max_steps: 2_000_000,
        }
    }
}

enum Search {
    Found(Formula),
    /// Every realizable table of this arity was seen.
    Closed,
    Exhausted,
}

#[derive(Clone, Debug)]
struct Gadgets {
    not: Formula,
    and: Formula,
    or: Formula,
}

impl Gadgets {
    fn not(&self, a: Formula) -> Formula {
        self.not.substitute(&|_| a.clone())
    }

    fn binary(g: &Formula, a: Formula, b: Formula) -> Formula {
        g.substitute(&|i| if i == 1 { a.clone() } else { b.clone() })
    }

    fn and(&self, a: Formula, b: Formula) -> Formula {
        Self::binary(&self.and, a, b)
    }

    fn or(&self, a: Formula, b: Formula) -> Formula {
        Self::binary(&self.or, a, b)
    }

    /// `f = (x ∧ f₁) ∨ (¬x ∧ f₀)` splitting on the first variable of `t`,
    /// which is `x_{first}` globally.
    fn shannon(&self, t: &TruthTable, first: u32) -> Formula {
        let r = t.arity();
        if let Some(c) = t.is_constant() {
            let x = Formula::Var(1);
            return if c {
                self.or(x.clone(), self.not(x))
            } else {
                self.and(x.clone(), self.not(x))
            };
        }
        let half = 1u64 << (r - 1);
        let f0 = TruthTable::from_fn(r - 1, |i| t.get(i)).expect("smaller arity");
        let f1 = TruthTable::from_fn(r - 1, |i| t.get(i | half)).expect("smaller arity");
        let x = Formula::Var(first);
        if f0 == f1 {
            return self.shannon(&f0, first + 1);
        }
        match (f0.is_constant(), f1.is_constant()) {
            (Some(false), Some(true)) => x,
            (Some(true), Some(false)) => self.not(x),
            (Some(false), _) => self.and(x, self.shannon(&f1, first + 1)),
            (_, Some(false)) => self.and(self.not(x), self.shannon(&f0, first + 1)),
            (Some(true), _) => self.or(self.not(x), self.shannon(&f1, first + 1)),
            (_, Some(true)) => self.or(x, self.shannon(&f0, first + 1)),
            _ => self.or(
                self.and(x.clone(), self.shannon(&f1, first + 1)),
                self.and(self.not(x), self.shannon(&f0, first + 1)),
            ),
        }
    }
}

/// All ways to write `total` as `k` positive parts.
fn compositions(total: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    if total < k {
        return vec![];
    }
    (1..=total - (k - 1))
        .flat_map(|first| {
            compositions(total - first, k - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// Keeps the first formula offered for a table, or a smaller printed one.
fn offer(cand: &mut BTreeMap<u64, Rc<str>>, t: u64, f: String) {
    match cand.get(&t) {
        Some(old) if **old <= *f => {}
        _ => {
            cand.insert(t, f.into());
        }
    }
}

/// Synthesizer with a per-base cache of results.
pub struct Synthesizer<'a> {
    base: &'a BaseSet,
    budget: SynthBudget,
    cache: HashMap<TruthTable, Formula>,
    gadgets: Option<Option<Gadgets>>,
}

impl<'a> Synthesizer<'a> {
    pub fn new(base: &'a BaseSet, budget: SynthBudget) -> Self {
        Self {
            base,
            budget,
            cache: HashMap::new(),
            gadgets: None,
        }
    }

    pub fn base(&self) -> &BaseSet {
        self.base
    }

    fn enumerate(&self, a: u32, target: u64, budget: SynthBudget) -> Search {
        let rows = row_mask(a);
        let funcs: Vec<(&str, &TruthTable)> = self.base.iter().collect();
        // formulas are kept in printed form until the target is found
        let mut best: HashMap<u64, Rc<str>> = HashMap::new();
        let mut levels: Vec<Vec<u64>> = vec![vec![]];
        let mut steps = 0u64;
        for size in 1..=budget.max_size {
            let mut cand = BTreeMap::new();
            if size == 1 {
                for j in 1..=a {
                    offer(&mut cand, projection_word(a, j), format!("x{j}"));
                }
                for (name, f) in funcs.iter().filter(|(_, f)| f.arity() == 0) {
                    let t = if f.get(0) { rows } else { 0 };
                    offer(&mut cand, t, name.to_string());
                }
            }
            for (name, f) in funcs.iter().filter(|(_, f)| f.arity() > 0) {
                let k = f.arity() as usize;
                for parts in compositions(size - 1, k) {
                    let pools: Vec<&[u64]> = parts.iter().map(|&c| levels[c].as_slice()).collect();
                    if pools.iter().any(|p| p.is_empty()) {
                        continue;
                    }
                    let mut idx = vec![0usize; k];
                    let mut args = vec![0u64; k];
                    'tuples: loop {
                        for p in 0..k {
                            args[p] = pools[p][idx[p]];
                        }
                        steps += 1;
                        if steps > budget.max_steps {
                            return match cand.remove(&target) {
                                Some(f) => self.found(&f),
                                None => Search::Exhausted,
                            };
                        }
                        let t = compose_words(f, &args, a);
                        if !best.contains_key(&t) {
                            let mut text = format!("{name}(");
                            for (p, c) in args.iter().enumerate() {
                                if p > 0 {
                                    text.push(',');
                                }
                                text.push_str(&best[c]);
                            }
                            text.push(')');
                            offer(&mut cand, t, text);
                        }
                        let mut p = k;
                        loop {
                            if p == 0 {
                                break 'tuples;
                            }
                            p -= 1;
                            idx[p] += 1;
                            if idx[p] < pools[p].len() {
                                break;
                            }
                            idx[p] = 0;
                        }
                    }
                }
            }
            levels.push(cand.keys().copied().collect());
            best.extend(cand);
            if let Some(f) = best.get(&target) {
                return self.found(f);
            }
            if best.len() > budget.max_tables {
                return Search::Exhausted;
            }
            if self.is_closed(a, &best) {
                return Search::Closed;
            }
        }
        Search::Exhausted
    }

    fn found(&self, text: &str) -> Search {
        Search::Found(parse_formula(text, self.base).expect("enumerated formulas parse"))
    }

    /// Whether the tables in `seen` are closed under every base function.
    /// Gives up (false) when the check would be too expensive.
    fn is_closed(&self, a: u32, seen: &HashMap<u64, Rc<str>>) -> bool {
        let all: Vec<u64> = seen.keys().copied().collect();
        let cost: f64 = self
            .base
            .tables()
            .map(|f| (all.len() as f64).powi(f.arity() as i32))
            .sum();
        if cost > CLOSURE_CHECK_LIMIT {
            return false;
        }
        self.base.tables().filter(|f| f.arity() > 0).all(|f| {
            let k = f.arity() as usize;
            let mut idx = vec![0usize; k];
            let mut args = vec![0u64; k];
            loop {
                for p in 0..k {
                    args[p] = all[idx[p]];
                }
                if !seen.contains_key(&compose_words(f, &args, a)) {
                    return false;
                }
                let mut p = k;
                loop {
                    if p == 0 {
                        return true;
                    }
                    p -= 1;
                    idx[p] += 1;
                    if idx[p] < all.len() {
                        break;
                    }
                    idx[p] = 0;
                }
            }
        })
    }

    fn gadgets(&mut self) -> Option<Gadgets> {
        if self.gadgets.is_none() {
            // gadgets are tiny, so the default budget always suffices when they exist
            let find = |a, word| match self.enumerate(a, word, SynthBudget::default()) {
                Search::Found(f) => Some(f),
                _ => None,
            };
            let not = find(1, 0b01);
            let and = find(2, 0b1000);
            let or = find(2, 0b1110);
            self.gadgets = Some(not.and_then(|not| {
                let n = |f: Formula| not.substitute(&|_| f.clone());
                let demorgan = |g: &Formula| {
                    n(g.substitute(&|i| n(Formula::Var(i))))
                };
                let (and, or) = match (and, or) {
                    (Some(a), Some(o)) => (a, o),
                    (Some(a), None) => {
                        let o = demorgan(&a);
                        (a, o)
                    }
                    (None, Some(o)) => (demorgan(&o), o),
                    (None, None) => return None,
                };
                Some(Gadgets { not, and, or })
            }));
        }
        self.gadgets.clone().flatten()
    }

    /// A formula over the base whose table is `target`, on variables
    /// `x₁ … x_a`.
    pub fn synth(&mut self, target: &TruthTable) -> Result<Formula> {
        if let Some(f) = self.cache.get(target) {
            return Ok(f.clone());
        }
        let a = target.arity();
        if a <= WORD_ARITY {
            let word = target.as_word().expect("small arity");
            match self.enumerate(a, word, self.budget) {
                Search::Found(f) => {
                    self.cache.insert(target.clone(), f.clone());
                    return Ok(f);
                }
                Search::Closed => return Err(Error::NotRealizable(a)),
                Search::Exhausted => {}
            }
        }
        let Some(g) = (a > 0).then(|| self.gadgets()).flatten() else {
            return Err(Error::BudgetExceeded(format!(
                "no formula found for a table of arity {a} within the search budget"
            )));
        };
        let f = g.shannon(target, 1);
        if truth_table_of(&Instance::Formula(f.clone()), self.base, a)? != *target {
            return Err(Error::Invalid("constructed formula has the wrong table".into()));
        }
        self.cache.insert(target.clone(), f.clone());
        Ok(f)
    }
}

/// One-shot synthesis.
pub fn synth_bformula(target: &TruthTable, base: &BaseSet, budget: SynthBudget) -> Result<Formula> {
    Synthesizer::new(base, budget).synth(target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::{clone_closure, tt_parse};

    fn h() -> BaseSet {
        BaseSet::from_rows(&[("h", "0010")]).unwrap()
    }

    #[test]
    fn examples() {
        let b = h();
        let and = tt_parse("0001", 2).unwrap();
        let f = synth_bformula(&and, &b, SynthBudget::default()).unwrap();
        assert_eq!(f.to_string(), "h(x1,h(x1,x2))");
        let or = tt_parse("0111", 2).unwrap();
        assert_eq!(
            synth_bformula(&or, &b, SynthBudget::default()),
            Err(Error::NotRealizable(2))
        );
    }

    #[test]
    fn agrees_with_closure() {
        let b = h();
        let closure = clone_closure(&b, 2, 1 << 16).unwrap();
        let mut s = Synthesizer::new(&b, SynthBudget::default());
        for w in 0..16u64 {
            let t = TruthTable::from_word(2, w).unwrap();
            match s.synth(&t) {
                Ok(f) => {
                    assert!(closure.contains(&t));
                    assert_eq!(truth_table_of(&f.into(), &b, 2).unwrap(), t);
                }
                Err(e) => {
                    assert_eq!(e, Error::NotRealizable(2));
                    assert!(!closure.contains(&t));
                }
            }
        }
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(4, 2), vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        assert!(compositions(1, 2).is_empty());
        assert_eq!(compositions(0, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn falls_back_to_gadgets() {
        let std = BaseSet::standard();
        let tight = SynthBudget {
            max_steps: 10,
            ..SynthBudget::default()
        };
        let parity = TruthTable::from_fn(7, |i| i.count_ones() % 2 == 1).unwrap();
        let f = synth_bformula(&parity, &std, tight).unwrap();
        assert_eq!(truth_table_of(&f.into(), &std, 7).unwrap(), parity);
        let nand = BaseSet::from_rows(&[("nand", "1110")]).unwrap();
        let t = TruthTable::from_fn(4, |i| i % 3 == 0).unwrap();
        let f = synth_bformula(&t, &nand, tight).unwrap();
        assert_eq!(truth_table_of(&f.into(), &nand, 4).unwrap(), t);
    }

    #[test]
    fn shannon_is_exact() {
        let std = BaseSet::standard();
        let mut s = Synthesizer::new(&std, SynthBudget::default());
        let g = s.gadgets().unwrap();
        for w in 0..256u64 {
            let t = TruthTable::from_word(3, w).unwrap();
            let f = g.shannon(&t, 1);
            assert_eq!(truth_table_of(&f.into(), &std, 3).unwrap(), t);
        }
    }

    #[test]
    fn exotic_base_fails_loudly() {
        // and/or only: gadgets are missing, so a monotone target beyond the
        // step budget is reported as a budget failure
        let b = BaseSet::from_rows(&[("and", "0001"), ("or", "0111")]).unwrap();
        let tight = SynthBudget {
            max_steps: 5,
            ..SynthBudget::default()
        };
        let maj = TruthTable::threshold(7, 4, false).unwrap();
        assert!(matches!(synth_bformula(&maj, &b, tight), Err(Error::BudgetExceeded(_))));
    }
}
