//! Uniform evaluation of every input kind, and bit-parallel truth-table
//! extraction (64 assignments per machine word).

use rayon::prelude::*;

use super::circuit::{formula_to_circuit, Circuit, Node};
use super::cnf::CnfFormula;
use super::formula::{lookup, Formula};
use super::qbf::{namespace, QuantifiedFormula, Quantifier};
use crate::boolfn::bits::{mask, BitVector};
use crate::boolfn::closure::compose_words;
use crate::boolfn::{BaseSet, TruthTable};
use crate::error::{Error, Result};

/// Default cap on the dimension of an extracted truth table.
pub const ENUMERATION_BUDGET: u32 = 24;

/// Lane `l` of a word holds row `64·block + l`; `LANES[p]` has bit `l` set
/// iff bit `p` of `l` is set.
const LANES: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

/// Word of `x_j` over the 64 rows of `block` in dimension `n`.
fn var_lanes(n: u32, j: u32, block: u64) -> u64 {
    let p = n - j;
    if p < 6 {
        LANES[p as usize]
    } else if (block >> (p - 6)) & 1 == 1 {
        !0
    } else {
        0
    }
}

fn block_count(n: u32) -> u64 {
    if n <= 6 {
        1
    } else {
        1 << (n - 6)
    }
}

fn row_mask(n: u32) -> u64 {
    if n >= 6 {
        !0
    } else {
        mask(1 << n)
    }
}

enum Op<'a> {
    Var(u32),
    Gate(&'a TruthTable, Vec<usize>),
}

/// A circuit with its base functions resolved.
struct Program<'a> {
    ops: Vec<Op<'a>>,
    output: usize,
}

impl<'a> Program<'a> {
    fn new(c: &Circuit, base: &'a BaseSet, n: u32) -> Result<Self> {
        let ops = c
            .nodes()
            .iter()
            .map(|node| match node {
                Node::Input(i) if *i > n => Err(Error::MissingVariable(*i)),
                Node::Input(i) => Ok(Op::Var(*i)),
                Node::Gate { func, args } => Ok(Op::Gate(lookup(base, func, args.len())?, args.clone())),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            ops,
            output: c.output(),
        })
    }

    fn block(&self, n: u32, block: u64, values: &mut Vec<u64>) -> u64 {
        values.clear();
        let mut args = Vec::new();
        for op in &self.ops {
            let v = match op {
                Op::Var(j) => var_lanes(n, *j, block),
                Op::Gate(f, wires) => {
                    args.clear();
                    args.extend(wires.iter().map(|&w| values[w]));
                    compose_words(f, &args, 6)
                }
            };
            values.push(v);
        }
        values[self.output]
    }
}

fn cnf_block(phi: &CnfFormula, n: u32, block: u64) -> u64 {
    phi.clauses().iter().fold(!0u64, |acc, clause| {
        acc & clause.iter().fold(0u64, |c, &lit| {
            let w = var_lanes(n, lit.unsigned_abs(), block);
            c | if lit > 0 { w } else { !w }
        })
    })
}

fn table_from(n: u32, block_fn: impl Fn(u64) -> u64 + Sync) -> TruthTable {
    let rows = row_mask(n);
    let blocks: Vec<u64> = (0..block_count(n))
        .into_par_iter()
        .map(|b| block_fn(b) & rows)
        .collect();
    TruthTable::from_blocks(n, blocks)
}

fn check_budget(n: u32, budget: u32) -> Result<()> {
    if n > budget {
        return Err(Error::BudgetExceeded(format!(
            "dimension {n} exceeds the enumeration budget of {budget}"
        )));
    }
    Ok(())
}

/// Applies `∃x_j` or `∀x_j` to a table in place; `x_j` becomes fictive.
pub fn eliminate(t: &TruthTable, j: u32, q: Quantifier) -> TruthTable {
    let n = t.arity();
    let p = n - j;
    let op = |a: u64, b: u64| match q {
        Quantifier::Exists => a | b,
        Quantifier::Forall => a & b,
    };
    let mut blocks = t.blocks().to_vec();
    if p < 6 {
        let s = 1u32 << p;
        let hi_lanes = LANES[p as usize];
        for w in blocks.iter_mut() {
            let r = op((*w & hi_lanes) >> s, *w & !hi_lanes) & !hi_lanes;
            *w = (r | (r << s)) & row_mask(n);
        }
    } else {
        let d = 1usize << (p - 6);
        for i in 0..blocks.len() {
            if i & d == 0 {
                let r = op(blocks[i], blocks[i | d]);
                blocks[i] = r;
                blocks[i | d] = r;
            }
        }
    }
    TruthTable::from_blocks(n, blocks)
}

/// Any object whose solution graph can be taken.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Formula(Formula),
    Circuit(Circuit),
    Cnf(CnfFormula),
    Quantified(QuantifiedFormula),
}

impl From<Formula> for Instance {
    fn from(f: Formula) -> Self {
        Instance::Formula(f)
    }
}

impl From<Circuit> for Instance {
    fn from(c: Circuit) -> Self {
        Instance::Circuit(c)
    }
}

impl From<CnfFormula> for Instance {
    fn from(c: CnfFormula) -> Self {
        Instance::Cnf(c)
    }
}

impl From<QuantifiedFormula> for Instance {
    fn from(q: QuantifiedFormula) -> Self {
        Instance::Quantified(q)
    }
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Formula(_) => "formula",
            Instance::Circuit(_) => "circuit",
            Instance::Cnf(_) => "cnf",
            Instance::Quantified(_) => "quantified formula",
        }
    }

    /// Smallest solution-graph dimension: the largest variable index, or
    /// the number of free variables for quantified formulas.
    pub fn default_dim(&self) -> u32 {
        match self {
            Instance::Formula(f) => f.max_var(),
            Instance::Circuit(c) => c.max_var(),
            Instance::Cnf(c) => c.num_vars(),
            Instance::Quantified(q) => q.free_vars().len() as u32,
        }
    }

    pub fn is_quantified(&self) -> bool {
        matches!(self, Instance::Quantified(_))
    }

    pub fn validate(&self, base: &BaseSet) -> Result<()> {
        match self {
            Instance::Formula(f) => f.validate(base),
            Instance::Circuit(c) => c.validate(base),
            Instance::Cnf(_) => Ok(()),
            Instance::Quantified(q) => q.matrix().validate(base),
        }
    }

    /// Evaluates on a packed assignment of dimension `n`.
    pub fn eval_word(&self, base: &BaseSet, word: u64, n: u32) -> Result<bool> {
        match self {
            Instance::Formula(f) => f.eval_word(base, word, n),
            Instance::Circuit(c) => c.eval_word(base, word, n),
            Instance::Cnf(c) => c.eval_word(word, n),
            Instance::Quantified(q) => q.eval_word(base, word, &q.free_vars_padded(n)?),
        }
    }

    pub fn eval(&self, base: &BaseSet, a: &BitVector) -> Result<bool> {
        self.eval_word(base, a.word(), a.dim())
    }

    /// Full truth table in dimension `n`, refusing `n > budget`.
    pub fn truth_table(&self, base: &BaseSet, n: u32, budget: u32) -> Result<TruthTable> {
        if n < self.default_dim() {
            return Err(Error::MissingVariable(self.default_dim()));
        }
        check_budget(n, budget)?;
        match self {
            Instance::Formula(f) => {
                let c = formula_to_circuit(f);
                Instance::circuit_table(&c, base, n)
            }
            Instance::Circuit(c) => Instance::circuit_table(c, base, n),
            Instance::Cnf(c) => Ok(table_from(n, |b| cnf_block(c, n, b))),
            Instance::Quantified(q) => quantified_table(q, base, n, budget),
        }
    }

    fn circuit_table(c: &Circuit, base: &BaseSet, n: u32) -> Result<TruthTable> {
        let prog = Program::new(c, base, n)?;
        Ok(table_from(n, |b| prog.block(n, b, &mut Vec::new())))
    }
}

/// Matrix table over the whole namespace, quantifiers eliminated
/// innermost first, then restricted to the free variables. Falls back to
/// per-assignment expansion when the namespace exceeds the budget.
fn quantified_table(q: &QuantifiedFormula, base: &BaseSet, n: u32, budget: u32) -> Result<TruthTable> {
    let free = q.free_vars_padded(n)?;
    let total = namespace(q, &free);
    if total > budget {
        let mut t = TruthTable::constant(n, false)?;
        for w in 0..1u64 << n {
            t.set(w, q.eval_word(base, w, &free)?);
        }
        return Ok(t);
    }
    let matrix = Instance::circuit_table(&formula_to_circuit(q.matrix()), base, total)?;
    let mut t = matrix;
    for &(quant, v) in q.prefix().iter().rev() {
        t = eliminate(&t, v, quant);
    }
    // Bound variables are fictive now; read them at 0.
    let map: Vec<u32> = (1..=total)
        .map(|v| free.iter().position(|&f| f == v).map_or(0, |p| p as u32 + 1))
        .collect();
    if map.iter().all(|&m| m != 0) {
        return t.remap(n, &map);
    }
    TruthTable::from_fn(n, |i| {
        let row = map.iter().fold(0u64, |acc, &m| {
            (acc << 1) | (m != 0 && (i >> (n - m)) & 1 == 1) as u64
        });
        t.get(row)
    })
}

/// `truth_table_of` with the default budget.
pub fn truth_table_of(obj: &Instance, base: &BaseSet, n: u32) -> Result<TruthTable> {
    obj.truth_table(base, n, ENUMERATION_BUDGET)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::table::tt_print;
    use crate::rep::formula::parse_formula;
    use crate::rep::qbf::parse_qbf;

    fn and_formula() -> Instance {
        parse_formula("and(x1,x2)", &BaseSet::standard()).unwrap().into()
    }

    #[test]
    fn examples() {
        let std = BaseSet::standard();
        assert_eq!(tt_print(&truth_table_of(&and_formula(), &std, 2).unwrap()), "0001");
        assert_eq!(tt_print(&truth_table_of(&and_formula(), &std, 3).unwrap()), "00000011");
        let x1: Instance = Formula::Var(1).into();
        assert_eq!(tt_print(&truth_table_of(&x1, &std, 1).unwrap()), "01");
        assert!(matches!(
            and_formula().truth_table(&std, 25, 24),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn wide_tables_match_pointwise() {
        let std = BaseSet::standard();
        let f: Instance = parse_formula("or(and(x1,not(x8)),and(x3,or(x9,not(x5))))", &std)
            .unwrap()
            .into();
        let t = truth_table_of(&f, &std, 10).unwrap();
        for w in 0..1u64 << 10 {
            assert_eq!(t.get(w), f.eval_word(&std, w, 10).unwrap(), "row {w}");
        }
    }

    #[test]
    fn quantifier_elimination_matches_expansion() {
        let b = BaseSet::from_rows(&[("and", "0001"), ("or", "0111"), ("xor", "0110")]).unwrap();
        for text in [
            "A x3 E x4 : and(x1,or(x3,x4))",
            "E x1 : xor(x1,x2)",
            "A x2 : or(x1,x2)",
            "E x7 A x2 : or(and(x7,x1),xor(x2,x8))",
        ] {
            let q = parse_qbf(text, &b).unwrap();
            let inst = Instance::Quantified(q.clone());
            let n = inst.default_dim() + 1;
            let t = truth_table_of(&inst, &b, n).unwrap();
            let small = inst.truth_table(&b, n, n).unwrap();
            assert_eq!(t, small, "{text}");
            for w in 0..1u64 << n {
                let a = BitVector::new(n, w).unwrap();
                assert_eq!(t.get(w), q.eval(&b, &a).unwrap(), "{text} at {a}");
            }
        }
    }

    #[test]
    fn eliminate_on_wide_tables() {
        let t = TruthTable::from_fn(8, |i| i % 7 == 3).unwrap();
        for j in 1..=8 {
            let e = eliminate(&t, j, Quantifier::Exists);
            let a = eliminate(&t, j, Quantifier::Forall);
            let bit = 1u64 << (8 - j);
            for i in 0..256 {
                assert_eq!(e.get(i), t.get(i & !bit) || t.get(i | bit));
                assert_eq!(a.get(i), t.get(i & !bit) && t.get(i | bit));
            }
        }
    }
}
