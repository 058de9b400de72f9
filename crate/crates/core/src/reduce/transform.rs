//! 1-reproducing normalization and the embeddings `T_ψ` into the hard
//! clones S₁₂, D₁, S₀₂ᵏ, and (quantified) S₀₂.

use serde::Serialize;

use crate::boolfn::bits::{mask, BitVector};
use crate::boolfn::{BaseSet, TVariant};
use crate::error::{Error, Result};
use crate::graph::SolutionSet;
use crate::rep::{CnfFormula, Formula, Instance, QuantifiedFormula, Quantifier, ENUMERATION_BUDGET};

/// Substitutes `x_i ↦ x_i ⊕ s_i ⊕ 1`: literals over variables with
/// `s_i = 0` change polarity, so all-ones becomes a solution.
pub fn shift_to_one_reproducing(phi: &CnfFormula, s: &BitVector) -> Result<CnfFormula> {
    if s.dim() != phi.num_vars() {
        return Err(Error::LengthMismatch {
            expected: phi.num_vars() as usize,
            got: s.dim() as usize,
        });
    }
    if !phi.eval_word(s.word(), s.dim())? {
        return Err(Error::NotASolution(format!("s = {s}")));
    }
    let clauses = phi
        .clauses()
        .iter()
        .map(|c| {
            c.iter()
                .map(|&lit| if s.get(lit.unsigned_abs()) { lit } else { -lit })
                .collect()
        })
        .collect();
    CnfFormula::new(phi.num_vars(), clauses)
}

pub(crate) fn var(i: u32) -> Formula {
    Formula::Var(i)
}

pub(crate) fn not(f: Formula) -> Formula {
    Formula::apply("not", vec![f])
}

pub(crate) fn and(a: Formula, b: Formula) -> Formula {
    Formula::apply("and", vec![a, b])
}

pub(crate) fn or(a: Formula, b: Formula) -> Formula {
    Formula::apply("or", vec![a, b])
}

fn and_all(items: impl IntoIterator<Item = Formula>) -> Formula {
    items.into_iter().reduce(and).expect("nonempty conjunction")
}

fn or_all(items: impl IntoIterator<Item = Formula>) -> Formula {
    items.into_iter().reduce(or).expect("nonempty disjunction")
}

fn literal(i: u32, value: bool) -> Formula {
    if value {
        var(i)
    } else {
        not(var(i))
    }
}

/// `(x_{first}, …) = bits`.
fn equals(first: u32, bits: &[bool]) -> Formula {
    and_all(bits.iter().enumerate().map(|(p, &b)| literal(first + p as u32, b)))
}

/// `x₁ = … = x_n = value`.
fn all_equal(n: u32, value: bool) -> Formula {
    and_all((1..=n).map(|i| literal(i, value)))
}

/// Bits of `text`, `'1'` true.
fn bits(text: &str) -> Vec<bool> {
    text.bytes().map(|b| b == b'1').collect()
}

/// Number of variables appended by `variant`.
pub fn extra_vars(variant: TVariant) -> u32 {
    match variant {
        TVariant::S12 => 1,
        TVariant::D1 => 3,
        TVariant::S02K(k) => k + 2,
        TVariant::S02Q => 2,
    }
}

/// Values of the appended free variables that lift a solution of `ψ`.
pub fn pad_bits(variant: TVariant) -> Vec<bool> {
    match variant {
        TVariant::S12 | TVariant::S02Q => vec![true],
        TVariant::D1 => vec![true; 3],
        TVariant::S02K(k) => std::iter::once(true)
            .chain(std::iter::repeat(false).take(k as usize + 1))
            .collect(),
    }
}

fn check_variant(variant: TVariant) -> Result<()> {
    match variant {
        TVariant::S02K(k) if k < 2 => Err(Error::Invalid(format!("degree {k} is below 2"))),
        _ => Ok(()),
    }
}

/// Unquantified `T_ψ` (for S02Q the matrix `(ψ ∧ y) ∨ z`) over the
/// standard base, new variables numbered from `n + 1`.
pub fn t_matrix(psi: &Formula, n: u32, variant: TVariant) -> Result<Formula> {
    check_variant(variant)?;
    if n == 0 || psi.max_var() > n {
        return Err(Error::Invalid(format!(
            "dimension {n} must be positive and cover the formula's variables"
        )));
    }
    let y = n + 1;
    Ok(match variant {
        TVariant::S12 => and(psi.clone(), var(y)),
        TVariant::D1 => {
            let negated = psi.substitute(&|i| not(var(i)));
            or_all([
                and(psi.clone(), equals(y, &bits("111"))),
                and(not(negated), equals(y, &bits("000"))),
                and(
                    or_all(["100", "010", "001"].map(|b| equals(y, &bits(b)))),
                    not(and(all_equal(n, false), equals(y, &bits("001")))),
                ),
                and(all_equal(n, true), equals(y, &bits("110"))),
            ])
        }
        TVariant::S02K(k) => {
            let z = y + 1;
            let zs: Vec<u32> = (z..z + k + 1).collect();
            let pairs = zs
                .iter()
                .enumerate()
                .flat_map(|(a, &zi)| zs[a + 1..].iter().map(move |&zj| and(var(zi), var(zj))));
            let mut first = vec![false; k as usize + 1];
            first[0] = true;
            or_all([
                and(and(psi.clone(), var(y)), equals(z, &vec![false; k as usize + 1])),
                or_all(pairs),
                and(and(all_equal(n, true), var(y)), equals(z, &first)),
            ])
        }
        TVariant::S02Q => or(and(psi.clone(), var(y)), var(y + 1)),
    })
}

/// Variable layout and lifting data written next to a reduction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransformInfo {
    pub variant: String,
    pub k: Option<u32>,
    pub input_vars: u32,
    pub new_variable_indices: Vec<u32>,
    /// Appended free-variable values: `s ↦ s·pad`.
    pub pad_vector: BitVector,
    /// Solution-graph dimension of the output.
    pub dimension: u32,
}

impl TransformInfo {
    pub fn new(n: u32, variant: TVariant) -> Self {
        let extra = extra_vars(variant);
        let pad = BitVector::from_bits(&pad_bits(variant)).expect("pad is short");
        Self {
            variant: match variant {
                TVariant::S02K(_) => "s02k".into(),
                v => v.to_string(),
            },
            k: match variant {
                TVariant::S02K(k) => Some(k),
                _ => None,
            },
            input_vars: n,
            new_variable_indices: (n + 1..=n + extra).collect(),
            pad_vector: pad,
            dimension: n + pad.dim(),
        }
    }

    /// `s·pad`.
    pub fn lift(&self, s: &BitVector) -> Result<BitVector> {
        let p = self.pad_vector;
        BitVector::new(s.dim() + p.dim(), (s.word() << p.dim()) | p.word())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transformed {
    /// A formula over the standard base, quantified for S02Q.
    pub instance: Instance,
    pub info: TransformInfo,
}

/// `T_ψ` for a formula over the standard base in dimension `n`.
pub fn t_transform(psi: &Formula, n: u32, variant: TVariant) -> Result<Transformed> {
    let std = BaseSet::standard();
    psi.validate(&std)?;
    if variant != TVariant::S02Q && n > 0 && !psi.eval_word(&std, mask(n), n)? {
        return Err(Error::NotOneReproducing);
    }
    let matrix = t_matrix(psi, n, variant)?;
    let instance = match variant {
        TVariant::S02Q => Instance::Quantified(QuantifiedFormula::new(
            vec![(Quantifier::Forall, n + 2)],
            matrix,
        )?),
        _ => Instance::Formula(matrix),
    };
    Ok(Transformed {
        instance,
        info: TransformInfo::new(n, variant),
    })
}

/// `T_φ` for a CNF, rendered over the standard base.
pub fn t_transform_cnf(phi: &CnfFormula, variant: TVariant) -> Result<Transformed> {
    t_transform(&phi.to_formula()?, phi.num_vars(), variant)
}

/// The solution set of `T_ψ` computed from `R = ψ⁻¹(1)` directly.
pub fn apply_t_relation(r: &SolutionSet, variant: TVariant) -> Result<SolutionSet> {
    check_variant(variant)?;
    let n = r.dim();
    let ones = mask(n);
    if !r.contains(ones) {
        return Err(Error::NotOneReproducing);
    }
    let extra = extra_vars(variant);
    if n + extra > ENUMERATION_BUDGET {
        return Err(Error::BudgetExceeded(format!(
            "dimension {} exceeds the enumeration budget",
            n + extra
        )));
    }
    let all = 0..1u64 << n;
    let words: Vec<u64> = match variant {
        TVariant::S12 => r.words().iter().map(|&a| (a << 1) | 1).collect(),
        TVariant::D1 => {
            let mut w: Vec<u64> = r.words().iter().map(|&a| (a << 3) | 0b111).collect();
            for a in all {
                if !r.contains(!a & ones) {
                    w.push(a << 3);
                }
                w.push((a << 3) | 0b100);
                w.push((a << 3) | 0b010);
                if a != 0 {
                    w.push((a << 3) | 0b001);
                }
            }
            w.push((ones << 3) | 0b110);
            w
        }
        TVariant::S02K(k) => {
            let zbits = k + 1;
            let mut w: Vec<u64> = r
                .words()
                .iter()
                .map(|&a| ((a << 1) | 1) << zbits)
                .collect();
            for a in all {
                for y in 0..2u64 {
                    for z in (0..1u64 << zbits).filter(|z| z.count_ones() > 1) {
                        w.push((((a << 1) | y) << zbits) | z);
                    }
                }
            }
            w.push((((ones << 1) | 1) << zbits) | (1 << k));
            w
        }
        TVariant::S02Q => {
            return Err(Error::Unsupported(
                "the quantified variant has no relation-level form".into(),
            ))
        }
    };
    SolutionSet::new(n + extra, words)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::tt_print;
    use crate::graph::{components, enumerate_solutions};
    use crate::rep::{parse_dimacs, parse_formula, truth_table_of};

    fn set(n: u32, rows: &[&str]) -> SolutionSet {
        SolutionSet::new(n, rows.iter().map(|r| r.parse::<BitVector>().unwrap().word()).collect())
            .unwrap()
    }

    #[test]
    fn shift_examples() {
        let phi = parse_dimacs("p cnf 1 1\n-1 0\n").unwrap();
        let psi = shift_to_one_reproducing(&phi, &"0".parse().unwrap()).unwrap();
        assert_eq!(psi.clauses(), &[vec![1]]);
        let phi = parse_dimacs("p cnf 2 2\n1 2 0\n-1 2 0\n").unwrap();
        assert_eq!(shift_to_one_reproducing(&phi, &"11".parse().unwrap()).unwrap(), phi);
        let phi = parse_dimacs("p cnf 2 1\n-1 -2 0\n").unwrap();
        let psi = shift_to_one_reproducing(&phi, &"00".parse().unwrap()).unwrap();
        assert_eq!(psi.clauses(), &[vec![1, 2]]);
        assert!(psi.eval_word(0b11, 2).unwrap());
        assert!(matches!(
            shift_to_one_reproducing(&phi, &"11".parse().unwrap()),
            Err(Error::NotASolution(_))
        ));
    }

    #[test]
    fn transform_examples() {
        let std = BaseSet::standard();
        let solutions = |t: &Transformed| {
            let n = t.info.dimension;
            enumerate_solutions(&t.instance, &std, n, 24).unwrap()
        };
        let or = parse_formula("or(x1,x2)", &std).unwrap();
        let t = t_transform(&or, 2, TVariant::S12).unwrap();
        assert_eq!(solutions(&t), set(3, &["011", "101", "111"]));

        let x1 = Formula::Var(1);
        let t = t_transform(&x1, 1, TVariant::D1).unwrap();
        let d1 = set(4, &["1111", "1000", "0100", "1100", "0010", "1010", "1001", "1110"]);
        assert_eq!(solutions(&t), d1);
        assert_eq!(components(&d1).count(), 1);

        let t = t_transform(&x1, 1, TVariant::S02Q).unwrap();
        let Instance::Quantified(q) = &t.instance else {
            panic!("expected a quantified formula")
        };
        let m = truth_table_of(&Instance::Formula(q.matrix().clone()), &std, 3).unwrap();
        assert_eq!(tt_print(&m), "01010111");
        assert_eq!(t.info.pad_vector.to_string(), "1");
        assert_eq!(t.info.new_variable_indices, vec![2, 3]);

        let neg = parse_formula("not(x1)", &std).unwrap();
        assert_eq!(t_transform(&neg, 1, TVariant::S12), Err(Error::NotOneReproducing));
    }

    #[test]
    fn relation_examples() {
        let r = set(1, &["1"]);
        assert_eq!(apply_t_relation(&r, TVariant::S12).unwrap(), set(2, &["11"]));
        assert_eq!(
            apply_t_relation(&r, TVariant::D1).unwrap(),
            set(4, &["1111", "1000", "0100", "1100", "0010", "1010", "1001", "1110"])
        );
        assert_eq!(
            apply_t_relation(&set(1, &["0"]), TVariant::S12),
            Err(Error::NotOneReproducing)
        );
    }

    #[test]
    fn relation_matches_formula() {
        let std = BaseSet::standard();
        let psi = parse_formula("and(or(x1,not(x2)),or(x2,x3))", &std).unwrap();
        let r = enumerate_solutions(&Instance::Formula(psi.clone()), &std, 3, 24).unwrap();
        for v in [TVariant::S12, TVariant::D1, TVariant::S02K(2), TVariant::S02K(3)] {
            let t = t_transform(&psi, 3, v).unwrap();
            let direct = enumerate_solutions(&t.instance, &std, t.info.dimension, 24).unwrap();
            assert_eq!(apply_t_relation(&r, v).unwrap(), direct, "{v}");
        }
    }
}
