//! Balanced recursive composition of `T_∧` over the clauses of a CNF,
//! giving an equivalent of `T_φ` of logarithmic nesting depth.

use super::synth::{SynthBudget, Synthesizer};
use super::transform::{and, extra_vars, or, t_matrix, var, TransformInfo};
use crate::boolfn::bits::mask;
use crate::boolfn::{BaseSet, TVariant};
use crate::error::{Error, Result};
use crate::rep::{truth_table_of, CnfFormula, Formula, Instance, QuantifiedFormula, Quantifier};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrResult {
    /// A formula over the synthesizer's base, quantified for S02Q.
    pub instance: Instance,
    pub info: TransformInfo,
    /// Nesting depth of `T_∧`, `⌈log₂ m⌉` for `m` clauses.
    pub depth: u32,
    /// Node count of the (matrix) formula.
    pub size: usize,
}

struct Builder<'s, 'b> {
    synth: &'s mut Synthesizer<'b>,
    variant: TVariant,
    n: u32,
    combiner: Option<Formula>,
}

impl Builder<'_, '_> {
    /// Synthesizes `t_matrix(psi)` over local variables `1..=c` followed by
    /// the new ones.
    fn local(&mut self, psi: &Formula, c: u32) -> Result<Formula> {
        let std = BaseSet::standard();
        let m = t_matrix(psi, c, self.variant)?;
        let table = truth_table_of(&Instance::Formula(m), &std, c + extra_vars(self.variant))?;
        self.synth.synth(&table)
    }

    fn leaf(&mut self, clause: &[i32]) -> Result<Formula> {
        let mut vars: Vec<u32> = clause.iter().map(|l| l.unsigned_abs()).collect();
        vars.sort_unstable();
        vars.dedup();
        let local = |v: u32| var(vars.binary_search(&v).expect("clause variable") as u32 + 1);
        let psi = clause
            .iter()
            .map(|&l| {
                let x = local(l.unsigned_abs());
                if l > 0 {
                    x
                } else {
                    Formula::apply("not", vec![x])
                }
            })
            .reduce(or)
            .ok_or(Error::EmptyClause)?;
        let c = vars.len() as u32;
        let n = self.n;
        let f = self.local(&psi, c)?;
        Ok(f.substitute(&|i| {
            if i <= c {
                var(vars[i as usize - 1])
            } else {
                var(n + i - c)
            }
        }))
    }

    fn build(&mut self, clauses: &[Vec<i32>]) -> Result<(Formula, u32)> {
        if clauses.len() == 1 {
            return Ok((self.leaf(&clauses[0])?, 0));
        }
        let mid = clauses.len() / 2;
        let (l, dl) = self.build(&clauses[..mid])?;
        let (r, dr) = self.build(&clauses[mid..])?;
        if self.combiner.is_none() {
            self.combiner = Some(self.local(&and(var(1), var(2)), 2)?);
        }
        let n = self.n;
        let f = self.combiner.as_ref().expect("set above").substitute(&|i| match i {
            1 => l.clone(),
            2 => r.clone(),
            _ => var(n + i - 2),
        });
        Ok((f, 1 + dl.max(dr)))
    }
}

/// Builds `Tr(φ)` over `base`.
pub fn tr_combine(phi: &CnfFormula, variant: TVariant, base: &BaseSet, budget: SynthBudget) -> Result<TrResult> {
    tr_combine_with(phi, variant, &mut Synthesizer::new(base, budget))
}

/// [`tr_combine`] reusing a synthesizer, so its cache carries over
/// between formulas.
///
/// For D1 and S02K every variable `x₁ … x_n` must occur in some clause,
/// since the `x = 1` terms of `T_φ` range over all of them.
pub fn tr_combine_with(phi: &CnfFormula, variant: TVariant, synth: &mut Synthesizer<'_>) -> Result<TrResult> {
    let n = phi.num_vars();
    if phi.clauses().is_empty() {
        return Err(Error::Invalid("CNF has no clauses".into()));
    }
    if variant != TVariant::S02Q && !phi.eval_word(mask(n), n)? {
        return Err(Error::NotOneReproducing);
    }
    if matches!(variant, TVariant::D1 | TVariant::S02K(_)) {
        let mut used = vec![false; n as usize + 1];
        for l in phi.clauses().iter().flatten() {
            used[l.unsigned_abs() as usize] = true;
        }
        if let Some(v) = (1..=n).find(|&v| !used[v as usize]) {
            return Err(Error::Invalid(format!("variable x{v} occurs in no clause")));
        }
    }
    let mut b = Builder {
        synth,
        variant,
        n,
        combiner: None,
    };
    let (formula, depth) = b.build(phi.clauses())?;
    let size = formula.size();
    let instance = match variant {
        TVariant::S02Q => Instance::Quantified(QuantifiedFormula::new(
            vec![(Quantifier::Forall, n + 2)],
            formula,
        )?),
        _ => Instance::Formula(formula),
    };
    Ok(TrResult {
        instance,
        info: TransformInfo::new(n, variant),
        depth,
        size,
    })
}
