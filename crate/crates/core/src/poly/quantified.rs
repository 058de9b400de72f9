//! Quantified formulas over monotone or linear bases.

use super::linear::{decide_form, linear_form_of};
use super::monotone::monotone_path;
use super::{check_pair, flip_path, verify_path, EasyAnswer, Rationale};
use crate::boolfn::bits::BitVector;
use crate::boolfn::props::{is_affine, is_monotone, LinearForm};
use crate::boolfn::BaseSet;
use crate::error::{Error, Result};
use crate::rep::{Instance, QuantifiedFormula, Quantifier};

/// What remains of a linear quantified formula once quantifiers over
/// fictive variables are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearResidual {
    Tautology,
    Unsatisfiable,
    /// Quantifier-free form over the free variables, renumbered to their
    /// positions in the free-variable list.
    Form(LinearForm),
}

pub fn linear_residual(q: &QuantifiedFormula, base: &BaseSet, free: &[u32]) -> Result<LinearResidual> {
    let form = linear_form_of(&Instance::Formula(q.matrix().clone()), base)?;
    let live = q
        .prefix()
        .iter()
        .rev()
        .find(|(_, v)| form.support.binary_search(v).is_ok());
    match live {
        Some((Quantifier::Exists, _)) => Ok(LinearResidual::Tautology),
        Some((Quantifier::Forall, _)) => Ok(LinearResidual::Unsatisfiable),
        None => {
            let support = form
                .support
                .iter()
                .map(|v| {
                    free.iter()
                        .position(|f| f == v)
                        .map(|p| p as u32 + 1)
                        .ok_or(Error::MissingVariable(*v))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(LinearResidual::Form(LinearForm {
                support,
                constant: form.constant,
            }))
        }
    }
}

pub fn qbf_easy_decide(
    q: &QuantifiedFormula,
    base: &BaseSet,
    n: u32,
    s: Option<&BitVector>,
    t: Option<&BitVector>,
) -> Result<EasyAnswer> {
    let obj = Instance::Quantified(q.clone());
    let free = q.free_vars_padded(n)?;
    if base.tables().all(is_monotone) {
        let mut ans = EasyAnswer::new(true, Rationale::Monotone);
        if let Some((s, t)) = check_pair(&obj, base, n, s, t)? {
            let path = monotone_path(s, t);
            if !verify_path(&obj, base, &path)? {
                return Err(Error::Invalid("monotone witness failed verification".into()));
            }
            ans.st_connected = Some(true);
            ans.witness_path = Some(path);
        }
        return Ok(ans);
    }
    if !base.tables().all(|f| is_affine(f).is_some()) {
        return Err(Error::WrongClass(
            "quantified formulas are easy only over monotone or linear bases".into(),
        ));
    }
    let pair = check_pair(&obj, base, n, s, t)?;
    match linear_residual(q, base, &free)? {
        LinearResidual::Tautology => {
            let mut ans = EasyAnswer::new(true, Rationale::Tautology);
            if let Some((s, t)) = pair {
                ans.st_connected = Some(true);
                ans.witness_path = Some(flip_path(s, t, 1..=n));
            }
            Ok(ans)
        }
        // check_pair already rejected any s or t.
        LinearResidual::Unsatisfiable => Ok(EasyAnswer::new(true, Rationale::Unsatisfiable)),
        LinearResidual::Form(form) => Ok(decide_form(&form, n, pair)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::parse_qbf;

    fn xor() -> BaseSet {
        BaseSet::from_rows(&[("xor", "0110")]).unwrap()
    }

    #[test]
    fn examples() {
        let b = xor();
        let q = parse_qbf("A x3 : xor(x1, xor(x3,x3))", &b).unwrap();
        let a = qbf_easy_decide(&q, &b, 1, None, None).unwrap();
        assert!(a.connected);
        assert_eq!(
            a.rationale,
            Rationale::Linear {
                support: vec![1],
                constant: false
            }
        );

        let q = parse_qbf("E x2 : xor(x1,x2)", &b).unwrap();
        let a = qbf_easy_decide(&q, &b, 1, Some(&"0".parse().unwrap()), Some(&"1".parse().unwrap()))
            .unwrap();
        assert_eq!(a.rationale, Rationale::Tautology);
        assert_eq!(a.witness_path.unwrap().len(), 2);

        let q = parse_qbf("A x2 : xor(x1,x2)", &b).unwrap();
        let a = qbf_easy_decide(&q, &b, 1, None, None).unwrap();
        assert!(a.connected);
        assert_eq!(a.rationale, Rationale::Unsatisfiable);
        assert!(matches!(
            qbf_easy_decide(&q, &b, 1, Some(&"0".parse().unwrap()), Some(&"0".parse().unwrap())),
            Err(Error::NotASolution(_))
        ));
    }

    #[test]
    fn residual_is_renumbered() {
        let b = xor();
        let q = parse_qbf("E x1 : xor(x2, xor(x1, x1))", &b).unwrap();
        // free variables are x2 (and x3 when padded); x2 sits at position 1
        let r = linear_residual(&q, &b, &q.free_vars_padded(2).unwrap()).unwrap();
        assert_eq!(
            r,
            LinearResidual::Form(LinearForm {
                support: vec![1],
                constant: false
            })
        );
    }

    #[test]
    fn monotone_quantified() {
        let b = BaseSet::from_rows(&[("and", "0001"), ("or", "0111")]).unwrap();
        let q = parse_qbf("A x3 : or(and(x1,x3),x2)", &b).unwrap();
        let a = qbf_easy_decide(&q, &b, 2, Some(&"01".parse().unwrap()), Some(&"11".parse().unwrap()))
            .unwrap();
        assert!(a.connected);
        assert_eq!(a.witness_path.unwrap().len(), 2);
    }
}
