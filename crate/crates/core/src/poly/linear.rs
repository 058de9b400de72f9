//! Linear bases: the represented function is `x_{i₁} ⊕ … ⊕ x_{i_m} ⊕ c`,
//! recovered by forward GF(2) propagation through the circuit.

use std::collections::HashMap;

use super::{check_pair, flip_path, verify_path, EasyAnswer, Rationale};
use crate::boolfn::bits::BitVector;
use crate::boolfn::props::{is_affine, LinearForm};
use crate::boolfn::BaseSet;
use crate::error::{Error, Result};
use crate::rep::{formula_to_circuit, Circuit, Instance, Node};

fn require_linear(base: &BaseSet) -> Result<()> {
    match base.iter().find(|(_, f)| is_affine(f).is_none()) {
        Some((name, _)) => Err(Error::WrongClass(format!("`{name}` is not linear"))),
        None => Ok(()),
    }
}

/// Each gate's form is its function's form with every wire replaced by
/// the form of the predecessor it carries.
pub fn circuit_linear_form(c: &Circuit, base: &BaseSet) -> Result<LinearForm> {
    let mut gate_forms: HashMap<&str, LinearForm> = HashMap::new();
    let mut forms: Vec<LinearForm> = Vec::with_capacity(c.nodes().len());
    for node in c.nodes() {
        let form = match node {
            Node::Input(i) => LinearForm::var(*i),
            Node::Gate { func, args } => {
                if !gate_forms.contains_key(func.as_str()) {
                    let f = base
                        .get(func)
                        .ok_or_else(|| Error::UnknownFunction(func.clone()))?;
                    let form =
                        is_affine(f).ok_or_else(|| Error::NonAffineBaseFunction(func.clone()))?;
                    gate_forms.insert(func, form);
                }
                let g = &gate_forms[func.as_str()];
                g.support
                    .iter()
                    .fold(LinearForm::constant(g.constant), |acc, &k| {
                        acc.xor(&forms[args[k as usize - 1]])
                    })
            }
        };
        forms.push(form);
    }
    Ok(forms[c.output()].clone())
}

pub fn linear_form_of(obj: &Instance, base: &BaseSet) -> Result<LinearForm> {
    match obj {
        Instance::Formula(f) => circuit_linear_form(&formula_to_circuit(f), base),
        Instance::Circuit(c) => circuit_linear_form(c, base),
        other => Err(Error::WrongClass(format!(
            "no linear form for a {}",
            other.kind()
        ))),
    }
}

/// Connectivity of `form` in dimension `n`, with `s`, `t` already checked.
pub(crate) fn decide_form(form: &LinearForm, n: u32, pair: Option<(BitVector, BitVector)>) -> EasyAnswer {
    let satisfiable = !form.support.is_empty() || form.constant;
    let mut ans = EasyAnswer::new(
        form.support.len() <= 1 || !satisfiable,
        Rationale::Linear {
            support: form.support.clone(),
            constant: form.constant,
        },
    );
    if let Some((s, t)) = pair {
        let agree = ans.st_verdict(&s, &t);
        ans.st_connected = Some(agree);
        if agree {
            let fictive = (1..=n).filter(|j| form.support.binary_search(j).is_err());
            ans.witness_path = Some(flip_path(s, t, fictive));
        }
    }
    ans
}

pub fn linear_decide(
    obj: &Instance,
    base: &BaseSet,
    n: u32,
    s: Option<&BitVector>,
    t: Option<&BitVector>,
) -> Result<EasyAnswer> {
    require_linear(base)?;
    let form = linear_form_of(obj, base)?;
    if form.max_var() > n {
        return Err(Error::MissingVariable(form.max_var()));
    }
    let pair = check_pair(obj, base, n, s, t)?;
    let ans = decide_form(&form, n, pair);
    if let Some(path) = &ans.witness_path {
        if !verify_path(obj, base, path)? {
            return Err(Error::Invalid("linear witness failed verification".into()));
        }
    }
    Ok(ans)
}
