//! Monotone bases: the solution graph is connected and distances equal
//! Hamming distances.

use super::{check_pair, flip_path, verify_path, EasyAnswer, Rationale};
use crate::boolfn::bits::BitVector;
use crate::boolfn::props::is_monotone;
use crate::boolfn::BaseSet;
use crate::error::{Error, Result};
use crate::rep::Instance;

pub(crate) fn require_monotone(base: &BaseSet) -> Result<()> {
    match base.iter().find(|(_, f)| !is_monotone(f)) {
        Some((name, _)) => Err(Error::WrongClass(format!("`{name}` is not monotone"))),
        None => Ok(()),
    }
}

/// Path from `s` to `t` raising the 0→1 positions first, then lowering
/// the 1→0 positions, each group in index order.
pub fn monotone_path(s: BitVector, t: BitVector) -> Vec<BitVector> {
    let n = s.dim();
    let up = (1..=n).filter(|&j| !s.get(j) && t.get(j));
    let down = (1..=n).filter(|&j| s.get(j) && !t.get(j));
    flip_path(s, t, up.chain(down))
}

pub fn monotone_decide(
    obj: &Instance,
    base: &BaseSet,
    n: u32,
    s: Option<&BitVector>,
    t: Option<&BitVector>,
) -> Result<EasyAnswer> {
    require_monotone(base)?;
    let mut ans = EasyAnswer::new(true, Rationale::Monotone);
    if let Some((s, t)) = check_pair(obj, base, n, s, t)? {
        let path = monotone_path(s, t);
        if !verify_path(obj, base, &path)? {
            return Err(Error::Invalid("monotone witness failed verification".into()));
        }
        ans.st_connected = Some(true);
        ans.witness_path = Some(path);
    }
    Ok(ans)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::parse_formula;

    fn base() -> BaseSet {
        BaseSet::from_rows(&[("and", "0001"), ("or", "0111")]).unwrap()
    }

    fn bv(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        let b = base();
        let or: Instance = parse_formula("or(x1,x2)", &b).unwrap().into();
        let a = monotone_decide(&or, &b, 2, Some(&bv("01")), Some(&bv("10"))).unwrap();
        assert!(a.connected);
        assert_eq!(a.st_connected, Some(true));
        let p: Vec<String> = a.witness_path.unwrap().iter().map(ToString::to_string).collect();
        assert_eq!(p, ["01", "11", "10"]);

        let and: Instance = parse_formula("and(x1,x2)", &b).unwrap().into();
        let a = monotone_decide(&and, &b, 2, Some(&bv("11")), Some(&bv("11"))).unwrap();
        assert_eq!(a.witness_path.unwrap().len(), 1);

        assert!(matches!(
            monotone_decide(&or, &b, 2, Some(&bv("00")), Some(&bv("11"))),
            Err(Error::NotASolution(_))
        ));
        let xor = BaseSet::from_rows(&[("xor", "0110")]).unwrap();
        let f: Instance = parse_formula("xor(x1,x2)", &xor).unwrap().into();
        assert!(matches!(monotone_decide(&f, &xor, 2, None, None), Err(Error::WrongClass(_))));
    }
}
