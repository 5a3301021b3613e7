use num_traits::Zero;

use crate::error::{MonoidError, Result};
use crate::exactnum::{real_root_count, squarefree_decomposition, BigRat, BinaryForm, UPoly};
use crate::mvpoly::{HPoly, RationalMap};

/// A root class of a pulled-back binary form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamRoot {
    /// The rational parameter point `(a:b)`.
    Point(BigRat, BigRat),
    /// Roots `(s:1)` of a squarefree factor of degree at least 2.
    Class(UPoly),
}

impl ParamRoot {
    pub fn size(&self) -> usize {
        match self {
            ParamRoot::Point(..) => 1,
            ParamRoot::Class(h) => h.deg(),
        }
    }

    pub fn real_count(&self) -> usize {
        match self {
            ParamRoot::Point(..) => 1,
            ParamRoot::Class(h) => real_root_count(h),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PullbackMultiplicities {
    /// Multiplicity at each excluded parameter point, in input order.
    pub excluded: Vec<usize>,
    /// Remaining roots with their multiplicities.
    pub roots: Vec<(ParamRoot, usize)>,
    pub form: BinaryForm,
}

impl PullbackMultiplicities {
    pub fn total_remaining(&self) -> usize {
        self.roots.iter().map(|(r, m)| r.size() * m).sum()
    }

    /// One multiplicity per remaining root, sorted.
    pub fn multiset(&self) -> Vec<usize> {
        let mut v: Vec<usize> =
            self.roots.iter().flat_map(|(r, m)| std::iter::repeat_n(*m, r.size())).collect();
        v.sort_unstable();
        v
    }
}

/// Root multiplicities of `f(θ(s,t))`, with the excluded parameter points
/// reported separately.
pub fn pullback_multiplicities(
    f: &HPoly,
    theta: &RationalMap,
    excluded: &[(BigRat, BigRat)],
) -> Result<PullbackMultiplicities> {
    let form = f.pullback(theta)?;
    if form.is_zero() {
        return Err(MonoidError::IdenticallyZero);
    }
    root_multiplicities(&form, excluded)
}

pub fn root_multiplicities(form: &BinaryForm, excluded: &[(BigRat, BigRat)]) -> Result<PullbackMultiplicities> {
    let mut poly = form.poly.clone();
    let mut inf_excluded = false;
    let mut ex = Vec::new();
    for (a, b) in excluded {
        let k = form.mult_at(a, b);
        ex.push(k);
        if b.is_zero() {
            inf_excluded = true;
        } else {
            let lin = UPoly::linear_root(&(a / b));
            for _ in 0..k {
                poly = poly.exact_div(&lin).unwrap();
            }
        }
    }
    let mut roots = Vec::new();
    let inf = form.mult_at_infinity();
    if inf > 0 && !inf_excluded {
        roots.push((ParamRoot::Point(BigRat::from_integer(1.into()), BigRat::zero()), inf));
    }
    if poly.deg() > 0 {
        for (h, m) in squarefree_decomposition(&poly)?.factors {
            let mut rest = h.clone();
            for r in h.rational_roots() {
                roots.push((ParamRoot::Point(r.clone(), BigRat::from_integer(1.into())), m));
                rest = rest.exact_div(&UPoly::linear_root(&r)).unwrap();
            }
            if rest.deg() > 0 {
                roots.push((ParamRoot::Class(rest.monic()), m));
            }
        }
    }
    Ok(PullbackMultiplicities { excluded: ex, roots, form: form.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;
    use crate::mvpoly::parse_hpoly;

    const X: [&str; 3] = ["x1", "x2", "x3"];

    fn forms(rows: &[&[i64]]) -> RationalMap {
        RationalMap::from_forms(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn cusp_parameterization() {
        // θ = (s^2 t, s^3, t^3): coefficient lists by power of s.
        let theta = forms(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0]]);
        let f4 = parse_hpoly("x1^4", &X).unwrap();
        let pm = pullback_multiplicities(&f4, &theta, &[(int(0), int(1)), (int(1), int(0))]).unwrap();
        assert_eq!(pm.excluded, vec![8, 4]);
        assert!(pm.roots.is_empty());
        let cusp = parse_hpoly("x1^3 - x2^2*x3", &X).unwrap();
        assert!(matches!(pullback_multiplicities(&cusp, &theta, &[]), Err(MonoidError::IdenticallyZero)));
    }

    #[test]
    fn line_roots() {
        let theta = forms(&[&[0, 1], &[1, 0], &[0, 0]]);
        let x2 = parse_hpoly("x2", &X).unwrap();
        let pm = pullback_multiplicities(&x2, &theta, &[]).unwrap();
        assert_eq!(pm.roots, vec![(ParamRoot::Point(int(1), int(0)), 1)]);
        let q = parse_hpoly("x1^2 + x2^2", &X).unwrap();
        let pm = pullback_multiplicities(&q, &theta, &[]).unwrap();
        assert_eq!(pm.roots.len(), 1);
        assert_eq!(pm.roots[0].0.real_count(), 0);
    }
}
