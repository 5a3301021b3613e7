use num_traits::{One, Zero};

use super::{BigRat, UPoly};

/// Homogeneous polynomial in `(s, t)` of a fixed degree, stored through its
/// dehomogenization `poly(s) = form(s, 1)`.
///
/// The root `(1:0)` is the degree drop `degree - deg(poly)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    pub degree: usize,
    pub poly: UPoly,
}

impl BinaryForm {
    pub fn new(degree: usize, poly: UPoly) -> Self {
        assert!(poly.is_zero() || poly.deg() <= degree, "binary form exceeds its degree");
        BinaryForm { degree, poly }
    }

    /// From coefficients `c[i]` of `s^i t^(degree-i)`.
    pub fn from_coeffs(coeffs: Vec<BigRat>) -> Self {
        let degree = coeffs.len().saturating_sub(1);
        BinaryForm { degree, poly: UPoly::new(coeffs) }
    }

    pub fn zero(degree: usize) -> Self {
        BinaryForm { degree, poly: UPoly::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Coefficient of `s^i t^(degree-i)`.
    pub fn coeff(&self, i: usize) -> BigRat {
        self.poly.coeff(i)
    }

    pub fn eval(&self, s: &BigRat, t: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        let mut tp = BigRat::one();
        let mut terms = Vec::with_capacity(self.degree + 1);
        for i in 0..=self.degree {
            terms.push((i, tp.clone()));
            tp *= t;
        }
        // c_i s^i t^(D-i)
        for (i, c) in self.poly.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let spow = num_traits::pow(s.clone(), i);
            acc += c * spow * &terms[self.degree - i].1;
        }
        acc
    }

    /// Multiplicity of the root `(1:0)`, i.e. the power of `t` dividing the form.
    pub fn mult_at_infinity(&self) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        self.degree - self.poly.deg()
    }

    /// Power of `s` dividing the form, i.e. multiplicity of the root `(0:1)`.
    pub fn mult_at_zero(&self) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        self.poly.low_order()
    }

    /// Multiplicity of the parameter point `(a:b)` as a root.
    pub fn mult_at(&self, a: &BigRat, b: &BigRat) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        if b.is_zero() {
            return self.mult_at_infinity();
        }
        let r = a / b;
        let lin = UPoly::linear_root(&r);
        let mut p = self.poly.clone();
        let mut k = 0;
        while let Some(q) = p.exact_div(&lin) {
            p = q;
            k += 1;
        }
        k
    }

    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        BinaryForm { degree: self.degree + other.degree, poly: &self.poly * &other.poly }
    }

    /// `(b s - a t)`, vanishing at the parameter point `(a:b)`.
    pub fn linear_factor(a: &BigRat, b: &BigRat) -> BinaryForm {
        BinaryForm { degree: 1, poly: UPoly::new(vec![-a.clone(), b.clone()]) }
    }

    pub fn pow(&self, e: usize) -> BinaryForm {
        BinaryForm { degree: self.degree * e, poly: self.poly.pow(e as u32) }
    }

    pub fn scale(&self, k: &BigRat) -> BinaryForm {
        BinaryForm { degree: self.degree, poly: self.poly.scale(k) }
    }

    pub fn add(&self, other: &BinaryForm) -> BinaryForm {
        assert_eq!(self.degree, other.degree);
        BinaryForm { degree: self.degree, poly: &self.poly + &other.poly }
    }

    pub fn fmt_st(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for i in (0..=self.degree).rev() {
            let c = self.coeff(i);
            if c.is_zero() {
                continue;
            }
            let neg = c < BigRat::zero();
            let a = if neg { -c } else { c };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut mono = Vec::new();
            let j = self.degree - i;
            for (v, e) in [("s", i), ("t", j)] {
                match e {
                    0 => {}
                    1 => mono.push(v.to_string()),
                    _ => mono.push(format!("{v}^{e}")),
                }
            }
            let cs = super::rat_to_string(&a);
            if mono.is_empty() {
                out.push_str(&cs);
            } else {
                if !a.is_one() {
                    out.push_str(&cs);
                    out.push('*');
                }
                out.push_str(&mono.join("*"));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    #[test]
    fn multiplicities() {
        // s^8 t^4 as a form of degree 12
        let f = BinaryForm::new(12, UPoly::monomial(int(1), 8));
        assert_eq!(f.mult_at_zero(), 8);
        assert_eq!(f.mult_at_infinity(), 4);
        assert_eq!(f.mult_at(&int(0), &int(1)), 8);
        assert_eq!(f.mult_at(&int(1), &int(0)), 4);
        assert_eq!(f.mult_at(&int(1), &int(1)), 0);
        assert_eq!(f.fmt_st(), "s^8*t^4");
    }

    #[test]
    fn linear_factor_vanishes() {
        let l = BinaryForm::linear_factor(&int(2), &int(3)).pow(2);
        assert!(l.eval(&int(2), &int(3)).is_zero());
        assert_eq!(l.mult_at(&int(4), &int(6)), 2);
        assert_eq!(l.eval(&int(1), &int(0)), int(9));
    }
}
