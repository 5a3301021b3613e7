use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{lcm_denominators, BigRat};
use crate::error::{MonoidError, Result};

/// Dense univariate polynomial over `Q`; `coeffs[i]` multiplies `s^i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<BigRat>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| super::int(c)).collect())
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * s^k`.
    pub fn monomial(c: BigRat, k: usize) -> Self {
        let mut coeffs = vec![BigRat::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `s - r`
    pub fn linear_root(r: &BigRat) -> Self {
        Self::new(vec![-r.clone(), BigRat::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRat {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn lc(&self) -> BigRat {
        self.coeffs.last().cloned().unwrap_or_else(BigRat::zero)
    }

    /// Multiplicity of the root `0`.
    pub fn low_order(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn eval(&self, x: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRat::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn scale(&self, k: &BigRat) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        UPoly { coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = self.lc().recip();
        self.scale(&inv)
    }

    /// Multiplies by `s^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UPoly { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division over `Q`.
    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.deg();
        if self.degree().is_none_or(|n| n < dd) {
            return (Self::zero(), self.clone());
        }
        let inv = d.lc().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRat::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, d: &UPoly) -> UPoly {
        self.div_rem(d).1
    }

    /// Division that must be exact; `None` otherwise.
    pub fn exact_div(&self, d: &UPoly) -> Option<UPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &UPoly) -> bool {
        other.rem(self).is_zero()
    }

    /// Substitutes `s -> other` (composition).
    pub fn compose(&self, other: &UPoly) -> UPoly {
        let mut acc = UPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * other) + &UPoly::constant(c.clone());
        }
        acc
    }

    /// Splits into `(content, primitive integer polynomial)` with
    /// `self = content * prim` and positive leading integer coefficient.
    pub fn primitive_int(&self) -> (BigRat, Vec<BigInt>) {
        if self.is_zero() {
            return (BigRat::zero(), Vec::new());
        }
        let den = lcm_denominators(&self.coeffs);
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRat::from_integer(den.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if ints.last().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        let prim = ints.iter().map(|c| c / &g).collect();
        (BigRat::new(g, den), prim)
    }

    pub fn from_bigints(c: &[BigInt]) -> UPoly {
        UPoly::new(c.iter().map(|x| BigRat::from_integer(x.clone())).collect())
    }

    /// Product of `s - r` over a list of roots.
    pub fn from_roots(roots: &[BigRat]) -> UPoly {
        roots.iter().fold(UPoly::one(), |acc, r| &acc * &UPoly::linear_root(r))
    }

    /// Rational roots, each listed once.
    ///
    /// A rational root `r` of an integer polynomial with leading coefficient
    /// `a` satisfies `a*r ∈ Z`, so isolating intervals narrower than `1/|a|`
    /// leave at most one candidate numerator.
    pub fn rational_roots(&self) -> Vec<BigRat> {
        if self.degree().is_none_or(|d| d == 0) {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut p = self.clone();
        let z = p.low_order();
        if z > 0 {
            out.push(BigRat::zero());
            p = UPoly::new(p.coeffs[z..].to_vec());
        }
        let sqf = squarefree_part(&p);
        if sqf.deg() == 0 {
            return out;
        }
        let (_, prim) = sqf.primitive_int();
        if !has_roots_mod_primes(&prim) {
            out.sort();
            return out;
        }
        let lead = prim.last().unwrap().abs();
        let iso = super::SturmSequence::new(&sqf);
        let width = BigRat::new(BigInt::one(), lead.clone() * 4);
        for iv in iso.isolate() {
            if iv.lo == iv.hi {
                out.push(iv.lo.clone());
                continue;
            }
            let iv = iso.refine(&iv, &width);
            if iv.lo == iv.hi {
                out.push(iv.lo.clone());
                continue;
            }
            let leadq = BigRat::from_integer(lead.clone());
            let lo = (&iv.lo * &leadq).floor().to_integer();
            let hi = (&iv.hi * &leadq).ceil().to_integer();
            let mut k = lo;
            while k <= hi {
                let cand = BigRat::new(k.clone(), lead.clone());
                if cand > iv.lo && cand < iv.hi && sqf.eval(&cand).is_zero() {
                    out.push(cand);
                    break;
                }
                k += 1;
            }
        }
        out.sort();
        out
    }

    pub fn fmt_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let cs = super::rat_to_string(&a);
            match i {
                0 => s.push_str(&cs),
                _ => {
                    if !a.is_one() {
                        s.push_str(&cs);
                        s.push('*');
                    }
                    s.push_str(var);
                    if i > 1 {
                        s.push_str(&format!("^{i}"));
                    }
                }
            }
        }
        s
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({})", self.fmt_in("s"))
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_in("s"))
    }
}

impl<'a> Add<&'a UPoly> for &'a UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a UPoly> for &'a UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a UPoly> for &'a UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![BigRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<UPoly> for UPoly {
            type Output = UPoly;
            fn $m(self, rhs: UPoly) -> UPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

// ---- integer polynomial kernels -------------------------------------------

type ZPoly = Vec<BigInt>;

fn ztrim(mut p: ZPoly) -> ZPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn zcontent(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn zdiv_scalar(p: &[BigInt], k: &BigInt) -> ZPoly {
    p.iter().map(|c| c / k).collect()
}

/// `lc(b)^(deg a - deg b + 1) * a mod b` over `Z`.
fn zprem(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut r = a.to_vec();
    if r.len() < b.len() {
        return r;
    }
    let mut steps = r.len() - b.len() + 1;
    while r.len() >= b.len() && !r.is_empty() {
        let k = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[k + j] -= &lr * bc;
        }
        r.pop();
        r = ztrim(r);
        steps -= 1;
    }
    if steps > 0 {
        let f = num_traits::pow(lb, steps);
        for c in r.iter_mut() {
            *c *= &f;
        }
    }
    r
}

fn zpow(b: &BigInt, e: usize) -> BigInt {
    num_traits::pow(b.clone(), e)
}

/// Subresultant resultant of two nonzero integer polynomials.
fn zresultant(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    let ca = zcontent(&a);
    let cb = zcontent(&b);
    a = zdiv_scalar(&a, &ca);
    b = zdiv_scalar(&b, &cb);
    let t = zpow(&ca, b.len() - 1) * zpow(&cb, a.len() - 1);
    let mut s = BigInt::one();
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
        if (a.len() - 1) % 2 == 1 && (b.len() - 1) % 2 == 1 {
            s = -s;
        }
    }
    if b.len() == 1 {
        return s * t * zpow(&b[0], a.len() - 1);
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = a.len() - 1;
        let db = b.len() - 1;
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = zprem(&a, &b);
        a = b;
        if r.is_empty() {
            return BigInt::zero();
        }
        let div = &g * zpow(&h, delta);
        b = zdiv_scalar(&r, &div);
        g = a.last().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => zpow(&g, delta) / zpow(&h, delta - 1),
        };
        if b.len() == 1 {
            let da = a.len() - 1;
            let hh = zpow(&b[0], da) / zpow(&h, da - 1);
            return s * t * hh;
        }
    }
}

/// Primitive subresultant gcd of integer polynomials (positive leading coefficient).
fn zgcd(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    if b.is_empty() {
        let c = zcontent(&a);
        return zdiv_scalar(&a, &c);
    }
    a = zdiv_scalar(&a, &zcontent(&a));
    b = zdiv_scalar(&b, &zcontent(&b));
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = a.len() - b.len();
        let r = zprem(&a, &b);
        if r.is_empty() {
            let c = zcontent(&b);
            let mut out = zdiv_scalar(&b, &c);
            if out.last().unwrap().is_negative() {
                out = out.iter().map(|x| -x).collect();
            }
            return out;
        }
        if r.len() == 1 {
            return vec![BigInt::one()];
        }
        a = b;
        let div = &g * zpow(&h, delta);
        b = zdiv_scalar(&r, &div);
        g = a.last().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => zpow(&g, delta) / zpow(&h, delta - 1),
        };
    }
}

fn to_zpoly(p: &UPoly) -> (BigInt, ZPoly) {
    let den = lcm_denominators(p.coeffs());
    let z = p
        .coeffs()
        .iter()
        .map(|c| (c * BigRat::from_integer(den.clone())).to_integer())
        .collect();
    (den, z)
}

/// Monic greatest common divisor.
pub fn upoly_gcd(p: &UPoly, q: &UPoly) -> Result<UPoly> {
    if p.is_zero() && q.is_zero() {
        return Err(MonoidError::GcdUndefined);
    }
    if p.is_zero() {
        return Ok(q.monic());
    }
    if q.is_zero() {
        return Ok(p.monic());
    }
    let (_, a) = to_zpoly(p);
    let (_, b) = to_zpoly(q);
    Ok(UPoly::from_bigints(&zgcd(&a, &b)).monic())
}

pub(crate) fn gcd(p: &UPoly, q: &UPoly) -> UPoly {
    upoly_gcd(p, q).unwrap_or_else(|_| UPoly::zero())
}

/// Resultant (Sylvester determinant) of two nonzero polynomials.
pub fn resultant(p: &UPoly, q: &UPoly) -> Result<BigRat> {
    if p.is_zero() || q.is_zero() {
        return Err(MonoidError::ZeroPolynomial("resultant"));
    }
    let (dp, a) = to_zpoly(p);
    let (dq, b) = to_zpoly(q);
    let r = BigRat::from_integer(zresultant(&a, &b));
    let m = p.deg();
    let n = q.deg();
    let scale = BigRat::from_integer(zpow(&dp, n) * zpow(&dq, m));
    Ok(r / scale)
}

/// Resultant with prescribed formal degrees (Sylvester matrix of sizes
/// `m + n`), allowing the actual leading coefficients to vanish.
pub fn formal_resultant(p: &UPoly, m: usize, q: &UPoly, n: usize) -> BigRat {
    let (Some(dp), Some(dq)) = (p.degree(), q.degree()) else {
        return BigRat::zero();
    };
    assert!(dp <= m && dq <= n);
    if dp < m && dq < n {
        return BigRat::zero();
    }
    if m == 0 {
        return num_traits::pow(p.coeff(0), n);
    }
    if n == 0 {
        return num_traits::pow(q.coeff(0), m);
    }
    if dp < m {
        // Expand along leading columns: ((-1)^n * lc(q))^(m - dp).
        let f = num_traits::pow(q.lc(), m - dp);
        let sign = if (n * (m - dp)) % 2 == 1 { -BigRat::one() } else { BigRat::one() };
        let inner = if dp == 0 {
            num_traits::pow(p.coeff(0), n)
        } else {
            resultant(p, q).unwrap()
        };
        return sign * f * inner;
    }
    if dq < n {
        let sign = if (m * n) % 2 == 1 { -BigRat::one() } else { BigRat::one() };
        return sign * formal_resultant(q, n, p, m);
    }
    resultant(p, q).unwrap()
}

/// Pairs `(factor, multiplicity)`: pairwise coprime monic squarefree factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub unit: BigRat,
    pub factors: Vec<(UPoly, usize)>,
}

impl SquarefreeDecomposition {
    /// Multiplies everything back together.
    pub fn expand(&self) -> UPoly {
        self.factors
            .iter()
            .fold(UPoly::constant(self.unit.clone()), |acc, (f, m)| &acc * &f.pow(*m as u32))
    }
}

/// Yun's algorithm.
pub fn squarefree_decomposition(p: &UPoly) -> Result<SquarefreeDecomposition> {
    if p.is_zero() {
        return Err(MonoidError::ZeroPolynomial("squarefree decomposition"));
    }
    let unit = p.lc();
    let mut factors = Vec::new();
    if p.deg() == 0 {
        return Ok(SquarefreeDecomposition { unit, factors });
    }
    let dp = p.derivative();
    let b = gcd(p, &dp);
    let mut c = p.exact_div(&b).unwrap().monic();
    let mut d = &dp.exact_div(&b).unwrap().scale(&unit.recip()) - &c.derivative();
    let mut i = 1;
    while c.deg() > 0 {
        let a = gcd(&c, &d);
        if a.deg() > 0 {
            factors.push((a.clone(), i));
        }
        c = c.exact_div(&a).unwrap();
        d = &d.exact_div(&a).unwrap() - &c.derivative();
        i += 1;
    }
    Ok(SquarefreeDecomposition { unit, factors })
}

/// Product of the distinct monic irreducible factors.
pub fn squarefree_part(p: &UPoly) -> UPoly {
    if p.deg() == 0 {
        return UPoly::one();
    }
    let g = gcd(p, &p.derivative());
    p.exact_div(&g).unwrap().monic()
}

pub fn is_squarefree(p: &UPoly) -> bool {
    !p.is_zero() && gcd(p, &p.derivative()).deg() == 0
}

/// False when some prime not dividing the leading coefficient sees no root of
/// the integer polynomial, which rules out rational roots.
fn has_roots_mod_primes(coeffs: &[BigInt]) -> bool {
    const PRIMES: [u64; 8] = [101, 103, 107, 109, 113, 127, 131, 137];
    for ell in PRIMES {
        let m = BigInt::from(ell);
        let c: Vec<u64> = coeffs
            .iter()
            .map(|a| a.mod_floor(&m).try_into().expect("residue fits"))
            .collect();
        if *c.last().unwrap() == 0 {
            continue;
        }
        let root = (0..ell).any(|x| c.iter().rev().fold(0, |acc, &a| (acc * x + a) % ell) == 0);
        if !root {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    fn p(c: &[i64]) -> UPoly {
        UPoly::from_ints(c)
    }

    /// Sylvester determinant by cofactor-free elimination over Q.
    fn sylvester_det(a: &UPoly, b: &UPoly) -> BigRat {
        let m = a.deg();
        let n = b.deg();
        let size = m + n;
        let mut mat = vec![vec![BigRat::zero(); size]; size];
        for r in 0..n {
            for j in 0..=m {
                mat[r][r + j] = a.coeff(m - j);
            }
        }
        for r in 0..m {
            for j in 0..=n {
                mat[n + r][r + j] = b.coeff(n - j);
            }
        }
        crate::linalg::determinant(mat)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(upoly_gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(upoly_gcd(&p(&[1, 0, 0, 1]), &p(&[1, 0, 1])).unwrap(), p(&[1]));
        assert_eq!(upoly_gcd(&p(&[2, 4]), &UPoly::zero()).unwrap(), UPoly::new(vec![int(1) / int(2), int(1)]));
        assert!(matches!(upoly_gcd(&UPoly::zero(), &UPoly::zero()), Err(MonoidError::GcdUndefined)));
    }

    #[test]
    fn squarefree_examples() {
        // (s-1)^2 (s+2)
        let f = &p(&[-1, 1]).pow(2) * &p(&[2, 1]);
        let d = squarefree_decomposition(&f).unwrap();
        assert_eq!(d.factors, vec![(p(&[2, 1]), 1), (p(&[-1, 1]), 2)]);
        let s12 = UPoly::monomial(int(1), 12);
        assert_eq!(squarefree_decomposition(&s12).unwrap().factors, vec![(p(&[0, 1]), 12)]);
        let g = &p(&[1, 0, 1]).pow(3) * &p(&[-3, 1]);
        let d = squarefree_decomposition(&g).unwrap();
        assert_eq!(d.factors, vec![(p(&[-3, 1]), 1), (p(&[1, 0, 1]), 3)]);
        assert_eq!(d.expand(), g);
        assert!(squarefree_decomposition(&UPoly::zero()).is_err());
    }

    #[test]
    fn resultant_examples() {
        let (a, b) = (int(3), int(-5));
        let r = resultant(&UPoly::linear_root(&a), &UPoly::linear_root(&b)).unwrap();
        // Sylvester convention: res(s - a, s - b) = a - b.
        assert_eq!(r, &a - &b);
        assert!(resultant(&p(&[-2, 0, 1]), &p(&[-2, 0, 1])).unwrap().is_zero());
        let r = resultant(&p(&[1, 0, 1]), &p(&[-1, 0, 0, 1])).unwrap();
        assert_eq!(r, sylvester_det(&p(&[1, 0, 1]), &p(&[-1, 0, 0, 1])));
        assert_eq!(r, int(2));
    }

    #[test]
    fn formal_resultant_matches_sylvester_with_zero_leading() {
        // p has formal degree 3 but actual degree 1.
        let a = p(&[2, 3]);
        let b = p(&[1, -1, 5]);
        let m = 3;
        let n = 2;
        let size = m + n;
        let mut mat = vec![vec![BigRat::zero(); size]; size];
        for r in 0..n {
            for j in 0..=m {
                mat[r][r + j] = a.coeff(m - j);
            }
        }
        for r in 0..m {
            for j in 0..=n {
                mat[n + r][r + j] = b.coeff(n - j);
            }
        }
        assert_eq!(formal_resultant(&a, m, &b, n), crate::linalg::determinant(mat));
    }

    #[test]
    fn rational_roots_found() {
        let f = &(&p(&[-1, 2]) * &p(&[3, 7])) * &p(&[2, 0, 1]);
        assert_eq!(f.rational_roots(), vec![int(-3) / int(7), int(1) / int(2)]);
        assert!(p(&[-2, 0, 1]).rational_roots().is_empty());
    }

    #[test]
    fn root_on_interval_endpoint() {
        // 3s^2 + 11s + 6 = (s + 3)(3s + 2)
        assert_eq!(p(&[6, 11, 3]).rational_roots(), vec![int(-3), int(-2) / int(3)]);
    }
}
