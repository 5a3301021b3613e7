use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactnum::{rat_to_string, BigRat, UPoly};

pub type Exponent = Vec<u32>;

/// Sparse polynomial in a fixed number of positional variables.
///
/// Terms are kept in a `BTreeMap`, so iteration runs in ascending lexicographic
/// order of exponent vectors (first variable most significant). Stored
/// coefficients are never zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, BigRat>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigRat) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRat::one())
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, BigRat::one())
    }

    pub fn monomial(exp: Exponent, c: BigRat) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponent, BigRat)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length mismatch");
            p.add_term(e, c);
        }
        p
    }

    /// Linear form `Σ c_i x_i`.
    pub fn linear(coeffs: &[BigRat]) -> Self {
        let n = coeffs.len();
        Self::from_terms(
            n,
            coeffs.iter().enumerate().map(|(i, c)| {
                let mut e = vec![0; n];
                e[i] = 1;
                (e, c.clone())
            }),
        )
    }

    pub fn add_term(&mut self, exp: Exponent, c: BigRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &BigRat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: &[u32]) -> BigRat {
        self.terms.get(exp).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_term(&self) -> BigRat {
        self.coeff(&vec![0; self.nvars])
    }

    /// Total degree; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Smallest total degree of a term; `None` for zero.
    pub fn low_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.total_degree() == self.low_degree()
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|e| e[v]).max().unwrap_or(0)
    }

    pub fn involves(&self, v: usize) -> bool {
        self.terms.keys().any(|e| e[v] > 0)
    }

    /// Leading term in lexicographic order.
    pub fn leading(&self) -> Option<(&Exponent, &BigRat)> {
        self.terms.iter().next_back()
    }

    pub fn lc(&self) -> BigRat {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(BigRat::zero)
    }

    /// Homogeneous component of total degree `k`.
    pub fn homogeneous_part(&self, k: u32) -> MPoly {
        MPoly::from_terms(
            self.nvars,
            self.terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == k)
                .map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    pub fn scale(&self, k: &BigRat) -> MPoly {
        if k.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect() }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut acc = MPoly::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, point: &[BigRat]) -> BigRat {
        assert_eq!(point.len(), self.nvars, "evaluation point has wrong length");
        let mut acc = BigRat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            acc += t;
        }
        acc
    }

    pub fn partial(&self, v: usize) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[v] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[v] -= 1;
            out.add_term(e2, c * BigRat::from_integer(BigInt::from(e[v])));
        }
        out
    }

    /// Substitutes `x_v = value`; the variable stays in the ring but no
    /// longer appears.
    pub fn substitute(&self, v: usize, value: &BigRat) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[v] = 0;
            out.add_term(e2, c * num_traits::pow(value.clone(), e[v] as usize));
        }
        out
    }

    /// Composition: replaces `x_i` by `images[i]` (all in a common ring).
    pub fn compose(&self, images: &[MPoly]) -> MPoly {
        assert_eq!(images.len(), self.nvars, "composition arity mismatch");
        let target = images.first().map_or(0, |p| p.nvars);
        let mut powers: Vec<Vec<MPoly>> = images.iter().map(|p| vec![MPoly::one(p.nvars), p.clone()]).collect();
        let mut out = MPoly::zero(target);
        for (e, c) in &self.terms {
            let mut t = MPoly::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][k as usize];
            }
            out = &out + &t;
        }
        out
    }

    /// Coefficients as a polynomial in `x_v`: entry `k` multiplies `x_v^k`.
    pub fn coefficients_in(&self, v: usize) -> Vec<MPoly> {
        let d = self.degree_in(v) as usize;
        let mut out = vec![MPoly::zero(self.nvars); if self.is_zero() { 0 } else { d + 1 }];
        for (e, c) in &self.terms {
            let k = e[v] as usize;
            let mut e2 = e.clone();
            e2[v] = 0;
            out[k].add_term(e2, c.clone());
        }
        out
    }

    /// Inverse of [`MPoly::coefficients_in`].
    pub fn from_coefficients_in(nvars: usize, v: usize, coeffs: &[MPoly]) -> MPoly {
        let mut out = MPoly::zero(nvars);
        for (k, c) in coeffs.iter().enumerate() {
            for (e, a) in c.terms() {
                let mut e2 = e.clone();
                e2[v] += k as u32;
                out.add_term(e2, a.clone());
            }
        }
        out
    }

    /// Converts a polynomial that only involves `x_v` into a `UPoly`.
    pub fn to_upoly(&self, v: usize) -> Option<UPoly> {
        let mut coeffs = vec![BigRat::zero(); self.degree_in(v) as usize + 1];
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(i, &k)| i != v && k > 0) {
                return None;
            }
            coeffs[e[v] as usize] = c.clone();
        }
        Some(UPoly::new(coeffs))
    }

    pub fn from_upoly(nvars: usize, v: usize, p: &UPoly) -> MPoly {
        MPoly::from_terms(
            nvars,
            p.coeffs().iter().enumerate().map(|(k, c)| {
                let mut e = vec![0; nvars];
                e[v] = k as u32;
                (e, c.clone())
            }),
        )
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &MPoly) -> Option<MPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let (le, lc) = d.leading().map(|(e, c)| (e.clone(), c.clone()))?;
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.nvars);
        while let Some((re, rc)) = rem.leading().map(|(e, c)| (e.clone(), c.clone())) {
            if re.iter().zip(&le).any(|(a, b)| a < b) {
                return None;
            }
            let qe: Exponent = re.iter().zip(&le).map(|(a, b)| a - b).collect();
            let qt = MPoly::monomial(qe, rc / &lc);
            rem = &rem - &(&qt * d);
            quot = &quot + &qt;
        }
        Some(quot)
    }

    /// `(content, primitive part)` with integer coprime coefficients and a
    /// positive leading coefficient in the primitive part.
    pub fn primitive_int(&self) -> (BigRat, MPoly) {
        if self.is_zero() {
            return (BigRat::zero(), self.clone());
        }
        let den = self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = self.terms.values().fold(BigInt::zero(), |acc, c| acc.gcd(&(c * BigRat::from_integer(den.clone())).to_integer()));
        let mut content = BigRat::new(num, den);
        if self.lc().is_negative() {
            content = -content;
        }
        (content.clone(), self.scale(&content.recip()))
    }

    /// Primitive integer representative with positive leading coefficient.
    pub fn normalized(&self) -> MPoly {
        self.primitive_int().1
    }

    /// Sets `x_v = 1`.
    pub fn dehomogenize(&self, v: usize) -> MPoly {
        self.substitute(v, &BigRat::one())
    }

    /// Multiplies each term by the power of `x_v` that lifts it to degree `d`.
    pub fn homogenize(&self, v: usize, d: u32) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let k: u32 = e.iter().sum();
            assert!(k <= d, "term exceeds homogenization degree");
            let mut e2 = e.clone();
            e2[v] += d - k;
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Drops variable `v` from the ring (it must not appear).
    pub fn remove_var(&self, v: usize) -> MPoly {
        assert!(!self.involves(v));
        MPoly::from_terms(
            self.nvars - 1,
            self.terms.iter().map(|(e, c)| {
                let mut e2 = e.clone();
                e2.remove(v);
                (e2, c.clone())
            }),
        )
    }

    /// Inserts a fresh variable at position `v`.
    pub fn insert_var(&self, v: usize) -> MPoly {
        MPoly::from_terms(
            self.nvars + 1,
            self.terms.iter().map(|(e, c)| {
                let mut e2 = e.clone();
                e2.insert(v, 0);
                (e2, c.clone())
            }),
        )
    }

    /// Keeps only terms of total degree below `n`.
    pub fn truncate(&self, n: u32) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() < n)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn render(&self, names: &[&str]) -> String {
        assert_eq!(names.len(), self.nvars);
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        let mut terms: Vec<_> = self.terms.iter().collect();
        // Highest total degree first, then lexicographically descending.
        terms.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        for (e, c) in terms {
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { names[i].to_string() } else { format!("{}^{}", names[i], k) })
                .collect();
            if factors.is_empty() {
                out.push_str(&rat_to_string(&a));
            } else {
                if !a.is_one() {
                    out.push_str(&rat_to_string(&a));
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }

    /// Renders with default names: `x1..xn` for `n <= 3`, else `x0..x{n-1}`.
    pub fn render_default(&self) -> String {
        let names = default_names(self.nvars);
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        self.render(&refs)
    }
}

/// `x1, x2, x3` for plane curves, `x0..x3` for surfaces in `P^3`, and so on.
pub fn default_names(nvars: usize) -> Vec<String> {
    if nvars <= 3 {
        (1..=nvars).map(|i| format!("x{i}")).collect()
    } else {
        (0..nvars).map(|i| format!("x{i}")).collect()
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({})", self.render_default())
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_default())
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = MPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&-BigRat::one())
    }
}
