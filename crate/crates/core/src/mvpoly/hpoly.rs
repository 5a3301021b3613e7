use std::fmt;
use std::ops::Deref;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::mpoly::MPoly;
use crate::error::{MonoidError, Result};
use crate::exactnum::{rat_to_string, BigRat, BinaryForm, UPoly};

/// Homogeneous polynomial. The zero polynomial is allowed and has no degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HPoly(MPoly);

impl HPoly {
    pub fn new(p: MPoly) -> Result<Self> {
        if p.is_homogeneous() {
            Ok(HPoly(p))
        } else {
            Err(MonoidError::Inhomogeneous(p.low_degree().unwrap_or(0), p.total_degree().unwrap_or(0)))
        }
    }

    /// For internal call sites where homogeneity holds by construction.
    pub(crate) fn from_mpoly(p: MPoly) -> Self {
        debug_assert!(p.is_homogeneous(), "inhomogeneous polynomial: {p}");
        HPoly(p)
    }

    pub fn zero(nvars: usize) -> Self {
        HPoly(MPoly::zero(nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        HPoly(MPoly::var(nvars, i))
    }

    pub fn linear(coeffs: &[BigRat]) -> Self {
        HPoly(MPoly::linear(coeffs))
    }

    pub fn constant(nvars: usize, c: BigRat) -> Self {
        HPoly(MPoly::constant(nvars, c))
    }

    pub fn degree(&self) -> Option<u32> {
        self.0.total_degree()
    }

    pub fn as_mpoly(&self) -> &MPoly {
        &self.0
    }

    pub fn into_mpoly(self) -> MPoly {
        self.0
    }

    pub fn add(&self, other: &HPoly) -> HPoly {
        if let (Some(a), Some(b)) = (self.degree(), other.degree()) {
            assert_eq!(a, b, "adding homogeneous polynomials of different degrees");
        }
        HPoly(&self.0 + &other.0)
    }

    pub fn sub(&self, other: &HPoly) -> HPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> HPoly {
        HPoly(-&self.0)
    }

    pub fn mul(&self, other: &HPoly) -> HPoly {
        HPoly(&self.0 * &other.0)
    }

    pub fn scale(&self, k: &BigRat) -> HPoly {
        HPoly(self.0.scale(k))
    }

    pub fn pow(&self, k: u32) -> HPoly {
        HPoly(self.0.pow(k))
    }

    pub fn normalized(&self) -> HPoly {
        HPoly(self.0.normalized())
    }

    pub fn exact_div(&self, d: &HPoly) -> Option<HPoly> {
        self.0.exact_div(&d.0).map(HPoly)
    }

    pub fn partial(&self, v: usize) -> HPoly {
        HPoly(self.0.partial(v))
    }

    pub fn gradient(&self) -> Vec<HPoly> {
        (0..self.nvars()).map(|i| self.partial(i)).collect()
    }

    pub fn evaluate(&self, p: &ProjPoint) -> Result<BigRat> {
        if p.dim() != self.nvars() {
            return Err(MonoidError::DimensionMismatch { expected: self.nvars(), got: p.dim() });
        }
        Ok(self.0.eval(p.coords()))
    }

    pub fn vanishes_at(&self, p: &ProjPoint) -> bool {
        self.0.eval(p.coords()).is_zero()
    }

    /// Linear change of coordinates `x -> M x`, i.e. `f(M x)`.
    pub fn transform(&self, m: &[Vec<BigRat>]) -> HPoly {
        let n = self.nvars();
        let images: Vec<MPoly> = (0..n).map(|i| MPoly::linear(&m[i])).collect();
        HPoly(self.0.compose(&images))
    }

    /// `f(θ(s,t))` as a binary form of degree `deg f · deg θ`.
    pub fn pullback(&self, theta: &RationalMap) -> Result<BinaryForm> {
        if theta.coords.len() != self.nvars() {
            return Err(MonoidError::DimensionMismatch { expected: self.nvars(), got: theta.coords.len() });
        }
        let d = self.degree().unwrap_or(0) as usize;
        let images: Vec<&UPoly> = theta.coords.iter().map(|c| &c.poly).collect();
        let mut acc = UPoly::zero();
        for (e, c) in self.0.terms() {
            let mut t = UPoly::constant(c.clone());
            for (img, &k) in images.iter().zip(e) {
                if k > 0 {
                    t = &t * &img.pow(k);
                }
            }
            acc = &acc + &t;
        }
        Ok(BinaryForm::new(d * theta.degree, acc))
    }

    pub fn render(&self, names: &[&str]) -> String {
        self.0.render(names)
    }
}

impl Deref for HPoly {
    type Target = MPoly;
    fn deref(&self) -> &MPoly {
        &self.0
    }
}

impl fmt::Debug for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HPoly({})", self.0.render_default())
    }
}

impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.render_default())
    }
}

impl Serialize for HPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.render_default())
    }
}

/// Point of projective space, stored with its first nonzero coordinate equal to 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint(Vec<BigRat>);

impl ProjPoint {
    pub fn new(coords: Vec<BigRat>) -> Result<Self> {
        let Some(first) = coords.iter().find(|c| !c.is_zero()).cloned() else {
            return Err(MonoidError::Precondition("projective point with all coordinates zero".into()));
        };
        let inv = first.recip();
        Ok(ProjPoint(coords.into_iter().map(|c| c * &inv).collect()))
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| crate::exactnum::int(x)).collect()).expect("nonzero point")
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigRat] {
        &self.0
    }

    /// The point `(1:0:…:0)`.
    pub fn origin(n: usize) -> Self {
        let mut c = vec![BigRat::zero(); n];
        c[0] = BigRat::one();
        ProjPoint(c)
    }

    /// Index of the first nonzero coordinate (always equal to 1).
    pub fn chart(&self) -> usize {
        self.0.iter().position(|c| !c.is_zero()).unwrap()
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(rat_to_string).collect();
        write!(f, "({})", parts.join(":"))
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Map `P^1 -> P^n` given by binary forms of a common degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMap {
    pub degree: usize,
    pub coords: Vec<BinaryForm>,
}

impl RationalMap {
    pub fn new(coords: Vec<BinaryForm>) -> Result<Self> {
        let degree = coords.first().map_or(0, |c| c.degree);
        if coords.iter().any(|c| c.degree != degree) {
            return Err(MonoidError::DegreeMismatch("coordinates of a rational map".into()));
        }
        if coords.iter().all(|c| c.is_zero()) {
            return Err(MonoidError::ZeroPart("rational map"));
        }
        let inf = coords.iter().map(|c| c.mult_at_infinity()).min().unwrap();
        let g = coords
            .iter()
            .fold(UPoly::zero(), |g, c| crate::exactnum::gcd(&g, &c.poly));
        if inf > 0 || g.deg() > 0 {
            return Err(MonoidError::Precondition("coordinates of a rational map share a factor".into()));
        }
        Ok(RationalMap { degree, coords })
    }

    /// Builds from homogeneous coefficient lists: `coeffs[j][i]` multiplies `s^i t^(D-i)`.
    pub fn from_forms(forms: Vec<Vec<BigRat>>) -> Result<Self> {
        Self::new(forms.into_iter().map(BinaryForm::from_coeffs).collect())
    }

    /// Linear map `(s, t) -> Σ s·a + t·b` parameterizing the line through `a` and `b`.
    pub fn line(a: &ProjPoint, b: &ProjPoint) -> Result<Self> {
        Self::from_forms(
            a.coords()
                .iter()
                .zip(b.coords())
                .map(|(x, y)| vec![y.clone(), x.clone()])
                .collect(),
        )
    }

    pub fn eval(&self, s: &BigRat, t: &BigRat) -> Result<ProjPoint> {
        ProjPoint::new(self.coords.iter().map(|c| c.eval(s, t)).collect())
    }
}
