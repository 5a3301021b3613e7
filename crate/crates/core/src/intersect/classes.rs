//! Conjugacy classes of algebraic points.
//!
//! A class is a squarefree monic `h(u)` together with coordinate polynomials
//! reduced modulo `h`: every root `u` of `h` gives the point
//! `(c_0(u) : c_1(u) : c_2(u))`. Arithmetic happens in `Q[u]/(h)`, which is a
//! product of fields; whenever a computation meets a zero divisor the class is
//! split along the corresponding factor of `h`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::exactnum::{
    gcd, int, isolate_real_roots, real_root_count, sign_at_root, BigRat, RootInterval, UPoly,
};
use crate::mvpoly::{MPoly, ProjPoint};

/// Points `(c(u))` over the roots `u` of a squarefree monic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointClass {
    pub minpoly: UPoly,
    pub coords: Vec<UPoly>,
}

/// Result of an attempted inversion in `Q[u]/(h)`.
pub(crate) enum Inverse {
    Unit(UPoly),
    /// A proper factor of `h` on whose roots the element vanishes.
    ZeroDivisor(UPoly),
    Zero,
}

pub(crate) fn reduce(a: &UPoly, h: &UPoly) -> UPoly {
    if a.degree().is_some_and(|d| d >= h.deg()) {
        a.rem(h)
    } else {
        a.clone()
    }
}

pub(crate) fn mulmod(a: &UPoly, b: &UPoly, h: &UPoly) -> UPoly {
    reduce(&(a * b), h)
}

/// Extended Euclid over `Q[u]`.
fn ext_gcd(a: &UPoly, b: &UPoly) -> (UPoly, UPoly) {
    // Returns (g, x) with x*a ≡ g (mod b).
    let (mut r0, mut r1) = (b.clone(), a.clone());
    let (mut s0, mut s1) = (UPoly::zero(), UPoly::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let s = &s0 - &(&q * &s1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    let inv = r0.lc().recip();
    (r0.scale(&inv), s0.scale(&inv))
}

pub(crate) fn invert(a: &UPoly, h: &UPoly) -> Inverse {
    let a = reduce(a, h);
    if a.is_zero() {
        return Inverse::Zero;
    }
    let (g, x) = ext_gcd(&a, h);
    if g.deg() == 0 {
        Inverse::Unit(reduce(&x, h))
    } else {
        Inverse::ZeroDivisor(g)
    }
}

/// Evaluates `p` at coordinate polynomials modulo `h`.
pub(crate) fn eval_mod(p: &MPoly, coords: &[UPoly], h: &UPoly) -> UPoly {
    let mut acc = UPoly::zero();
    for (e, c) in p.terms() {
        let mut t = UPoly::constant(c.clone());
        for (x, &k) in coords.iter().zip(e) {
            for _ in 0..k {
                t = mulmod(&t, x, h);
            }
        }
        acc = &acc + &t;
    }
    reduce(&acc, h)
}

impl PointClass {
    pub fn new(minpoly: UPoly, coords: Vec<UPoly>) -> Self {
        let minpoly = minpoly.monic();
        let coords = coords.iter().map(|c| reduce(c, &minpoly)).collect();
        PointClass { minpoly, coords }
    }

    pub fn from_point(p: &ProjPoint) -> Self {
        PointClass::new(
            UPoly::linear_root(&BigRat::zero()),
            p.coords().iter().map(|c| UPoly::constant(c.clone())).collect(),
        )
    }

    /// Number of points in the class.
    pub fn size(&self) -> usize {
        self.minpoly.deg()
    }

    pub fn real_count(&self) -> usize {
        real_root_count(&self.minpoly)
    }

    pub fn is_rational(&self) -> bool {
        self.size() == 1
    }

    pub fn rational_point(&self) -> Option<ProjPoint> {
        if !self.is_rational() {
            return None;
        }
        let u = -self.minpoly.coeff(0);
        ProjPoint::new(self.coords.iter().map(|c| c.eval(&u)).collect()).ok()
    }

    /// Isolating intervals for the parameter `u` at real members.
    pub fn real_intervals(&self) -> Vec<RootInterval> {
        isolate_real_roots(&self.minpoly).unwrap_or_default()
    }

    /// Splits into the members where `p` vanishes and those where it does not.
    pub fn split_by_vanishing(&self, p: &MPoly) -> (Option<PointClass>, Option<PointClass>) {
        let v = eval_mod(p, &self.coords, &self.minpoly);
        let g = gcd(&self.minpoly, &v);
        if v.is_zero() {
            return (Some(self.clone()), None);
        }
        if g.deg() == 0 {
            return (None, Some(self.clone()));
        }
        let rest = self.minpoly.exact_div(&g).unwrap();
        (Some(self.restrict(&g)), Some(self.restrict(&rest)))
    }

    pub fn vanishes(&self, p: &MPoly) -> bool {
        eval_mod(p, &self.coords, &self.minpoly).is_zero()
    }

    /// Members where every polynomial in `ps` vanishes.
    pub fn common_zeros(&self, ps: &[MPoly]) -> Option<PointClass> {
        let mut cur = self.clone();
        for p in ps {
            cur = cur.split_by_vanishing(p).0?;
        }
        Some(cur)
    }

    /// Splits into the members where all of `ps` vanish and the rest.
    pub fn partition_common(&self, ps: &[MPoly]) -> (Option<PointClass>, Vec<PointClass>) {
        let mut rest = Vec::new();
        let mut cur = Some(self.clone());
        for p in ps {
            let Some(k) = cur else { break };
            let (zero, nonzero) = k.split_by_vanishing(p);
            rest.extend(nonzero);
            cur = zero;
        }
        (cur, rest)
    }

    pub fn restrict(&self, factor: &UPoly) -> PointClass {
        PointClass::new(factor.clone(), self.coords.clone())
    }

    /// Sign pattern of a polynomial at each real member (in increasing `u`).
    pub fn signs_at_real(&self, p: &MPoly) -> Vec<i8> {
        let v = eval_mod(p, &self.coords, &self.minpoly);
        self.real_intervals().iter().map(|iv| sign_at_root(&self.minpoly, iv, &v)).collect()
    }

    /// Whether the class contains the given rational point.
    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.locate(p).is_some()
    }

    /// The factor of the minimal polynomial whose roots give `p`, if any.
    pub fn locate(&self, p: &ProjPoint) -> Option<UPoly> {
        // The coordinates are proportional to p iff all 2x2 minors vanish.
        let c = &self.coords;
        let q = p.coords();
        let mut g = self.minpoly.clone();
        for i in 0..c.len() {
            for j in i + 1..c.len() {
                let m = reduce(&(&c[i].scale(&q[j]) - &c[j].scale(&q[i])), &self.minpoly);
                g = gcd(&g, &m);
                if g.deg() == 0 {
                    return None;
                }
            }
        }
        Some(g)
    }

    /// Splits off every rational member as its own class.
    pub fn split_rational(&self) -> Vec<PointClass> {
        if self.is_rational() {
            return vec![self.clone()];
        }
        let mut out = Vec::new();
        let mut rest = self.minpoly.clone();
        for r in self.minpoly.rational_roots() {
            let lin = UPoly::linear_root(&r);
            out.push(self.restrict(&lin));
            rest = rest.exact_div(&lin).unwrap();
        }
        if rest.deg() > 0 {
            out.push(self.restrict(&rest));
        }
        out
    }

    /// Renders the class descriptor as text.
    pub fn describe(&self) -> String {
        if let Some(p) = self.rational_point() {
            return p.to_string();
        }
        let coords: Vec<String> = self.coords.iter().map(|c| c.fmt_in("u")).collect();
        format!("({}) where {} = 0", coords.join(" : "), self.minpoly.fmt_in("u"))
    }
}

/// Serialized view of a class.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ClassDescriptor {
    pub minpoly: String,
    pub coords: Vec<String>,
    pub real_intervals: Vec<RootInterval>,
}

impl From<&PointClass> for ClassDescriptor {
    fn from(c: &PointClass) -> Self {
        ClassDescriptor {
            minpoly: c.minpoly.fmt_in("u"),
            coords: c.coords.iter().map(|p| p.fmt_in("u")).collect(),
            real_intervals: c.real_intervals(),
        }
    }
}

/// Polynomial in `z` with coefficients in `Q[u]/(h)`, lowest degree first.
pub(crate) type KPoly = Vec<UPoly>;

/// Outcome of the gcd of two polynomials over `Q[u]/(h)`: one entry per
/// piece `h_i` of a splitting of `h`, with a monic gcd over that piece.
pub(crate) fn gcd_over(h: &UPoly, f: &KPoly, g: &KPoly) -> Vec<(UPoly, KPoly)> {
    let mut out = Vec::new();
    let mut work = vec![(h.clone(), f.clone(), g.clone())];
    'outer: while let Some((h, mut a, mut b)) = work.pop() {
        loop {
            match normalize_lead(&h, &a) {
                Lead::Split(g1) => {
                    push_split(&mut work, &h, &g1, &a, &b);
                    continue 'outer;
                }
                Lead::Ok(x) => a = x,
            }
            match normalize_lead(&h, &b) {
                Lead::Split(g1) => {
                    push_split(&mut work, &h, &g1, &a, &b);
                    continue 'outer;
                }
                Lead::Ok(x) => b = x,
            }
            if a.len() < b.len() {
                std::mem::swap(&mut a, &mut b);
            }
            if b.is_empty() {
                // a is monic (or zero).
                out.push((h, a));
                continue 'outer;
            }
            // b is monic: a <- a mod b.
            a = kpoly_rem_monic(&a, &b, &h);
        }
    }
    out
}

fn push_split(work: &mut Vec<(UPoly, KPoly, KPoly)>, h: &UPoly, g: &UPoly, a: &KPoly, b: &KPoly) {
    let rest = h.exact_div(g).unwrap().monic();
    let g = g.monic();
    for piece in [g, rest] {
        let ra = a.iter().map(|c| reduce(c, &piece)).collect();
        let rb = b.iter().map(|c| reduce(c, &piece)).collect();
        work.push((piece, ra, rb));
    }
}

enum Lead {
    Ok(KPoly),
    Split(UPoly),
}

/// Drops vanishing leading coefficients and makes the polynomial monic.
fn normalize_lead(h: &UPoly, a: &KPoly) -> Lead {
    let mut a: KPoly = a.iter().map(|c| reduce(c, h)).collect();
    while let Some(lc) = a.last() {
        match invert(lc, h) {
            Inverse::Zero => {
                a.pop();
            }
            Inverse::ZeroDivisor(g) => return Lead::Split(g),
            Inverse::Unit(inv) => {
                let a = a.iter().map(|c| mulmod(c, &inv, h)).collect();
                return Lead::Ok(a);
            }
        }
    }
    Lead::Ok(a)
}

fn kpoly_rem_monic(a: &KPoly, b: &KPoly, h: &UPoly) -> KPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    while r.len() > db {
        let lr = r.pop().unwrap();
        let k = r.len() - db;
        for j in 0..db {
            let t = mulmod(&lr, &b[j], h);
            r[k + j] = reduce(&(&r[k + j] - &t), h);
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

/// If the monic `g` equals `(z - c)^j` over `Q[u]/(h)`, returns `c`.
pub(crate) fn single_root(g: &KPoly, h: &UPoly) -> Option<UPoly> {
    let j = g.len().checked_sub(1)?;
    if j == 0 {
        return None;
    }
    let c = g[j - 1].scale(&(-int(j as i64)).recip());
    // Compare with the binomial expansion of (z - c)^j.
    let mut pow = UPoly::one();
    let mut binom = BigRat::one();
    for k in (0..j).rev() {
        // coefficient of z^k: C(j, k) (-c)^(j-k)
        let step = j - k;
        pow = mulmod(&pow, &c.scale(&-BigRat::one()), h);
        binom = binom * int((j - step + 1) as i64) / int(step as i64);
        let expected = pow.scale(&binom);
        if reduce(&(&g[k] - &expected), h) != UPoly::zero() {
            return None;
        }
    }
    Some(c)
}
