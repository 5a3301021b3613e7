//! Exact rational numbers and univariate polynomial algebra.
//!
//! Everything here works over `Q` with arbitrary precision. Integer
//! subresultant sequences keep coefficient growth under control for gcds and
//! resultants; Sturm sequences give exact real-root counts.

mod binary;
mod sturm;
mod upoly;

pub use binary::BinaryForm;
pub use sturm::{
    count_real_roots, isolate_real_roots, real_root_count, sign_at_root, ExtRat, RootInterval,
    SturmSequence,
};
pub use upoly::{
    formal_resultant, is_squarefree, resultant, squarefree_decomposition, squarefree_part,
    upoly_gcd, SquarefreeDecomposition, UPoly,
};
#[allow(unused_imports)]
pub(crate) use upoly::gcd;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator.
pub type BigRat = num_rational::BigRational;

/// Shorthand for `n/d` with machine integers.
pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

/// Canonical `p/q` text (`p` alone when the denominator is one).
pub fn rat_to_string(q: &BigRat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rat(text: &str) -> Option<BigRat> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRat::new(n, d))
            }
        }
        None => text.parse::<BigInt>().ok().map(BigRat::from_integer),
    }
}

/// Lossy conversion used only at output boundaries (mesh export).
pub fn rat_to_f64(q: &BigRat) -> f64 {
    use num_traits::ToPrimitive;
    match (q.numer().to_f64(), q.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // Huge operands: shift both down before dividing.
            let nb = q.numer().bits() as i64;
            let db = q.denom().bits() as i64;
            let shift = (nb.max(db) - 1000).max(0) as usize;
            let n = (q.numer() >> shift).to_f64().unwrap_or(0.0);
            let d = (q.denom() >> shift).to_f64().unwrap_or(1.0);
            if d == 0.0 {
                if n.is_sign_negative() {
                    f64::NEG_INFINITY
                } else {
                    f64::INFINITY
                }
            } else {
                n / d
            }
        }
    }
}

/// Integer `k`-th root of a nonnegative rational, if it is exact.
pub fn exact_root(q: &BigRat, k: u32) -> Option<BigRat> {
    if k == 0 {
        return None;
    }
    if q.is_negative() {
        if k.is_multiple_of(2) {
            return None;
        }
        return exact_root(&-q, k).map(|r| -r);
    }
    let n = q.numer().nth_root(k);
    let d = q.denom().nth_root(k);
    if num_traits::pow(n.clone(), k as usize) == *q.numer()
        && num_traits::pow(d.clone(), k as usize) == *q.denom()
    {
        Some(BigRat::new(n, d))
    } else {
        None
    }
}

pub(crate) fn lcm_denominators<'a>(it: impl IntoIterator<Item = &'a BigRat>) -> BigInt {
    use num_integer::Integer;
    it.into_iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

/// Rational that serializes as `"p/q"` and accepts either that text or a
/// plain integer.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(pub BigRat);

impl From<BigRat> for Rat {
    fn from(q: BigRat) -> Self {
        Rat(q)
    }
}

impl serde::Serialize for Rat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&rat_to_string(&self.0))
    }
}

impl<'de> serde::Deserialize<'de> for Rat {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl serde::de::Visitor<'_> for V {
            type Value = Rat;
            fn expecting(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                f.write_str("a rational as \"p/q\" or an integer")
            }
            fn visit_str<E: serde::de::Error>(self, v: &str) -> std::result::Result<Rat, E> {
                parse_rat(v).map(Rat).ok_or_else(|| E::custom(format!("bad rational {v:?}")))
            }
            fn visit_i64<E: serde::de::Error>(self, v: i64) -> std::result::Result<Rat, E> {
                Ok(Rat(int(v)))
            }
            fn visit_u64<E: serde::de::Error>(self, v: u64) -> std::result::Result<Rat, E> {
                Ok(Rat(BigRat::from_integer(BigInt::from(v))))
            }
        }
        d.deserialize_any(V)
    }
}

/// The rational with the smallest denominator in the closed interval
/// `[lo, hi]`.
pub fn simplest_between(lo: &BigRat, hi: &BigRat) -> BigRat {
    assert!(lo <= hi, "empty interval");
    if lo.is_negative() && hi.is_positive() || lo.is_zero() || hi.is_zero() {
        return BigRat::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    let fl = lo.floor();
    if lo.is_integer() {
        return lo.clone();
    }
    if fl.clone() + BigRat::one() <= *hi {
        return fl + BigRat::one();
    }
    // Same integer part: recurse on the reciprocals of the fractional parts.
    let a = lo - &fl;
    let b = hi - &fl;
    fl + simplest_between(&b.recip(), &a.recip()).recip()
}
