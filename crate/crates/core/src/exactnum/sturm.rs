use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::upoly::{gcd, is_squarefree, squarefree_part};
use super::{int, rat_to_string, BigRat, UPoly};
use crate::error::{MonoidError, Result};

/// A rational number or one of the two infinities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtRat {
    NegInf,
    Finite(BigRat),
    PosInf,
}

impl ExtRat {
    fn rank(&self) -> i8 {
        match self {
            ExtRat::NegInf => -1,
            ExtRat::Finite(_) => 0,
            ExtRat::PosInf => 1,
        }
    }
}

impl PartialOrd for ExtRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtRat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtRat::Finite(a), ExtRat::Finite(b)) => a.cmp(b),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl From<BigRat> for ExtRat {
    fn from(q: BigRat) -> Self {
        ExtRat::Finite(q)
    }
}

/// Closed rational interval containing exactly one real root of a known
/// squarefree polynomial. `lo == hi` marks an exactly known rational root;
/// otherwise the root lies strictly inside.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootInterval {
    #[serde(serialize_with = "ser_rat")]
    pub lo: BigRat,
    #[serde(serialize_with = "ser_rat")]
    pub hi: BigRat,
}

fn ser_rat<S: serde::Serializer>(q: &BigRat, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rat_to_string(q))
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRat {
        (&self.lo + &self.hi) / int(2)
    }
}

impl fmt::Display for RootInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{}", rat_to_string(&self.lo))
        } else {
            write!(f, "({}, {})", rat_to_string(&self.lo), rat_to_string(&self.hi))
        }
    }
}

fn sign(q: &BigRat) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

/// Sturm chain of a squarefree polynomial.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    chain: Vec<UPoly>,
}

impl SturmSequence {
    /// The caller guarantees `p` is squarefree and nonconstant or constant nonzero.
    pub fn new(p: &UPoly) -> Self {
        let mut chain = vec![p.clone()];
        if p.deg() > 0 {
            chain.push(p.derivative());
            loop {
                let n = chain.len();
                let r = chain[n - 2].rem(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                // Only signs matter: keep a positive multiple of the remainder
                // with integer coefficients.
                let (c, prim) = (-&r).primitive_int();
                let p = UPoly::from_bigints(&prim);
                chain.push(if c.is_negative() { -&p } else { p });
            }
        }
        SturmSequence { chain }
    }

    pub fn poly(&self) -> &UPoly {
        &self.chain[0]
    }

    fn variations_at(&self, x: &ExtRat) -> usize {
        let signs = self.chain.iter().map(|p| match x {
            ExtRat::Finite(v) => sign(&p.eval(v)),
            ExtRat::PosInf => sign(&p.lc()),
            ExtRat::NegInf => {
                let s = sign(&p.lc());
                if p.deg() % 2 == 1 {
                    -s
                } else {
                    s
                }
            }
        });
        let mut last = 0i8;
        let mut v = 0;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    /// Number of distinct roots in the open interval `(lo, hi)`.
    pub fn count(&self, lo: &ExtRat, hi: &ExtRat) -> usize {
        if lo >= hi {
            return 0;
        }
        let a = self.variations_at(lo);
        let b = self.variations_at(hi);
        // Sturm counts roots in (lo, hi]; drop a root sitting at hi.
        let at_hi = matches!(hi, ExtRat::Finite(v) if self.poly().eval(v).is_zero());
        a.saturating_sub(b) - usize::from(at_hi)
    }

    /// Isolating intervals for all real roots in increasing order.
    pub fn isolate(&self) -> Vec<RootInterval> {
        let p = self.poly();
        if p.deg() == 0 {
            return Vec::new();
        }
        let bound = cauchy_bound(p);
        let mut out = Vec::new();
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((lo, hi)) = stack.pop() {
            let n = self.count(&ExtRat::Finite(lo.clone()), &ExtRat::Finite(hi.clone()));
            match n {
                0 => {}
                1 => out.push(RootInterval { lo, hi }),
                _ => {
                    let mid = (&lo + &hi) / int(2);
                    if p.eval(&mid).is_zero() {
                        out.push(RootInterval { lo: mid.clone(), hi: mid.clone() });
                    }
                    stack.push((lo, mid.clone()));
                    stack.push((mid, hi));
                }
            }
        }
        out.sort_by(|a, b| a.lo.cmp(&b.lo));
        out
    }

    /// Bisects until the interval is no wider than `width` (or the root is hit).
    pub fn refine(&self, iv: &RootInterval, width: &BigRat) -> RootInterval {
        let p = self.poly();
        let mut iv = iv.clone();
        if iv.is_exact() {
            return iv;
        }
        // The interval is open, so either endpoint may itself be another root.
        let mut slo = sign(&p.eval(&iv.lo));
        let mut shi = sign(&p.eval(&iv.hi));
        while iv.width() > *width {
            let mid = iv.midpoint();
            let sm = sign(&p.eval(&mid));
            if sm == 0 {
                return RootInterval { lo: mid.clone(), hi: mid };
            }
            let in_lower = if slo != 0 {
                sm != slo
            } else if shi != 0 {
                sm == shi
            } else {
                self.count(&ExtRat::Finite(iv.lo.clone()), &ExtRat::Finite(mid.clone())) == 1
            };
            if in_lower {
                iv.hi = mid;
                shi = sm;
            } else {
                iv.lo = mid;
                slo = sm;
            }
        }
        iv
    }
}

/// Every real root lies strictly inside `(-B, B)`.
fn cauchy_bound(p: &UPoly) -> BigRat {
    let lc = p.lc().abs();
    let m = p.coeffs()[..p.deg()]
        .iter()
        .map(|c| c.abs() / &lc)
        .max()
        .unwrap_or_else(BigRat::zero);
    // Round up to an integer to keep bisection endpoints small.
    (m + BigRat::one()).ceil() + BigRat::one()
}

/// Exact number of distinct real roots of a squarefree `p` in `(lo, hi)`.
pub fn count_real_roots(p: &UPoly, lo: &ExtRat, hi: &ExtRat) -> Result<usize> {
    if p.is_zero() {
        return Err(MonoidError::ZeroPolynomial("root counting"));
    }
    if !is_squarefree(p) {
        return Err(MonoidError::NotSquarefree);
    }
    Ok(SturmSequence::new(p).count(lo, hi))
}

/// Disjoint isolating intervals, one per real root, in increasing order.
pub fn isolate_real_roots(p: &UPoly) -> Result<Vec<RootInterval>> {
    if p.is_zero() {
        return Err(MonoidError::ZeroPolynomial("root isolation"));
    }
    if !is_squarefree(p) {
        return Err(MonoidError::NotSquarefree);
    }
    Ok(SturmSequence::new(p).isolate())
}

/// Number of distinct real roots of any nonzero polynomial.
pub fn real_root_count(p: &UPoly) -> usize {
    if p.deg() == 0 {
        return 0;
    }
    SturmSequence::new(&squarefree_part(p)).count(&ExtRat::NegInf, &ExtRat::PosInf)
}

/// Sign of `q` at the real root of the squarefree `p` isolated by `iv`.
pub fn sign_at_root(p: &UPoly, iv: &RootInterval, q: &UPoly) -> i8 {
    if iv.is_exact() {
        return sign(&q.eval(&iv.lo));
    }
    if q.is_zero() {
        return 0;
    }
    let g = gcd(p, q);
    let sp = SturmSequence::new(p);
    if g.deg() > 0 {
        let sg = SturmSequence::new(&g);
        let mut cur = iv.clone();
        loop {
            let n = sg.count(&ExtRat::Finite(cur.lo.clone()), &ExtRat::Finite(cur.hi.clone()));
            if n == 0 {
                break;
            }
            // The common roots inside are all roots of p; only one root of p
            // is inside, so a single common root means q vanishes there.
            if n == 1 && sp.count(&ExtRat::Finite(cur.lo.clone()), &ExtRat::Finite(cur.hi.clone())) == 1 {
                return 0;
            }
            cur = sp.refine(&cur, &(cur.width() / int(2)));
            if cur.is_exact() {
                return sign(&q.eval(&cur.lo));
            }
        }
    }
    let sq = SturmSequence::new(&squarefree_part(q));
    let mut cur = iv.clone();
    loop {
        let inner = sq.count(&ExtRat::Finite(cur.lo.clone()), &ExtRat::Finite(cur.hi.clone()));
        let ends = q.eval(&cur.lo).is_zero() || q.eval(&cur.hi).is_zero();
        if inner == 0 && !ends {
            return sign(&q.eval(&cur.midpoint()));
        }
        cur = sp.refine(&cur, &(cur.width() / int(2)));
        if cur.is_exact() {
            return sign(&q.eval(&cur.lo));
        }
    }
}
