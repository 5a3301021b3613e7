//! Dimension of a local quotient `Q[x]_(x) / I` at the origin, computed from
//! the truncations `Q[x] / (I + m^N)`.
//!
//! `dim Q[x]/(I + m^N)` is nondecreasing in `N`. Once two consecutive values
//! agree, `m^N ⊂ I + m^(N+1)` and Nakayama's lemma gives `m^N ⊂ I` locally, so
//! the value is the length of the local ring.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::error::{MonoidError, Result};
use crate::exactnum::BigRat;
use crate::mvpoly::{mpoly_gcd, Exponent, HPoly, MPoly, ProjPoint};

/// All exponent vectors in `k` variables of total degree `< n`, in graded order.
fn monomials_below(k: usize, n: u32) -> Vec<Exponent> {
    let mut out = Vec::new();
    for d in 0..n {
        let mut cur = vec![0u32; k];
        gen_degree(k, d, 0, &mut cur, &mut out);
    }
    out
}

fn gen_degree(k: usize, left: u32, i: usize, cur: &mut Exponent, out: &mut Vec<Exponent>) {
    if i == k - 1 {
        cur[i] = left;
        out.push(cur.clone());
        return;
    }
    for a in (0..=left).rev() {
        cur[i] = a;
        gen_degree(k, left - a, i + 1, cur, out);
    }
}

/// Incremental row echelon form over sparse rows.
struct Echelon {
    pivots: HashMap<usize, BTreeMap<usize, BigRat>>,
}

impl Echelon {
    fn new() -> Self {
        Echelon { pivots: HashMap::new() }
    }

    fn insert(&mut self, mut row: BTreeMap<usize, BigRat>) {
        loop {
            let Some((&col, _)) = row.iter().next() else {
                return;
            };
            match self.pivots.get(&col) {
                Some(p) => {
                    let f = row[&col].clone();
                    for (c, v) in p {
                        let e = row.entry(*c).or_insert_with(BigRat::zero);
                        *e -= &f * v;
                        if e.is_zero() {
                            row.remove(c);
                        }
                    }
                }
                None => {
                    let inv = row[&col].recip();
                    for v in row.values_mut() {
                        *v *= &inv;
                    }
                    self.pivots.insert(col, row);
                    return;
                }
            }
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn truncated_dimension(gens: &[MPoly], k: usize, n: u32) -> usize {
    let basis = monomials_below(k, n);
    let index: HashMap<&Exponent, usize> = basis.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut ech = Echelon::new();
    for g in gens {
        let Some(low) = g.low_degree() else { continue };
        for m in &basis {
            let dm: u32 = m.iter().sum();
            if dm + low >= n {
                continue;
            }
            let mut row = BTreeMap::new();
            for (e, c) in g.terms() {
                let prod: Exponent = e.iter().zip(m).map(|(a, b)| a + b).collect();
                if let Some(&i) = index.get(&prod) {
                    row.insert(i, c.clone());
                }
            }
            ech.insert(row);
        }
    }
    basis.len() - ech.rank()
}

/// Length of the local ring at the origin of `Q[x_1..x_k] / (gens)`.
///
/// Fails with [`MonoidError::NoStabilization`] when the dimensions have not
/// stabilized by truncation order `cap`.
pub fn local_length(gens: &[MPoly], cap: u32) -> Result<usize> {
    let k = gens.first().map_or(0, |g| g.nvars());
    if gens.iter().any(|g| !g.constant_term().is_zero() && !g.is_zero()) {
        return Ok(0);
    }
    let mut prev = truncated_dimension(gens, k, 1);
    for n in 2..=cap {
        let d = truncated_dimension(gens, k, n);
        if d == prev {
            return Ok(d);
        }
        prev = d;
    }
    Err(MonoidError::NoStabilization(cap as usize))
}

/// Moves `p` to the origin of its standard affine chart and drops the chart
/// variable.
pub fn localize(f: &MPoly, p: &ProjPoint) -> MPoly {
    let r = p.chart();
    let n = f.nvars();
    let images: Vec<MPoly> = (0..n)
        .map(|i| {
            if i == r {
                MPoly::one(n)
            } else {
                &MPoly::var(n, i) + &MPoly::constant(n, p.coords()[i].clone())
            }
        })
        .collect();
    f.compose(&images).remove_var(r)
}

/// Local intersection number `I_p(f, g)` of two plane curves at a rational point.
pub fn intersection_multiplicity_at(f: &HPoly, g: &HPoly, p: &ProjPoint) -> Result<usize> {
    if p.dim() != 3 || f.nvars() != 3 || g.nvars() != 3 {
        return Err(MonoidError::DimensionMismatch { expected: 3, got: p.dim() });
    }
    if !f.vanishes_at(p) || !g.vanishes_at(p) {
        return Ok(0);
    }
    let common = mpoly_gcd(f, g);
    if !common.is_constant() && common.eval(p.coords()).is_zero() {
        return Err(MonoidError::CommonFactorThroughP(p.to_string()));
    }
    let a = f.degree().unwrap_or(0);
    let b = g.degree().unwrap_or(0);
    local_length(&[localize(f, p), localize(g, p)], a * b + 2)
}

/// Milnor number of an isolated hypersurface singularity at a rational point:
/// the length of the local quotient by the partial derivatives in a chart.
pub fn milnor_number(f: &HPoly, p: &ProjPoint, cap: u32) -> Result<usize> {
    let local = localize(f, p);
    let gens: Vec<MPoly> = (0..local.nvars()).map(|i| local.partial(i)).collect();
    if !local.constant_term().is_zero() {
        return Ok(0);
    }
    local_length(&gens, cap)
}
