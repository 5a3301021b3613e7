//! Multivariate gcd over `Q` by recursion on a main variable with
//! content/primitive-part splitting and primitive pseudo-remainder sequences.

use super::hpoly::HPoly;
use super::mpoly::MPoly;
use crate::error::{MonoidError, Result};

/// Greatest common divisor with primitive integer coefficients and positive
/// lexicographic leading coefficient.
pub fn mv_gcd(f: &HPoly, g: &HPoly) -> Result<HPoly> {
    if f.is_zero() && g.is_zero() {
        return Err(MonoidError::GcdUndefined);
    }
    Ok(HPoly::from_mpoly(mpoly_gcd(f, g)))
}

pub fn mpoly_gcd(f: &MPoly, g: &MPoly) -> MPoly {
    let n = f.nvars();
    if f.is_zero() {
        return g.normalized();
    }
    if g.is_zero() {
        return f.normalized();
    }
    gcd_rec(f, g, n).normalized()
}

fn main_var(f: &MPoly, g: &MPoly, n: usize) -> Option<usize> {
    (0..n).find(|&v| f.involves(v) || g.involves(v))
}

fn gcd_rec(f: &MPoly, g: &MPoly, n: usize) -> MPoly {
    if f.is_zero() {
        return g.clone();
    }
    if g.is_zero() {
        return f.clone();
    }
    if f.is_constant() || g.is_constant() {
        return MPoly::one(n);
    }
    let v = main_var(f, g, n).unwrap();
    if !f.involves(v) {
        return gcd_rec(f, &content(g, v, n), n);
    }
    if !g.involves(v) {
        return gcd_rec(&content(f, v, n), g, n);
    }
    let cf = content(f, v, n);
    let cg = content(g, v, n);
    let c = gcd_rec(&cf, &cg, n);
    let mut a = f.exact_div(&cf).unwrap();
    let mut b = g.exact_div(&cg).unwrap();
    if a.degree_in(v) < b.degree_in(v) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = prem(&a, &b, v, n);
        if r.is_zero() {
            break;
        }
        if !r.involves(v) {
            return c;
        }
        a = b;
        b = primitive_part(&r, v, n);
    }
    let pb = primitive_part(&b, v, n);
    (&c * &pb).normalized()
}

/// Gcd of the coefficients of `f` viewed as a polynomial in `x_v`.
fn content(f: &MPoly, v: usize, n: usize) -> MPoly {
    let mut acc = MPoly::zero(n);
    for c in f.coefficients_in(v) {
        if c.is_zero() {
            continue;
        }
        acc = if acc.is_zero() { c.normalized() } else { gcd_rec(&acc, &c, n).normalized() };
        if acc.is_constant() {
            return MPoly::one(n);
        }
    }
    acc
}

fn primitive_part(f: &MPoly, v: usize, n: usize) -> MPoly {
    let c = content(f, v, n);
    f.exact_div(&c).unwrap().normalized()
}

/// Pseudo-remainder of `a` by `b` in the variable `x_v`.
fn prem(a: &MPoly, b: &MPoly, v: usize, n: usize) -> MPoly {
    let db = b.degree_in(v);
    let bc = b.coefficients_in(v);
    let lb = bc[db as usize].clone();
    let mut r = a.clone();
    while !r.is_zero() && r.involves(v) && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lr = r.coefficients_in(v)[dr as usize].clone();
        let shift = MPoly::monomial(
            (0..n).map(|i| if i == v { dr - db } else { 0 }).collect(),
            num_traits::One::one(),
        );
        r = &(&r * &lb) - &(&(&lr * &shift) * b);
    }
    r
}
