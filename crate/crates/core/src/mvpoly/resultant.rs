use num_traits::{One, Zero};

use super::gcd::mv_gcd;
use super::hpoly::HPoly;
use crate::error::{MonoidError, Result};
use crate::exactnum::{formal_resultant, int, BigRat, BinaryForm, UPoly};

/// Resultant of two ternary forms with respect to `x_eliminate`.
///
/// The result is a binary form of degree `deg f · deg g` in the two remaining
/// variables `(y1, y2)` (in their original order), returned as
/// `R(y1, y2)` with `y1 ↦ s`, `y2 ↦ t`. The formal Sylvester matrix uses the
/// total degrees, so the output is homogeneous even when the leading
/// coefficient in the eliminated variable vanishes somewhere.
pub fn bivariate_resultant(f: &HPoly, g: &HPoly, eliminate: usize) -> Result<BinaryForm> {
    if f.nvars() != 3 || g.nvars() != 3 {
        return Err(MonoidError::DimensionMismatch { expected: 3, got: f.nvars().max(g.nvars()) });
    }
    let (Some(a), Some(b)) = (f.degree(), g.degree()) else {
        return Err(MonoidError::ZeroPolynomial("bivariate resultant"));
    };
    let rest: Vec<usize> = (0..3).filter(|&v| v != eliminate).collect();
    let (y1, y2) = (rest[0], rest[1]);
    let total = (a * b) as usize;
    let fc = f.coefficients_in(eliminate);
    let gc = g.coefficients_in(eliminate);

    let restrict = |coeffs: &[crate::mvpoly::MPoly], u: &BigRat| -> UPoly {
        let mut pt = vec![BigRat::zero(); 3];
        pt[y1] = u.clone();
        pt[y2] = BigRat::one();
        UPoly::new(coeffs.iter().map(|c| c.eval(&pt)).collect())
    };

    let xs: Vec<BigRat> = (0..=total as i64).map(int).collect();
    let ys: Vec<BigRat> = xs
        .iter()
        .map(|u| formal_resultant(&restrict(&fc, u), a as usize, &restrict(&gc, u), b as usize))
        .collect();
    let r = interpolate(&xs, &ys);
    if r.is_zero() {
        let common = mv_gcd(f, g)?;
        if common.degree().unwrap_or(0) > 0 {
            return Err(MonoidError::CommonFactor(common.to_string()));
        }
        return Err(MonoidError::DegenerateProjection);
    }
    Ok(BinaryForm::new(total, r))
}

/// Lagrange interpolation through distinct nodes (Newton divided differences).
pub fn interpolate(xs: &[BigRat], ys: &[BigRat]) -> UPoly {
    let n = xs.len();
    let mut coef: Vec<BigRat> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut p = UPoly::constant(coef[n - 1].clone());
    for i in (0..n - 1).rev() {
        p = &(&p * &UPoly::linear_root(&xs[i])) + &UPoly::constant(coef[i].clone());
    }
    p
}
