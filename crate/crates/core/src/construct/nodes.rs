//! The two surface examples: as many real nodes as the bound allows, and a
//! single `A_{d(d-1)-1}` point.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{MonoidError, Result};
use crate::exactnum::{int, isolate_real_roots, rat, simplest_between, BigRat, SturmSequence, UPoly};
use crate::linalg::solve;
use crate::monoid::{build_monoid, Monoid};
use crate::mvpoly::{HPoly, MPoly};
use crate::singclass::{extra_singularities, verify_real_a1_signature, SurfaceSingularityReport};

pub fn default_epsilon() -> BigRat {
    rat(1, 10)
}

/// `x0·(x1·x2^(d-2) + x3^(d-1)) + x1^d`.
pub fn extreme_a_monoid(d: u32) -> Result<Monoid> {
    if d < 3 {
        return Err(MonoidError::Precondition("degree must be at least 3".into()));
    }
    let x = |i| MPoly::var(3, i);
    let f_lo = &(&x(0) * &x(1).pow(d - 2)) + &x(2).pow(d - 1);
    let f_hi = x(0).pow(d);
    build_monoid(&HPoly::new(f_lo)?, &HPoly::new(f_hi)?)
}

#[derive(Clone, Debug)]
pub struct NodesConstruction {
    pub monoid: Monoid,
    /// Constant of the level curve `ε = ∏ lines` after the radii were made
    /// rational.
    pub epsilon: BigRat,
    /// Axis parameters of the tangency orbits, one per circle.
    pub axis_points: Vec<BigRat>,
    pub report: SurfaceSingularityReport,
    /// Number of rational nodes whose Hessian was checked indefinite.
    pub hessian_checked: usize,
    pub attempts: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct NodesSummary {
    pub degree: u32,
    pub extra_singularities: usize,
    pub real: usize,
    pub hessian_checked: usize,
}

/// Plane picture with a rational dihedral symmetry of odd order `m`: the
/// product of the `m` polygon sides, an invariant quadratic form whose level
/// sets play the role of circles, and a symmetry axis.
struct Frame {
    sides: MPoly,
    quad: MPoly,
    axis: [BigRat; 2],
}

impl Frame {
    /// Triangle in lattice coordinates where the rotation of order three is
    /// rational: `(u,v) -> (v,-u-v)`.
    fn hexagonal() -> Frame {
        let (u, v, one) = (MPoly::var(3, 0), MPoly::var(3, 1), MPoly::one(3));
        let sides = &(&(&u + &one) * &(&v + &one)) * &(&(&one - &u) - &v);
        let quad = &(&(&u * &u) + &(&u * &v)) + &(&v * &v);
        Frame { sides, quad, axis: [int(1), int(1)] }
    }

    /// `∏_i (x·sin(2πi/m) + y·cos(2πi/m) + 1)` in closed rational form
    /// `(2·Re((y+ix)^m) - p_m(x²+y²)) / 2^m`, where `p_m` is the `m`-th power
    /// sum of the roots of `z² + 2z + x² + y²`.
    fn polygon(m: u32) -> Frame {
        let (x, y) = (MPoly::var(3, 0), MPoly::var(3, 1));
        let r = &(&x * &x) + &(&y * &y);
        let mut re = MPoly::zero(3);
        for j in 0..=m / 2 {
            let c = binomial(m, 2 * j) * if j % 2 == 0 { int(1) } else { int(-1) };
            re = &re + &(&y.pow(m - 2 * j) * &x.pow(2 * j)).scale(&c);
        }
        let (mut p0, mut p1) = (MPoly::constant(3, int(2)), MPoly::constant(3, int(-2)));
        for _ in 1..m {
            let next = &p1.scale(&int(-2)) - &(&r * &p0);
            p0 = p1;
            p1 = next;
        }
        let scale = BigRat::one() / BigRat::from_integer(num_bigint::BigInt::from(2).pow(m));
        let sides = (&re.scale(&int(2)) - &p1).scale(&scale);
        Frame { sides, quad: r, axis: [int(0), int(1)] }
    }

    fn on_axis(&self, p: &MPoly) -> UPoly {
        let t = MPoly::var(3, 0);
        let images = [t.scale(&self.axis[0]), t.scale(&self.axis[1]), MPoly::var(3, 2)];
        p.compose(&images).to_upoly(0).expect("univariate")
    }
}

fn binomial(n: u32, k: u32) -> BigRat {
    let mut c = BigRat::one();
    for i in 0..k {
        c = c * int((n - i) as i64) / int((i + 1) as i64);
    }
    c
}

/// Builds a monoid of degree `d` whose tangent cone and `f_d` meet in
/// `d(d-1)/2` real tangencies, giving that many real `A_1` points.
///
/// With `m` the odd one of `d-1, d`, one part is `ε - ∏(m sides)` and the
/// other a product of concentric circles through the points where the level
/// curve crosses a symmetry axis. The radii are rounded to rationals and the
/// invariant terms `Σ c_i·r^(2i)` are corrected so that the tangencies stay
/// exact. The result is verified by the singularity classifier.
pub fn max_real_nodes_monoid(d: u32, epsilon: &BigRat) -> Result<NodesConstruction> {
    if d < 3 {
        return Err(MonoidError::Precondition("degree must be at least 3".into()));
    }
    if !epsilon.is_positive() {
        return Err(MonoidError::Precondition("epsilon must be positive".into()));
    }
    let m = if d % 2 == 1 { d } else { d - 1 };
    let circles = ((2 * d - 1 - m) / 2) as usize;
    let frame = if m == 3 { Frame::hexagonal() } else { Frame::polygon(m) };
    let mut failures = Vec::new();
    let mut eps = epsilon.clone();
    let mut attempts = 0;
    for _ in 0..4 {
        for digits in [2u32, 4, 8] {
            attempts += 1;
            match attempt(&frame, d, m, circles, &eps, digits) {
                Ok(mut c) => {
                    c.attempts = attempts;
                    return Ok(c);
                }
                Err(e) => failures.push(format!("eps={eps}, width 10^-{digits}: {e}")),
            }
        }
        eps /= int(2);
    }
    Err(MonoidError::ConstructionFailed(failures.join("; ")))
}

fn attempt(frame: &Frame, d: u32, m: u32, circles: usize, eps: &BigRat, digits: u32) -> Result<NodesConstruction> {
    let h = frame.on_axis(&frame.sides);
    let qa = frame.on_axis(&frame.quad).coeff(2);
    let level = &UPoly::constant(eps.clone()) - &h;
    let roots = isolate_real_roots(&level)?;
    if roots.len() < circles {
        return Err(MonoidError::ConstructionFailed(format!("only {} axis crossings", roots.len())));
    }
    let sturm = SturmSequence::new(&level);
    let width = BigRat::one() / BigRat::from_integer(num_bigint::BigInt::from(10).pow(digits));
    let mut ts: Vec<BigRat> = roots
        .iter()
        .map(|iv| {
            let iv = sturm.refine(iv, &width);
            simplest_between(&iv.lo, &iv.hi)
        })
        .collect();
    ts.sort_by_key(|t| t.abs());
    ts.truncate(circles);
    let mut sq: Vec<BigRat> = ts.iter().map(|t| t * t).collect();
    sq.dedup();
    if sq.len() < circles || sq.iter().any(Zero::is_zero) {
        return Err(MonoidError::ConstructionFailed("axis crossings share a radius".into()));
    }
    // Correction Σ c_i·quad^i with i in `powers`; it vanishes on the circles
    // exactly when the rounded crossings lie on the level curve.
    let powers: Vec<u32> = if d == m { (1..=circles as u32).collect() } else { (0..circles as u32).collect() };
    let rows: Vec<Vec<BigRat>> = ts
        .iter()
        .map(|t| powers.iter().map(|&i| num_traits::pow(&qa * t * t, i as usize)).collect())
        .collect();
    let rhs: Vec<BigRat> = ts.iter().map(|t| h.eval(t) - eps).collect();
    let c = solve(&rows, &rhs).ok_or_else(|| MonoidError::ConstructionFailed("singular correction system".into()))?;
    let mut level_poly = &MPoly::constant(3, eps.clone()) - &frame.sides;
    for (ci, &i) in c.iter().zip(&powers) {
        level_poly = &level_poly + &frame.quad.pow(i).scale(ci);
    }
    let f_m = HPoly::new(level_poly.homogenize(2, m))?;
    let z2 = MPoly::var(3, 2).pow(2);
    let mut circ = MPoly::one(3);
    for t in &ts {
        circ = &circ * &(&frame.quad - &z2.scale(&(&qa * t * t)));
    }
    let circ = HPoly::new(circ)?;
    let (f_lo, f_hi) = if m == d - 1 { (f_m, circ) } else { (circ, f_m) };
    let monoid = build_monoid(&f_lo, &f_hi)?;
    let report = extra_singularities(&monoid)?;
    let bound = (d * (d - 1) / 2) as usize;
    if report.extra_count() != bound
        || report.records.iter().any(|r| r.m != 2)
        || report.real_extra_count() != bound
    {
        return Err(MonoidError::ConstructionFailed(format!(
            "got {:?} with {} real",
            report.labels(),
            report.real_extra_count()
        )));
    }
    let mut checked = 0;
    for r in report.records.iter().filter(|r| r.point().is_some()) {
        if !verify_real_a1_signature(&monoid, r)? {
            return Err(MonoidError::ConstructionFailed(format!("definite Hessian at {}", r.location.describe())));
        }
        checked += 1;
    }
    let effective = eps + c.first().filter(|_| powers[0] == 0).cloned().unwrap_or_else(BigRat::zero);
    Ok(NodesConstruction { monoid, epsilon: effective, axis_points: ts, report, hessian_checked: checked, attempts: 0 })
}

impl NodesConstruction {
    pub fn summary(&self) -> NodesSummary {
        NodesSummary {
            degree: self.monoid.degree(),
            extra_singularities: self.report.extra_count(),
            real: self.report.real_extra_count(),
            hessian_checked: self.hessian_checked,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat_to_f64;
    use crate::monoid::multiplicity_at;
    use crate::mvpoly::ProjPoint;

    #[test]
    fn polygon_product_matches_the_lines() {
        for m in [3u32, 5, 7] {
            let f = Frame::polygon(m);
            for (x, y) in [(rat(1, 3), rat(-2, 7)), (rat(5, 4), rat(1, 9))] {
                let exact = rat_to_f64(&f.sides.eval(&[x.clone(), y.clone(), int(1)]));
                let (xf, yf) = (rat_to_f64(&x), rat_to_f64(&y));
                let float: f64 = (0..m)
                    .map(|i| {
                        let a = 2.0 * std::f64::consts::PI * i as f64 / m as f64;
                        xf * a.sin() + yf * a.cos() + 1.0
                    })
                    .product();
                assert!((exact - float).abs() < 1e-9, "m={m}: {exact} vs {float}");
            }
        }
    }

    #[test]
    fn simplest_rationals() {
        assert_eq!(simplest_between(&rat(3, 10), &rat(4, 10)), rat(1, 3));
        assert_eq!(simplest_between(&rat(-7, 5), &rat(-6, 5)), rat(-4, 3));
        assert_eq!(simplest_between(&rat(-1, 5), &rat(1, 5)), int(0));
    }

    #[test]
    fn extreme_example_point_multiplicity() {
        let m = extreme_a_monoid(4).unwrap();
        assert_eq!(multiplicity_at(&m.whole(), &ProjPoint::origin(4)), 3);
    }

    #[test]
    fn three_real_nodes_on_a_cubic() {
        let c = max_real_nodes_monoid(3, &default_epsilon()).unwrap();
        assert_eq!(c.report.extra_count(), 3);
        assert_eq!(c.report.real_extra_count(), 3);
        assert_eq!(c.hessian_checked, 3);
    }

    #[test]
    fn six_real_nodes_on_a_quartic() {
        let c = max_real_nodes_monoid(4, &default_epsilon()).unwrap();
        assert_eq!(c.report.labels(), vec!["A_1"; 6]);
        assert_eq!(c.report.real_extra_count(), 6);
        assert_eq!(c.hessian_checked, 6);
    }

    #[test]
    fn ten_real_nodes_on_a_quintic() {
        let c = max_real_nodes_monoid(5, &default_epsilon()).unwrap();
        assert_eq!(c.report.extra_count(), 10);
        assert_eq!(c.report.real_extra_count(), 10);
        assert!(c.hessian_checked >= 2);
    }
}
