//! Point clouds on a monoid surface from its natural parameterization.
//!
//! Grid points and their images are exact; floats appear only in the
//! emitted vertices and the residual check.

use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{MonoidError, Result};
use crate::exactnum::{int, rat, rat_to_f64, BigRat};
use crate::monoid::{Monoid, PointStatus};
use crate::mvpoly::{HPoly, MPoly, ProjPoint};
use crate::par::{self, Execution};

/// Largest accepted `|F(p)|/‖∇F(p)‖` at a unit-normalized homogeneous vertex.
pub const RESIDUAL_BOUND: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MeshFormat {
    Obj,
    Csv,
}

#[derive(Clone, Debug, Serialize)]
pub struct SampleCloud {
    pub grid: usize,
    pub chart: usize,
    /// Affine coordinates `(x1/x0, x2/x0, x3/x0)`.
    pub vertices: Vec<[f64; 3]>,
    pub base_points_skipped: usize,
    pub at_infinity: usize,
    pub singular_skipped: usize,
    pub rejected: usize,
    pub max_residual: f64,
    pub bound: f64,
}

enum Outcome {
    Vertex([f64; 3], f64),
    BasePoint,
    AtInfinity,
    Singular,
    Rejected,
}

/// Grid coordinates `-1 + 2j/(k-1)`; a single `0` when `k = 1`.
pub fn grid_values(k: usize) -> Vec<BigRat> {
    match k {
        0 => Vec::new(),
        1 => vec![BigRat::zero()],
        _ => (0..k).map(|j| int(-1) + rat(2 * j as i64, (k - 1) as i64)).collect(),
    }
}

/// Preimages in `P²`: the chart coordinate is 1, the others run over the grid.
pub fn grid_points(k: usize, chart: usize) -> Result<Vec<ProjPoint>> {
    if chart > 2 {
        return Err(MonoidError::Precondition(format!("chart index {chart} outside 0..=2")));
    }
    let vals = grid_values(k);
    let mut out = Vec::with_capacity(k * k);
    for u in &vals {
        for v in &vals {
            let mut c = vec![u.clone(), v.clone()];
            c.insert(chart, BigRat::one());
            out.push(ProjPoint::new(c)?);
        }
    }
    Ok(out)
}

pub fn sample_surface(m: &Monoid, k: usize, chart: usize) -> Result<SampleCloud> {
    sample_surface_with(m, k, chart, Execution::default())
}

pub fn sample_surface_with(m: &Monoid, k: usize, chart: usize, exec: Execution) -> Result<SampleCloud> {
    if m.ambient_dim() != 3 {
        return Err(MonoidError::Precondition("sampling needs a surface in P³".into()));
    }
    let pre = grid_points(k, chart)?;
    let f = m.whole();
    let fl = FloatPoly::new(f.as_mpoly());
    let grad: Vec<FloatPoly> = f.gradient().iter().map(|g| FloatPoly::new(g.as_mpoly())).collect();
    let outcomes = par::map(&pre, exec, |a| sample_one(m, a, &fl, &grad));

    let mut cloud = SampleCloud {
        grid: k,
        chart,
        vertices: Vec::new(),
        base_points_skipped: 0,
        at_infinity: 0,
        singular_skipped: 0,
        rejected: 0,
        max_residual: 0.0,
        bound: RESIDUAL_BOUND,
    };
    for o in outcomes {
        match o? {
            Outcome::Vertex(v, r) => {
                cloud.max_residual = cloud.max_residual.max(r);
                cloud.vertices.push(v);
            }
            Outcome::BasePoint => cloud.base_points_skipped += 1,
            Outcome::AtInfinity => cloud.at_infinity += 1,
            Outcome::Singular => cloud.singular_skipped += 1,
            Outcome::Rejected => cloud.rejected += 1,
        }
    }
    Ok(cloud)
}

fn sample_one(m: &Monoid, a: &ProjPoint, f: &FloatPoly, grad: &[FloatPoly]) -> Result<Outcome> {
    let p = match m.natural_param(a) {
        Ok(p) => p,
        Err(MonoidError::BasePoint(_)) => return Ok(Outcome::BasePoint),
        Err(e) => return Err(e),
    };
    let c = p.coords();
    if c[0].is_zero() {
        return Ok(Outcome::AtInfinity);
    }
    let affine = [&c[1] / &c[0], &c[2] / &c[0], &c[3] / &c[0]];
    let v = [rat_to_f64(&affine[0]), rat_to_f64(&affine[1]), rat_to_f64(&affine[2])];
    if !v.iter().all(|x| x.is_finite()) {
        return Ok(Outcome::Rejected);
    }
    let h = [1.0, v[0], v[1], v[2]];
    let norm = h.iter().map(|x| x * x).sum::<f64>().sqrt();
    let unit: Vec<f64> = h.iter().map(|x| x / norm).collect();
    let value = f.eval(&unit).abs();
    let gnorm = grad.iter().map(|g| g.eval(&unit).powi(2)).sum::<f64>().sqrt();
    if gnorm < 1e-6 && m.singular_points_criterion(&p)? == PointStatus::Singular {
        return Ok(Outcome::Singular);
    }
    let r = if gnorm > 0.0 { value / gnorm } else { f64::INFINITY };
    if r <= RESIDUAL_BOUND {
        Ok(Outcome::Vertex(v, r))
    } else {
        Ok(Outcome::Rejected)
    }
}

struct FloatPoly(Vec<(Vec<u32>, f64)>);

impl FloatPoly {
    fn new(p: &MPoly) -> Self {
        FloatPoly(p.terms().map(|(e, c)| (e.to_vec(), rat_to_f64(c))).collect())
    }

    fn eval(&self, x: &[f64]) -> f64 {
        self.0
            .iter()
            .map(|(e, c)| e.iter().zip(x).fold(*c, |acc, (k, xi)| acc * xi.powi(*k as i32)))
            .sum()
    }
}

/// Re-evaluates `F` at each vertex; the largest `|F|/‖∇F‖` found.
pub fn max_vertex_residual(f: &HPoly, vertices: &[[f64; 3]]) -> f64 {
    let fl = FloatPoly::new(f.as_mpoly());
    let grad: Vec<FloatPoly> = f.gradient().iter().map(|g| FloatPoly::new(g.as_mpoly())).collect();
    vertices
        .iter()
        .map(|v| {
            let h = [1.0, v[0], v[1], v[2]];
            let norm = h.iter().map(|x| x * x).sum::<f64>().sqrt();
            let unit: Vec<f64> = h.iter().map(|x| x / norm).collect();
            let g = grad.iter().map(|g| g.eval(&unit).powi(2)).sum::<f64>().sqrt();
            fl.eval(&unit).abs() / g
        })
        .fold(0.0, f64::max)
}

pub fn render_mesh(cloud: &SampleCloud, format: MeshFormat) -> String {
    let mut out = String::new();
    match format {
        MeshFormat::Obj => {
            for v in &cloud.vertices {
                let _ = writeln!(out, "v {} {} {}", v[0], v[1], v[2]);
            }
        }
        MeshFormat::Csv => {
            out.push_str("x,y,z\n");
            for v in &cloud.vertices {
                let _ = writeln!(out, "{},{},{}", v[0], v[1], v[2]);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::build_monoid;
    use crate::mvpoly::parse_hpoly;

    fn cusp_cone() -> Monoid {
        let v = ["x1", "x2", "x3"];
        build_monoid(&parse_hpoly("x1*x2^2+x3^3", &v).unwrap(), &parse_hpoly("x1^4", &v).unwrap()).unwrap()
    }

    #[test]
    fn vertices_lie_on_the_surface() {
        let m = cusp_cone();
        let cloud = sample_surface(&m, 21, 2).unwrap();
        assert!(!cloud.vertices.is_empty());
        assert_eq!(cloud.rejected, 0);
        assert!(max_vertex_residual(&m.whole(), &cloud.vertices) <= RESIDUAL_BOUND);
        let total = cloud.vertices.len() + cloud.base_points_skipped + cloud.at_infinity + cloud.singular_skipped;
        assert_eq!(total, 21 * 21);
    }

    #[test]
    fn base_points_are_skipped() {
        // Chart x2 = 1 contains the base point (0:1:0) at grid center.
        let cloud = sample_surface(&cusp_cone(), 3, 1).unwrap();
        assert_eq!(cloud.base_points_skipped, 1);
    }

    #[test]
    fn degenerate_grids() {
        let m = cusp_cone();
        let one = sample_surface(&m, 1, 0).unwrap();
        assert!(one.vertices.len() <= 1);
        assert!(sample_surface(&m, 0, 0).unwrap().vertices.is_empty());
        assert!(sample_surface(&m, 3, 3).is_err());
    }

    #[test]
    fn formats() {
        let cloud = sample_surface(&cusp_cone(), 4, 2).unwrap();
        let obj = render_mesh(&cloud, MeshFormat::Obj);
        assert!(obj.lines().all(|l| l.starts_with("v ")));
        let csv = render_mesh(&cloud, MeshFormat::Csv);
        assert!(csv.starts_with("x,y,z\n"));
        assert_eq!(csv.lines().count(), cloud.vertices.len() + 1);
    }

    #[test]
    fn sequential_matches_parallel() {
        let m = cusp_cone();
        let a = sample_surface_with(&m, 9, 2, Execution::Sequential).unwrap();
        let b = sample_surface_with(&m, 9, 2, Execution::Parallel).unwrap();
        assert_eq!(a.vertices, b.vertices);
    }
}
