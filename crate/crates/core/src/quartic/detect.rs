//! Which of the nine tangent-cone types a plane cubic belongs to, with its
//! singular points and its components over `Q`.

use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

use crate::error::{MonoidError, Result};
use crate::exactnum::{int, real_root_count, squarefree_decomposition, BigRat, UPoly};
use crate::intersect::{intersection_profile, localize, PointClass};
use crate::linalg::{nullspace, solve};
use crate::mvpoly::{mv_gcd, HPoly, MPoly, ProjPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RealForm {
    /// Case 3: the line meets the conic in two real points.
    TwoRealPoints,
    /// Case 3: the line meets the conic in two conjugate points.
    ConjugatePoints,
    /// Cases 5 and 6.
    ThreeRealLines,
    /// Cases 5 and 6: one real line and a conjugate pair.
    OneRealLineConjugatePair,
}

/// A factor of the cubic over `Q`, made of `geometric` conjugate components
/// of equal degree.
#[derive(Clone, Debug)]
pub struct Component {
    pub poly: HPoly,
    pub geometric: usize,
    /// Exponent of the factor in the cubic.
    pub power: u32,
}

impl Component {
    /// Degree of each geometric component.
    pub fn component_degree(&self) -> u32 {
        self.poly.degree().unwrap() / self.geometric as u32
    }

    /// Number of geometric components that are real.
    pub fn real_components(&self) -> usize {
        if self.geometric == 1 {
            return 1;
        }
        // A product of lines through a rational point: count real directions.
        pencil_real_count(&self.poly).unwrap_or(0)
    }
}

#[derive(Clone, Debug)]
pub struct SingularPoint {
    pub class: PointClass,
    /// Multiplicity of the cubic at each member.
    pub multiplicity: u32,
}

#[derive(Clone, Debug)]
pub struct TangentConeType {
    pub case: u8,
    pub real_form: Option<RealForm>,
    pub singular_points: Vec<SingularPoint>,
    pub components: Vec<Component>,
    pub f3: HPoly,
}

impl TangentConeType {
    pub fn rational_singular_points(&self) -> Vec<ProjPoint> {
        self.singular_points.iter().filter_map(|s| s.class.rational_point()).collect()
    }

    pub fn singular_count(&self) -> usize {
        self.singular_points.iter().map(|s| s.class.size()).sum()
    }
}

/// A factor of the tangent-cone form at a point, as a product of lines
/// through the point.
#[derive(Clone, Debug)]
pub struct PencilFactor {
    pub form: HPoly,
    /// Number of lines (the degree of `form`).
    pub lines: usize,
    pub real_lines: usize,
    /// Multiplicity as a tangent direction.
    pub multiplicity: usize,
    /// Whether `form` divides the curve, i.e. the lines are components.
    pub is_component: bool,
}

fn unit(n: usize, i: usize) -> Vec<BigRat> {
    (0..n).map(|j| if i == j { BigRat::one() } else { BigRat::zero() }).collect()
}

/// Columns `p, e_i, e_j` with `i, j` the coordinates other than the chart of `p`.
fn frame(p: &ProjPoint) -> (Vec<Vec<BigRat>>, Vec<Vec<BigRat>>) {
    let r = p.chart();
    let others: Vec<usize> = (0..3).filter(|&i| i != r).collect();
    let cols = [p.coords().to_vec(), unit(3, others[0]), unit(3, others[1])];
    let m: Vec<Vec<BigRat>> = (0..3).map(|i| (0..3).map(|j| cols[j][i].clone()).collect()).collect();
    let inv_cols: Vec<Vec<BigRat>> = (0..3).map(|j| solve(&m, &unit(3, j)).expect("frame is invertible")).collect();
    let inv: Vec<Vec<BigRat>> = (0..3).map(|i| (0..3).map(|j| inv_cols[j][i].clone()).collect()).collect();
    (m, inv)
}

/// Restricts `f` to the pencil of lines through `p` and factors the lowest
/// order part into line directions over `Q`.
pub fn line_components_through(f: &HPoly, p: &ProjPoint) -> Result<Vec<PencilFactor>> {
    if f.nvars() != 3 || p.dim() != 3 {
        return Err(MonoidError::DimensionMismatch { expected: 3, got: p.dim() });
    }
    let local = localize(f, p);
    let k = local.low_degree().unwrap_or(0);
    if k < 2 {
        return Err(MonoidError::NotSingularPoint(p.to_string()));
    }
    let (m, inv) = frame(p);
    let g = f.transform(&m);
    let deg = f.degree().unwrap();
    // Binary form in (y, z): the terms with x0-exponent deg - k.
    let mut bin = MPoly::zero(3);
    for (e, c) in g.terms() {
        if e[0] == deg - k {
            bin.add_term(vec![0, e[1], e[2]], c.clone());
        }
    }
    let y_row = MPoly::linear(&inv[1]);
    let z_row = MPoly::linear(&inv[2]);
    let to_plane = |poly_yz: &MPoly| -> HPoly {
        let images = vec![MPoly::zero(3), y_row.clone(), z_row.clone()];
        HPoly::new(poly_yz.compose(&images)).expect("homogeneous").normalized()
    };
    let py = bin.substitute(2, &BigRat::one()).to_upoly(1).expect("univariate");
    let at_infinity = k as usize - py.deg();
    let mut out = Vec::new();
    let mut push = |poly_yz: MPoly, lines: usize, real: usize, mult: usize| {
        let form = to_plane(&poly_yz);
        let is_component = f.exact_div(&form).is_some();
        out.push(PencilFactor { form, lines, real_lines: real, multiplicity: mult, is_component });
    };
    if at_infinity > 0 {
        push(MPoly::var(3, 2), 1, 1, at_infinity);
    }
    if py.deg() > 0 {
        for (h, mult) in squarefree_decomposition(&py)?.factors {
            let mut rest = h.clone();
            for r in h.rational_roots() {
                let line = &MPoly::var(3, 1) - &MPoly::var(3, 2).scale(&r);
                push(line, 1, 1, mult);
                rest = rest.exact_div(&UPoly::linear_root(&r)).unwrap();
            }
            if rest.deg() > 0 {
                let e = rest.deg() as u32;
                let hom = MPoly::from_upoly(3, 1, &rest).homogenize(2, e);
                push(hom, rest.deg(), real_root_count(&rest), mult);
            }
        }
    }
    Ok(out)
}

/// Real directions of a binary-type form that is a product of lines through
/// one rational point.
fn pencil_real_count(f: &HPoly) -> Option<usize> {
    let d = f.degree()?;
    let p = concurrency_point(f, d)?;
    let factors = line_components_through(f, &p).ok()?;
    Some(factors.iter().map(|x| x.real_lines).sum())
}

fn concurrency_point(f: &HPoly, d: u32) -> Option<ProjPoint> {
    // All (d-1)-th partial derivatives vanish at the vertex of a cone of lines,
    // which is the common zero of the linear forms obtained that way.
    let mut linears: Vec<MPoly> = vec![f.as_mpoly().clone()];
    for _ in 0..d.saturating_sub(1) {
        linears = linears.iter().flat_map(|g| (0..3).map(move |i| g.partial(i))).collect();
    }
    let rows: Vec<Vec<BigRat>> = linears
        .iter()
        .map(|l| (0..3).map(|i| l.coeff(&unit_exp(i))).collect())
        .collect();
    let ns = nullspace(&rows, 3);
    if ns.len() != 1 {
        return None;
    }
    ProjPoint::new(ns[0].clone()).ok()
}

fn unit_exp(i: usize) -> Vec<u32> {
    (0..3).map(|j| u32::from(i == j)).collect()
}

/// The lines through every point of the given classes, as a basis of linear forms.
pub fn lines_through(classes: &[&PointClass]) -> Vec<HPoly> {
    let mut rows = Vec::new();
    for c in classes {
        for j in 0..c.minpoly.deg() {
            rows.push(c.coords.iter().map(|x| x.coeff(j)).collect::<Vec<_>>());
        }
    }
    nullspace(&rows, 3).into_iter().map(|l| HPoly::linear(&l).normalized()).collect()
}

/// Singular points of a squarefree plane curve: common zeros of the curve
/// and a generic polar, filtered by the gradient.
pub fn singular_points<R: Rng + ?Sized>(f: &HPoly, rng: &mut R) -> Result<Vec<PointClass>> {
    let grads: Vec<HPoly> = f.gradient();
    let grads_m: Vec<MPoly> = grads.iter().map(|g| g.as_mpoly().clone()).collect();
    for _ in 0..32 {
        let c: Vec<i64> = (0..3).map(|_| rng.random_range(-9..=9)).collect();
        let mut polar = MPoly::zero(3);
        for (ci, g) in c.iter().zip(&grads) {
            polar = &polar + &g.as_mpoly().scale(&int(*ci));
        }
        if polar.is_zero() {
            continue;
        }
        let polar = HPoly::new(polar)?;
        if mv_gcd(f, &polar)?.degree().unwrap_or(0) > 0 {
            continue;
        }
        let profile = intersection_profile(f, &polar, rng)?;
        let mut out = Vec::new();
        for e in &profile.entries {
            if let (Some(s), _) = e.class.partition_common(&grads_m) {
                out.extend(s.split_rational());
            }
        }
        out.sort_by_key(|c| (c.size(), c.describe()));
        return Ok(out);
    }
    Err(MonoidError::GenericityFailure { tries: 32, detail: "no polar curve coprime to the cubic".into() })
}

fn line_through_points(a: &ProjPoint, b: &ProjPoint) -> HPoly {
    let ca = PointClass::from_point(a);
    let cb = PointClass::from_point(b);
    lines_through(&[&ca, &cb]).remove(0)
}

fn exact_quotient(f: &HPoly, d: &HPoly) -> Result<HPoly> {
    f.exact_div(d)
        .map(|q| q.normalized())
        .ok_or_else(|| MonoidError::LedgerMismatch(format!("{d} does not divide {f}")))
}

/// Classifies a nonzero ternary cubic into the nine tangent-cone types.
pub fn tangent_cone_type<R: Rng + ?Sized>(f3: &HPoly, rng: &mut R) -> Result<TangentConeType> {
    if f3.nvars() != 3 {
        return Err(MonoidError::DimensionMismatch { expected: 3, got: f3.nvars() });
    }
    if f3.is_zero() {
        return Err(MonoidError::ZeroPolynomial("tangent cone"));
    }
    if f3.degree() != Some(3) {
        return Err(MonoidError::NotACubic(f3.to_string()));
    }
    let f3 = f3.normalized();
    let grads = f3.gradient();
    let mut g = f3.clone();
    for d in &grads {
        g = mv_gcd(&g, d)?;
    }
    let single = |case, components, singular_points| TangentConeType {
        case,
        real_form: None,
        singular_points,
        components,
        f3: f3.clone(),
    };
    match g.degree().unwrap_or(0) {
        2 => {
            let line = exact_quotient(&f3, &g)?;
            return Ok(single(8, vec![Component { poly: line, geometric: 1, power: 3 }], vec![]));
        }
        1 => {
            let other = exact_quotient(&f3, &g.pow(2))?;
            let comps = vec![
                Component { poly: g.normalized(), geometric: 1, power: 2 },
                Component { poly: other.clone(), geometric: 1, power: 1 },
            ];
            let p = meet(&g, &other)?;
            let sp = vec![SingularPoint { class: PointClass::from_point(&p), multiplicity: 3 }];
            return Ok(single(7, comps, sp));
        }
        _ => {}
    }
    let classes = singular_points(&f3, rng)?;
    let sing: Vec<SingularPoint> = classes
        .iter()
        .map(|c| {
            let multiplicity = c.rational_point().map_or(2, |p| localize(&f3, &p).low_degree().unwrap_or(0));
            SingularPoint { class: c.clone(), multiplicity }
        })
        .collect();
    let count: usize = classes.iter().map(PointClass::size).sum();
    let real: usize = classes.iter().map(PointClass::real_count).sum();
    let mut tc = single(0, vec![], sing);
    match count {
        0 => {
            tc.case = 9;
            tc.components = vec![Component { poly: f3.clone(), geometric: 1, power: 1 }];
        }
        2 => {
            tc.case = 3;
            tc.real_form = Some(if real == 2 { RealForm::TwoRealPoints } else { RealForm::ConjugatePoints });
            let refs: Vec<&PointClass> = classes.iter().collect();
            let line = lines_through(&refs).remove(0);
            let conic = exact_quotient(&f3, &line)?;
            tc.components = vec![
                Component { poly: line, geometric: 1, power: 1 },
                Component { poly: conic, geometric: 1, power: 1 },
            ];
        }
        3 => {
            tc.case = 5;
            tc.real_form = Some(if real == 3 { RealForm::ThreeRealLines } else { RealForm::OneRealLineConjugatePair });
            tc.components = three_line_components(&f3, &classes)?;
        }
        1 => {
            let p = classes[0].rational_point().expect("a single singular point is rational");
            let pencil = line_components_through(&f3, &p)?;
            let mult = tc.singular_points[0].multiplicity;
            if mult == 3 {
                tc.case = 6;
                let real: usize = pencil.iter().map(|x| x.real_lines).sum();
                tc.real_form =
                    Some(if real == 3 { RealForm::ThreeRealLines } else { RealForm::OneRealLineConjugatePair });
                tc.components = pencil
                    .iter()
                    .map(|x| Component { poly: x.form.clone(), geometric: x.lines, power: 1 })
                    .collect();
            } else if pencil.len() == 1 && pencil[0].multiplicity == 2 {
                if pencil[0].is_component {
                    tc.case = 4;
                    let line = pencil[0].form.clone();
                    let conic = exact_quotient(&f3, &line)?;
                    tc.components = vec![
                        Component { poly: line, geometric: 1, power: 1 },
                        Component { poly: conic, geometric: 1, power: 1 },
                    ];
                } else {
                    tc.case = 2;
                    tc.components = vec![Component { poly: f3.clone(), geometric: 1, power: 1 }];
                }
            } else {
                tc.case = 1;
                tc.components = vec![Component { poly: f3.clone(), geometric: 1, power: 1 }];
            }
        }
        n => {
            return Err(MonoidError::LedgerMismatch(format!("a reduced cubic with {n} singular points")));
        }
    }
    tc.components.sort_by_key(|c| (c.poly.degree(), c.geometric, c.poly.to_string()));
    Ok(tc)
}

/// Three lines, no two equal, not concurrent, from their three vertices.
fn three_line_components(f3: &HPoly, classes: &[PointClass]) -> Result<Vec<Component>> {
    let rational: Vec<ProjPoint> = classes.iter().filter_map(PointClass::rational_point).collect();
    match rational.len() {
        3 => {
            let mut out = Vec::new();
            for (a, b) in [(0, 1), (0, 2), (1, 2)] {
                out.push(Component { poly: line_through_points(&rational[a], &rational[b]), geometric: 1, power: 1 });
            }
            Ok(out)
        }
        1 => {
            let pair = classes.iter().find(|c| !c.is_rational()).unwrap();
            let line = lines_through(&[pair]).remove(0);
            let rest = exact_quotient(f3, &line)?;
            Ok(vec![
                Component { poly: line, geometric: 1, power: 1 },
                Component { poly: rest, geometric: 2, power: 1 },
            ])
        }
        _ => Ok(vec![Component { poly: f3.clone(), geometric: 3, power: 1 }]),
    }
}

/// Intersection point of two distinct lines.
pub fn meet(a: &HPoly, b: &HPoly) -> Result<ProjPoint> {
    let row = |l: &HPoly| -> Vec<BigRat> { (0..3).map(|i| l.coeff(&unit_exp(i))).collect() };
    let ns = nullspace(&vec![row(a), row(b)], 3);
    if ns.len() != 1 {
        return Err(MonoidError::LedgerMismatch(format!("lines {a} and {b} coincide")));
    }
    ProjPoint::new(ns[0].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mvpoly::parse_hpoly;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const X: [&str; 3] = ["x1", "x2", "x3"];

    fn h(s: &str) -> HPoly {
        parse_hpoly(s, &X).unwrap()
    }

    fn case_of(s: &str) -> (u8, Option<RealForm>) {
        let t = tangent_cone_type(&h(s), &mut ChaCha8Rng::seed_from_u64(1)).unwrap();
        (t.case, t.real_form)
    }

    #[test]
    fn normal_forms() {
        assert_eq!(case_of("x1*x2*x3 + x2^3 + x3^3").0, 1);
        assert_eq!(case_of("x1^3 - x2^2*x3").0, 2);
        assert_eq!(case_of("x3*(x1*x2 + x3^2)"), (3, Some(RealForm::TwoRealPoints)));
        assert_eq!(case_of("x3*(x1*x3 + x2^2)").0, 4);
        assert_eq!(case_of("x1*x2*x3"), (5, Some(RealForm::ThreeRealLines)));
        assert_eq!(case_of("x2^3 - x2*x3^2"), (6, Some(RealForm::ThreeRealLines)));
        assert_eq!(case_of("x2*x3^2").0, 7);
        assert_eq!(case_of("x3^3").0, 8);
        assert_eq!(case_of("x1^3 + x2^3 + x3^3").0, 9);
    }

    #[test]
    fn real_forms() {
        assert_eq!(case_of("x3*(x1^2 + x2^2 + x1*x3)"), (3, Some(RealForm::ConjugatePoints)));
        assert_eq!(case_of("x3*(x1*x3 + x1^2 + x2^2)"), (3, Some(RealForm::ConjugatePoints)));
        assert_eq!(case_of("x3*(x1^2 + x2^2)"), (5, Some(RealForm::OneRealLineConjugatePair)));
        assert_eq!(case_of("x2^3 + x3^3"), (6, Some(RealForm::OneRealLineConjugatePair)));
        assert_eq!(case_of("x1*(x2^2 - 2*x3^2)"), (5, Some(RealForm::ThreeRealLines)));
    }

    #[test]
    fn pencil_factors() {
        let lines = |f: &str, p: &[i64]| -> Vec<String> {
            let mut v: Vec<String> = line_components_through(&h(f), &ProjPoint::from_ints(p))
                .unwrap()
                .iter()
                .map(|x| x.form.to_string())
                .collect();
            v.sort();
            v
        };
        assert_eq!(lines("x1*x2*x3", &[1, 0, 0]), vec!["x2", "x3"]);
        assert_eq!(lines("x2^3 - x2*x3^2", &[1, 0, 0]), vec!["x2", "x2 + x3", "x2 - x3"]);
        assert_eq!(lines("x2^3 + x3^3", &[1, 0, 0]), vec!["x2 + x3", "x2^2 - x2*x3 + x3^2"]);
        let e = line_components_through(&h("x1*x2*x3"), &ProjPoint::from_ints(&[1, 1, 0])).unwrap_err();
        assert!(matches!(e, MonoidError::NotSingularPoint(_)));
    }

    #[test]
    fn components() {
        let t = tangent_cone_type(&h("x3*(x1^2 + x2^2)"), &mut ChaCha8Rng::seed_from_u64(2)).unwrap();
        let c: Vec<(String, usize)> = t.components.iter().map(|c| (c.poly.to_string(), c.geometric)).collect();
        assert_eq!(c, vec![("x3".to_string(), 1), ("x1^2 + x2^2".to_string(), 2)]);
        assert_eq!(t.components[1].real_components(), 0);
    }
}
