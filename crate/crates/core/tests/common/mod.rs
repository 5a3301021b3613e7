//! Fixtures shared by the acceptance runner and the property tests.
#![allow(dead_code)]

use monoid_core::construct::{ConstructionSpec, ParamPoint as P};
use monoid_core::exactnum::{int, BigRat};
use monoid_core::mvpoly::{parse_hpoly, HPoly, MPoly, ProjPoint, RationalMap};
use num_traits::Zero;
use rand::Rng;

pub fn h(s: &str) -> HPoly {
    parse_hpoly(s, &["x1", "x2", "x3"]).unwrap()
}

/// Normal forms of the nine tangent-cone types, by case.
pub const NORMAL_FORMS: [(u8, &str); 9] = [
    (1, "x1*x2*x3 + x2^3 + x3^3"),
    (2, "x1^3 - x2^2*x3"),
    (3, "x3*(x1*x2 + x3^2)"),
    (4, "x3*(x1*x3 + x2^2)"),
    (5, "x1*x2*x3"),
    (6, "x2^3 - x2*x3^2"),
    (7, "x2*x3^2"),
    (8, "x3^3"),
    (9, "x1^3 + x2^3 + x3^3"),
];

/// All monomials of degree `d` in three variables.
pub fn monomials(d: u32) -> Vec<Vec<u32>> {
    let mut v = Vec::new();
    for i in (0..=d).rev() {
        for j in (0..=d - i).rev() {
            v.push(vec![i, j, d - i - j]);
        }
    }
    v
}

/// A ternary form of degree `d`; each monomial is present with probability
/// `density` and gets a coefficient in `-bound..=bound`.
pub fn random_form<R: Rng>(rng: &mut R, d: u32, density: f64, bound: i64) -> HPoly {
    loop {
        let mut f = MPoly::zero(3);
        for e in monomials(d) {
            if rng.random_bool(density) {
                f.add_term(e, int(rng.random_range(-bound..=bound)));
            }
        }
        if !f.is_zero() {
            return HPoly::new(f).unwrap();
        }
    }
}

pub fn det3(m: &[Vec<BigRat>]) -> BigRat {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// The adjugate: a projective inverse.
pub fn adjugate(m: &[Vec<BigRat>]) -> Vec<Vec<BigRat>> {
    let c = |i: usize, j: usize| {
        let r: Vec<usize> = (0..3).filter(|&k| k != i).collect();
        let s: Vec<usize> = (0..3).filter(|&k| k != j).collect();
        let minor = &m[r[0]][s[0]] * &m[r[1]][s[1]] - &m[r[0]][s[1]] * &m[r[1]][s[0]];
        if (i + j).is_multiple_of(2) {
            minor
        } else {
            -minor
        }
    };
    (0..3).map(|i| (0..3).map(|j| c(j, i)).collect()).collect()
}

pub fn matrix_from(entries: &[i64]) -> Vec<Vec<BigRat>> {
    entries.chunks(3).map(|r| r.iter().map(|&x| int(x)).collect()).collect()
}

pub fn random_invertible<R: Rng>(rng: &mut R) -> Vec<Vec<BigRat>> {
    loop {
        let e: Vec<i64> = (0..9).map(|_| rng.random_range(-3..=3)).collect();
        let m = matrix_from(&e);
        if !det3(&m).is_zero() {
            return m;
        }
    }
}

pub fn mat_vec(m: &[Vec<BigRat>], v: &[BigRat]) -> Vec<BigRat> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

fn random_point<R: Rng>(rng: &mut R) -> ProjPoint {
    loop {
        let c: Vec<i64> = (0..3).map(|_| rng.random_range(-4..=4)).collect();
        if c.iter().any(|&x| x != 0) {
            return ProjPoint::from_ints(&c);
        }
    }
}

fn line_through(p: &ProjPoint, q: &ProjPoint) -> Option<HPoly> {
    let (a, b) = (p.coords(), q.coords());
    let c = [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ];
    if c.iter().all(Zero::is_zero) {
        return None;
    }
    Some(HPoly::linear(&c))
}

fn tangent_line(f: &HPoly, p: &ProjPoint) -> Option<HPoly> {
    let g: Vec<BigRat> = f.gradient().iter().map(|d| d.evaluate(p).unwrap()).collect();
    if g.iter().all(Zero::is_zero) {
        return None;
    }
    Some(HPoly::linear(&g))
}

/// A rational curve with its parameterization and a second curve meeting it
/// only at rational points.
pub struct CurvePair {
    pub name: String,
    pub f: HPoly,
    pub theta: RationalMap,
    pub g: HPoly,
}

fn param_curve(kind: usize) -> (&'static str, HPoly, RationalMap) {
    let form = |c: &[i64]| c.iter().map(|&x| int(x)).collect::<Vec<_>>();
    match kind {
        0 => ("conic", h("x1*x3 - x2^2"), RationalMap::from_forms(vec![form(&[0, 0, 1]), form(&[0, 1, 0]), form(&[1, 0, 0])]).unwrap()),
        1 => (
            "nodal cubic",
            h("x1*x2*x3 + x2^3 + x3^3"),
            RationalMap::from_forms(vec![form(&[-1, 0, 0, -1]), form(&[0, 0, 1, 0]), form(&[0, 1, 0, 0])]).unwrap(),
        ),
        _ => (
            "cuspidal cubic",
            h("x1^3 - x2^2*x3"),
            RationalMap::from_forms(vec![form(&[0, 0, 1, 0]), form(&[0, 0, 0, 1]), form(&[1, 0, 0, 0])]).unwrap(),
        ),
    }
}

fn random_param<R: Rng>(rng: &mut R) -> (BigRat, BigRat) {
    loop {
        let (a, b) = (rng.random_range(-4..=4), rng.random_range(-4..=4));
        if (a, b) != (0, 0) {
            return (int(a), int(b));
        }
    }
}

/// Fixtures for the pullback / eliminant / local-quotient comparison: lines,
/// conics and singular cubics in random coordinates, cut by products of
/// chords and tangents (powers included), so all meeting points are rational.
pub fn triangulation_fixtures<R: Rng>(rng: &mut R, count: usize) -> Vec<CurvePair> {
    let mut out = Vec::new();
    while out.len() < count {
        let kind = out.len() % 4;
        let m = random_invertible(rng);
        let adj = adjugate(&m);
        let (name, f0, theta0) = if kind == 3 {
            let (p, q) = (random_point(rng), random_point(rng));
            let Some(l) = line_through(&p, &q) else { continue };
            let c = |x: &ProjPoint| x.coords().to_vec();
            let (cp, cq) = (c(&p), c(&q));
            let theta = RationalMap::from_forms((0..3).map(|i| vec![cq[i].clone(), cp[i].clone()]).collect()).unwrap();
            ("line", l, theta)
        } else {
            param_curve(kind)
        };
        // f(M x) vanishes at adj(M)·θ.
        let f = f0.transform(&m);
        let theta_forms: Vec<Vec<BigRat>> = {
            let coeffs: Vec<Vec<BigRat>> =
                theta0.coords.iter().map(|b| (0..=theta0.degree).map(|i| b.coeff(i)).collect()).collect();
            (0..3)
                .map(|i| (0..=theta0.degree).map(|k| (0..3).map(|j| &adj[i][j] * &coeffs[j][k]).sum()).collect())
                .collect()
        };
        let Ok(theta) = RationalMap::from_forms(theta_forms) else { continue };
        let on = |rng: &mut R| loop {
            let (a, b) = random_param(rng);
            if let Ok(p) = theta.eval(&a, &b) {
                return p;
            }
        };
        let mut g = HPoly::constant(3, int(1));
        let factors = rng.random_range(1..=3);
        let mut ok = true;
        for _ in 0..factors {
            let line = if name == "line" {
                line_through(&on(rng), &random_point(rng))
            } else if rng.random_bool(0.4) {
                tangent_line(&f, &on(rng))
            } else {
                line_through(&on(rng), &on(rng))
            };
            let Some(line) = line else {
                ok = false;
                break;
            };
            if line.normalized() == f.normalized() {
                ok = false;
                break;
            }
            let power = if rng.random_bool(0.3) { 2 } else { 1 };
            g = g.mul(&line.pow(power));
        }
        if !ok {
            continue;
        }
        out.push(CurvePair { name: format!("{name} #{}", out.len()), f, theta, g });
    }
    out
}

/// Two curves through a rational point `p`; in about half the instances the
/// second is built with a gradient parallel to the first at `p`.
pub struct CommonZero {
    pub f: HPoly,
    pub g: HPoly,
    pub p: ProjPoint,
}

fn through<R: Rng>(rng: &mut R, d: u32, p: &ProjPoint, l: &HPoly) -> HPoly {
    let h0 = random_form(rng, d, 0.7, 5);
    let lp = l.evaluate(p).unwrap();
    let hp = h0.evaluate(p).unwrap();
    h0.sub(&l.pow(d).scale(&(hp / num_traits::pow(lp, d as usize))))
}

fn linear_through<R: Rng>(rng: &mut R, p: &ProjPoint) -> HPoly {
    loop {
        let q = random_point(rng);
        if let Some(l) = line_through(p, &q) {
            return l;
        }
    }
}

pub fn common_zero_instance<R: Rng>(rng: &mut R) -> CommonZero {
    let p = loop {
        let q = random_point(rng);
        if q.coords().iter().all(|c| !c.is_zero()) {
            break q;
        }
    };
    let l = loop {
        let l = random_form(rng, 1, 1.0, 3);
        if !l.evaluate(&p).unwrap().is_zero() {
            break l;
        }
    };
    let df = rng.random_range(1..=3);
    let dg = rng.random_range(df.max(2)..=4);
    let f = through(rng, df, &p, &l);
    let g = if rng.random_bool(0.5) {
        // g = c·f·M + N1·N2·R has ∇g(p) = c·M(p)·∇f(p).
        let m = random_form(rng, dg - df, 1.0, 3);
        let n = linear_through(rng, &p).mul(&linear_through(rng, &p));
        let r = if dg > 2 { random_form(rng, dg - 2, 0.8, 3) } else { HPoly::constant(3, int(1)) };
        f.mul(&m).scale(&int(rng.random_range(1..=3))).add(&n.mul(&r))
    } else {
        through(rng, dg, &p, &l)
    };
    CommonZero { f, g, p }
}

/// Construction specs spanning cases 1 to 7 that the builder must reproduce.
pub fn round_trip_specs() -> Vec<(&'static str, ConstructionSpec)> {
    let q = ConstructionSpec::quartic;
    vec![
        ("case 1, condition on (1:1)^12", q(1, &[("m", 0)], vec![vec![P::at(1, 1, 12)]])),
        ("case 1, condition on (2:1)^6 (1:2)^6", q(1, &[("m", 0)], vec![vec![P::at(2, 1, 6), P::at(1, 2, 6)]])),
        (
            "case 1, condition solved for the last point",
            q(1, &[("m", 0)], vec![vec![P::at(2, 1, 3), P::at(3, 1, 3), P::at(1, 5, 3), P::auto(3)]]),
        ),
        (
            "case 1, m = 2",
            q(1, &[("m", 2)], vec![vec![P::at(1, 1, 2), P::at(1, 2, 2), P::at(2, 1, 2), P::at(1, 3, 2), P::at(3, 1, 2)]]),
        ),
        ("case 1, m = 3", q(1, &[("m", 3)], vec![vec![P::at(1, 1, 3), P::at(1, 2, 3), P::at(2, 1, 3)]])),
        (
            "case 2, symmetric weighted sum",
            q(
                2,
                &[("m", 0)],
                vec![vec![P::at(1, 1, 2), P::at(1, -1, 2), P::at(1, 3, 2), P::at(1, -3, 2), P::at(1, 5, 2), P::at(1, -5, 2)]],
            ),
        ),
        ("case 2, single point (1:0)^12", q(2, &[("m", 0)], vec![vec![P::at(1, 0, 12)]])),
        ("case 2, weighted sum solved", q(2, &[("m", 0)], vec![vec![P::at(1, 1, 4), P::at(1, 2, 4), P::auto(4)]])),
        ("case 2, m = 2", q(2, &[("m", 2)], vec![vec![P::at(1, 1, 5), P::at(1, -1, 5)]])),
        (
            "case 3, through both singular points",
            q(
                3,
                &[("j_0", 1), ("k_0", 1), ("j_1", 1), ("k_1", 1)],
                vec![vec![P::at(1, 1, 1), P::at(1, 2, 1)], vec![P::at(1, 1, 2), P::at(1, -1, 2), P::at(2, 1, 2)]],
            ),
        ),
        (
            "case 3, end condition solved",
            q(
                3,
                &[],
                vec![
                    vec![P::at(1, 1, 1), P::at(1, 2, 1), P::at(1, 3, 1), P::at(1, -1, 1)],
                    vec![P::at(1, 2, 2), P::at(2, 1, 2), P::at(1, 3, 3), P::auto(1)],
                ],
            ),
        ),
        (
            "case 3, tangent to the conic",
            q(
                3,
                &[("j_0", 2), ("k_0", 1), ("j_1", 1), ("k_1", 1)],
                vec![vec![P::at(1, 1, 1), P::at(1, 2, 1)], vec![P::at(1, 1, 2), P::at(1, -1, 1), P::at(2, 1, 2)]],
            ),
        ),
        (
            "case 4, simple",
            q(
                4,
                &[("j_0", 1), ("k_0", 1)],
                vec![vec![P::at(1, 1, 1), P::at(1, 2, 1), P::at(1, 3, 1)], vec![P::at(1, 1, 3), P::at(1, 2, 2), P::at(1, -1, 2)]],
            ),
        ),
        (
            "case 4, tangent",
            q(
                4,
                &[("j_0", 3), ("k_0", 2)],
                vec![vec![P::at(1, 1, 1), P::at(1, 2, 1)], vec![P::at(1, 1, 2), P::at(1, 2, 2), P::at(1, -1, 1)]],
            ),
        ),
        (
            "case 5, transversal",
            q(5, &[], vec![vec![P::at(1, 2, 1), P::at(2, 1, 1), P::at(1, 3, 1), P::at(3, 1, 1)]; 3]),
        ),
        (
            "case 5, through every vertex",
            q(
                5,
                &[("k_2", 1), ("k_3", 1), ("l_1", 1), ("l_3", 1), ("m_1", 1), ("m_2", 1)],
                vec![vec![P::at(1, 2, 1), P::at(2, 1, 1)]; 3],
            ),
        ),
        (
            "case 5, tangent at a vertex",
            q(
                5,
                &[("k_2", 2), ("k_3", 1)],
                vec![
                    vec![P::at(1, 2, 1), P::at(2, 1, 1), P::at(1, 3, 1), P::at(3, 1, 1)],
                    vec![P::at(1, 2, 1), P::at(2, 1, 1)],
                    vec![P::at(1, 2, 1), P::at(2, 1, 1), P::at(1, 3, 1)],
                ],
            ),
        ),
        (
            "case 6, through the triple point",
            q(6, &[("j_1", 1), ("j_2", 1), ("j_3", 1)], vec![vec![P::at(1, 1, 1), P::at(1, 2, 1), P::at(1, 3, 1)]; 3]),
        ),
        (
            "case 6, tangent to one line",
            q(
                6,
                &[("j_1", 2), ("j_2", 1), ("j_3", 1)],
                vec![
                    vec![P::at(1, 1, 2)],
                    vec![P::at(1, 1, 1), P::at(1, 2, 1), P::at(1, 3, 1)],
                    vec![P::at(1, 1, 1), P::at(1, 2, 1), P::at(1, 3, 1)],
                ],
            ),
        ),
        (
            "case 7, off the corner",
            q(
                7,
                &[],
                vec![
                    vec![P::at(1, 1, 1), P::at(1, 2, 1), P::at(1, 3, 1), P::at(1, -1, 1)],
                    vec![P::at(1, 1, 1), P::at(1, 2, 1), P::at(1, 3, 1), P::at(1, -1, 1)],
                ],
            ),
        ),
        (
            "case 7, tangencies",
            q(7, &[], vec![vec![P::at(1, 1, 2), P::at(1, 2, 2)], vec![P::at(1, 1, 1), P::at(1, 2, 1), P::at(1, 3, 2)]]),
        ),
    ]
}

/// Inputs that plant a singular line in the monoid.
pub fn singular_line_inputs() -> Vec<(&'static str, HPoly, HPoly)> {
    vec![
        ("case 3, f4 through both branches twice", h("x3*(x1*x2 + x3^2)"), h("x1^2*x3^2 + x1^2*x2^2 + x2^4")),
        ("case 1, f4 singular at the node", h("x1*x2*x3 + x2^3 + x3^3"), h("x1^2*x2^2 + x3^4")),
        ("case 5, f4 singular at a vertex", h("x1*x2*x3"), h("x1^2*x2^2 + x1^2*x2*x3 + x1^2*x3^2 + x1*x2^3 + x2^4 + x3^4")),
        ("case 2, f4 singular at the cusp", h("x1^3 - x2^2*x3"), h("x1^2*x3^2 + x2^4 + x1^4")),
        ("case 7, f4 singular on the double line", h("x2*x3^2"), h("x1^2*x2^2 + x2*x3^3 + x1^4 + x3^4 + x1*x2^2*x3")),
    ]
}
