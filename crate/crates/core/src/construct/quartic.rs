//! Quartic monoids with a prescribed tangent-cone case, triple-point
//! invariants and other singularities.
//!
//! Each component of the normal-form tangent cone is parameterized by `θ_i`.
//! The target restrictions `q_i` are products of the prescribed root factors;
//! we solve `f_4(θ_i) = λ_i·q_i` as one linear system in the fifteen
//! coefficients of `f_4` and the `λ_i`, and keep a solution with every
//! `λ_i ≠ 0`. Its kernel contains the multiples `ℓ·f_3`.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ConstructionSpec, PointValue};
use crate::error::{MonoidError, Result};
use crate::exactnum::{exact_root, int, BigRat, BinaryForm, Rat, UPoly};
use crate::linalg::nullspace;
use crate::monoid::{Monoid, DEFAULT_SEED};
use crate::mvpoly::{parse_hpoly, HPoly, MPoly, RationalMap};
use crate::quartic::{canonical_three_lines, quartic_report, table_violation, CaseInvariants, QuarticReport};

/// Normal form of one case: the cubic and its components, each with a
/// parameterization and the powers of `s` and `t` fixed by the invariants.
pub struct CaseLayout {
    pub f3: HPoly,
    pub components: Vec<LayoutComponent>,
}

pub struct LayoutComponent {
    pub name: &'static str,
    pub theta: RationalMap,
    /// Parameter values that map to singular points of the cubic.
    pub excludes_s_zero: bool,
    pub excludes_t_zero: bool,
    /// Whether its other intersections are ledger entries (false for the
    /// double line of case 7).
    pub in_ledger: bool,
}

fn theta(coords: &[&[(usize, i64)]], degree: usize) -> RationalMap {
    let forms = coords
        .iter()
        .map(|terms| {
            let mut c = vec![BigRat::zero(); degree + 1];
            for &(i, v) in *terms {
                c[i] = int(v);
            }
            BinaryForm::from_coeffs(c)
        })
        .map(|f| BinaryForm::new(degree, f.poly))
        .collect();
    RationalMap::new(forms).expect("valid parameterization")
}

fn comp(name: &'static str, theta: RationalMap, s0: bool, t0: bool) -> LayoutComponent {
    LayoutComponent { name, theta, excludes_s_zero: s0, excludes_t_zero: t0, in_ledger: true }
}

/// The normal form used by the builder for `case` (1 to 7). Binary form
/// coefficients are indexed by the power of `s`.
pub fn case_layout(case: u8) -> Result<CaseLayout> {
    let h = |s: &str| parse_hpoly(s, &["x1", "x2", "x3"]).expect("normal form");
    let line_st0 = || theta(&[&[(1, 1)], &[(0, 1)], &[]], 1); // (s, t, 0)
    let layout = match case {
        1 => CaseLayout {
            f3: h("x1*x2*x3 + x2^3 + x3^3"),
            components: vec![comp("nodal cubic", theta(&[&[(3, -1), (0, -1)], &[(2, 1)], &[(1, 1)]], 3), true, true)],
        },
        2 => CaseLayout {
            f3: h("x1^3 - x2^2*x3"),
            components: vec![comp("cuspidal cubic", theta(&[&[(2, 1)], &[(3, 1)], &[(0, 1)]], 3), true, false)],
        },
        3 => CaseLayout {
            f3: h("x3*(x1*x2 + x3^2)"),
            components: vec![
                comp("line x3", line_st0(), true, true),
                comp("conic x1*x2 + x3^2", theta(&[&[(2, 1)], &[(0, -1)], &[(1, 1)]], 2), true, true),
            ],
        },
        4 => CaseLayout {
            f3: h("x3*(x1*x3 + x2^2)"),
            components: vec![
                comp("line x3", line_st0(), false, true),
                comp("conic x1*x3 + x2^2", theta(&[&[(2, 1)], &[(1, 1)], &[(0, -1)]], 2), false, true),
            ],
        },
        5 => CaseLayout {
            f3: h("x1*x2*x3"),
            components: vec![
                comp("line x1", theta(&[&[], &[(1, 1)], &[(0, 1)]], 1), true, true),
                comp("line x2", theta(&[&[(1, 1)], &[], &[(0, 1)]], 1), true, true),
                comp("line x3", line_st0(), true, true),
            ],
        },
        6 => CaseLayout {
            f3: h("x2^3 - x2*x3^2"),
            components: vec![
                comp("line x2", theta(&[&[(1, 1)], &[], &[(0, 1)]], 1), false, true),
                comp("line x2 - x3", theta(&[&[(1, 1)], &[(0, 1)], &[(0, 1)]], 1), false, true),
                comp("line x2 + x3", theta(&[&[(1, 1)], &[(0, 1)], &[(0, -1)]], 1), false, true),
            ],
        },
        7 => CaseLayout {
            f3: h("x2*x3^2"),
            components: vec![
                comp("line x2", theta(&[&[(1, 1)], &[], &[(0, 1)]], 1), false, true),
                LayoutComponent { in_ledger: false, ..comp("double line x3", line_st0(), false, true) },
            ],
        },
        c => return Err(MonoidError::Unsupported(format!("no builder for case {c}"))),
    };
    Ok(layout)
}

/// Powers `(a, b)` of `s` and `t` in each target restriction.
fn special_powers(spec: &ConstructionSpec) -> Vec<(usize, usize)> {
    let v = |k: &str| spec.invariant(k);
    match spec.case.unwrap_or(0) {
        1 if v("m") >= 2 => vec![(1, v("m") - 1)],
        1 => vec![(0, 0)],
        2 => vec![(v("m"), 0)],
        3 => vec![(v("k_1"), v("k_0")), (v("j_1"), v("j_0"))],
        4 => vec![(0, v("k_0")), (0, v("j_0"))],
        5 => vec![(v("m_1"), v("l_1")), (v("m_2"), v("k_2")), (v("l_3"), v("k_3"))],
        6 => vec![(0, v("j_1")), (0, v("j_2")), (0, v("j_3"))],
        7 => vec![(0, v("j_0")), (0, v("k_0"))],
        _ => vec![],
    }
}

fn names(case: u8) -> &'static [&'static str] {
    match case {
        1 | 2 => &["m"],
        3 => &["j_0", "k_0", "j_1", "k_1"],
        4 | 7 => &["j_0", "k_0"],
        5 => &["k_2", "k_3", "l_1", "l_3", "m_1", "m_2"],
        6 => &["j_1", "j_2", "j_3"],
        _ => &[],
    }
}

#[derive(Clone, Debug)]
pub struct QuarticConstruction {
    pub monoid: Monoid,
    pub f4: HPoly,
    /// Parameter points after resolving `"auto"`, per component.
    pub points: Vec<Vec<(BigRat, BigRat, usize)>>,
    pub report: QuarticReport,
}

pub fn build_quartic_case(spec: &ConstructionSpec) -> Result<Monoid> {
    Ok(build_quartic_case_verified(spec)?.monoid)
}

pub fn build_quartic_case_verified(spec: &ConstructionSpec) -> Result<QuarticConstruction> {
    let case = spec.case.ok_or_else(|| MonoidError::Precondition("quartic spec without a case".into()))?;
    let layout = case_layout(case)?;
    if let Some(bad) = spec.invariants.keys().find(|k| !names(case).contains(&k.as_str())) {
        return Err(MonoidError::SpecLedgerMismatch(format!("case {case} has no invariant {bad}")));
    }
    let inv = CaseInvariants::new(case, names(case).iter().map(|&n| (n, spec.invariant(n))).collect());
    if let Some(clause) = table_violation(&inv) {
        return Err(MonoidError::ConstraintViolation(clause));
    }
    if spec.components.len() != layout.components.len() {
        return Err(MonoidError::SpecLedgerMismatch(format!(
            "case {case} has {} components, the spec lists {}",
            layout.components.len(),
            spec.components.len()
        )));
    }
    let powers = special_powers(spec);
    for ((lc, pts), (a, b)) in layout.components.iter().zip(&spec.components).zip(&powers) {
        let total: usize = pts.iter().map(|p| p.multiplicity).sum::<usize>() + a + b;
        let want = 4 * lc.theta.degree;
        if total != want {
            return Err(MonoidError::SpecLedgerMismatch(format!(
                "{}: multiplicities and invariants add to {total}, not {want}",
                lc.name
            )));
        }
        if pts.iter().any(|p| p.multiplicity == 0) {
            return Err(MonoidError::SpecLedgerMismatch(format!("{}: zero multiplicity", lc.name)));
        }
    }
    let points = resolve_points(spec, &layout)?;
    for (lc, pts) in layout.components.iter().zip(&points) {
        for (i, (al, be, _)) in pts.iter().enumerate() {
            if (lc.excludes_s_zero && al.is_zero()) || (lc.excludes_t_zero && be.is_zero()) {
                return Err(MonoidError::SpecLedgerMismatch(format!(
                    "{}: ({al}:{be}) maps to a singular point of the cubic",
                    lc.name
                )));
            }
            if pts[..i].iter().any(|(a2, b2, _)| al * b2 == be * a2) {
                return Err(MonoidError::SpecLedgerMismatch(format!("{}: repeated point ({al}:{be})", lc.name)));
            }
        }
    }
    let targets: Vec<BinaryForm> = layout
        .components
        .iter()
        .zip(&points)
        .zip(&powers)
        .map(|((lc, pts), &(a, _))| target(4 * lc.theta.degree, a, pts))
        .collect();
    let f4 = solve_restrictions(&layout, &targets, spec.ratio.as_ref())?;
    let report = quartic_report(&layout.f3, &f4)?;
    check_round_trip(spec, &layout, &points, &report)?;
    Ok(QuarticConstruction { monoid: report.monoid.clone(), f4, points, report })
}

/// `s^a·∏(β s - α t)^m` as a form of degree `deg`; the power of `t` fills up.
fn target(deg: usize, a: usize, pts: &[(BigRat, BigRat, usize)]) -> BinaryForm {
    let mut p = UPoly::monomial(BigRat::one(), a);
    for (al, be, m) in pts {
        p = &p * &UPoly::new(vec![-al.clone(), be.clone()]).pow(*m as u32);
    }
    BinaryForm::new(deg, p)
}

fn resolve_points(spec: &ConstructionSpec, layout: &CaseLayout) -> Result<Vec<Vec<(BigRat, BigRat, usize)>>> {
    let mut autos = Vec::new();
    let mut out: Vec<Vec<(BigRat, BigRat, usize)>> = Vec::new();
    for (ci, pts) in spec.components.iter().enumerate() {
        let mut v = Vec::new();
        for (pi, p) in pts.iter().enumerate() {
            match &p.point {
                PointValue::At([Rat(a), Rat(b)]) => {
                    if a.is_zero() && b.is_zero() {
                        return Err(MonoidError::SpecLedgerMismatch("(0:0) is not a parameter point".into()));
                    }
                    v.push((a.clone(), b.clone(), p.multiplicity));
                }
                PointValue::Auto(_) => {
                    autos.push((ci, pi));
                    v.push((BigRat::zero(), BigRat::one(), p.multiplicity));
                }
            }
        }
        out.push(v);
    }
    match autos.as_slice() {
        [] => Ok(out),
        [(ci, pi)] => {
            let (ci, pi) = (*ci, *pi);
            let point = solve_auto(spec, layout, &out, ci, pi)?;
            out[ci][pi] = point;
            Ok(out)
        }
        _ => Err(MonoidError::Precondition("at most one parameter point can be \"auto\"".into())),
    }
}

fn product(pts: &[(BigRat, BigRat, usize)], skip: Option<usize>, alpha: bool) -> BigRat {
    pts.iter()
        .enumerate()
        .filter(|(i, _)| Some(*i) != skip)
        .fold(BigRat::one(), |acc, (_, (a, b, m))| acc * num_traits::pow(if alpha { a } else { b }.clone(), *m))
}

/// Solves the single condition of cases 1, 2 and 3 for the automatic point.
fn solve_auto(
    spec: &ConstructionSpec,
    _layout: &CaseLayout,
    pts: &[Vec<(BigRat, BigRat, usize)>],
    ci: usize,
    pi: usize,
) -> Result<(BigRat, BigRat, usize)> {
    let mu = pts[ci][pi].2;
    let unsat = |why: String| MonoidError::ConditionUnsatisfiable(why);
    let root = |k: BigRat| -> Result<BigRat> {
        if k.is_zero() {
            return Err(unsat("the condition forces an excluded point".into()));
        }
        exact_root(&k, mu as u32)
            .ok_or_else(|| unsat(format!("{k} has no rational {mu}-th root, so no automatic point exists")))
    };
    match (spec.case.unwrap_or(0), spec.invariant("m"), spec.invariant("k_0") + spec.invariant("k_1")) {
        // ∏ α^m = ∏ β^m with the automatic point (x:1).
        (1, 0, _) => {
            let x = root(product(&pts[0], Some(pi), false) / product(&pts[0], Some(pi), true))?;
            Ok((x, BigRat::one(), mu))
        }
        // The s·t^11 coefficient vanishes: Σ m·β/α = 0 with the point (1:x).
        (2, 0, _) => {
            let s: BigRat = pts[0]
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != pi)
                .map(|(_, (a, b, m))| b / a * int(*m as i64))
                .sum();
            Ok((BigRat::one(), -s / int(mu as i64), mu))
        }
        // The ratios of the end coefficients of both restrictions agree:
        // ∏ β'^m' · ∏ α^m = ∏ α'^m' · ∏ β^m.
        (3, _, 0) => {
            let (line, conic) = (&pts[0], &pts[1]);
            let k = if ci == 1 {
                product(conic, Some(pi), false) * product(line, None, true)
                    / (product(conic, Some(pi), true) * product(line, None, false))
            } else {
                product(conic, None, true) * product(line, Some(pi), false)
                    / (product(conic, None, false) * product(line, Some(pi), true))
            };
            Ok((root(k)?, BigRat::one(), mu))
        }
        _ => Err(MonoidError::Precondition(
            "an automatic point is only solved for case 1 and 2 with m = 0 and case 3 with k_0 = k_1 = 0".into(),
        )),
    }
}

/// Monomials of degree four ordered as `x1^4, x1^3 x2, x1^3 x3, …, x3^4`.
fn quartic_monomials() -> Vec<[u32; 3]> {
    let mut v = Vec::new();
    for i in (0..=4u32).rev() {
        for j in (0..=4 - i).rev() {
            v.push([i, j, 4 - i - j]);
        }
    }
    v
}

fn solve_restrictions(layout: &CaseLayout, targets: &[BinaryForm], ratio: Option<&Rat>) -> Result<HPoly> {
    let mons = quartic_monomials();
    let r = targets.len();
    let cols = mons.len() + r;
    let mut rows: Vec<Vec<BigRat>> = Vec::new();
    for (i, (lc, q)) in layout.components.iter().zip(targets).enumerate() {
        let pulls: Vec<BinaryForm> = mons
            .iter()
            .map(|e| HPoly::new(MPoly::monomial(e.to_vec(), BigRat::one())).and_then(|m| m.pullback(&lc.theta)))
            .collect::<Result<_>>()?;
        for c in 0..=q.degree {
            let mut row: Vec<BigRat> = pulls.iter().map(|p| p.coeff(c)).collect();
            row.extend((0..r).map(|k| if k == i { -q.coeff(c) } else { BigRat::zero() }));
            rows.push(row);
        }
    }
    let lambda_rank = |basis: &[Vec<BigRat>]| {
        let proj: Vec<Vec<BigRat>> = basis.iter().map(|v| v[mons.len()..].to_vec()).collect();
        crate::linalg::rank(&proj)
    };
    let mut basis = nullspace(&rows, cols);
    if r >= 2 && lambda_rank(&basis) >= 2 {
        // One-parameter family: fix λ_1/λ_2.
        let q = ratio.map(|x| x.0.clone()).unwrap_or_else(BigRat::one);
        let mut row = vec![BigRat::zero(); cols];
        row[mons.len()] = BigRat::one();
        row[mons.len() + 1] = -q;
        let mut with = rows.clone();
        with.push(row);
        let fixed = nullspace(&with, cols);
        if all_lambdas_possible(&fixed, mons.len(), r) {
            basis = fixed;
        } else if ratio.is_some() {
            return Err(MonoidError::ConditionUnsatisfiable("the requested ratio λ_1/λ_2 admits no solution".into()));
        }
    } else if ratio.is_some() && r >= 2 {
        return Err(MonoidError::ConditionUnsatisfiable(
            "the ratio λ_1/λ_2 is already determined by the parameter points".into(),
        ));
    }
    if !all_lambdas_possible(&basis, mons.len(), r) {
        return Err(MonoidError::ConditionUnsatisfiable(
            "the prescribed restrictions are not those of a single quartic; check the case condition on the parameter points"
                .into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for attempt in 0..64 {
        let coeffs: Vec<BigRat> = (0..basis.len())
            .map(|_| if attempt == 0 { BigRat::one() } else { int(rng.random_range(-5..=5)) })
            .collect();
        let mut v = vec![BigRat::zero(); cols];
        for (c, b) in coeffs.iter().zip(&basis) {
            for (vi, bi) in v.iter_mut().zip(b) {
                *vi += c * bi;
            }
        }
        if v[mons.len()..].iter().any(Zero::is_zero) {
            continue;
        }
        let mut f = MPoly::zero(3);
        for (e, c) in mons.iter().zip(&v) {
            f.add_term(e.to_vec(), c.clone());
        }
        return Ok(HPoly::new(f)?.normalized());
    }
    Err(MonoidError::ConstructionFailed("no solution with every λ_i nonzero was found".into()))
}

fn all_lambdas_possible(basis: &[Vec<BigRat>], offset: usize, r: usize) -> bool {
    (0..r).all(|k| basis.iter().any(|v| !v[offset + k].is_zero()))
}

/// The invariants a classifier reports for the spec (after canonical
/// relabeling) and the ledger lists per component.
fn expected_from_spec(spec: &ConstructionSpec, points: &[Vec<(BigRat, BigRat, usize)>]) -> (Vec<(String, usize)>, Vec<usize>) {
    let v = |k: &str| spec.invariant(k);
    let case = spec.case.unwrap_or(0);
    let vals: Vec<(String, usize)> = match case {
        3 => {
            let mut pairs = [(v("j_0"), v("k_0")), (v("j_1"), v("k_1"))];
            pairs.sort_by_key(|&(j, k)| (j.max(k), j, k));
            vec![
                ("j_0".into(), pairs[0].0),
                ("k_0".into(), pairs[0].1),
                ("j_1".into(), pairs[1].0),
                ("k_1".into(), pairs[1].1),
            ]
        }
        5 => {
            // Lines x1, x2, x3 are indices 0, 1, 2.
            let mut n = [[0usize; 3]; 3];
            n[1][2] = v("k_2");
            n[2][1] = v("k_3");
            n[0][2] = v("l_1");
            n[2][0] = v("l_3");
            n[0][1] = v("m_1");
            n[1][0] = v("m_2");
            let (t, _) = canonical_three_lines(&n);
            names(5).iter().zip(t).map(|(k, x)| (k.to_string(), x)).collect()
        }
        6 => {
            let mut js = [v("j_1"), v("j_2"), v("j_3")];
            js.sort_unstable();
            names(6).iter().zip(js).map(|(k, x)| (k.to_string(), x)).collect()
        }
        _ => names(case).iter().map(|k| (k.to_string(), v(k))).collect(),
    };
    let double_line: Vec<usize> = if case == 7 {
        let mut l: Vec<usize> = points[1].iter().map(|p| p.2).collect();
        l.sort_unstable_by(|a, b| b.cmp(a));
        l
    } else {
        Vec::new()
    };
    (vals, double_line)
}

fn check_round_trip(
    spec: &ConstructionSpec,
    layout: &CaseLayout,
    points: &[Vec<(BigRat, BigRat, usize)>],
    report: &QuarticReport,
) -> Result<()> {
    let mismatch = |what: String| Err(MonoidError::RoundTripMismatch(what));
    if Some(report.case()) != spec.case {
        return mismatch(format!("built case {} for spec case {:?}", report.case(), spec.case));
    }
    let (vals, double_line) = expected_from_spec(spec, points);
    for (k, x) in &vals {
        let got = report.invariants.get(k);
        if got != *x {
            return mismatch(format!("{k}: built {got}, spec {x}"));
        }
    }
    if report.invariants.line_multiplicities != double_line {
        return mismatch(format!(
            "double line multiplicities {:?}, spec {:?}",
            report.invariants.line_multiplicities, double_line
        ));
    }
    let mut want: Vec<Vec<usize>> = layout
        .components
        .iter()
        .zip(points)
        .filter(|(lc, _)| lc.in_ledger)
        .map(|(_, pts)| {
            let mut l: Vec<usize> = pts.iter().map(|p| p.2).collect();
            l.sort_unstable_by(|a, b| b.cmp(a));
            l
        })
        .collect();
    let mut got: Vec<Vec<usize>> = report
        .ledgers
        .iter()
        .flat_map(|l| std::iter::repeat_n(l.multiplicities.clone(), l.copies))
        .collect();
    want.sort();
    got.sort();
    if want != got {
        return mismatch(format!("ledgers {got:?}, spec {want:?}"));
    }
    Ok(())
}
