use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

use super::classes::{gcd_over, single_root, ClassDescriptor, KPoly, PointClass};
use super::local::intersection_multiplicity_at;
use crate::error::{MonoidError, Result};
use crate::exactnum::{int, real_root_count, squarefree_decomposition, BigRat, UPoly};
use crate::linalg::determinant;
use crate::mvpoly::{bivariate_resultant, mv_gcd, HPoly, MPoly, ProjPoint};

const MAX_SHEARS: usize = 24;
const SHEAR_RANGE: i64 = 4;

/// One conjugacy class of intersection points sharing a multiplicity.
#[derive(Clone, Debug)]
pub struct ProfileEntry {
    pub multiplicity: usize,
    pub class: PointClass,
}

impl ProfileEntry {
    pub fn size(&self) -> usize {
        self.class.size()
    }

    pub fn real_count(&self) -> usize {
        self.class.real_count()
    }

    pub fn rational_point(&self) -> Option<ProjPoint> {
        self.class.rational_point()
    }
}

/// All intersection points of two coprime plane curves with multiplicities.
#[derive(Clone, Debug)]
pub struct IntersectionProfile {
    pub entries: Vec<ProfileEntry>,
    pub method: &'static str,
    /// The coordinate change `x = M y` under which the projection was generic.
    pub shear: Vec<Vec<BigRat>>,
    pub confirmation_shear: Vec<Vec<BigRat>>,
}

impl IntersectionProfile {
    /// `Σ multiplicity × class size`.
    pub fn total(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity * e.size()).sum()
    }

    /// Sorted list with one multiplicity per point (classes expanded).
    pub fn multiset(&self) -> Vec<usize> {
        let mut v: Vec<usize> =
            self.entries.iter().flat_map(|e| std::iter::repeat_n(e.multiplicity, e.size())).collect();
        v.sort_unstable();
        v
    }

    /// Sorted multiplicities of the real points.
    pub fn real_multiset(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .entries
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.multiplicity, e.real_count()))
            .collect();
        v.sort_unstable();
        v
    }

    pub fn multiplicity_at(&self, p: &ProjPoint) -> usize {
        self.entries.iter().find(|e| e.class.contains(p)).map_or(0, |e| e.multiplicity)
    }
}

/// Serialized view of one profile entry.
#[derive(Clone, Debug, Serialize)]
pub struct EntryReport {
    pub multiplicity: usize,
    pub class_size: usize,
    pub real_points: usize,
    pub complex_pairs: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<ProjPoint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<ClassDescriptor>,
}

impl From<&ProfileEntry> for EntryReport {
    fn from(e: &ProfileEntry) -> Self {
        let real = e.real_count();
        let point = e.rational_point();
        EntryReport {
            multiplicity: e.multiplicity,
            class_size: e.size(),
            real_points: real,
            complex_pairs: (e.size() - real) / 2,
            class: if point.is_some() { None } else { Some(ClassDescriptor::from(&e.class)) },
            point,
        }
    }
}

fn random_shear<R: Rng + ?Sized>(rng: &mut R) -> Vec<Vec<BigRat>> {
    loop {
        let m: Vec<Vec<BigRat>> = (0..3)
            .map(|_| (0..3).map(|_| int(rng.random_range(-SHEAR_RANGE..=SHEAR_RANGE))).collect())
            .collect();
        if !determinant(m.clone()).is_zero() {
            return m;
        }
    }
}

/// `f(M y)` as a polynomial in `y`.
fn apply(f: &HPoly, m: &[Vec<BigRat>]) -> HPoly {
    f.transform(m)
}

/// Coefficients in `y3` of `f(u, 1, y3)`, each a polynomial in `u`.
fn restrict_finite(f: &MPoly) -> KPoly {
    f.coefficients_in(2)
        .iter()
        .map(|c| c.substitute(1, &BigRat::one()).to_upoly(0).expect("univariate after restriction"))
        .collect()
}

/// Coefficients in `y3` of `f(1, 0, y3)`.
fn restrict_infinite(f: &MPoly) -> KPoly {
    f.coefficients_in(2)
        .iter()
        .map(|c| {
            UPoly::constant(c.eval(&[BigRat::one(), BigRat::zero(), BigRat::zero()]))
        })
        .collect()
}

/// Maps `y`-coordinates `(y1, y2, y3)` (polynomials in `u`) to `x = M y`.
fn to_original(m: &[Vec<BigRat>], y: [UPoly; 3]) -> Vec<UPoly> {
    (0..3)
        .map(|i| {
            let mut acc = UPoly::zero();
            for (j, yj) in y.iter().enumerate() {
                acc = &acc + &yj.scale(&m[i][j]);
            }
            acc
        })
        .collect()
}

enum Attempt {
    Generic(Vec<ProfileEntry>),
    NotGeneric(String),
}

fn attempt(f: &HPoly, g: &HPoly, m: &[Vec<BigRat>]) -> Result<Attempt> {
    let center: Vec<BigRat> = (0..3).map(|i| m[i][2].clone()).collect();
    if f.eval(&center).is_zero() || g.eval(&center).is_zero() {
        return Ok(Attempt::NotGeneric("projection center on a curve".into()));
    }
    let fy = apply(f, m);
    let gy = apply(g, m);
    let r = match bivariate_resultant(&fy, &gy, 2) {
        Ok(r) => r,
        Err(MonoidError::DegenerateProjection) => {
            return Ok(Attempt::NotGeneric("degenerate projection".into()))
        }
        Err(e) => return Err(e),
    };
    let mut entries = Vec::new();

    // Points on the line y2 = 0 correspond to the root (1:0) of the resultant.
    let k_inf = r.mult_at_infinity();
    if k_inf > 0 {
        let h = UPoly::linear_root(&BigRat::zero());
        let pieces = gcd_over(&h, &restrict_infinite(&fy), &restrict_infinite(&gy));
        for (piece, gz) in pieces {
            let Some(c) = single_root(&gz, &piece) else {
                return Ok(Attempt::NotGeneric("two intersection points on one projecting line".into()));
            };
            let coords = to_original(m, [UPoly::one(), UPoly::zero(), c]);
            for class in PointClass::new(piece, coords).split_rational() {
                entries.push(ProfileEntry { multiplicity: k_inf, class });
            }
        }
    }

    if r.poly.deg() > 0 {
        let dec = squarefree_decomposition(&r.poly)?;
        let ff = restrict_finite(&fy);
        let gf = restrict_finite(&gy);
        for (h, k) in dec.factors {
            for (piece, gz) in gcd_over(&h, &ff, &gf) {
                let Some(c) = single_root(&gz, &piece) else {
                    return Ok(Attempt::NotGeneric("two intersection points on one projecting line".into()));
                };
                let u = UPoly::from_ints(&[0, 1]);
                let coords = to_original(m, [u, UPoly::one(), c]);
                for class in PointClass::new(piece, coords).split_rational() {
                    entries.push(ProfileEntry { multiplicity: k, class });
                }
            }
        }
    }
    Ok(Attempt::Generic(entries))
}

/// Signature used to compare two independent projections.
fn signature(entries: &[ProfileEntry]) -> Vec<(usize, usize, usize)> {
    let mut by_mult: std::collections::BTreeMap<usize, (usize, usize)> = Default::default();
    for e in entries {
        let s = by_mult.entry(e.multiplicity).or_default();
        s.0 += e.size();
        s.1 += e.real_count();
    }
    by_mult.into_iter().map(|(m, (n, r))| (m, n, r)).collect()
}

fn generic_entries<R: Rng + ?Sized>(
    f: &HPoly,
    g: &HPoly,
    rng: &mut R,
    tried: &mut Vec<String>,
) -> Result<(Vec<ProfileEntry>, Vec<Vec<BigRat>>)> {
    while tried.len() < MAX_SHEARS {
        let m = random_shear(rng);
        match attempt(f, g, &m)? {
            Attempt::Generic(e) => return Ok((e, m)),
            Attempt::NotGeneric(why) => tried.push(format!("{}: {why}", fmt_matrix(&m))),
        }
    }
    Err(MonoidError::GenericityFailure { tries: tried.len(), detail: tried.join("; ") })
}

/// Finds a second projection whose resultant alone reproduces `expected`.
///
/// Under a generic projection each squarefree factor of multiplicity `k` has
/// one root per point of multiplicity `k`, and real roots are real points. A
/// projection that merges points shows a different signature and is skipped.
fn confirm<R: Rng + ?Sized>(
    f: &HPoly,
    g: &HPoly,
    expected: &[(usize, usize, usize)],
    rng: &mut R,
    tried: &mut Vec<String>,
) -> Result<Vec<Vec<BigRat>>> {
    while tried.len() < MAX_SHEARS {
        let m = random_shear(rng);
        let center: Vec<BigRat> = (0..3).map(|i| m[i][2].clone()).collect();
        if f.eval(&center).is_zero() || g.eval(&center).is_zero() {
            tried.push(format!("{}: projection center on a curve", fmt_matrix(&m)));
            continue;
        }
        let r = match bivariate_resultant(&apply(f, &m), &apply(g, &m), 2) {
            Ok(r) => r,
            Err(MonoidError::DegenerateProjection) => {
                tried.push(format!("{}: degenerate projection", fmt_matrix(&m)));
                continue;
            }
            Err(e) => return Err(e),
        };
        let mut by_mult: std::collections::BTreeMap<usize, (usize, usize)> = Default::default();
        let k_inf = r.mult_at_infinity();
        if k_inf > 0 {
            let s = by_mult.entry(k_inf).or_default();
            s.0 += 1;
            s.1 += 1;
        }
        if r.poly.deg() > 0 {
            for (h, k) in squarefree_decomposition(&r.poly)?.factors {
                let s = by_mult.entry(k).or_default();
                s.0 += h.deg();
                s.1 += real_root_count(&h);
            }
        }
        let found: Vec<_> = by_mult.into_iter().map(|(m, (n, r))| (m, n, r)).collect();
        if found == expected {
            return Ok(m);
        }
        tried.push(format!("{}: resultant signature {found:?} differs", fmt_matrix(&m)));
    }
    Err(MonoidError::GenericityFailure { tries: tried.len(), detail: tried.join("; ") })
}

fn fmt_matrix(m: &[Vec<BigRat>]) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
        .collect();
    format!("[{}]", rows.join(";"))
}

/// Intersection points of two coprime ternary forms with multiplicities.
///
/// A random integer coordinate change makes the projection from a point off
/// both curves generic; the multiplicities are then the root multiplicities
/// of the resultant. Genericity is certified per projecting line (exactly one
/// common point on it), a second independent projection must agree, and every
/// rational point is checked against the local quotient oracle.
pub fn intersection_profile<R: Rng + ?Sized>(f: &HPoly, g: &HPoly, rng: &mut R) -> Result<IntersectionProfile> {
    if f.nvars() != 3 || g.nvars() != 3 {
        return Err(MonoidError::DimensionMismatch { expected: 3, got: f.nvars().max(g.nvars()) });
    }
    if f.is_zero() || g.is_zero() {
        return Err(MonoidError::ZeroPolynomial("intersection profile"));
    }
    let common = mv_gcd(f, g)?;
    if common.degree().unwrap_or(0) > 0 {
        return Err(MonoidError::CommonFactor(common.to_string()));
    }
    let expected = (f.degree().unwrap() * g.degree().unwrap()) as usize;
    let mut tried = Vec::new();
    let (entries, shear) = generic_entries(f, g, rng, &mut tried)?;
    let confirmation = confirm(f, g, &signature(&entries), rng, &mut tried)?;
    let profile = IntersectionProfile { entries, method: "generic projection", shear, confirmation_shear: confirmation };
    if profile.total() != expected {
        return Err(MonoidError::LedgerMismatch(format!(
            "intersection multiplicities sum to {} instead of {expected}",
            profile.total()
        )));
    }
    for e in &profile.entries {
        if let Some(p) = e.rational_point() {
            if !f.vanishes_at(&p) || !g.vanishes_at(&p) {
                return Err(MonoidError::LedgerMismatch(format!("{p} is not a common zero")));
            }
            let oracle = intersection_multiplicity_at(f, g, &p)?;
            if oracle != e.multiplicity {
                return Err(MonoidError::LedgerMismatch(format!(
                    "multiplicity at {p}: projection gives {}, local quotient gives {oracle}",
                    e.multiplicity
                )));
            }
        }
    }
    Ok(profile)
}

/// Whether two curves meet transversally at a common zero.
pub fn is_transversal(f: &HPoly, g: &HPoly, p: &ProjPoint) -> Result<bool> {
    if !f.vanishes_at(p) || !g.vanishes_at(p) {
        return Err(MonoidError::NotACommonZero(p.to_string()));
    }
    let rows: Vec<Vec<BigRat>> = [f, g]
        .iter()
        .map(|h| h.gradient().iter().map(|d| d.eval(p.coords())).collect())
        .collect();
    Ok(crate::linalg::rank(&rows) == 2)
}
