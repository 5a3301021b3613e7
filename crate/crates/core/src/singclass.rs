//! Singular points of a monoid surface other than `O`.
//!
//! Every such point lies on a line `L_b` through a base point `b`. It exists
//! iff the tangent cone is smooth at `b` and `I_b(f_{d-1}, f_d) = m > 1`, and
//! it is then an `A_{m-1}` point; on a real surface its real form is `A^-`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{MonoidError, Result};
use crate::exactnum::{squarefree_decomposition, BigRat, ExtRat, SturmSequence, UPoly};
use crate::intersect::classes::{eval_mod, invert, mulmod, Inverse};
use crate::intersect::{localize, ClassDescriptor, PointClass};
use crate::linalg::{determinant, rank};
use crate::monoid::{Monoid, ValidityLevel};
use crate::mvpoly::{HPoly, MPoly, ProjPoint};

/// A conjugacy class of singular points over a class of base points.
#[derive(Clone, Debug)]
pub struct SingRecord {
    /// `A_{m-1}` with `m = I_b(f_{d-1}, f_d)`.
    pub m: usize,
    /// Points in `P^3`, one per member of `base`.
    pub location: PointClass,
    pub base: PointClass,
}

impl SingRecord {
    pub fn size(&self) -> usize {
        self.location.size()
    }

    pub fn real_count(&self) -> usize {
        self.location.real_count()
    }

    pub fn label(&self) -> String {
        format!("A_{}", self.m - 1)
    }

    /// Real form of the real members.
    pub fn real_label(&self) -> Option<String> {
        (self.real_count() > 0).then(|| format!("A_{}^-", self.m - 1))
    }

    pub fn point(&self) -> Option<ProjPoint> {
        self.location.rational_point()
    }
}

/// Base points whose line carries no singularity besides `O`.
#[derive(Clone, Debug)]
pub struct LineRecord {
    pub multiplicity: usize,
    pub base: PointClass,
    /// Whether the tangent cone is singular at the base point.
    pub tangent_cone_singular: bool,
}

#[derive(Clone, Debug)]
pub struct SurfaceSingularityReport {
    pub degree: u32,
    pub monoid_point_multiplicity: u32,
    pub records: Vec<SingRecord>,
    /// Lines `L_b` with `I_b = 1` (the `A_0` lines).
    pub a0_lines: Vec<LineRecord>,
    /// Lines over singular points of the tangent cone.
    pub cone_lines: Vec<LineRecord>,
}

impl SurfaceSingularityReport {
    /// Number of singular points besides `O`.
    pub fn extra_count(&self) -> usize {
        self.records.iter().map(SingRecord::size).sum()
    }

    pub fn real_extra_count(&self) -> usize {
        self.records.iter().map(SingRecord::real_count).sum()
    }

    /// Sorted complex labels, one per point.
    pub fn labels(&self) -> Vec<String> {
        let mut v: Vec<String> =
            self.records.iter().flat_map(|r| std::iter::repeat_n(r.label(), r.size())).collect();
        v.sort();
        v
    }

    /// `Σ I_b` over all base points.
    pub fn ledger_total(&self) -> usize {
        let rec: usize = self.records.iter().map(|r| r.m * r.size()).sum();
        let lines: usize =
            self.a0_lines.iter().chain(&self.cone_lines).map(|l| l.multiplicity * l.base.size()).sum();
        rec + lines
    }

    pub fn a0_count(&self) -> usize {
        self.a0_lines.iter().map(|l| l.base.size()).sum()
    }
}

/// Solves `p0·u + v = 0` over a class where `u ≠ 0` at every member. Returns
/// the singular points as classes in `P^3`, or `None` on members where the
/// gradients are independent.
fn lift_to_surface(c: &PointClass, u: &[MPoly], v: &[MPoly]) -> Result<Vec<PointClass>> {
    let mut out = Vec::new();
    let mut todo = vec![c.clone()];
    while let Some(k) = todo.pop() {
        let h = &k.minpoly;
        let us: Vec<UPoly> = u.iter().map(|g| eval_mod(g, &k.coords, h)).collect();
        let vs: Vec<UPoly> = v.iter().map(|g| eval_mod(g, &k.coords, h)).collect();
        let Some(i) = us.iter().position(|x| !x.is_zero()) else {
            return Err(MonoidError::LedgerMismatch(format!("tangent cone singular at {}", k.describe())));
        };
        match invert(&us[i], h) {
            Inverse::Unit(inv) => {
                let p0 = -&mulmod(&vs[i], &inv, h);
                for (a, b) in us.iter().zip(&vs) {
                    if !(&mulmod(&p0, a, h) + b).rem(h).is_zero() {
                        return Err(MonoidError::LedgerMismatch(format!(
                            "gradients independent at {} although I > 1",
                            k.describe()
                        )));
                    }
                }
                let mut coords = vec![p0];
                coords.extend(k.coords.iter().cloned());
                out.push(PointClass::new(h.clone(), coords));
            }
            Inverse::ZeroDivisor(g) => {
                let rest = h.exact_div(&g).unwrap();
                todo.push(k.restrict(&g));
                todo.push(k.restrict(&rest));
            }
            Inverse::Zero => unreachable!("component {i} is nonzero"),
        }
    }
    Ok(out)
}

/// All singular points besides `O`, with the `A_0` lines and the ledger of
/// intersection multiplicities.
pub fn extra_singularities(m: &Monoid) -> Result<SurfaceSingularityReport> {
    if m.level() != ValidityLevel::SurfaceNormalized {
        return Err(MonoidError::Precondition("singularities are classified for surfaces only".into()));
    }
    let d = m.degree();
    let profile = m.base_point_profile()?;
    let grad_lo: Vec<MPoly> = m.f_lo().gradient().into_iter().map(HPoly::into_mpoly).collect();
    let grad_hi: Vec<MPoly> = m.f_hi().gradient().into_iter().map(HPoly::into_mpoly).collect();
    let mut records = Vec::new();
    let mut a0_lines = Vec::new();
    let mut cone_lines = Vec::new();
    for e in &profile.entries {
        let (cone_sing, smooth) = e.class.partition_common(&grad_lo);
        if let Some(c) = cone_sing {
            cone_lines.push(LineRecord { multiplicity: e.multiplicity, base: c, tangent_cone_singular: true });
        }
        for c in smooth {
            if e.multiplicity == 1 {
                a0_lines.push(LineRecord { multiplicity: 1, base: c, tangent_cone_singular: false });
                continue;
            }
            for location in lift_to_surface(&c, &grad_lo, &grad_hi)? {
                let base = PointClass::new(location.minpoly.clone(), location.coords[1..].to_vec());
                if let Some(b) = base.rational_point() {
                    let direct = m.singular_point_on_line(&b)?;
                    if direct != location.rational_point() {
                        return Err(MonoidError::LedgerMismatch(format!("singular point over {b} disagrees")));
                    }
                }
                records.push(SingRecord { m: e.multiplicity, location, base });
            }
        }
    }
    records.sort_by_key(|r| (std::cmp::Reverse(r.m), r.location.describe()));
    a0_lines.sort_by_key(|l| l.base.describe());
    let report = SurfaceSingularityReport {
        degree: d,
        monoid_point_multiplicity: d - 1,
        records,
        a0_lines,
        cone_lines,
    };
    let expected = (d * (d - 1)) as usize;
    if report.ledger_total() != expected {
        return Err(MonoidError::LedgerMismatch(format!(
            "base-point multiplicities sum to {} instead of {expected}",
            report.ledger_total()
        )));
    }
    let bound = expected / 2;
    if report.extra_count() > bound {
        return Err(MonoidError::LedgerMismatch(format!("{} singular points exceed the bound {bound}", report.extra_count())));
    }
    if report.extra_count() == bound && report.records.iter().any(|r| r.m != 2) {
        return Err(MonoidError::LedgerMismatch("bound attained with a point other than A_1".into()));
    }
    Ok(report)
}

/// Hessian of `F` at a rational point, in the affine chart of the point.
pub fn hessian_at(f: &HPoly, p: &ProjPoint) -> Vec<Vec<BigRat>> {
    let g = localize(f, p);
    let k = g.nvars();
    let mut h = vec![vec![BigRat::zero(); k]; k];
    for (i, row) in h.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            let mut e = vec![0u32; k];
            e[i] += 1;
            e[j] += 1;
            let c = g.coeff(&e);
            *x = if i == j { c * BigRat::from_integer(2.into()) } else { c };
        }
    }
    h
}

/// Numbers of positive and negative eigenvalues of a symmetric 3×3 matrix,
/// counted with multiplicity, from its characteristic polynomial.
pub fn inertia(h: &[Vec<BigRat>]) -> (usize, usize) {
    assert_eq!(h.len(), 3);
    let tr = &h[0][0] + &h[1][1] + &h[2][2];
    let minors = &h[0][0] * &h[1][1] - &h[0][1] * &h[1][0] + &h[0][0] * &h[2][2] - &h[0][2] * &h[2][0]
        + &h[1][1] * &h[2][2]
        - &h[1][2] * &h[2][1];
    let det = determinant(h.to_vec());
    let charpoly = UPoly::new(vec![-det, minors, -tr, BigRat::one()]);
    let zero = ExtRat::Finite(BigRat::zero());
    let (mut pos, mut neg) = (0, 0);
    for (factor, k) in squarefree_decomposition(&charpoly).expect("nonzero").factors {
        let s = SturmSequence::new(&factor);
        pos += k * s.count(&zero, &ExtRat::PosInf);
        neg += k * s.count(&ExtRat::NegInf, &zero);
    }
    (pos, neg)
}

/// Confirms that a real rational `A_1` point has a nondegenerate indefinite
/// Hessian, i.e. real form `A_1^-`.
pub fn verify_real_a1_signature(m: &Monoid, r: &SingRecord) -> Result<bool> {
    if r.m != 2 {
        return Err(MonoidError::Precondition(format!("{} is not an A_1 point", r.label())));
    }
    let Some(p) = r.point() else {
        return Err(MonoidError::Precondition("the point is not rational".into()));
    };
    let h = hessian_at(&m.whole(), &p);
    if rank(&h) != 3 {
        return Err(MonoidError::HessianDegenerate(p.to_string()));
    }
    let (pos, neg) = inertia(&h);
    Ok(pos > 0 && neg > 0)
}

/// Serialized view of a record.
#[derive(Clone, Debug, Serialize)]
pub struct SingRecordReport {
    pub label: String,
    pub m: usize,
    pub count: usize,
    pub real_points: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub real_label: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<ProjPoint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base_point: Option<ProjPoint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<ClassDescriptor>,
}

impl From<&SingRecord> for SingRecordReport {
    fn from(r: &SingRecord) -> Self {
        let point = r.point();
        SingRecordReport {
            label: r.label(),
            m: r.m,
            count: r.size(),
            real_points: r.real_count(),
            real_label: r.real_label(),
            base_point: r.base.rational_point(),
            class: if point.is_some() { None } else { Some(ClassDescriptor::from(&r.location)) },
            point,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LineReport {
    pub multiplicity: usize,
    pub count: usize,
    pub real_lines: usize,
    pub tangent_cone_singular: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base_point: Option<ProjPoint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<ClassDescriptor>,
}

impl From<&LineRecord> for LineReport {
    fn from(l: &LineRecord) -> Self {
        let base_point = l.base.rational_point();
        LineReport {
            multiplicity: l.multiplicity,
            count: l.base.size(),
            real_lines: l.base.real_count(),
            tangent_cone_singular: l.tangent_cone_singular,
            class: if base_point.is_some() { None } else { Some(ClassDescriptor::from(&l.base)) },
            base_point,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SurfaceReportView {
    pub degree: u32,
    pub monoid_point_multiplicity: u32,
    pub extra_singularities: usize,
    pub real_extra_singularities: usize,
    pub singularities: Vec<SingRecordReport>,
    pub a0_lines: Vec<LineReport>,
    pub tangent_cone_lines: Vec<LineReport>,
    pub ledger_total: usize,
}

impl From<&SurfaceSingularityReport> for SurfaceReportView {
    fn from(r: &SurfaceSingularityReport) -> Self {
        SurfaceReportView {
            degree: r.degree,
            monoid_point_multiplicity: r.monoid_point_multiplicity,
            extra_singularities: r.extra_count(),
            real_extra_singularities: r.real_extra_count(),
            singularities: r.records.iter().map(Into::into).collect(),
            a0_lines: r.a0_lines.iter().map(Into::into).collect(),
            tangent_cone_lines: r.cone_lines.iter().map(Into::into).collect(),
            ledger_total: r.ledger_total(),
        }
    }
}
