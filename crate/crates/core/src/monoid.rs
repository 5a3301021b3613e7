//! Monoid hypersurfaces `F = x0·f_{d-1} + f_d` with the point of multiplicity
//! `d-1` at `O = (1:0:…:0)`.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{MonoidError, Result};
use crate::exactnum::BigRat;
use crate::intersect::{intersection_profile, localize, IntersectionProfile};
use crate::mvpoly::{mv_gcd, HPoly, MPoly, ProjPoint};

/// Seed used when the caller does not supply a randomness source.
pub const DEFAULT_SEED: u64 = 0x6d6f6e6f6964;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ValidityLevel {
    /// Both parts nonzero and coprime.
    Basic,
    /// A surface whose tangent cone and curve at infinity share no singular point.
    SurfaceNormalized,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PointStatus {
    Smooth,
    Singular,
    NotOnSurface,
}

/// A validated monoid. Immutable once built.
#[derive(Clone, Debug)]
pub struct Monoid {
    n: usize,
    d: u32,
    f_lo: HPoly,
    f_hi: HPoly,
    level: ValidityLevel,
    profile: Option<IntersectionProfile>,
}

/// The deterministic generator used for random shears.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn build_monoid(f_lo: &HPoly, f_hi: &HPoly) -> Result<Monoid> {
    build_monoid_with(f_lo, f_hi, &mut ChaCha8Rng::seed_from_u64(DEFAULT_SEED))
}

/// Validates the two parts. For surfaces this computes the base-point profile,
/// which is kept for later queries.
pub fn build_monoid_with<R: Rng + ?Sized>(f_lo: &HPoly, f_hi: &HPoly, rng: &mut R) -> Result<Monoid> {
    build_monoid_profiled(f_lo, f_hi, None, rng)
}

/// As [`build_monoid_with`], reusing an already computed profile of
/// `Z(f_{d-1}, f_d)` when one is at hand.
pub(crate) fn build_monoid_profiled<R: Rng + ?Sized>(
    f_lo: &HPoly,
    f_hi: &HPoly,
    known: Option<IntersectionProfile>,
    rng: &mut R,
) -> Result<Monoid> {
    if f_lo.nvars() != f_hi.nvars() {
        return Err(MonoidError::DimensionMismatch { expected: f_lo.nvars(), got: f_hi.nvars() });
    }
    if f_lo.is_zero() {
        return Err(MonoidError::ZeroPart("f_{d-1}"));
    }
    if f_hi.is_zero() {
        return Err(MonoidError::ZeroPart("f_d"));
    }
    let (a, b) = (f_lo.degree().unwrap(), f_hi.degree().unwrap());
    if b != a + 1 {
        return Err(MonoidError::DegreeMismatch(format!("parts have degrees {a} and {b}; expected d-1 and d")));
    }
    if b < 3 {
        return Err(MonoidError::DegreeMismatch(format!("degree {b} is below 3")));
    }
    let common = mv_gcd(f_lo, f_hi)?;
    if common.degree().unwrap_or(0) > 0 {
        return Err(MonoidError::CommonFactor(common.render(&names(f_lo.nvars()))));
    }
    let n = f_lo.nvars();
    let mut m = Monoid { n, d: b, f_lo: f_lo.clone(), f_hi: f_hi.clone(), level: ValidityLevel::Basic, profile: None };
    if n == 3 {
        let profile = match known {
            Some(p) => p,
            None => intersection_profile(f_lo, f_hi, rng)?,
        };
        let grads: Vec<MPoly> =
            f_lo.gradient().into_iter().chain(f_hi.gradient()).map(HPoly::into_mpoly).collect();
        for e in &profile.entries {
            if let Some(c) = e.class.common_zeros(&grads) {
                return Err(MonoidError::CommonSingularPoint(c.describe()));
            }
        }
        m.profile = Some(profile);
        m.level = ValidityLevel::SurfaceNormalized;
    }
    Ok(m)
}

fn names(n: usize) -> Vec<&'static str> {
    const SMALL: [&str; 3] = ["x1", "x2", "x3"];
    const LARGE: [&str; 10] = ["x0", "x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8", "x9"];
    if n <= 3 {
        SMALL[..n].to_vec()
    } else {
        LARGE[..n.min(10)].to_vec()
    }
}

/// Splits `F` into `x0·f_{d-1} + f_d`; `F` must have degree at most one in `x0`.
pub fn split_whole(f: &HPoly) -> Result<(HPoly, HPoly)> {
    if f.is_zero() {
        return Err(MonoidError::ZeroPart("F"));
    }
    let k = f.degree_in(0);
    if k > 1 {
        return Err(MonoidError::NotAMonoid(format!(
            "degree {k} in x0; the point (1:0:…:0) is not of multiplicity d-1"
        )));
    }
    let coeffs = f.coefficients_in(0);
    let lo = if k == 1 { coeffs[1].remove_var(0) } else { MPoly::zero(f.nvars() - 1) };
    let hi = coeffs[0].remove_var(0);
    Ok((HPoly::new(lo)?, HPoly::new(hi)?))
}

impl Monoid {
    pub fn from_whole(f: &HPoly) -> Result<Monoid> {
        let (lo, hi) = split_whole(f)?;
        build_monoid(&lo, &hi)
    }

    /// Ambient dimension `n` of `P^n`.
    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn f_lo(&self) -> &HPoly {
        &self.f_lo
    }

    pub fn f_hi(&self) -> &HPoly {
        &self.f_hi
    }

    pub fn level(&self) -> ValidityLevel {
        self.level
    }

    /// `F = x0·f_{d-1} + f_d` in `x0..xn`.
    pub fn whole(&self) -> HPoly {
        let lo = self.f_lo.insert_var(0);
        let hi = self.f_hi.insert_var(0);
        let x0 = MPoly::var(self.n + 1, 0);
        HPoly::new(&(&x0 * &lo) + &hi).expect("monoid form is homogeneous")
    }

    /// The intersection profile of `Z(f_{d-1}, f_d)` (surfaces only).
    pub fn base_point_profile(&self) -> Result<&IntersectionProfile> {
        self.profile.as_ref().ok_or_else(|| MonoidError::Precondition("base points are profiled for surfaces only".into()))
    }

    /// `θ_F(a) = (f_d(a) : -f_{d-1}(a)·a)`.
    pub fn natural_param(&self, a: &ProjPoint) -> Result<ProjPoint> {
        let lo = self.f_lo.evaluate(a)?;
        let hi = self.f_hi.evaluate(a)?;
        if lo.is_zero() && hi.is_zero() {
            return Err(MonoidError::BasePoint(a.to_string()));
        }
        if lo.is_zero() {
            return Ok(ProjPoint::origin(self.n + 1));
        }
        let mut c = vec![hi];
        c.extend(a.coords().iter().map(|x| -(&lo * x)));
        ProjPoint::new(c)
    }

    /// Projection from `O` onto the hyperplane `x0 = 0`.
    pub fn project_from_o(&self, p: &ProjPoint) -> Result<ProjPoint> {
        if p.dim() != self.n + 1 {
            return Err(MonoidError::DimensionMismatch { expected: self.n + 1, got: p.dim() });
        }
        ProjPoint::new(p.coords()[1..].to_vec()).map_err(|_| MonoidError::CannotProjectApex)
    }

    /// Exact singularity test: away from `O`, `p` is singular iff
    /// `f_{d-1}(p') = 0` and `p0·∇f_{d-1}(p') + ∇f_d(p') = 0`.
    pub fn singular_points_criterion(&self, p: &ProjPoint) -> Result<PointStatus> {
        let f = self.whole();
        if !f.evaluate(p)?.is_zero() {
            return Ok(PointStatus::NotOnSurface);
        }
        let p0 = &p.coords()[0];
        let rest = &p.coords()[1..];
        if rest.iter().all(Zero::is_zero) {
            return Ok(PointStatus::Singular);
        }
        if !self.f_lo.eval(rest).is_zero() {
            return Ok(PointStatus::Smooth);
        }
        let u: Vec<BigRat> = self.f_lo.gradient().iter().map(|g| g.eval(rest)).collect();
        let v: Vec<BigRat> = self.f_hi.gradient().iter().map(|g| g.eval(rest)).collect();
        let singular = u.iter().zip(&v).all(|(a, b)| (p0 * a + b).is_zero());
        Ok(if singular { PointStatus::Singular } else { PointStatus::Smooth })
    }

    /// The singular point other than `O` on the line through `O` and the
    /// rational base point `b`, if there is one.
    pub fn singular_point_on_line(&self, b: &ProjPoint) -> Result<Option<ProjPoint>> {
        if b.dim() != self.n {
            return Err(MonoidError::DimensionMismatch { expected: self.n, got: b.dim() });
        }
        if !self.f_lo.vanishes_at(b) || !self.f_hi.vanishes_at(b) {
            return Err(MonoidError::NotABasePoint(b.to_string()));
        }
        let u: Vec<BigRat> = self.f_lo.gradient().iter().map(|g| g.eval(b.coords())).collect();
        let v: Vec<BigRat> = self.f_hi.gradient().iter().map(|g| g.eval(b.coords())).collect();
        let Some(i) = u.iter().position(|x| !x.is_zero()) else {
            if v.iter().all(Zero::is_zero) {
                return Err(MonoidError::CommonSingularPoint(b.to_string()));
            }
            return Ok(None);
        };
        let p0 = -(&v[i] / &u[i]);
        if !u.iter().zip(&v).all(|(a, c)| (&p0 * a + c).is_zero()) {
            return Ok(None);
        }
        let mut c = vec![p0];
        c.extend(b.coords().iter().cloned());
        Ok(Some(ProjPoint::new(c)?))
    }
}

/// Order of vanishing of `F` at `p`: 0 off the hypersurface.
pub fn multiplicity_at(f: &HPoly, p: &ProjPoint) -> usize {
    if !f.vanishes_at(p) {
        return 0;
    }
    localize(f, p).low_degree().unwrap_or(0) as usize
}
