//! Full classification of a quartic monoid.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::detect::{tangent_cone_type, RealForm, TangentConeType};
use super::invariants::{invariant_data, monoid_point_label, CaseInvariants};
use crate::error::{MonoidError, Result};
use crate::monoid::{build_monoid_profiled, Monoid, DEFAULT_SEED};
use crate::mvpoly::{mv_gcd, HPoly};
use crate::par::{self, Execution};
use crate::singclass::{extra_singularities, SurfaceReportView, SurfaceSingularityReport};

/// Other singularities along one component of the tangent cone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentLedger {
    /// The rational factor of the tangent cone.
    pub component: HPoly,
    /// Number of conjugate geometric components of the factor.
    pub copies: usize,
    pub symbol: &'static str,
    /// Multiplicities `I_b` on one geometric component, largest first.
    pub multiplicities: Vec<usize>,
    pub sum: usize,
    pub expected: usize,
}

#[derive(Clone, Debug)]
pub struct QuarticReport {
    pub tangent_cone: TangentConeType,
    pub invariants: CaseInvariants,
    pub label: String,
    pub ledgers: Vec<ComponentLedger>,
    pub surface: SurfaceSingularityReport,
    pub monoid: Monoid,
    pub notes: Vec<String>,
}

impl QuarticReport {
    pub fn case(&self) -> u8 {
        self.tangent_cone.case
    }

    /// Labels of all singular points: the triple point first, then the
    /// others sorted.
    pub fn labels(&self) -> Vec<String> {
        std::iter::once(self.label.clone()).chain(self.surface.labels()).collect()
    }
}

pub fn quartic_report(f3: &HPoly, f4: &HPoly) -> Result<QuarticReport> {
    quartic_report_with(f3, f4, &mut ChaCha8Rng::seed_from_u64(DEFAULT_SEED))
}

/// Classifies independent inputs, each with its own generator seeded from
/// `seed`, so results do not depend on the execution mode.
pub fn quartic_reports(inputs: &[(HPoly, HPoly)], seed: u64, exec: Execution) -> Vec<Result<QuarticReport>> {
    par::map(inputs, exec, |(f3, f4)| quartic_report_with(f3, f4, &mut ChaCha8Rng::seed_from_u64(seed)))
}

pub fn quartic_report_with<R: Rng + ?Sized>(f3: &HPoly, f4: &HPoly, rng: &mut R) -> Result<QuarticReport> {
    if f3.as_mpoly().nvars() != 3 || f3.degree() != Some(3) || f4.degree() != Some(4) {
        return Err(MonoidError::DegreeMismatch("a quartic monoid needs a ternary cubic and quartic".into()));
    }
    let common = mv_gcd(f3, f4)?;
    if common.degree().unwrap_or(0) > 0 {
        return Err(MonoidError::CommonFactor(common.to_string()));
    }
    let tc = tangent_cone_type(f3, rng)?;
    let data = invariant_data(&tc, f4, rng)?;
    let label = monoid_point_label(&data.invariants)?;
    // An irreducible cone was already intersected with f4 as a whole.
    let whole = f3.normalized();
    let known = data.meets.iter().find(|m| m.component.poly.normalized() == whole).map(|m| m.profile.clone());
    let monoid = build_monoid_profiled(f3, f4, known, rng)?;
    let surface = extra_singularities(&monoid)?;

    let mut ledgers = Vec::new();
    let mut observed: Vec<usize> = Vec::new();
    for ((cm, expected), symbol) in data.meets.iter().zip(&data.expected).zip(&data.symbols) {
        let mults = cm.other_multiplicities()?;
        observed.extend(mults.iter().flat_map(|&m| std::iter::repeat_n(m, cm.component.geometric)));
        let sum: usize = mults.iter().sum();
        let Some(expected) = *expected else {
            if sum > 0 {
                return Err(MonoidError::LedgerMismatch(format!(
                    "{} carries other intersections but none are allowed",
                    cm.component.poly
                )));
            }
            continue;
        };
        if sum != expected {
            return Err(MonoidError::LedgerMismatch(format!(
                "{}: multiplicities sum to {sum}, expected {expected}",
                cm.component.poly
            )));
        }
        ledgers.push(ComponentLedger {
            component: cm.component.poly.clone(),
            copies: cm.component.geometric,
            symbol,
            multiplicities: mults,
            sum,
            expected,
        });
    }
    let mut classified: Vec<usize> = surface
        .records
        .iter()
        .flat_map(|r| std::iter::repeat_n(r.m, r.size()))
        .chain(std::iter::repeat_n(1, surface.a0_count()))
        .collect();
    observed.sort_unstable();
    classified.sort_unstable();
    if observed != classified {
        return Err(MonoidError::LedgerMismatch(format!(
            "component ledgers {observed:?} disagree with the singularity classes {classified:?}"
        )));
    }
    let notes = notes_for(&tc, &data.invariants);
    Ok(QuarticReport { tangent_cone: tc, invariants: data.invariants, label, ledgers, surface, monoid, notes })
}

fn notes_for(tc: &TangentConeType, inv: &CaseInvariants) -> Vec<String> {
    let mut notes = Vec::new();
    match tc.case {
        2 => {
            notes.push(
                "m is the intersection number of Z(f_4) with the cuspidal cubic at its cusp, \
                 measured in the given coordinates"
                    .into(),
            );
            if inv.get("m") > 0 {
                notes.push("labelled Q_{9+m}; the same row is sometimes printed as T_{9+m}".into());
            }
        }
        4 => notes.push(
            "the constraint printed as j_1>0 <-> k_0>1 is applied as j_0>1 <-> k_0>1".into(),
        ),
        _ => {}
    }
    match tc.real_form {
        Some(RealForm::ConjugatePoints) => {
            notes.push("conjugate singular points force j_0 = j_1 and k_0 = k_1".into())
        }
        Some(RealForm::OneRealLineConjugatePair) if tc.case == 5 => notes.push(
            "lines 1 and 2 are conjugate: m_1 = m_2, k_2 = l_1, k_3 = l_3; only the real line can carry real singularities"
                .into(),
        ),
        Some(RealForm::OneRealLineConjugatePair) if tc.case == 6 => notes.push(
            "lines 1 and 2 are conjugate: j_1 = j_2; only the real line can carry real singularities".into(),
        ),
        _ => {}
    }
    notes
}

#[derive(Clone, Debug, Serialize)]
pub struct TangentConeView {
    pub case: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub real_form: Option<RealForm>,
    pub f3: HPoly,
    pub singular_points: Vec<String>,
    pub components: Vec<ComponentView>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentView {
    pub poly: HPoly,
    pub copies: usize,
    pub power: u32,
}

impl From<&TangentConeType> for TangentConeView {
    fn from(tc: &TangentConeType) -> Self {
        TangentConeView {
            case: tc.case,
            real_form: tc.real_form,
            f3: tc.f3.clone(),
            singular_points: tc.singular_points.iter().map(|s| s.class.describe()).collect(),
            components: tc
                .components
                .iter()
                .map(|c| ComponentView { poly: c.poly.clone(), copies: c.geometric, power: c.power })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct QuarticReportView {
    pub case: u8,
    pub tangent_cone: TangentConeView,
    pub invariants: CaseInvariants,
    pub monoid_point_label: String,
    pub labels: Vec<String>,
    pub ledgers: Vec<ComponentLedger>,
    pub surface: SurfaceReportView,
    pub notes: Vec<String>,
}

impl From<&QuarticReport> for QuarticReportView {
    fn from(r: &QuarticReport) -> Self {
        QuarticReportView {
            case: r.case(),
            tangent_cone: (&r.tangent_cone).into(),
            invariants: r.invariants.clone(),
            monoid_point_label: r.label.clone(),
            labels: r.labels(),
            ledgers: r.ledgers.clone(),
            surface: (&r.surface).into(),
            notes: r.notes.clone(),
        }
    }
}
