//! The four subcommands, each producing a [`ReportDocument`].

use monoid_core::construct::{
    build_quartic_case_verified, default_epsilon, extreme_a_monoid, max_real_nodes_monoid, ConstructionSpec, TargetKind,
};
use monoid_core::exactnum::rat_to_string;
use monoid_core::monoid::{build_monoid_with, seeded_rng, Monoid};
use monoid_core::quartic::{quartic_report_with, QuarticReport};
use monoid_core::sample::{sample_surface, SampleCloud};
use monoid_core::singclass::extra_singularities;
use monoid_core::{MonoidError, Result};

use crate::document::{exit_code, ConstructionInfo, ErrorInfo, PolynomialText, ReportDocument};
use crate::input::ParsedInput;

fn polynomial_text(m: &Monoid, apex: &str, names: &[String]) -> PolynomialText {
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut all = vec![apex];
    all.extend(&refs);
    PolynomialText { f_lo: m.f_lo().render(&refs), f_hi: m.f_hi().render(&refs), whole: m.whole().render(&all) }
}

fn default_names(m: &Monoid) -> Vec<String> {
    (1..=m.ambient_dim()).map(|i| format!("x{i}")).collect()
}

fn validated(doc: &mut ReportDocument, m: &Monoid, apex: &str, names: &[String]) {
    doc.valid = true;
    doc.validity_level = Some(m.level());
    doc.degree = Some(m.degree());
    doc.polynomial = Some(polynomial_text(m, apex, names));
}

fn build(doc: &mut ReportDocument, input: &ParsedInput, seed: u64) -> Option<Monoid> {
    doc.input = Some(input.echo.clone());
    match build_monoid_with(&input.f_lo, &input.f_hi, &mut seeded_rng(seed)) {
        Ok(m) => {
            validated(doc, &m, &input.apex_name, &input.names);
            Some(m)
        }
        Err(e) => {
            doc.fail(&e);
            None
        }
    }
}

pub fn validate(input: &ParsedInput, seed: u64) -> ReportDocument {
    let mut doc = ReportDocument::new("validate", seed);
    build(&mut doc, input, seed);
    doc
}

fn attach_quartic(doc: &mut ReportDocument, r: &QuarticReport) {
    doc.quartic = Some(r.into());
    doc.surface = Some((&r.surface).into());
    doc.notes.extend(r.notes.iter().cloned());
}

/// Surface report, plus the case data for quartics.
fn classify_monoid(doc: &mut ReportDocument, m: &Monoid, seed: u64) {
    if m.ambient_dim() != 3 {
        doc.fail(&MonoidError::Precondition("singularity classification covers surfaces in P³ only".into()));
        return;
    }
    if m.degree() == 4 {
        match quartic_report_with(m.f_lo(), m.f_hi(), &mut seeded_rng(seed)) {
            Ok(r) => return attach_quartic(doc, &r),
            Err(e) => doc.fail(&e),
        }
    }
    match extra_singularities(m) {
        Ok(s) => doc.surface = Some((&s).into()),
        Err(e) if doc.error.is_none() => doc.fail(&e),
        Err(_) => {}
    }
}

pub fn classify(input: &ParsedInput, seed: u64) -> ReportDocument {
    let mut doc = ReportDocument::new("classify", seed);
    let quartic = input.names.len() == 3 && input.f_lo.degree() == Some(3) && input.f_hi.degree() == Some(4);
    if quartic {
        // The case checks name a singular line more precisely than
        // validation does, so they run first.
        match quartic_report_with(&input.f_lo, &input.f_hi, &mut seeded_rng(seed)) {
            Ok(r) => {
                doc.input = Some(input.echo.clone());
                validated(&mut doc, &r.monoid, &input.apex_name, &input.names);
                attach_quartic(&mut doc, &r);
            }
            Err(e) => {
                build(&mut doc, input, seed);
                doc.fail(&e);
            }
        }
        return doc;
    }
    if let Some(m) = build(&mut doc, input, seed) {
        classify_monoid(&mut doc, &m, seed);
    }
    doc
}

pub fn construct(spec: &ConstructionSpec, seed: u64) -> (ReportDocument, Option<Monoid>) {
    let mut doc = ReportDocument::new("construct", seed);
    doc.spec = Some(spec.clone());
    match run_construct(&mut doc, spec, seed) {
        Ok(m) => (doc, Some(m)),
        Err(e) => {
            doc.fail(&e);
            (doc, None)
        }
    }
}

fn run_construct(doc: &mut ReportDocument, spec: &ConstructionSpec, seed: u64) -> Result<Monoid> {
    let kind = serde_plain_kind(spec.kind);
    match spec.kind {
        TargetKind::QuarticCase => {
            if spec.degree != 4 {
                return Err(MonoidError::Precondition("quartic case builders need degree 4".into()));
            }
            let qc = build_quartic_case_verified(spec)?;
            validated(doc, &qc.monoid, "x0", &default_names(&qc.monoid));
            attach_quartic(doc, &qc.report);
            let points = qc
                .points
                .iter()
                .map(|c| c.iter().map(|(a, b, k)| format!("({}:{})^{k}", rat_to_string(a), rat_to_string(b))).collect())
                .collect();
            doc.construction = Some(ConstructionInfo { kind, points, nodes: None, epsilon: None, round_trip: true });
            Ok(qc.monoid)
        }
        TargetKind::MaxRealNodes => {
            let eps = spec.epsilon.clone().map(|r| r.0).unwrap_or_else(default_epsilon);
            let nc = max_real_nodes_monoid(spec.degree, &eps)?;
            validated(doc, &nc.monoid, "x0", &default_names(&nc.monoid));
            if nc.monoid.degree() == 4 {
                attach_quartic(doc, &quartic_report_with(nc.monoid.f_lo(), nc.monoid.f_hi(), &mut seeded_rng(seed))?);
            } else {
                doc.surface = Some((&nc.report).into());
            }
            doc.construction = Some(ConstructionInfo {
                kind,
                points: Vec::new(),
                nodes: Some(nc.summary()),
                epsilon: Some(rat_to_string(&nc.epsilon)),
                round_trip: true,
            });
            Ok(nc.monoid)
        }
        TargetKind::ExtremeA => {
            let m = extreme_a_monoid(spec.degree)?;
            validated(doc, &m, "x0", &default_names(&m));
            classify_monoid(doc, &m, seed);
            let round_trip = doc.error.is_none();
            doc.construction = Some(ConstructionInfo { kind, points: Vec::new(), nodes: None, epsilon: None, round_trip });
            Ok(m)
        }
    }
}

fn serde_plain_kind(k: TargetKind) -> String {
    match k {
        TargetKind::MaxRealNodes => "MAX_REAL_NODES",
        TargetKind::ExtremeA => "EXTREME_A",
        TargetKind::QuarticCase => "QUARTIC_CASE",
    }
    .into()
}

pub struct SampleOutcome {
    pub doc: ReportDocument,
    pub cloud: Option<SampleCloud>,
}

pub fn sample(input: &ParsedInput, seed: u64, grid: usize, chart: usize) -> SampleOutcome {
    let mut doc = ReportDocument::new("sample", seed);
    let Some(m) = build(&mut doc, input, seed) else {
        return SampleOutcome { doc, cloud: None };
    };
    match sample_surface(&m, grid, chart) {
        Ok(cloud) => {
            doc.notes.push(sample_note(&cloud));
            SampleOutcome { doc, cloud: Some(cloud) }
        }
        Err(e) => {
            doc.fail(&e);
            SampleOutcome { doc, cloud: None }
        }
    }
}

pub fn sample_note(c: &SampleCloud) -> String {
    format!(
        "{} vertices from a {}x{} grid in chart {}; skipped {} base points, {} at infinity, {} singular, {} over the residual bound; max residual {:e} (bound {:e})",
        c.vertices.len(),
        c.grid,
        c.grid,
        c.chart,
        c.base_points_skipped,
        c.at_infinity,
        c.singular_skipped,
        c.rejected,
        c.max_residual,
        c.bound
    )
}

/// Document for failures before any monoid was read.
pub fn usage_failure(command: &'static str, seed: u64, message: String, code: i32) -> ReportDocument {
    let mut doc = ReportDocument::new(command, seed);
    doc.error = Some(ErrorInfo::usage(message));
    doc.exit_code = code;
    doc
}

pub fn input_failure(command: &'static str, seed: u64, e: &crate::input::InputError) -> ReportDocument {
    let mut doc = ReportDocument::new(command, seed);
    doc.error = Some(ErrorInfo::from_input(e));
    doc.exit_code = exit_code(&e.error);
    doc
}
