//! Acceptance runner: one PASS/FAIL line per criterion on stdout, timings on
//! stderr. Exits nonzero if any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use common::*;
use monoid_core::construct::{build_quartic_case_verified, case_layout, default_epsilon, max_real_nodes_monoid, ConstructionSpec, ParamPoint};
use monoid_core::exactnum::{int, BigRat};
use monoid_core::intersect::{intersection_multiplicity_at, is_transversal, milnor_number, pullback_multiplicities, ParamRoot};
use monoid_core::monoid::{build_monoid, seeded_rng};
use monoid_core::mvpoly::{HPoly, ProjPoint};
use monoid_core::par::{self, Execution};
use monoid_core::quartic::{quartic_report, quartic_reports, tangent_cone_type, QuarticReport};
use monoid_core::singclass::verify_real_a1_signature;
use monoid_core::MonoidError;
use num_traits::Zero;

type Outcome = Result<String, String>;
type Check = fn(&mut Accepted) -> Outcome;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

/// Reports from accepted classifications, checked again by criterion 9.
#[derive(Default)]
struct Accepted(Vec<(String, QuarticReport)>);

fn random_quartic_monoids(count: usize) -> Vec<(HPoly, HPoly)> {
    let mut rng = seeded_rng(0xbe20);
    let mut out = Vec::new();
    while out.len() < count {
        let density = [0.35, 0.6, 1.0][out.len() % 3];
        let f3 = random_form(&mut rng, 3, density, 4);
        let f4 = random_form(&mut rng, 4, density, 4);
        if f3.degree() != Some(3) || f4.degree() != Some(4) {
            continue;
        }
        if build_monoid(&f3, &f4).is_ok() {
            out.push((f3, f4));
        }
    }
    out
}

fn bezout(acc: &mut Accepted) -> Outcome {
    let inputs = random_quartic_monoids(50);
    let reports = quartic_reports(&inputs, 11, Execution::default());
    let mut nontransversal = 0;
    let mut rational_checked = 0;
    for (k, ((f3, f4), r)) in inputs.iter().zip(reports).enumerate() {
        let monoid = match &r {
            Ok(r) => r.monoid.clone(),
            Err(MonoidError::SingularLineDetected(_) | MonoidError::Unsupported(_)) => {
                build_monoid(f3, f4).map_err(|e| format!("monoid {k}: {e}"))?
            }
            Err(e) => return Err(format!("monoid {k}: {e}")),
        };
        let prof = monoid.base_point_profile().map_err(|e| e.to_string())?;
        ensure!(prof.total() == 12, "monoid {k}: Σ I_b = {}", prof.total());
        for e in &prof.entries {
            if let Some(p) = e.rational_point() {
                let i = intersection_multiplicity_at(f3, f4, &p).map_err(|e| e.to_string())?;
                ensure!(i == e.multiplicity, "monoid {k} at {p}: profile {} vs local {i}", e.multiplicity);
                rational_checked += 1;
            }
        }
        if prof.entries.iter().any(|e| e.multiplicity > 1) {
            nontransversal += 1;
        }
        if let Ok(r) = r {
            acc.0.push((format!("random #{k}"), r));
        }
    }
    Ok(format!(
        "50 monoids, Σ I_b = 12 each; {nontransversal} with a tangency; {rational_checked} rational base points match the local quotient"
    ))
}

fn extreme(acc: &mut Accepted) -> Outcome {
    let (f3, f4) = (h("x1*x2^2 + x3^3"), h("x1^4"));
    let r = quartic_report(&f3, &f4).map_err(|e| e.to_string())?;
    ensure!(r.surface.extra_count() == 1, "{} extra singular points", r.surface.extra_count());
    let rec = &r.surface.records[0];
    let point = rec.point().ok_or("irrational singular point")?;
    ensure!(point == ProjPoint::from_ints(&[0, 0, 1, 0]), "singular point {point}");
    ensure!(rec.label() == "A_11", "label {}", rec.label());
    ensure!(r.label == "Q_10", "monoid point {}", r.label);
    let i = intersection_multiplicity_at(&f3, &f4, &ProjPoint::from_ints(&[0, 1, 0])).map_err(|e| e.to_string())?;
    ensure!(i == 12, "I at the base point = {i}");
    let d = 4i64;
    let f = r.monoid.whole();
    let mu_o = milnor_number(&f, &ProjPoint::from_ints(&[1, 0, 0, 0]), 24).map_err(|e| e.to_string())?;
    ensure!(mu_o as i64 == (d * d - 3 * d + 1) * (d - 2), "μ(O) = {mu_o}");
    let mu_a = milnor_number(&f, &point, 24).map_err(|e| e.to_string())?;
    ensure!(mu_a == 11, "μ at the A_11 point = {mu_a}");
    acc.0.push(("extreme".into(), r));
    Ok(format!("singular points O ({}) and {point} (A_11); I = {i}; μ(O) = {mu_o}; μ(A_11) = {mu_a}", "Q_10"))
}

fn case_one_fixture(acc: &mut Accepted) -> Outcome {
    let r = quartic_report(&h("x1^3 + x2^3 + 5*x1*x2*x3"), &h("-x3^3*(x1 + x2)")).map_err(|e| e.to_string())?;
    ensure!(r.case() == 1, "case {}", r.case());
    ensure!(r.invariants.get("m") == 2, "m = {}", r.invariants.get("m"));
    ensure!(r.label == "T_{3,3,5}", "label {}", r.label);
    let out = format!("case 1, m = 2, {}; others {:?}", r.label, r.surface.labels());
    acc.0.push(("case-1 fixture".into(), r));
    Ok(out)
}

fn max_nodes(_: &mut Accepted) -> Outcome {
    let eps = default_epsilon();
    let c = max_real_nodes_monoid(4, &eps).map_err(|e| e.to_string())?;
    let labels = c.report.labels();
    ensure!(c.report.extra_count() == 6, "{} extra singularities", c.report.extra_count());
    ensure!(labels.iter().all(|l| l == "A_1"), "labels {labels:?}");
    ensure!(c.report.real_extra_count() == 6, "{} real", c.report.real_extra_count());
    let mut indefinite = 0;
    for rec in &c.report.records {
        if verify_real_a1_signature(&c.monoid, rec).map_err(|e| e.to_string())? {
            indefinite += 1;
        }
    }
    ensure!(indefinite == 6, "{indefinite} indefinite Hessians");
    Ok(format!("ε = 1/10 → {}; 6 × A_1, 6 real, 6 indefinite Hessians", c.epsilon))
}

fn triangulation(_: &mut Accepted) -> Outcome {
    let mut rng = seeded_rng(0x7e1a);
    let fixtures = triangulation_fixtures(&mut rng, 30);
    let checked = par::map(&fixtures, Execution::default(), |fx| -> Result<usize, String> {
        let ctx = |e: MonoidError| format!("{}: {e}", fx.name);
        let m = build_monoid_free_profile(&fx.f, &fx.g).map_err(ctx)?;
        let pull = pullback_multiplicities(&fx.g, &fx.theta, &[]).map_err(ctx)?;
        let mut by_point: BTreeMap<String, (ProjPoint, usize)> = BTreeMap::new();
        for (root, k) in &pull.roots {
            let ParamRoot::Point(a, b) = root else {
                return Err(format!("{}: irrational parameter root", fx.name));
            };
            let p = fx.theta.eval(a, b).map_err(ctx)?;
            by_point.entry(p.to_string()).or_insert((p, 0)).1 += k;
        }
        let total: usize = m.entries.iter().map(|e| e.multiplicity * e.size()).sum();
        let expect = (fx.f.degree().unwrap() * fx.g.degree().unwrap()) as usize;
        ensure!(total == expect, "{}: eliminant total {total}, Bézout {expect}", fx.name);
        ensure!(m.entries.len() == by_point.len(), "{}: {} eliminant points vs {} pullback points", fx.name, m.entries.len(), by_point.len());
        for e in &m.entries {
            let p = e.rational_point().ok_or_else(|| format!("{}: irrational intersection", fx.name))?;
            let local = intersection_multiplicity_at(&fx.f, &fx.g, &p).map_err(ctx)?;
            let pulled = by_point.get(&p.to_string()).map_or(0, |x| x.1);
            ensure!(
                e.multiplicity == local && local == pulled,
                "{} at {p}: eliminant {}, local {local}, pullback {pulled}",
                fx.name,
                e.multiplicity
            );
        }
        Ok(m.entries.len())
    });
    let mut points = 0;
    for c in checked {
        points += c?;
    }
    Ok(format!("30 fixtures (lines, conics, nodal and cuspidal cubics), {points} points agree three ways"))
}

fn build_monoid_free_profile(f: &HPoly, g: &HPoly) -> monoid_core::Result<monoid_core::intersect::IntersectionProfile> {
    monoid_core::intersect::intersection_profile(f, g, &mut seeded_rng(5))
}

fn detector(acc: &mut Accepted) -> Outcome {
    let mut rng = seeded_rng(0xde7);
    let mut jobs = Vec::new();
    for (case, text) in NORMAL_FORMS {
        jobs.push((case, h(text)));
        for _ in 0..10 {
            let m = random_invertible(&mut rng);
            jobs.push((case, h(text).transform(&m)));
        }
    }
    let got = par::map(&jobs, Execution::default(), |(_, f)| tangent_cone_type(f, &mut seeded_rng(3)).map(|t| t.case));
    for ((case, f), g) in jobs.iter().zip(got) {
        let g = g.map_err(|e| format!("{}: {e}", f.render(&["x1", "x2", "x3"])))?;
        ensure!(g == *case, "case {case} detected as {g}: {}", f.render(&["x1", "x2", "x3"]));
    }
    // Generic quartics on the normal forms feed the ledger check.
    let generic = h("x1^4 + 2*x2^4 + 3*x3^4 + x1*x2*x3^2 - x1^2*x2*x3 + 5*x1*x2^3");
    for (case, text) in NORMAL_FORMS {
        let r = quartic_report(&h(text), &generic).map_err(|e| format!("case {case}: {e}"))?;
        acc.0.push((format!("normal form {case}"), r));
    }
    Ok(format!("9 normal forms × (identity + 10 coordinate changes) = {} detections", jobs.len()))
}

fn spec_multiplicities(spec: &ConstructionSpec, ledger: bool) -> Vec<usize> {
    let layout = case_layout(spec.case.unwrap()).unwrap();
    let mut v: Vec<usize> = layout
        .components
        .iter()
        .zip(&spec.components)
        .filter(|(lc, _)| lc.in_ledger == ledger)
        .flat_map(|(_, pts)| pts.iter().map(|p| p.multiplicity))
        .collect();
    v.sort_unstable();
    v
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

/// Invariants compared up to the relabelings the classifier is free to make.
fn invariant_signature(case: u8, get: &dyn Fn(&str) -> usize) -> Vec<usize> {
    match case {
        3 => {
            let mut pairs = vec![(get("j_0"), get("k_0")), (get("j_1"), get("k_1"))];
            pairs.sort_unstable();
            pairs.into_iter().flat_map(|(a, b)| [a, b]).collect()
        }
        5 => sorted(["k_2", "k_3", "l_1", "l_3", "m_1", "m_2"].iter().map(|k| get(k)).collect()),
        6 => sorted(["j_1", "j_2", "j_3"].iter().map(|k| get(k)).collect()),
        1 | 2 => vec![get("m")],
        4 | 7 => vec![get("j_0"), get("k_0")],
        _ => vec![],
    }
}

fn round_trip(acc: &mut Accepted) -> Outcome {
    let specs = round_trip_specs();
    let cases: std::collections::BTreeSet<u8> = specs.iter().map(|(_, s)| s.case.unwrap()).collect();
    ensure!(specs.len() >= 12 && cases.len() == 7, "{} specs over cases {cases:?}", specs.len());
    let built = par::map(&specs, Execution::default(), |(_, s)| build_quartic_case_verified(s));
    for ((name, spec), b) in specs.iter().zip(built) {
        let qc = b.map_err(|e| format!("{name}: {e}"))?;
        // Classify from scratch rather than trusting the builder's report.
        let r = quartic_report(qc.monoid.f_lo(), qc.monoid.f_hi()).map_err(|e| format!("{name}: {e}"))?;
        let case = spec.case.unwrap();
        ensure!(r.case() == case, "{name}: case {}", r.case());
        let want = invariant_signature(case, &|k| spec.invariant(k));
        let got = invariant_signature(case, &|k| r.invariants.get(k));
        ensure!(want == got, "{name}: invariants {got:?}, spec {want:?}");
        let ledger = sorted(r.ledgers.iter().flat_map(|l| l.multiplicities.clone()).collect());
        ensure!(ledger == spec_multiplicities(spec, true), "{name}: ledger {ledger:?}");
        if case == 7 {
            let line = sorted(r.invariants.line_multiplicities.clone());
            ensure!(line == spec_multiplicities(spec, false), "{name}: double line {line:?}");
        }
        acc.0.push((name.to_string(), r));
    }
    // The case conditions are real constraints, not formalities.
    let c1 = ConstructionSpec::quartic(1, &[("m", 0)], vec![vec![ParamPoint::at(2, 1, 12)]]);
    let c2 = ConstructionSpec::quartic(2, &[("m", 0)], vec![vec![ParamPoint::at(1, 1, 12)]]);
    for (name, s) in [("case 1 condition", c1), ("case 2 weighted sum", c2)] {
        let e = build_quartic_case_verified(&s).err();
        ensure!(matches!(e, Some(MonoidError::ConditionUnsatisfiable(_))), "{name} violated but built: {e:?}");
    }
    Ok(format!("{} specs over cases 1-7 reproduced; violated case-1 and case-2 conditions refused", specs.len()))
}

fn singular_line_checker(_: &mut Accepted) -> Outcome {
    let inputs = singular_line_inputs();
    for (name, f3, f4) in &inputs {
        match quartic_report(f3, f4) {
            Err(MonoidError::SingularLineDetected(_)) => {}
            Err(e) => return Err(format!("{name}: {e}")),
            Ok(r) => return Err(format!("{name}: accepted as {}", r.label)),
        }
    }
    Ok(format!("{} planted singular lines rejected", inputs.len()))
}

fn cross(u: &[BigRat], v: &[BigRat]) -> [BigRat; 3] {
    [&u[1] * &v[2] - &u[2] * &v[1], &u[2] * &v[0] - &u[0] * &v[2], &u[0] * &v[1] - &u[1] * &v[0]]
}

fn properties(acc: &mut Accepted) -> Outcome {
    let mut rng = seeded_rng(0x9a9);
    let mut instances = Vec::new();
    while instances.len() < 100 {
        let c = common_zero_instance(&mut rng);
        if intersection_multiplicity_at(&c.f, &c.g, &c.p).is_ok() {
            instances.push(c);
        }
    }
    let mut tangent = 0;
    for (k, c) in instances.iter().enumerate() {
        let i = intersection_multiplicity_at(&c.f, &c.g, &c.p).unwrap();
        let gf: Vec<BigRat> = c.f.gradient().iter().map(|d| d.evaluate(&c.p).unwrap()).collect();
        let gg: Vec<BigRat> = c.g.gradient().iter().map(|d| d.evaluate(&c.p).unwrap()).collect();
        let dependent = cross(&gf, &gg).iter().all(Zero::is_zero);
        ensure!(i >= 1, "instance {k}: p is not a common zero");
        ensure!((i > 1) == dependent, "instance {k}: I_p = {i}, gradients dependent = {dependent}");
        let t = is_transversal(&c.f, &c.g, &c.p).map_err(|e| e.to_string())?;
        ensure!(t == (i == 1), "instance {k}: is_transversal = {t}, I_p = {i}");
        tangent += usize::from(dependent);
    }
    ensure!(tangent > 20 && tangent < 80, "only {tangent} of 100 tangent instances");
    // Component ledgers on every accepted classification, plus the global count
    // where all singular points of the cone are rational.
    let mut global = 0;
    for (name, r) in &acc.0 {
        for l in &r.ledgers {
            ensure!(l.sum == l.expected, "{name}: ledger {} sums to {}, expected {}", l.symbol, l.sum, l.expected);
            ensure!(l.multiplicities.iter().sum::<usize>() == l.sum, "{name}: ledger {} list", l.symbol);
        }
        let sing = r.tangent_cone.rational_singular_points();
        if r.tangent_cone.case != 7 && r.tangent_cone.case != 8 && sing.len() == r.tangent_cone.singular_count() {
            let f3 = r.monoid.f_lo();
            let f4 = r.monoid.f_hi();
            let mut at_sing = 0;
            for p in &sing {
                at_sing += intersection_multiplicity_at(f3, f4, p).map_err(|e| e.to_string())?;
            }
            let ledgers: usize = r.ledgers.iter().map(|l| l.copies * l.sum).sum();
            ensure!(ledgers + at_sing == 12, "{name}: ledgers {ledgers} + singular points {at_sing} ≠ 12");
            global += 1;
        }
    }
    let _ = int(0);
    Ok(format!(
        "100 common zeros ({tangent} tangent): I_p>1 ⇔ dependent gradients; {} classifications satisfy every ledger, {global} also close the Bézout count",
        acc.0.len()
    ))
}

fn main() {
    let criteria: [(&str, Check); 9] = [
        ("Bézout ledger", bezout),
        ("extreme example", extreme),
        ("case-1 fixture", case_one_fixture),
        ("maximal real singularities", max_nodes),
        ("oracle triangulation", triangulation),
        ("detector partition and invariance", detector),
        ("round-trip construction", round_trip),
        ("singular-line checker", singular_line_checker),
        ("property suite", properties),
    ];
    let mut acc = Accepted::default();
    let mut failed = 0;
    let start = Instant::now();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(|| run(&mut acc)))
            .unwrap_or_else(|p| Err(p.downcast_ref::<String>().cloned().unwrap_or_else(|| "panic".into())));
        let (tag, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("{tag} {} {name}: {detail}", i + 1);
        eprintln!("  criterion {} took {:.1?}", i + 1, t.elapsed());
    }
    eprintln!("acceptance: {} of 9 passed in {:.1?}", 9 - failed, start.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}
