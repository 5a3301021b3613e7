//! Per-case invariants (local intersection numbers at the singular points of
//! the tangent cone), the per-case constraints and the triple-point label.

use rand::Rng;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::detect::{meet, Component, TangentConeType};
use crate::error::{MonoidError, Result};
use crate::intersect::{intersection_multiplicity_at, intersection_profile, localize, IntersectionProfile, PointClass};
use crate::mvpoly::{mv_gcd, HPoly, MPoly, ProjPoint};

/// Named invariants in the order the case analysis introduces them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseInvariants {
    pub case: u8,
    pub values: Vec<(&'static str, usize)>,
    /// Case 7: multiplicities on the double line away from the singular
    /// point. Case 8: multiplicities on the triple line.
    pub line_multiplicities: Vec<usize>,
}

impl CaseInvariants {
    pub fn new(case: u8, values: Vec<(&'static str, usize)>) -> Self {
        CaseInvariants { case, values, line_multiplicities: Vec::new() }
    }

    pub fn get(&self, name: &str) -> usize {
        self.values.iter().find(|(n, _)| *n == name).map_or(0, |(_, v)| *v)
    }
}

impl Serialize for CaseInvariants {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let extra = usize::from(!self.line_multiplicities.is_empty());
        let mut map = s.serialize_map(Some(self.values.len() + extra))?;
        for (k, v) in &self.values {
            map.serialize_entry(k, v)?;
        }
        if extra == 1 {
            map.serialize_entry("line_multiplicities", &self.line_multiplicities)?;
        }
        map.end()
    }
}

/// Intersections of one component with `Z(f_4)`, split into the points that
/// are singular on the tangent cone and the others.
#[derive(Clone, Debug)]
pub(crate) struct ComponentMeet {
    pub component: Component,
    pub at_singular: Vec<(PointClass, usize)>,
    pub other: Vec<(PointClass, usize)>,
    pub profile: IntersectionProfile,
}

pub(crate) fn meet_component<R: Rng + ?Sized>(
    c: &Component,
    f4: &HPoly,
    f3_grads: &[MPoly],
    rng: &mut R,
) -> Result<ComponentMeet> {
    let profile = intersection_profile(&c.poly, f4, rng)?;
    let mut at_singular = Vec::new();
    let mut other = Vec::new();
    for e in &profile.entries {
        let (sing, rest) = e.class.partition_common(f3_grads);
        if let Some(s) = sing {
            at_singular.extend(s.split_rational().into_iter().map(|k| (k, e.multiplicity)));
        }
        other.extend(rest.into_iter().map(|k| (k, e.multiplicity)));
    }
    Ok(ComponentMeet { component: c.clone(), at_singular, other, profile })
}

impl ComponentMeet {
    /// Multiplicities on one geometric component, one entry per point.
    pub fn other_multiplicities(&self) -> Result<Vec<usize>> {
        let g = self.component.geometric;
        let mut v = Vec::new();
        for (c, m) in &self.other {
            if c.size() % g != 0 {
                return Err(MonoidError::LedgerMismatch(format!(
                    "a class of {} points cannot spread over {g} conjugate components",
                    c.size()
                )));
            }
            v.extend(std::iter::repeat_n(*m, c.size() / g));
        }
        v.sort_unstable_by(|a, b| b.cmp(a));
        Ok(v)
    }
}

/// `I_p(ℓ, f_4)` for one geometric component `ℓ` of `c` through the rational
/// point `p`, using the local quotient and confirming it with the profile.
fn local_at_rational(cm: &ComponentMeet, f4: &HPoly, p: &ProjPoint) -> Result<usize> {
    if !cm.component.poly.vanishes_at(p) {
        return Ok(0);
    }
    let total = intersection_multiplicity_at(&cm.component.poly, f4, p)?;
    let from_profile = cm.at_singular.iter().find(|(c, _)| c.contains(p)).map_or(0, |(_, m)| *m);
    if total != from_profile {
        return Err(MonoidError::LedgerMismatch(format!(
            "I at {p}: local quotient {total}, projection {from_profile}"
        )));
    }
    let g = cm.component.geometric;
    if total % g != 0 {
        return Err(MonoidError::LedgerMismatch(format!("I at {p} is not shared evenly by {g} conjugate components")));
    }
    Ok(total / g)
}

/// `I_p(ℓ, f_4)` at the members of an irrational class of singular points,
/// each lying on exactly one geometric component of `c`.
fn local_at_class(cm: &ComponentMeet, class: &PointClass) -> Result<usize> {
    let poly = cm.component.poly.as_mpoly();
    if !class.vanishes(poly) {
        return Ok(0);
    }
    if cm.component.geometric > 2 {
        return Err(MonoidError::Unsupported(
            "intersection numbers at vertices of three conjugate lines".into(),
        ));
    }
    let found: Vec<usize> = cm
        .at_singular
        .iter()
        .filter(|(c, _)| !c.is_rational())
        .map(|(_, m)| *m)
        .collect();
    match found.as_slice() {
        [] => Ok(0),
        [m] => Ok(*m),
        _ => Err(MonoidError::Unsupported("several irrational classes of singular points".into())),
    }
}

/// Everything needed for the report: invariants and component intersections.
#[derive(Clone, Debug)]
pub(crate) struct InvariantData {
    pub invariants: CaseInvariants,
    pub meets: Vec<ComponentMeet>,
    /// For each entry of `meets`: the expected sum of the other
    /// multiplicities on one geometric component, or `None` when the
    /// component carries no other singularities.
    pub expected: Vec<Option<usize>>,
    /// Symbol of the ledger per entry of `meets` (`m_i`, `m_i'`, `m_i''`).
    pub symbols: Vec<&'static str>,
}

/// Computes the case invariants for `f_4` against a detected tangent cone.
pub fn case_invariants<R: Rng + ?Sized>(tc: &TangentConeType, f4: &HPoly, rng: &mut R) -> Result<CaseInvariants> {
    Ok(invariant_data(tc, f4, rng)?.invariants)
}

pub(crate) fn invariant_data<R: Rng + ?Sized>(
    tc: &TangentConeType,
    f4: &HPoly,
    rng: &mut R,
) -> Result<InvariantData> {
    if f4.as_mpoly().nvars() != 3 || f4.degree() != Some(4) {
        return Err(MonoidError::DegreeMismatch("f_4 must be a ternary quartic".into()));
    }
    let common = mv_gcd(&tc.f3, f4)?;
    if common.degree().unwrap_or(0) > 0 {
        return Err(MonoidError::CommonFactor(common.to_string()));
    }
    let grads: Vec<MPoly> = tc.f3.gradient().into_iter().map(HPoly::into_mpoly).collect();
    let mut meets = Vec::new();
    for c in &tc.components {
        meets.push(meet_component(c, f4, &grads, rng)?);
    }
    let rational = tc.rational_singular_points();
    let irrational: Vec<&PointClass> =
        tc.singular_points.iter().map(|s| &s.class).filter(|c| !c.is_rational()).collect();
    let n = meets.len();
    let mut data = InvariantData {
        invariants: CaseInvariants::new(tc.case, vec![]),
        meets: meets.clone(),
        expected: vec![None; n],
        symbols: vec!["m_i"; n],
    };
    let idx = |geom: usize, deg: u32| {
        meets.iter().position(|m| m.component.geometric == geom && m.component.poly.degree() == Some(deg))
    };
    match tc.case {
        1 | 2 => {
            let p = &rational[0];
            let m = local_at_rational(&meets[0], f4, p)?;
            data.invariants.values = vec![("m", m)];
            data.expected[0] = Some(12 - m);
        }
        3 => {
            let (l, c) = (idx(1, 1).unwrap(), idx(1, 2).unwrap());
            let mut pairs: Vec<(usize, usize)> = if irrational.is_empty() {
                rational
                    .iter()
                    .map(|p| Ok((local_at_rational(&meets[c], f4, p)?, local_at_rational(&meets[l], f4, p)?)))
                    .collect::<Result<_>>()?
            } else {
                let s = irrational[0];
                let pair = (local_at_class(&meets[c], s)?, local_at_class(&meets[l], s)?);
                vec![pair, pair]
            };
            pairs.sort_by_key(|&(j, k)| (j.max(k), j, k));
            let [(j0, k0), (j1, k1)] = [pairs[0], pairs[1]];
            data.invariants.values = vec![
                ("j_0", j0),
                ("k_0", k0),
                ("j_1", j1),
                ("k_1", k1),
                ("r_0", j0.max(k0)),
                ("r_1", j1.max(k1)),
            ];
            data.expected[l] = 4usize.checked_sub(k0 + k1);
            data.expected[c] = 8usize.checked_sub(j0 + j1);
            data.symbols[c] = "m_i'";
        }
        4 => {
            let (l, c) = (idx(1, 1).unwrap(), idx(1, 2).unwrap());
            let p = &rational[0];
            let j0 = local_at_rational(&meets[c], f4, p)?;
            let k0 = local_at_rational(&meets[l], f4, p)?;
            data.invariants.values = vec![("j_0", j0), ("k_0", k0)];
            data.expected[l] = 4usize.checked_sub(k0);
            data.expected[c] = 8usize.checked_sub(j0);
            data.symbols[c] = "m_i'";
        }
        5 => three_general_lines(&mut data, f4, &rational, &irrational)?,
        6 => {
            let p = &rational[0];
            let mut single = Vec::new();
            let mut grouped = Vec::new();
            for (i, cm) in meets.iter().enumerate() {
                let j = local_at_rational(cm, f4, p)?;
                data.expected[i] = 4usize.checked_sub(j);
                if cm.component.geometric == 1 {
                    single.push(j);
                } else {
                    grouped.extend(std::iter::repeat_n(j, cm.component.geometric));
                }
            }
            single.sort_unstable();
            // Conjugate lines first, the real line last.
            let js: Vec<usize> = grouped.into_iter().chain(single).collect();
            data.invariants.values = vec![("j_1", js[0]), ("j_2", js[1]), ("j_3", js[2])];
        }
        7 => {
            let double = meets.iter().position(|m| m.component.power == 2).unwrap();
            let single = 1 - double;
            let p = &rational[0];
            let j0 = local_at_rational(&meets[single], f4, p)?;
            let k0 = local_at_rational(&meets[double], f4, p)?;
            data.invariants.values = vec![("j_0", j0), ("k_0", k0)];
            let mut list: Vec<usize> = meets[double]
                .at_singular
                .iter()
                .filter(|(c, _)| !c.contains(p))
                .flat_map(|(c, m)| std::iter::repeat_n(*m, c.size()))
                .collect();
            list.sort_unstable_by(|a, b| b.cmp(a));
            data.invariants.line_multiplicities = list;
            data.expected[single] = 4usize.checked_sub(j0);
        }
        8 => {
            let mut list: Vec<usize> = meets[0]
                .at_singular
                .iter()
                .flat_map(|(c, m)| std::iter::repeat_n(*m, c.size()))
                .collect();
            list.sort_unstable_by(|a, b| b.cmp(a));
            data.invariants.line_multiplicities = list;
        }
        9 => {
            data.expected[0] = Some(12);
        }
        _ => unreachable!("cases are 1 to 9"),
    }
    if let Some(clause) = table_violation(&data.invariants) {
        return Err(MonoidError::SingularLineDetected(clause));
    }
    check_f4_smooth_at_singular(tc, f4)?;
    check_f4_smooth_on_repeated(&data.meets, f4)?;
    Ok(data)
}

/// Case 5 with the labels of the normal form `x1·x2·x3`: line `ℓ_a` is `x_a`
/// and `P_ab` is the intersection of `ℓ_a` and `ℓ_b`.
fn three_general_lines(
    data: &mut InvariantData,
    f4: &HPoly,
    rational: &[ProjPoint],
    irrational: &[&PointClass],
) -> Result<()> {
    let meets = data.meets.clone();
    let names = ["k_2", "k_3", "l_1", "l_3", "m_1", "m_2"];
    if meets.len() == 3 {
        // n[a][b] = I_{P_ab}(ℓ_a, f_4).
        let mut n = [[0usize; 3]; 3];
        for a in 0..3 {
            for b in 0..3 {
                if a != b {
                    let p = meet(&meets[a].component.poly, &meets[b].component.poly)?;
                    n[a][b] = local_at_rational(&meets[a], f4, &p)?;
                }
            }
        }
        let (t, best) = canonical_three_lines(&n);
        data.invariants.values = names.iter().copied().zip(t).collect();
        let reordered: Vec<ComponentMeet> = best.iter().map(|&i| meets[i].clone()).collect();
        data.meets = reordered;
        data.symbols = vec!["m_i", "m_i'", "m_i''"];
    } else if meets.len() == 2 {
        let real = meets.iter().position(|m| m.component.geometric == 1).unwrap();
        let pair = 1 - real;
        let p12 = &rational[0];
        let s = irrational.first().ok_or_else(|| MonoidError::LedgerMismatch("missing conjugate vertices".into()))?;
        let m = local_at_rational(&meets[pair], f4, p12)?;
        let kl = local_at_class(&meets[pair], s)?;
        let k3 = local_at_class(&meets[real], s)?;
        let t = [kl, k3, kl, k3, m, m];
        data.invariants.values = names.iter().copied().zip(t).collect();
        data.meets = vec![meets[pair].clone(), meets[real].clone()];
        data.symbols = vec!["m_i = m_i'", "m_i''"];
    } else {
        return Err(MonoidError::Unsupported("three lines conjugate over a cubic field".into()));
    }
    let v = |k| data.invariants.get(k);
    let (jk, jl, jm) = (v("k_2").max(v("k_3")), v("l_1").max(v("l_3")), v("m_1").max(v("m_2")));
    let sums = [4usize.checked_sub(v("m_1") + v("l_1")), 4usize.checked_sub(v("k_2") + v("m_2")), 4usize.checked_sub(v("k_3") + v("l_3"))];
    data.expected = if data.meets.len() == 3 { sums.to_vec() } else { vec![sums[0], sums[2]] };
    data.invariants.values.extend([("j_k", jk), ("j_l", jl), ("j_m", jm)]);
    Ok(())
}

/// Relabels three lines so that `(k_2,k_3,l_1,l_3,m_1,m_2)` is
/// lexicographically smallest. `n[a][b]` is the intersection number of
/// `Z(f_4)` with line `a` at its meeting point with line `b`. Returns the
/// tuple and the chosen order of the lines.
pub fn canonical_three_lines(n: &[[usize; 3]; 3]) -> ([usize; 6], [usize; 3]) {
    let tuple = |s: &[usize; 3]| {
        let v = |a: usize, b: usize| n[s[a]][s[b]];
        [v(1, 2), v(2, 1), v(0, 2), v(2, 0), v(0, 1), v(1, 0)]
    };
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let best = *perms.iter().min_by_key(|s| tuple(s)).unwrap();
    (tuple(&best), best)
}

/// The case constraint that the invariants violate, if any.
pub fn table_violation(inv: &CaseInvariants) -> Option<String> {
    let v = |k| inv.get(k);
    let iff = |a: usize, b: usize| (a > 0) == (b > 0);
    let fail = |s: &str| Some(s.to_string());
    match inv.case {
        1 => {
            let m = v("m");
            if m == 1 || m > 12 {
                return fail("case 1: m = 0 or 2 <= m <= 12 (Z(f_4) smooth at the node)");
            }
        }
        2 => {
            let m = v("m");
            if m > 3 {
                return fail("case 2: m > 3 makes the cusp a singular point of Z(f_4)");
            }
            if m == 1 {
                return fail("case 2: m = 1 is not possible");
            }
        }
        3 => {
            for (j, k, i) in [(v("j_0"), v("k_0"), 0), (v("j_1"), v("k_1"), 1)] {
                if !iff(j, k) {
                    return Some(format!("case 3: j_{i}>0 <-> k_{i}>0"));
                }
                if j.min(k) > 1 {
                    return Some(format!("case 3: min(j_{i},k_{i}) <= 1"));
                }
            }
        }
        4 => {
            let (j0, k0) = (v("j_0"), v("k_0"));
            if !iff(j0, k0) {
                return fail("case 4: j_0>0 <-> k_0>0");
            }
            if (j0 > 1) != (k0 > 1) {
                return fail("case 4: j_0>1 <-> k_0>1");
            }
            if j0.min(k0) > 2 {
                return fail("case 4: min(j_0,k_0) <= 2");
            }
            if j0 > 8 || k0 > 4 {
                return fail("case 4: j_0 <= 8, k_0 <= 4");
            }
        }
        5 => {
            for (a, b, s) in [("k_2", "k_3", "k"), ("l_1", "l_3", "l"), ("m_1", "m_2", "m")] {
                if !iff(v(a), v(b)) {
                    return Some(format!("case 5: {a}>0 <-> {b}>0"));
                }
                if v(a).min(v(b)) > 1 {
                    return Some(format!("case 5: min({a},{b}) <= 1 (pair {s})"));
                }
            }
            if v("m_1") + v("l_1") > 4 || v("k_2") + v("m_2") > 4 || v("k_3") + v("l_3") > 4 {
                return fail("case 5: m_1+l_1 <= 4, k_2+m_2 <= 4, k_3+l_3 <= 4");
            }
        }
        6 => {
            let js = [v("j_1"), v("j_2"), v("j_3")];
            if !(iff(js[0], js[1]) && iff(js[1], js[2])) {
                return fail("case 6: j_1>0 <-> j_2>0 <-> j_3>0");
            }
            if js.iter().filter(|&&j| j > 1).count() > 1 {
                return fail("case 6: at most one of j_1,j_2,j_3 > 1");
            }
            if js.iter().any(|&j| j > 4) {
                return fail("case 6: j_1,j_2,j_3 <= 4");
            }
        }
        7 => {
            let (j0, k0) = (v("j_0"), v("k_0"));
            if !iff(j0, k0) {
                return fail("case 7: j_0>0 <-> k_0>0");
            }
            if j0.min(k0) > 1 {
                return fail("case 7: min(j_0,k_0) <= 1");
            }
            if j0 > 4 || k0 > 4 {
                return fail("case 7: j_0 <= 4, k_0 <= 4");
            }
        }
        _ => {}
    }
    None
}

/// A common singular point of `Z(f_3)` and `Z(f_4)` makes the line through it
/// singular.
fn check_f4_smooth_at_singular(tc: &TangentConeType, f4: &HPoly) -> Result<()> {
    let grads: Vec<MPoly> = f4.gradient().into_iter().map(HPoly::into_mpoly).collect();
    for s in &tc.singular_points {
        if let Some(p) = s.class.rational_point() {
            if localize(f4, &p).low_degree().unwrap_or(0) >= 2 {
                return Err(MonoidError::SingularLineDetected(format!("Z(f_4) is singular at {p}")));
            }
        } else if let Some(c) = s.class.common_zeros(&grads) {
            return Err(MonoidError::SingularLineDetected(format!("Z(f_4) is singular at {}", c.describe())));
        }
    }
    Ok(())
}

/// Every point of a repeated line is singular on the tangent cone, so a
/// singular point of `Z(f_4)` on it gives a singular line.
fn check_f4_smooth_on_repeated(meets: &[ComponentMeet], f4: &HPoly) -> Result<()> {
    let grads: Vec<MPoly> = f4.gradient().into_iter().map(HPoly::into_mpoly).collect();
    for cm in meets.iter().filter(|m| m.component.power >= 2) {
        for (c, _) in &cm.at_singular {
            if let Some(z) = c.common_zeros(&grads) {
                return Err(MonoidError::SingularLineDetected(format!(
                    "Z(f_4) is singular at {} on the repeated line {}",
                    z.describe(),
                    cm.component.poly
                )));
            }
        }
    }
    Ok(())
}

/// The Arnold label of the triple point.
pub fn monoid_point_label(inv: &CaseInvariants) -> Result<String> {
    if let Some(clause) = table_violation(inv) {
        return Err(MonoidError::ConstraintViolation(clause));
    }
    let v = |k| inv.get(k);
    Ok(match inv.case {
        1 if v("m") == 0 => "T_{3,3,4}".into(),
        1 => format!("T_{{3,3,{}}}", 3 + v("m")),
        2 => format!("Q_{}", 9 + v("m").max(1)),
        3 => {
            let (a, b) = (v("r_0").min(v("r_1")), v("r_0").max(v("r_1")));
            format!("T_{{3,{},{}}}", 4 + a, 4 + b)
        }
        4 => "S series".into(),
        5 => {
            let mut t = [v("j_k"), v("j_l"), v("j_m")];
            t.sort_unstable();
            format!("T_{{{},{},{}}}", 4 + t[0], 4 + t[1], 4 + t[2])
        }
        6 => "U series".into(),
        7 => "V series".into(),
        8 => "V' series".into(),
        9 => "P_8".into(),
        c => return Err(MonoidError::Precondition(format!("no case {c}"))),
    })
}
