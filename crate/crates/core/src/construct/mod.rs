//! Builders for monoids with prescribed singularities.

mod nodes;
mod quartic;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{MonoidError, Result};
use crate::exactnum::Rat;
use crate::monoid::Monoid;

pub use nodes::{default_epsilon, extreme_a_monoid, max_real_nodes_monoid, NodesConstruction, NodesSummary};
pub use quartic::{build_quartic_case, build_quartic_case_verified, case_layout, QuarticConstruction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TargetKind {
    MaxRealNodes,
    ExtremeA,
    QuarticCase,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AutoTag {
    Auto,
}

/// A parameter point `(α:β)` on a component, or `"auto"` to let the builder
/// solve the case condition for it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointValue {
    At([Rat; 2]),
    Auto(AutoTag),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamPoint {
    pub point: PointValue,
    pub multiplicity: usize,
}

impl ParamPoint {
    pub fn at(alpha: i64, beta: i64, multiplicity: usize) -> Self {
        ParamPoint {
            point: PointValue::At([Rat(crate::exactnum::int(alpha)), Rat(crate::exactnum::int(beta))]),
            multiplicity,
        }
    }

    pub fn rational(alpha: crate::exactnum::BigRat, beta: crate::exactnum::BigRat, multiplicity: usize) -> Self {
        ParamPoint { point: PointValue::At([Rat(alpha), Rat(beta)]), multiplicity }
    }

    pub fn auto(multiplicity: usize) -> Self {
        ParamPoint { point: PointValue::Auto(AutoTag::Auto), multiplicity }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionSpec {
    pub degree: u32,
    pub kind: TargetKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case: Option<u8>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub invariants: BTreeMap<String, usize>,
    /// Parameter points per component, in the order of [`case_layout`].
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub components: Vec<Vec<ParamPoint>>,
    /// `λ_1/λ_2` for one-parameter families; defaults to 1.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ratio: Option<Rat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<Rat>,
}

impl ConstructionSpec {
    pub fn quartic(case: u8, invariants: &[(&str, usize)], components: Vec<Vec<ParamPoint>>) -> Self {
        ConstructionSpec {
            degree: 4,
            kind: TargetKind::QuarticCase,
            case: Some(case),
            invariants: invariants.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            components,
            ratio: None,
            epsilon: None,
        }
    }

    pub fn invariant(&self, name: &str) -> usize {
        self.invariants.get(name).copied().unwrap_or(0)
    }
}

/// Runs the builder named by the spec.
pub fn construct(spec: &ConstructionSpec) -> Result<Monoid> {
    match spec.kind {
        TargetKind::MaxRealNodes => {
            let eps = spec.epsilon.clone().map(|r| r.0).unwrap_or_else(default_epsilon);
            Ok(max_real_nodes_monoid(spec.degree, &eps)?.monoid)
        }
        TargetKind::ExtremeA => extreme_a_monoid(spec.degree),
        TargetKind::QuarticCase => {
            if spec.degree != 4 {
                return Err(MonoidError::Precondition("quartic case builders need degree 4".into()));
            }
            build_quartic_case(spec)
        }
    }
}
