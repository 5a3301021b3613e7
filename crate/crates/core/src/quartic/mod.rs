//! Quartic monoids: tangent-cone type, case invariants, the label of the
//! triple point and the per-component ledgers of other singularities.

mod detect;
mod invariants;
mod report;

pub use detect::{
    line_components_through, lines_through, meet, singular_points, tangent_cone_type, Component, PencilFactor,
    RealForm, SingularPoint, TangentConeType,
};
pub use invariants::{canonical_three_lines, case_invariants, monoid_point_label, table_violation, CaseInvariants};
pub use report::{quartic_report, quartic_report_with, quartic_reports, ComponentLedger, ComponentView, QuarticReport, QuarticReportView, TangentConeView};
