//! Local intersection numbers of plane curves.
//!
//! Three independent methods: root multiplicities of a pullback along a
//! parameterization, root multiplicities of a resultant after a generic
//! projection, and the dimension of truncated local quotients.

pub(crate) mod classes;
mod local;
mod profile;
mod pullback;

pub use classes::{ClassDescriptor, PointClass};
pub use local::{intersection_multiplicity_at, local_length, localize, milnor_number};
pub use profile::{intersection_profile, is_transversal, EntryReport, IntersectionProfile, ProfileEntry};
pub use pullback::{pullback_multiplicities, root_multiplicities, ParamRoot, PullbackMultiplicities};
