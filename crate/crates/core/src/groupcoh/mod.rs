//! Finite groups, the bar resolution and the cohomology of its invariants.

pub mod bar;
pub mod cohomology;
pub mod group;
pub mod resolution;

pub use bar::BarCochain;
pub use cohomology::{group_cohomology, Caps, GroupCohomology};
pub use group::FiniteGroup;
pub use resolution::{extend_to_bar, SetResolution, StrongResolution};
