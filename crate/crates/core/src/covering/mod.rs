//! Regular coverings, deck-group averaging, the theta map, degree-one
//! primitives and the transfer.

pub mod averaging;
pub mod datum;
pub mod degree1;
pub mod theta;
pub mod transfer;

pub use averaging::{average_primitive, bar_to_cochains, ExtensionProblem};
pub use datum::{BruhatFunction, CoveringDatum};
pub use degree1::integrate_degree1;
pub use theta::{cone_sbar, cone_theta, LineBruhat, LineCover};
pub use transfer::IsometryGroupDatum;
