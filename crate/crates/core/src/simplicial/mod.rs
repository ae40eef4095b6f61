//! Subdivision operators on the geometric realization of a complex.

pub mod affine;
pub mod cone;
pub mod cover;
pub mod local;
pub mod subdivision;

pub use affine::{prism, sd, sd_power, AffineChain, AffineSimplex, Point};
pub use cone::ConeDatum;
pub use cover::OpenCover;
pub use local::{omega_dual_locally_zero, AffineCochain};
pub use subdivision::SubdividedComplex;
