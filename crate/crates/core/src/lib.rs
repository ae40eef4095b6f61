//! Constructive homological algebra on finite combinatorial models.
//!
//! Every scalar is an exact [`Rational`]. The crate is organized by subsystem:
//!
//! * [`complex`], [`chain`], [`homology`]: ordered simplicial complexes, sparse
//!   chains and cochains, differentials, ranks and the Kronecker pairing.
//! * [`simplicial`]: barycentric subdivision, the prism homotopy, cover-relative
//!   subdivision (`xi`, `tau`, `omega`), cone homotopies and locally zero cochains.
//! * [`seminorm`]: an exact simplex-method LP solver with certificates, the l1
//!   seminorm on homology, the linf seminorm on cohomology and the duality check.
//! * [`groupcoh`]: finite groups, bar resolutions, group cohomology and the
//!   norm non-increasing extension to the bar resolution.
//! * [`covering`]: regular combinatorial coverings, Bruhat functions, averaging
//!   operators, the theta map, degree-one primitives and the transfer.

pub mod chain;
pub mod complex;
pub mod corpus;
pub mod covering;
pub mod error;
pub mod groupcoh;
pub mod homology;
pub mod io;
pub mod linalg;
pub mod operator;
pub mod rational;
pub mod seminorm;
pub mod simplicial;

pub use chain::{kronecker, Chain, Cochain};
pub use complex::OrientedComplex;
pub use error::{Error, Result};
pub use rational::Rational;
