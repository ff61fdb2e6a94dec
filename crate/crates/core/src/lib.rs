//! Exact computation of compression cones, boundary degenerations, little Weyl groups and
//! spherical roots for real spherical subalgebras of split real reductive Lie algebras.

#![allow(clippy::needless_range_loop)]

pub mod catalog;
pub mod cones;
pub mod error;
pub mod lie;
pub mod limits;
pub mod linalg;
pub mod rational;
pub mod report;
pub mod schema;
pub mod spherical;
pub mod subspace;
pub mod verify;
pub mod weyl;

pub use cones::{ChamberSet, Cone};
pub use error::{Error, NotAdaptedReason, Result};
pub use lie::LieAlgebra;
pub use rational::Q;
pub use report::{analyze, Options, Report};
pub use schema::Space;
pub use spherical::{BasePoint, SphericalAnalysis};
pub use subspace::Subspace;
pub use weyl::{LittleWeylGroup, SphericalRootData};
