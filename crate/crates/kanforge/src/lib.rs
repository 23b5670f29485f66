//! Finite simplicial sets, Kan conditions, nerves of groupoids and 2-groups,
//! and determinant functors, all computed by exhaustive enumeration.

#![allow(clippy::needless_range_loop, clippy::type_complexity, clippy::too_many_arguments)]

pub mod bisimplicial;
pub mod budget;
pub mod category;
pub mod cli;
pub mod corpus;
pub mod cosk;
pub mod determinants;
pub mod duskin;
pub mod error;
pub mod group;
pub mod hom;
pub mod io;
pub mod kan;
pub mod loops;
pub mod monoidal;
pub mod nerve;
pub mod nerve2;
pub mod pi;
pub mod segal;
pub mod sset;
pub mod standard;
pub mod twogroup;
pub mod verify;

pub use budget::Budget;
pub use error::{Error, Result};
pub use sset::{SMap, SSet};
