//! Half-turn symmetric alternating sign matrices, primed shifted tableaux,
//! lattice paths, and exact verification of their weighted enumerations.

pub mod asm;
pub mod detkit;
pub mod error;
pub mod identities;
pub mod laurent;
pub mod limits;
pub mod paths;
pub mod symfunc;
pub mod tableaux;

pub use asm::{AsmKind, AsmStats, Compass, CompassMatrix, HalfTurnAsm, StrictPartition};
pub use error::{Error, Result};
pub use laurent::{GaussianRational, LaurentPoly, Monomial, Rational, VarId};
pub use limits::Limits;
