//! Exact arithmetic in the dual Hopf algebras QSym and NSym, with the
//! (row-strict) dual immaculate and immaculate bases, harpoon actions, and
//! Pieri rules for immaculate and skew dual immaculate functions.

pub mod algebra;
pub mod cli;
pub mod composition;
pub mod convert;
pub mod error;
pub mod immaculate;
pub mod lr;
pub mod nsym;
pub mod pairing;
pub mod pieri;
pub mod qsym;
pub mod render;
pub mod tableau;
pub mod verify;

pub use algebra::{Basis, BasisIndex, Element, Family, Index, Tensor};
pub use composition::{Composition, IntVector, SkewShape};
pub use error::{Error, Result};
