//! Reduced crossed complexes of groups.
//!
//! The crate builds free crossed modules from presentations, the standard and
//! periodic free crossed resolutions, tensor products of free crossed
//! complexes through the bimorphism rules, and graph tensor products over the
//! clique nerve of a graph. Every construction can be checked: boundaries
//! compose to the identity, the crossed module laws hold, the associated chain
//! complex of modules is exact, and 2-cocycles give group extensions.
//!
//! Dimension 1 of a free crossed complex is a free group ([`words`]), dimension
//! 2 a free crossed module ([`crossed::Dim2Elem`]) and dimensions 3 and up are
//! free right modules over the group ring of the coefficient group
//! ([`crossed::ModuleElem`]).

pub mod crossed;
pub mod error;
pub mod exec;
pub mod groups;
pub mod resolutions;
pub mod tensor;
pub mod words;

pub use crossed::{CrossedComplex, Dim2Elem, Factor, ModuleElem};
pub use error::{Error, Result};
pub use exec::Exec;
pub use groups::{Group, GroupElem, GroupRingElem, GroupTable};
pub use words::{Gen, Word};
