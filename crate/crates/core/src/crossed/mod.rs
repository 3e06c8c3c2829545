//! Free crossed modules and free reduced crossed complexes.

mod complex;
mod dim2;
pub mod io;
mod lift;
mod module;
mod morphism;
mod report;
pub mod sample;
mod validate;

pub use complex::{CrossedComplex, Element};
pub use dim2::{Dim2Elem, Factor};
pub use module::ModuleElem;
pub use morphism::{CrossedModuleTarget, CrsMorphism, TargetMap};
pub use report::{CheckLine, Report, Status};
pub use validate::{validate_axioms, ValidateOptions};
