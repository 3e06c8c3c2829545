//! Free crossed resolutions, their chain complexes, and extensions.

pub mod chain;
pub mod cocycle;
pub mod cyclic;
pub mod extension;
pub mod iso;
pub mod snf;
pub mod standard;

pub use chain::{exactness_check, homology_over_z, to_chain_complex, ChainComplex, Exactness, Invariants};
pub use cocycle::{automorphisms, check_cocycle, cyclic_cocycle_check, AutTarget, Perm};
pub use cyclic::{cyclic_resolution, infinite_cyclic, pad, trivial_complex};
pub use extension::{enumerate_extensions, extension_from_cocycle, ExtensionClass, ExtensionData, ExtensionGroup};
pub use iso::{are_isomorphic, class_name};
pub use standard::{bracket, standard_resolution};
