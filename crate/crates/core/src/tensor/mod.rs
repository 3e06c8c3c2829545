//! Tensor products of free crossed complexes and graph tensor products over
//! the clique nerve of a graph.
//!
//! A generator `a ⊗ c` is named `a(tensor)c`. When factor complexes share
//! generator names, every factor generator is first renamed `x@label`.
//! [`CrossedComplex::tensor_factors`](crate::CrossedComplex::tensor_factors)
//! records the `x@label` factors of each generator.

mod bim;
mod nerve;
mod product;

pub use bim::{pair_name, raw_boundary, Bimorphism, TENSOR};
pub use nerve::nerve_cliques;
pub use product::{graph_tensor, graph_tensor_product, tensor_complex, tensor_product, TensorProduct};
