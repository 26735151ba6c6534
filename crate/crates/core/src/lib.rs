//! Exact combinatorics of the finite quiver Hecke algebras R^{Λ₀}(β) of affine
//! type C_ℓ^(1).
//!
//! * [`cartan`]: Cartan datum, weights, Weyl reflections, defect.
//! * [`qpoly`]: Laurent polynomials in q, the value domain of graded dimensions.
//! * [`young`]: residues, addable/removable nodes, standard tableaux, deg/codeg.
//! * [`fock`]: the q-deformed Fock space and its crystal.
//! * [`grdim`]: graded dimensions from tableaux, with a Fock-space cross-check.
//! * [`reptype`]: maximal weights of V(Λ₀) and the representation type of R^{Λ₀}(β).

pub mod cartan;
pub mod error;
pub mod fock;
pub mod grdim;
pub mod qpoly;
pub mod reptype;
pub mod young;

pub use cartan::{CartanDatum, RootSum, Weight};
pub use error::{Error, Result};
pub use qpoly::QLaurent;
pub use young::{Node, Partition, StandardTableau};
