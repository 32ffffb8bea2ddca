//! Exact group-ring machinery for generating algebraic curvature tensors
//! from 3-tensors with a (2 1) symmetry.
//!
//! The crate provides the symmetric-group algebra over the rational function
//! field Q(v), Young symmetrizers, a discrete Fourier transform built on
//! Young's natural representation, symbolic tensor polynomials with the
//! symmetry-operator action, and the identity-system reduction pipeline that
//! minimizes formula lengths over the idempotent family parameter.

pub mod checks;
pub mod dft;
pub mod formula;
pub mod linalg;
pub mod perm;
pub mod rational;
pub mod reduction;
pub mod ring;
pub mod sample;

pub use perm::{Partition, Permutation, YoungTableau};
pub use rational::{Polynomial, Q, RationalFunction};
pub use ring::GroupRingElement;
