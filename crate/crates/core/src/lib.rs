//! Exact cochain-level cohomology operations on finite simplicial sets.
//!
//! The crate is layered bottom-up:
//!
//! - [`complex`]: simplicial sets generated by ordered simplicial complexes, product
//!   simplices and face/degeneracy operator words.
//! - [`algebra`]: exact rings (Z and Z/2), sparse chains, tensor chains and dense cochains.
//! - [`ez`]: the Eilenberg–Zilber contraction (Alexander–Whitney, Eilenberg–Mac Lane and
//!   Shih operators), its four-fold composite and the coordinate permutations.
//! - [`cup`]: cup-i products `D_i = Aw (t Sh)^i` and Steenrod squares.
//! - [`adem`]: bar words, the cochain maps `E_{3i+3}` and the Adem relation checker.
//! - [`reduce`]: Smith normal form, homology, the contraction of `C(K)` onto its homology
//!   and the secondary operation pipeline.
//! - [`verify`]: the property suites exposed by the command-line `check` command.
//!
//! Heavy loops go through [`Exec`], which dispatches to rayon when the `parallel`
//! feature is enabled and runs sequentially otherwise.

pub mod adem;
pub mod algebra;
pub mod complex;
pub mod cup;
mod error;
mod exec;
pub mod ez;
pub mod fixtures;
pub mod linalg;
pub mod reduce;
pub mod verify;

pub use algebra::{Chain, Cochain, Integer, Ring, RingKind, Tensor, TensorChain, Z2};
pub use complex::{OperatorWord, ProductSimplex, Simplex, SimplicialSet};
pub use error::{Error, Result};
pub use exec::Exec;
