//! Exact rings, sparse chains and tensor chains, and dense cochains.

mod chain;
mod cochain;
mod ring;

pub use chain::{boundary, permute_tensor_chain, tensor_boundary, Basis, Chain, Tensor, TensorChain};
pub use cochain::{
    coboundary, coboundary_matrix, eval, random_cochain, random_cocycle, tensor_eval, Cochain,
};
pub use ring::{Integer, Ring, RingKind, Z2};
