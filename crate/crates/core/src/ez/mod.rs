//! The Eilenberg–Zilber contraction `(Aw, Em, Sh)` of `C(K × L)` onto
//! `C(K) ⊗ C(L)`, its four-fold composite and the coordinate permutations.
//!
//! Products of arity `n` are split into a pair `K^{×h} × K^{×(n-h)}` at the split
//! point `h`; the pair operators default to `h = n / 2`, so a four-fold product is
//! bracketed `((x1, x2), (x3, x4))`.

mod four;
mod ops;
mod perm;
mod shuffle;

pub use four::{aw4, aw4_chain, aw4_component, aw4_with, em4, em4_chain, em4_with, sh4, sh4_chain, sh4_with};
pub use ops::{
    aw, aw_chain, aw_component, aw_split, diag, em, em_chain, em_pair, sh, sh_chain, sh_split, sh_tilde, ProductChain,
};
pub use perm::Perm;
pub use shuffle::{shuffles, ShufflePartition};

/// Whether operators drop degenerate summands as they produce them.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Normalization {
    #[default]
    Eager,
    /// Keep degenerate summands; they are annihilated only when cochains are applied.
    Deferred,
}
