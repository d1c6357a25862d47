use std::fmt;

use super::ops::ProductChain;
use crate::algebra::{Chain, Ring, TensorChain};
use crate::complex::ProductSimplex;
use crate::{Error, Result};

/// Coordinate permutations of `K^{×4}` (and the swap `t` of `K^{×2}`).
///
/// On products: `t = (x3, x4, x1, x2)`, `t^{×2} = (x2, x1, x4, x3)`, `z = (x1, x3, x2, x4)`;
/// at arity 2, `t = (x2, x1)`. On tensors the same reorderings carry Koszul signs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Perm {
    T,
    T2,
    Z,
}

impl Perm {
    /// `indices[k]` is the source coordinate of coordinate `k`.
    pub fn indices(self, arity: usize) -> Result<&'static [usize]> {
        match (self, arity) {
            (Perm::T, 2) => Ok(&[1, 0]),
            (Perm::T, 4) => Ok(&[2, 3, 0, 1]),
            (Perm::T2, 4) => Ok(&[1, 0, 3, 2]),
            (Perm::Z, 4) => Ok(&[0, 2, 1, 3]),
            _ => Err(Error::WrongArity { expected: if self == Perm::T { 2 } else { 4 }, actual: arity }),
        }
    }

    pub fn apply(self, x: &ProductSimplex) -> Result<ProductSimplex> {
        Ok(x.permute_unchecked(self.indices(x.arity())?))
    }

    pub fn apply_chain<R: Ring>(self, ch: &ProductChain<R>) -> Result<ProductChain<R>> {
        let mut out = Chain::zero();
        for (x, r) in ch.iter() {
            out.add_term_raw(self.apply(x)?, r.clone());
        }
        Ok(out)
    }

    /// The tensor version (`T`, `T^{⊗2}`, `z'`) with Koszul signs.
    pub fn apply_tensor<R: Ring>(self, tc: &TensorChain<R>) -> Result<TensorChain<R>> {
        let mut out = Chain::zero();
        for (t, r) in tc.iter() {
            let (u, negative) = t.permute(self.indices(t.len())?);
            out.add_term_raw(u, r.signed(negative));
        }
        Ok(out)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Perm::T => "t",
            Perm::T2 => "t2",
            Perm::Z => "z",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Integer, Tensor};
    use crate::complex::Simplex;

    fn s(v: &[u32]) -> Simplex {
        Simplex::new(v).unwrap()
    }

    fn quad() -> ProductSimplex {
        ProductSimplex::new(&[s(&[0, 1]), s(&[2, 3]), s(&[4, 5]), s(&[6, 7])]).unwrap()
    }

    #[test]
    fn tabulated_actions() {
        let x = quad();
        let f = x.factors();
        assert_eq!(Perm::Z.apply(&x).unwrap().factors(), vec![f[0].clone(), f[2].clone(), f[1].clone(), f[3].clone()]);
        assert_eq!(Perm::T2.apply(&x).unwrap().factors(), vec![f[1].clone(), f[0].clone(), f[3].clone(), f[2].clone()]);
        assert_eq!(Perm::T.apply(&x).unwrap().factors(), vec![f[2].clone(), f[3].clone(), f[0].clone(), f[1].clone()]);
        for p in [Perm::T, Perm::T2, Perm::Z] {
            assert_eq!(p.apply(&p.apply(&x).unwrap()).unwrap(), x);
        }
        assert!(Perm::Z.apply(&ProductSimplex::diag(&s(&[0]), 2)).is_err());
    }

    #[test]
    fn conjugation_by_z_swaps_t_and_t2() {
        // z t^{×2} z acts like the letter obtained by swapping the two Z_2 factors
        let x = quad();
        let zt2z = Perm::Z.apply(&Perm::T2.apply(&Perm::Z.apply(&x).unwrap()).unwrap()).unwrap();
        let expected = x.permute(&[2, 3, 0, 1]).unwrap();
        assert_eq!(zt2z, expected);
    }

    #[test]
    fn tensor_transposition_sign() {
        let e = |v: &[u32]| ProductSimplex::new(&[s(v)]).unwrap();
        let tc = TensorChain::<Integer>::basis(Tensor::pair(e(&[0, 1]), e(&[1, 2])));
        let swapped = Perm::T.apply_tensor(&tc).unwrap();
        assert_eq!(swapped, TensorChain::term(Tensor::pair(e(&[1, 2]), e(&[0, 1])), Integer::new(-1)));
        assert_eq!(Perm::T.apply_tensor(&swapped).unwrap(), tc);
    }
}
