use super::ops::{aw_split, em_pair, sh_split, ProductChain};
use super::Normalization;
use crate::algebra::{Chain, Ring, Tensor, TensorChain};
use crate::complex::ProductSimplex;
use crate::{Error, Result};

fn check_arity(x: &ProductSimplex, n: usize) -> Result<()> {
    if x.arity() != n {
        return Err(Error::WrongArity { expected: n, actual: x.arity() });
    }
    Ok(())
}

/// `Aw_4 = (Aw ⊗ Aw) Aw` on `(K^{×2})^{×2}`, giving four single-factor tensors.
pub fn aw4_with<R: Ring>(x: &ProductSimplex, norm: Normalization) -> Result<TensorChain<R>> {
    check_arity(x, 4)?;
    let mut out = Chain::zero();
    for (t, _) in aw_split::<R>(x, 2, norm).iter() {
        let [a, b] = t.factors() else { unreachable!() };
        for (u, _) in aw_split::<R>(a, 1, norm).iter() {
            for (v, _) in aw_split::<R>(b, 1, norm).iter() {
                let f = u.factors().iter().chain(v.factors()).cloned();
                match norm {
                    Normalization::Eager => out.add_term(Tensor::new(f), R::one()),
                    Normalization::Deferred => out.add_term_raw(Tensor::new(f), R::one()),
                }
            }
        }
    }
    Ok(out)
}

pub fn aw4<R: Ring>(x: &ProductSimplex) -> Result<TensorChain<R>> {
    aw4_with(x, Normalization::Eager)
}

/// The single summand of `Aw_4 x` with factor dimensions `dims`, if it exists.
/// Degenerate factors are reported as they are; callers decide whether to drop them.
pub fn aw4_component(x: &ProductSimplex, dims: [usize; 4]) -> Option<[ProductSimplex; 4]> {
    let m = x.dim();
    if dims.iter().sum::<usize>() != m {
        return None;
    }
    let [d1, d2, d3, _] = dims;
    let f = |k: usize, lo: usize, hi: usize| x.project(k, k + 1).slice_points(lo, hi);
    Some([f(0, 0, d1), f(1, d1, d1 + d2), f(2, d1 + d2, d1 + d2 + d3), f(3, d1 + d2 + d3, m)])
}

/// `Em_4 = Em (Em ⊗ Em)` on a four-factor tensor.
pub fn em4_with<R: Ring>(t: &Tensor, norm: Normalization) -> Result<ProductChain<R>> {
    let [a, b, c, d] = t.factors() else {
        return Err(Error::WrongArity { expected: 4, actual: t.len() });
    };
    let left = em_pair::<R>(a, b, norm);
    let right = em_pair::<R>(c, d, norm);
    let mut out = Chain::zero();
    for (x, r) in left.iter() {
        for (y, s) in right.iter() {
            out.add_scaled(&em_pair::<R>(x, y, norm), &r.mul(s));
        }
    }
    Ok(out)
}

pub fn em4<R: Ring>(t: &Tensor) -> Result<ProductChain<R>> {
    em4_with(t, Normalization::Eager)
}

/// `Sh_4 = Sh + Em (Sh ⊗ Em Aw + 1 ⊗ Sh) Aw` on `(K^{×2})^{×2}`, where
/// `(1 ⊗ Sh)(a ⊗ b) = (-1)^{|a|} a ⊗ Sh b`.
pub fn sh4_with<R: Ring>(x: &ProductSimplex, norm: Normalization) -> Result<ProductChain<R>> {
    check_arity(x, 4)?;
    let mut out = sh_split::<R>(x, 2, norm, false);
    for (t, r) in aw_split::<R>(x, 2, norm).iter() {
        let [a, b] = t.factors() else { unreachable!() };
        let sh_a = sh_split::<R>(a, 1, norm, false);
        if !sh_a.is_zero() {
            let mut em_aw_b: ProductChain<R> = Chain::zero();
            for (u, s) in aw_split::<R>(b, 1, norm).iter() {
                em_aw_b.add_scaled(&em_pair::<R>(&u.factors()[0], &u.factors()[1], norm), s);
            }
            for (xa, ra) in sh_a.iter() {
                for (yb, rb) in em_aw_b.iter() {
                    out.add_scaled(&em_pair::<R>(xa, yb, norm), &r.mul(ra).mul(rb));
                }
            }
        }
        let sign = r.signed(a.dim() % 2 == 1);
        for (yb, rb) in sh_split::<R>(b, 1, norm, false).iter() {
            out.add_scaled(&em_pair::<R>(a, yb, norm), &sign.mul(rb));
        }
    }
    Ok(out)
}

pub fn sh4<R: Ring>(x: &ProductSimplex) -> Result<ProductChain<R>> {
    sh4_with(x, Normalization::Eager)
}

pub fn aw4_chain<R: Ring>(ch: &ProductChain<R>) -> Result<TensorChain<R>> {
    let mut out = Chain::zero();
    for (x, r) in ch.iter() {
        out.add_scaled(&aw4(x)?, r);
    }
    Ok(out)
}

pub fn em4_chain<R: Ring>(tc: &TensorChain<R>) -> Result<ProductChain<R>> {
    let mut out = Chain::zero();
    for (t, r) in tc.iter() {
        out.add_scaled(&em4(t)?, r);
    }
    Ok(out)
}

pub fn sh4_chain<R: Ring>(ch: &ProductChain<R>) -> Result<ProductChain<R>> {
    let mut out = Chain::zero();
    for (x, r) in ch.iter() {
        out.add_scaled(&sh4(x)?, r);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{boundary, Integer};
    use crate::complex::Simplex;

    fn s(v: &[u32]) -> Simplex {
        Simplex::new(v).unwrap()
    }

    #[test]
    fn sh4_vanishes_in_degree_zero() {
        let x = ProductSimplex::new(&[s(&[0]), s(&[1]), s(&[2]), s(&[0])]).unwrap();
        assert!(sh4::<Integer>(&x).unwrap().is_zero());
    }

    #[test]
    fn component_matches_aw4() {
        let x = ProductSimplex::diag(&Simplex::standard(4), 4);
        let full = aw4_with::<Integer>(&x, Normalization::Deferred).unwrap();
        let parts = aw4_component(&x, [1, 2, 0, 1]).unwrap();
        assert_eq!(full.coefficient(&Tensor::new(parts)), Integer::one());
        assert!(aw4_component(&x, [1, 1, 1, 0]).is_none());
    }

    #[test]
    fn wrong_arity_rejected() {
        let x = ProductSimplex::diag(&s(&[0, 1]), 2);
        assert!(aw4::<Integer>(&x).is_err());
        assert!(sh4::<Integer>(&x).is_err());
    }

    #[test]
    fn homotopy_identity_on_small_simplex() {
        let x = ProductSimplex::new(&[s(&[0, 1]), s(&[0, 1]), s(&[1, 2]), s(&[0, 2])]).unwrap();
        let one = Chain::<_, Integer>::basis(x);
        let lhs = sh4_chain(&boundary(&one)).unwrap().plus(&boundary(&sh4_chain(&one).unwrap()));
        let rhs = em4_chain(&aw4_chain(&one).unwrap()).unwrap().minus(&one);
        assert_eq!(lhs, rhs);
    }
}
