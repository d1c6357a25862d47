use super::{shuffles, Normalization};
use crate::algebra::{Chain, Ring, Tensor, TensorChain};
use smallvec::SmallVec;

use crate::complex::{Coords, ProductSimplex, Simplicial};

pub type ProductChain<R> = Chain<ProductSimplex, R>;

fn push<B: crate::algebra::Basis, R: Ring>(out: &mut Chain<B, R>, b: B, r: R, norm: Normalization) {
    match norm {
        Normalization::Eager => out.add_term(b, r),
        Normalization::Deferred => out.add_term_raw(b, r),
    }
}

/// The product `(s_J a, s_I b)` where `stall_a[t]` (resp. `stall_b[t]`) says whether
/// step `t` of the result repeats a point of `a` (resp. `b`), i.e. `t ∈ J` (resp. `I`).
/// The degeneracy sets must be listed in increasing order, which is how both `Em` and
/// `Sh` apply them.
fn join_stalled(a: &ProductSimplex, b: &ProductSimplex, stall_a: &[bool], stall_b: &[bool]) -> ProductSimplex {
    debug_assert_eq!(stall_a.len(), stall_b.len());
    let n = a.arity() + b.arity();
    let mut coords = Coords::with_capacity(n * (stall_a.len() + 1));
    let (mut ia, mut ib) = (0, 0);
    coords.extend_from_slice(a.point(0));
    coords.extend_from_slice(b.point(0));
    for (&sa, &sb) in stall_a.iter().zip(stall_b) {
        ia += !sa as usize;
        ib += !sb as usize;
        coords.extend_from_slice(a.point(ia));
        coords.extend_from_slice(b.point(ib));
    }
    ProductSimplex::from_coords(n, coords)
}

type Steps = SmallVec<[bool; 24]>;

/// Alexander–Whitney on `K^{×h} × K^{×(n-h)}`:
/// `Σ_i (front i-face of the first part) ⊗ (back (m-i)-face of the second part)`.
pub fn aw_split<R: Ring>(x: &ProductSimplex, split: usize, norm: Normalization) -> TensorChain<R> {
    let (a, b) = (x.project(0, split), x.project(split, x.arity()));
    let m = x.dim();
    let mut out = Chain::zero();
    for i in 0..=m {
        push(&mut out, Tensor::pair(a.slice_points(0, i), b.slice_points(i, m)), R::one(), norm);
    }
    out
}

/// The single Alexander–Whitney summand with factor dimensions `(i, m - i)`.
pub fn aw_component(x: &ProductSimplex, split: usize, i: usize) -> Option<(ProductSimplex, ProductSimplex)> {
    let m = x.dim();
    if i > m {
        return None;
    }
    Some((x.project(0, split).slice_points(0, i), x.project(split, x.arity()).slice_points(i, m)))
}

/// Eilenberg–Mac Lane: `Σ_{(α,β)} (-1)^{sig} (s_β a, s_α b)`.
pub fn em_pair<R: Ring>(a: &ProductSimplex, b: &ProductSimplex, norm: Normalization) -> ProductChain<R> {
    let (p, q) = (a.dim(), b.dim());
    let mut out = Chain::zero();
    for s in shuffles(p, q).iter() {
        let mut stall_a: Steps = smallvec::smallvec![false; p + q];
        for &j in &s.beta {
            stall_a[j] = true;
        }
        let stall_b: Steps = stall_a.iter().map(|&t| !t).collect();
        push(&mut out, join_stalled(a, b, &stall_a, &stall_b), R::one().signed(s.is_odd()), norm);
    }
    out
}

/// Shih homotopy on `K^{×h} × K^{×(n-h)}`.
///
/// Sums over `0 <= q < m`, `0 <= p < m - q` and `(p+1, q)`-shuffles `(α, β)`, with
/// `m̄ = m - p - q`:
/// `(-1)^{m̄+sig+1} (s_{β+m̄} s_{m̄-1} ∂_{m-q+1..m} x, s_{α+m̄} ∂_{m̄..m-q-1} y)`.
/// With `tilde`, only summands with `q = 0` or `β_q < α_1` are kept.
pub fn sh_split<R: Ring>(x: &ProductSimplex, split: usize, norm: Normalization, tilde: bool) -> ProductChain<R> {
    let m = x.dim();
    let (a, b) = (x.project(0, split), x.project(split, x.arity()));
    let mut out = Chain::zero();
    for q in 0..m {
        let xs = a.slice_points(0, m - q);
        for p in 0..m - q {
            let mb = m - p - q;
            let mut ys = b.clone();
            for i in (mb..m - q).rev() {
                ys = ys.face_op(i);
            }
            for s in shuffles(p + 1, q).iter() {
                if tilde && q > 0 && s.beta[q - 1] >= s.alpha[0] {
                    continue;
                }
                let mut stall_x: Steps = smallvec::smallvec![false; m + 1];
                let mut stall_y: Steps = smallvec::smallvec![false; m + 1];
                stall_x[mb - 1] = true;
                for &j in &s.beta {
                    stall_x[j + mb] = true;
                }
                for &j in &s.alpha {
                    stall_y[j + mb] = true;
                }
                let negative = (mb + s.signature + 1) % 2 == 1;
                push(&mut out, join_stalled(&xs, &ys, &stall_x, &stall_y), R::one().signed(negative), norm);
            }
        }
    }
    out
}

/// `Aw` on a pair (arity split in half).
pub fn aw<R: Ring>(x: &ProductSimplex) -> TensorChain<R> {
    aw_split(x, x.arity() / 2, Normalization::Eager)
}

/// `Em` on `a ⊗ b`.
pub fn em<R: Ring>(a: &ProductSimplex, b: &ProductSimplex) -> ProductChain<R> {
    em_pair(a, b, Normalization::Eager)
}

/// `Sh` on a pair (arity split in half).
pub fn sh<R: Ring>(x: &ProductSimplex) -> ProductChain<R> {
    sh_split(x, x.arity() / 2, Normalization::Eager, false)
}

/// `S̃h`: the summands of `Sh` with `β_q < α_1` (all summands with `q = 0` included).
pub fn sh_tilde<R: Ring>(x: &ProductSimplex) -> ProductChain<R> {
    sh_split(x, x.arity() / 2, Normalization::Eager, true)
}

pub fn aw_chain<R: Ring>(ch: &ProductChain<R>) -> TensorChain<R> {
    ch.map_linear(|x| aw(x))
}

/// `Em` on a chain of two-factor tensors.
pub fn em_chain<R: Ring>(tc: &TensorChain<R>) -> ProductChain<R> {
    tc.map_linear(|t| em(&t.factors()[0], &t.factors()[1]))
}

pub fn sh_chain<R: Ring>(ch: &ProductChain<R>) -> ProductChain<R> {
    ch.map_linear(|x| sh(x))
}

/// The diagonal `Δx = (x, ..., x)` as a chain.
pub fn diag<R: Ring>(x: &crate::complex::Simplex, n: usize) -> ProductChain<R> {
    Chain::basis(ProductSimplex::diag(x, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{boundary, tensor_boundary, Integer};
    use crate::complex::Simplex;

    fn s(v: &[u32]) -> Simplex {
        Simplex::new(v).unwrap()
    }

    fn p(fs: &[&[u32]]) -> ProductSimplex {
        ProductSimplex::new(&fs.iter().map(|v| s(v)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn aw_on_edge_pair() {
        let got = aw::<Integer>(&p(&[&[0, 1], &[0, 1]]));
        let expected = TensorChain::from_terms([
            (Tensor::pair(p(&[&[0]]), p(&[&[0, 1]])), Integer::one()),
            (Tensor::pair(p(&[&[0, 1]]), p(&[&[1]])), Integer::one()),
        ]);
        assert_eq!(got, expected);
        assert_eq!(aw::<Integer>(&p(&[&[3], &[5]])), TensorChain::basis(Tensor::pair(p(&[&[3]]), p(&[&[5]]))));
    }

    #[test]
    fn em_on_edges() {
        let got = em::<Integer>(&p(&[&[0, 1]]), &p(&[&[0, 1]]));
        let expected = Chain::from_terms([
            (p(&[&[0, 1, 1], &[0, 0, 1]]), Integer::one()),
            (p(&[&[0, 0, 1], &[0, 1, 1]]), Integer::new(-1)),
        ]);
        assert_eq!(got, expected);
        assert_eq!(em::<Integer>(&p(&[&[2]]), &p(&[&[4]])), Chain::basis(p(&[&[2], &[4]])));
    }

    #[test]
    fn sh_vanishes_in_degree_zero() {
        assert!(sh::<Integer>(&p(&[&[0], &[1]])).is_zero());
    }

    #[test]
    fn homotopy_identity_on_edge() {
        let x = p(&[&[0, 1], &[0, 2]]);
        let one = Chain::<_, Integer>::basis(x.clone());
        let lhs = sh_chain(&boundary(&one)).plus(&boundary(&sh_chain(&one)));
        let rhs = em_chain(&aw_chain(&one)).minus(&one);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn aw_is_chain_map() {
        let x = p(&[&[0, 1, 2], &[0, 1, 3]]);
        let one = Chain::<_, Integer>::basis(x);
        assert_eq!(aw_chain(&boundary(&one)), tensor_boundary(&aw_chain(&one)));
    }

    #[test]
    fn component_matches_sum() {
        let x = p(&[&[0, 1, 2, 3], &[1, 2, 2, 3]]);
        for i in 0..=3 {
            let (a, b) = aw_component(&x, 1, i).unwrap();
            let full = aw_split::<Integer>(&x, 1, Normalization::Deferred);
            assert_eq!(full.coefficient(&Tensor::pair(a, b)), Integer::one());
        }
        assert!(aw_component(&x, 1, 4).is_none());
    }
}
