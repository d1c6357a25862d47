use std::fmt;
use std::hash::Hash;

use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use super::Ring;
use crate::complex::{ProductSimplex, Simplicial};

/// A graded basis element of a chain module.
pub trait Basis: Clone + Eq + Hash + Ord + fmt::Debug + Send + Sync {
    fn degree(&self) -> usize;
    fn is_degenerate(&self) -> bool;
}

/// A finite linear combination of basis elements with no zero coefficients.
///
/// Operators in this crate only insert non-degenerate basis elements unless they are
/// explicitly asked to keep degenerate summands.
#[derive(Clone, PartialEq, Eq)]
pub struct Chain<B: Basis, R: Ring> {
    terms: FxHashMap<B, R>,
}

impl<B: Basis, R: Ring> Default for Chain<B, R> {
    fn default() -> Self {
        Chain { terms: FxHashMap::default() }
    }
}

impl<B: Basis, R: Ring> Chain<B, R> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `coeff · b`, or zero if `b` is degenerate.
    pub fn term(b: B, coeff: R) -> Self {
        let mut c = Self::zero();
        c.add_term(b, coeff);
        c
    }

    pub fn basis(b: B) -> Self {
        Self::term(b, R::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (B, R)>) -> Self {
        let mut c = Self::zero();
        for (b, r) in terms {
            c.add_term(b, r);
        }
        c
    }

    /// Adds `coeff · b`, dropping `b` when it is degenerate.
    pub fn add_term(&mut self, b: B, coeff: R) {
        if !b.is_degenerate() {
            self.add_term_raw(b, coeff);
        }
    }

    /// Adds `coeff · b` even when `b` is degenerate.
    pub fn add_term_raw(&mut self, b: B, coeff: R) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                let v = e.get().add(&coeff);
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, b: &B) -> R {
        self.terms.get(b).cloned().unwrap_or_else(R::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &R)> {
        self.terms.iter()
    }

    /// Terms in basis order, for deterministic output.
    pub fn sorted_terms(&self) -> Vec<(B, R)> {
        let mut v: Vec<(B, R)> = self.terms.iter().map(|(b, r)| (b.clone(), r.clone())).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    /// The common degree of all terms; `None` for the zero chain or a mixed chain.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Basis::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (b, r) in &other.terms {
            self.add_term_raw(b.clone(), r.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &Self, coeff: &R) {
        if coeff.is_zero() {
            return;
        }
        for (b, r) in &other.terms {
            self.add_term_raw(b.clone(), r.mul(coeff));
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut c = self.clone();
        c.add_assign(other);
        c
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut c = self.clone();
        c.add_scaled(other, &R::one().neg());
        c
    }

    pub fn scale(&self, coeff: &R) -> Self {
        let mut c = Self::zero();
        c.add_scaled(self, coeff);
        c
    }

    pub fn neg(&self) -> Self {
        self.scale(&R::one().neg())
    }

    /// Drops degenerate summands.
    pub fn normalized(&self) -> Self {
        Chain { terms: self.terms.iter().filter(|(b, _)| !b.is_degenerate()).map(|(b, r)| (b.clone(), r.clone())).collect() }
    }

    /// Extends `f` linearly.
    pub fn map_linear<B2: Basis>(&self, mut f: impl FnMut(&B) -> Chain<B2, R>) -> Chain<B2, R> {
        let mut out = Chain::zero();
        for (b, r) in &self.terms {
            out.add_scaled(&f(b), r);
        }
        out
    }

    /// Relabels the basis through `f`, which also reports a sign.
    pub fn map_basis<B2: Basis>(&self, mut f: impl FnMut(&B) -> (B2, bool)) -> Chain<B2, R> {
        let mut out = Chain::zero();
        for (b, r) in &self.terms {
            let (b2, negative) = f(b);
            out.add_term_raw(b2, r.signed(negative));
        }
        out
    }

    /// Changes coefficients through the canonical integer lift.
    pub fn reduce<R2: Ring>(&self) -> Chain<B, R2> {
        let mut out = Chain::zero();
        for (b, r) in &self.terms {
            out.add_term_raw(b.clone(), R2::from_integer(&r.lift()));
        }
        out
    }
}

impl<B: Basis, R: Ring> FromIterator<(B, R)> for Chain<B, R> {
    fn from_iter<I: IntoIterator<Item = (B, R)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

impl<B: Basis + fmt::Display, R: Ring> fmt::Debug for Chain<B, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<B: Basis + fmt::Display, R: Ring> fmt::Display for Chain<B, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (b, r)) in terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{r}·{b}")?;
        }
        Ok(())
    }
}

/// A tensor product of product simplices `x_1 ⊗ ... ⊗ x_n` with independent degrees.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tensor(SmallVec<[ProductSimplex; 4]>);

impl Tensor {
    pub fn new(factors: impl IntoIterator<Item = ProductSimplex>) -> Self {
        Tensor(factors.into_iter().collect())
    }

    pub fn pair(a: ProductSimplex, b: ProductSimplex) -> Self {
        Tensor(smallvec::smallvec![a, b])
    }

    pub fn factors(&self) -> &[ProductSimplex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Reorders factors so that factor `k` of the result is factor `perm[k]` of `self`.
    /// Returns the Koszul sign as `true` when negative.
    pub fn permute(&self, perm: &[usize]) -> (Tensor, bool) {
        assert_eq!(perm.len(), self.0.len(), "permutation length");
        let mut negative = false;
        for k in 0..perm.len() {
            for l in k + 1..perm.len() {
                if perm[k] > perm[l] && self.0[perm[k]].dim() % 2 == 1 && self.0[perm[l]].dim() % 2 == 1 {
                    negative = !negative;
                }
            }
        }
        (Tensor(perm.iter().map(|&k| self.0[k].clone()).collect()), negative)
    }
}

impl Basis for Tensor {
    fn degree(&self) -> usize {
        self.0.iter().map(ProductSimplex::dim).sum()
    }

    fn is_degenerate(&self) -> bool {
        self.0.iter().any(ProductSimplex::is_degenerate)
    }
}

impl fmt::Debug for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("⊗")?;
            }
            if x.arity() == 1 {
                write!(f, "{}", x.factor(0))?;
            } else {
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

pub type TensorChain<R> = Chain<Tensor, R>;

/// `d = Σ (-1)^i ∂_i`, dropping degenerate faces.
pub fn boundary<S: Simplicial, R: Ring>(ch: &Chain<S, R>) -> Chain<S, R> {
    let mut out = Chain::zero();
    for (x, r) in ch.iter() {
        let n = x.degree();
        if n == 0 {
            continue;
        }
        for i in 0..=n {
            out.add_term(x.face_op(i), r.signed(i % 2 == 1));
        }
    }
    out
}

/// Boundary on tensors with the Koszul sign `(-1)^{|x_1|+...+|x_{k-1}|}`.
pub fn tensor_boundary<R: Ring>(tc: &TensorChain<R>) -> TensorChain<R> {
    let mut out = Chain::zero();
    for (t, r) in tc.iter() {
        let mut before = 0;
        for (k, x) in t.factors().iter().enumerate() {
            let n = x.dim();
            if n > 0 {
                for i in 0..=n {
                    let mut f = t.0.clone();
                    f[k] = x.face_op(i);
                    out.add_term(Tensor(f), r.signed((before + i) % 2 == 1));
                }
            }
            before += n;
        }
    }
    out
}

/// Applies a factor permutation with Koszul signs to every summand.
pub fn permute_tensor_chain<R: Ring>(tc: &TensorChain<R>, perm: &[usize]) -> TensorChain<R> {
    tc.map_basis(|t| t.permute(perm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Integer, Z2};
    use crate::complex::Simplex;

    fn s(v: &[u32]) -> Simplex {
        Simplex::new(v).unwrap()
    }

    fn p1(v: &[u32]) -> ProductSimplex {
        ProductSimplex::new(&[s(v)]).unwrap()
    }

    #[test]
    fn boundary_of_triangle() {
        let d = boundary(&Chain::<_, Integer>::basis(s(&[0, 1, 2])));
        let expected = Chain::from_terms([
            (s(&[1, 2]), Integer::new(1)),
            (s(&[0, 2]), Integer::new(-1)),
            (s(&[0, 1]), Integer::new(1)),
        ]);
        assert_eq!(d, expected);
    }

    #[test]
    fn degenerate_chains_vanish() {
        let mut c = Chain::<_, Integer>::zero();
        c.add_term_raw(s(&[0, 0, 1]), Integer::one());
        assert!(boundary(&c).is_zero());
        assert!(Chain::<_, Integer>::basis(s(&[0, 0, 1])).is_zero());
    }

    #[test]
    fn boundary_squares_to_zero_on_delta4() {
        let k = crate::complex::SimplicialSet::build(&[vec![0, 1, 2, 3, 4]]).unwrap();
        for d in 0..=4 {
            for x in k.simplices(d) {
                assert!(boundary(&boundary(&Chain::<_, Integer>::basis(x.clone()))).is_zero());
                assert!(boundary(&boundary(&Chain::<_, Z2>::basis(x.clone()))).is_zero());
            }
        }
    }

    #[test]
    fn koszul_transposition() {
        let t = Tensor::pair(p1(&[0, 1]), p1(&[1, 2]));
        let (u, negative) = t.permute(&[1, 0]);
        assert!(negative);
        assert_eq!(u, Tensor::pair(p1(&[1, 2]), p1(&[0, 1])));
        let c = TensorChain::<Integer>::from_terms([(t.clone(), Integer::new(3)), (Tensor::pair(p1(&[0]), p1(&[0, 1])), Integer::one())]);
        assert_eq!(permute_tensor_chain(&permute_tensor_chain(&c, &[1, 0]), &[1, 0]), c);
        let (_, neg) = Tensor::pair(p1(&[0, 1]), p1(&[0, 1, 2])).permute(&[1, 0]);
        assert!(!neg);
    }

    #[test]
    fn tensor_boundary_squares_to_zero() {
        let t = Tensor::new([p1(&[0, 1, 2]), p1(&[1, 2]), p1(&[0, 2, 3])]);
        let c = TensorChain::<Integer>::basis(t);
        assert!(tensor_boundary(&tensor_boundary(&c)).is_zero());
    }

    #[test]
    fn chain_arithmetic() {
        let a = Chain::<_, Integer>::from_terms([(s(&[0]), Integer::new(2)), (s(&[1]), Integer::new(1))]);
        assert_eq!(a.minus(&a), Chain::zero());
        assert_eq!(a.degree(), Some(0));
        assert_eq!(a.reduce::<Z2>(), Chain::basis(s(&[1])));
        assert_eq!(a.to_string(), "2·(0) + 1·(1)");
    }
}
