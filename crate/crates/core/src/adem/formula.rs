use rustc_hash::{FxHashMap, FxHashSet};

use crate::algebra::{Chain, Cochain, Ring, Z2};
use crate::complex::{ProductSimplex, Simplex, SimplicialSet};
use crate::cup::Positions;
use crate::ez::{aw4_component, sh4_with, Normalization, Perm, ProductChain};
use crate::{Error, Exec, Result};

/// A mod-2 sum of products `c(x∘p_1) c(x∘p_2) c(x∘p_3) c(x∘p_4)` over position tuples,
/// obtained by evaluating a four-fold composite on the standard simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourFoldFormula {
    degree: usize,
    dim: usize,
    terms: Vec<[Positions; 4]>,
}

impl FourFoldFormula {
    pub fn new(degree: usize, dim: usize, mut terms: Vec<[Positions; 4]>) -> Self {
        terms.sort();
        FourFoldFormula { degree, dim, terms }
    }

    /// Degree of the cochain plugged into every factor.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Dimension of the simplices the formula is evaluated on.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &[[Positions; 4]] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Mod-2 sum of two formulas of the same shape.
    pub fn plus(&self, other: &FourFoldFormula) -> Result<FourFoldFormula> {
        if (self.degree, self.dim) != (other.degree, other.dim) {
            return Err(Error::MismatchedDimensions);
        }
        let mut set: FxHashSet<[Positions; 4]> = self.terms.iter().cloned().collect();
        for t in &other.terms {
            if !set.remove(t) {
                set.insert(t.clone());
            }
        }
        Ok(FourFoldFormula::new(self.degree, self.dim, set.into_iter().collect()))
    }

    pub fn eval(&self, k: &SimplicialSet, c: &Cochain<Z2>, x: &Simplex) -> Result<Z2> {
        if x.dim() != self.dim {
            return Err(Error::DegreeMismatch { expected: self.dim, actual: x.dim() });
        }
        if c.degree() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, actual: c.degree() });
        }
        Ok(self.eval_unchecked(k, c, x))
    }

    fn eval_unchecked(&self, k: &SimplicialSet, c: &Cochain<Z2>, x: &Simplex) -> Z2 {
        let mut acc = false;
        for t in &self.terms {
            if t.iter().all(|p| c.value(k, &x.select(p)).0) {
                acc = !acc;
            }
        }
        Z2(acc)
    }

    /// The cochain `x ↦ formula(c, x)` on every simplex of dimension `dim`.
    pub fn cochain(&self, k: &SimplicialSet, c: &Cochain<Z2>, exec: Exec) -> Result<Cochain<Z2>> {
        if c.degree() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, actual: c.degree() });
        }
        let values = exec.map(k.simplices(self.dim), |x| self.eval_unchecked(k, c, x));
        Cochain::from_values(k, self.dim, values)
    }
}

/// Evaluates `Σ_w Aw_4 ν_n Sh_4 ⋯ ν_1 Sh_4 Δ(ι)` mod 2 on the standard `dim`-simplex,
/// where each `w = (ν_1, ..., ν_n)` lists permutations in application order, and keeps
/// the `Aw_4` components whose four factors all have dimension `degree`.
///
/// Words sharing a prefix share its evaluation; each level applies `Sh_4` once to
/// every distinct simplex reached.
pub fn composite_formula(
    words: &[Vec<Perm>],
    degree: usize,
    dim: usize,
    norm: Normalization,
    exec: Exec,
) -> Result<FourFoldFormula> {
    let Some(first) = words.first() else {
        return Ok(FourFoldFormula::new(degree, dim, Vec::new()));
    };
    let n = first.len();
    if words.iter().any(|w| w.len() != n) {
        return Err(Error::InvalidArgument("operator words of different lengths".into()));
    }
    if dim + n != 4 * degree {
        return Err(Error::DegreeMismatch { expected: 4 * degree, actual: dim + n });
    }
    let mut start: ProductChain<Z2> = Chain::zero();
    start.add_term_raw(ProductSimplex::diag(&Simplex::standard(dim), 4), Z2::ONE);
    let mut nodes: Vec<(Vec<usize>, ProductChain<Z2>)> = vec![((0..words.len()).collect(), start)];

    for level in 0..n {
        let mut seen: FxHashSet<&ProductSimplex> = FxHashSet::default();
        let distinct: Vec<ProductSimplex> =
            nodes.iter().flat_map(|(_, ch)| ch.iter().map(|(y, _)| y)).filter(|y| seen.insert(y)).cloned().collect();
        let images = exec.map(&distinct, |y| sh4_with::<Z2>(y, norm));
        let mut sh: FxHashMap<&ProductSimplex, ProductChain<Z2>> = FxHashMap::default();
        for (y, img) in distinct.iter().zip(images) {
            sh.insert(y, img?);
        }

        let mut children: Vec<(Vec<usize>, Perm, usize)> = Vec::new();
        for (parent, (ids, _)) in nodes.iter().enumerate() {
            let mut groups: Vec<(Perm, Vec<usize>)> = Vec::new();
            for &w in ids {
                let p = words[w][level];
                match groups.iter_mut().find(|(q, _)| *q == p) {
                    Some((_, g)) => g.push(w),
                    None => groups.push((p, vec![w])),
                }
            }
            children.extend(groups.into_iter().map(|(p, g)| (g, p, parent)));
        }
        let chains = exec.map(&children, |(_, p, parent)| {
            let mut out: ProductChain<Z2> = Chain::zero();
            for (y, _) in nodes[*parent].1.iter() {
                for (z, _) in sh[y].iter() {
                    out.add_term_raw(p.apply(z)?, Z2::ONE);
                }
            }
            Ok(out)
        });
        let chains = chains.into_iter().collect::<Result<Vec<_>>>()?;
        nodes = children.into_iter().zip(chains).map(|((ids, _, _), ch)| (ids, ch)).collect();
    }

    let mut total: ProductChain<Z2> = Chain::zero();
    for (ids, ch) in &nodes {
        if ids.len() % 2 == 1 {
            total.add_assign(ch);
        }
    }
    Ok(FourFoldFormula::new(degree, dim, aw4_positions(&total, degree)))
}

/// The position tuples of the `[degree; 4]` components of `Aw_4` applied to a chain on
/// `Δ^{×4}`, mod 2; components with a degenerate factor vanish.
pub(crate) fn aw4_positions(ch: &ProductChain<Z2>, degree: usize) -> Vec<[Positions; 4]> {
    let mut set: FxHashSet<[Positions; 4]> = FxHashSet::default();
    for (y, r) in ch.iter() {
        if r.is_zero() {
            continue;
        }
        let Some(parts) = aw4_component(y, [degree; 4]) else { continue };
        let factors = parts.map(|p| p.factor(0));
        if factors.iter().any(Simplex::is_degenerate) {
            continue;
        }
        let key = factors.map(|f| f.vertices().iter().map(|&v| v as u8).collect::<Positions>());
        if !set.remove(&key) {
            set.insert(key);
        }
    }
    set.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ez::{aw4, sh4};

    fn pos(v: &[u8]) -> Positions {
        v.iter().copied().collect()
    }

    /// Literal per-word evaluation with no sharing.
    fn naive(words: &[Vec<Perm>], degree: usize, dim: usize) -> FxHashSet<[Positions; 4]> {
        let mut out = FxHashSet::default();
        for w in words {
            let mut ch: ProductChain<Z2> = Chain::basis(ProductSimplex::diag(&Simplex::standard(dim), 4));
            for p in w {
                let mut next = Chain::zero();
                for (y, r) in ch.iter() {
                    next.add_scaled(&p.apply_chain(&sh4::<Z2>(y).unwrap()).unwrap(), r);
                }
                ch = next;
            }
            for (y, r) in ch.iter() {
                for (t, s) in aw4::<Z2>(y).unwrap().iter() {
                    if r.mul(s).is_zero() || t.factors().iter().any(|f| f.dim() != degree) {
                        continue;
                    }
                    let key: [Positions; 4] = std::array::from_fn(|k| {
                        t.factors()[k].factor(0).vertices().iter().map(|&v| v as u8).collect()
                    });
                    if !out.remove(&key) {
                        out.insert(key);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn shared_prefixes_match_literal_evaluation() {
        let words = vec![
            vec![Perm::T, Perm::T, Perm::Z],
            vec![Perm::T, Perm::Z, Perm::T2],
            vec![Perm::Z, Perm::T2, Perm::T2],
            vec![Perm::T, Perm::T, Perm::T],
            vec![Perm::T, Perm::Z, Perm::T],
        ];
        for exec in [Exec::Sequential, Exec::Parallel] {
            let f = composite_formula(&words, 1, 1, Normalization::Eager, exec).unwrap();
            assert_eq!(f.terms().iter().cloned().collect::<FxHashSet<_>>(), naive(&words, 1, 1));
            let short: Vec<Vec<Perm>> = words.iter().map(|w| w[1..].to_vec()).collect();
            let f = composite_formula(&short, 1, 2, Normalization::Eager, exec).unwrap();
            assert_eq!(f.terms().iter().cloned().collect::<FxHashSet<_>>(), naive(&short, 1, 2));
        }
        let words = vec![vec![Perm::Z, Perm::T, Perm::T2, Perm::T], vec![Perm::T2, Perm::Z, Perm::T, Perm::T]];
        let f = composite_formula(&words, 2, 4, Normalization::Eager, Exec::default()).unwrap();
        assert_eq!(f.terms().iter().cloned().collect::<FxHashSet<_>>(), naive(&words, 2, 4));
    }

    #[test]
    fn repeated_words_cancel() {
        let w = vec![Perm::Z, Perm::T, Perm::T];
        let f = composite_formula(&[w.clone(), w], 1, 1, Normalization::Eager, Exec::Sequential).unwrap();
        assert!(f.is_empty());
    }

    #[test]
    fn deferred_normalization_agrees() {
        let words = vec![vec![Perm::Z, Perm::T, Perm::T], vec![Perm::T2, Perm::Z, Perm::T], vec![Perm::T2, Perm::T2, Perm::Z]];
        let eager = composite_formula(&words, 1, 1, Normalization::Eager, Exec::default()).unwrap();
        let deferred = composite_formula(&words, 1, 1, Normalization::Deferred, Exec::default()).unwrap();
        assert_eq!(eager, deferred);
    }

    #[test]
    fn degree_bookkeeping() {
        let w = vec![vec![Perm::Z, Perm::T]];
        assert!(composite_formula(&w, 2, 5, Normalization::Eager, Exec::Sequential).is_err());
    }

    #[test]
    fn eval_and_plus() {
        let k = SimplicialSet::build(&[(0..=5).collect()]).unwrap();
        let t = [pos(&[0, 2, 3]), pos(&[0, 1, 2]), pos(&[3, 4, 5]), pos(&[2, 3, 5])];
        let f = FourFoldFormula::new(2, 5, vec![t.clone()]);
        let one = Cochain::constant(&k, 2, Z2::ONE);
        let x = Simplex::standard(5);
        assert_eq!(f.eval(&k, &one, &x).unwrap(), Z2::ONE);
        assert_eq!(f.eval(&k, &Cochain::zero(&k, 2), &x).unwrap(), Z2::ZERO);
        assert!(f.eval(&k, &one, &Simplex::standard(4)).is_err());
        assert!(f.plus(&f).unwrap().is_empty());
    }
}
