//! Cup-i products `c ⌣_i c' = μ(c ⊗ c') D_i Δ` with `D_i = Aw (t Sh)^i`, and
//! Steenrod squares `Sq^i [c] = [c ⌣_{j-i} c]`.
//!
//! `D_i Δ` is natural, so it is computed once on the standard simplex `Δ^d` and the
//! resulting position formula is relabelled through every `d`-simplex of a complex.

use std::sync::{Arc, OnceLock, RwLock};

use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::algebra::{coboundary, Chain, Cochain, Integer, Ring, TensorChain, Z2};
use crate::complex::{ProductSimplex, Simplex, SimplicialSet};
use crate::ez::{aw_split, sh_split, Normalization, Perm};
use crate::{Error, Exec, Result};

pub(crate) type Positions = SmallVec<[u8; 12]>;

/// One summand `coeff · (x∘front) ⊗ (x∘back)` of `D_i Δ(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CupTerm {
    pub front: Positions,
    pub back: Positions,
    pub coeff: Integer,
}

/// `D_i Δ(ι_d)` on the standard `d`-simplex, grouped by front dimension.
#[derive(Clone, Debug)]
pub struct CupFormula {
    pub index: usize,
    pub dim: usize,
    by_front: Vec<Vec<CupTerm>>,
}

impl CupFormula {
    pub fn compute(index: usize, dim: usize) -> Self {
        let x = ProductSimplex::diag(&Simplex::standard(dim), 2);
        let chain = d_chain::<Integer>(&x, index, Normalization::Eager).expect("arity 2");
        let mut by_front: Vec<Vec<CupTerm>> = vec![Vec::new(); dim + 1];
        for (t, r) in chain.sorted_terms() {
            let pos = |k: usize| t.factors()[k].factor(0).vertices().iter().map(|&v| v as u8).collect::<Positions>();
            let front = pos(0);
            by_front[front.len() - 1].push(CupTerm { front, back: pos(1), coeff: r });
        }
        CupFormula { index, dim, by_front }
    }

    /// Summands whose front factor has dimension `m`.
    pub fn terms(&self, m: usize) -> &[CupTerm] {
        self.by_front.get(m).map_or(&[], Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.by_front.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `D_n = Aw (t Sh)^n` on a product of even arity, split in half; `t` swaps the halves.
pub fn d_chain<R: Ring>(x: &ProductSimplex, n: usize, norm: Normalization) -> Result<TensorChain<R>> {
    let arity = x.arity();
    Perm::T.indices(arity)?;
    let split = arity / 2;
    let mut ch: Chain<ProductSimplex, R> = match norm {
        Normalization::Eager => Chain::basis(x.clone()),
        Normalization::Deferred => {
            let mut c = Chain::zero();
            c.add_term_raw(x.clone(), R::one());
            c
        }
    };
    for _ in 0..n {
        let shifted = ch.map_linear(|y| sh_split::<R>(y, split, norm, false));
        ch = Perm::T.apply_chain(&shifted)?;
    }
    Ok(ch.map_linear(|y| aw_split::<R>(y, split, norm)))
}

/// Cup-i evaluation with a cache of position formulas.
///
/// The cache is shared between threads; concurrent misses may compute the same
/// formula twice, and the last insertion wins (the values are identical).
#[derive(Debug)]
pub struct CupEngine {
    exec: Exec,
    formulas: RwLock<FxHashMap<(usize, usize), Arc<CupFormula>>>,
}

impl Default for CupEngine {
    fn default() -> Self {
        Self::new(Exec::default())
    }
}

impl CupEngine {
    pub fn new(exec: Exec) -> Self {
        CupEngine { exec, formulas: RwLock::new(FxHashMap::default()) }
    }

    /// The process-wide engine used by the free functions of this module.
    pub fn global() -> &'static CupEngine {
        static ENGINE: OnceLock<CupEngine> = OnceLock::new();
        ENGINE.get_or_init(CupEngine::default)
    }

    pub fn exec(&self) -> Exec {
        self.exec
    }

    pub fn formula(&self, index: usize, dim: usize) -> Arc<CupFormula> {
        if let Some(f) = self.formulas.read().expect("formula cache").get(&(index, dim)) {
            return f.clone();
        }
        let f = Arc::new(CupFormula::compute(index, dim));
        self.formulas.write().expect("formula cache").insert((index, dim), f.clone());
        f
    }

    /// `c ⌣_i c'` in degree `m + n - i`.
    pub fn cup_i<R: Ring>(&self, k: &SimplicialSet, c: &Cochain<R>, c2: &Cochain<R>, i: usize) -> Result<Cochain<R>> {
        let (m, n) = (c.degree(), c2.degree());
        let d = cup_degree(m, n, i)?;
        let formula = self.formula(i, d);
        let terms: Vec<(&CupTerm, R)> = formula.terms(m).iter().map(|t| (t, R::from_integer(&t.coeff))).collect();
        let values = self.exec.map(k.simplices(d), |x| {
            let mut acc = R::zero();
            for (t, coeff) in &terms {
                let a = c.value(k, &x.select(&t.front));
                if a.is_zero() {
                    continue;
                }
                let b = c2.value(k, &x.select(&t.back));
                if !b.is_zero() {
                    acc = acc.add(&coeff.mul(&a).mul(&b));
                }
            }
            acc
        });
        Cochain::from_values(k, d, values)
    }
}

fn cup_degree(m: usize, n: usize, i: usize) -> Result<usize> {
    (m + n).checked_sub(i).ok_or_else(|| {
        Error::InvalidArgument(format!("cup_{i} of cochains of degrees {m} and {n} has negative degree"))
    })
}

/// `c ⌣_i c'` using the global engine.
pub fn cup_i<R: Ring>(k: &SimplicialSet, c: &Cochain<R>, c2: &Cochain<R>, i: usize) -> Result<Cochain<R>> {
    CupEngine::global().cup_i(k, c, c2, i)
}

/// `c ⌣_i c'` by applying `D_i` literally to `Δx` for every simplex, with no caching.
pub fn cup_i_direct<R: Ring>(k: &SimplicialSet, c: &Cochain<R>, c2: &Cochain<R>, i: usize) -> Result<Cochain<R>> {
    let d = cup_degree(c.degree(), c2.degree(), i)?;
    let values = k
        .simplices(d)
        .iter()
        .map(|x| {
            let ch = d_chain::<R>(&ProductSimplex::diag(x, 2), i, Normalization::Eager)?;
            let mut acc = R::zero();
            for (t, r) in ch.iter() {
                let a = c.value(k, &t.factors()[0].factor(0));
                let b = c2.value(k, &t.factors()[1].factor(0));
                acc = acc.add(&r.mul(&a).mul(&b));
            }
            Ok(acc)
        })
        .collect::<Result<Vec<R>>>()?;
    Cochain::from_values(k, d, values)
}

/// The cup product from front and back faces: `(c ⌣ c')(x) = c(x_0..x_m) c'(x_m..x_{m+n})`.
pub fn cup_product_direct<R: Ring>(k: &SimplicialSet, c: &Cochain<R>, c2: &Cochain<R>) -> Cochain<R> {
    let (m, n) = (c.degree(), c2.degree());
    let values = k
        .simplices(m + n)
        .iter()
        .map(|x| {
            let v = x.vertices();
            let front = Simplex::new(&v[..=m]).expect("face");
            let back = Simplex::new(&v[m..]).expect("face");
            c.value(k, &front).mul(&c2.value(k, &back))
        })
        .collect();
    Cochain::from_values(k, m + n, values).expect("sized by complex")
}

pub(crate) fn require_cocycle<R: Ring>(k: &SimplicialSet, c: &Cochain<R>) -> Result<()> {
    if coboundary(k, c).is_zero() {
        Ok(())
    } else {
        Err(Error::NotACocycle { degree: c.degree() })
    }
}

/// `Sq^i` on a cocycle of degree `j`: `c ⌣_{j-i} c` mod 2, of degree `j + i`.
/// Zero for `i > j`.
pub fn sq_cochain<R: Ring>(k: &SimplicialSet, i: usize, c: &Cochain<R>) -> Result<Cochain<Z2>> {
    let c2 = c.reduce::<Z2>();
    require_cocycle(k, &c2)?;
    let j = c.degree();
    if i > j {
        return Ok(Cochain::zero(k, j + i));
    }
    cup_i(k, &c2, &c2, j - i)
}

/// `δ(c ⌣_i c') + c ⌣_{i-1} c' + c' ⌣_{i-1} c + δc ⌣_i c' + c ⌣_i δc'` mod 2.
pub fn eq1_residual<R: Ring>(k: &SimplicialSet, c: &Cochain<R>, c2: &Cochain<R>, i: usize) -> Result<Cochain<Z2>> {
    if i == 0 {
        return Err(Error::InvalidArgument("the coboundary relation needs i >= 1".into()));
    }
    let (a, b) = (c.reduce::<Z2>(), c2.reduce::<Z2>());
    let mut r = coboundary(k, &cup_i(k, &a, &b, i)?);
    r = r.plus(&cup_i(k, &a, &b, i - 1)?)?;
    r = r.plus(&cup_i(k, &b, &a, i - 1)?)?;
    r = r.plus(&cup_i(k, &coboundary(k, &a), &b, i)?)?;
    r = r.plus(&cup_i(k, &a, &coboundary(k, &b), i)?)?;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{random_cochain, random_cocycle};

    fn delta(n: u32) -> SimplicialSet {
        SimplicialSet::build(&[(0..=n).collect()]).unwrap()
    }

    #[test]
    fn cup_zero_on_triangle() {
        let k = delta(2);
        let c = random_cochain::<Integer>(&k, 1, 1);
        let c2 = random_cochain::<Integer>(&k, 1, 2);
        let got = cup_i(&k, &c, &c2, 0).unwrap();
        let e = |v: &[u32]| Simplex::new(v).unwrap();
        let expected = c.value(&k, &e(&[0, 1])).mul(&c2.value(&k, &e(&[1, 2])));
        assert_eq!(got.value(&k, &e(&[0, 1, 2])), expected);
    }

    #[test]
    fn top_cup_is_pointwise_square() {
        for q in 0..=2u32 {
            let k = delta(q + 1);
            for seed in 0..4 {
                let c = random_cochain::<Z2>(&k, q as usize, seed);
                let sq = cup_i(&k, &c, &c, q as usize).unwrap();
                assert_eq!(sq, Cochain::from_values(&k, q as usize, c.values().iter().map(|v| v.mul(v)).collect()).unwrap());
            }
        }
    }

    #[test]
    fn cached_and_direct_paths_agree() {
        let k = delta(4);
        for (m, n, i) in [(1, 2, 0), (2, 2, 1), (2, 1, 1), (2, 2, 2), (3, 2, 1)] {
            let c = random_cochain::<Integer>(&k, m, 10 + i as u64);
            let c2 = random_cochain::<Integer>(&k, n, 20 + i as u64);
            assert_eq!(cup_i(&k, &c, &c2, i).unwrap(), cup_i_direct(&k, &c, &c2, i).unwrap());
        }
    }

    #[test]
    fn cup_zero_matches_face_formula() {
        let k = delta(4);
        for (m, n) in [(0, 2), (1, 1), (2, 2), (1, 3)] {
            let c = random_cochain::<Integer>(&k, m, 3);
            let c2 = random_cochain::<Integer>(&k, n, 4);
            assert_eq!(cup_i(&k, &c, &c2, 0).unwrap(), cup_product_direct(&k, &c, &c2));
        }
    }

    #[test]
    fn nullity_above_degrees() {
        let k = delta(5);
        let c = random_cochain::<Integer>(&k, 1, 5);
        let c2 = random_cochain::<Integer>(&k, 3, 6);
        assert!(cup_i(&k, &c, &c2, 2).unwrap().is_zero());
        assert!(cup_i(&k, &c, &c2, 3).unwrap().is_zero());
        assert!(cup_i(&k, &c, &c2, 5).is_err());
    }

    #[test]
    fn squares() {
        let k = delta(4);
        let c = random_cocycle::<Integer>(&k, 2, 8);
        assert_eq!(sq_cochain(&k, 2, &c).unwrap(), cup_i(&k, &c.reduce(), &c.reduce(), 0).unwrap());
        let high = sq_cochain(&k, 3, &c).unwrap();
        assert!(high.is_zero() && high.degree() == 5);
        let not_cocycle = random_cochain::<Integer>(&k, 2, 1);
        assert!(matches!(sq_cochain(&k, 1, &not_cocycle), Err(Error::NotACocycle { degree: 2 })));
    }

    #[test]
    fn coboundary_relation_on_small_cases() {
        let k = delta(4);
        for i in 1..=2 {
            let c = random_cochain::<Z2>(&k, 2, i as u64);
            let c2 = random_cochain::<Z2>(&k, 1, 7 + i as u64);
            assert!(eq1_residual(&k, &c, &c2, i).unwrap().is_zero());
        }
        assert!(eq1_residual(&k, &random_cochain::<Z2>(&k, 1, 0), &random_cochain::<Z2>(&k, 1, 0), 0).is_err());
    }
}
