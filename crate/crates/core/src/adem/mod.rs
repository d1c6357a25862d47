//! The cocyclic maps `E_{3i+3}` realizing the Adem relation `Sq²Sq² + Sq³Sq¹ = 0`
//! at cochain level:
//!
//! `(c ⌣_i c) ⌣_{i+2} (c ⌣_i c) + (c ⌣_{i+1} c) ⌣_i (c ⌣_{i+1} c) = δE_{3i+3}(c)`
//!
//! for a cocycle `c` of degree `q = i + 2`, everything mod 2.

mod bar;
mod formula;
mod group;
mod normalized;

use std::sync::{Arc, Mutex, OnceLock};

use rustc_hash::FxHashMap;

pub use bar::{bar_words, e_cases, BarWord, LetterOrder, OperatorTerm};
pub use formula::{composite_formula, FourFoldFormula};
pub use group::GroupElement;
pub use normalized::{e3_normalized, e3_normalized_cochain, eval_table, kept_positions, E3_AS_PRINTED, E3_TABLE};

use crate::algebra::{coboundary, Cochain, Ring, Z2};
use crate::complex::{Simplex, SimplicialSet};
use crate::cup::{require_cocycle, CupEngine};
use crate::ez::Normalization;
use crate::{Error, Exec, Result};

/// How a four-factor cup expression `c ⌣_a c ⌣_k c ⌣_b c` is bracketed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum CupAssociation {
    /// `(c ⌣_a c) ⌣_k (c ⌣_b c)`.
    #[default]
    Balanced,
    /// `((c ⌣_a c) ⌣_k c) ⌣_b c`.
    Left,
}

/// The summands of `E_{3i+3}`: the `ℓ` values of the composite terms and the cup
/// indices `[a, k, b]` of the four-factor cup terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdemTerms {
    pub composites: Vec<usize>,
    pub cups: Vec<[usize; 3]>,
}

/// The summand list of `E_{3i+3}`.
pub fn adem_terms(i: usize) -> AdemTerms {
    let cups = match i {
        0 => vec![[0, 1, 2]],
        1 => vec![[1, 2, 3]],
        2 => vec![[2, 3, 4], [0, 7, 2]],
        3 => vec![[3, 4, 5], [2, 7, 3], [3, 8, 1]],
        4 => vec![[4, 5, 6]],
        5 => vec![[5, 6, 7], [4, 9, 5], [4, 11, 3]],
        _ if i % 2 == 0 => {
            let mut v = vec![[i, i + 1, i + 2]];
            if ((i - 6) / 2) % 2 == 0 {
                v.push([i, i + 5, i - 2]);
            }
            v
        }
        _ => vec![[i, i + 1, i + 2], [i, i + 4, i - 1], [i, i + 5, i - 2], [i - 1, i + 6, i - 2]],
    };
    AdemTerms { composites: e_cases(i), cups }
}

/// Knobs for the conventions the formulas leave open.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct AdemConfig {
    pub order: LetterOrder,
    pub association: CupAssociation,
    pub normalization: Normalization,
}

/// Outcome of comparing both sides of the Adem relation on every simplex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Residual {
    pub checked: usize,
    pub disagreements: usize,
}

impl Residual {
    /// No simplex of the required dimension exists.
    pub fn is_vacuous(&self) -> bool {
        self.checked == 0
    }

    pub fn holds(&self) -> bool {
        self.disagreements == 0
    }
}

type FormulaKey = (usize, usize, LetterOrder, Normalization);

/// Evaluates `E_{3i+3}`.
///
/// Composite terms are natural in the simplex, so each `Ẽ_{(3i+3,ℓ)}` is computed
/// once on the standard `(i+5)`-simplex, cached, and relabelled.
#[derive(Debug)]
pub struct AdemEngine {
    config: AdemConfig,
    cup: CupEngine,
}

impl Default for AdemEngine {
    fn default() -> Self {
        Self::new(AdemConfig::default(), Exec::default())
    }
}

impl AdemEngine {
    pub fn new(config: AdemConfig, exec: Exec) -> Self {
        AdemEngine { config, cup: CupEngine::new(exec) }
    }

    /// The process-wide engine with the default conventions.
    pub fn global() -> &'static AdemEngine {
        static ENGINE: OnceLock<AdemEngine> = OnceLock::new();
        ENGINE.get_or_init(AdemEngine::default)
    }

    pub fn config(&self) -> AdemConfig {
        self.config
    }

    pub fn exec(&self) -> Exec {
        self.cup.exec()
    }

    /// `Ẽ_{(3i+3,ℓ)}` as a formula on the standard `(i+5)`-simplex. Formulas are
    /// shared by all engines; concurrent requests compute each one once.
    pub fn composite(&self, i: usize, l: usize) -> Result<Arc<FourFoldFormula>> {
        static CACHE: OnceLock<Mutex<FxHashMap<FormulaKey, Arc<FourFoldFormula>>>> = OnceLock::new();
        let key = (i, l, self.config.order, self.config.normalization);
        let mut cache = CACHE.get_or_init(Default::default).lock().expect("formula cache");
        if let Some(f) = cache.get(&key) {
            return Ok(f.clone());
        }
        let words: Vec<_> = bar_words(i, l)?
            .iter()
            .map(|w| w.operator_term().expect("bar words use generators").application_order(self.config.order))
            .collect();
        let q = i + 2;
        let f = Arc::new(composite_formula(&words, q, q + 3, self.config.normalization, self.exec())?);
        cache.insert(key, f.clone());
        Ok(f)
    }

    /// `Ẽ_{(3i+3,ℓ)}(c)` on every `(i+5)`-simplex.
    pub fn tilde_e_cochain<R: Ring>(&self, k: &SimplicialSet, i: usize, l: usize, c: &Cochain<R>) -> Result<Cochain<Z2>> {
        check_degree(i, c)?;
        require_cocycle(k, c)?;
        self.composite(i, l)?.cochain(k, &c.reduce(), self.exec())
    }

    /// `Ẽ_{(3i+3,ℓ)}(c)` on one `(i+5)`-simplex.
    pub fn tilde_e<R: Ring>(&self, k: &SimplicialSet, i: usize, l: usize, c: &Cochain<R>, x: &Simplex) -> Result<Z2> {
        check_degree(i, c)?;
        check_dim(i, x)?;
        require_cocycle(k, c)?;
        self.composite(i, l)?.eval(k, &c.reduce(), x)
    }

    /// `c ⌣_a c ⌣_k c ⌣_b c` mod 2, bracketed per the configuration. A cup index
    /// exceeding the degree of either operand gives zero.
    pub fn iterated_cup<R: Ring>(&self, k: &SimplicialSet, c: &Cochain<R>, idx: [usize; 3]) -> Result<Cochain<Z2>> {
        let c2 = c.reduce::<Z2>();
        let [a, m, b] = idx;
        match self.config.association {
            CupAssociation::Balanced => {
                let left = self.cup_or_zero(k, &c2, &c2, a)?;
                let right = self.cup_or_zero(k, &c2, &c2, b)?;
                self.cup_or_zero(k, &left, &right, m)
            }
            CupAssociation::Left => {
                let left = self.cup_or_zero(k, &c2, &c2, a)?;
                let mid = self.cup_or_zero(k, &left, &c2, m)?;
                self.cup_or_zero(k, &mid, &c2, b)
            }
        }
    }

    fn cup_or_zero(&self, k: &SimplicialSet, c: &Cochain<Z2>, c2: &Cochain<Z2>, i: usize) -> Result<Cochain<Z2>> {
        let (m, n) = (c.degree(), c2.degree());
        if i > m.min(n) {
            return Ok(Cochain::zero(k, (m + n).saturating_sub(i)));
        }
        self.cup.cup_i(k, c, c2, i)
    }

    /// `E_{3i+3}(c)` on every `(q+3)`-simplex, where `q = deg c = i + 2`.
    pub fn adem_e_cochain<R: Ring>(&self, k: &SimplicialSet, c: &Cochain<R>) -> Result<Cochain<Z2>> {
        let i = index_of(c)?;
        require_cocycle(k, c)?;
        let c2 = c.reduce::<Z2>();
        let terms = adem_terms(i);
        let mut out = Cochain::zero(k, c.degree() + 3);
        for l in terms.composites {
            out = out.plus(&self.composite(i, l)?.cochain(k, &c2, self.exec())?)?;
        }
        for idx in terms.cups {
            out = out.plus(&self.iterated_cup(k, &c2, idx)?)?;
        }
        Ok(out)
    }

    /// `E_{3i+3}(c)` on one simplex.
    pub fn adem_e<R: Ring>(&self, k: &SimplicialSet, i: usize, c: &Cochain<R>, x: &Simplex) -> Result<Z2> {
        check_degree(i, c)?;
        check_dim(i, x)?;
        let e = self.adem_e_cochain(k, c)?;
        Ok(e.value(k, x))
    }

    /// `(c ⌣_i c) ⌣_{i+2} (c ⌣_i c) + (c ⌣_{i+1} c) ⌣_i (c ⌣_{i+1} c)` mod 2.
    pub fn adem_lhs<R: Ring>(&self, k: &SimplicialSet, c: &Cochain<R>) -> Result<Cochain<Z2>> {
        let i = index_of(c)?;
        let c2 = c.reduce::<Z2>();
        let a = self.cup.cup_i(k, &c2, &c2, i)?;
        let b = self.cup.cup_i(k, &c2, &c2, i + 1)?;
        self.cup.cup_i(k, &a, &a, i + 2)?.plus(&self.cup.cup_i(k, &b, &b, i)?)
    }

    /// Compares both sides of the Adem relation on every `(q+4)`-simplex.
    pub fn adem_relation_residual<R: Ring>(&self, k: &SimplicialSet, c: &Cochain<R>) -> Result<Residual> {
        index_of(c)?;
        require_cocycle(k, c)?;
        let d = c.degree() + 4;
        if k.count(d) == 0 {
            return Ok(Residual { checked: 0, disagreements: 0 });
        }
        let lhs = self.adem_lhs(k, c)?;
        let rhs = coboundary(k, &self.adem_e_cochain(k, c)?);
        let disagreements = lhs.values().iter().zip(rhs.values()).filter(|(a, b)| a != b).count();
        Ok(Residual { checked: k.count(d), disagreements })
    }
}

fn index_of<R: Ring>(c: &Cochain<R>) -> Result<usize> {
    c.degree()
        .checked_sub(2)
        .ok_or_else(|| Error::InvalidArgument(format!("E needs a cocycle of degree >= 2, got {}", c.degree())))
}

fn check_degree<R: Ring>(i: usize, c: &Cochain<R>) -> Result<()> {
    if c.degree() != i + 2 {
        return Err(Error::DegreeMismatch { expected: i + 2, actual: c.degree() });
    }
    Ok(())
}

fn check_dim(i: usize, x: &Simplex) -> Result<()> {
    if x.dim() != i + 5 {
        return Err(Error::DegreeMismatch { expected: i + 5, actual: x.dim() });
    }
    Ok(())
}

/// `Ẽ_{(3i+3,ℓ)}(c)(x)` with the global engine.
pub fn tilde_e<R: Ring>(k: &SimplicialSet, i: usize, l: usize, c: &Cochain<R>, x: &Simplex) -> Result<Z2> {
    AdemEngine::global().tilde_e(k, i, l, c, x)
}

/// `E_{3i+3}(c)(x)` with the global engine.
pub fn adem_e<R: Ring>(k: &SimplicialSet, i: usize, c: &Cochain<R>, x: &Simplex) -> Result<Z2> {
    AdemEngine::global().adem_e(k, i, c, x)
}

/// Disagreements of the Adem relation with the global engine.
pub fn adem_relation_residual<R: Ring>(k: &SimplicialSet, c: &Cochain<R>) -> Result<Residual> {
    AdemEngine::global().adem_relation_residual(k, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{random_cocycle, Integer};
    use crate::cup::Positions;

    fn delta(n: u32) -> SimplicialSet {
        SimplicialSet::build(&[(0..=n).collect()]).unwrap()
    }

    fn pos(v: [u8; 3]) -> Positions {
        v.into_iter().collect()
    }

    #[test]
    fn term_lists() {
        let t0 = adem_terms(0);
        assert_eq!((t0.composites.len(), t0.cups.len()), (1, 1));
        let t5 = adem_terms(5);
        assert_eq!(t5.composites, vec![5]);
        assert_eq!(t5.cups.len(), 3);
        assert_eq!(adem_terms(6).cups.len(), 2);
        assert_eq!(adem_terms(8).cups.len(), 1);
        assert_eq!(adem_terms(9).composites, vec![9, 7]);
        for i in 0..20 {
            for [a, k, b] in adem_terms(i).cups {
                assert_eq!(a + k + b, 3 * i + 3, "i = {i}");
            }
        }
    }

    #[test]
    fn first_composite_is_a_single_term() {
        let engine = AdemEngine::new(AdemConfig::default(), Exec::Sequential);
        let f = engine.composite(0, 0).unwrap();
        assert_eq!(f.terms(), &[[pos([0, 2, 3]), pos([0, 1, 2]), pos([3, 4, 5]), pos([2, 3, 5])]]);
        let k = delta(5);
        let one = Cochain::constant(&k, 2, Integer::new(1));
        assert_eq!(engine.tilde_e(&k, 0, 0, &one, &Simplex::standard(5)).unwrap(), Z2::ONE);
        assert!(engine.tilde_e(&k, 0, 0, &one, &Simplex::standard(4)).is_err());
    }

    #[test]
    fn relation_holds_for_degree_two() {
        let k = delta(7);
        let engine = AdemEngine::default();
        let one = Cochain::constant(&k, 2, Integer::new(1));
        let r = engine.adem_relation_residual(&k, &one).unwrap();
        assert_eq!(r, Residual { checked: 8, disagreements: 0 });
        for seed in 0..3 {
            let c = random_cocycle::<Integer>(&k, 2, seed);
            assert!(engine.adem_relation_residual(&k, &c).unwrap().holds());
        }
        let zero = Cochain::<Integer>::zero(&k, 2);
        assert!(engine.adem_relation_residual(&k, &zero).unwrap().holds());
        assert!(engine.adem_relation_residual(&delta(5), &Cochain::<Integer>::zero(&delta(5), 2)).unwrap().is_vacuous());
    }

    #[test]
    fn left_association_breaks_the_relation() {
        let k = delta(7);
        let left =
            AdemEngine::new(AdemConfig { association: CupAssociation::Left, ..AdemConfig::default() }, Exec::default());
        let broken = (0..6).any(|seed| {
            let c = random_cocycle::<Integer>(&k, 2, seed);
            !left.adem_relation_residual(&k, &c).unwrap().holds()
        });
        assert!(broken);
    }

    #[test]
    fn normalized_table_matches_composition() {
        let k = delta(6);
        let engine = AdemEngine::default();
        for seed in 0..3 {
            let c = random_cocycle::<Integer>(&k, 2, seed);
            let e = engine.adem_e_cochain(&k, &c).unwrap();
            assert_eq!(e3_normalized_cochain(&k, &c, Exec::default()).unwrap(), e);
        }
    }

    #[test]
    fn rejects_non_cocycles_and_bad_degrees() {
        let k = delta(6);
        let c = Cochain::indicator(&k, &Simplex::new(&[0, 1, 2]).unwrap()).unwrap();
        assert!(matches!(AdemEngine::default().adem_e_cochain::<Integer>(&k, &c), Err(Error::NotACocycle { .. })));
        let c1 = Cochain::<Integer>::zero(&k, 1);
        assert!(AdemEngine::default().adem_e_cochain(&k, &c1).is_err());
    }
}
