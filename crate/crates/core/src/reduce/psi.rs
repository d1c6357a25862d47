use super::{column_space, kernel_generators, sq2_matrix, Contraction, DualContraction};
use crate::adem::AdemEngine;
use crate::algebra::{coboundary, Cochain, Integer, Ring, Z2};
use crate::complex::{Simplex, SimplicialSet};
use crate::cup::cup_i;
use crate::linalg::Matrix;
use crate::{Error, Result};

/// One kernel generator `β` of `Sq^2` and the secondary class attached to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiClass {
    /// Coordinates of `β` in the basis of `H^q`.
    pub kernel_vector: Vec<Z2>,
    /// The mod-2 cochain `w` of degree `q + 3`.
    pub representative: Cochain<Z2>,
    /// `f*(w)`: coordinates in the basis of `H^{q+3}(K;Z/2)`, a coset representative
    /// modulo the indeterminacy.
    pub value: Vec<Z2>,
    /// Whether `δw ≡ 0 mod 2`.
    pub is_cocycle: bool,
}

/// The output of the secondary operation on `H^q(K;Z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdemResult {
    pub q: usize,
    /// Critical simplices labelling the bases of `H^q`, `H^{q+2}` and `H^{q+3}`.
    pub source_basis: Vec<Simplex>,
    pub sq2_basis: Vec<Simplex>,
    pub target_basis: Vec<Simplex>,
    /// `Sq^2 : H^q(K;Z) → H^{q+2}(K;Z/2)`.
    pub sq2: Matrix<Z2>,
    pub classes: Vec<PsiClass>,
    /// A basis of `Sq^2 H^{q+1}(K;Z)` inside `H^{q+3}(K;Z/2)`.
    pub indeterminacy: Vec<Vec<Z2>>,
}

impl AdemResult {
    pub fn kernel(&self) -> Vec<Vec<Z2>> {
        self.classes.iter().map(|c| c.kernel_vector.clone()).collect()
    }

    pub fn all_cocycles(&self) -> bool {
        self.classes.iter().all(|c| c.is_cocycle)
    }
}

fn consistency(msg: String) -> Error {
    Error::Consistency(msg)
}

/// The Adem secondary operation `Ψ_q` on `Ker Sq^2 ⊂ H^q(K;Z)` with `i = q − 2`.
///
/// For each kernel generator `β` with integral representative `c = g*(β)`:
/// `b = φ*(c ⌣_i c)`, `η = ½(c ⌣_{i+2} c + c)` and
/// `w = b ⌣_{i+1} b + b ⌣_{i+2} δb + E_{3i+3}(c) + η ⌣_{i−1} η + η ⌣_i δη` mod 2,
/// where the `η ⌣_{i−1} η` term is absent for `i = 0`.
pub fn psi(k: &SimplicialSet, q: usize) -> Result<AdemResult> {
    if q < 2 {
        return Err(Error::InvalidArgument(format!("the secondary operation needs q >= 2, got {q}")));
    }
    let contraction = Contraction::<Integer>::new(k)?;
    let dual = contraction.dual();
    let dual2 = dual.reduce::<Z2>();
    let sq2 = sq2_matrix(k, &dual, q)?;
    let indeterminacy = column_space(&sq2_matrix(k, &dual, q + 1)?);

    let mut classes = Vec::new();
    for beta in kernel_generators(&sq2) {
        let lift: Vec<Integer> = beta.iter().map(|v| Integer::from(v.bit() as i64)).collect();
        let c = dual.g_star(k, q, &lift)?;
        let w = secondary_cochain(k, &dual2, &c)?;
        let is_cocycle = coboundary(k, &w).is_zero();
        let value = dual2.f_star(&w);
        classes.push(PsiClass { kernel_vector: beta, representative: w, value, is_cocycle });
    }

    let labels = |n: usize| contraction.generators(k, n).into_iter().cloned().collect::<Vec<_>>();
    Ok(AdemResult {
        q,
        source_basis: labels(q),
        sq2_basis: labels(q + 2),
        target_basis: labels(q + 3),
        sq2,
        classes,
        indeterminacy,
    })
}

/// The mod-2 cochain `w` of degree `q + 3` for an integral `q`-cocycle `c` whose class
/// lies in the kernel of `Sq^2`, given the mod-2 dual contraction.
pub fn secondary_cochain(k: &SimplicialSet, dual2: &DualContraction<Z2>, c: &Cochain<Integer>) -> Result<Cochain<Z2>> {
    let q = c.degree();
    let i = q.checked_sub(2).ok_or_else(|| Error::InvalidArgument(format!("the secondary operation needs q >= 2, got {q}")))?;
    if !coboundary(k, c).is_zero() {
        return Err(Error::NotACocycle { degree: q });
    }
    let c2 = c.reduce::<Z2>();
    let square = cup_i(k, &c2, &c2, i)?;
    if !coboundary(k, &square).is_zero() {
        return Err(consistency(format!("c ⌣_{i} c is not a mod-2 cocycle")));
    }
    if dual2.f_star(&square).iter().any(|v| !v.is_zero()) {
        return Err(consistency(format!("c ⌣_{i} c is not a coboundary")));
    }
    let b = dual2.phi_star(k, &square)?;
    let db = coboundary(k, &b);
    if db != square {
        return Err(consistency(format!("δb ≠ c ⌣_{i} c")));
    }

    let sum = cup_i(k, c, c, q)?.plus(c)?;
    let halves = sum
        .values()
        .iter()
        .map(Integer::half)
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| consistency(format!("c ⌣_{q} c + c has an odd entry")))?;
    let eta = Cochain::from_values(k, q, halves)?.reduce::<Z2>();
    let d_eta = coboundary(k, &eta);

    let mut w = cup_i(k, &b, &b, i + 1)?;
    w = w.plus(&cup_i(k, &b, &db, i + 2)?)?;
    if k.count(q + 3) > 0 {
        w = w.plus(&AdemEngine::global().adem_e_cochain(k, c)?)?;
    }
    if i > 0 {
        w = w.plus(&cup_i(k, &eta, &eta, i - 1)?)?;
    }
    w.plus(&cup_i(k, &eta, &d_eta, i)?)
}
