use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Chain, Ring, RingKind, TensorChain};
use crate::complex::{Simplex, SimplicialSet};
use crate::linalg::{kernel_basis, Matrix};
use crate::{Error, Result};

/// A cochain of degree `n`: one coefficient per non-degenerate `n`-simplex, in
/// canonical order. Degenerate simplices evaluate to zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain<R: Ring> {
    degree: usize,
    values: Vec<R>,
}

impl<R: Ring> Cochain<R> {
    pub fn zero(k: &SimplicialSet, degree: usize) -> Self {
        Cochain { degree, values: vec![R::zero(); k.count(degree)] }
    }

    pub fn constant(k: &SimplicialSet, degree: usize, value: R) -> Self {
        Cochain { degree, values: vec![value; k.count(degree)] }
    }

    pub fn from_values(k: &SimplicialSet, degree: usize, values: Vec<R>) -> Result<Self> {
        if values.len() != k.count(degree) {
            return Err(Error::InvalidArgument(format!(
                "expected {} values for degree {degree}, got {}",
                k.count(degree),
                values.len()
            )));
        }
        Ok(Cochain { degree, values })
    }

    /// The dual basis element of a non-degenerate simplex.
    pub fn indicator(k: &SimplicialSet, s: &Simplex) -> Result<Self> {
        let idx = k
            .index_of(s)
            .ok_or_else(|| Error::InvalidArgument(format!("{s} is not a non-degenerate simplex of the complex")))?;
        let mut c = Self::zero(k, s.dim());
        c.values[idx] = R::one();
        Ok(c)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &[R] {
        &self.values
    }

    pub fn into_values(self) -> Vec<R> {
        self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Ring::is_zero)
    }

    /// Value on any simplex; zero on degenerate simplices, simplices outside the
    /// complex and simplices of the wrong dimension.
    pub fn value(&self, k: &SimplicialSet, s: &Simplex) -> R {
        if s.dim() != self.degree {
            return R::zero();
        }
        k.index_of(s).map_or_else(R::zero, |i| self.values[i].clone())
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(Cochain { degree: self.degree, values: self.values.iter().zip(&other.values).map(|(a, b)| a.add(b)).collect() })
    }

    pub fn scale(&self, c: &R) -> Self {
        Cochain { degree: self.degree, values: self.values.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn neg(&self) -> Self {
        self.scale(&R::one().neg())
    }

    pub fn reduce<R2: Ring>(&self) -> Cochain<R2> {
        Cochain { degree: self.degree, values: self.values.iter().map(|a| R2::from_integer(&a.lift())).collect() }
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, actual: other.degree });
        }
        if self.values.len() != other.values.len() {
            return Err(Error::InvalidArgument("cochains live on different complexes".into()));
        }
        Ok(())
    }
}

/// `δc = (-1)^{n+1} c d`.
pub fn coboundary<R: Ring>(k: &SimplicialSet, c: &Cochain<R>) -> Cochain<R> {
    let n = c.degree;
    let values = k
        .simplices(n + 1)
        .iter()
        .map(|y| {
            let mut acc = R::zero();
            for i in 0..=n + 1 {
                let idx = k.index_of(&y.face_unchecked(i)).expect("face-closed");
                acc = acc.add(&c.values[idx].signed(i % 2 == 1));
            }
            acc.signed(n % 2 == 0)
        })
        .collect();
    Cochain { degree: n + 1, values }
}

/// The pairing `c(ch)`; summands of other degrees contribute nothing.
pub fn eval<R: Ring>(k: &SimplicialSet, c: &Cochain<R>, ch: &Chain<Simplex, R>) -> R {
    let mut acc = R::zero();
    for (s, r) in ch.iter() {
        let v = c.value(k, s);
        if !v.is_zero() {
            acc = acc.add(&v.mul(r));
        }
    }
    acc
}

/// `μ(c_1 ⊗ ... ⊗ c_n)` on a tensor chain whose factors are single simplices.
/// A summand with any factor in the wrong degree contributes nothing.
pub fn tensor_eval<R: Ring>(k: &SimplicialSet, cs: &[&Cochain<R>], tc: &TensorChain<R>) -> Result<R> {
    let mut acc = R::zero();
    for (t, r) in tc.iter() {
        if t.len() != cs.len() {
            return Err(Error::WrongArity { expected: cs.len(), actual: t.len() });
        }
        let mut prod = r.clone();
        for (x, c) in t.factors().iter().zip(cs) {
            if x.arity() != 1 {
                return Err(Error::WrongArity { expected: 1, actual: x.arity() });
            }
            if x.dim() != c.degree() {
                prod = R::zero();
                break;
            }
            prod = prod.mul(&c.value(k, &x.factor(0)));
            if prod.is_zero() {
                break;
            }
        }
        acc = acc.add(&prod);
    }
    Ok(acc)
}

/// Matrix of `δ^n : C^n → C^{n+1}` in the canonical bases.
pub fn coboundary_matrix<R: Ring>(k: &SimplicialSet, n: usize) -> Matrix<R> {
    let rows = k.count(n + 1);
    let cols = k.count(n);
    let mut m = Matrix::zeros(rows, cols);
    for (r, y) in k.simplices(n + 1).iter().enumerate() {
        for i in 0..=n + 1 {
            let idx = k.index_of(&y.face_unchecked(i)).expect("face-closed");
            m.set(r, idx, R::one().signed((i + n + 1) % 2 == 1));
        }
    }
    m
}

/// Small random coefficients: bits over `Z/2`, values in `-3..=3` over `Z`.
pub(crate) fn random_scalar<R: Ring>(rng: &mut ChaCha8Rng) -> R {
    match R::KIND {
        RingKind::Mod2 => R::from_i64(rng.gen_range(0..=1)),
        RingKind::Integers => R::from_i64(rng.gen_range(-3..=3)),
    }
}

/// A cochain with independent random coefficients.
pub fn random_cochain<R: Ring>(k: &SimplicialSet, n: usize, seed: u64) -> Cochain<R> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Cochain { degree: n, values: (0..k.count(n)).map(|_| random_scalar(&mut rng)).collect() }
}

/// A random element of `Ker δ^n`: a combination of a kernel basis (computed by exact
/// elimination) with coefficients drawn as in [`random_cochain`]. Over `Z/2` this is
/// uniform on the kernel. Returns the zero cochain when the kernel is trivial.
pub fn random_cocycle<R: Ring>(k: &SimplicialSet, n: usize, seed: u64) -> Cochain<R> {
    let basis = kernel_basis(&coboundary_matrix::<R>(k, n));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coeffs: Vec<R> = (0..basis.cols()).map(|_| random_scalar(&mut rng)).collect();
    Cochain { degree: n, values: basis.mul_vec(&coeffs) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Integer, Z2};
    use crate::complex::Simplicial;

    fn delta(n: u32) -> SimplicialSet {
        SimplicialSet::build(&[(0..=n).collect()]).unwrap()
    }

    fn boundary_delta(n: u32) -> SimplicialSet {
        let all: Vec<u32> = (0..=n).collect();
        let facets: Vec<Vec<u32>> = (0..=n as usize).map(|i| [&all[..i], &all[i + 1..]].concat()).collect();
        SimplicialSet::build(&facets).unwrap()
    }

    #[test]
    fn coboundary_sign_on_interval() {
        let k = delta(1);
        let c = Cochain::<Integer>::indicator(&k, &Simplex::new(&[0]).unwrap()).unwrap();
        let dc = coboundary(&k, &c);
        assert_eq!(dc.value(&k, &Simplex::new(&[0, 1]).unwrap()), Integer::one());
    }

    #[test]
    fn constant_two_cochain_is_cocycle() {
        let k = delta(5);
        let c = Cochain::constant(&k, 2, Integer::one());
        assert!(coboundary(&k, &c).is_zero());
    }

    #[test]
    fn coboundary_squares_to_zero() {
        for k in [delta(5), boundary_delta(4)] {
            for n in 0..k.dim().saturating_sub(1) {
                let c = random_cochain::<Integer>(&k, n, 11 + n as u64);
                assert!(coboundary(&k, &coboundary(&k, &c)).is_zero());
                let c2 = random_cochain::<Z2>(&k, n, 5);
                assert!(coboundary(&k, &coboundary(&k, &c2)).is_zero());
            }
        }
    }

    #[test]
    fn coboundary_is_signed_transpose_of_boundary() {
        let k = boundary_delta(4);
        for n in 0..3 {
            let c = random_cochain::<Integer>(&k, n, 3);
            let dc = coboundary(&k, &c);
            for y in k.simplices(n + 1) {
                let d = super::super::boundary(&Chain::<_, Integer>::basis(y.clone()));
                let rhs = eval(&k, &c, &d).signed(n % 2 == 0);
                assert_eq!(dc.value(&k, y), rhs);
            }
        }
        let m = coboundary_matrix::<Integer>(&k, 1);
        let c = random_cochain::<Integer>(&k, 1, 9);
        assert_eq!(m.mul_vec(c.values()), coboundary(&k, &c).into_values());
    }

    #[test]
    fn eval_examples() {
        let k = delta(2);
        let s = Simplex::new(&[0, 1]).unwrap();
        let c = Cochain::<Integer>::indicator(&k, &s).unwrap();
        assert_eq!(eval(&k, &c, &Chain::term(s.clone(), Integer::new(3))), Integer::new(3));
        assert_eq!(eval(&k, &c, &Chain::zero()), Integer::zero());
        assert_eq!(c.value(&k, &s.degeneracy_op(0)), Integer::zero());
    }

    #[test]
    fn tensor_eval_of_constants() {
        use crate::algebra::Tensor;
        use crate::complex::ProductSimplex;
        let k = delta(3);
        let ones: Vec<Cochain<Z2>> = (0..4).map(|d| Cochain::constant(&k, [1, 0, 2, 1][d], Z2::ONE)).collect();
        let f = |v: &[u32]| ProductSimplex::new(&[Simplex::new(v).unwrap()]).unwrap();
        let t = Tensor::new([f(&[0, 1]), f(&[2]), f(&[1, 2, 3]), f(&[0, 3])]);
        let refs: Vec<&Cochain<Z2>> = ones.iter().collect();
        assert_eq!(tensor_eval(&k, &refs, &TensorChain::basis(t)).unwrap(), Z2::ONE);
    }

    #[test]
    fn random_cocycles() {
        let k = boundary_delta(3);
        let c = random_cocycle::<Z2>(&k, 2, 4);
        assert!(coboundary(&k, &c).is_zero());
        assert_eq!(c, random_cocycle::<Z2>(&k, 2, 4));
        for seed in 0..8 {
            let z = random_cocycle::<Integer>(&k, 0, seed);
            assert!(z.values().windows(2).all(|w| w[0] == w[1]));
            let one = random_cocycle::<Integer>(&k, 1, seed);
            assert!(coboundary(&k, &one).is_zero());
        }
    }
}
