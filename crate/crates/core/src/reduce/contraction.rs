use std::collections::{BTreeMap, BTreeSet};

use super::boundary_matrix;
use crate::algebra::{Cochain, Integer, Ring, RingKind};
use crate::complex::{Simplex, SimplicialSet};
use crate::linalg::{smith_diagonal, Matrix};
use crate::{Error, Result};

type Sparse<R> = BTreeMap<usize, R>;

/// `dst += k · src`, dropping entries that cancel.
fn axpy<R: Ring>(dst: &mut Sparse<R>, k: &R, src: &Sparse<R>) {
    for (&i, v) in src {
        let add = k.mul(v);
        if add.is_zero() {
            continue;
        }
        let e = dst.entry(i).or_insert_with(R::zero);
        *e = e.add(&add);
        if e.is_zero() {
            dst.remove(&i);
        }
    }
}

/// The maps of a contraction in one degree `n`.
#[derive(Clone, Debug)]
pub struct ContractionDegree<R: Ring> {
    /// Indices of the critical `n`-simplices, one per homology generator.
    pub basis: Vec<usize>,
    /// `f_n : C_n → H_n`, shape `betti × count(n)`.
    pub f: Matrix<R>,
    /// `g_n : H_n → C_n`, shape `count(n) × betti`.
    pub g: Matrix<R>,
    /// `φ_n : C_n → C_{n+1}`, shape `count(n+1) × count(n)`.
    pub phi: Matrix<R>,
}

/// A contraction `(f, g, φ)` of the normalized chain complex of `K` onto its homology,
/// with `fg = 1`, `φd + dφ = gf − 1`, `φg = 0`, `fφ = 0` and `φφ = 0`.
///
/// Built by repeatedly cancelling a unit entry of the current boundary matrix. The
/// pivot in each degree is the first unit entry in row-major order, so the result is
/// deterministic. Over `Z`, leftover non-unit entries mean torsion and abort.
#[derive(Clone, Debug)]
pub struct Contraction<R: Ring> {
    counts: Vec<usize>,
    degrees: Vec<ContractionDegree<R>>,
}

struct Reducer<R: Ring> {
    counts: Vec<usize>,
    alive: Vec<Vec<bool>>,
    /// `cols[n][b]`: the reduced boundary of the `n`-cell `b`.
    cols: Vec<Vec<Sparse<R>>>,
    /// `rows[n][a]`: the `(n+1)`-cells whose reduced boundary contains `a`.
    rows: Vec<Vec<BTreeSet<usize>>>,
    f_rows: Vec<Vec<Sparse<R>>>,
    g_cols: Vec<Vec<Sparse<R>>>,
    phi: Vec<Matrix<R>>,
}

impl<R: Ring> Reducer<R> {
    fn new(k: &SimplicialSet) -> Self {
        let counts = k.counts();
        let top = counts.len();
        let mut cols: Vec<Vec<Sparse<R>>> = counts.iter().map(|&c| vec![Sparse::new(); c]).collect();
        let mut rows: Vec<Vec<BTreeSet<usize>>> = counts.iter().map(|&c| vec![BTreeSet::new(); c]).collect();
        for n in 1..top {
            for (b, y) in k.simplices(n).iter().enumerate() {
                for i in 0..=n {
                    let a = k.index_of(&y.face_unchecked(i)).expect("face-closed");
                    let v = R::one().signed(i % 2 == 1);
                    let e = cols[n][b].entry(a).or_insert_with(R::zero);
                    *e = e.add(&v);
                    rows[n - 1][a].insert(b);
                }
            }
        }
        let unit = |c: usize| (0..c).map(|s| Sparse::from([(s, R::one())])).collect::<Vec<_>>();
        Reducer {
            alive: counts.iter().map(|&c| vec![true; c]).collect(),
            f_rows: counts.iter().map(|&c| unit(c)).collect(),
            g_cols: counts.iter().map(|&c| unit(c)).collect(),
            phi: (0..top).map(|n| Matrix::zeros(counts.get(n + 1).copied().unwrap_or(0), counts[n])).collect(),
            cols,
            rows,
            counts,
        }
    }

    /// Cancels the `(n-1)`-cell `a` against the `n`-cell `b`.
    fn cancel(&mut self, n: usize, a: usize, b: usize) {
        let lambda = self.cols[n][b][&a].clone();
        let linv = lambda.unit_inverse().expect("unit pivot");
        let col_b = std::mem::take(&mut self.cols[n][b]);
        let cofaces: Vec<(usize, R)> = self.rows[n - 1][a]
            .iter()
            .filter(|&&c| c != b)
            .map(|&c| (c, self.cols[n][c][&a].clone()))
            .collect();

        // φ ← φ + g φ' f with φ'(a) = −λ⁻¹ b
        let row_a = std::mem::take(&mut self.f_rows[n - 1][a]);
        let g_b = std::mem::take(&mut self.g_cols[n][b]);
        for (&x, mu) in &row_a {
            let s = linv.mul(mu).neg();
            for (&y, nu) in &g_b {
                let v = self.phi[n - 1].get(y, x).add(&s.mul(nu));
                self.phi[n - 1].set(y, x, v);
            }
        }

        for (c, beta) in &cofaces {
            let factor = linv.mul(beta).neg();
            let before: Vec<usize> = self.cols[n][*c].keys().copied().collect();
            axpy(&mut self.cols[n][*c], &factor, &col_b);
            for &key in col_b.keys() {
                if self.cols[n][*c].contains_key(&key) {
                    self.rows[n - 1][key].insert(*c);
                } else if before.contains(&key) {
                    self.rows[n - 1][key].remove(c);
                }
            }
            let g_c = &mut self.g_cols[n][*c];
            axpy(g_c, &factor, &g_b);
        }
        for (&key, gamma) in &col_b {
            self.rows[n - 1][key].remove(&b);
            if key != a {
                axpy(&mut self.f_rows[n - 1][key], &linv.mul(gamma).neg(), &row_a);
            }
        }
        self.rows[n - 1][a].clear();
        if n < self.rows.len() {
            for e in std::mem::take(&mut self.rows[n][b]) {
                self.cols[n + 1][e].remove(&b);
            }
        }
        self.g_cols[n - 1][a].clear();
        self.f_rows[n][b].clear();
        self.alive[n - 1][a] = false;
        self.alive[n][b] = false;
    }

    /// The first unit entry of the reduced `d_n` in row-major order.
    fn pivot(&self, n: usize) -> Option<(usize, usize)> {
        (0..self.counts[n - 1]).filter(|&a| self.alive[n - 1][a]).find_map(|a| {
            self.rows[n - 1][a].iter().find(|&&b| self.cols[n][b][&a].is_unit()).map(|&b| (a, b))
        })
    }

    fn run(&mut self) {
        for n in 1..self.counts.len() {
            while let Some((a, b)) = self.pivot(n) {
                self.cancel(n, a, b);
            }
        }
    }

    /// The first non-unit invariant factor of a leftover boundary, as `(degree, factor)`.
    fn torsion(&self) -> Option<(usize, Integer)> {
        for n in 1..self.counts.len() {
            let alive_b: Vec<usize> = (0..self.counts[n]).filter(|&b| self.alive[n][b]).collect();
            if alive_b.iter().all(|&b| self.cols[n][b].is_empty()) {
                continue;
            }
            let alive_a: Vec<usize> = (0..self.counts[n - 1]).filter(|&a| self.alive[n - 1][a]).collect();
            let rows: Vec<Vec<R>> = alive_a
                .iter()
                .map(|a| alive_b.iter().map(|&b| self.cols[n][b].get(a).cloned().unwrap_or_else(R::zero)).collect())
                .collect();
            let diag = smith_diagonal(&Matrix::from_rows(&rows));
            let factor = diag.iter().find(|v| !v.is_unit()).map_or_else(|| Integer::from(0), |v| v.lift().abs());
            return Some((n - 1, factor));
        }
        None
    }
}

impl<R: Ring> Contraction<R> {
    pub fn new(k: &SimplicialSet) -> Result<Self> {
        let mut red = Reducer::<R>::new(k);
        red.run();
        if let Some((degree, coefficient)) = red.torsion() {
            return Err(Error::Torsion { degree, coefficient });
        }
        let counts = red.counts.clone();
        let mut degrees = Vec::with_capacity(counts.len());
        for (n, phi) in std::mem::take(&mut red.phi).into_iter().enumerate() {
            let basis: Vec<usize> = (0..counts[n]).filter(|&s| red.alive[n][s]).collect();
            let mut f = Matrix::zeros(basis.len(), counts[n]);
            let mut g = Matrix::zeros(counts[n], basis.len());
            for (j, &s) in basis.iter().enumerate() {
                for (&x, v) in &red.f_rows[n][s] {
                    f.set(j, x, v.clone());
                }
                for (&x, v) in &red.g_cols[n][s] {
                    g.set(x, j, v.clone());
                }
            }
            degrees.push(ContractionDegree { basis, f, g, phi });
        }
        Ok(Contraction { counts, degrees })
    }

    pub fn ring(&self) -> RingKind {
        R::KIND
    }

    /// Top dimension of the underlying complex.
    pub fn dim(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn degree(&self, n: usize) -> Option<&ContractionDegree<R>> {
        self.degrees.get(n)
    }

    pub fn betti(&self, n: usize) -> usize {
        self.degrees.get(n).map_or(0, |d| d.basis.len())
    }

    pub fn bettis(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.basis.len()).collect()
    }

    /// The critical simplices labelling the homology generators in degree `n`.
    pub fn generators<'a>(&self, k: &'a SimplicialSet, n: usize) -> Vec<&'a Simplex> {
        self.degrees.get(n).map_or_else(Vec::new, |d| d.basis.iter().map(|&s| &k.simplices(n)[s]).collect())
    }

    fn count(&self, n: usize) -> usize {
        self.counts.get(n).copied().unwrap_or(0)
    }

    fn f(&self, n: usize) -> Matrix<R> {
        self.degrees.get(n).map_or_else(|| Matrix::zeros(0, self.count(n)), |d| d.f.clone())
    }

    fn g(&self, n: usize) -> Matrix<R> {
        self.degrees.get(n).map_or_else(|| Matrix::zeros(self.count(n), 0), |d| d.g.clone())
    }

    fn phi(&self, n: usize) -> Matrix<R> {
        self.degrees.get(n).map_or_else(|| Matrix::zeros(self.count(n + 1), self.count(n)), |d| d.phi.clone())
    }

    /// Verifies the five identities exactly in every degree.
    pub fn check(&self, k: &SimplicialSet) -> Result<()> {
        let fail = |what: &str, n: usize| Err(Error::Consistency(format!("{what} fails in degree {n}")));
        for n in 0..=self.dim() {
            let (f, g, phi) = (self.f(n), self.g(n), self.phi(n));
            if f.mul(&g) != Matrix::identity(self.betti(n)) {
                return fail("fg = 1", n);
            }
            let d_n = boundary_matrix::<R>(k, n);
            let d_up = boundary_matrix::<R>(k, n + 1);
            let mut lhs = d_up.mul(&phi);
            if n > 0 {
                lhs = lhs.plus(&self.phi(n - 1).mul(&d_n));
            }
            if lhs != g.mul(&f).minus(&Matrix::identity(self.count(n))) {
                return fail("φd + dφ = gf − 1", n);
            }
            if !phi.mul(&g).is_zero() {
                return fail("φg = 0", n);
            }
            if !self.f(n + 1).mul(&phi).is_zero() {
                return fail("fφ = 0", n);
            }
            if !self.phi(n + 1).mul(&phi).is_zero() {
                return fail("φφ = 0", n);
            }
        }
        Ok(())
    }

    /// Entry-wise reduction to another ring; a contraction over `Z` reduces to one over `Z/2`.
    pub fn reduce<R2: Ring>(&self) -> Contraction<R2> {
        Contraction {
            counts: self.counts.clone(),
            degrees: self
                .degrees
                .iter()
                .map(|d| ContractionDegree { basis: d.basis.clone(), f: d.f.reduce(), g: d.g.reduce(), phi: d.phi.reduce() })
                .collect(),
        }
    }

    /// The dual contraction `(f*, g*, φ*)` of the cochain complex onto cohomology.
    pub fn dual(&self) -> DualContraction<R> {
        let degrees = (0..self.counts.len())
            .map(|n| {
                let phi_star = if n == 0 {
                    Matrix::zeros(0, self.count(0))
                } else {
                    let t = self.phi(n - 1).transpose();
                    if n % 2 == 0 {
                        t.scale(&R::one().neg())
                    } else {
                        t
                    }
                };
                DualDegree { f_star: self.g(n).transpose(), g_star: self.f(n).transpose(), phi_star }
            })
            .collect();
        DualContraction { counts: self.counts.clone(), degrees }
    }
}

#[derive(Clone, Debug)]
struct DualDegree<R: Ring> {
    f_star: Matrix<R>,
    g_star: Matrix<R>,
    phi_star: Matrix<R>,
}

/// `f*_n = g_nᵀ`, `g*_n = f_nᵀ` and `φ*_n = (−1)^{n+1} φ_{n−1}ᵀ : C^n → C^{n−1}`, so that
/// `δφ* + φ*δ = 1 − g*f*` and `δφ*(c) = c` for every coboundary `c`.
#[derive(Clone, Debug)]
pub struct DualContraction<R: Ring> {
    counts: Vec<usize>,
    degrees: Vec<DualDegree<R>>,
}

impl<R: Ring> DualContraction<R> {
    pub fn betti(&self, n: usize) -> usize {
        self.degrees.get(n).map_or(0, |d| d.f_star.rows())
    }

    /// `f*`: coordinates of the class of `c` in the cohomology basis dual to the
    /// homology generators. Meaningful for cocycles.
    pub fn f_star(&self, c: &Cochain<R>) -> Vec<R> {
        self.degrees.get(c.degree()).map_or_else(Vec::new, |d| d.f_star.mul_vec(c.values()))
    }

    /// `g*`: a cocycle representing the class with the given coordinates.
    pub fn g_star(&self, k: &SimplicialSet, n: usize, coords: &[R]) -> Result<Cochain<R>> {
        match self.degrees.get(n) {
            Some(d) if coords.len() == d.g_star.cols() => Cochain::from_values(k, n, d.g_star.mul_vec(coords)),
            None if coords.is_empty() => Ok(Cochain::zero(k, n)),
            _ => Err(Error::MismatchedDimensions),
        }
    }

    /// `φ*`, lowering the degree by one; zero on `C^0`.
    pub fn phi_star(&self, k: &SimplicialSet, c: &Cochain<R>) -> Result<Cochain<R>> {
        let n = c.degree();
        if n == 0 {
            return Err(Error::InvalidArgument("φ* is not defined on 0-cochains".into()));
        }
        match self.degrees.get(n) {
            Some(d) => Cochain::from_values(k, n - 1, d.phi_star.mul_vec(c.values())),
            None => Ok(Cochain::zero(k, n - 1)),
        }
    }

    /// Number of `n`-simplices.
    pub fn count(&self, n: usize) -> usize {
        self.counts.get(n).copied().unwrap_or(0)
    }

    pub fn reduce<R2: Ring>(&self) -> DualContraction<R2> {
        DualContraction {
            counts: self.counts.clone(),
            degrees: self
                .degrees
                .iter()
                .map(|d| DualDegree { f_star: d.f_star.reduce(), g_star: d.g_star.reduce(), phi_star: d.phi_star.reduce() })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{coboundary, random_cochain, Z2};

    fn boundary_of_tetrahedron() -> SimplicialSet {
        SimplicialSet::build(&[vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]).unwrap()
    }

    #[test]
    fn triangle_contracts_to_a_point() {
        let k = SimplicialSet::build(&[vec![0, 1, 2]]).unwrap();
        let c = Contraction::<Integer>::new(&k).unwrap();
        assert_eq!(c.bettis(), vec![1, 0, 0]);
        c.check(&k).unwrap();
    }

    #[test]
    fn sphere_fundamental_cycle() {
        let k = boundary_of_tetrahedron();
        let c = Contraction::<Integer>::new(&k).unwrap();
        assert_eq!(c.bettis(), vec![1, 0, 1]);
        c.check(&k).unwrap();
        // g_2 of the generator is ±(the alternating sum of all four triangles)
        let g = c.degree(2).unwrap().g.column(0);
        let d2 = boundary_matrix::<Integer>(&k, 2);
        assert!(d2.mul_vec(&g).iter().all(Ring::is_zero));
        assert!(g.iter().all(|v| v.abs() == Integer::from(1)));
    }

    #[test]
    fn torsion_is_reported() {
        let rp2 = [
            [0, 1, 3], [0, 1, 5], [0, 2, 4], [0, 2, 5], [0, 3, 4],
            [1, 2, 3], [1, 2, 4], [1, 4, 5], [2, 3, 5], [3, 4, 5],
        ];
        let k = SimplicialSet::build(&rp2.map(|t| t.to_vec())).unwrap();
        match Contraction::<Integer>::new(&k) {
            Err(Error::Torsion { degree, coefficient }) => {
                assert_eq!(degree, 1);
                assert_eq!(coefficient, Integer::from(2));
            }
            other => panic!("expected torsion, got {other:?}"),
        }
        let c = Contraction::<Z2>::new(&k).unwrap();
        assert_eq!(c.bettis(), vec![1, 1, 1]);
        c.check(&k).unwrap();
    }

    #[test]
    fn coboundaries_are_recovered() {
        let k = SimplicialSet::build(&[(0..=4).collect()]).unwrap();
        let dual = Contraction::<Integer>::new(&k).unwrap().dual();
        for n in 0..4 {
            for seed in 0..5 {
                let c = coboundary(&k, &random_cochain::<Integer>(&k, n, seed));
                assert_eq!(coboundary(&k, &dual.phi_star(&k, &c).unwrap()), c);
                assert!(dual.f_star(&c).iter().all(Ring::is_zero));
            }
        }
    }

    #[test]
    fn reduction_mod_two_is_a_contraction() {
        let k = boundary_of_tetrahedron();
        let c = Contraction::<Integer>::new(&k).unwrap().reduce::<Z2>();
        c.check(&k).unwrap();
    }
}
