//! Dense exact matrices and Smith normal form over `Z` and `Z/2`.

use std::cmp::Ordering;
use std::fmt;

use crate::algebra::{Integer, Ring};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<R: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

pub type IntegerMatrix = Matrix<Integer>;

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![R::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = R::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<R>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix { rows: rows.len(), cols, data: rows.iter().flatten().cloned().collect() }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(&rows.iter().map(|r| r.iter().map(|&v| R::from_i64(v)).collect()).collect::<Vec<_>>())
    }

    /// Builds a matrix from its columns, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<R>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, v) in c.iter().enumerate() {
                m.data[i * m.cols + j] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<R> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        out.data[idx] = out.data[idx].add(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[R]) -> Vec<R> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = R::zero();
                for (a, b) in self.data[i * self.cols..(i + 1) * self.cols].iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn plus(&self, other: &Self) -> Self {
        assert!(self.rows == other.rows && self.cols == other.cols, "dimension mismatch");
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scale(&R::one().neg()))
    }

    pub fn scale(&self, c: &R) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn reduce<R2: Ring>(&self) -> Matrix<R2> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| R2::from_integer(&a.lift())).collect() }
    }

    /// Columns `from..to` as a new matrix.
    pub fn columns(&self, from: usize, to: usize) -> Self {
        let mut m = Self::zeros(self.rows, to - from);
        for i in 0..self.rows {
            for j in from..to {
                m.data[i * m.cols + j - from] = self.get(i, j).clone();
            }
        }
        m
    }

    /// Rows `from..to` as a new matrix.
    pub fn row_range(&self, from: usize, to: usize) -> Self {
        Matrix { rows: to - from, cols: self.cols, data: self.data[from * self.cols..to * self.cols].to_vec() }
    }

    /// Places `blocks` side by side.
    pub fn hstack(rows: usize, blocks: &[&Self]) -> Self {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "row count");
            for i in 0..rows {
                for j in 0..b.cols {
                    m.data[i * cols + off + j] = b.get(i, j).clone();
                }
            }
            off += b.cols;
        }
        m
    }

    pub fn rank(&self) -> usize {
        smith_diagonal(self).len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[dst] += k · row[src]`.
    fn add_row(&mut self, dst: usize, src: usize, k: &R) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = &self.data[src * self.cols + j];
            if !s.is_zero() {
                let v = self.data[dst * self.cols + j].add(&s.mul(k));
                self.data[dst * self.cols + j] = v;
            }
        }
    }

    /// `col[dst] += k · col[src]`.
    fn add_col(&mut self, dst: usize, src: usize, k: &R) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let s = &self.data[i * self.cols + src];
            if !s.is_zero() {
                let v = self.data[i * self.cols + dst].add(&s.mul(k));
                self.data[i * self.cols + dst] = v;
            }
        }
    }

    fn neg_row(&mut self, i: usize) {
        for j in 0..self.cols {
            self.data[i * self.cols + j] = self.data[i * self.cols + j].neg();
        }
    }

    fn neg_col(&mut self, j: usize) {
        for i in 0..self.rows {
            self.data[i * self.cols + j] = self.data[i * self.cols + j].neg();
        }
    }
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `U A V = S` with `S` diagonal, `U` and `V` invertible; inverses are tracked too.
#[derive(Clone, Debug)]
pub struct SmithForm<R: Ring> {
    pub s: Matrix<R>,
    pub u: Matrix<R>,
    pub u_inv: Matrix<R>,
    pub v: Matrix<R>,
    pub v_inv: Matrix<R>,
    pub rank: usize,
}

impl<R: Ring> SmithForm<R> {
    pub fn diagonal(&self) -> Vec<R> {
        (0..self.rank).map(|i| self.s.get(i, i).clone()).collect()
    }

    /// Columns of `V` spanning the kernel of `A`.
    pub fn kernel(&self) -> Matrix<R> {
        self.v.columns(self.rank, self.v.cols())
    }
}

struct Reducer<R: Ring> {
    a: Matrix<R>,
    track: Option<[Matrix<R>; 4]>,
}

impl<R: Ring> Reducer<R> {
    fn swap_rows(&mut self, x: usize, y: usize) {
        self.a.swap_rows(x, y);
        if let Some([u, ui, _, _]) = &mut self.track {
            u.swap_rows(x, y);
            ui.swap_cols(x, y);
        }
    }

    fn swap_cols(&mut self, x: usize, y: usize) {
        self.a.swap_cols(x, y);
        if let Some([_, _, v, vi]) = &mut self.track {
            v.swap_cols(x, y);
            vi.swap_rows(x, y);
        }
    }

    fn add_row(&mut self, dst: usize, src: usize, k: &R) {
        self.a.add_row(dst, src, k);
        if let Some([u, ui, _, _]) = &mut self.track {
            u.add_row(dst, src, k);
            ui.add_col(src, dst, &k.neg());
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, k: &R) {
        self.a.add_col(dst, src, k);
        if let Some([_, _, v, vi]) = &mut self.track {
            v.add_col(dst, src, k);
            vi.add_row(src, dst, &k.neg());
        }
    }

    fn neg_row(&mut self, i: usize) {
        self.a.neg_row(i);
        if let Some([u, ui, _, _]) = &mut self.track {
            u.neg_row(i);
            ui.neg_col(i);
        }
    }

    /// Smallest nonzero entry (Euclidean norm) in the trailing block, first in
    /// row-major order on ties.
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows {
            for j in t..self.a.cols {
                let v = self.a.get(i, j);
                if v.is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((bi, bj)) => v.norm_cmp(self.a.get(bi, bj)) == Ordering::Less,
                };
                if better {
                    best = Some((i, j));
                    if v.is_unit() {
                        return best;
                    }
                }
            }
        }
        best
    }

    fn run(&mut self) -> usize {
        let n = self.a.rows.min(self.a.cols);
        let mut t = 0;
        while t < n {
            let Some((pi, pj)) = self.pivot(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let p = self.a.get(t, t).clone();
                let mut dirty = false;
                for i in t + 1..self.a.rows {
                    let v = self.a.get(i, t).clone();
                    if v.is_zero() {
                        continue;
                    }
                    let (q, r) = v.div_rem(&p);
                    self.add_row(i, t, &q.neg());
                    dirty |= !r.is_zero();
                }
                for j in t + 1..self.a.cols {
                    let v = self.a.get(t, j).clone();
                    if v.is_zero() {
                        continue;
                    }
                    let (q, r) = v.div_rem(&p);
                    self.add_col(j, t, &q.neg());
                    dirty |= !r.is_zero();
                }
                if dirty {
                    // a smaller remainder now sits in row or column t; bring it to the corner
                    let (mut bi, mut bj) = (t, t);
                    for i in t + 1..self.a.rows {
                        if !self.a.get(i, t).is_zero() && self.a.get(i, t).norm_cmp(self.a.get(bi, bj)) == Ordering::Less {
                            (bi, bj) = (i, t);
                        }
                    }
                    for j in t + 1..self.a.cols {
                        if !self.a.get(t, j).is_zero() && self.a.get(t, j).norm_cmp(self.a.get(bi, bj)) == Ordering::Less {
                            (bi, bj) = (t, j);
                        }
                    }
                    self.swap_rows(t, bi);
                    self.swap_cols(t, bj);
                    continue;
                }
                // enforce divisibility of the trailing block by the pivot
                let mut offender = None;
                'scan: for i in t + 1..self.a.rows {
                    for j in t + 1..self.a.cols {
                        let v = self.a.get(i, j);
                        if !v.is_zero() && !v.div_rem(&p).1.is_zero() {
                            offender = Some(i);
                            break 'scan;
                        }
                    }
                }
                match offender {
                    Some(i) => self.add_row(t, i, &R::one()),
                    None => break,
                }
            }
            if self.a.get(t, t).lift().signum() < 0 {
                self.neg_row(t);
            }
            t += 1;
        }
        t
    }
}

/// Smith normal form with transformation matrices.
pub fn smith_normal_form<R: Ring>(a: &Matrix<R>) -> SmithForm<R> {
    let (m, n) = (a.rows, a.cols);
    let mut red = Reducer {
        a: a.clone(),
        track: Some([Matrix::identity(m), Matrix::identity(m), Matrix::identity(n), Matrix::identity(n)]),
    };
    let rank = red.run();
    let [u, u_inv, v, v_inv] = red.track.expect("tracked");
    SmithForm { s: red.a, u, u_inv, v, v_inv, rank }
}

/// The nonzero invariant factors only.
pub fn smith_diagonal<R: Ring>(a: &Matrix<R>) -> Vec<R> {
    let mut red = Reducer { a: a.clone(), track: None };
    let rank = red.run();
    (0..rank).map(|i| red.a.get(i, i).clone()).collect()
}

/// A basis of `{x : A x = 0}` as matrix columns.
pub fn kernel_basis<R: Ring>(a: &Matrix<R>) -> Matrix<R> {
    smith_normal_form(a).kernel()
}

/// Some `x` with `A x = b`, or `None` if the system has no solution over `R`.
pub fn solve<R: Ring>(a: &Matrix<R>, b: &[R]) -> Option<Vec<R>> {
    let snf = smith_normal_form(a);
    let ub = snf.u.mul_vec(b);
    let mut y = vec![R::zero(); a.cols];
    for (i, v) in ub.iter().enumerate() {
        if i < snf.rank {
            let (q, r) = v.div_rem(snf.s.get(i, i));
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !v.is_zero() {
            return None;
        }
    }
    Some(snf.v.mul_vec(&y))
}

/// Inverse of a square matrix invertible over `R`.
pub fn inverse<R: Ring>(a: &Matrix<R>) -> Option<Matrix<R>> {
    if a.rows != a.cols {
        return None;
    }
    let snf = smith_normal_form(a);
    if snf.rank != a.rows {
        return None;
    }
    let mut d = Matrix::zeros(a.rows, a.rows);
    for i in 0..a.rows {
        d.set(i, i, snf.s.get(i, i).unit_inverse()?);
    }
    // A = U^{-1} S V^{-1}, so A^{-1} = V S^{-1} U
    Some(snf.v.mul(&d).mul(&snf.u))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Z2;
    use proptest::prelude::*;

    fn check_snf(a: &IntegerMatrix) -> SmithForm<Integer> {
        let f = smith_normal_form(a);
        assert_eq!(f.u.mul(a).mul(&f.v), f.s);
        assert_eq!(f.u.mul(&f.u_inv), Matrix::identity(a.rows()));
        assert_eq!(f.v.mul(&f.v_inv), Matrix::identity(a.cols()));
        for i in 0..f.s.rows() {
            for j in 0..f.s.cols() {
                if i != j {
                    assert!(f.s.get(i, j).is_zero());
                }
            }
        }
        let d = f.diagonal();
        for w in d.windows(2) {
            assert!(w[1].div_rem(&w[0]).1.is_zero(), "divisibility chain");
        }
        assert!(d.iter().all(|x| x.signum() > 0));
        f
    }

    #[test]
    fn small_examples() {
        let f = check_snf(&IntegerMatrix::from_i64_rows(&[&[2]]));
        assert_eq!(f.diagonal(), vec![Integer::new(2)]);
        let id = IntegerMatrix::from_i64_rows(&[&[1, 0], &[0, 0]]);
        assert_eq!(check_snf(&id).s, id);
    }

    #[test]
    fn hollow_triangle_boundary() {
        // d_1 on edges (01),(02),(12)
        let d1 = IntegerMatrix::from_i64_rows(&[&[-1, -1, 0], &[1, 0, -1], &[0, 1, 1]]);
        let f = check_snf(&d1);
        assert_eq!(f.rank, 2);
        assert_eq!(f.diagonal(), vec![Integer::one(), Integer::one()]);
        let k = f.kernel();
        assert_eq!(k.cols(), 1);
        assert!(d1.mul(&k).is_zero());
    }

    #[test]
    fn torsion_factor() {
        let a = IntegerMatrix::from_i64_rows(&[&[2, 4], &[6, 8]]);
        let f = check_snf(&a);
        assert_eq!(f.diagonal(), vec![Integer::new(2), Integer::new(4)]);
    }

    #[test]
    fn mod2_kernel() {
        let a = Matrix::<Z2>::from_i64_rows(&[&[1, 1]]);
        let k = kernel_basis(&a);
        assert_eq!(k.column(0), vec![Z2::ONE, Z2::ONE]);
        assert_eq!(kernel_basis(&Matrix::<Z2>::identity(3)).cols(), 0);
        assert_eq!(kernel_basis(&Matrix::<Z2>::zeros(2, 2)), Matrix::identity(2));
    }

    #[test]
    fn solve_and_inverse() {
        let a = IntegerMatrix::from_i64_rows(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        let b = vec![Integer::new(3), Integer::new(2)];
        assert_eq!(a.mul_vec(&solve(&a, &b).unwrap()), b);
        assert!(solve(&IntegerMatrix::from_i64_rows(&[&[2]]), &[Integer::one()]).is_none());
        assert!(inverse(&IntegerMatrix::from_i64_rows(&[&[2]])).is_none());
    }

    proptest! {
        #[test]
        fn snf_invariants(rows in 1usize..6, cols in 1usize..6, seed in proptest::collection::vec(-6i64..7, 36)) {
            let data: Vec<Vec<Integer>> = (0..rows).map(|i| (0..cols).map(|j| Integer::new(seed[i * 6 + j])).collect()).collect();
            let a = IntegerMatrix::from_rows(&data);
            let f = check_snf(&a);
            prop_assert!(a.mul(&f.kernel()).is_zero());
            prop_assert_eq!(smith_diagonal(&a), f.diagonal());
        }
    }
}
