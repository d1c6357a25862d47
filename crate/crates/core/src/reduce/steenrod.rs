use super::DualContraction;
use crate::algebra::{Cochain, Integer, Ring, Z2};
use crate::complex::SimplicialSet;
use crate::cup::{cup_product_direct, sq_cochain};
use crate::linalg::Matrix;
use crate::Result;

/// Columns `f*(op(g*(e_j)))` over the generators `e_j` of `H^q`, reduced mod 2.
fn class_matrix<R: Ring>(
    k: &SimplicialSet,
    dual: &DualContraction<R>,
    q: usize,
    target: usize,
    op: impl Fn(&Cochain<Z2>) -> Result<Cochain<Z2>>,
) -> Result<Matrix<Z2>> {
    let rows = dual.betti(target);
    let cols = dual.betti(q);
    let mod2 = dual.reduce::<Z2>();
    let mut columns = Vec::with_capacity(cols);
    for j in 0..cols {
        let e: Vec<R> = (0..cols).map(|t| if t == j { R::one() } else { R::zero() }).collect();
        let c = dual.g_star(k, q, &e)?.reduce::<Z2>();
        columns.push(mod2.f_star(&op(&c)?));
    }
    Ok(Matrix::from_columns(rows, &columns))
}

/// `Sq^i : H^q → H^{q+i}` mod 2 in the bases of the given contraction, computed as
/// `f*(g*α ⌣_{q−i} g*α)`. Zero when `i > q`.
pub fn sq_matrix<R: Ring>(k: &SimplicialSet, dual: &DualContraction<R>, q: usize, i: usize) -> Result<Matrix<Z2>> {
    class_matrix(k, dual, q, q + i, |c| sq_cochain(k, i, c))
}

/// `Sq^2 : H^q(K;Z) → H^{q+2}(K;Z/2)` from integral representatives.
pub fn sq2_matrix(k: &SimplicialSet, dual: &DualContraction<Integer>, q: usize) -> Result<Matrix<Z2>> {
    sq_matrix(k, dual, q, 2)
}

/// The cup square `α ↦ α ⌣ α : H^q → H^{2q}` mod 2, using front and back faces.
pub fn cup_square_matrix<R: Ring>(k: &SimplicialSet, dual: &DualContraction<R>, q: usize) -> Result<Matrix<Z2>> {
    class_matrix(k, dual, q, 2 * q, |c| Ok(cup_product_direct(k, c, c)))
}

/// Row echelon form over `Z/2`: the reduced rows and the pivot column of each.
fn echelon(m: &Matrix<Z2>) -> (Vec<Vec<bool>>, Vec<usize>) {
    let mut rows: Vec<Vec<bool>> = (0..m.rows()).map(|i| m.row(i).iter().map(|v| v.0).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..m.cols() {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][col]) else { continue };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[col] {
                row.iter_mut().zip(&pivot).for_each(|(a, b)| *a ^= b);
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// A basis of the kernel of a mod-2 matrix by Gaussian elimination, one vector per
/// free column.
pub fn kernel_generators(m: &Matrix<Z2>) -> Vec<Vec<Z2>> {
    let (rows, pivots) = echelon(m);
    (0..m.cols())
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Z2::ZERO; m.cols()];
            v[free] = Z2::ONE;
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = Z2(row[free]);
            }
            v
        })
        .collect()
}

/// A basis of the column space: the pivot columns of the matrix.
pub fn column_space(m: &Matrix<Z2>) -> Vec<Vec<Z2>> {
    echelon(m).1.into_iter().map(|c| m.column(c)).collect()
}
