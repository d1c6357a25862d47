//! Simplicial sets generated by ordered simplicial complexes.
//!
//! A `q`-simplex is a non-decreasing vertex tuple whose support is a face of the
//! complex; `∂_i` deletes position `i` and `s_i` repeats it, so the simplicial
//! identities hold by construction.

mod product;
mod set;
mod simplex;
mod word;

pub(crate) use product::Coords;
pub use product::ProductSimplex;
pub use set::SimplicialSet;
pub use simplex::{Simplex, Vertex};
pub use word::{Operator, OperatorWord};

use crate::algebra::Basis;

/// Basis elements that carry face and degeneracy operators.
///
/// `face_op` and `degeneracy_op` panic on out-of-range indices; the checked
/// inherent methods on [`Simplex`] and [`ProductSimplex`] return errors instead.
pub trait Simplicial: Basis {
    fn face_op(&self, i: usize) -> Self;
    fn degeneracy_op(&self, i: usize) -> Self;
}

impl Basis for Simplex {
    fn degree(&self) -> usize {
        self.dim()
    }

    fn is_degenerate(&self) -> bool {
        Simplex::is_degenerate(self)
    }
}

impl Simplicial for Simplex {
    fn face_op(&self, i: usize) -> Self {
        self.face_unchecked(i)
    }

    fn degeneracy_op(&self, i: usize) -> Self {
        self.degeneracy_unchecked(i)
    }
}

impl Basis for ProductSimplex {
    fn degree(&self) -> usize {
        self.dim()
    }

    fn is_degenerate(&self) -> bool {
        ProductSimplex::is_degenerate(self)
    }
}

impl Simplicial for ProductSimplex {
    fn face_op(&self, i: usize) -> Self {
        self.face_unchecked(i)
    }

    fn degeneracy_op(&self, i: usize) -> Self {
        self.degeneracy_unchecked(i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_simplices(top: usize, n_vertices: u32) -> Vec<Simplex> {
        // every non-decreasing tuple of length <= top+1 over n_vertices
        let mut out = Vec::new();
        let mut frontier: Vec<Vec<Vertex>> = (0..n_vertices).map(|v| vec![v]).collect();
        for _ in 0..=top {
            let mut next = Vec::new();
            for t in &frontier {
                out.push(Simplex::new(t).unwrap());
                for v in *t.last().unwrap()..n_vertices {
                    let mut u = t.clone();
                    u.push(v);
                    next.push(u);
                }
            }
            frontier = next;
        }
        out
    }

    #[test]
    fn simplicial_identities_on_delta5() {
        for x in all_simplices(5, 6) {
            let n = x.dim();
            for i in 0..=n {
                for j in 0..=n {
                    if n >= 2 && i < j {
                        assert_eq!(x.face_op(j).face_op(i), x.face_op(i).face_op(j - 1));
                    }
                    if i <= j {
                        assert_eq!(x.degeneracy_op(j).degeneracy_op(i), x.degeneracy_op(i).degeneracy_op(j + 1));
                    }
                }
                for j in 0..=n {
                    let sj = x.degeneracy_op(j);
                    if i < j {
                        assert_eq!(sj.face_op(i), x.face_op(i).degeneracy_op(j - 1));
                    }
                    if i > j + 1 {
                        assert_eq!(sj.face_op(i), x.face_op(i - 1).degeneracy_op(j));
                    }
                }
                assert_eq!(x.degeneracy_op(i).face_op(i), x);
                assert_eq!(x.degeneracy_op(i).face_op(i + 1), x);
            }
        }
    }

    #[test]
    fn product_degeneracy_is_common_repeat() {
        let simplices = all_simplices(4, 3);
        for a in &simplices {
            for b in simplices.iter().filter(|b| b.dim() == a.dim()) {
                let p = ProductSimplex::new(&[a.clone(), b.clone()]).unwrap();
                let common = (0..a.dim()).any(|k| {
                    a.vertices()[k] == a.vertices()[k + 1] && b.vertices()[k] == b.vertices()[k + 1]
                });
                assert_eq!(p.is_degenerate(), common);
            }
        }
    }
}
