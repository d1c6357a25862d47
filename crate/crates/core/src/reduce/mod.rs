//! Homology, the contraction of the chain complex onto homology, Steenrod square
//! matrices and the Adem secondary operation.

mod contraction;
mod psi;
mod steenrod;

use std::fmt;

pub use contraction::{Contraction, ContractionDegree, DualContraction};
pub use psi::{psi, secondary_cochain, AdemResult, PsiClass};
pub use steenrod::{column_space, cup_square_matrix, kernel_generators, sq2_matrix, sq_matrix};

use crate::algebra::{Integer, Ring, RingKind, Z2};
use crate::complex::SimplicialSet;
use crate::linalg::{smith_diagonal, Matrix};

/// Matrix of `d_n = Σ (−1)^i ∂_i : C_n → C_{n−1}`; `d_0` has no rows.
pub fn boundary_matrix<R: Ring>(k: &SimplicialSet, n: usize) -> Matrix<R> {
    if n == 0 {
        return Matrix::zeros(0, k.count(0));
    }
    let mut m: Matrix<R> = Matrix::zeros(k.count(n - 1), k.count(n));
    for (b, y) in k.simplices(n).iter().enumerate() {
        for i in 0..=n {
            let a = k.index_of(&y.face_unchecked(i)).expect("face-closed");
            let v = m.get(a, b).add(&R::one().signed(i % 2 == 1));
            m.set(a, b, v);
        }
    }
    m
}

/// One homology group: free rank and torsion coefficients (always empty over `Z/2`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<Integer>,
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.betti > 0 {
            parts.push(if self.betti == 1 { "Z".to_string() } else { format!("Z^{}", self.betti) });
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// `H_n(K)` for `n = 0..=dim`, from the invariant factors of the boundary matrices.
pub fn homology(k: &SimplicialSet, ring: RingKind) -> Vec<HomologyGroup> {
    match ring {
        RingKind::Integers => homology_over::<Integer>(k),
        RingKind::Mod2 => homology_over::<Z2>(k),
    }
}

fn homology_over<R: Ring>(k: &SimplicialSet) -> Vec<HomologyGroup> {
    let top = k.dim();
    let diags: Vec<Vec<R>> = (0..=top + 1).map(|n| smith_diagonal(&boundary_matrix::<R>(k, n))).collect();
    (0..=top)
        .map(|n| {
            let betti = k.count(n) - diags[n].len() - diags[n + 1].len();
            let torsion = diags[n + 1].iter().filter(|v| !v.is_unit()).map(|v| v.lift().abs()).collect();
            HomologyGroup { betti, torsion }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hollow_triangle_boundary_has_rank_two() {
        let k = SimplicialSet::build(&[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let d1 = boundary_matrix::<Integer>(&k, 1);
        assert_eq!(smith_diagonal(&d1), vec![Integer::from(1); 2]);
        let h = homology(&k, RingKind::Integers);
        assert_eq!(h.iter().map(|g| g.betti).collect::<Vec<_>>(), vec![1, 1]);
    }

    #[test]
    fn simplex_is_acyclic() {
        let k = SimplicialSet::build(&[(0..=3).collect()]).unwrap();
        let h = homology(&k, RingKind::Integers);
        assert_eq!(h.iter().map(|g| g.betti).collect::<Vec<_>>(), vec![1, 0, 0, 0]);
        assert!(h.iter().all(|g| g.torsion.is_empty()));
    }

    #[test]
    fn display() {
        let g = HomologyGroup { betti: 2, torsion: vec![Integer::from(2)] };
        assert_eq!(g.to_string(), "Z^2 + Z/2");
        assert_eq!(HomologyGroup { betti: 0, torsion: vec![] }.to_string(), "0");
    }
}
