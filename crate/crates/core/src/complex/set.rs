use std::collections::BTreeSet;

use rustc_hash::FxHashMap;

use super::{Simplex, Vertex};
use crate::{Error, Result};

/// The simplicial set generated by an ordered simplicial complex.
///
/// Only the non-degenerate simplices are stored, per dimension, in lexicographic
/// order; that order is the canonical basis for chains and cochains. Degenerate
/// simplices are the non-decreasing tuples whose support is listed.
#[derive(Clone, Debug)]
pub struct SimplicialSet {
    name: String,
    maximal: Vec<Simplex>,
    simplices: Vec<Vec<Simplex>>,
    index: Vec<FxHashMap<Simplex, usize>>,
}

impl SimplicialSet {
    /// Face-closes the given strictly increasing vertex tuples.
    pub fn build(maximal: &[Vec<Vertex>]) -> Result<Self> {
        Self::with_name("", maximal)
    }

    pub fn with_name(name: impl Into<String>, maximal: &[Vec<Vertex>]) -> Result<Self> {
        if maximal.is_empty() {
            return Err(Error::EmptyComplex);
        }
        let mut given = BTreeSet::new();
        for tuple in maximal {
            if tuple.is_empty() {
                return Err(Error::EmptyComplex);
            }
            if tuple.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::NotIncreasing(tuple.clone()));
            }
            if tuple.len() > 24 {
                return Err(Error::InvalidArgument(format!(
                    "simplex of dimension {} is too large",
                    tuple.len() - 1
                )));
            }
            given.insert(tuple.clone());
        }

        let top = given.iter().map(|t| t.len()).max().unwrap_or(1) - 1;
        let mut levels: Vec<BTreeSet<Vec<Vertex>>> = vec![BTreeSet::new(); top + 1];
        for tuple in &given {
            let n = tuple.len();
            for mask in 1u32..(1u32 << n) {
                let sub: Vec<Vertex> = (0..n).filter(|k| mask >> k & 1 == 1).map(|k| tuple[k]).collect();
                levels[sub.len() - 1].insert(sub);
            }
        }

        let simplices: Vec<Vec<Simplex>> = levels
            .into_iter()
            .map(|level| level.into_iter().map(|v| Simplex::new(&v).expect("increasing")).collect())
            .collect();
        let index = simplices
            .iter()
            .map(|level| level.iter().enumerate().map(|(k, s)| (s.clone(), k)).collect())
            .collect();
        let maximal = given.into_iter().map(|v| Simplex::new(&v).expect("increasing")).collect();
        Ok(SimplicialSet { name: name.into(), maximal, simplices, index })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// The generating tuples, deduplicated and sorted.
    pub fn maximal_simplices(&self) -> &[Simplex] {
        &self.maximal
    }

    pub fn dim(&self) -> usize {
        self.simplices.len() - 1
    }

    /// Non-degenerate `d`-simplices in canonical order (empty above the dimension).
    pub fn simplices(&self, d: usize) -> &[Simplex] {
        self.simplices.get(d).map_or(&[], |v| v.as_slice())
    }

    pub fn count(&self, d: usize) -> usize {
        self.simplices(d).len()
    }

    /// Simplex counts per dimension `0..=dim`.
    pub fn counts(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn total_count(&self) -> usize {
        self.simplices.iter().map(Vec::len).sum()
    }

    /// Position of a non-degenerate simplex in the canonical basis.
    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s.dim())?.get(s).copied()
    }

    /// Whether `s` (possibly degenerate) is a simplex of this simplicial set.
    pub fn contains(&self, s: &Simplex) -> bool {
        self.index_of(&s.support()).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_of_triangle() {
        let k = SimplicialSet::build(&[vec![0, 1, 2]]).unwrap();
        assert_eq!(k.counts(), vec![3, 3, 1]);
        assert_eq!(k.simplices(1)[0], Simplex::new(&[0, 1]).unwrap());
        assert_eq!(k.simplices(1)[2], Simplex::new(&[1, 2]).unwrap());
    }

    #[test]
    fn hollow_triangle() {
        let k = SimplicialSet::build(&[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(k.counts(), vec![3, 3]);
        assert_eq!(k.count(2), 0);
    }

    #[test]
    fn tetrahedron_counts() {
        let k = SimplicialSet::build(&[vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(k.counts(), vec![4, 6, 4, 1]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(SimplicialSet::build(&[]), Err(Error::EmptyComplex)));
        assert!(matches!(SimplicialSet::build(&[vec![1, 0]]), Err(Error::NotIncreasing(_))));
        assert!(matches!(SimplicialSet::build(&[vec![1, 1]]), Err(Error::NotIncreasing(_))));
    }

    #[test]
    fn membership() {
        let k = SimplicialSet::build(&[vec![0, 1], vec![1, 2]]).unwrap();
        assert!(k.contains(&Simplex::new(&[0, 0, 1, 1]).unwrap()));
        assert!(!k.contains(&Simplex::new(&[0, 2]).unwrap()));
        assert_eq!(k.index_of(&Simplex::new(&[1, 2]).unwrap()), Some(1));
        assert_eq!(k.index_of(&Simplex::new(&[1, 1]).unwrap()), None);
    }
}
