use std::fmt;

use smallvec::SmallVec;

use crate::{Error, Result};

pub type Vertex = u32;

pub(crate) type Vertices = SmallVec<[Vertex; 8]>;

/// A simplex of the simplicial set generated by an ordered complex: a non-decreasing
/// tuple of vertex ids. Repeated adjacent vertices mark a degenerate simplex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vertices);

impl Simplex {
    pub fn new(vertices: &[Vertex]) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidArgument("a simplex needs at least one vertex".into()));
        }
        if vertices.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::NotMonotone(vertices.to_vec()));
        }
        Ok(Simplex(SmallVec::from_slice(vertices)))
    }

    pub(crate) fn from_vertices_unchecked(vertices: Vertices) -> Self {
        debug_assert!(!vertices.is_empty() && vertices.windows(2).all(|w| w[0] <= w[1]));
        Simplex(vertices)
    }

    /// The standard simplex `(0, 1, ..., d)`.
    pub fn standard(d: usize) -> Self {
        Simplex((0..=d as Vertex).collect())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_degenerate(&self) -> bool {
        self.0.windows(2).any(|w| w[0] == w[1])
    }

    /// Deletes the vertex at position `i`.
    pub fn face(&self, i: usize) -> Result<Self> {
        let dim = self.dim();
        if i > dim || dim == 0 {
            return Err(Error::IndexOutOfRange { index: i, dim });
        }
        Ok(self.face_unchecked(i))
    }

    /// Repeats the vertex at position `i`.
    pub fn degeneracy(&self, i: usize) -> Result<Self> {
        if i > self.dim() {
            return Err(Error::IndexOutOfRange { index: i, dim: self.dim() });
        }
        Ok(self.degeneracy_unchecked(i))
    }

    pub(crate) fn face_unchecked(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v.remove(i);
        Simplex(v)
    }

    pub(crate) fn degeneracy_unchecked(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v.insert(i, v[i]);
        Simplex(v)
    }

    /// The distinct vertices, i.e. the non-degenerate simplex this one degenerates from.
    pub fn support(&self) -> Simplex {
        let mut v = self.0.clone();
        v.dedup();
        Simplex(v)
    }

    /// The simplex `(x[p_0], x[p_1], ...)` for non-decreasing positions `p`.
    pub fn select(&self, positions: &[u8]) -> Simplex {
        Simplex(positions.iter().map(|&p| self.0[p as usize]).collect())
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[Vertex]) -> Simplex {
        Simplex::new(v).unwrap()
    }

    #[test]
    fn faces() {
        assert_eq!(s(&[0, 1, 2]).face(1).unwrap(), s(&[0, 2]));
        assert_eq!(s(&[0, 0, 1]).face(0).unwrap(), s(&[0, 1]));
        assert_eq!(s(&[0, 1]).face(1).unwrap(), s(&[0]));
        assert!(s(&[0, 1]).face(2).is_err());
        assert!(s(&[3]).face(0).is_err());
    }

    #[test]
    fn degeneracies() {
        assert_eq!(s(&[0, 1]).degeneracy(0).unwrap(), s(&[0, 0, 1]));
        assert_eq!(s(&[0, 1]).degeneracy(1).unwrap(), s(&[0, 1, 1]));
        assert!(s(&[0, 1]).degeneracy(0).unwrap().is_degenerate());
        assert!(s(&[0, 1]).degeneracy(2).is_err());
    }

    #[test]
    fn face_of_degeneracy_is_identity() {
        let x = s(&[0, 2, 3, 5]);
        for j in 0..=x.dim() {
            let y = x.degeneracy(j).unwrap();
            assert_eq!(y.face(j).unwrap(), x);
            assert_eq!(y.face(j + 1).unwrap(), x);
        }
    }

    #[test]
    fn rejects_decreasing() {
        assert!(matches!(Simplex::new(&[1, 0]), Err(Error::NotMonotone(_))));
        assert!(Simplex::new(&[]).is_err());
    }

    #[test]
    fn display_and_support() {
        assert_eq!(s(&[0, 0, 2]).to_string(), "(0,0,2)");
        assert_eq!(s(&[0, 0, 2, 2]).support(), s(&[0, 2]));
        assert_eq!(Simplex::standard(5).select(&[0, 2, 3]), s(&[0, 2, 3]));
    }
}
