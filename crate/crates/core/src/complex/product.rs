use std::fmt;

use smallvec::SmallVec;

use super::{Simplex, Vertex};
use crate::{Error, Result};

pub(crate) type Coords = SmallVec<[Vertex; 40]>;

/// A simplex of the cartesian power `K^{×n}`: `n` simplices of equal dimension.
///
/// Stored position-major: point `p` is the `n`-tuple of the factors' `p`-th vertices.
/// A face removes a point and a degeneracy repeats one, so the product is degenerate
/// exactly when two adjacent points coincide.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductSimplex {
    arity: u8,
    coords: Coords,
}

impl ProductSimplex {
    pub fn new(factors: &[Simplex]) -> Result<Self> {
        let Some(first) = factors.first() else {
            return Err(Error::InvalidArgument("a product needs at least one factor".into()));
        };
        if factors.len() > u8::MAX as usize {
            return Err(Error::InvalidArgument("too many factors".into()));
        }
        let dim = first.dim();
        if factors.iter().any(|f| f.dim() != dim) {
            return Err(Error::MismatchedDimensions);
        }
        let mut coords = Coords::with_capacity(factors.len() * (dim + 1));
        for p in 0..=dim {
            coords.extend(factors.iter().map(|f| f.vertices()[p]));
        }
        Ok(ProductSimplex { arity: factors.len() as u8, coords })
    }

    pub(crate) fn from_coords(arity: usize, coords: Coords) -> Self {
        debug_assert!(arity > 0 && !coords.is_empty() && coords.len() % arity == 0);
        ProductSimplex { arity: arity as u8, coords }
    }

    /// The diagonal `(x, ..., x)` with `n` factors.
    pub fn diag(x: &Simplex, n: usize) -> Self {
        assert!(n > 0 && n <= u8::MAX as usize, "arity out of range");
        let coords = x.vertices().iter().flat_map(|&v| std::iter::repeat(v).take(n)).collect();
        ProductSimplex { arity: n as u8, coords }
    }

    pub fn arity(&self) -> usize {
        self.arity as usize
    }

    pub fn dim(&self) -> usize {
        self.coords.len() / self.arity() - 1
    }

    pub fn point(&self, p: usize) -> &[Vertex] {
        let n = self.arity();
        &self.coords[p * n..(p + 1) * n]
    }

    pub fn factor(&self, k: usize) -> Simplex {
        let n = self.arity();
        Simplex::from_vertices_unchecked(self.coords.iter().skip(k).step_by(n).copied().collect())
    }

    pub fn factors(&self) -> Vec<Simplex> {
        (0..self.arity()).map(|k| self.factor(k)).collect()
    }

    pub fn is_degenerate(&self) -> bool {
        let n = self.arity();
        (0..self.dim()).any(|p| self.coords[p * n..(p + 1) * n] == self.coords[(p + 1) * n..(p + 2) * n])
    }

    pub fn face(&self, i: usize) -> Result<Self> {
        let dim = self.dim();
        if i > dim || dim == 0 {
            return Err(Error::IndexOutOfRange { index: i, dim });
        }
        Ok(self.face_unchecked(i))
    }

    pub fn degeneracy(&self, i: usize) -> Result<Self> {
        if i > self.dim() {
            return Err(Error::IndexOutOfRange { index: i, dim: self.dim() });
        }
        Ok(self.degeneracy_unchecked(i))
    }

    pub(crate) fn face_unchecked(&self, i: usize) -> Self {
        let n = self.arity();
        let mut coords = self.coords.clone();
        coords.drain(i * n..(i + 1) * n);
        ProductSimplex { arity: self.arity, coords }
    }

    pub(crate) fn degeneracy_unchecked(&self, i: usize) -> Self {
        let n = self.arity();
        let mut coords = Coords::with_capacity(self.coords.len() + n);
        coords.extend_from_slice(&self.coords[..(i + 1) * n]);
        coords.extend_from_slice(&self.coords[i * n..]);
        ProductSimplex { arity: self.arity, coords }
    }

    /// Keeps the points `first..=last`, i.e. faces removing everything outside.
    pub(crate) fn slice_points(&self, first: usize, last: usize) -> Self {
        let n = self.arity();
        ProductSimplex { arity: self.arity, coords: SmallVec::from_slice(&self.coords[first * n..(last + 1) * n]) }
    }

    /// The product of factors `from..to`.
    pub fn project(&self, from: usize, to: usize) -> Self {
        let n = self.arity();
        assert!(from < to && to <= n, "projection out of range");
        let coords = self.coords.chunks_exact(n).flat_map(|pt| pt[from..to].iter().copied()).collect();
        ProductSimplex { arity: (to - from) as u8, coords }
    }

    /// Concatenates the factors of two products of equal dimension.
    pub fn join(a: &ProductSimplex, b: &ProductSimplex) -> Result<Self> {
        if a.dim() != b.dim() {
            return Err(Error::MismatchedDimensions);
        }
        Ok(Self::join_unchecked(a, b))
    }

    pub(crate) fn join_unchecked(a: &ProductSimplex, b: &ProductSimplex) -> Self {
        debug_assert_eq!(a.dim(), b.dim());
        let (na, nb) = (a.arity(), b.arity());
        let mut coords = Coords::with_capacity(a.coords.len() + b.coords.len());
        for (pa, pb) in a.coords.chunks_exact(na).zip(b.coords.chunks_exact(nb)) {
            coords.extend_from_slice(pa);
            coords.extend_from_slice(pb);
        }
        ProductSimplex { arity: a.arity + b.arity, coords }
    }

    /// Reorders factors: factor `k` of the result is factor `perm[k]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.arity() {
            return Err(Error::WrongArity { expected: perm.len(), actual: self.arity() });
        }
        Ok(self.permute_unchecked(perm))
    }

    pub(crate) fn permute_unchecked(&self, perm: &[usize]) -> Self {
        let n = self.arity();
        let coords = self.coords.chunks_exact(n).flat_map(|pt| perm.iter().map(move |&k| pt[k])).collect();
        ProductSimplex { arity: self.arity, coords }
    }
}

impl fmt::Debug for ProductSimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ProductSimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, s) in self.factors().iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str(")")
    }
}
