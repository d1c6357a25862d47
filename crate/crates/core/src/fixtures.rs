//! Small triangulations used by tests, benchmarks and the command-line data directory.

use crate::complex::{SimplicialSet, Vertex};
use crate::ez::shuffles;

fn build(name: &str, maximal: &[Vec<Vertex>]) -> SimplicialSet {
    SimplicialSet::with_name(name, maximal).expect("fixture is a valid complex")
}

/// The standard simplex `Δ^n`.
pub fn simplex(n: usize) -> SimplicialSet {
    build(&format!("simplex-{n}"), &[(0..=n as Vertex).collect()])
}

/// The boundary `∂Δ^n`, a triangulated `(n−1)`-sphere (`n >= 1`).
pub fn simplex_boundary(n: usize) -> SimplicialSet {
    let faces: Vec<Vec<Vertex>> =
        (0..=n as Vertex).map(|skip| (0..=n as Vertex).filter(|&v| v != skip).collect()).collect();
    build(&format!("sphere-{}", n - 1), &faces)
}

/// The 6-vertex real projective plane.
pub fn rp2() -> SimplicialSet {
    let t: [[Vertex; 3]; 10] = [
        [0, 1, 3], [0, 1, 5], [0, 2, 4], [0, 2, 5], [0, 3, 4],
        [1, 2, 3], [1, 2, 4], [1, 4, 5], [2, 3, 5], [3, 4, 5],
    ];
    build("rp2", &t.map(|s| s.to_vec()))
}

/// The 7-vertex torus: triangles `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
pub fn torus() -> SimplicialSet {
    let mut faces = Vec::new();
    for i in 0..7 {
        for offsets in [[0, 1, 3], [0, 2, 3]] {
            let mut t: Vec<Vertex> = offsets.iter().map(|o| (i + o) % 7).collect();
            t.sort_unstable();
            faces.push(t);
        }
    }
    build("torus", &faces)
}

/// A 9-vertex triangulation of the complex projective plane.
pub fn cp2() -> SimplicialSet {
    let t: [[Vertex; 5]; 36] = [
        [0, 1, 2, 3, 4], [0, 1, 2, 3, 5], [0, 1, 2, 4, 5], [0, 1, 3, 4, 6], [0, 1, 3, 5, 7], [0, 1, 3, 6, 7],
        [0, 1, 4, 5, 6], [0, 1, 5, 6, 8], [0, 1, 5, 7, 8], [0, 1, 6, 7, 8], [0, 2, 3, 4, 8], [0, 2, 3, 5, 8],
        [0, 2, 4, 5, 6], [0, 2, 4, 6, 7], [0, 2, 4, 7, 8], [0, 2, 5, 6, 8], [0, 2, 6, 7, 8], [0, 3, 4, 6, 7],
        [0, 3, 4, 7, 8], [0, 3, 5, 7, 8], [1, 2, 3, 4, 8], [1, 2, 3, 5, 7], [1, 2, 3, 6, 7], [1, 2, 3, 6, 8],
        [1, 2, 4, 5, 7], [1, 2, 4, 7, 8], [1, 2, 6, 7, 8], [1, 3, 4, 6, 8], [1, 4, 5, 6, 8], [1, 4, 5, 7, 8],
        [2, 3, 5, 6, 7], [2, 3, 5, 6, 8], [2, 4, 5, 6, 7], [3, 4, 5, 6, 7], [3, 4, 5, 6, 8], [3, 4, 5, 7, 8],
    ];
    build("cp2", &t.map(|s| s.to_vec()))
}

/// The staircase triangulation of `K × L`: the vertex `(u, v)` becomes `u · N + v` with
/// `N` one more than the largest vertex of `L`, and every pair of maximal simplices
/// contributes one simplex per monotone lattice path.
pub fn product(k: &SimplicialSet, l: &SimplicialSet) -> SimplicialSet {
    let width = l.simplices(0).iter().map(|v| v.vertices()[0]).max().unwrap_or(0) + 1;
    let mut faces = Vec::new();
    for s in k.maximal_simplices() {
        for t in l.maximal_simplices() {
            let (u, v) = (s.vertices(), t.vertices());
            let (p, q) = (u.len() - 1, v.len() - 1);
            for sh in shuffles(p, q).iter() {
                let (mut a, mut b) = (0, 0);
                let mut path = vec![u[0] * width + v[0]];
                for step in 0..p + q {
                    if sh.beta.contains(&step) {
                        b += 1;
                    } else {
                        a += 1;
                    }
                    path.push(u[a] * width + v[b]);
                }
                faces.push(path);
            }
        }
    }
    build(&format!("{}-x-{}", k.name(), l.name()), &faces)
}

/// `S^2 × S^2` as the staircase product of two boundaries of tetrahedra.
pub fn s2_times_s2() -> SimplicialSet {
    product(&simplex_boundary(3), &simplex_boundary(3))
}

/// `S^2 × Δ^n`, homotopy equivalent to `S^2` but with simplices up to dimension `n + 2`.
pub fn s2_times_simplex(n: usize) -> SimplicialSet {
    product(&simplex_boundary(3), &simplex(n))
}

/// The fixtures shipped as data files.
pub fn all() -> Vec<SimplicialSet> {
    vec![
        simplex(2),
        simplex(3),
        simplex_boundary(3),
        simplex_boundary(4),
        rp2(),
        torus(),
        cp2(),
        s2_times_s2(),
        s2_times_simplex(4),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RingKind;
    use crate::reduce::homology;

    fn bettis(k: &SimplicialSet, ring: RingKind) -> Vec<usize> {
        homology(k, ring).iter().map(|g| g.betti).collect()
    }

    #[test]
    fn counts() {
        assert_eq!(simplex_boundary(3).counts(), vec![4, 6, 4]);
        assert_eq!(rp2().counts(), vec![6, 15, 10]);
        assert_eq!(torus().counts(), vec![7, 21, 14]);
        assert_eq!(cp2().counts(), vec![9, 36, 84, 90, 36]);
        assert_eq!(s2_times_s2().count(4), 96);
    }

    #[test]
    fn homology_of_fixtures() {
        assert_eq!(bettis(&torus(), RingKind::Integers), vec![1, 2, 1]);
        assert_eq!(bettis(&cp2(), RingKind::Integers), vec![1, 0, 1, 0, 1]);
        assert_eq!(bettis(&s2_times_s2(), RingKind::Integers), vec![1, 0, 2, 0, 1]);
        assert_eq!(bettis(&s2_times_simplex(2), RingKind::Integers), vec![1, 0, 1, 0, 0]);
        let h = homology(&rp2(), RingKind::Integers);
        assert_eq!(h[1].torsion, vec![crate::Integer::from(2)]);
        assert_eq!(bettis(&rp2(), RingKind::Mod2), vec![1, 1, 1]);
        assert!(homology(&cp2(), RingKind::Integers).iter().all(|g| g.torsion.is_empty()));
    }
}
