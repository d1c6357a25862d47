use std::fmt;

use crate::ez::Perm;

/// An element `((a, b), ε)` of `Z_2^{×2} ⋊_χ Z_2`, where `χ((a, b), 1) = (b, a)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub a: bool,
    pub b: bool,
    pub eps: bool,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement::new(false, false, false);
    /// `((0, 0), 1)`, acting by `z`.
    pub const A1: GroupElement = GroupElement::new(false, false, true);
    /// `((1, 0), 0)`, acting by `t^{×2}`.
    pub const A2: GroupElement = GroupElement::new(true, false, false);
    /// `((0, 1), 0)`, acting by `t`.
    pub const A3: GroupElement = GroupElement::new(false, true, false);

    pub const fn new(a: bool, b: bool, eps: bool) -> Self {
        GroupElement { a, b, eps }
    }

    pub fn all() -> impl Iterator<Item = GroupElement> {
        (0u8..8).map(|k| GroupElement::new(k & 4 != 0, k & 2 != 0, k & 1 != 0))
    }

    /// `(g, g')·(h, h') = (g · χ(h, g'), g' · h')`.
    pub fn mul(self, other: GroupElement) -> GroupElement {
        let (ha, hb) = if self.eps { (other.b, other.a) } else { (other.a, other.b) };
        GroupElement::new(self.a ^ ha, self.b ^ hb, self.eps ^ other.eps)
    }

    /// The swap `(a, b) ↦ (b, a)` on the `Z_2^{×2}` part.
    pub fn bar(self) -> GroupElement {
        GroupElement::new(self.b, self.a, self.eps)
    }

    /// The permutation of a generating letter.
    pub fn letter_action(self) -> Option<Perm> {
        match self {
            GroupElement::A1 => Some(Perm::Z),
            GroupElement::A2 => Some(Perm::T2),
            GroupElement::A3 => Some(Perm::T),
            _ => None,
        }
    }

    /// The coordinate permutation of `K^{×4}` by which this element acts:
    /// `(t^{×2})^a ∘ t^b ∘ z^ε`, with `indices[k]` the source of coordinate `k`.
    pub fn permutation(self) -> [usize; 4] {
        let mut acc = [0, 1, 2, 3];
        let mut then = |p: Perm| {
            let idx = p.indices(4).expect("arity 4");
            acc = [acc[idx[0]], acc[idx[1]], acc[idx[2]], acc[idx[3]]];
        };
        if self.eps {
            then(Perm::Z);
        }
        if self.b {
            then(Perm::T);
        }
        if self.a {
            then(Perm::T2);
        }
        acc
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupElement::A1 => f.write_str("a1"),
            GroupElement::A2 => f.write_str("a2"),
            GroupElement::A3 => f.write_str("a3"),
            g => write!(f, "(({},{}),{})", g.a as u8, g.b as u8, g.eps as u8),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{ProductSimplex, Simplex};

    fn compose(outer: [usize; 4], inner: [usize; 4]) -> [usize; 4] {
        // acting by `inner` first, then `outer`
        [inner[outer[0]], inner[outer[1]], inner[outer[2]], inner[outer[3]]]
    }

    #[test]
    fn group_axioms() {
        for g in GroupElement::all() {
            assert_eq!(g.mul(GroupElement::IDENTITY), g);
            assert_eq!(GroupElement::IDENTITY.mul(g), g);
            assert!(GroupElement::all().any(|h| g.mul(h) == GroupElement::IDENTITY));
            for h in GroupElement::all() {
                for k in GroupElement::all() {
                    assert_eq!(g.mul(h).mul(k), g.mul(h.mul(k)));
                }
            }
        }
        assert_ne!(GroupElement::A1.mul(GroupElement::A2), GroupElement::A2.mul(GroupElement::A1));
    }

    #[test]
    fn action_is_a_homomorphism() {
        for g in GroupElement::all() {
            for h in GroupElement::all() {
                assert_eq!(g.mul(h).permutation(), compose(g.permutation(), h.permutation()));
            }
        }
    }

    #[test]
    fn a1_conjugation_swaps_letters() {
        let x = ProductSimplex::new(&[0u32, 2, 4, 6].map(|v| Simplex::new(&[v, v + 1]).unwrap())).unwrap();
        let a1 = GroupElement::A1;
        assert_eq!(a1.mul(GroupElement::A2).mul(a1), GroupElement::A3);
        let act = |g: GroupElement, y: &ProductSimplex| y.permute(&g.permutation()).unwrap();
        let conj = act(a1, &act(GroupElement::A2, &act(a1, &x)));
        assert_eq!(conj, act(GroupElement::A3, &x));
        for letter in [GroupElement::A1, GroupElement::A2, GroupElement::A3] {
            let p = letter.letter_action().unwrap();
            assert_eq!(&letter.permutation()[..], p.indices(4).unwrap());
        }
        assert_eq!(GroupElement::A2.bar(), GroupElement::A3);
    }
}
