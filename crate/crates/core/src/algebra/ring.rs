use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, ToPrimitive};

/// Which coefficient ring a value lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    Integers,
    Mod2,
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingKind::Integers => f.write_str("Z"),
            RingKind::Mod2 => f.write_str("Z/2"),
        }
    }
}

/// An exact commutative coefficient ring with a Euclidean division.
///
/// Only `Integer` and `Z2` implement this trait. The Euclidean structure is what
/// Smith normal form needs; `lift` returns the canonical integer representative.
pub trait Ring: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const KIND: RingKind;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_integer(v: &Integer) -> Self;
    fn lift(&self) -> Integer;

    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;

    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn add_assign(&mut self, other: &Self) {
        *self = self.add(other);
    }

    /// Multiplies by `(-1)^k`.
    fn signed(&self, negative: bool) -> Self {
        if negative {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Inverse of a unit, `None` otherwise.
    fn unit_inverse(&self) -> Option<Self>;

    /// Division with remainder whose remainder is smaller than `divisor` in the
    /// Euclidean norm. `divisor` must be nonzero.
    fn div_rem(&self, divisor: &Self) -> (Self, Self);

    /// Compares Euclidean norms.
    fn norm_cmp(&self, other: &Self) -> Ordering;
}

/// Arbitrary-precision integer with an inline fast path.
///
/// The representation is canonical: `Big` never holds a value that fits in `i64`,
/// so the derived equality and hashing are value-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Integer {
    Small(i64),
    Big(BigInt),
}

impl Integer {
    pub fn new(v: i64) -> Self {
        Integer::Small(v)
    }

    fn from_big(v: BigInt) -> Self {
        match v.to_i64() {
            Some(s) => Integer::Small(s),
            None => Integer::Big(v),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Integer::Small(v) => BigInt::from(*v),
            Integer::Big(v) => v.clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Integer::Small(v) => Some(*v),
            Integer::Big(_) => None,
        }
    }

    pub fn is_even(&self) -> bool {
        match self {
            Integer::Small(v) => v % 2 == 0,
            Integer::Big(v) => v.is_even(),
        }
    }

    pub fn signum(&self) -> i32 {
        match self {
            Integer::Small(v) => v.signum() as i32,
            Integer::Big(v) => {
                if v.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn abs(&self) -> Integer {
        match self {
            Integer::Small(v) => match v.checked_abs() {
                Some(a) => Integer::Small(a),
                None => Integer::from_big(BigInt::from(*v).abs()),
            },
            Integer::Big(v) => Integer::from_big(v.abs()),
        }
    }

    /// Exact halving; `None` for odd values.
    pub fn half(&self) -> Option<Integer> {
        if !self.is_even() {
            return None;
        }
        Some(match self {
            Integer::Small(v) => Integer::Small(v / 2),
            Integer::Big(v) => Integer::from_big(v / 2),
        })
    }
}

impl From<i64> for Integer {
    fn from(v: i64) -> Self {
        Integer::Small(v)
    }
}

impl From<BigInt> for Integer {
    fn from(v: BigInt) -> Self {
        Integer::from_big(v)
    }
}

impl PartialOrd for Integer {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Integer {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Debug for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Integer::Small(v) => write!(f, "{v}"),
            Integer::Big(v) => write!(f, "{v}"),
        }
    }
}

impl Ring for Integer {
    const KIND: RingKind = RingKind::Integers;

    fn zero() -> Self {
        Integer::Small(0)
    }

    fn one() -> Self {
        Integer::Small(1)
    }

    fn from_i64(v: i64) -> Self {
        Integer::Small(v)
    }

    fn from_integer(v: &Integer) -> Self {
        v.clone()
    }

    fn lift(&self) -> Integer {
        self.clone()
    }

    fn is_zero(&self) -> bool {
        matches!(self, Integer::Small(0))
    }

    fn is_unit(&self) -> bool {
        matches!(self, Integer::Small(1) | Integer::Small(-1))
    }

    fn add(&self, other: &Self) -> Self {
        if let (Integer::Small(a), Integer::Small(b)) = (self, other) {
            if let Some(s) = a.checked_add(*b) {
                return Integer::Small(s);
            }
        }
        Integer::from_big(self.to_big() + other.to_big())
    }

    fn neg(&self) -> Self {
        match self {
            Integer::Small(a) => match a.checked_neg() {
                Some(n) => Integer::Small(n),
                None => Integer::from_big(-BigInt::from(*a)),
            },
            Integer::Big(a) => Integer::from_big(-a),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        if let (Integer::Small(a), Integer::Small(b)) = (self, other) {
            if let Some(p) = a.checked_mul(*b) {
                return Integer::Small(p);
            }
        }
        Integer::from_big(self.to_big() * other.to_big())
    }

    fn unit_inverse(&self) -> Option<Self> {
        self.is_unit().then(|| self.clone())
    }

    fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero");
        if let (Integer::Small(a), Integer::Small(b)) = (self, divisor) {
            if let (Some(q), Some(r)) = (a.checked_div(*b), a.checked_rem(*b)) {
                return (Integer::Small(q), Integer::Small(r));
            }
        }
        let (q, r) = self.to_big().div_rem(&divisor.to_big());
        (Integer::from_big(q), Integer::from_big(r))
    }

    fn norm_cmp(&self, other: &Self) -> Ordering {
        self.abs().cmp(&other.abs())
    }
}

/// The field with two elements.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Z2(pub bool);

impl Z2 {
    pub const ZERO: Z2 = Z2(false);
    pub const ONE: Z2 = Z2(true);

    pub fn bit(self) -> u8 {
        self.0 as u8
    }
}

impl From<bool> for Z2 {
    fn from(b: bool) -> Self {
        Z2(b)
    }
}

impl fmt::Debug for Z2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

impl fmt::Display for Z2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

impl Ring for Z2 {
    const KIND: RingKind = RingKind::Mod2;

    fn zero() -> Self {
        Z2(false)
    }

    fn one() -> Self {
        Z2(true)
    }

    fn from_i64(v: i64) -> Self {
        Z2(v % 2 != 0)
    }

    fn from_integer(v: &Integer) -> Self {
        Z2(!v.is_even())
    }

    fn lift(&self) -> Integer {
        Integer::Small(self.0 as i64)
    }

    fn is_zero(&self) -> bool {
        !self.0
    }

    fn is_unit(&self) -> bool {
        self.0
    }

    fn add(&self, other: &Self) -> Self {
        Z2(self.0 ^ other.0)
    }

    fn neg(&self) -> Self {
        *self
    }

    fn mul(&self, other: &Self) -> Self {
        Z2(self.0 & other.0)
    }

    fn signed(&self, _negative: bool) -> Self {
        *self
    }

    fn unit_inverse(&self) -> Option<Self> {
        self.0.then_some(*self)
    }

    fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(divisor.0, "division by zero");
        (*self, Z2(false))
    }

    fn norm_cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn promotes_on_overflow() {
        let big = Integer::new(i64::MAX).add(&Integer::one());
        assert!(matches!(big, Integer::Big(_)));
        let back = big.sub(&Integer::one());
        assert_eq!(back, Integer::Small(i64::MAX));
        let sq = Integer::new(i64::MIN).mul(&Integer::new(i64::MIN));
        assert_eq!(sq.to_big(), BigInt::from(i64::MIN) * BigInt::from(i64::MIN));
        assert_eq!(Integer::new(i64::MIN).neg().to_big(), -BigInt::from(i64::MIN));
    }

    #[test]
    fn z2_arithmetic() {
        assert_eq!(Z2::ONE.add(&Z2::ONE), Z2::ZERO);
        assert_eq!(Z2::from_i64(-3), Z2::ONE);
        assert_eq!(Z2::from_integer(&Integer::new(4)), Z2::ZERO);
        assert!(Z2::ONE.is_unit() && !Z2::ZERO.is_unit());
    }

    #[test]
    fn units_and_halving() {
        assert!(Integer::new(-1).is_unit());
        assert!(!Integer::new(2).is_unit());
        assert_eq!(Integer::new(6).half(), Some(Integer::new(3)));
        assert_eq!(Integer::new(-7).half(), None);
    }

    proptest! {
        #[test]
        fn matches_bigint(a in any::<i64>(), b in any::<i64>()) {
            let (x, y) = (Integer::new(a), Integer::new(b));
            let (ba, bb) = (BigInt::from(a), BigInt::from(b));
            prop_assert_eq!(x.add(&y).to_big(), &ba + &bb);
            prop_assert_eq!(x.mul(&y).to_big(), &ba * &bb);
            prop_assert_eq!(x.sub(&y).to_big(), &ba - &bb);
            prop_assert_eq!(x.cmp(&y), ba.cmp(&bb));
            if b != 0 {
                let (q, r) = x.div_rem(&y);
                prop_assert_eq!(q.mul(&y).add(&r), x.clone());
                prop_assert!(r.norm_cmp(&y) == Ordering::Less);
            }
        }
    }
}
