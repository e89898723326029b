//! Signed generator monomials and their products under the Clifford relations
//! `γ_i γ_j + γ_j γ_i = 2 η_i δ_ij`.
//!
//! A monomial `±γ_{i1}…γ_{ik}` is stored as a [`Sign`] and a bitmask of the
//! generator indices, with the indices implicitly ascending. Every subset of
//! generators therefore has exactly one representation and equality is a
//! pair of integer comparisons.

use std::fmt;
use std::ops::{Mul, Neg};

use crate::error::{Error, Result};

/// Default cap on `n = p + q` for anything that enumerates `2^n` masks.
pub const DEFAULT_N_MAX: u32 = 30;

/// Largest cap accepted at all: masks are `u64` and group orders `2^(n+1)`
/// must fit in one.
pub const HARD_N_MAX: u32 = 62;

/// A sign in `{+1, -1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^k`.
    #[inline]
    pub fn from_parity(k: u32) -> Sign {
        if k & 1 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    #[inline]
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    #[inline]
    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }
}

impl Mul for Sign {
    type Output = Sign;

    #[inline]
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    #[inline]
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Metric signature `(p, q)`: generators `0..p` square to `+1`, generators
/// `p..p+q` square to `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    p: u32,
    q: u32,
}

impl Signature {
    /// Validated signature under [`DEFAULT_N_MAX`].
    pub fn new(p: u32, q: u32) -> Result<Self> {
        Self::with_cap(p, q, DEFAULT_N_MAX)
    }

    /// Validated signature under a caller-chosen cap (itself at most
    /// [`HARD_N_MAX`]).
    pub fn with_cap(p: u32, q: u32, cap: u32) -> Result<Self> {
        if cap > HARD_N_MAX {
            return Err(Error::CapExceeded {
                what: "signature cap",
                n: cap,
                cap: HARD_N_MAX,
            });
        }
        let n = p.saturating_add(q);
        if n > cap {
            return Err(Error::CapExceeded {
                what: "signature",
                n,
                cap,
            });
        }
        Ok(Signature { p, q })
    }

    pub fn euclidean(n: u32) -> Result<Self> {
        Self::new(n, 0)
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.p + self.q
    }

    /// `(p - q) mod 8`, in `0..8`.
    pub fn pq_mod8(&self) -> u32 {
        pq_mod8(self.p, self.q)
    }

    /// Mask with every generator set; the monomial `γ_1…γ_n`.
    #[inline]
    pub fn full_mask(&self) -> u64 {
        low_bits(self.n())
    }

    /// Mask of the negative-metric generators `p..n`.
    #[inline]
    pub fn negative_mask(&self) -> u64 {
        self.full_mask() & !low_bits(self.p)
    }

    #[inline]
    pub fn contains(&self, mask: u64) -> bool {
        mask & !self.full_mask() == 0
    }

    pub fn check_mask(&self, mask: u64) -> Result<()> {
        if self.contains(mask) {
            Ok(())
        } else {
            Err(Error::MaskOutOfRange { mask, n: self.n() })
        }
    }

    /// `γ_i²`.
    pub fn metric_sign(&self, i: u32) -> Result<Sign> {
        if i >= self.n() {
            return Err(Error::IndexOutOfRange {
                index: i,
                n: self.n(),
            });
        }
        Ok(if i < self.p { Sign::Plus } else { Sign::Minus })
    }

    /// The single generator `+γ_i`.
    pub fn generator(&self, i: u32) -> Result<SignedMonomial> {
        if i >= self.n() {
            return Err(Error::IndexOutOfRange {
                index: i,
                n: self.n(),
            });
        }
        Ok(SignedMonomial::new(Sign::Plus, 1 << i))
    }

    /// Product `a · b`. Masks are assumed to lie inside this signature; use
    /// [`Signature::checked_mul`] when that is not already known.
    #[inline]
    pub fn mul(&self, a: SignedMonomial, b: SignedMonomial) -> SignedMonomial {
        debug_assert!(self.contains(a.mask) && self.contains(b.mask));
        let swaps = reorder_parity(a.mask, b.mask);
        let contractions = (a.mask & b.mask & self.negative_mask()).count_ones();
        SignedMonomial {
            sign: a.sign * b.sign * Sign::from_parity(swaps + contractions),
            mask: a.mask ^ b.mask,
        }
    }

    pub fn checked_mul(&self, a: SignedMonomial, b: SignedMonomial) -> Result<SignedMonomial> {
        self.check_mask(a.mask)?;
        self.check_mask(b.mask)?;
        Ok(self.mul(a, b))
    }

    /// The sign `s` with `m · m = (s, ∅)` for the monomial on `mask`:
    /// `(-1)^(k(k-1)/2)` from reordering times one `-1` per negative-metric
    /// generator.
    #[inline]
    pub fn square_sign(&self, mask: u64) -> Sign {
        let k = mask.count_ones();
        let reorder = (k * k.saturating_sub(1) / 2) & 1;
        Sign::from_parity(reorder + (mask & self.negative_mask()).count_ones())
    }

    /// `m⁻¹`; since `m² = ±1` the inverse is `m` up to that sign.
    #[inline]
    pub fn inverse(&self, m: SignedMonomial) -> SignedMonomial {
        SignedMonomial {
            sign: self.square_sign(m.mask) * m.sign,
            mask: m.mask,
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// `(p - q) mod 8` for arbitrary counts.
pub fn pq_mod8(p: u32, q: u32) -> u32 {
    ((i64::from(p) - i64::from(q)).rem_euclid(8)) as u32
}

#[inline]
fn low_bits(k: u32) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Parity of the transpositions needed to move each generator of `b` past the
/// larger generators of `a`.
#[inline]
fn reorder_parity(a: u64, b: u64) -> u32 {
    let mut swaps = 0;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        swaps += (a >> j >> 1).count_ones();
        rest &= rest - 1;
    }
    swaps & 1
}

/// `±γ_{i1}…γ_{ik}` with `i1 < … < ik` the set bits of `mask`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedMonomial {
    pub sign: Sign,
    pub mask: u64,
}

impl SignedMonomial {
    pub const IDENTITY: SignedMonomial = SignedMonomial {
        sign: Sign::Plus,
        mask: 0,
    };

    /// The central involution `-1`.
    pub const MINUS_ONE: SignedMonomial = SignedMonomial {
        sign: Sign::Minus,
        mask: 0,
    };

    #[inline]
    pub const fn new(sign: Sign, mask: u64) -> Self {
        SignedMonomial { sign, mask }
    }

    #[inline]
    pub fn grade(&self) -> u32 {
        grade(self.mask)
    }

    /// Whether `a b = b a`. Independent of the metric: swapping the two
    /// words costs `|a||b| - |a ∩ b|` transpositions.
    #[inline]
    pub fn commutes_with(&self, other: &SignedMonomial) -> bool {
        commutes(self.mask, other.mask)
    }
}

impl Neg for SignedMonomial {
    type Output = SignedMonomial;

    fn neg(self) -> SignedMonomial {
        SignedMonomial {
            sign: -self.sign,
            mask: self.mask,
        }
    }
}

impl fmt::Display for SignedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.sign)?;
        if self.mask == 0 {
            return f.write_str("1");
        }
        let mut rest = self.mask;
        let mut first = true;
        while rest != 0 {
            if !first {
                f.write_str("·")?;
            }
            write!(f, "γ{}", rest.trailing_zeros())?;
            rest &= rest - 1;
            first = false;
        }
        Ok(())
    }
}

#[inline]
pub fn grade(mask: u64) -> u32 {
    mask.count_ones()
}

#[inline]
pub fn commutes(a: u64, b: u64) -> bool {
    let exponent = grade(a) * grade(b) - grade(a & b);
    exponent & 1 == 0
}

/// Selects the full finite Clifford group (generating Pin) or its even-grade
/// subgroup (generating Spin).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    Pin,
    Spin,
}

impl GroupKind {
    pub const ALL: [GroupKind; 2] = [GroupKind::Pin, GroupKind::Spin];

    #[inline]
    pub fn admits(self, mask: u64) -> bool {
        match self {
            GroupKind::Pin => true,
            GroupKind::Spin => mask.count_ones() & 1 == 0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GroupKind::Pin => "pin",
            GroupKind::Spin => "spin",
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for GroupKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "pin" => Ok(GroupKind::Pin),
            "spin" => Ok(GroupKind::Spin),
            other => Err(format!(
                "unknown group kind `{other}` (expected pin or spin)"
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(sign: Sign, bits: &[u32]) -> SignedMonomial {
        SignedMonomial::new(sign, bits.iter().fold(0, |acc, &b| acc | 1 << b))
    }

    use Sign::{Minus, Plus};

    #[test]
    fn make_signature() {
        let s = Signature::new(3, 1).unwrap();
        assert_eq!((s.p(), s.q(), s.n()), (3, 1, 4));
        let s = Signature::new(0, 0).unwrap();
        assert_eq!(s.n(), 0);
        assert_eq!(s.full_mask(), 0);
        assert!(matches!(
            Signature::new(31, 0),
            Err(Error::CapExceeded { n: 31, cap: 30, .. })
        ));
        assert!(Signature::with_cap(40, 0, 40).is_ok());
        assert!(Signature::with_cap(0, 0, 63).is_err());
    }

    #[test]
    fn metric_signs() {
        let s = Signature::new(3, 1).unwrap();
        assert_eq!(s.metric_sign(0).unwrap(), Plus);
        assert_eq!(s.metric_sign(3).unwrap(), Minus);
        assert_eq!(Signature::new(0, 2).unwrap().metric_sign(1).unwrap(), Minus);
        assert_eq!(
            s.metric_sign(4),
            Err(Error::IndexOutOfRange { index: 4, n: 4 })
        );
        assert_eq!(s.negative_mask(), 0b1000);
    }

    #[test]
    fn product_examples() {
        let s = Signature::new(2, 0).unwrap();
        assert_eq!(s.mul(m(Plus, &[0]), m(Plus, &[1])), m(Plus, &[0, 1]));
        assert_eq!(s.mul(m(Plus, &[1]), m(Plus, &[0])), m(Minus, &[0, 1]));
        assert_eq!(
            s.mul(m(Plus, &[0, 1]), m(Plus, &[0, 1])),
            SignedMonomial::MINUS_ONE
        );
        let s = Signature::new(0, 1).unwrap();
        assert_eq!(
            s.mul(m(Plus, &[0]), m(Plus, &[0])),
            SignedMonomial::MINUS_ONE
        );
    }

    #[test]
    fn checked_mul_rejects_foreign_masks() {
        let s = Signature::new(2, 0).unwrap();
        assert!(matches!(
            s.checked_mul(m(Plus, &[2]), SignedMonomial::IDENTITY),
            Err(Error::MaskOutOfRange { .. })
        ));
    }

    #[test]
    fn square_sign_examples() {
        let s = Signature::new(4, 0).unwrap();
        assert_eq!(s.square_sign(0b0011), Minus);
        assert_eq!(s.square_sign(0), Plus);
        let s = Signature::new(0, 3).unwrap();
        assert_eq!(s.square_sign(0b011), Minus);
        assert_eq!(s.mul(m(Plus, &[0, 1]), m(Plus, &[0, 1])).sign, Minus);
    }

    #[test]
    fn grades() {
        assert_eq!(grade(0), 0);
        assert_eq!(grade(0b1101), 3);
        assert_eq!(grade(Signature::new(5, 0).unwrap().full_mask()), 5);
    }

    #[test]
    fn commutation_examples() {
        let s = Signature::new(4, 0).unwrap();
        let (a, b) = (m(Plus, &[0, 1]), m(Plus, &[2, 3]));
        assert!(a.commutes_with(&b));
        assert_eq!(s.mul(a, b), s.mul(b, a));
        assert!(m(Plus, &[0]).commutes_with(&m(Plus, &[0])));
        assert!(!m(Plus, &[0]).commutes_with(&m(Plus, &[1])));
    }

    #[test]
    fn commutes_matches_two_orders_exhaustively() {
        for n in 0..=8u32 {
            for p in 0..=n {
                let s = Signature::new(p, n - p).unwrap();
                for a in 0..1u64 << n {
                    for b in 0..1u64 << n {
                        let (x, y) = (SignedMonomial::new(Plus, a), SignedMonomial::new(Plus, b));
                        assert_eq!(commutes(a, b), s.mul(x, y) == s.mul(y, x));
                    }
                }
            }
        }
    }

    #[test]
    fn central_involution() {
        let s = Signature::new(2, 3).unwrap();
        let z = SignedMonomial::MINUS_ONE;
        assert_eq!(s.mul(z, z), SignedMonomial::IDENTITY);
        for mask in 0..1u64 << s.n() {
            let x = SignedMonomial::new(Plus, mask);
            assert_eq!(s.mul(z, x), s.mul(x, z));
            assert_eq!(s.mul(z, x), -x);
        }
    }

    #[test]
    fn inverse_is_two_sided() {
        let s = Signature::new(3, 2).unwrap();
        for mask in 0..1u64 << s.n() {
            for sign in [Plus, Minus] {
                let x = SignedMonomial::new(sign, mask);
                assert_eq!(s.mul(x, s.inverse(x)), SignedMonomial::IDENTITY);
                assert_eq!(s.mul(s.inverse(x), x), SignedMonomial::IDENTITY);
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(m(Minus, &[0, 2]).to_string(), "-γ0·γ2");
        assert_eq!(SignedMonomial::IDENTITY.to_string(), "+1");
        assert_eq!("Spin".parse::<GroupKind>().unwrap(), GroupKind::Spin);
        assert!("so".parse::<GroupKind>().is_err());
    }

    fn monomial(n: u32) -> impl Strategy<Value = SignedMonomial> {
        (any::<bool>(), 0..1u64 << n)
            .prop_map(|(neg, mask)| SignedMonomial::new(if neg { Minus } else { Plus }, mask))
    }

    fn sig_and_triple() -> impl Strategy<Value = (Signature, [SignedMonomial; 3])> {
        (0..=12u32)
            .prop_flat_map(|n| (0..=n, Just(n)))
            .prop_flat_map(|(p, n)| {
                (
                    Just(Signature::new(p, n - p).unwrap()),
                    [monomial(n), monomial(n), monomial(n)],
                )
            })
    }

    proptest! {
        #[test]
        fn associative((s, [a, b, c]) in sig_and_triple()) {
            prop_assert_eq!(s.mul(s.mul(a, b), c), s.mul(a, s.mul(b, c)));
        }

        #[test]
        fn closed_and_square_consistent((s, [a, b, _]) in sig_and_triple()) {
            let ab = s.mul(a, b);
            prop_assert!(s.contains(ab.mask));
            prop_assert_eq!(s.mul(a, a), SignedMonomial::new(s.square_sign(a.mask), 0));
        }

        #[test]
        fn distinct_generators_anticommute(n in 2..=12u32, p in 0..=12u32, i in 0..12u32, j in 0..12u32) {
            let p = p.min(n);
            let (i, j) = (i % n, j % n);
            prop_assume!(i != j);
            let s = Signature::new(p, n - p).unwrap();
            let (gi, gj) = (s.generator(i).unwrap(), s.generator(j).unwrap());
            prop_assert_eq!(s.mul(gi, gj), -s.mul(gj, gi));
        }
    }
}
