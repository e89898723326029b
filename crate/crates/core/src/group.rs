//! The finite Clifford group `Γ = {±γ_A}` and its even part `Γ₀`, with the
//! structural data needed by Burnside's relation: center, commutator
//! subgroup, abelianization and conjugacy classes.
//!
//! Every operation that scans the group has a structural counterpart that
//! does not; the two are cross-checked in tests.

use std::collections::BTreeSet;

use crate::clifford::{GroupKind, Sign, Signature, SignedMonomial};
use crate::error::{Error, Result};

/// Largest `n` for which the group is materialized as a `Vec`.
pub const MATERIALIZE_LIMIT: u32 = 20;

/// Largest `n` for the quadratic conjugacy-class scan.
pub const BRUTE_CLASS_LIMIT: u32 = 12;

/// `Γ` or `Γ₀` over a fixed signature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    sig: Signature,
    kind: GroupKind,
}

/// Sizes of the conjugacy classes found by an explicit orbit scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClassReport {
    pub class_count: u64,
    /// One entry per class, in order of the class's first element.
    pub class_sizes: Vec<u64>,
    /// Number of singleton classes, i.e. the order of the center.
    pub central_count: u64,
}

impl ConjugacyClassReport {
    /// `(size, multiplicity)` pairs in ascending size.
    pub fn size_histogram(&self) -> Vec<(u64, u64)> {
        let mut hist = std::collections::BTreeMap::new();
        for &s in &self.class_sizes {
            *hist.entry(s).or_insert(0u64) += 1;
        }
        hist.into_iter().collect()
    }
}

impl FiniteGroup {
    pub fn new(sig: Signature, kind: GroupKind) -> Self {
        FiniteGroup { sig, kind }
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    /// Number of generator masks admitted by the kind.
    pub fn mask_count(&self) -> u64 {
        let n = self.sig.n();
        match self.kind {
            GroupKind::Pin => 1 << n,
            GroupKind::Spin if n == 0 => 1,
            GroupKind::Spin => 1 << (n - 1),
        }
    }

    /// `2^(n+1)` for Pin, `2^n` for Spin (with `Γ₀ = {±1}` when `n = 0`).
    pub fn order(&self) -> u64 {
        2 * self.mask_count()
    }

    /// Admitted masks in ascending unsigned order.
    pub fn masks(&self) -> impl Iterator<Item = u64> + Clone {
        let kind = self.kind;
        (0..1u64 << self.sig.n()).filter(move |&m| kind.admits(m))
    }

    /// Every element once: masks ascending, `+` before `-`.
    pub fn elements(&self) -> impl Iterator<Item = SignedMonomial> + Clone {
        self.masks().flat_map(|mask| {
            [Sign::Plus, Sign::Minus]
                .into_iter()
                .map(move |sign| SignedMonomial::new(sign, mask))
        })
    }

    pub fn enumerate(&self) -> Result<Vec<SignedMonomial>> {
        self.require(MATERIALIZE_LIMIT, "group enumeration")?;
        Ok(self.elements().collect())
    }

    /// A generating set: `-1` plus the `γ_i` (Pin) or the `γ_0 γ_i` (Spin).
    pub fn generators(&self) -> Vec<SignedMonomial> {
        let n = self.sig.n();
        let mut gens = vec![SignedMonomial::MINUS_ONE];
        match self.kind {
            GroupKind::Pin => {
                gens.extend((0..n).map(|i| SignedMonomial::new(Sign::Plus, 1 << i)));
            }
            GroupKind::Spin => {
                gens.extend((1..n).map(|i| SignedMonomial::new(Sign::Plus, 1 | 1 << i)));
            }
        }
        gens
    }

    /// Elements commuting with every generator, found by scanning the group.
    pub fn center(&self) -> Result<Vec<SignedMonomial>> {
        self.require(MATERIALIZE_LIMIT, "center scan")?;
        let gens = self.generators();
        Ok(self
            .elements()
            .filter(|x| gens.iter().all(|g| x.commutes_with(g)))
            .collect())
    }

    /// The center read off from the parity of `n`: `±1`, plus `±γ_1…γ_n` when
    /// the full monomial lies in the group and is central (odd `n` for Pin,
    /// even `n` for Spin).
    pub fn center_structural(&self) -> Vec<SignedMonomial> {
        let n = self.sig.n();
        let full = self.sig.full_mask();
        let full_central = match self.kind {
            GroupKind::Pin => n % 2 == 1,
            GroupKind::Spin => n.is_multiple_of(2),
        };
        let mut masks = vec![0];
        if full_central && full != 0 {
            masks.push(full);
        }
        masks
            .into_iter()
            .flat_map(|m| {
                [
                    SignedMonomial::new(Sign::Plus, m),
                    SignedMonomial::new(Sign::Minus, m),
                ]
            })
            .collect()
    }

    /// `[G, G]`. All commutators of monomials are `±1` and central, so the
    /// subgroup is generated by commutators of generator pairs.
    pub fn commutator_subgroup(&self) -> Vec<SignedMonomial> {
        let gens = self.generators();
        let mut seeds = vec![SignedMonomial::IDENTITY];
        for a in &gens {
            for b in &gens {
                seeds.push(self.commutator(*a, *b));
            }
        }
        self.closure(&seeds)
    }

    /// `a b a⁻¹ b⁻¹`.
    pub fn commutator(&self, a: SignedMonomial, b: SignedMonomial) -> SignedMonomial {
        let s = &self.sig;
        s.mul(s.mul(a, b), s.mul(s.inverse(a), s.inverse(b)))
    }

    fn closure(&self, seeds: &[SignedMonomial]) -> Vec<SignedMonomial> {
        let mut set: BTreeSet<SignedMonomial> = seeds.iter().copied().collect();
        loop {
            let snapshot: Vec<_> = set.iter().copied().collect();
            let before = set.len();
            for &a in &snapshot {
                for &b in &snapshot {
                    set.insert(self.sig.mul(a, b));
                }
            }
            if set.len() == before {
                return set.into_iter().collect();
            }
        }
    }

    /// `|G / [G, G]|`, the number of one-dimensional irreps.
    pub fn abelianization_order(&self) -> u64 {
        self.order() / self.commutator_subgroup().len() as u64
    }

    /// Pin with `n ≤ 1` and Spin with `n ≤ 2` are abelian.
    pub fn is_abelian(&self) -> bool {
        let n = self.sig.n();
        match self.kind {
            GroupKind::Pin => n <= 1,
            GroupKind::Spin => n <= 2,
        }
    }

    /// Orbits of the conjugation action, found by conjugating every element
    /// by every group element.
    pub fn conjugacy_classes_brute(&self) -> Result<ConjugacyClassReport> {
        self.require(BRUTE_CLASS_LIMIT, "conjugacy class scan")?;
        let s = &self.sig;
        let elements: Vec<_> = self.elements().collect();
        let index = |m: SignedMonomial| ((m.mask << 1) | m.sign.is_minus() as u64) as usize;
        let mut seen = vec![false; 2 << s.n()];
        let mut class_sizes = Vec::new();
        for &h in &elements {
            if seen[index(h)] {
                continue;
            }
            let mut size = 0;
            for &g in &elements {
                let c = s.mul(s.mul(g, h), s.inverse(g));
                if !seen[index(c)] {
                    seen[index(c)] = true;
                    size += 1;
                }
            }
            class_sizes.push(size);
        }
        let total: u64 = class_sizes.iter().sum();
        if total != self.order() {
            return Err(Error::Inconsistent(format!(
                "class sizes sum to {total}, group order is {}",
                self.order()
            )));
        }
        Ok(ConjugacyClassReport {
            class_count: class_sizes.len() as u64,
            central_count: class_sizes.iter().filter(|&&k| k == 1).count() as u64,
            class_sizes,
        })
    }

    /// Central elements are singleton classes; every other class is `{h, -h}`.
    pub fn class_count_structural(&self) -> u64 {
        let central = self.center_structural().len() as u64;
        central + (self.order() - central) / 2
    }

    fn require(&self, cap: u32, what: &'static str) -> Result<()> {
        if self.sig.n() > cap {
            Err(Error::CapExceeded {
                what,
                n: self.sig.n(),
                cap,
            })
        } else {
            Ok(())
        }
    }
}
