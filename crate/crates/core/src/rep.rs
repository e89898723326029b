//! Spinor irreps of the finite Clifford groups: their count and dimension
//! from Burnside's relation, and their Frobenius–Schur type.
//!
//! A spinor irrep is an irrep `D` with `D(-1) = -Id`. Everything else factors
//! through `G / {±1}`, which is an elementary abelian 2-group, so the
//! non-spinor irreps are exactly `|G| / 2` characters of degree one.
//!
//! Because every `g²` is `±1`, the indicator `(1/|G|) Σ χ(g²)` of a spinor
//! irrep of degree `d` reduces to `d/|G| · Σ s(g)` with `s(g)` the square sign
//! of `g`. That sum is what [`fs_indicator_brute`] evaluates mask by mask.
//! [`fs_indicator_closed`] instead reads the answer from `(p - q) mod 8`.

use std::fmt;

use num_integer::Roots;
use rayon::prelude::*;

use crate::clifford::{pq_mod8, GroupKind, Sign, Signature};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Frobenius–Schur type of an irrep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RepType {
    Real,
    Complex,
    Quaternionic,
}

impl RepType {
    pub fn from_value(v: i64) -> Option<RepType> {
        match v {
            1 => Some(RepType::Real),
            0 => Some(RepType::Complex),
            -1 => Some(RepType::Quaternionic),
            _ => None,
        }
    }

    /// The indicator value, `+1`, `0` or `-1`.
    pub fn value(self) -> i8 {
        match self {
            RepType::Real => 1,
            RepType::Complex => 0,
            RepType::Quaternionic => -1,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            RepType::Real => "real",
            RepType::Complex => "complex",
            RepType::Quaternionic => "quaternionic",
        }
    }
}

impl fmt::Display for RepType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Solution of `|G| = Σ d_i²` split into the degree-one irreps that are
/// trivial on `-1` and the spinor irreps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpinorIrrepInfo {
    pub group_order: u64,
    pub class_count: u64,
    /// Degree-one irreps with `D(-1) = +1`; `|G / {±1}|`.
    pub num_one_dim: u64,
    pub num_spinor: u64,
    pub spinor_dim: u64,
}

impl SpinorIrrepInfo {
    /// `num_one_dim + num_spinor · spinor_dim²`.
    pub fn burnside_sum(&self) -> u64 {
        self.num_one_dim + self.num_spinor * self.spinor_dim * self.spinor_dim
    }
}

/// Burnside solution using the structural class count.
pub fn burnside_spinor_solve(sig: Signature, kind: GroupKind) -> Result<SpinorIrrepInfo> {
    let group = FiniteGroup::new(sig, kind);
    burnside_with_classes(&group, group.class_count_structural())
}

/// Burnside solution for a given class count, e.g. one found by brute force.
pub fn burnside_with_classes(group: &FiniteGroup, class_count: u64) -> Result<SpinorIrrepInfo> {
    let order = group.order();
    let num_one_dim = order / 2;
    if !group.is_abelian() && group.abelianization_order() != num_one_dim {
        return Err(Error::Inconsistent(format!(
            "abelianization of order {} but |G/{{±1}}| = {num_one_dim}",
            group.abelianization_order()
        )));
    }
    let num_spinor = class_count
        .checked_sub(num_one_dim)
        .filter(|&k| k > 0)
        .ok_or_else(|| {
            Error::Inconsistent(format!(
                "{class_count} classes leave no spinor irreps beside {num_one_dim} characters"
            ))
        })?;
    let rest = order - num_one_dim;
    if !rest.is_multiple_of(num_spinor) {
        return Err(Error::Inconsistent(format!(
            "{rest} does not split into {num_spinor} equal squares"
        )));
    }
    let square = rest / num_spinor;
    let spinor_dim = square.sqrt();
    if spinor_dim * spinor_dim != square {
        return Err(Error::Inconsistent(format!(
            "{square} is not a perfect square"
        )));
    }
    Ok(SpinorIrrepInfo {
        group_order: order,
        class_count,
        num_one_dim,
        num_spinor,
        spinor_dim,
    })
}

/// `Σ_A s(A)` over the masks admitted by `kind`, with `s` the square-sign rule.
///
/// The rule is a parameter so that a deliberately wrong rule can be fed to the
/// verification suite.
pub fn square_sign_sum_with<F>(sig: Signature, kind: GroupKind, rule: F) -> i64
where
    F: Fn(&Signature, u64) -> Sign + Sync,
{
    let n = sig.n();
    let term = |mask: u64| -> i64 {
        if kind.admits(mask) {
            rule(&sig, mask).value()
        } else {
            0
        }
    };
    if n < 16 {
        (0..1u64 << n).map(term).sum()
    } else {
        (0..1u64 << n).into_par_iter().map(term).sum()
    }
}

/// Indicator of the spinor irreps by summing square signs over the group.
pub fn fs_indicator_brute(sig: Signature, kind: GroupKind) -> Result<RepType> {
    fs_indicator_brute_with(sig, kind, |s, mask| s.square_sign(mask))
}

pub fn fs_indicator_brute_with<F>(sig: Signature, kind: GroupKind, rule: F) -> Result<RepType>
where
    F: Fn(&Signature, u64) -> Sign + Sync,
{
    let info = burnside_spinor_solve(sig, kind)?;
    // each mask stands for the pair ±g, both with the same square
    let sum = 2 * i128::from(square_sign_sum_with(sig, kind, rule));
    let numerator = i128::from(info.spinor_dim) * sum;
    let order = i128::from(info.group_order);
    if numerator % order != 0 {
        return Err(Error::Inconsistent(format!(
            "indicator {numerator}/{order} for {sig} {kind} is not an integer"
        )));
    }
    let value = numerator / order;
    i64::try_from(value)
        .ok()
        .and_then(RepType::from_value)
        .ok_or_else(|| {
            Error::Inconsistent(format!(
                "indicator {value} for {sig} {kind} outside {{-1,0,1}}"
            ))
        })
}

const PIN_TYPES: [RepType; 8] = {
    use RepType::*;
    [
        Real,
        Real,
        Real,
        Complex,
        Quaternionic,
        Quaternionic,
        Quaternionic,
        Complex,
    ]
};

const SPIN_TYPES: [RepType; 8] = {
    use RepType::*;
    [
        Real,
        Real,
        Complex,
        Quaternionic,
        Quaternionic,
        Quaternionic,
        Complex,
        Real,
    ]
};

/// Type from `(p - q) mod 8` alone. Valid for any `p`, `q`.
pub fn fs_indicator_closed(p: u32, q: u32, kind: GroupKind) -> RepType {
    type_for_residue(pq_mod8(p, q), kind)
}

/// Closed-form type for a residue `a = (p - q) mod 8`.
pub fn type_for_residue(a: u32, kind: GroupKind) -> RepType {
    let table = match kind {
        GroupKind::Pin => &PIN_TYPES,
        GroupKind::Spin => &SPIN_TYPES,
    };
    table[(a % 8) as usize]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TypeCell {
    pub p: u32,
    pub q: u32,
    pub pq_mod8: u32,
    pub rep_type: RepType,
}

/// Closed-form types over `0..=p_max × 0..=q_max`, row-major in `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeTable {
    pub p_max: u32,
    pub q_max: u32,
    pub kind: GroupKind,
    pub cells: Vec<TypeCell>,
}

impl TypeTable {
    pub fn get(&self, p: u32, q: u32) -> Option<&TypeCell> {
        if p > self.p_max || q > self.q_max {
            return None;
        }
        self.cells.get((p * (self.q_max + 1) + q) as usize)
    }

    pub fn rows(&self) -> impl Iterator<Item = &[TypeCell]> {
        self.cells.chunks((self.q_max + 1) as usize)
    }
}

pub fn type_table(p_max: u32, q_max: u32, kind: GroupKind) -> TypeTable {
    let cells = (0..=p_max)
        .flat_map(|p| {
            (0..=q_max).map(move |q| TypeCell {
                p,
                q,
                pq_mod8: pq_mod8(p, q),
                rep_type: fs_indicator_closed(p, q, kind),
            })
        })
        .collect();
    TypeTable {
        p_max,
        q_max,
        kind,
        cells,
    }
}

/// Largest `n` at which [`check_periodicity`] also runs the brute-force sum.
pub const PERIODICITY_BRUTE_LIMIT: u32 = 20;

/// Whether the type at `(p, q)` equals the type at `(p + 8, q)` and at
/// `(p, q + 8)`, and whether brute force agrees at each of those signatures
/// that fit under [`PERIODICITY_BRUTE_LIMIT`].
pub fn check_periodicity(sig: Signature, kind: GroupKind) -> bool {
    let (p, q) = (sig.p(), sig.q());
    let shifted = [(p, q), (p + 8, q), (p, q + 8)];
    let base = fs_indicator_closed(p, q, kind);
    shifted.iter().all(|&(sp, sq)| {
        let closed = fs_indicator_closed(sp, sq, kind);
        let brute_ok = if sp + sq <= PERIODICITY_BRUTE_LIMIT {
            Signature::new(sp, sq).and_then(|s| fs_indicator_brute(s, kind)) == Ok(closed)
        } else {
            true
        };
        closed == base && brute_ok
    })
}
