//! Cross-method verification: brute-force sums against the closed form, the
//! matrix oracle against both, and scanned class counts against structure.

use std::fmt;

use num_rational::Ratio;

use crate::clifford::{GroupKind, Sign, Signature, DEFAULT_N_MAX};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, BRUTE_CLASS_LIMIT};
use crate::matrix::{constituent_count, GammaRep, MATRIX_LIMIT};
use crate::rep::{burnside_with_classes, fs_indicator_brute_with, fs_indicator_closed};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Brute-force sums run for every `p + q ≤ max_brute`.
    pub max_brute: u32,
    /// The matrix oracle runs for every `p + q ≤ max_matrix`.
    pub max_matrix: u32,
    /// Upper bound accepted for `max_brute`.
    pub cap: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_brute: 12,
            max_matrix: 8,
            cap: DEFAULT_N_MAX,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckMethod {
    Brute,
    Matrix,
    Classes,
}

impl CheckMethod {
    pub fn name(self) -> &'static str {
        match self {
            CheckMethod::Brute => "brute",
            CheckMethod::Matrix => "matrix",
            CheckMethod::Classes => "classes",
        }
    }
}

impl fmt::Display for CheckMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub p: u32,
    pub q: u32,
    pub kind: GroupKind,
    pub method: CheckMethod,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub outcomes: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.pass)
    }

    pub fn first_mismatch(&self) -> Option<&CheckOutcome> {
        self.outcomes.iter().find(|o| !o.pass)
    }

    /// `(passed, total)` for one method.
    pub fn tally(&self, method: CheckMethod) -> (usize, usize) {
        let of_method = self.outcomes.iter().filter(|o| o.method == method);
        let total = of_method.clone().count();
        (of_method.filter(|o| o.pass).count(), total)
    }
}

pub fn run_verification(config: VerifyConfig) -> Result<VerifyReport> {
    run_verification_with(config, |s, mask| s.square_sign(mask))
}

/// As [`run_verification`], with the square-sign rule used by the brute-force
/// sums supplied by the caller.
pub fn run_verification_with<F>(config: VerifyConfig, rule: F) -> Result<VerifyReport>
where
    F: Fn(&Signature, u64) -> Sign + Sync + Copy,
{
    if config.max_brute > config.cap {
        return Err(Error::CapExceeded {
            what: "verify --max-brute",
            n: config.max_brute,
            cap: config.cap,
        });
    }
    if config.max_matrix > MATRIX_LIMIT {
        return Err(Error::CapExceeded {
            what: "verify --max-matrix",
            n: config.max_matrix,
            cap: MATRIX_LIMIT,
        });
    }
    let mut report = VerifyReport::default();
    for (p, q) in signatures_up_to(config.max_brute) {
        let sig = Signature::with_cap(p, q, config.cap)?;
        for kind in GroupKind::ALL {
            let closed = fs_indicator_closed(p, q, kind);
            let (pass, detail) = match fs_indicator_brute_with(sig, kind, rule) {
                Ok(brute) => (brute == closed, format!("brute {brute}, closed {closed}")),
                Err(e) => (false, e.to_string()),
            };
            report.push(p, q, kind, CheckMethod::Brute, pass, detail);
        }
    }
    for (p, q) in signatures_up_to(config.max_matrix) {
        let sig = Signature::new(p, q)?;
        let rep = GammaRep::<i64>::new(sig)?;
        for kind in GroupKind::ALL {
            let count = i64::from(constituent_count(sig, kind));
            let expected =
                Ratio::from_integer(count * i64::from(fs_indicator_closed(p, q, kind).value()));
            let (pass, detail) = match (rep.fs_sum(kind), rep.character_norm(kind)) {
                (Ok(sum), Ok(norm)) => (
                    sum == expected && norm == count,
                    format!("trace sum {sum}, expected {expected}; norm {norm}, expected {count}"),
                ),
                (Err(e), _) | (_, Err(e)) => (false, e.to_string()),
            };
            report.push(p, q, kind, CheckMethod::Matrix, pass, detail);
        }
    }
    for (p, q) in signatures_up_to(config.max_brute.min(BRUTE_CLASS_LIMIT)) {
        let sig = Signature::new(p, q)?;
        for kind in GroupKind::ALL {
            let group = FiniteGroup::new(sig, kind);
            let structural = group.class_count_structural();
            let (pass, detail) = match group.conjugacy_classes_brute() {
                Ok(found) => match burnside_with_classes(&group, found.class_count) {
                    Ok(info) => (
                        found.class_count == structural && info.burnside_sum() == group.order(),
                        format!(
                            "classes {} (structural {structural}), {}·1 + {}·{}² = {}",
                            found.class_count,
                            info.num_one_dim,
                            info.num_spinor,
                            info.spinor_dim,
                            group.order()
                        ),
                    ),
                    Err(e) => (false, e.to_string()),
                },
                Err(e) => (false, e.to_string()),
            };
            report.push(p, q, kind, CheckMethod::Classes, pass, detail);
        }
    }
    Ok(report)
}

impl VerifyReport {
    fn push(
        &mut self,
        p: u32,
        q: u32,
        kind: GroupKind,
        method: CheckMethod,
        pass: bool,
        detail: String,
    ) {
        self.outcomes.push(CheckOutcome {
            p,
            q,
            kind,
            method,
            pass,
            detail,
        });
    }
}

/// All `(p, q)` with `p + q ≤ max_n`, by `n` then `p`.
pub fn signatures_up_to(max_n: u32) -> impl Iterator<Item = (u32, u32)> {
    (0..=max_n).flat_map(|n| (0..=n).rev().map(move |p| (p, n - p)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signature_grid_size() {
        assert_eq!(signatures_up_to(12).count(), 91);
        assert_eq!(signatures_up_to(0).collect::<Vec<_>>(), vec![(0, 0)]);
    }

    #[test]
    fn default_suite_passes() {
        let report = run_verification(VerifyConfig {
            max_brute: 8,
            max_matrix: 6,
            ..VerifyConfig::default()
        })
        .unwrap();
        assert!(report.all_passed(), "{:?}", report.first_mismatch());
        assert_eq!(report.tally(CheckMethod::Brute), (90, 90));
        assert_eq!(report.tally(CheckMethod::Matrix), (56, 56));
    }

    #[test]
    fn trivial_suite() {
        let report = run_verification(VerifyConfig {
            max_brute: 0,
            max_matrix: 0,
            ..VerifyConfig::default()
        })
        .unwrap();
        assert!(report.all_passed());
        assert!(report.outcomes.iter().all(|o| (o.p, o.q) == (0, 0)));
    }

    #[test]
    fn injected_sign_bug_is_named() {
        // drops the negative-metric contraction
        let bug = |_: &Signature, mask: u64| {
            let k = mask.count_ones();
            Sign::from_parity(k * k.saturating_sub(1) / 2)
        };
        let config = VerifyConfig {
            max_brute: 6,
            max_matrix: 4,
            ..VerifyConfig::default()
        };
        let report = run_verification_with(config, bug).unwrap();
        let first = report.first_mismatch().expect("bug must be detected");
        assert_eq!(first.method, CheckMethod::Brute);
        assert!(first.q > 0);
    }

    #[test]
    fn caps() {
        let too_big = VerifyConfig {
            max_brute: 31,
            ..VerifyConfig::default()
        };
        assert!(matches!(
            run_verification(too_big),
            Err(Error::CapExceeded { .. })
        ));
        let too_big = VerifyConfig {
            max_matrix: 13,
            ..VerifyConfig::default()
        };
        assert!(matches!(
            run_verification(too_big),
            Err(Error::CapExceeded { .. })
        ));
    }
}
