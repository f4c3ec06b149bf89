//! Brute-force certification of complementary sets and families.
//!
//! The verifier knows nothing about how a family was built: it checks the
//! defining correlation identities exhaustively over every shift and every
//! set pair, using only the correlation primitives. Constructed families
//! are always re-checked against it rather than trusted.

use std::fmt;

use rayon::prelude::*;

use crate::constructions::{ComplementarySet, Method, MocsFamily};
use crate::correlation::{set_correlation, CorrelationValue, ZeroTestMode};
use crate::error::{Error, Result};

/// What was verified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportKind {
    /// A single set against the autocorrelation identity.
    Gcs,
    /// A family against both the auto- and cross-correlation identities.
    Mocs,
}

impl fmt::Display for ReportKind {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReportKind::Gcs => write!(out, "GCS"),
            ReportKind::Mocs => write!(out, "MOCS"),
        }
    }
}

/// One nonzero correlation sum where the definition demands zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// First set index (p1 = p2 marks an autocorrelation-sum failure).
    pub p1: usize,
    /// Second set index.
    pub p2: usize,
    /// The offending time shift.
    pub shift: i64,
    /// The nonzero value, as an exponent histogram.
    pub value: CorrelationValue,
}

/// Outcome of an exhaustive check.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    /// GCS or MOCS.
    pub kind: ReportKind,
    /// True iff no violation, the peak equals N*L and the set-size bound
    /// holds.
    pub passed: bool,
    /// Observed in-phase value (u = 0, same set).
    pub peak: u64,
    /// Required in-phase value N*L.
    pub expected_peak: u64,
    /// Set size M (1 for a plain GCS check).
    pub set_size: usize,
    /// Flock size N.
    pub flock_size: usize,
    /// Sequence length L.
    pub length: u64,
    /// Alphabet size.
    pub q: u32,
    /// Whether M <= N.
    pub bound_ok: bool,
    /// Every place the definition failed, ordered by (p1, p2, shift).
    pub violations: Vec<Violation>,
    /// Zero-test mode used.
    pub mode: ZeroTestMode,
}

impl VerificationReport {
    /// How many violations are printed by `Display`.
    pub const DISPLAY_LIMIT: usize = 10;
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(out, "kind: {}", self.kind)?;
        writeln!(
            out,
            "parameters: q={} M={} N={} L={}",
            self.q, self.set_size, self.flock_size, self.length
        )?;
        writeln!(out, "mode: {}", self.mode)?;
        writeln!(out, "peak: {} (expected {})", self.peak, self.expected_peak)?;
        if !self.bound_ok {
            writeln!(out, "set-size bound: M > N")?;
        }
        writeln!(out, "result: {}", if self.passed { "PASS" } else { "FAIL" })?;
        if self.violations.is_empty() {
            write!(out, "violations: none")?;
        } else {
            write!(out, "violations: {}", self.violations.len())?;
            for v in self.violations.iter().take(Self::DISPLAY_LIMIT) {
                write!(
                    out,
                    "\n  sets ({}, {}) shift {}: {}",
                    v.p1, v.p2, v.shift, v.value
                )?;
            }
            if self.violations.len() > Self::DISPLAY_LIMIT {
                write!(
                    out,
                    "\n  ... {} more",
                    self.violations.len() - Self::DISPLAY_LIMIT
                )?;
            }
        }
        Ok(())
    }
}

/// Collect the shifts at which `sum_n rho(a_n, b_n; u)` fails to vanish.
///
/// `include_zero` distinguishes the cross-set check (u = 0 must also be
/// zero) from the same-set check (u = 0 is the peak, handled separately).
fn scan_pair(
    a: &ComplementarySet,
    b: &ComplementarySet,
    p1: usize,
    p2: usize,
    include_zero: bool,
    mode: ZeroTestMode,
) -> Vec<Violation> {
    let len = a.length() as i64;
    let mut violations = Vec::new();
    for shift in -(len - 1)..len {
        if shift == 0 && !include_zero {
            continue;
        }
        let value = set_correlation(a, b, shift).expect("sets share shape");
        if !value.is_zero(mode) {
            violations.push(Violation { p1, p2, shift, value });
        }
    }
    violations
}

/// Exhaustively check one set against the Golay identity: autocorrelation
/// sums vanish at every nonzero shift and equal N*L in phase.
pub fn verify_gcs(set: &ComplementarySet, mode: ZeroTestMode) -> VerificationReport {
    let expected_peak = set.flock_size() as u64 * set.length();
    let peak = set_correlation(set, set, 0)
        .expect("a set is shape-compatible with itself")
        .total();
    let violations = scan_pair(set, set, 0, 0, false, mode);
    VerificationReport {
        kind: ReportKind::Gcs,
        passed: violations.is_empty() && peak == expected_peak,
        peak,
        expected_peak,
        set_size: 1,
        flock_size: set.flock_size(),
        length: set.length(),
        q: set.q(),
        bound_ok: true,
        violations,
        mode,
    }
}

/// Exhaustively check a family: every set passes the Golay identity and
/// every distinct pair has vanishing cross-correlation sums at *all* shifts,
/// u = 0 included. Also re-checks the set-size bound M <= N.
///
/// Violations are collected exhaustively rather than failing fast, so one
/// report localizes every defect. Set pairs are scanned in parallel.
pub fn verify_mocs(family: &MocsFamily, mode: ZeroTestMode) -> VerificationReport {
    let sets = family.sets();
    let m = sets.len();
    let expected_peak = family.flock_size() as u64 * family.length();
    let peak = set_correlation(&sets[0], &sets[0], 0)
        .expect("a set is shape-compatible with itself")
        .total();

    let mut pairs = Vec::with_capacity(m * (m + 1) / 2);
    for p1 in 0..m {
        for p2 in p1..m {
            pairs.push((p1, p2));
        }
    }
    let mut violations: Vec<Violation> = pairs
        .into_par_iter()
        .flat_map_iter(|(p1, p2)| scan_pair(&sets[p1], &sets[p2], p1, p2, p1 != p2, mode))
        .collect();
    violations.sort_by_key(|v| (v.p1, v.p2, v.shift));

    let bound_ok = m <= family.flock_size();
    VerificationReport {
        kind: ReportKind::Mocs,
        passed: violations.is_empty() && peak == expected_peak && bound_ok,
        peak,
        expected_peak,
        set_size: m,
        flock_size: family.flock_size(),
        length: family.length(),
        q: family.q(),
        bound_ok,
        violations,
        mode,
    }
}

/// Check that for every pair of distinct sets and every flock index, the
/// difference of corresponding members is (q/2) times a binary sequence of
/// Hamming weight exactly L/2.
///
/// Only meaningful for families built by the orthogonal constructions;
/// anything else is a domain error.
pub fn check_weight_lemma(family: &MocsFamily) -> Result<bool> {
    match family.provenance().method {
        Method::Mocs | Method::MocsCor => {}
        other => return Err(Error::UnsupportedProvenance { tag: other.tag() }),
    }
    let q = family.q();
    let half = q / 2;
    let length = family.length();
    let sets = family.sets();
    for p1 in 0..sets.len() {
        for p2 in p1 + 1..sets.len() {
            for (a, b) in sets[p1].members().iter().zip(sets[p2].members()) {
                let mut weight = 0u64;
                for (&x, &y) in a.values().iter().zip(b.values()) {
                    let diff = (x + q - y) % q;
                    if diff == half {
                        weight += 1;
                    } else if diff != 0 {
                        return Ok(false); // not of the form (q/2) * binary
                    }
                }
                if weight != length / 2 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
