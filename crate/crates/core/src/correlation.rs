//! Aperiodic auto- and cross-correlation over the ring of q-th roots of
//! unity.
//!
//! A correlation value is kept exactly, as a histogram over exponents: entry
//! e counts the index pairs contributing `xi^e` with `xi = exp(2*pi*i/q)`.
//! Zero-testing either reduces the exponent polynomial modulo the q-th
//! cyclotomic polynomial (exact, the default) or sums the complex terms in
//! floating point. Counting alone cannot decide vanishing sums of roots of
//! unity once q has an odd prime factor, hence the cyclotomic route.

use std::fmt;

use crate::constructions::ComplementarySet;
use crate::error::{Error, Result};
use crate::gbf::QarySequence;

/// How to decide whether a correlation value is zero.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum ZeroTestMode {
    /// Divisibility of the exponent polynomial by the q-th cyclotomic
    /// polynomial, in integer arithmetic.
    #[default]
    Exact,
    /// Complex magnitude below the tolerance.
    Float { tolerance: f64 },
}

impl ZeroTestMode {
    /// The default float tolerance. Correlation magnitudes here stay below
    /// a few thousand, so doubles leave more than six orders of margin.
    pub const DEFAULT_TOLERANCE: f64 = 1e-9;

    /// Float mode at the default tolerance.
    pub fn float() -> Self {
        ZeroTestMode::Float { tolerance: Self::DEFAULT_TOLERANCE }
    }
}

impl fmt::Display for ZeroTestMode {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZeroTestMode::Exact => write!(out, "exact"),
            ZeroTestMode::Float { tolerance } => write!(out, "float(tol={tolerance:e})"),
        }
    }
}

/// An exact element of Z[xi], xi a primitive q-th root of unity, stored as
/// non-negative exponent counts: the value is `sum_e counts[e] * xi^e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrelationValue {
    q: u32,
    counts: Vec<u64>,
}

impl CorrelationValue {
    /// The zero value (empty histogram) over Z_q.
    pub fn zero(q: u32) -> Result<Self> {
        if q < 2 {
            return Err(Error::AlphabetTooSmall { q });
        }
        Ok(CorrelationValue { q, counts: vec![0; q as usize] })
    }

    /// Build from an explicit histogram of length q.
    pub fn from_counts(q: u32, counts: Vec<u64>) -> Result<Self> {
        if q < 2 {
            return Err(Error::AlphabetTooSmall { q });
        }
        if counts.len() != q as usize {
            return Err(Error::LengthMismatch {
                left: counts.len() as u64,
                right: q as u64,
            });
        }
        Ok(CorrelationValue { q, counts })
    }

    /// Alphabet size.
    pub fn q(&self) -> u32 {
        self.q
    }

    /// The exponent histogram.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Total count; equals the number of overlapping positions, L - |u|.
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// The value with every exponent negated mod q (complex conjugate).
    pub fn conjugate(&self) -> Self {
        let q = self.q as usize;
        let mut counts = vec![0u64; q];
        for (e, &c) in self.counts.iter().enumerate() {
            counts[(q - e) % q] = c;
        }
        CorrelationValue { q: self.q, counts }
    }

    /// Accumulate another histogram over the same alphabet.
    pub fn accumulate(&mut self, other: &CorrelationValue) -> Result<()> {
        if self.q != other.q {
            return Err(Error::AlphabetMismatch { left: self.q, right: other.q });
        }
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
        Ok(())
    }

    /// The complex value as (re, im).
    pub fn to_complex(&self) -> (f64, f64) {
        let q = self.q as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (e, &c) in self.counts.iter().enumerate() {
            if c != 0 {
                let angle = 2.0 * std::f64::consts::PI * e as f64 / q;
                re += c as f64 * angle.cos();
                im += c as f64 * angle.sin();
            }
        }
        (re, im)
    }

    /// Complex magnitude of the value.
    pub fn magnitude(&self) -> f64 {
        let (re, im) = self.to_complex();
        re.hypot(im)
    }

    /// Whether the represented value is zero, under the chosen mode.
    pub fn is_zero(&self, mode: ZeroTestMode) -> bool {
        match mode {
            ZeroTestMode::Exact => cyclotomic::reduces_to_zero(self.q, &self.counts),
            ZeroTestMode::Float { tolerance } => self.magnitude() < tolerance,
        }
    }
}

impl fmt::Display for CorrelationValue {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, &c) in self.counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(out, " + ")?;
            }
            first = false;
            write!(out, "{c}*w^{e}")?;
        }
        if first {
            write!(out, "0")?;
        }
        Ok(())
    }
}

fn check_pair(c: &QarySequence, d: &QarySequence, shift: i64) -> Result<()> {
    if c.q() != d.q() {
        return Err(Error::AlphabetMismatch { left: c.q(), right: d.q() });
    }
    if c.len() != d.len() {
        return Err(Error::LengthMismatch {
            left: c.len() as u64,
            right: d.len() as u64,
        });
    }
    let max = c.len() as u64 - 1;
    if shift.unsigned_abs() > max {
        return Err(Error::ShiftOutOfRange { shift, max });
    }
    Ok(())
}

/// Aperiodic cross-correlation of c against d at time shift u.
///
/// For u >= 0 this is the histogram of `c[k+u] - d[k]` over
/// `k = 0..L-1-u`; for u < 0 the histogram of `c[k] - d[k-u]` over
/// `k = 0..L-1+u`.
pub fn cross_correlation(
    c: &QarySequence,
    d: &QarySequence,
    shift: i64,
) -> Result<CorrelationValue> {
    check_pair(c, d, shift)?;
    let mut value = CorrelationValue::zero(c.q())?;
    accumulate_cross(&mut value, c, d, shift);
    Ok(value)
}

/// Aperiodic autocorrelation: cross-correlation of a sequence with itself.
pub fn auto_correlation(c: &QarySequence, shift: i64) -> Result<CorrelationValue> {
    cross_correlation(c, c, shift)
}

/// Correlation of two complementary sets: the histogram sum of the
/// member-by-member cross-correlations.
pub fn set_correlation(
    a: &ComplementarySet,
    b: &ComplementarySet,
    shift: i64,
) -> Result<CorrelationValue> {
    if a.flock_size() != b.flock_size() {
        return Err(Error::FlockSizeMismatch {
            left: a.flock_size(),
            right: b.flock_size(),
        });
    }
    let (c0, d0) = (&a.members()[0], &b.members()[0]);
    check_pair(c0, d0, shift)?;
    let mut value = CorrelationValue::zero(a.q())?;
    for (c, d) in a.members().iter().zip(b.members()) {
        check_pair(c, d, shift)?;
        accumulate_cross(&mut value, c, d, shift);
    }
    Ok(value)
}

/// Histogram the per-position exponents of `rho(c, d; shift)` into `value`
/// without allocating.
pub(crate) fn accumulate_cross(
    value: &mut CorrelationValue,
    c: &QarySequence,
    d: &QarySequence,
    shift: i64,
) {
    let q = value.q;
    let (cv, dv) = (c.values(), d.values());
    if shift >= 0 {
        let u = shift as usize;
        for k in 0..cv.len() - u {
            let mut e = cv[k + u] + q - dv[k];
            if e >= q {
                e -= q;
            }
            value.counts[e as usize] += 1;
        }
    } else {
        // u < 0 pairs c[k] with d[k - u] = d[k + |u|]
        let s = (-shift) as usize;
        for k in 0..cv.len() - s {
            let mut e = cv[k] + q - dv[k + s];
            if e >= q {
                e -= q;
            }
            value.counts[e as usize] += 1;
        }
    }
}

/// Exact zero-testing by reduction modulo the q-th cyclotomic polynomial.
pub(crate) mod cyclotomic {
    use std::cell::RefCell;
    use std::collections::HashMap;
    use std::rc::Rc;

    /// Exact division of integer polynomials; panics if the divisor does not
    /// divide exactly (cyclotomic factors always do). Coefficient order is
    /// ascending. The divisor must be monic.
    fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
        debug_assert_eq!(*den.last().unwrap(), 1, "divisor must be monic");
        let mut rem = num.to_vec();
        let dn = den.len() - 1;
        let mut quot = vec![0i64; rem.len() - dn];
        for i in (dn..rem.len()).rev() {
            let coeff = rem[i];
            if coeff == 0 {
                continue;
            }
            quot[i - dn] = coeff;
            for (j, &dc) in den.iter().enumerate() {
                rem[i - dn + j] -= coeff * dc;
            }
        }
        debug_assert!(rem.iter().all(|&r| r == 0), "non-exact division");
        quot
    }

    /// All divisors of n, ascending.
    fn divisors(n: u32) -> Vec<u32> {
        let mut divs = Vec::new();
        let mut i = 1;
        while i * i <= n {
            if n % i == 0 {
                divs.push(i);
                if i != n / i {
                    divs.push(n / i);
                }
            }
            i += 1;
        }
        divs.sort_unstable();
        divs
    }

    /// The n-th cyclotomic polynomial, by iterated exact division of
    /// `x^n - 1` by `Phi_d` for every proper divisor d.
    pub fn phi(n: u32) -> Vec<i64> {
        assert!(n >= 1);
        if n == 1 {
            return vec![-1, 1];
        }
        let mut poly = vec![0i64; n as usize + 1];
        poly[0] = -1;
        poly[n as usize] = 1;
        for d in divisors(n) {
            if d == n {
                continue;
            }
            poly = exact_div(&poly, &phi_cached(d));
        }
        poly
    }

    thread_local! {
        static PHI_CACHE: RefCell<HashMap<u32, Rc<Vec<i64>>>> = RefCell::new(HashMap::new());
    }

    fn phi_cached(n: u32) -> Rc<Vec<i64>> {
        PHI_CACHE.with(|cache| {
            if let Some(p) = cache.borrow().get(&n) {
                return Rc::clone(p);
            }
            let p = Rc::new(phi(n));
            cache.borrow_mut().insert(n, Rc::clone(&p));
            p
        })
    }

    /// Whether `sum_e counts[e] * x^e` is divisible by Phi_q, i.e. whether
    /// the corresponding sum of q-th roots of unity vanishes.
    pub fn reduces_to_zero(q: u32, counts: &[u64]) -> bool {
        let phi = phi_cached(q);
        let dn = phi.len() - 1;
        let mut rem: Vec<i64> = counts.iter().map(|&c| c as i64).collect();
        for i in (dn..rem.len()).rev() {
            let coeff = rem[i];
            if coeff == 0 {
                continue;
            }
            rem[i] = 0;
            for (j, &dc) in phi.iter().take(dn).enumerate() {
                rem[i - dn + j] -= coeff * dc;
            }
        }
        rem.iter().all(|&r| r == 0)
    }

}
