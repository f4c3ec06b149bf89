//! Generalized Boolean functions over Z_q and the q-ary sequences they
//! generate.
//!
//! A generalized Boolean function (GBF) maps an m-bit vector to Z_q. Its
//! value table, read in index order, is a sequence of length 2^m; dropping
//! the tail yields the truncated sequence used by the non-power-of-two
//! constructions.
//!
//! The bit convention is fixed crate-wide: bit 1 is the *least* significant
//! bit of the index, `i = sum_j i_j * 2^(j-1)`. Every digit-exact test in
//! the crate depends on this ordering.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A monomial: a set of variable indices in {1, .., m}, empty for the
/// constant term. Stored sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    /// Build from any list of variable indices; sorts and deduplicates.
    pub fn new(vars: impl IntoIterator<Item = u32>) -> Self {
        let mut v: Vec<u32> = vars.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Monomial(v)
    }

    /// The constant-term monomial.
    pub fn constant() -> Self {
        Monomial(Vec::new())
    }

    /// Variable indices, ascending.
    pub fn vars(&self) -> &[u32] {
        &self.0
    }

    /// Number of variables in the product.
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Product of the selected bits of `i`.
    fn eval(&self, i: BitIndex) -> u32 {
        self.0.iter().map(|&v| i.bit(v)).product()
    }
}

/// An index into the value table of an m-variable function, together with
/// its binary digits `(i_1, .., i_m)` where `i = sum_j i_j * 2^(j-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BitIndex {
    index: u64,
    width: u32,
}

impl BitIndex {
    /// Wrap `index` for an `m`-variable domain. Fails if `index >= 2^m`.
    pub fn new(index: u64, m: u32) -> Result<Self> {
        let domain = 1u64 << m;
        if index >= domain {
            return Err(Error::IndexOutOfRange { index, domain, m });
        }
        Ok(BitIndex { index, width: m })
    }

    /// The wrapped integer.
    pub fn index(&self) -> u64 {
        self.index
    }

    /// Number of binary digits (m).
    pub fn width(&self) -> u32 {
        self.width
    }

    /// Digit `i_j` for 1-based `j`; bit 1 is the least significant.
    pub fn bit(&self, j: u32) -> u32 {
        debug_assert!(j >= 1 && j <= self.width);
        ((self.index >> (j - 1)) & 1) as u32
    }

    /// All digits `(i_1, .., i_m)` in order.
    pub fn bits(&self) -> impl Iterator<Item = u32> + '_ {
        (1..=self.width).map(move |j| self.bit(j))
    }
}

/// A length-L sequence over Z_q.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QarySequence {
    q: u32,
    values: Vec<u32>,
}

impl QarySequence {
    /// Validate that every element lies in {0, .., q-1}.
    pub fn new(q: u32, values: Vec<u32>) -> Result<Self> {
        if q < 2 {
            return Err(Error::AlphabetTooSmall { q });
        }
        if values.is_empty() {
            return Err(Error::LengthOutOfRange { len: 0, max: u64::MAX });
        }
        if let Some(&bad) = values.iter().find(|&&v| v >= q) {
            return Err(Error::SymbolOutOfRange { symbol: bad, q });
        }
        Ok(QarySequence { q, values })
    }

    /// Alphabet size.
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Sequence length L.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// True when the sequence has no elements (never, by construction).
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The elements.
    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Hamming weight: number of nonzero entries.
    pub fn hamming_weight(&self) -> usize {
        self.values.iter().filter(|&&v| v != 0).count()
    }
}

/// Elementwise `(a_i + scale * b_i) mod q`. Both sequences must share q and
/// length.
pub fn add_sequences(a: &QarySequence, b: &QarySequence, scale: u32) -> Result<QarySequence> {
    if a.q != b.q {
        return Err(Error::AlphabetMismatch { left: a.q, right: b.q });
    }
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len() as u64,
            right: b.len() as u64,
        });
    }
    let q = a.q as u64;
    let scale = scale as u64 % q;
    let values = a
        .values
        .iter()
        .zip(&b.values)
        .map(|(&x, &y)| ((x as u64 + scale * y as u64) % q) as u32)
        .collect();
    Ok(QarySequence { q: a.q, values })
}

/// The indicator sequence of variable `l`: entry i is the digit `i_l`,
/// truncated to `len` entries. The alphabet is the caller's `q` so the
/// result can be scaled into q-ary sequences directly.
pub fn indicator_sequence(l: u32, m: u32, len: u64, q: u32) -> Result<QarySequence> {
    if l < 1 || l > m {
        return Err(Error::VariableOutOfRange { var: l, m });
    }
    if len < 1 || len > (1u64 << m) {
        return Err(Error::LengthOutOfRange { len, max: 1u64 << m });
    }
    if q < 2 {
        return Err(Error::AlphabetTooSmall { q });
    }
    let values = (0..len).map(|i| ((i >> (l - 1)) & 1) as u32).collect();
    Ok(QarySequence { q, values })
}

/// A generalized Boolean function: a Z_q-valued polynomial in m binary
/// variables, kept in canonical algebraic normal form (coefficients reduced
/// mod q, zero-coefficient monomials absent).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedBooleanFunction {
    q: u32,
    m: u32,
    terms: BTreeMap<Monomial, u32>,
}

impl GeneralizedBooleanFunction {
    /// The zero function of m variables over Z_q.
    pub fn zero(q: u32, m: u32) -> Result<Self> {
        if q < 2 {
            return Err(Error::AlphabetTooSmall { q });
        }
        if m < 1 {
            return Err(Error::VariableOutOfRange { var: 0, m });
        }
        Ok(GeneralizedBooleanFunction { q, m, terms: BTreeMap::new() })
    }

    /// Build from (monomial variables, coefficient) pairs. Coefficients are
    /// reduced mod q; repeated monomials accumulate; zero terms vanish.
    pub fn new(
        q: u32,
        m: u32,
        terms: impl IntoIterator<Item = (Vec<u32>, u32)>,
    ) -> Result<Self> {
        let mut f = Self::zero(q, m)?;
        for (vars, coeff) in terms {
            f.add_term(&vars, coeff)?;
        }
        Ok(f)
    }

    /// Add `coeff * prod(vars)` to the function, canonicalizing.
    pub fn add_term(&mut self, vars: &[u32], coeff: u32) -> Result<()> {
        for &v in vars {
            if v < 1 || v > self.m {
                return Err(Error::VariableOutOfRange { var: v, m: self.m });
            }
        }
        let mono = Monomial::new(vars.iter().copied());
        let entry = self.terms.entry(mono).or_insert(0);
        *entry = (*entry + coeff % self.q) % self.q;
        if *entry == 0 {
            // remove to keep the canonical form
            let mono = Monomial::new(vars.iter().copied());
            self.terms.remove(&mono);
        }
        Ok(())
    }

    /// Alphabet size.
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Number of binary variables.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// The canonical term map.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u32)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    /// Largest monomial degree present (0 for the zero or constant function).
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Evaluate at a domain point.
    pub fn eval(&self, i: BitIndex) -> u32 {
        debug_assert_eq!(i.width(), self.m);
        let mut acc: u64 = 0;
        for (mono, coeff) in &self.terms {
            acc += *coeff as u64 * mono.eval(i) as u64;
        }
        (acc % self.q as u64) as u32
    }

    /// Evaluate at a raw index, checking it lies in the domain.
    pub fn eval_index(&self, index: u64) -> Result<u32> {
        Ok(self.eval(BitIndex::new(index, self.m)?))
    }

    /// The first L entries `(f_0, .., f_{L-1})` of the value table.
    pub fn truncated_sequence(&self, len: u64) -> Result<QarySequence> {
        let max = 1u64 << self.m;
        if len < 1 || len > max {
            return Err(Error::LengthOutOfRange { len, max });
        }
        let values = (0..len)
            .map(|i| self.eval(BitIndex { index: i, width: self.m }))
            .collect();
        Ok(QarySequence { q: self.q, values })
    }

    /// The full 2^m-entry value table.
    pub fn full_sequence(&self) -> QarySequence {
        self.truncated_sequence(1u64 << self.m)
            .expect("2^m is always a valid length")
    }

    /// Parse the CLI text syntax: terms joined by `+`, each term either a
    /// bare constant or `c*x<i>*x<j>...` (the coefficient may be omitted for
    /// an implicit 1). Whitespace is ignored.
    pub fn parse(text: &str, q: u32, m: u32) -> Result<Self> {
        let mut f = Self::zero(q, m)?;
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::GbfSyntax {
                term: text.to_string(),
                reason: "empty expression".to_string(),
            });
        }
        for term in compact.split('+') {
            if term.is_empty() {
                return Err(Error::GbfSyntax {
                    term: term.to_string(),
                    reason: "empty term".to_string(),
                });
            }
            let mut coeff: Option<u32> = None;
            let mut vars = Vec::new();
            for factor in term.split('*') {
                if let Some(rest) = factor.strip_prefix('x') {
                    let var: u32 = rest.parse().map_err(|_| Error::GbfSyntax {
                        term: term.to_string(),
                        reason: format!("bad variable `{factor}`"),
                    })?;
                    vars.push(var);
                } else {
                    let c: u32 = factor.parse().map_err(|_| Error::GbfSyntax {
                        term: term.to_string(),
                        reason: format!("bad factor `{factor}`"),
                    })?;
                    if coeff.is_some() {
                        return Err(Error::GbfSyntax {
                            term: term.to_string(),
                            reason: "more than one numeric factor".to_string(),
                        });
                    }
                    coeff = Some(c);
                }
            }
            f.add_term(&vars, coeff.unwrap_or(1))?;
        }
        Ok(f)
    }
}

impl fmt::Display for GeneralizedBooleanFunction {
    /// Canonical text form, re-parsable by [`GeneralizedBooleanFunction::parse`].
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(out, "0");
        }
        let mut first = true;
        for (mono, coeff) in &self.terms {
            if !first {
                write!(out, "+")?;
            }
            first = false;
            if mono.degree() == 0 {
                write!(out, "{coeff}")?;
            } else {
                write!(out, "{coeff}")?;
                for v in mono.vars() {
                    write!(out, "*x{v}")?;
                }
            }
        }
        Ok(())
    }
}
