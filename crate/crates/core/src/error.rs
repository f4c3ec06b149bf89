//! Error type shared by every module of the crate.

use thiserror::Error;

/// Everything that can go wrong when building or interrogating sequences.
///
/// Precondition failures of the constructions carry the data needed to
/// explain *why* the parameters are invalid (e.g. the offending traversal
/// prefix), so a front end can print a useful diagnostic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The constructions require an even alphabet.
    #[error("alphabet size q must be even, got {q}")]
    OddAlphabet { q: u32 },

    /// q < 2 cannot host a sequence alphabet.
    #[error("alphabet size q must be at least 2, got {q}")]
    AlphabetTooSmall { q: u32 },

    /// A sequence element was outside {0, .., q-1}.
    #[error("symbol {symbol} is not a Z_{q} element")]
    SymbolOutOfRange { symbol: u32, q: u32 },

    /// A variable index fell outside {1, .., m}.
    #[error("variable index {var} outside 1..={m}")]
    VariableOutOfRange { var: u32, m: u32 },

    /// An evaluation index fell outside the 2^m-entry domain.
    #[error("index {index} outside the {domain}-entry domain of an m={m} function")]
    IndexOutOfRange { index: u64, domain: u64, m: u32 },

    /// A requested truncation length was outside 1..=2^m.
    #[error("length {len} outside 1..={max}")]
    LengthOutOfRange { len: u64, max: u64 },

    /// Two sequences that must have equal length do not.
    #[error("sequence lengths differ: {left} vs {right}")]
    LengthMismatch { left: u64, right: u64 },

    /// Two values that must share an alphabet do not.
    #[error("alphabet sizes differ: {left} vs {right}")]
    AlphabetMismatch { left: u32, right: u32 },

    /// A correlation shift with |u| >= L.
    #[error("shift {shift} outside -{max}..={max}")]
    ShiftOutOfRange { shift: i64, max: u64 },

    /// Two complementary sets that must have equal flock size do not.
    #[error("flock sizes differ: {left} vs {right}")]
    FlockSizeMismatch { left: usize, right: usize },

    /// A set or family was constructed without any member.
    #[error("a complementary set needs at least one sequence")]
    EmptySet,

    /// The ordered parts do not partition {1, .., m-1}.
    #[error("invalid partition of {{1..{upper}}}: {reason}")]
    InvalidPartition { upper: u32, reason: String },

    /// The shift parameter t was outside the range a construction allows.
    #[error("t={t} outside {lo}..={hi}")]
    TOutOfRange { t: u32, lo: u32, hi: u32 },

    /// The traversal prefix does not cover {1, .., t}.
    ///
    /// `found` is the actual prefix of the partition traversal, in traversal
    /// order; the construction requires it to equal {1, .., t} as a set.
    #[error("prefix condition violated: traversal prefix {found:?} is not the set {{1..={t}}}")]
    PrefixCondition { found: Vec<u32>, t: u32 },

    /// beta' outside 1..=m_k in the hybrid-mask construction.
    #[error("beta'={beta_prime} outside 1..={max}")]
    BetaPrimeOutOfRange { beta_prime: u32, max: u32 },

    /// A family whose set size exceeds its flock size (impossible by the
    /// M <= N bound).
    #[error("set size {set_size} exceeds flock size {flock_size}")]
    SetSizeBound { set_size: usize, flock_size: usize },

    /// An operation that only applies to families built by the orthogonal
    /// constructions was asked of something else.
    #[error("operation requires a Theorem-2 or Corollary-1 family, got a {tag} family")]
    UnsupportedProvenance { tag: &'static str },

    /// The linear coefficient list has the wrong arity.
    #[error("coefficient list must have m+1={expected} entries, got {got}")]
    CoefficientCount { expected: usize, got: usize },

    /// The enumeration refuses parameters beyond the desk-scale cap.
    #[error("max m {m_max} exceeds the desk-scale cap of {cap}; exhaustive verification beyond that is not sensible")]
    DeskScaleCap { m_max: u32, cap: u32 },

    /// Text that is not a valid generalized Boolean function.
    #[error("cannot parse GBF term `{term}`: {reason}")]
    GbfSyntax { term: String, reason: String },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
