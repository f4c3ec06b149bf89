//! Golay complementary sets and mutually orthogonal complementary sets
//! (MOCSs) of length 2^(m-1) + 2^t, generated from generalized Boolean
//! functions, together with an exhaustive brute-force verifier.
//!
//! The crate is organized around a strict separation:
//!
//! * [`gbf`] represents Z_q-valued Boolean functions and their (possibly
//!   truncated) value-table sequences;
//! * [`constructions`] builds sets and families from a partition plan —
//!   quadratic chains masked by head variables, tail variables and a hybrid
//!   top-bit mask;
//! * [`correlation`] computes aperiodic correlations exactly over the ring
//!   of q-th roots of unity, with cyclotomic zero-testing;
//! * [`verification`] certifies the defining identities by exhaustion,
//!   using only the correlation definitions — never the construction
//!   structure;
//! * [`enumeration`] sweeps all parameters at small m and reports the
//!   achievable (set size, flock size, length) cells, each witness
//!   re-certified by the verifier;
//! * [`tables`] embeds the published existence tables and diffs enumeration
//!   output against them.
//!
//! ```
//! use mocs_core::constructions::{build_mocs_theorem2, PartitionPlan};
//! use mocs_core::correlation::ZeroTestMode;
//! use mocs_core::verification::verify_mocs;
//!
//! let plan = PartitionPlan::new(6, vec![vec![1, 2], vec![3, 4, 5]], 3)?;
//! let family = build_mocs_theorem2(4, &plan, &[])?;
//! assert_eq!(
//!     (family.set_size(), family.flock_size(), family.length()),
//!     (2, 8, 40)
//! );
//! assert!(verify_mocs(&family, ZeroTestMode::Exact).passed);
//! # Ok::<(), mocs_core::Error>(())
//! ```

pub mod constructions;
pub mod correlation;
pub mod enumeration;
pub mod error;
pub mod gbf;
pub mod tables;
pub mod verification;

pub use error::{Error, Result};
