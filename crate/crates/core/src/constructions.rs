//! Constructions of complementary sets of length 2^(m-1) + 2^t.
//!
//! From a partition of {1, .., m-1} with a bijection per part, a shift
//! parameter t and linear coefficients, these builders produce
//!
//! * a Golay complementary set of flock size 2^(k+1) ([`build_gcs_theorem1`]),
//! * a family of 2^k' mutually orthogonal such sets ([`build_mocs_theorem2`]),
//! * a larger family of 2^k sets reaching set size = half the flock size,
//!   using a hybrid mask that switches variables on the top bit
//!   ([`build_mocs_corollary1`]).
//!
//! The builders never assume their own correctness: everything they emit can
//! be (and, in the tests, is) re-checked by the brute-force verifier.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gbf::{indicator_sequence, GeneralizedBooleanFunction, QarySequence};

/// Which construction produced a set or family; also the file-format tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// A single Golay complementary set (quadratic-chain construction).
    Gcs,
    /// Mutually orthogonal sets masked by end-of-chain variables.
    Mocs,
    /// Mutually orthogonal sets including the hybrid mask, set size N/2.
    MocsCor,
}

impl Method {
    /// The stable text tag used in files and CLI arguments.
    pub fn tag(&self) -> &'static str {
        match self {
            Method::Gcs => "gcs",
            Method::Mocs => "mocs",
            Method::MocsCor => "mocs-cor",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        out.write_str(self.tag())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "gcs" => Ok(Method::Gcs),
            "mocs" => Ok(Method::Mocs),
            "mocs-cor" => Ok(Method::MocsCor),
            other => Err(format!("unknown construction `{other}`")),
        }
    }
}

/// Keep constructible lengths at desk scale; 2^20-entry value tables are
/// already beyond anything the exhaustive verifier can chew.
const MAX_PLAN_M: u32 = 20;

/// An ordered partition of {1, .., m-1} together with the per-part
/// bijections and the shift parameter t.
///
/// `parts[a]` lists part I_(a+1) in bijection order: `parts[a][b]` is
/// pi_(a+1)(b+1). Storing the parts ordered therefore captures both the
/// partition and the bijections.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionPlan {
    m: u32,
    parts: Vec<Vec<u32>>,
    t: u32,
}

/// The decomposition t = m_1 + .. + m_(a'-1) + b' with 1 <= b' <= m_a',
/// plus k', the number of whole parts fitting inside t.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TDecomposition {
    /// 1-based index a' of the part the prefix ends in.
    pub alpha_prime: usize,
    /// How far into part a' the prefix reaches (1-based).
    pub beta_prime: u32,
    /// Largest k' with m_1 + .. + m_k' <= t.
    pub k_prime: usize,
}

impl PartitionPlan {
    /// Validate and build a plan.
    ///
    /// Requirements: m >= 2; the parts are nonempty, disjoint and cover
    /// {1, .., m-1} exactly; 0 <= t <= m-1.
    pub fn new(m: u32, parts: Vec<Vec<u32>>, t: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidPartition {
                upper: m.saturating_sub(1),
                reason: "m must be at least 2".to_string(),
            });
        }
        if m > MAX_PLAN_M {
            return Err(Error::DeskScaleCap { m_max: m, cap: MAX_PLAN_M });
        }
        if parts.is_empty() {
            return Err(Error::InvalidPartition {
                upper: m - 1,
                reason: "no parts given".to_string(),
            });
        }
        let mut seen = vec![false; m as usize]; // seen[v-1] for v in 1..=m-1
        let mut count = 0u32;
        for (idx, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return Err(Error::InvalidPartition {
                    upper: m - 1,
                    reason: format!("part {} is empty", idx + 1),
                });
            }
            for &v in part {
                if v < 1 || v > m - 1 {
                    return Err(Error::InvalidPartition {
                        upper: m - 1,
                        reason: format!("element {v} outside 1..={}", m - 1),
                    });
                }
                if seen[(v - 1) as usize] {
                    return Err(Error::InvalidPartition {
                        upper: m - 1,
                        reason: format!("element {v} appears twice"),
                    });
                }
                seen[(v - 1) as usize] = true;
                count += 1;
            }
        }
        if count != m - 1 {
            return Err(Error::InvalidPartition {
                upper: m - 1,
                reason: format!("parts cover {count} of {} elements", m - 1),
            });
        }
        if t > m - 1 {
            return Err(Error::TOutOfRange { t, lo: 0, hi: m - 1 });
        }
        Ok(PartitionPlan { m, parts, t })
    }

    /// Number of binary variables m.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// The shift parameter t.
    pub fn t(&self) -> u32 {
        self.t
    }

    /// The same plan with a different t.
    pub fn with_t(&self, t: u32) -> Result<Self> {
        Self::new(self.m, self.parts.clone(), t)
    }

    /// Number of parts k.
    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    /// The ordered parts; `parts()[a][b]` is pi_(a+1)(b+1).
    pub fn parts(&self) -> &[Vec<u32>] {
        &self.parts
    }

    /// Part sizes (m_1, .., m_k).
    pub fn part_sizes(&self) -> Vec<u32> {
        self.parts.iter().map(|p| p.len() as u32).collect()
    }

    /// pi_alpha(beta), both 1-based.
    pub fn pi(&self, alpha: usize, beta: usize) -> u32 {
        self.parts[alpha - 1][beta - 1]
    }

    /// The sequence length this plan constructs: 2^(m-1) + 2^t.
    pub fn sequence_length(&self) -> u64 {
        (1u64 << (self.m - 1)) + (1u64 << self.t)
    }

    /// Decompose t across the part sizes. `Ok(None)` when t = 0 (the prefix
    /// condition is then vacuous and no decomposition exists).
    pub fn decompose_t(&self) -> Result<Option<TDecomposition>> {
        if self.t == 0 {
            return Ok(None);
        }
        let t = self.t;
        let mut cum = 0u32;
        let mut alpha_prime = 0usize;
        let mut beta_prime = 0u32;
        let mut k_prime = 0usize;
        for (idx, part) in self.parts.iter().enumerate() {
            let size = part.len() as u32;
            if alpha_prime == 0 && cum + size >= t {
                alpha_prime = idx + 1;
                beta_prime = t - cum;
            }
            if cum + size <= t {
                k_prime = idx + 1;
            }
            cum += size;
        }
        // t <= m-1 = sum of part sizes, so the scan always lands.
        debug_assert!(alpha_prime >= 1);
        Ok(Some(TDecomposition { alpha_prime, beta_prime, k_prime }))
    }

    /// The first t values of the traversal
    /// pi_1(1), .., pi_1(m_1), pi_2(1), .., in traversal order.
    pub fn traversal_prefix(&self) -> Vec<u32> {
        self.parts
            .iter()
            .flatten()
            .copied()
            .take(self.t as usize)
            .collect()
    }

    /// Whether the first t traversal values form exactly the set {1, .., t}.
    /// Vacuously true for t = 0.
    pub fn check_prefix_condition(&self) -> bool {
        let t = self.t;
        if t == 0 {
            return true;
        }
        let prefix = self.traversal_prefix();
        let mut seen = vec![false; t as usize];
        for &v in &prefix {
            if v > t || seen[(v - 1) as usize] {
                return false;
            }
            seen[(v - 1) as usize] = true;
        }
        prefix.len() == t as usize
    }

    /// Error out with the offending prefix when the condition fails.
    fn require_prefix_condition(&self) -> Result<()> {
        if self.check_prefix_condition() {
            Ok(())
        } else {
            Err(Error::PrefixCondition {
                found: self.traversal_prefix(),
                t: self.t,
            })
        }
    }
}

/// An (N, L)-complementary set: N sequences of common length L over Z_q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementarySet {
    q: u32,
    length: u64,
    members: Vec<QarySequence>,
}

impl ComplementarySet {
    /// Validate that all members share alphabet and length.
    pub fn new(members: Vec<QarySequence>) -> Result<Self> {
        let first = members.first().ok_or(Error::EmptySet)?;
        let (q, length) = (first.q(), first.len() as u64);
        for s in &members {
            if s.q() != q {
                return Err(Error::AlphabetMismatch { left: q, right: s.q() });
            }
            if s.len() as u64 != length {
                return Err(Error::LengthMismatch { left: length, right: s.len() as u64 });
            }
        }
        Ok(ComplementarySet { q, length, members })
    }

    /// Alphabet size.
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Common sequence length L.
    pub fn length(&self) -> u64 {
        self.length
    }

    /// Flock size N.
    pub fn flock_size(&self) -> usize {
        self.members.len()
    }

    /// The sequences, in construction order.
    pub fn members(&self) -> &[QarySequence] {
        &self.members
    }
}

/// Full parameters of a constructed family, kept for reporting and for the
/// lemma checks that only apply to specific constructions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    /// Which construction built the family.
    pub method: Method,
    /// Alphabet size.
    pub q: u32,
    /// Partition, bijections and t.
    pub plan: PartitionPlan,
    /// Linear coefficients (g_0, .., g_m); empty means all zero.
    pub g: Vec<u32>,
}

/// An ordered family of M complementary sets sharing (q, N, L).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MocsFamily {
    sets: Vec<ComplementarySet>,
    provenance: Provenance,
}

impl MocsFamily {
    /// Validate shape: at least one set, identical (q, N, L) across sets,
    /// and the set-size bound M <= N.
    pub fn new(sets: Vec<ComplementarySet>, provenance: Provenance) -> Result<Self> {
        let first = sets.first().ok_or(Error::EmptySet)?;
        let (q, n, l) = (first.q(), first.flock_size(), first.length());
        for s in &sets {
            if s.q() != q {
                return Err(Error::AlphabetMismatch { left: q, right: s.q() });
            }
            if s.flock_size() != n {
                return Err(Error::FlockSizeMismatch { left: n, right: s.flock_size() });
            }
            if s.length() != l {
                return Err(Error::LengthMismatch { left: l, right: s.length() });
            }
        }
        if sets.len() > n {
            return Err(Error::SetSizeBound { set_size: sets.len(), flock_size: n });
        }
        Ok(MocsFamily { sets, provenance })
    }

    /// Alphabet size.
    pub fn q(&self) -> u32 {
        self.sets[0].q()
    }

    /// Set size M.
    pub fn set_size(&self) -> usize {
        self.sets.len()
    }

    /// Flock size N.
    pub fn flock_size(&self) -> usize {
        self.sets[0].flock_size()
    }

    /// Sequence length L.
    pub fn length(&self) -> u64 {
        self.sets[0].length()
    }

    /// The sets, in construction order (p ascending).
    pub fn sets(&self) -> &[ComplementarySet] {
        &self.sets
    }

    /// Construction parameters.
    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }
}

fn require_even(q: u32) -> Result<()> {
    if q < 2 {
        return Err(Error::AlphabetTooSmall { q });
    }
    if q % 2 != 0 {
        return Err(Error::OddAlphabet { q });
    }
    Ok(())
}

fn normalize_g(g: &[u32], m: u32) -> Result<Vec<u32>> {
    if g.is_empty() {
        return Ok(vec![0; m as usize + 1]);
    }
    if g.len() != m as usize + 1 {
        return Err(Error::CoefficientCount { expected: m as usize + 1, got: g.len() });
    }
    Ok(g.to_vec())
}

/// The base function: (q/2) * sum over parts of the chain terms
/// x_(pi_a(b)) * x_(pi_a(b+1)), plus the linear part g_0 + sum g_l x_l.
///
/// `g` must be empty (all zero) or hold the m+1 coefficients (g_0, .., g_m).
pub fn base_gbf(q: u32, plan: &PartitionPlan, g: &[u32]) -> Result<GeneralizedBooleanFunction> {
    require_even(q)?;
    let m = plan.m();
    let g = normalize_g(g, m)?;
    let mut f = GeneralizedBooleanFunction::zero(q, m)?;
    let half = q / 2;
    for part in plan.parts() {
        for pair in part.windows(2) {
            f.add_term(&[pair[0], pair[1]], half)?;
        }
    }
    f.add_term(&[], g[0])?;
    for l in 1..=m {
        f.add_term(&[l], g[l as usize])?;
    }
    Ok(f)
}

/// XOR a binary mask sequence into an accumulator of the same length.
fn xor_mask(acc: &mut [u32], mask: &QarySequence) {
    for (a, &b) in acc.iter_mut().zip(mask.values()) {
        *a ^= b;
    }
}

/// Shift a base sequence by (q/2) times a binary mask.
fn apply_mask(base: &QarySequence, mask: &[u32], q: u32) -> QarySequence {
    let half = q / 2;
    let values = base
        .values()
        .iter()
        .zip(mask)
        .map(|(&v, &b)| (v + half * b) % q)
        .collect();
    QarySequence::new(q, values).expect("masked values stay below q")
}

/// The per-member shift masks of the base construction: the head variable
/// of every part, then x_m.
fn member_masks(plan: &PartitionPlan, q: u32, len: u64) -> Result<Vec<QarySequence>> {
    let m = plan.m();
    let mut masks = Vec::with_capacity(plan.part_count() + 1);
    for part in plan.parts() {
        masks.push(indicator_sequence(part[0], m, len, q)?);
    }
    masks.push(indicator_sequence(m, m, len, q)?);
    Ok(masks)
}

/// Build the (2^(k+1), 2^(m-1)+2^t) Golay complementary set.
///
/// Member n adds (q/2) times the masks selected by the binary digits
/// (n_1, .., n_(k+1)) of n, n_1 least significant: digit a selects the head
/// variable of part a, digit k+1 selects x_m. The prefix condition on the
/// plan is required unless t = 0, where it is vacuous.
pub fn build_gcs_theorem1(
    q: u32,
    plan: &PartitionPlan,
    g: &[u32],
) -> Result<ComplementarySet> {
    require_even(q)?;
    plan.require_prefix_condition()?;
    let len = plan.sequence_length();
    let base = base_gbf(q, plan, g)?.truncated_sequence(len)?;
    let masks = member_masks(plan, q, len)?;
    let k1 = masks.len(); // k + 1
    let mut members = Vec::with_capacity(1 << k1);
    let mut combined = vec![0u32; len as usize];
    for n in 0..(1u32 << k1) {
        combined.fill(0);
        for (a, mask) in masks.iter().enumerate() {
            if (n >> a) & 1 == 1 {
                xor_mask(&mut combined, mask);
            }
        }
        members.push(apply_mask(&base, &combined, q));
    }
    ComplementarySet::new(members)
}

/// Extend a set into a family: set p adds (q/2) times the XOR of the masks
/// selected by the binary digits of p.
fn mask_family(base_set: &ComplementarySet, set_masks: &[QarySequence]) -> Vec<ComplementarySet> {
    let q = base_set.q();
    let len = base_set.length() as usize;
    let mut sets = Vec::with_capacity(1 << set_masks.len());
    let mut combined = vec![0u32; len];
    for p in 0..(1u64 << set_masks.len()) {
        combined.fill(0);
        for (a, mask) in set_masks.iter().enumerate() {
            if (p >> a) & 1 == 1 {
                xor_mask(&mut combined, mask);
            }
        }
        let members = base_set
            .members()
            .iter()
            .map(|c| apply_mask(c, &combined, q))
            .collect();
        sets.push(ComplementarySet::new(members).expect("masked set keeps its shape"));
    }
    sets
}

/// Build the (2^k', 2^(k+1), 2^(m-1)+2^t) mutually orthogonal family.
///
/// Requires m_1 <= t <= m-1 and the prefix condition. Set p adds (q/2)
/// times the tail variables x_(pi_a(m_a)) of the first k' parts, selected by
/// the binary digits of p.
pub fn build_mocs_theorem2(q: u32, plan: &PartitionPlan, g: &[u32]) -> Result<MocsFamily> {
    require_even(q)?;
    let sizes = plan.part_sizes();
    if plan.t() < sizes[0] || plan.t() > plan.m() - 1 {
        return Err(Error::TOutOfRange { t: plan.t(), lo: sizes[0], hi: plan.m() - 1 });
    }
    plan.require_prefix_condition()?;
    let decomp = plan
        .decompose_t()?
        .expect("t >= m_1 >= 1 always decomposes");
    let base_set = build_gcs_theorem1(q, plan, g)?;
    let len = plan.sequence_length();
    let set_masks: Vec<QarySequence> = plan.parts()[..decomp.k_prime]
        .iter()
        .map(|part| indicator_sequence(*part.last().unwrap(), plan.m(), len, q))
        .collect::<Result<_>>()?;
    let sets = mask_family(&base_set, &set_masks);
    MocsFamily::new(
        sets,
        Provenance {
            method: Method::Mocs,
            q,
            plan: plan.clone(),
            g: normalize_g(g, plan.m())?,
        },
    )
}

/// The hybrid mask of the expanded construction: entry i takes the digit at
/// pi_k(beta') when i_m = 1 and at pi_k(m_k) when i_m = 0, truncated to
/// `len`. Requires t = m_1 + .. + m_(k-1) + beta' with 1 <= beta' <= m_k.
///
/// The two branches have disjoint supports, so adding and XOR-combining the
/// branch products coincide (asserted by a unit test rather than assumed).
pub fn hybrid_y_sequence(
    plan: &PartitionPlan,
    beta_prime: u32,
    len: u64,
    q: u32,
) -> Result<QarySequence> {
    let sizes = plan.part_sizes();
    let m_k = *sizes.last().unwrap();
    if beta_prime < 1 || beta_prime > m_k {
        return Err(Error::BetaPrimeOutOfRange { beta_prime, max: m_k });
    }
    let head_sum: u32 = sizes[..sizes.len() - 1].iter().sum();
    if plan.t() != head_sum + beta_prime {
        return Err(Error::TOutOfRange {
            t: plan.t(),
            lo: head_sum + 1,
            hi: head_sum + m_k,
        });
    }
    let m = plan.m();
    if len < 1 || len > (1u64 << m) {
        return Err(Error::LengthOutOfRange { len, max: 1u64 << m });
    }
    let k = plan.part_count();
    let high_var = plan.pi(k, beta_prime as usize);
    let low_var = plan.pi(k, m_k as usize);
    let values = (0..len)
        .map(|i| {
            let var = if (i >> (m - 1)) & 1 == 1 { high_var } else { low_var };
            ((i >> (var - 1)) & 1) as u32
        })
        .collect();
    QarySequence::new(q, values)
}

/// Build the (2^k, 2^(k+1), 2^(m-1)+2^t) family with set size N/2.
///
/// Requires t = m_1 + .. + m_(k-1) + beta' for some 1 <= beta' <= m_k and
/// the prefix condition. Set p adds (q/2) times the tail variables of parts
/// 1..k-1 (digits p_1 .. p_(k-1)) and the hybrid mask y (digit p_k).
pub fn build_mocs_corollary1(q: u32, plan: &PartitionPlan, g: &[u32]) -> Result<MocsFamily> {
    require_even(q)?;
    let sizes = plan.part_sizes();
    let m_k = *sizes.last().unwrap();
    let head_sum: u32 = sizes[..sizes.len() - 1].iter().sum();
    if plan.t() < head_sum + 1 || plan.t() > head_sum + m_k {
        return Err(Error::TOutOfRange {
            t: plan.t(),
            lo: head_sum + 1,
            hi: head_sum + m_k,
        });
    }
    let beta_prime = plan.t() - head_sum;
    plan.require_prefix_condition()?;
    let base_set = build_gcs_theorem1(q, plan, g)?;
    let len = plan.sequence_length();
    let k = plan.part_count();
    let mut set_masks: Vec<QarySequence> = plan.parts()[..k - 1]
        .iter()
        .map(|part| indicator_sequence(*part.last().unwrap(), plan.m(), len, q))
        .collect::<Result<_>>()?;
    set_masks.push(hybrid_y_sequence(plan, beta_prime, len, q)?);
    let sets = mask_family(&base_set, &set_masks);
    MocsFamily::new(
        sets,
        Provenance {
            method: Method::MocsCor,
            q,
            plan: plan.clone(),
            g: normalize_g(g, plan.m())?,
        },
    )
}
