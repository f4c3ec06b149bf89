//! Shared helpers for the integration suites: random valid construction
//! parameters and family mutation.
//!
//! Not every test target uses every helper.
#![allow(dead_code)]

use mocs_core::constructions::{
    build_mocs_corollary1, build_mocs_theorem2, ComplementarySet, Method, MocsFamily,
    PartitionPlan, Provenance,
};
use mocs_core::gbf::QarySequence;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;

/// A randomly drawn, precondition-satisfying parameter set.
pub struct RandomParams {
    pub q: u32,
    pub plan: PartitionPlan,
    pub g: Vec<u32>,
    pub method: Method,
}

/// Draw (q, plan, g, method) uniformly enough to exercise both
/// constructions over q in {2,4,8} and 3 <= m <= 8.
///
/// The partition, bijections and t are random subject to the preconditions:
/// the traversal-prefix slots are filled with a shuffle of {1..t} and the
/// remaining slots with a shuffle of {t+1..m-1}, which realizes the prefix
/// condition for any part-size composition. Part counts are capped at 4 to
/// keep flock sizes (2^(k+1)) at desk scale.
pub fn random_params(rng: &mut impl Rng) -> RandomParams {
    let q = *[2u32, 4, 8].choose(rng).unwrap();
    let m: u32 = rng.random_range(3..=8);
    let k: u32 = rng.random_range(1..=(m - 1).min(4));

    // random composition of m-1 into k positive parts
    let mut sizes = vec![1u32; k as usize];
    for _ in 0..(m - 1 - k) {
        let idx = rng.random_range(0..k as usize);
        sizes[idx] += 1;
    }

    let method = if rng.random_bool(0.5) { Method::Mocs } else { Method::MocsCor };
    let t = match method {
        // tail-mask construction: m_1 <= t <= m-1
        Method::Mocs => rng.random_range(sizes[0]..=m - 1),
        // hybrid construction: t reaches beta' in {1..m_k} into the last part
        Method::MocsCor => {
            let head: u32 = sizes[..k as usize - 1].iter().sum();
            head + rng.random_range(1..=sizes[k as usize - 1])
        }
        Method::Gcs => unreachable!(),
    };

    // decomposition point of t across the sizes
    let mut alpha_prime = 0usize;
    let mut beta_prime = 0u32;
    let mut cum = 0u32;
    for (idx, &s) in sizes.iter().enumerate() {
        if cum + s >= t {
            alpha_prime = idx + 1;
            beta_prime = t - cum;
            break;
        }
        cum += s;
    }

    // prefix slots take {1..t} shuffled, the rest take {t+1..m-1} shuffled
    let mut low: Vec<u32> = (1..=t).collect();
    let mut high: Vec<u32> = (t + 1..m).collect();
    low.shuffle(rng);
    high.shuffle(rng);
    let mut low = low.into_iter();
    let mut high = high.into_iter();
    let mut parts = Vec::with_capacity(k as usize);
    for (idx, &s) in sizes.iter().enumerate() {
        let part: Vec<u32> = (0..s)
            .map(|b| {
                let in_prefix =
                    idx + 1 < alpha_prime || (idx + 1 == alpha_prime && b < beta_prime);
                if in_prefix { low.next().unwrap() } else { high.next().unwrap() }
            })
            .collect();
        parts.push(part);
    }

    let g: Vec<u32> = if rng.random_bool(0.5) {
        Vec::new()
    } else {
        (0..=m).map(|_| rng.random_range(0..q)).collect()
    };

    let plan = PartitionPlan::new(m, parts, t).expect("generator emits valid plans");
    assert!(plan.check_prefix_condition(), "generator must satisfy the prefix condition");
    RandomParams { q, plan, g, method }
}

/// Build the family a [`RandomParams`] describes.
pub fn build_family(params: &RandomParams) -> MocsFamily {
    match params.method {
        Method::Mocs => build_mocs_theorem2(params.q, &params.plan, &params.g),
        Method::MocsCor => build_mocs_corollary1(params.q, &params.plan, &params.g),
        Method::Gcs => unreachable!(),
    }
    .expect("valid parameters construct")
}

/// Return a copy of the family with one symbol bumped by a nonzero delta.
pub fn mutate_one_symbol(family: &MocsFamily, rng: &mut impl Rng) -> MocsFamily {
    let q = family.q();
    let set_idx = rng.random_range(0..family.set_size());
    let member_idx = rng.random_range(0..family.flock_size());
    let pos = rng.random_range(0..family.length() as usize);
    let delta = rng.random_range(1..q);

    let sets: Vec<ComplementarySet> = family
        .sets()
        .iter()
        .enumerate()
        .map(|(p, set)| {
            if p != set_idx {
                return set.clone();
            }
            let members: Vec<QarySequence> = set
                .members()
                .iter()
                .enumerate()
                .map(|(n, seq)| {
                    if n != member_idx {
                        return seq.clone();
                    }
                    let mut vals = seq.values().to_vec();
                    vals[pos] = (vals[pos] + delta) % q;
                    QarySequence::new(q, vals).unwrap()
                })
                .collect();
            ComplementarySet::new(members).unwrap()
        })
        .collect();
    MocsFamily::new(
        sets,
        Provenance {
            method: family.provenance().method,
            q,
            plan: family.provenance().plan.clone(),
            g: family.provenance().g.clone(),
        },
    )
    .unwrap()
}
