//! Shared fixtures for the benchmark suite: the published example
//! parameter sets.

use mocs_core::constructions::{
    build_gcs_theorem1, build_mocs_corollary1, ComplementarySet, MocsFamily, PartitionPlan,
};

/// q=4, m=6, I1={1,2}, I2={3,4,5} with identity bijections.
pub fn quaternary_plan(t: u32) -> PartitionPlan {
    PartitionPlan::new(6, vec![vec![1, 2], vec![3, 4, 5]], t).unwrap()
}

/// q=2, m=6, I1={1}, I2={2,4}, I3={3,5}, pi2=(4,2), pi3=(3,5).
pub fn binary_plan(t: u32) -> PartitionPlan {
    PartitionPlan::new(6, vec![vec![1], vec![4, 2], vec![3, 5]], t).unwrap()
}

/// The (8,40)-GCS.
pub fn gcs_8_40() -> ComplementarySet {
    build_gcs_theorem1(4, &quaternary_plan(3), &[]).unwrap()
}

/// The (8,16,48) family, the largest of the published examples.
pub fn mocs_8_16_48() -> MocsFamily {
    build_mocs_corollary1(2, &binary_plan(4), &[]).unwrap()
}
