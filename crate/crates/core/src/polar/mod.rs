//! Support posets, depolarization and copolarity.

pub mod construct;
pub mod copolar;
pub mod depolarize;
mod matching;
pub mod partition;
pub mod poset;
pub mod quasi_stable;

pub use construct::{ideal_from_cover_sets, ideal_from_disjoint_paths, CoverSetsReport, DisjointPathsIdeal};
pub use copolar::{copolar_bijection, isomorphism};
pub use depolarize::{
    depolarize, depolarize_chains, depolarize_in, enumerate_depolarizations, infer_order, DepolarizationClass, DepolarizationPoset,
    DepolarizationRecord, EnumerationLimits,
};
pub use partition::{min_chain_partition, min_path_partition, PathPartition};
pub use poset::{natural_order, ordered_support_poset, support_poset, OrderedSupportPoset, SupportPoset};
pub use quasi_stable::is_quasi_stable;

use crate::error::Result;
use crate::ideal::MonomialIdeal;

/// Width of the support poset of the polarization, an upper bound for the
/// projective dimension.
pub fn pd_upper_bound(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(support_poset(ideal)?.width())
}
