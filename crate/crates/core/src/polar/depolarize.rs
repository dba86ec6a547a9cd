//! Depolarization along path partitions and the depolarization poset.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::io::format_monomial;
use crate::monomial::Monomial;
use crate::polar::copolar::{isomorphism, DEFAULT_SEARCH_LIMIT};
use crate::polar::partition::{all_chain_partitions, PathPartition};
use crate::polar::poset::{natural_order, ordered_support_poset, support_poset, OrderedSupportPoset, SupportPoset};
use crate::polarize::{polarize_ideal, VariableMap};

/// A depolarization of a squarefree ideal together with how it was made.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DepolarizationRecord {
    pub source: MonomialIdeal,
    pub partition: PathPartition,
    pub ideal: MonomialIdeal,
    /// `image(j)` lists the source variables merged into `y_j`, bottom
    /// first: slot `y_{j,l}` is the `l`-th entry.
    pub map: VariableMap,
}

impl DepolarizationRecord {
    pub fn num_vars(&self) -> usize {
        self.ideal.num_vars()
    }

    /// One-line JSON summary using `names` for the source variables and
    /// `y1..yk` for the result.
    pub fn to_json(&self, names: &[String]) -> serde_json::Value {
        let ynames: Vec<String> = (1..=self.num_vars()).map(|j| format!("y{j}")).collect();
        let blocks: Vec<Vec<&str>> = self
            .partition
            .blocks
            .iter()
            .map(|b| b.iter().map(|&v| names[v].as_str()).collect())
            .collect();
        let gens: Vec<String> = self.ideal.generators().iter().map(|g| format_monomial(g, &ynames)).collect();
        serde_json::json!({ "num_vars": self.num_vars(), "partition": blocks, "generators": gens })
    }
}

/// Depolarizes a squarefree ideal along `partition`.
///
/// The order used to break ties between variables with equal `C` sets is
/// inferred from the partition, so any partition that is a path partition
/// for some order is accepted.
pub fn depolarize(ideal: &MonomialIdeal, partition: &PathPartition) -> Result<DepolarizationRecord> {
    ideal.require_proper()?;
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let poset = support_poset(ideal)?;
    let order = infer_order(&poset, partition);
    let ordered = ordered_support_poset(&poset, &order)?;
    depolarize_in(ideal, &ordered, partition)
}

/// Depolarizes along a partition of a given ordered support poset of `ideal`.
pub fn depolarize_in(
    ideal: &MonomialIdeal,
    poset: &OrderedSupportPoset,
    partition: &PathPartition,
) -> Result<DepolarizationRecord> {
    partition.validate(poset)?;
    merge_blocks(ideal, partition)
}

/// Depolarizes a squarefree ideal along blocks that are only required to be
/// chains of the support poset.
///
/// A block can skip over elements between its entries: every generator
/// containing a variable also contains everything below it, so each
/// generator still meets each block in an initial segment.
pub fn depolarize_chains(ideal: &MonomialIdeal, partition: &PathPartition) -> Result<DepolarizationRecord> {
    ideal.require_proper()?;
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let poset = support_poset(ideal)?;
    let ordered = ordered_support_poset(&poset, &chain_order(&poset, partition))?;
    partition.validate_chains(&ordered)?;
    merge_blocks(ideal, partition)
}

/// Class members in the order the blocks list them, so that blocks running
/// through a class stay increasing.
fn chain_order(poset: &SupportPoset, partition: &PathPartition) -> Vec<usize> {
    let mut order = Vec::with_capacity(poset.len());
    for class in poset.classes() {
        let members: BTreeSet<usize> = class.iter().copied().collect();
        let listed = partition.blocks.iter().flatten().copied().filter(|v| members.contains(v));
        for v in listed.chain(class.iter().copied()) {
            if !order.contains(&v) {
                order.push(v);
            }
        }
    }
    order
}

fn merge_blocks(ideal: &MonomialIdeal, partition: &PathPartition) -> Result<DepolarizationRecord> {
    let map = VariableMap::new(partition.blocks.clone(), ideal.num_vars())?;
    let k = partition.len();
    let mut gens = Vec::with_capacity(ideal.len());
    for g in ideal.generators() {
        let exps: Vec<u32> = partition.blocks.iter().map(|b| b.iter().map(|&v| g.exponent(v)).sum()).collect();
        let j = Monomial::new(exps);
        if &map.apply(&j)? != g {
            let b = partition
                .blocks
                .iter()
                .position(|b| {
                    let e = b.iter().filter(|&&v| g.exponent(v) > 0).count();
                    b[..e].iter().any(|&v| g.exponent(v) == 0)
                })
                .unwrap_or(0);
            return Err(Error::InvalidPartition(format!(
                "block {b} {:?} meets a generator in a non-initial segment",
                partition.blocks[b]
            )));
        }
        gens.push(j);
    }
    let result = MonomialIdeal::new(k, gens)?;
    if result.len() != ideal.len() {
        return Err(Error::InvalidPartition("distinct generators collapse".into()));
    }
    Ok(DepolarizationRecord { source: ideal.clone(), partition: partition.clone(), ideal: result, map })
}

/// A variable order under which the blocks of `partition` can be paths:
/// inside each class of equal `C` sets, the block entering from below goes
/// first and the block continuing upwards goes last.
pub fn infer_order(poset: &SupportPoset, partition: &PathPartition) -> Vec<usize> {
    let mut order = Vec::with_capacity(poset.len());
    let mut placed = BTreeSet::new();
    for class in poset.classes() {
        let members: BTreeSet<usize> = class.iter().copied().collect();
        // (priority, block, run)
        let mut runs: Vec<(u8, usize, Vec<usize>)> = Vec::new();
        for (b, block) in partition.blocks.iter().enumerate() {
            let mut i = 0;
            while i < block.len() {
                if !members.contains(&block[i]) {
                    i += 1;
                    continue;
                }
                let start = i;
                while i < block.len() && members.contains(&block[i]) {
                    i += 1;
                }
                let enters = start > 0;
                let leaves = i < block.len();
                let priority = match (enters, leaves) {
                    (true, false) => 0,
                    (false, true) => 2,
                    _ => 1,
                };
                runs.push((priority, b, block[start..i].to_vec()));
            }
        }
        runs.sort_by_key(|r| (r.0, r.1));
        for v in runs.into_iter().flat_map(|r| r.2).chain(class.iter().copied()) {
            if members.contains(&v) && placed.insert(v) {
                order.push(v);
            }
        }
    }
    order
}

/// Bounds for [`enumerate_depolarizations`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimits {
    /// Largest number of (squarefree) variables accepted.
    pub max_vars: usize,
    /// Largest number of chain partitions examined.
    pub max_partitions: usize,
    /// Backtracking budget of each isomorphism test.
    pub search_limit: u64,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        Self { max_vars: 12, max_partitions: 200_000, search_limit: DEFAULT_SEARCH_LIMIT }
    }
}

/// Depolarizations sharing one result up to renaming of variables.
#[derive(Debug, Clone)]
pub struct DepolarizationClass {
    pub record: DepolarizationRecord,
    /// Chain partitions producing this class, blocks bottom first.
    pub partitions: Vec<PathPartition>,
}

/// All depolarizations of an ideal, up to renaming, ordered by refinement of
/// their chain partitions.
#[derive(Debug, Clone)]
pub struct DepolarizationPoset {
    /// The squarefree ideal whose partitions were enumerated.
    pub source: MonomialIdeal,
    /// Slot layout when the input had to be polarized first.
    pub polarization: Option<VariableMap>,
    pub poset: OrderedSupportPoset,
    pub classes: Vec<DepolarizationClass>,
    /// Strict relation `(finer, coarser)` between class indices.
    pub refinement: Vec<(usize, usize)>,
    /// Classes with the fewest variables.
    pub maximum: Vec<usize>,
}

impl DepolarizationPoset {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn records(&self) -> impl Iterator<Item = &DepolarizationRecord> {
        self.classes.iter().map(|c| &c.record)
    }

    pub fn maximum_records(&self) -> impl Iterator<Item = &DepolarizationRecord> {
        self.maximum.iter().map(|&c| &self.classes[c].record)
    }

    pub fn partition_count(&self) -> usize {
        self.classes.iter().map(|c| c.partitions.len()).sum()
    }
}

/// Enumerates every depolarization of `ideal` up to renaming of variables.
///
/// Candidates are all chain partitions of the support poset, not only path
/// partitions: merging the variables of a block yields a depolarization
/// exactly when each generator meets the block in an initial segment, which
/// holds for every chain. Path partitions alone can miss depolarizations,
/// e.g. `<y1*y2^2, y1^3*y2>` of `<x1*x3*x4, x2*x3*x4*x5>`.
///
/// Non-squarefree input is polarized first. Tie-breaking orders are not
/// iterated: variables with equal `C` sets occur in exactly the same
/// generators, so reordering them is an automorphism of the ideal and yields
/// the same depolarizations up to renaming.
pub fn enumerate_depolarizations(ideal: &MonomialIdeal, limits: &EnumerationLimits) -> Result<DepolarizationPoset> {
    ideal.require_proper()?;
    let (source, polarization) = if ideal.is_squarefree() {
        (ideal.clone(), None)
    } else {
        let (p, map) = polarize_ideal(ideal)?;
        (p, Some(map))
    };
    let base = support_poset(&source)?;
    if base.len() > limits.max_vars {
        return Err(Error::EnumerationLimit { limit: limits.max_vars, found: base.len() });
    }
    let poset = natural_order(&base);
    let partitions = all_chain_partitions(&poset);
    if partitions.len() > limits.max_partitions {
        return Err(Error::EnumerationLimit { limit: limits.max_partitions, found: partitions.len() });
    }

    let mut classes: Vec<DepolarizationClass> = Vec::new();
    let mut buckets: HashMap<Signature, Vec<usize>> = HashMap::new();
    let mut class_of: HashMap<PathPartition, usize> = HashMap::new();
    for partition in partitions {
        partition.validate_chains(&poset)?;
        let record = merge_blocks(&source, &partition)?;
        let bucket = buckets.entry(signature(&record.ideal)).or_default();
        let mut found = None;
        for &c in bucket.iter() {
            if isomorphism(&classes[c].record.ideal, &record.ideal, limits.search_limit)?.is_some() {
                found = Some(c);
                break;
            }
        }
        let c = match found {
            Some(c) => c,
            None => {
                classes.push(DepolarizationClass { record, partitions: Vec::new() });
                bucket.push(classes.len() - 1);
                classes.len() - 1
            }
        };
        class_of.insert(partition.canonical(), c);
        classes[c].partitions.push(partition);
    }

    // one-step coarsenings: join two blocks when the top of one lies below
    // the bottom of the other
    let n = classes.len();
    let mut reach = vec![vec![false; n]; n];
    for (c, class) in classes.iter().enumerate() {
        for p in &class.partitions {
            for (i, lo) in p.blocks.iter().enumerate() {
                for (j, hi) in p.blocks.iter().enumerate() {
                    if i != j && poset.precedes(*lo.last().expect("non-empty"), hi[0]) {
                        let mut blocks: Vec<Vec<usize>> = p
                            .blocks
                            .iter()
                            .enumerate()
                            .filter(|&(k, _)| k != i && k != j)
                            .map(|(_, b)| b.clone())
                            .collect();
                        blocks.push(lo.iter().chain(hi).copied().collect());
                        let coarser = PathPartition::new(blocks).canonical();
                        let d = class_of[&coarser];
                        if d != c {
                            reach[c][d] = true;
                        }
                    }
                }
            }
        }
    }
    for k in 0..n {
        let through = reach[k].clone();
        for row in reach.iter_mut() {
            if row[k] {
                for (r, &t) in row.iter_mut().zip(&through) {
                    *r |= t;
                }
            }
        }
    }
    let refinement = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| i != j && reach[i][j]).collect();
    let fewest = classes.iter().map(|c| c.record.num_vars()).min().unwrap_or(0);
    let maximum = (0..n).filter(|&c| classes[c].record.num_vars() == fewest).collect();
    Ok(DepolarizationPoset { source, polarization, poset, classes, refinement, maximum })
}

type Signature = (usize, Vec<u64>, Vec<Vec<u32>>);

/// Renaming-invariant summary used to bucket candidate isomorphisms.
fn signature(ideal: &MonomialIdeal) -> Signature {
    let mut degrees: Vec<u64> = ideal.generators().iter().map(Monomial::degree).collect();
    degrees.sort_unstable();
    let mut profiles: Vec<Vec<u32>> = (0..ideal.num_vars())
        .map(|v| {
            let mut p: Vec<u32> = ideal.generators().iter().map(|g| g.exponent(v)).filter(|&e| e > 0).collect();
            p.sort_unstable();
            p
        })
        .collect();
    profiles.sort();
    (ideal.num_vars(), degrees, profiles)
}
