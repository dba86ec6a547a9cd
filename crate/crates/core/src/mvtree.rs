//! Mayer-Vietoris trees.
//!
//! A node holding `I = <m_1, ..., m_r>` with pivot `m_p` has a left child
//! `<m_i : i != p>` at the same position and a right child
//! `<lcm(m_i, m_p) : i != p>` one position higher. The root and every right
//! child are *relevant*: each relevant node at position `d` contributes all
//! of its generators as multidegrees in homological degree `d`. The signed
//! sum of these contributions is the Hilbert numerator.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::polarize::VariableMap;
use crate::polynomial::MultigradedPolynomial;

/// How a node picks its pivot generator.
#[derive(Clone, Default)]
pub enum PivotStrategy {
    /// Last generator in canonical (descending lexicographic) order.
    #[default]
    Last,
    /// Generator whose key is lexicographically smallest, i.e. the one that
    /// would be last if the generators were ordered by key.
    LastByKey(Arc<dyn Fn(&Monomial) -> Monomial + Send + Sync>),
}

impl fmt::Debug for PivotStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PivotStrategy::Last => write!(f, "Last"),
            PivotStrategy::LastByKey(_) => write!(f, "LastByKey(..)"),
        }
    }
}

impl PivotStrategy {
    fn pick(&self, ideal: &MonomialIdeal) -> usize {
        match self {
            PivotStrategy::Last => ideal.len() - 1,
            PivotStrategy::LastByKey(key) => ideal
                .generators()
                .iter()
                .enumerate()
                .min_by_key(|(_, g)| key(g))
                .map(|(i, _)| i)
                .expect("non-empty ideal"),
        }
    }

    /// Pivots of a polarized ideal chosen as the source tree would choose
    /// them: collapse each slot monomial back through `map` and take the
    /// last in the source canonical order.
    pub fn following_polarization(map: VariableMap) -> Self {
        PivotStrategy::LastByKey(Arc::new(move |m| map.collapse(m)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MvNode {
    pub ideal: MonomialIdeal,
    pub pivot: Monomial,
    /// Homological position.
    pub position: usize,
    pub relevant: bool,
    pub left: Option<usize>,
    pub right: Option<usize>,
}

/// A Mayer-Vietoris tree stored as an arena; node 0 is the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MvTree {
    nodes: Vec<MvNode>,
}

/// Builds the tree of a proper ideal.
pub fn mayer_vietoris_tree(ideal: &MonomialIdeal, strategy: &PivotStrategy) -> Result<MvTree> {
    ideal.require_proper()?;
    let mut nodes = Vec::new();
    build(ideal.clone(), 0, true, strategy, &mut nodes);
    Ok(MvTree { nodes })
}

fn build(ideal: MonomialIdeal, position: usize, relevant: bool, strategy: &PivotStrategy, nodes: &mut Vec<MvNode>) -> usize {
    let p = strategy.pick(&ideal);
    let pivot = ideal.generators()[p].clone();
    let id = nodes.len();
    let split = ideal.len() > 1;
    let (left_ideal, right_ideal) = if split {
        let rest = ideal.without(p);
        let right = rest.lcm_with(&pivot);
        (Some(rest), Some(right))
    } else {
        (None, None)
    };
    nodes.push(MvNode { ideal, pivot, position, relevant, left: None, right: None });
    if split {
        let l = build(left_ideal.unwrap(), position, false, strategy, nodes);
        let r = build(right_ideal.unwrap(), position + 1, true, strategy, nodes);
        nodes[id].left = Some(l);
        nodes[id].right = Some(r);
    }
    id
}

/// Polarizes every node of `tree` with respect to `caps`, keeping the
/// shape and the pivot positions.
pub fn polarize_tree(tree: &MvTree, caps: &[u32]) -> Result<MvTree> {
    let map = VariableMap::from_caps(caps);
    let n = map.target_vars();
    let nodes = tree
        .nodes
        .iter()
        .map(|node| {
            let gens = node.ideal.generators().iter().map(|g| map.apply(g)).collect::<Result<Vec<_>>>()?;
            Ok(MvNode {
                ideal: MonomialIdeal::new(n, gens)?,
                pivot: map.apply(&node.pivot)?,
                position: node.position,
                relevant: node.relevant,
                left: node.left,
                right: node.right,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MvTree { nodes })
}

impl MvTree {
    pub fn nodes(&self) -> &[MvNode] {
        &self.nodes
    }

    pub fn root(&self) -> &MvNode {
        &self.nodes[0]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `(position, multidegree)` contributed by relevant nodes, with
    /// multiplicity.
    pub fn relevant_multidegrees(&self) -> impl Iterator<Item = (usize, &Monomial)> {
        self.nodes
            .iter()
            .filter(|n| n.relevant)
            .flat_map(|n| n.ideal.generators().iter().map(move |g| (n.position, g)))
    }

    /// Multiplicity of every `(position, multidegree)` pair: upper bounds for
    /// the multigraded Betti numbers.
    pub fn multidegree_counts(&self) -> BTreeMap<(usize, Monomial), u64> {
        let mut out = BTreeMap::new();
        for (d, m) in self.relevant_multidegrees() {
            *out.entry((d, m.clone())).or_insert(0) += 1;
        }
        out
    }

    /// Number of relevant multidegrees at each position.
    pub fn rank_counts(&self) -> Vec<u64> {
        let mut out: Vec<u64> = Vec::new();
        for (d, _) in self.relevant_multidegrees() {
            if out.len() <= d {
                out.resize(d + 1, 0);
            }
            out[d] += 1;
        }
        out
    }

    /// Relevant multidegrees grouped by position.
    pub fn by_position(&self) -> Vec<Vec<Monomial>> {
        let mut out: Vec<Vec<Monomial>> = Vec::new();
        for (d, m) in self.relevant_multidegrees() {
            if out.len() <= d {
                out.resize(d + 1, Vec::new());
            }
            out[d].push(m.clone());
        }
        out
    }

    /// Signed sum of relevant multidegrees.
    pub fn alternating_sum(&self) -> MultigradedPolynomial {
        let n = self.root().ideal.num_vars();
        let mut p = MultigradedPolynomial::zero(n);
        for (d, m) in self.relevant_multidegrees() {
            let sign = if d % 2 == 0 { 1 } else { -1 };
            p.add_term(m.clone(), BigInt::from(sign));
        }
        p
    }
}
