//! Support posets and their refinements by a variable order.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::polar::matching::max_matching;
use crate::polarize::{polarize_ideal, VariableMap};

/// The sets `C_i` of a squarefree ideal, ordered by inclusion.
///
/// `C_i` holds the variables present in every generator that contains
/// `x_i`. Elements are the support variables; variables with identical sets
/// form one class, and the Hasse diagram is taken between classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportPoset {
    num_vars: usize,
    vars: Vec<usize>,
    sets: Vec<BTreeSet<usize>>,
    classes: Vec<Vec<usize>>,
    hasse: Vec<(usize, usize)>,
    polarization: Option<VariableMap>,
}

impl SupportPoset {
    /// Builds the poset from explicit sets `C_i` for the variables `vars`
    /// of a ring with `num_vars` variables.
    pub fn from_sets(num_vars: usize, vars: Vec<usize>, sets: Vec<BTreeSet<usize>>) -> Self {
        debug_assert_eq!(vars.len(), sets.len());
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut by_set: HashMap<&BTreeSet<usize>, usize> = HashMap::new();
        for (p, set) in sets.iter().enumerate() {
            let c = *by_set.entry(set).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[c].push(p);
        }
        let class_sets: Vec<&BTreeSet<usize>> = classes.iter().map(|c| &sets[c[0]]).collect();
        let less = strict_relation(class_sets.len(), |a, b| {
            class_sets[a].len() < class_sets[b].len() && class_sets[a].is_subset(class_sets[b])
        });
        let hasse = transitive_reduction(&less);
        Self { num_vars, vars, sets, classes, hasse, polarization: None }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Variables carrying an element, ascending.
    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    /// `C_var`, or `None` if `var` is outside the support.
    pub fn set_of(&self, var: usize) -> Option<&BTreeSet<usize>> {
        self.position(var).map(|p| &self.sets[p])
    }

    pub fn sets(&self) -> &[BTreeSet<usize>] {
        &self.sets
    }

    /// Classes of equal sets, each a list of variables.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        self.classes.iter().map(|c| c.iter().map(|&p| self.vars[p]).collect()).collect()
    }

    /// Cover pairs `(lower, upper)` between class indices.
    pub fn hasse(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    /// Slot layout when the poset was built from the polarization of a
    /// non-squarefree ideal.
    pub fn polarization(&self) -> Option<&VariableMap> {
        self.polarization.as_ref()
    }

    pub(crate) fn position(&self, var: usize) -> Option<usize> {
        self.vars.binary_search(&var).ok()
    }

    /// `C_a` strictly contained in `C_b`.
    pub fn strictly_below(&self, a: usize, b: usize) -> bool {
        match (self.set_of(a), self.set_of(b)) {
            (Some(x), Some(y)) => x.len() < y.len() && x.is_subset(y),
            _ => false,
        }
    }

    /// Checks `i in C_i` and the transitivity condition
    /// `k in C_i, i in C_j => k in C_j`.
    pub fn check_invariants(&self) -> bool {
        self.vars.iter().zip(&self.sets).all(|(&i, c)| c.contains(&i))
            && self.vars.iter().enumerate().all(|(pi, &i)| {
                self.sets.iter().all(|cj| !cj.contains(&i) || self.sets[pi].is_subset(cj))
            })
    }

    /// Width of the poset on the distinct sets.
    pub fn width(&self) -> usize {
        let sets: Vec<&BTreeSet<usize>> = self.classes.iter().map(|c| &self.sets[c[0]]).collect();
        let less = strict_relation(sets.len(), |a, b| sets[a].len() < sets[b].len() && sets[a].is_subset(sets[b]));
        dilworth_width(&less)
    }

    /// Graphviz rendering; each node is labelled by the variables whose set
    /// it is, i.e. the indices not present in any node below it.
    pub fn to_dot(&self, names: &[String]) -> String {
        let mut out = String::from("digraph support_poset {\n  rankdir=BT;\n");
        for (c, members) in self.classes.iter().enumerate() {
            let label: Vec<&str> = members.iter().map(|&p| names[self.vars[p]].as_str()).collect();
            out.push_str(&format!("  c{c} [label=\"{}\"];\n", label.join(",")));
        }
        for (a, b) in &self.hasse {
            out.push_str(&format!("  c{a} -> c{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Support poset of an ideal; non-squarefree ideals are polarized first and
/// the poset lives on the slot variables.
pub fn support_poset(ideal: &MonomialIdeal) -> Result<SupportPoset> {
    ideal.require_proper()?;
    if !ideal.is_squarefree() {
        let (polar, map) = polarize_ideal(ideal)?;
        let mut poset = support_poset(&polar)?;
        poset.polarization = Some(map);
        return Ok(poset);
    }
    let vars = ideal.support();
    let sets = vars
        .iter()
        .map(|&i| {
            let mut acc: Option<BTreeSet<usize>> = None;
            for g in ideal.generators().iter().filter(|g| g.exponent(i) > 0) {
                let s: BTreeSet<usize> = g.support().collect();
                acc = Some(match acc {
                    None => s,
                    Some(a) => a.intersection(&s).copied().collect(),
                });
            }
            acc.expect("support variable occurs in a generator")
        })
        .collect();
    Ok(SupportPoset::from_sets(ideal.num_vars(), vars, sets))
}

/// A support poset refined by a total order on the variables:
/// `x_i < x_j` iff `C_i` is strictly inside `C_j`, or the sets are equal and
/// `x_i` comes first in the order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedSupportPoset {
    base: SupportPoset,
    rank: Vec<usize>,
    less: Vec<Vec<bool>>,
    covers: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

/// Refines `poset` by `order`, a list of variables from smallest to largest
/// that contains every support variable once (other variables are ignored).
pub fn ordered_support_poset(poset: &SupportPoset, order: &[usize]) -> Result<OrderedSupportPoset> {
    let mut rank = vec![usize::MAX; poset.len()];
    for (r, &v) in order.iter().enumerate() {
        if let Some(p) = poset.position(v) {
            if rank[p] != usize::MAX {
                return Err(Error::InvalidOrder(format!("variable {v} listed twice")));
            }
            rank[p] = r;
        }
    }
    if let Some(p) = rank.iter().position(|&r| r == usize::MAX) {
        return Err(Error::InvalidOrder(format!("variable {} missing", poset.vars[p])));
    }
    let n = poset.len();
    let sets = &poset.sets;
    let less = strict_relation(n, |a, b| {
        if sets[a] == sets[b] {
            rank[a] < rank[b]
        } else {
            sets[a].len() < sets[b].len() && sets[a].is_subset(&sets[b])
        }
    });
    let covers = transitive_reduction(&less);
    let mut up = vec![Vec::new(); n];
    let mut down = vec![Vec::new(); n];
    for &(a, b) in &covers {
        up[a].push(b);
        down[b].push(a);
    }
    Ok(OrderedSupportPoset { base: poset.clone(), rank, less, covers, up, down })
}

/// Refinement by the natural variable order.
pub fn natural_order(poset: &SupportPoset) -> OrderedSupportPoset {
    ordered_support_poset(poset, poset.vars()).expect("support order is total")
}

impl OrderedSupportPoset {
    pub fn base(&self) -> &SupportPoset {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    pub fn vars(&self) -> &[usize] {
        self.base.vars()
    }

    /// Variables in the order used for tie-breaking.
    pub fn order(&self) -> Vec<usize> {
        let mut vars: Vec<(usize, usize)> = self.rank.iter().enumerate().map(|(p, &r)| (r, p)).collect();
        vars.sort();
        vars.into_iter().map(|(_, p)| self.base.vars[p]).collect()
    }

    fn pos(&self, var: usize) -> Option<usize> {
        self.base.position(var)
    }

    /// Strict order between variables.
    pub fn precedes(&self, a: usize, b: usize) -> bool {
        match (self.pos(a), self.pos(b)) {
            (Some(x), Some(y)) => self.less[x][y],
            _ => false,
        }
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.precedes(a, b) || self.precedes(b, a)
    }

    pub fn is_cover(&self, a: usize, b: usize) -> bool {
        match (self.pos(a), self.pos(b)) {
            (Some(x), Some(y)) => self.up[x].contains(&y),
            _ => false,
        }
    }

    /// Cover pairs as variables.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.covers.iter().map(|&(a, b)| (self.base.vars[a], self.base.vars[b])).collect()
    }

    pub(crate) fn up_positions(&self, p: usize) -> &[usize] {
        &self.up[p]
    }

    pub(crate) fn down_positions(&self, p: usize) -> &[usize] {
        &self.down[p]
    }

    pub(crate) fn position_of(&self, var: usize) -> Option<usize> {
        self.pos(var)
    }

    /// Positions in a linear extension (lower elements first).
    pub(crate) fn linear_extension(&self) -> Vec<usize> {
        let mut ps: Vec<usize> = (0..self.len()).collect();
        ps.sort_by_key(|&p| (self.base.sets[p].len(), self.rank[p]));
        ps
    }

    pub fn width(&self) -> usize {
        dilworth_width(&self.less)
    }

    /// Literal path test: `chain` is a chain and no element outside it lies
    /// strictly between its minimum and maximum while being comparable to
    /// all of its elements.
    pub fn is_path(&self, chain: &[usize]) -> bool {
        if chain.iter().any(|&v| self.pos(v).is_none()) {
            return false;
        }
        for (i, &a) in chain.iter().enumerate() {
            for &b in &chain[i + 1..] {
                if a == b || !self.comparable(a, b) {
                    return false;
                }
            }
        }
        let Some(&min) = chain.iter().find(|&&a| chain.iter().all(|&b| a == b || self.precedes(a, b))) else {
            return true;
        };
        let max = *chain
            .iter()
            .find(|&&a| chain.iter().all(|&b| a == b || self.precedes(b, a)))
            .expect("finite chain has a maximum");
        !self.vars().iter().any(|&p| {
            !chain.contains(&p)
                && self.precedes(min, p)
                && self.precedes(p, max)
                && chain.iter().all(|&c| self.comparable(c, p))
        })
    }

    pub fn to_dot(&self, names: &[String]) -> String {
        let mut out = String::from("digraph ordered_support_poset {\n  rankdir=BT;\n");
        for &v in self.vars() {
            out.push_str(&format!("  v{v} [label=\"{}\"];\n", names[v]));
        }
        for (a, b) in self.covers() {
            out.push_str(&format!("  v{a} -> v{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

fn strict_relation(n: usize, less: impl Fn(usize, usize) -> bool) -> Vec<Vec<bool>> {
    (0..n).map(|a| (0..n).map(|b| a != b && less(a, b)).collect()).collect()
}

fn transitive_reduction(less: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let n = less.len();
    let mut covers = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if less[a][b] && !(0..n).any(|c| less[a][c] && less[c][b]) {
                covers.push((a, b));
            }
        }
    }
    covers
}

/// Maximum antichain size: elements minus a maximum matching in the
/// comparability graph (Dilworth / Fulkerson).
pub(crate) fn dilworth_width(less: &[Vec<bool>]) -> usize {
    let n = less.len();
    let adj: Vec<Vec<usize>> = (0..n).map(|a| (0..n).filter(|&b| less[a][b]).collect()).collect();
    let matched = max_matching(&adj, n).iter().filter(|m| m.is_some()).count();
    n - matched
}
