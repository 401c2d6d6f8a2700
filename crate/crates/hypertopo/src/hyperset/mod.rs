//! Ground sets, hyperedges and hyperedge families in canonical form.

mod report;
mod transform;

pub use report::{structure_report, verify_3i, StructureReport, Verdict};
pub use transform::{
    complement_set, dual_hypergraph, graham_reduction, power_set, self_complementing_permutation,
    DualHypergraph,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};

pub type Vertex = u32;

/// A nonempty strictly increasing vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vertex>", into = "Vec<Vertex>")]
pub struct Hyperedge(Vec<Vertex>);

impl Hyperedge {
    pub fn new(members: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let mut v: Vec<Vertex> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if v.is_empty() {
            return precondition("hyperedges must be nonempty");
        }
        Ok(Hyperedge(v))
    }

    /// Closed integer interval `[a, b]`.
    pub fn range(a: Vertex, b: Vertex) -> Result<Self> {
        Self::new(a..=b)
    }

    pub(crate) fn from_sorted_unchecked(v: Vec<Vertex>) -> Self {
        debug_assert!(!v.is_empty() && v.windows(2).all(|w| w[0] < w[1]));
        Hyperedge(v)
    }

    pub fn members(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: Vertex) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn min(&self) -> Vertex {
        self.0[0]
    }

    pub fn max(&self) -> Vertex {
        *self.0.last().unwrap()
    }

    pub fn is_subset(&self, other: &Hyperedge) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut j = 0;
        for &x in &self.0 {
            while j < other.0.len() && other.0[j] < x {
                j += 1;
            }
            if j == other.0.len() || other.0[j] != x {
                return false;
            }
            j += 1;
        }
        true
    }

    pub fn is_proper_subset(&self, other: &Hyperedge) -> bool {
        self.len() < other.len() && self.is_subset(other)
    }

    pub fn intersection(&self, other: &Hyperedge) -> Vec<Vertex> {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    pub fn intersects(&self, other: &Hyperedge) -> bool {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }

    pub fn union(&self, other: &Hyperedge) -> Hyperedge {
        let mut v: Vec<Vertex> = self.0.iter().chain(other.0.iter()).copied().collect();
        v.sort_unstable();
        v.dedup();
        Hyperedge(v)
    }

    pub fn difference(&self, other: &Hyperedge) -> Vec<Vertex> {
        self.0.iter().copied().filter(|x| !other.contains(*x)).collect()
    }
}

impl TryFrom<Vec<Vertex>> for Hyperedge {
    type Error = Error;
    fn try_from(v: Vec<Vertex>) -> Result<Self> {
        Hyperedge::new(v)
    }
}

impl From<Hyperedge> for Vec<Vertex> {
    fn from(e: Hyperedge) -> Self {
        e.0
    }
}

impl fmt::Display for Hyperedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// The vertex universe Λ, strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroundSet(Vec<Vertex>);

impl GroundSet {
    pub fn new(elements: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let v: Vec<Vertex> = elements.into_iter().collect();
        if v.is_empty() {
            return precondition("ground set must be nonempty");
        }
        if !v.windows(2).all(|w| w[0] < w[1]) {
            return precondition("ground set must be strictly increasing without duplicates");
        }
        Ok(GroundSet(v))
    }

    /// `[1, n]`.
    pub fn interval(n: Vertex) -> Result<Self> {
        Self::new(1..=n)
    }

    pub fn range(a: Vertex, b: Vertex) -> Result<Self> {
        Self::new(a..=b)
    }

    pub(crate) fn from_sorted_unchecked(v: Vec<Vertex>) -> Self {
        GroundSet(v)
    }

    pub fn elements(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: Vertex) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn index_of(&self, x: Vertex) -> Option<usize> {
        self.0.binary_search(&x).ok()
    }

    pub fn as_hyperedge(&self) -> Option<Hyperedge> {
        if self.0.is_empty() {
            None
        } else {
            Some(Hyperedge(self.0.clone()))
        }
    }
}

/// Hyperedges in canonical (lexicographic) order without duplicates.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HyperedgeSet(Vec<Hyperedge>);

impl HyperedgeSet {
    /// Rejects duplicate hyperedges.
    pub fn new(edges: impl IntoIterator<Item = Hyperedge>) -> Result<Self> {
        let mut v: Vec<Hyperedge> = edges.into_iter().collect();
        v.sort();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return precondition(format!("duplicate hyperedge {}", w[0]));
        }
        Ok(HyperedgeSet(v))
    }

    /// Drops duplicates and returns how many were dropped.
    pub fn new_dedup(edges: impl IntoIterator<Item = Hyperedge>) -> (Self, usize) {
        let mut v: Vec<Hyperedge> = edges.into_iter().collect();
        let before = v.len();
        v.sort();
        v.dedup();
        let dropped = before - v.len();
        (HyperedgeSet(v), dropped)
    }

    pub fn from_lists(lists: &[&[Vertex]]) -> Result<Self> {
        let edges = lists
            .iter()
            .map(|l| Hyperedge::new(l.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(edges)
    }

    pub fn edges(&self) -> &[Hyperedge] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Hyperedge> {
        self.0.iter()
    }

    pub fn contains(&self, e: &Hyperedge) -> bool {
        self.0.binary_search(e).is_ok()
    }

    pub fn position(&self, e: &Hyperedge) -> Option<usize> {
        self.0.binary_search(e).ok()
    }

    pub fn norm(&self) -> usize {
        self.0.iter().map(Hyperedge::len).sum()
    }

    pub fn union_of_members(&self) -> Vec<Vertex> {
        let mut v: Vec<Vertex> = self.0.iter().flat_map(|e| e.0.iter().copied()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

impl<'a> IntoIterator for &'a HyperedgeSet {
    type Item = &'a Hyperedge;
    type IntoIter = std::slice::Iter<'a, Hyperedge>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// `(Λ, ℰ)` with every member of every hyperedge inside Λ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Hypergraph {
    ground: GroundSet,
    edges: HyperedgeSet,
}

impl Hypergraph {
    pub fn new(ground: GroundSet, edges: HyperedgeSet) -> Result<Self> {
        for e in edges.iter() {
            if let Some(x) = e.members().iter().find(|x| !ground.contains(**x)) {
                return precondition(format!("vertex {x} of hyperedge {e} is outside the ground set"));
            }
        }
        Ok(Hypergraph { ground, edges })
    }

    /// Convenience constructor: ground `[1, n]`, edges given as slices.
    pub fn over_interval(n: Vertex, lists: &[&[Vertex]]) -> Result<Self> {
        Self::new(GroundSet::interval(n)?, HyperedgeSet::from_lists(lists)?)
    }

    pub fn from_parts(ground: &[Vertex], lists: &[Vec<Vertex>]) -> Result<Self> {
        let edges = lists
            .iter()
            .map(|l| Hyperedge::new(l.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(GroundSet::new(ground.iter().copied())?, HyperedgeSet::new(edges)?)
    }

    pub(crate) fn from_unchecked(ground: GroundSet, edges: HyperedgeSet) -> Self {
        Hypergraph { ground, edges }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn edges(&self) -> &HyperedgeSet {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> Result<&Hyperedge> {
        self.edges.0.get(i).ok_or(Error::IndexOutOfRange {
            index: i,
            len: self.edges.len(),
        })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn with_edges(&self, edges: HyperedgeSet) -> Result<Self> {
        Self::new(self.ground.clone(), edges)
    }

    /// Number of hyperedges containing each ground vertex, in ground order.
    pub fn vertex_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.ground.len()];
        for e in self.edges.iter() {
            for &x in e.members() {
                deg[self.ground.index_of(x).expect("member of ground")] += 1;
            }
        }
        deg
    }

    /// `Some(k)` when every hyperedge has exactly `k` members.
    pub fn uniformity(&self) -> Option<usize> {
        let first = self.edges.0.first()?.len();
        self.edges.iter().all(|e| e.len() == first).then_some(first)
    }

    pub fn has_full_edge(&self) -> Option<&Hyperedge> {
        self.edges.iter().find(|e| e.len() == self.ground.len())
    }
}
