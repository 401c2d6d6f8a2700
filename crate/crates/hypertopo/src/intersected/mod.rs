//! v-/ve-intersected graphs of hyperedge families.

mod connectivity;
mod construct;
mod cycles;
mod morph;

pub use connectivity::{
    hyperedge_connectivity, intersected_metrics, min_vertex_cut_exhaustive, min_vertex_cut_flow,
    Connectivity, IntersectedMetrics, VertexCut,
};
pub use construct::{double_graph, grow_tree_hyperedge_set, induce_3i_coloring, induce_3i_coloring_with};
pub use cycles::{
    find_proper_hamiltonian_cycle, representatives_for_order, verify_uniform_cycle, HyperCycle,
    UniformCycleReport,
};
pub use morph::{
    check_colored_homomorphism, hyperedge_coincide, hyperedge_split, hypergraph_isomorphic,
    HomomorphismOptions, HomomorphismReport, IsomorphismOutcome, SetOp, SplitResult,
};

use serde::{Deserialize, Serialize};

use crate::error::{precondition, Result};
use crate::graph::Graph;
use crate::hyperset::{GroundSet, Hyperedge, HyperedgeSet, Hypergraph, Verdict};

/// A graph whose vertices, and optionally edges, carry hyperedge labels.
/// `edge_labels[i]` belongs to `graph.edges()[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetColoredGraph {
    pub graph: Graph,
    pub vertex_labels: Vec<Hyperedge>,
    pub edge_labels: Option<Vec<Hyperedge>>,
}

impl SetColoredGraph {
    pub fn new(graph: Graph, vertex_labels: Vec<Hyperedge>, edge_labels: Option<Vec<Hyperedge>>) -> Result<Self> {
        if vertex_labels.len() != graph.vertex_count() {
            return precondition(format!(
                "{} vertex labels for {} vertices",
                vertex_labels.len(),
                graph.vertex_count()
            ));
        }
        if let Some(el) = &edge_labels {
            if el.len() != graph.edge_count() {
                return precondition(format!("{} edge labels for {} edges", el.len(), graph.edge_count()));
            }
        }
        Ok(SetColoredGraph {
            graph,
            vertex_labels,
            edge_labels,
        })
    }

    pub fn edge_label(&self, a: usize, b: usize) -> Option<&Hyperedge> {
        let i = self.graph.edge_index(a, b)?;
        self.edge_labels.as_ref().map(|l| &l[i])
    }

    /// Distinct vertex labels as a hypergraph over the union of their members.
    pub fn label_hypergraph(&self) -> Result<Hypergraph> {
        let (edges, _) = HyperedgeSet::new_dedup(self.vertex_labels.iter().cloned());
        let ground = GroundSet::new(edges.union_of_members())?;
        Hypergraph::new(ground, edges)
    }

    /// Fills edge labels with endpoint intersections.
    pub fn with_intersection_labels(mut self) -> Result<Self> {
        let mut labels = Vec::with_capacity(self.graph.edge_count());
        for &(a, b) in self.graph.edges() {
            let i = self.vertex_labels[a].intersection(&self.vertex_labels[b]);
            match Hyperedge::new(i) {
                Ok(e) => labels.push(e),
                Err(_) => return precondition(format!("endpoints {a},{b} have disjoint labels")),
            }
        }
        self.edge_labels = Some(labels);
        Ok(self)
    }
}

/// One vertex per hyperedge (canonical index), adjacency on nonempty
/// intersection, edge label the intersection itself.
pub fn build_v_intersected(h: &Hypergraph) -> SetColoredGraph {
    let es = h.edges().edges();
    let mut edges = Vec::new();
    let mut labels = Vec::new();
    for i in 0..es.len() {
        for j in i + 1..es.len() {
            let c = es[i].intersection(&es[j]);
            if !c.is_empty() {
                edges.push((i, j));
                labels.push(Hyperedge::from_sorted_unchecked(c));
            }
        }
    }
    let graph = Graph::new(es.len(), edges).expect("pairs are simple and sorted");
    SetColoredGraph {
        graph,
        vertex_labels: es.to_vec(),
        edge_labels: Some(labels),
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VeOptions {
    /// Permit `F(x) = F(y)` across an edge (needed for doubled graphs).
    pub allow_equal_endpoint_labels: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LabelReading {
    /// Vertex labels alone form ℰ.
    Vertex,
    /// Vertex and edge labels together form ℰ.
    Total,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VeReport {
    pub pass: bool,
    pub distinct_endpoints: Verdict<(usize, usize)>,
    /// `F(uv) ⊇ F(u) ∩ F(v) ≠ ∅`.
    pub containment: Verdict<(usize, usize)>,
    pub label_coverage: Verdict<Vec<Hyperedge>>,
    pub reading: Option<LabelReading>,
    /// Every intersecting pair of hyperedges appears as the labels of some edge.
    pub converse: Verdict<(Hyperedge, Hyperedge)>,
}

pub fn verify_ve_intersected(g: &SetColoredGraph, h: &Hypergraph, opts: VeOptions) -> Result<VeReport> {
    let Some(edge_labels) = &g.edge_labels else {
        return precondition("edge labels are required");
    };
    let vl = &g.vertex_labels;
    let mut distinct = Verdict::pass();
    let mut containment = Verdict::pass();
    for (k, &(a, b)) in g.graph.edges().iter().enumerate() {
        if distinct.holds && !opts.allow_equal_endpoint_labels && vl[a] == vl[b] {
            distinct = Verdict::fail((a, b));
        }
        if containment.holds {
            let cap = vl[a].intersection(&vl[b]);
            let covered = cap.iter().all(|x| edge_labels[k].contains(*x));
            if cap.is_empty() || !covered {
                containment = Verdict::fail((a, b));
            }
        }
    }

    let (vertex_set, _) = HyperedgeSet::new_dedup(vl.iter().cloned());
    let (total_set, _) = HyperedgeSet::new_dedup(vl.iter().chain(edge_labels.iter()).cloned());
    let reading = if &vertex_set == h.edges() {
        Some(LabelReading::Vertex)
    } else if &total_set == h.edges() {
        Some(LabelReading::Total)
    } else {
        None
    };
    let label_coverage = if reading.is_some() {
        Verdict::pass()
    } else {
        let mut diff: Vec<Hyperedge> = h
            .edges()
            .iter()
            .filter(|e| !vertex_set.contains(e))
            .chain(vertex_set.iter().filter(|e| !h.edges().contains(e)))
            .cloned()
            .collect();
        diff.sort();
        Verdict::fail(diff)
    };

    let mut converse = Verdict::pass();
    let es = vertex_set.edges();
    'outer: for i in 0..es.len() {
        for j in i + 1..es.len() {
            if !es[i].intersects(&es[j]) {
                continue;
            }
            let realised = g.graph.edges().iter().any(|&(a, b)| {
                (vl[a] == es[i] && vl[b] == es[j]) || (vl[a] == es[j] && vl[b] == es[i])
            });
            if !realised {
                converse = Verdict::fail((es[i].clone(), es[j].clone()));
                break 'outer;
            }
        }
    }

    let pass = distinct.holds && containment.holds && label_coverage.holds && converse.holds;
    Ok(VeReport {
        pass,
        distinct_endpoints: distinct,
        containment,
        label_coverage,
        reading,
        converse,
    })
}
