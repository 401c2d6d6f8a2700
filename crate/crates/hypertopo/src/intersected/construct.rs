use std::collections::{BTreeMap, BTreeSet};

use super::{verify_ve_intersected, SetColoredGraph, VeOptions};
use crate::error::{limit, precondition, Result};
use crate::graph::Graph;
use crate::hyperset::{GroundSet, Hyperedge, HyperedgeSet, Hypergraph, Vertex};

pub const INDUCE_LIMIT: usize = 200;

fn bfs_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    if n == 0 {
        return order;
    }
    seen[0] = true;
    let mut q = std::collections::VecDeque::from([0]);
    while let Some(u) = q.pop_front() {
        order.push(u);
        let mut next = adj[u].clone();
        next.sort_unstable();
        for v in next {
            if !seen[v] {
                seen[v] = true;
                q.push_back(v);
            }
        }
    }
    order
}

fn finish(g: &Graph, labels: Vec<BTreeSet<Vertex>>, top: Vertex) -> Result<(Hypergraph, SetColoredGraph)> {
    let vertex_labels: Vec<Hyperedge> = labels
        .into_iter()
        .map(Hyperedge::new)
        .collect::<Result<_>>()?;
    let sc = SetColoredGraph::new(g.clone(), vertex_labels, None)?.with_intersection_labels()?;
    let edges = HyperedgeSet::new(sc.vertex_labels.iter().cloned())?;
    let h = Hypergraph::new(GroundSet::interval(top)?, edges)?;
    Ok((h, sc))
}

/// Vertex-by-vertex labelling in BFS order from vertex 0: a new vertex with
/// `m` earlier neighbours gets `m` fresh elements, one shared with each of them.
pub fn induce_3i_coloring(g: &Graph) -> Result<(Hypergraph, SetColoredGraph)> {
    induce_3i_coloring_with(g, false)
}

/// With `private`, every new vertex also receives one element nobody else
/// gets, so no label can contain another.
pub fn induce_3i_coloring_with(g: &Graph, private: bool) -> Result<(Hypergraph, SetColoredGraph)> {
    let n = g.vertex_count();
    limit("graph", n, INDUCE_LIMIT)?;
    if n == 0 || !g.is_connected() {
        return precondition("graph must be nonempty and connected");
    }
    let adj = g.adjacency();
    let order = bfs_order(g);
    let mut placed = vec![false; n];
    let mut labels = vec![BTreeSet::new(); n];
    labels[order[0]].insert(1);
    placed[order[0]] = true;
    let mut top: Vertex = 1;
    for &x in &order[1..] {
        let mut earlier: Vec<usize> = adj[x].iter().copied().filter(|&y| placed[y]).collect();
        earlier.sort_unstable();
        for y in earlier {
            top += 1;
            labels[x].insert(top);
            labels[y].insert(top);
        }
        if private {
            top += 1;
            labels[x].insert(top);
        }
        placed[x] = true;
    }
    finish(g, labels, top)
}

/// Leaf-by-leaf growth in BFS order: a child `u` of `v` gets a fresh element
/// `{M+1}` which is also added to `v`.
pub fn grow_tree_hyperedge_set(t: &Graph) -> Result<Hypergraph> {
    let n = t.vertex_count();
    if !t.is_tree() {
        return precondition("input is not a tree");
    }
    limit("tree", n, INDUCE_LIMIT)?;
    let adj = t.adjacency();
    let order = bfs_order(t);
    let mut placed = vec![false; n];
    let mut labels = vec![BTreeSet::new(); n];
    let mut top: Vertex = 0;
    // a root with a single child keeps its own element, otherwise P_2 collapses
    if adj[0].len() <= 1 {
        top = 1;
        labels[0].insert(1);
    }
    placed[0] = true;
    for &u in &order[1..] {
        let v = adj[u].iter().copied().find(|&v| placed[v]).expect("bfs parent");
        top += 1;
        labels[u].insert(top);
        labels[v].insert(top);
        placed[u] = true;
    }
    Ok(finish(t, labels, top)?.0)
}

/// `G ⊖ G′`: a copy `u′ = u + p` of every vertex with `F(u′) = F(u)`, the
/// vertical edges `uu′` labelled `F(u)`, and for every edge `ab` the copy
/// `a′b′` and the cross edges `ab′`, `a′b`, all labelled `F(ab)`.
pub fn double_graph(g: &SetColoredGraph) -> Result<SetColoredGraph> {
    let g = match &g.edge_labels {
        Some(_) => g.clone(),
        None => g.clone().with_intersection_labels()?,
    };
    let h = g.label_hypergraph()?;
    let loose = VeOptions {
        allow_equal_endpoint_labels: true,
    };
    if !verify_ve_intersected(&g, &h, loose)?.pass {
        return precondition("input is not a ve-intersected graph of its labels");
    }
    let p = g.graph.vertex_count();
    let el = g.edge_labels.as_ref().expect("filled above");
    let mut edges: BTreeMap<(usize, usize), Hyperedge> = BTreeMap::new();
    for (k, &(a, b)) in g.graph.edges().iter().enumerate() {
        for (x, y) in [(a, b), (a + p, b + p), (a, b + p), (b, a + p)] {
            edges.insert((x.min(y), x.max(y)), el[k].clone());
        }
    }
    for u in 0..p {
        edges.insert((u, u + p), g.vertex_labels[u].clone());
    }
    let graph = Graph::new(2 * p, edges.keys().copied())?;
    let vertex_labels = g.vertex_labels.iter().chain(g.vertex_labels.iter()).cloned().collect();
    SetColoredGraph::new(graph, vertex_labels, Some(edges.into_values().collect()))
}
