use std::collections::VecDeque;

use itertools::Itertools;
use serde::Serialize;

use super::build_v_intersected;
use crate::error::{limit, Result};
use crate::graph::Graph;
use crate::hyperset::{Hyperedge, Hypergraph};

pub const CONNECTIVITY_LIMIT: usize = 64;
pub const EXHAUSTIVE_CUT_LIMIT: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexCut {
    pub size: usize,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Connectivity {
    pub value: usize,
    pub cut: Vec<Hyperedge>,
    /// Component split, present only for disconnected input.
    pub components: Option<Vec<Vec<Hyperedge>>>,
    pub method: &'static str,
}

/// Smallest vertex set whose removal disconnects the graph; complete graphs
/// report `n − 1` with the first `n − 1` vertices.
pub fn min_vertex_cut_exhaustive(g: &Graph) -> VertexCut {
    let n = g.vertex_count();
    if !g.is_connected() || n <= 1 {
        return VertexCut { size: 0, vertices: vec![] };
    }
    let adj = g.adjacency();
    for s in 1..n.saturating_sub(1) {
        for cut in (0..n).combinations(s) {
            let mut removed = vec![false; n];
            cut.iter().for_each(|&v| removed[v] = true);
            if !connected_without(&adj, &removed) {
                return VertexCut { size: s, vertices: cut };
            }
        }
    }
    VertexCut {
        size: n - 1,
        vertices: (0..n - 1).collect(),
    }
}

fn connected_without(adj: &[Vec<usize>], removed: &[bool]) -> bool {
    let Some(start) = (0..adj.len()).find(|&v| !removed[v]) else {
        return true;
    };
    let mut seen = removed.to_vec();
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Vertex connectivity from unit-capacity max flows on the split graph,
/// minimised over non-adjacent pairs.
pub fn min_vertex_cut_flow(g: &Graph) -> VertexCut {
    let n = g.vertex_count();
    if !g.is_connected() || n <= 1 {
        return VertexCut { size: 0, vertices: vec![] };
    }
    let mut best: Option<VertexCut> = None;
    for s in 0..n {
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            let cut = st_vertex_cut(g, s, t);
            if best.as_ref().is_none_or(|b| cut.size < b.size) {
                best = Some(cut);
            }
        }
    }
    best.unwrap_or(VertexCut {
        size: n - 1,
        vertices: (0..n - 1).collect(),
    })
}

struct FlowNet {
    head: Vec<usize>,
    cap: Vec<i32>,
    adj: Vec<Vec<usize>>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    fn add(&mut self, a: usize, b: usize, c: i32) {
        self.adj[a].push(self.head.len());
        self.head.push(b);
        self.cap.push(c);
        self.adj[b].push(self.head.len());
        self.head.push(a);
        self.cap.push(0);
    }

    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut prev = vec![usize::MAX; self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &id in &self.adj[u] {
                let v = self.head[id];
                if !seen[v] && self.cap[id] > 0 {
                    seen[v] = true;
                    prev[v] = id;
                    q.push_back(v);
                }
            }
        }
        if !seen[t] {
            return false;
        }
        let mut v = t;
        while v != s {
            let id = prev[v];
            self.cap[id] -= 1;
            self.cap[id ^ 1] += 1;
            v = self.head[id ^ 1];
        }
        true
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &id in &self.adj[u] {
                let v = self.head[id];
                if !seen[v] && self.cap[id] > 0 {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }
}

// vertex v becomes v_in = 2v and v_out = 2v + 1
fn st_vertex_cut(g: &Graph, s: usize, t: usize) -> VertexCut {
    let n = g.vertex_count();
    let big = n as i32 + 1;
    let mut net = FlowNet::new(2 * n);
    for v in 0..n {
        let c = if v == s || v == t { big } else { 1 };
        net.add(2 * v, 2 * v + 1, c);
    }
    for &(a, b) in g.edges() {
        net.add(2 * a + 1, 2 * b, big);
        net.add(2 * b + 1, 2 * a, big);
    }
    let mut flow = 0;
    while net.augment(2 * s + 1, 2 * t) {
        flow += 1;
    }
    let reach = net.reachable(2 * s + 1);
    let vertices: Vec<usize> = (0..n).filter(|&v| reach[2 * v] && !reach[2 * v + 1]).collect();
    debug_assert_eq!(vertices.len(), flow);
    VertexCut { size: flow, vertices }
}

/// Vertex connectivity of the v-intersected graph, with the matching hyperedge cut.
pub fn hyperedge_connectivity(h: &Hypergraph) -> Result<Connectivity> {
    limit("hyperedge family", h.len(), CONNECTIVITY_LIMIT)?;
    let g = build_v_intersected(h).graph;
    let es = h.edges().edges();
    if !g.is_connected() {
        let components = g
            .components()
            .into_iter()
            .map(|c| c.into_iter().map(|i| es[i].clone()).collect())
            .collect();
        return Ok(Connectivity {
            value: 0,
            cut: vec![],
            components: Some(components),
            method: "disconnected",
        });
    }
    let (cut, method) = if h.len() <= EXHAUSTIVE_CUT_LIMIT {
        (min_vertex_cut_exhaustive(&g), "exhaustive")
    } else {
        (min_vertex_cut_flow(&g), "flow")
    };
    Ok(Connectivity {
        value: cut.size,
        cut: cut.vertices.iter().map(|&i| es[i].clone()).collect(),
        components: None,
        method,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectedMetrics {
    /// `deg(e_i)` = number of other hyperedges meeting `e_i`.
    pub hyperedge_degrees: Vec<usize>,
    /// `None` stands for an infinite diameter (disconnected graph).
    pub hyperdiameter: Option<usize>,
    pub dominating_set: Vec<Hyperedge>,
}

pub fn intersected_metrics(h: &Hypergraph) -> Result<IntersectedMetrics> {
    limit("hyperedge family", h.len(), CONNECTIVITY_LIMIT)?;
    let g = build_v_intersected(h).graph;
    let es = h.edges().edges();
    let dom = min_dominating_set(&g);
    Ok(IntersectedMetrics {
        hyperedge_degrees: g.degrees(),
        hyperdiameter: g.diameter(),
        dominating_set: dom.into_iter().map(|i| es[i].clone()).collect(),
    })
}

/// A minimum dominating set; branching always starts from the lowest undominated vertex.
fn min_dominating_set(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let closed: Vec<u64> = (0..n)
        .map(|v| adj[v].iter().fold(1u64 << v, |m, &u| m | 1u64 << u))
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for k in 0..=n {
        let mut chosen = Vec::with_capacity(k);
        if dom_rec(&closed, all, 0, k, &mut chosen) {
            return chosen;
        }
    }
    (0..n).collect()
}

fn dom_rec(closed: &[u64], all: u64, covered: u64, k: usize, chosen: &mut Vec<usize>) -> bool {
    if covered == all {
        return true;
    }
    if k == 0 {
        return false;
    }
    // the lowest uncovered vertex must be dominated by itself or a neighbour
    let low = (!covered & all).trailing_zeros() as usize;
    for v in (0..closed.len()).filter(|&v| closed[v] >> low & 1 == 1) {
        chosen.push(v);
        if dom_rec(closed, all, covered | closed[v], k - 1, chosen) {
            chosen.sort_unstable();
            return true;
        }
        chosen.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperset::Vertex;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn he(v: &[Vertex]) -> Hyperedge {
        Hyperedge::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn path_family_has_connectivity_one() {
        let h = Hypergraph::over_interval(4, &[&[1, 2], &[2, 3], &[3, 4]]).unwrap();
        let c = hyperedge_connectivity(&h).unwrap();
        assert_eq!(c.value, 1);
        assert_eq!(c.cut, vec![he(&[2, 3])]);
    }

    #[test]
    fn disconnected_reports_components() {
        let h = Hypergraph::over_interval(4, &[&[1, 2], &[3, 4]]).unwrap();
        let c = hyperedge_connectivity(&h).unwrap();
        assert_eq!(c.value, 0);
        assert_eq!(c.components.unwrap().len(), 2);
    }

    #[test]
    fn complete_graph_connectivity() {
        for n in 2..7 {
            assert_eq!(min_vertex_cut_exhaustive(&Graph::complete(n)).size, n - 1);
            assert_eq!(min_vertex_cut_flow(&Graph::complete(n)).size, n - 1);
        }
    }

    #[test]
    fn exhaustive_and_flow_agree_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for trial in 0..60 {
            let n = 3 + trial % 10;
            let g = Graph::random_connected(n, 0.35, &mut rng);
            let a = min_vertex_cut_exhaustive(&g);
            let b = min_vertex_cut_flow(&g);
            assert_eq!(a.size, b.size, "graph {:?}", g.edges());
            if b.size < n - 1 {
                let mut removed = vec![false; n];
                b.vertices.iter().for_each(|&v| removed[v] = true);
                assert!(!connected_without(&g.adjacency(), &removed));
            }
        }
    }

    #[test]
    fn metrics_on_path_family() {
        let h = Hypergraph::over_interval(4, &[&[1, 2], &[2, 3], &[3, 4]]).unwrap();
        let m = intersected_metrics(&h).unwrap();
        assert_eq!(m.hyperedge_degrees, vec![1, 2, 1]);
        assert_eq!(m.hyperdiameter, Some(2));
        assert_eq!(m.dominating_set, vec![he(&[2, 3])]);
    }

    #[test]
    fn metrics_on_single_edge() {
        let h = Hypergraph::over_interval(3, &[&[1, 2, 3]]).unwrap();
        let m = intersected_metrics(&h).unwrap();
        assert_eq!(m.hyperedge_degrees, vec![0]);
        assert_eq!(m.dominating_set, vec![he(&[1, 2, 3])]);
    }

    #[test]
    fn disconnected_diameter_is_infinite() {
        let h = Hypergraph::over_interval(4, &[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(intersected_metrics(&h).unwrap().hyperdiameter, None);
    }
}
