use serde::Serialize;

use crate::graph::Graph;
use crate::hyperset::Hypergraph;
use crate::intersected::build_v_intersected;

pub const CHROMATIC_EDGE_LIMIT: usize = 16;
pub const CHROMATIC_GROUND_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChromaticReport {
    /// Proper hyperedge coloring: meeting hyperedges differ.
    pub chi_prime: usize,
    /// No monochromatic hyperedge of size at least 2.
    pub chi: usize,
    /// Hyper-total, with "some two vertices differ" inside every hyperedge.
    pub chi_total: usize,
    /// Hyper-total, with all vertices of a hyperedge pairwise different.
    pub chi_total_any_two: usize,
    /// False when the inputs exceed the limits and the values are greedy upper bounds.
    pub exact: bool,
}

/// Edges as lists of ground-set positions.
fn positions(h: &Hypergraph) -> Vec<Vec<usize>> {
    h.edges()
        .iter()
        .map(|e| e.members().iter().map(|&x| h.ground().index_of(x).expect("member of ground")).collect())
        .collect()
}

fn two_section(h: &Hypergraph) -> Graph {
    let mut pairs = std::collections::BTreeSet::new();
    for e in positions(h) {
        for (i, &a) in e.iter().enumerate() {
            for &b in &e[i + 1..] {
                pairs.insert((a, b));
            }
        }
    }
    Graph::new(h.ground().len(), pairs).expect("pairs are in range")
}

/// Edges of size ≥ 2, each tagged with its largest position.
fn closing_edges(h: &Hypergraph) -> Vec<Vec<Vec<usize>>> {
    let mut by_last = vec![Vec::new(); h.ground().len()];
    for e in positions(h) {
        if e.len() >= 2 {
            by_last[*e.last().unwrap()].push(e);
        }
    }
    by_last
}

fn mono(e: &[usize], col: &[usize]) -> bool {
    e.iter().all(|&v| col[v] == col[e[0]])
}

fn vertex_colorable(by_last: &[Vec<Vec<usize>>], v: usize, k: usize, col: &mut Vec<usize>) -> bool {
    if v == by_last.len() {
        return true;
    }
    let used = col.iter().take(v).copied().max().map_or(0, |m| m + 1);
    for c in 0..k.min(used + 1) {
        col[v] = c;
        if by_last[v].iter().all(|e| !mono(e, col)) && vertex_colorable(by_last, v + 1, k, col) {
            return true;
        }
    }
    false
}

fn chi_exact(h: &Hypergraph) -> usize {
    let by_last = closing_edges(h);
    let n = by_last.len();
    (1..=n.max(1))
        .find(|&k| vertex_colorable(&by_last, 0, k, &mut vec![0; n]))
        .unwrap_or(n)
}

fn chi_greedy(h: &Hypergraph) -> usize {
    let by_last = closing_edges(h);
    let mut col = vec![0; by_last.len()];
    for v in 0..by_last.len() {
        while by_last[v].iter().any(|e| mono(e, &col)) {
            col[v] += 1;
        }
    }
    col.iter().max().map_or(0, |m| m + 1)
}

pub fn hypergraph_chromatics(h: &Hypergraph) -> ChromaticReport {
    let exact = h.len() <= CHROMATIC_EDGE_LIMIT && h.ground().len() <= CHROMATIC_GROUND_LIMIT;
    let inter = build_v_intersected(h).graph;
    let sec = two_section(h);
    let (chi_prime, chi, sec_chi) = if exact {
        (inter.chromatic_number(), chi_exact(h), sec.chromatic_number())
    } else {
        (inter.greedy_colors(), chi_greedy(h), sec.greedy_colors())
    };
    ChromaticReport {
        chi_prime,
        chi,
        chi_total: chi_prime.max(chi),
        chi_total_any_two: chi_prime.max(sec_chi),
        exact,
    }
}
