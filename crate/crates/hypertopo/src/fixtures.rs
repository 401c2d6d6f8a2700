//! Worked families from the literature, kept verbatim.

use crate::colorings::{Color, TotalColoring};
use crate::error::Result;
use crate::graph::Graph;
use crate::hyperset::{GroundSet, Hyperedge, HyperedgeSet, Hypergraph, Vertex};
use crate::intersected::SetColoredGraph;

fn edge(v: &[Vertex]) -> Hyperedge {
    Hyperedge::new(v.iter().copied()).expect("fixture hyperedge")
}

/// Union of inclusive runs, e.g. `[1,4] ∪ [7,10]`.
fn runs(parts: &[(Vertex, Vertex)]) -> Hyperedge {
    Hyperedge::new(parts.iter().flat_map(|&(a, b)| a..=b)).expect("fixture hyperedge")
}

fn family(n: Vertex, edges: Vec<Hyperedge>) -> Hypergraph {
    Hypergraph::new(GroundSet::interval(n).unwrap(), HyperedgeSet::new(edges).unwrap()).unwrap()
}

/// FIX-A: the eight cyclic 4-sets `{i, i+1, i+2, i+3}` over `[1,8]`, listed
/// as `e_1, …, e_8` (the listing order, not canonical order).
pub fn fix_a_listing() -> Vec<Hyperedge> {
    (0..8u32).map(|i| Hyperedge::new((0..4).map(|t| (i + t) % 8 + 1)).unwrap()).collect()
}

pub fn fix_a() -> Hypergraph {
    family(8, fix_a_listing())
}

/// FIX-B: `ℰ_{1,1}` over `[1,10]`.
pub fn fix_b_e11() -> Hypergraph {
    fix_b_e1_listing().swap_remove(0)
}

/// FIX-B: `ℰ_{2,1}` over `[1,10]`.
pub fn fix_b_e21() -> Hypergraph {
    family(
        10,
        vec![
            edge(&[1, 6, 7]),
            edge(&[2, 4, 5, 6, 10]),
            edge(&[1, 3, 5, 7, 9]),
            edge(&[2, 4, 6, 8, 10]),
            edge(&[1, 3, 7, 8, 9]),
            edge(&[2, 3, 4, 5, 8, 9, 10]),
        ],
    )
}

/// FIX-B: `ℰ_{1,1}, …, ℰ_{1,11}` as printed; the eleventh equals the first.
pub fn fix_b_e1_listing() -> Vec<Hypergraph> {
    let rows: [[&[(Vertex, Vertex)]; 6]; 11] = [
        [&[(1, 2)], &[(3, 4)], &[(5, 6)], &[(1, 4), (7, 10)], &[(1, 2), (5, 10)], &[(8, 10)]],
        [&[(2, 3)], &[(4, 5)], &[(6, 7)], &[(2, 5), (8, 10), (1, 1)], &[(2, 3), (6, 10), (1, 1)], &[(9, 10), (1, 1)]],
        [&[(3, 4)], &[(5, 6)], &[(7, 8)], &[(3, 6), (9, 10), (1, 2)], &[(3, 4), (7, 10), (1, 2)], &[(10, 10), (1, 2)]],
        [&[(4, 5)], &[(6, 7)], &[(8, 9)], &[(4, 7), (10, 10), (1, 3)], &[(4, 5), (8, 10), (1, 3)], &[(1, 1), (2, 3)]],
        [&[(5, 6)], &[(7, 8)], &[(9, 10)], &[(1, 8)], &[(5, 6), (9, 10), (1, 4)], &[(2, 4)]],
        [&[(6, 7)], &[(8, 9)], &[(10, 10), (1, 1)], &[(2, 9)], &[(10, 10), (1, 7)], &[(3, 5)]],
        [&[(7, 8)], &[(9, 10)], &[(1, 2)], &[(3, 10)], &[(1, 8)], &[(4, 6)]],
        [&[(8, 9)], &[(10, 10), (1, 1)], &[(2, 3)], &[(4, 10), (1, 1)], &[(2, 9)], &[(5, 7)]],
        [&[(9, 10)], &[(1, 2)], &[(3, 4)], &[(5, 10), (1, 2)], &[(3, 10)], &[(6, 8)]],
        [&[(10, 10), (1, 1)], &[(2, 3)], &[(4, 5)], &[(6, 10), (1, 3)], &[(4, 10), (1, 1)], &[(7, 9)]],
        [&[(1, 2)], &[(3, 4)], &[(5, 6)], &[(7, 10), (1, 4)], &[(5, 10), (1, 2)], &[(8, 10)]],
    ];
    rows.iter().map(|r| family(10, r.iter().map(|p| runs(p)).collect())).collect()
}

type StrongListing = (usize, usize, &'static [&'static [Vertex]]);

/// FIX-D: `(m, t, ℰ_t(m, m_t))` for `m ∈ {4, 6, 8}`.
pub const FIX_D: [StrongListing; 10] = [
    (4, 1, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3, 4]]),
    (4, 2, &[&[1, 2, 3], &[1, 2, 4], &[2, 3, 4]]),
    (6, 1, &[&[1, 2], &[1, 3], &[1, 4], &[1, 5], &[1, 6], &[2, 3, 4, 5, 6]]),
    (6, 2, &[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5], &[1, 2, 6], &[2, 3, 4], &[2, 3, 5], &[2, 3, 6], &[2, 4, 5], &[2, 4, 6], &[2, 5, 6]]),
    (6, 3, &[&[1, 2, 3, 4], &[1, 2, 3, 5], &[1, 2, 3, 6], &[2, 3, 4, 5], &[2, 3, 4, 6], &[2, 3, 5, 6], &[3, 4, 5, 6]]),
    (8, 1, &[&[1, 2], &[1, 3], &[1, 4], &[1, 5], &[1, 6], &[1, 7], &[1, 8], &[2, 3, 4, 5, 6, 7, 8]]),
    (8, 2, &[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5], &[1, 2, 6], &[1, 2, 7], &[1, 2, 8], &[2, 3, 4], &[2, 3, 5], &[2, 3, 6], &[2, 3, 7], &[2, 3, 8], &[2, 4, 5], &[2, 4, 6], &[2, 4, 7], &[2, 4, 8], &[2, 5, 6], &[2, 5, 7], &[2, 5, 8], &[2, 6, 7], &[2, 6, 8], &[2, 7, 8]]),
    (8, 3, &[&[1, 2, 3, 4], &[1, 2, 3, 5], &[1, 2, 3, 6], &[1, 2, 3, 7], &[1, 2, 3, 8], &[2, 3, 4, 5], &[2, 3, 4, 6], &[2, 3, 4, 7], &[2, 3, 4, 8], &[2, 3, 5, 6], &[2, 3, 5, 7], &[2, 3, 5, 8], &[2, 3, 6, 7], &[2, 3, 6, 8], &[2, 3, 7, 8], &[3, 4, 5, 6], &[3, 4, 5, 7], &[3, 4, 5, 8], &[3, 4, 6, 7], &[3, 4, 6, 8], &[3, 4, 7, 8], &[3, 5, 6, 7], &[3, 5, 6, 8], &[3, 5, 7, 8], &[3, 6, 7, 8]]),
    (8, 4, &[&[1, 2, 3, 4, 5], &[1, 2, 3, 4, 6], &[1, 2, 3, 4, 7], &[1, 2, 3, 4, 8], &[2, 3, 4, 5, 6], &[2, 3, 4, 5, 7], &[2, 3, 4, 5, 8], &[2, 3, 4, 6, 7], &[2, 3, 4, 6, 8], &[2, 3, 4, 7, 8], &[3, 4, 5, 6, 7], &[3, 4, 5, 6, 8], &[3, 4, 5, 7, 8], &[3, 4, 6, 7, 8], &[4, 5, 6, 7, 8]]),
    (8, 5, &[&[1, 2, 3, 4, 5, 6], &[1, 2, 3, 4, 5, 7], &[1, 2, 3, 4, 5, 8], &[2, 3, 4, 5, 6, 7], &[2, 3, 4, 5, 6, 8], &[2, 3, 4, 5, 7, 8], &[3, 4, 5, 6, 7, 8]]),
];

pub fn fix_d(m: usize, t: usize) -> Option<Hypergraph> {
    FIX_D
        .iter()
        .find(|(mm, tt, _)| *mm == m && *tt == t)
        .map(|(m, _, sets)| family(*m as Vertex, sets.iter().map(|s| edge(s)).collect()))
}

/// FIX-E: `U_1, …, U_4`, the subsets of `[1,4]` grouped by size.
pub fn fix_e() -> Vec<HyperedgeSet> {
    vec![
        HyperedgeSet::from_lists(&[&[1], &[2], &[3], &[4]]).unwrap(),
        HyperedgeSet::from_lists(&[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4], &[3, 4]]).unwrap(),
        HyperedgeSet::from_lists(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]).unwrap(),
        HyperedgeSet::from_lists(&[&[1, 2, 3, 4]]).unwrap(),
    ]
}

/// FIX-F: `{{1,M}, …, {M−1,M}, [1,M−1]}` over `[1,M]`.
pub fn fix_f(m: Vertex) -> Result<Hypergraph> {
    let mut edges: Vec<Hyperedge> = (1..m).map(|i| edge(&[i, m])).collect();
    edges.push(Hyperedge::range(1, m - 1)?);
    Hypergraph::new(GroundSet::interval(m)?, HyperedgeSet::new(edges)?)
}

pub const FIX_C_VERTICES: [&[Vertex]; 4] = [
    &[1, 2, 6, 12, 9, 11, 7, 15],
    &[2, 3, 5, 6, 11, 10, 7, 13],
    &[4, 8, 5, 10, 6, 11, 9, 12],
    &[8, 14, 10, 13, 11, 7, 9, 15],
];

/// `u_12, u_13, u_14, u_23, u_24, u_34`, matching the edge order of `K_4`.
pub const FIX_C_EDGES: [&[Vertex]; 6] = [
    &[2, 6, 7, 11, 12, 15],
    &[2, 3, 6, 7, 9, 11, 12, 13],
    &[4, 5, 6, 7, 9, 11, 12, 15],
    &[4, 5, 6, 7, 9, 11, 15],
    &[1, 3, 6, 7, 9, 10, 11, 13],
    &[1, 2, 3, 4, 8, 9, 10, 11, 13],
];

/// FIX-C as a set-colored `K_4`.
pub fn fix_c() -> SetColoredGraph {
    SetColoredGraph::new(
        Graph::complete(4),
        FIX_C_VERTICES.iter().map(|v| edge(v)).collect(),
        Some(FIX_C_EDGES.iter().map(|v| edge(v)).collect()),
    )
    .unwrap()
}

/// FIX-C as a total coloring with set colors.
pub fn fix_c_coloring() -> TotalColoring {
    let g = fix_c();
    let wrap = |v: &[Hyperedge]| v.iter().map(|e| Some(Color::Set(e.clone()))).collect();
    TotalColoring::new(g.graph.clone(), wrap(&g.vertex_labels), wrap(g.edge_labels.as_ref().unwrap()), None).unwrap()
}

/// FIX-C hyperedge family `{e_1, …, e_4, u_12, …, u_34}` over `[1,15]`.
pub fn fix_c_hypergraph() -> Hypergraph {
    family(15, FIX_C_VERTICES.iter().chain(FIX_C_EDGES.iter()).map(|v| edge(v)).collect())
}

/// A set-ordered hyperedge family over `[0,9]` with its `(x, E, y)` parts as
/// canonical indices.
#[derive(Clone, Debug)]
pub struct WFixture {
    pub hypergraph: Hypergraph,
    pub x: Vec<usize>,
    pub e: Vec<usize>,
    pub y: Vec<usize>,
}

impl WFixture {
    pub fn new(x: &[Hyperedge], e: &[Hyperedge], y: &[Hyperedge]) -> Result<Self> {
        let all = x.iter().chain(e).chain(y).cloned();
        let h = Hypergraph::new(GroundSet::range(0, 9)?, HyperedgeSet::new(all)?)?;
        let idx = |s: &[Hyperedge]| s.iter().map(|e| h.edges().position(e).unwrap()).collect();
        Ok(WFixture {
            x: idx(x),
            e: idx(e),
            y: idx(y),
            hypergraph: h,
        })
    }

    pub fn parts(&self) -> (&[usize], &[usize], &[usize]) {
        (&self.x, &self.e, &self.y)
    }
}

/// FIX-G: `ℰ_1`, `ℰ_2`, `ℰ_3`.
pub fn fix_g() -> [WFixture; 3] {
    let r = |a, b| Hyperedge::range(a, b).unwrap();
    [
        WFixture::new(&[edge(&[0, 2, 3, 4])], &[r(1, 9)], &[edge(&[5, 7, 8, 9])]).unwrap(),
        WFixture::new(&[edge(&[0, 2]), edge(&[3, 4])], &[r(1, 9)], &[edge(&[5, 7]), edge(&[8, 9])]).unwrap(),
        WFixture::new(
            &[edge(&[0, 2]), edge(&[0, 3]), edge(&[0, 4])],
            &[r(1, 5), r(6, 9)],
            &[edge(&[5, 7]), edge(&[5, 8]), edge(&[5, 9])],
        )
        .unwrap(),
    ]
}
