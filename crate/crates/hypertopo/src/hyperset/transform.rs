use itertools::Itertools;
use serde::Serialize;

use super::{GroundSet, Hyperedge, HyperedgeSet, Hypergraph, Vertex};
use crate::error::{limit, precondition, Error, Result};

pub const POWER_SET_LIMIT: usize = 20;
pub const PERMUTATION_LIMIT: usize = 8;

/// All `2^|g| − 1` nonempty subsets of `g` in canonical order.
pub fn power_set(g: &GroundSet) -> Result<HyperedgeSet> {
    limit("ground set", g.len(), POWER_SET_LIMIT)?;
    let xs = g.elements();
    let mut out: Vec<Hyperedge> = (1u32..(1u32 << xs.len()))
        .map(|mask| {
            let v: Vec<Vertex> = (0..xs.len()).filter(|i| mask >> i & 1 == 1).map(|i| xs[i]).collect();
            Hyperedge::from_sorted_unchecked(v)
        })
        .collect();
    out.sort();
    Ok(HyperedgeSet(out))
}

/// `(Λ, {Λ∖e})`.
pub fn complement_set(h: &Hypergraph) -> Result<Hypergraph> {
    let g = h.ground();
    let mut out = Vec::with_capacity(h.len());
    for e in h.edges().iter() {
        if e.len() == g.len() {
            return Err(Error::EmptyComplement(e.clone()));
        }
        let c: Vec<Vertex> = g.elements().iter().copied().filter(|x| !e.contains(*x)).collect();
        out.push(Hyperedge::from_sorted_unchecked(c));
    }
    out.sort();
    Ok(Hypergraph::from_unchecked(g.clone(), HyperedgeSet(out)))
}

/// Repeats GR-1 (drop vertices lying in exactly one hyperedge) and GR-2 (drop
/// hyperedges contained in another) until nothing changes.
pub fn graham_reduction(h: &Hypergraph) -> Hypergraph {
    let mut edges: Vec<Vec<Vertex>> = h.edges().iter().map(|e| e.members().to_vec()).collect();
    loop {
        let mut changed = false;

        let mut count = std::collections::BTreeMap::<Vertex, usize>::new();
        for e in &edges {
            for &x in e {
                *count.entry(x).or_default() += 1;
            }
        }
        for e in edges.iter_mut() {
            let before = e.len();
            e.retain(|x| count[x] > 1);
            changed |= e.len() != before;
        }

        let mut i = 0;
        while i < edges.len() {
            let contained = edges.iter().enumerate().any(|(j, f)| {
                j != i && is_sub(&edges[i], f) && (edges[i].len() < f.len() || j > i)
            });
            if contained || edges[i].is_empty() {
                edges.remove(i);
                changed = true;
            } else {
                i += 1;
            }
        }

        if !changed {
            break;
        }
    }
    let mut ground: Vec<Vertex> = edges.iter().flatten().copied().collect();
    ground.sort_unstable();
    ground.dedup();
    let mut hs: Vec<Hyperedge> = edges.into_iter().map(Hyperedge::from_sorted_unchecked).collect();
    hs.sort();
    Hypergraph::from_unchecked(GroundSet::from_sorted_unchecked(ground), HyperedgeSet(hs))
}

fn is_sub(a: &[Vertex], b: &[Vertex]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualHypergraph {
    pub hypergraph: Hypergraph,
    /// Incidence sets that coincided with an earlier one and were merged.
    pub collapsed: usize,
}

/// Transposes incidence: ground `[1, |ℰ|]`, one hyperedge per old vertex.
pub fn dual_hypergraph(h: &Hypergraph) -> Result<DualHypergraph> {
    let es = h.edges().edges();
    if es.is_empty() {
        return precondition("dual of an empty family");
    }
    let mut incidence = Vec::with_capacity(h.ground().len());
    for &x in h.ground().elements() {
        let xs: Vec<Vertex> = (0..es.len()).filter(|&i| es[i].contains(x)).map(|i| i as Vertex + 1).collect();
        if xs.is_empty() {
            return precondition(format!("vertex {x} lies in no hyperedge"));
        }
        incidence.push(Hyperedge::from_sorted_unchecked(xs));
    }
    let (edges, collapsed) = HyperedgeSet::new_dedup(incidence);
    let ground = GroundSet::interval(es.len() as Vertex)?;
    Ok(DualHypergraph {
        hypergraph: Hypergraph::from_unchecked(ground, edges),
        collapsed,
    })
}

/// A permutation σ of Λ with `e ∈ ℰ ⇔ σ(e) ∉ ℰ` for every k-subset e, returned
/// as the image sequence `σ(x_1), …, σ(x_n)`.
pub fn self_complementing_permutation(h: &Hypergraph, k: usize) -> Result<Option<Vec<Vertex>>> {
    if h.edges().iter().any(|e| e.len() != k) {
        return precondition(format!("family is not {k}-uniform"));
    }
    let xs = h.ground().elements();
    limit("ground set", xs.len(), PERMUTATION_LIMIT)?;
    let n = xs.len();
    if k == 0 || k > n {
        return precondition("k must lie in [1, |Λ|]");
    }
    let all: Vec<Vec<usize>> = (0..n).combinations(k).collect();
    if 2 * h.len() != all.len() {
        return Ok(None);
    }
    let member = |idx: &[usize]| {
        let e = Hyperedge::from_sorted_unchecked(idx.iter().map(|&i| xs[i]).collect());
        h.edges().contains(&e)
    };
    let inside: Vec<bool> = all.iter().map(|c| member(c)).collect();
    for perm in (0..n).permutations(n) {
        let ok = all.iter().zip(&inside).all(|(c, &inn)| {
            let mut img: Vec<usize> = c.iter().map(|&i| perm[i]).collect();
            img.sort_unstable();
            inn != member(&img)
        });
        if ok {
            return Ok(Some(perm.iter().map(|&i| xs[i]).collect()));
        }
    }
    Ok(None)
}
