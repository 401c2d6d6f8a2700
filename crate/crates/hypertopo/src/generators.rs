//! Constructive families: strong sets, cyclic uniform sets, exhaustive
//! enumeration and key matchings.

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{limit, precondition, Result};
use crate::hyperset::{complement_set, verify_3i, GroundSet, Hyperedge, HyperedgeSet, Hypergraph, Vertex};

pub const STRONG_LIMIT: usize = 16;
pub const CYCLIC_LIMIT: usize = 64;
pub const ENUMERATION_LIMIT: usize = 4;
pub const KEY_MATCHING_LIMIT: usize = 10;

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `m_t = Σ_{k=1}^{t} C(m−t, k)`, with `m_1 = m`.
pub fn strong_cardinality(m: usize, t: usize) -> usize {
    if t == 1 {
        return m;
    }
    (1..=t).map(|k| binomial((m - t) as u64, k as u64) as usize).sum()
}

/// `{[k,t] ∪ A : k ∈ [1,t], A ⊆ [t+1,m], |A| = k}` for `t ≥ 2`;
/// `{{1,a} : a ∈ [2,m]} ∪ {[2,m]}` for `t = 1`.
pub fn strong_hyperedge_set(m: usize, t: usize) -> Result<Hypergraph> {
    limit("m", m, STRONG_LIMIT)?;
    if t == 0 || t >= m {
        return precondition(format!("need 1 ≤ t ≤ m − 1, got m = {m}, t = {t}"));
    }
    let (m32, t32) = (m as Vertex, t as Vertex);
    let mut edges = Vec::new();
    if t == 1 {
        for a in 2..=m32 {
            edges.push(Hyperedge::new([1, a])?);
        }
        edges.push(Hyperedge::range(2, m32)?);
    } else {
        for k in 1..=t32 {
            for a in (t32 + 1..=m32).combinations(k as usize) {
                edges.push(Hyperedge::new((k..=t32).chain(a))?);
            }
        }
    }
    Hypergraph::new(GroundSet::interval(m32)?, HyperedgeSet::new(edges)?)
}

/// `e_j = [1+j, k+j] (mod n)` for `j ∈ [0, n−1]`, residues in `[1,n]`.
pub fn cyclic_k_uniform(n: usize, k: usize) -> Result<Hypergraph> {
    limit("n", n, CYCLIC_LIMIT)?;
    if k < 2 || k + 1 > n {
        return precondition(format!("need 2 ≤ k ≤ n − 1, got n = {n}, k = {k}"));
    }
    let edges = (0..n)
        .map(|j| Hyperedge::new((0..k).map(|t| ((j + t) % n + 1) as Vertex)))
        .collect::<Result<Vec<_>>>()?;
    Hypergraph::new(GroundSet::interval(n as Vertex)?, HyperedgeSet::new(edges)?)
}

/// Canonical indices of the windows starting at `1, 2, …, n` in
/// `cyclic_k_uniform(n, k)`, i.e. the generation order.
pub fn cyclic_generation_order(n: usize, k: usize) -> Result<Vec<usize>> {
    let h = cyclic_k_uniform(n, k)?;
    (0..n)
        .map(|j| {
            let e = Hyperedge::new((0..k).map(|t| ((j + t) % n + 1) as Vertex))?;
            Ok(h.edges().position(&e).expect("window is a member"))
        })
        .collect()
}

fn mask_edge(mask: u32) -> Hyperedge {
    Hyperedge::new((0..32).filter(|b| mask >> b & 1 == 1).map(|b| b + 1)).expect("nonempty mask")
}

fn family_passes(masks: &[u32], full: u32, strict: bool) -> bool {
    let union = masks.iter().fold(0, |a, &m| a | m);
    if union != full {
        return false;
    }
    if !strict {
        return true;
    }
    if masks.len() == 1 {
        return masks[0] == full;
    }
    masks
        .iter()
        .enumerate()
        .all(|(i, &a)| masks.iter().enumerate().any(|(j, &b)| i != j && a & b != 0))
}

fn comparable(a: u32, b: u32) -> bool {
    a & b == a || a & b == b
}

fn extend(subsets: &[u32], from: usize, chosen: &mut Vec<u32>, full: u32, strict: bool, out: &mut Vec<Vec<u32>>) {
    if family_passes(chosen, full, strict) {
        out.push(chosen.clone());
    }
    for i in from..subsets.len() {
        let s = subsets[i];
        if chosen.iter().any(|&c| comparable(c, s)) {
            continue;
        }
        chosen.push(s);
        extend(subsets, i + 1, chosen, full, strict, out);
        chosen.pop();
    }
}

/// Every antichain family over `[1,n]` that covers `[1,n]`; `strict` also
/// demands Intersection. Output is sorted canonically.
pub fn enumerate_3i(n: usize, strict: bool) -> Result<Vec<Hypergraph>> {
    limit("ground set", n, ENUMERATION_LIMIT)?;
    if n == 0 {
        return precondition("ground set must be nonempty");
    }
    let full = (1u32 << n) - 1;
    let subsets: Vec<u32> = (1..=full).collect();
    let ground = GroundSet::interval(n as Vertex)?;
    let mut found: Vec<HyperedgeSet> = (0..subsets.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut out = Vec::new();
            let mut chosen = vec![subsets[i]];
            extend(&subsets, i + 1, &mut chosen, full, strict, &mut out);
            out.into_iter()
                .map(|f| HyperedgeSet::new(f.into_iter().map(mask_edge)).expect("antichain has no repeats"))
        })
        .collect();
    found.sort();
    found
        .into_iter()
        .map(|e| Hypergraph::new(ground.clone(), e))
        .collect()
}

/// The complement when both it and the family pass strict 3I.
pub fn key_matching_of(h: &Hypergraph) -> Option<Hypergraph> {
    let c = complement_set(h).ok()?;
    let ok = verify_3i(h, true).overall == Some(true) && verify_3i(&c, true).overall == Some(true);
    ok.then_some(c)
}

/// Pairs `(ℰ, Ē)` with both sides strict 3I. Exhaustive for `n ≤ 4`,
/// otherwise a seeded random search. At most `max` pairs, sorted by `ℰ`.
pub fn key_matchings(n: usize, max: usize, seed: u64) -> Result<Vec<(Hypergraph, Hypergraph)>> {
    limit("ground set", n, KEY_MATCHING_LIMIT)?;
    if n < 2 {
        return precondition("ground set needs at least two vertices");
    }
    let mut pairs: Vec<(Hypergraph, Hypergraph)> = if n <= ENUMERATION_LIMIT {
        enumerate_3i(n, true)?
            .into_iter()
            .filter_map(|h| key_matching_of(&h).map(|c| (h, c)))
            .take(max)
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let full = (1u32 << n) - 1;
        let ground = GroundSet::interval(n as Vertex)?;
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        let attempts = 1000 + 200 * max;
        for _ in 0..attempts {
            if out.len() >= max {
                break;
            }
            let count = rng.gen_range(2..=2 * n);
            let masks: BTreeSet<u32> = (0..count)
                .map(|_| rng.gen_range(1..full))
                .collect();
            let (edges, _) = HyperedgeSet::new_dedup(masks.into_iter().map(mask_edge));
            if !seen.insert(edges.clone()) {
                continue;
            }
            let h = Hypergraph::new(ground.clone(), edges)?;
            if let Some(c) = key_matching_of(&h) {
                out.push((h, c));
            }
        }
        out
    };
    pairs.sort_by(|a, b| a.0.edges().cmp(b.0.edges()));
    Ok(pairs)
}

/// `ℰ ∪ Ē`.
pub fn fixed_point_union(h: &Hypergraph) -> Result<Hypergraph> {
    let c = complement_set(h)?;
    let (edges, _) = HyperedgeSet::new_dedup(h.edges().iter().chain(c.edges().iter()).cloned());
    h.with_edges(edges)
}
