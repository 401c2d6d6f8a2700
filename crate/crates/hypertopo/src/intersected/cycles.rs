use serde::Serialize;

use crate::error::{limit, precondition, Result};
use crate::hyperset::{Hyperedge, Hypergraph, Vertex};

pub const CYCLE_LIMIT: usize = 12;

/// `edge_order[j]` and `edge_order[j+1]` (cyclically) share `representatives[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperCycle {
    pub edge_order: Vec<usize>,
    pub representatives: Vec<Vertex>,
}

impl HyperCycle {
    /// Distinct representatives covering Λ, each in its consecutive intersection.
    pub fn verify(&self, h: &Hypergraph) -> bool {
        let n = self.edge_order.len();
        if n != h.len() || self.representatives.len() != n {
            return false;
        }
        let mut order = self.edge_order.clone();
        order.sort_unstable();
        if order != (0..n).collect::<Vec<_>>() {
            return false;
        }
        let es = h.edges().edges();
        let mut reps = self.representatives.clone();
        reps.sort_unstable();
        reps.dedup();
        if reps != h.ground().elements() {
            return false;
        }
        (0..n).all(|j| {
            let (a, b) = (&es[self.edge_order[j]], &es[self.edge_order[(j + 1) % n]]);
            a.contains(self.representatives[j]) && b.contains(self.representatives[j])
        })
    }
}

/// Backtracking over cyclic orders starting at hyperedge 0, trying hyperedges
/// in canonical order and representatives smallest first.
pub fn find_proper_hamiltonian_cycle(h: &Hypergraph) -> Result<Option<HyperCycle>> {
    let n = h.len();
    if n != h.ground().len() {
        return precondition(format!("need |ℰ| = |Λ|, got {} and {}", n, h.ground().len()));
    }
    limit("hyperedge family", n, CYCLE_LIMIT)?;
    if n == 0 {
        return Ok(None);
    }
    let es = h.edges().edges();
    let mut order = vec![0usize];
    let mut reps = Vec::with_capacity(n);
    let mut in_cycle = vec![false; n];
    in_cycle[0] = true;
    let mut used = std::collections::BTreeSet::new();
    if cycle_rec(es, &mut order, &mut reps, &mut in_cycle, &mut used) {
        Ok(Some(HyperCycle {
            edge_order: order,
            representatives: reps,
        }))
    } else {
        Ok(None)
    }
}

fn cycle_rec(
    es: &[Hyperedge],
    order: &mut Vec<usize>,
    reps: &mut Vec<Vertex>,
    in_cycle: &mut [bool],
    used: &mut std::collections::BTreeSet<Vertex>,
) -> bool {
    let n = es.len();
    let last = *order.last().unwrap();
    if order.len() == n {
        for x in es[last].intersection(&es[order[0]]) {
            if !used.contains(&x) {
                reps.push(x);
                return true;
            }
        }
        return false;
    }
    for next in 0..n {
        if in_cycle[next] {
            continue;
        }
        let common = es[last].intersection(&es[next]);
        for x in common {
            if used.contains(&x) {
                continue;
            }
            used.insert(x);
            reps.push(x);
            order.push(next);
            in_cycle[next] = true;
            if cycle_rec(es, order, reps, in_cycle, used) {
                return true;
            }
            in_cycle[next] = false;
            order.pop();
            reps.pop();
            used.remove(&x);
        }
    }
    false
}

/// Smallest-first system of distinct representatives for a fixed cyclic order.
pub fn representatives_for_order(h: &Hypergraph, order: &[usize]) -> Result<Option<Vec<Vertex>>> {
    let n = order.len();
    for &i in order {
        h.edge(i)?;
    }
    let es = h.edges().edges();
    let pools: Vec<Vec<Vertex>> = (0..n)
        .map(|j| es[order[j]].intersection(&es[order[(j + 1) % n]]))
        .collect();
    let mut reps = Vec::with_capacity(n);
    let mut used = std::collections::BTreeSet::new();

    fn rec(
        pools: &[Vec<Vertex>],
        reps: &mut Vec<Vertex>,
        used: &mut std::collections::BTreeSet<Vertex>,
    ) -> bool {
        let j = reps.len();
        if j == pools.len() {
            return true;
        }
        for &x in &pools[j] {
            if used.insert(x) {
                reps.push(x);
                if rec(pools, reps, used) {
                    return true;
                }
                reps.pop();
                used.remove(&x);
            }
        }
        false
    }

    Ok(rec(&pools, &mut reps, &mut used).then_some(reps))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniformCycleReport {
    pub pass: bool,
    pub k: usize,
    /// Every consecutive pair meets in exactly `k − 1` vertices; witness is the position.
    pub consecutive_sizes: bool,
    pub first_bad_position: Option<usize>,
    /// Order uses distinct valid indices.
    pub well_formed: bool,
    /// Each vertex lies in exactly `k − 1` consecutive intersections.
    pub vertex_coverage: bool,
    pub uncovered: Vec<Vertex>,
    /// Cycle length equals |Λ|, forced by the coverage count.
    pub length_matches_ground: bool,
    /// Set when the literal reading cannot hold for this family at all.
    pub unsatisfiable: bool,
}

pub fn verify_uniform_cycle(h: &Hypergraph, order: &[usize]) -> Result<UniformCycleReport> {
    let Some(k) = h.uniformity() else {
        return precondition("family is not uniform");
    };
    let es = h.edges().edges();
    let t = order.len();
    let mut seen = vec![false; es.len()];
    let well_formed = t >= 2
        && order.iter().all(|&i| {
            let ok = i < es.len() && !seen[i];
            if ok {
                seen[i] = true;
            }
            ok
        });
    let n = h.ground().len();
    if !well_formed {
        return Ok(UniformCycleReport {
            pass: false,
            k,
            consecutive_sizes: false,
            first_bad_position: None,
            well_formed,
            vertex_coverage: false,
            uncovered: vec![],
            length_matches_ground: t == n,
            unsatisfiable: es.len() != n,
        });
    }
    let mut first_bad = None;
    let mut count = vec![0usize; n];
    for j in 0..t {
        let c = es[order[j]].intersection(&es[order[(j + 1) % t]]);
        if c.len() + 1 != k && first_bad.is_none() {
            first_bad = Some(j);
        }
        for x in c {
            count[h.ground().index_of(x).unwrap()] += 1;
        }
    }
    let uncovered: Vec<Vertex> = h
        .ground()
        .elements()
        .iter()
        .zip(&count)
        .filter(|(_, &c)| c + 1 != k)
        .map(|(x, _)| *x)
        .collect();
    let consecutive_sizes = first_bad.is_none();
    let vertex_coverage = uncovered.is_empty();
    let length_matches_ground = t == n;
    Ok(UniformCycleReport {
        pass: consecutive_sizes && vertex_coverage && length_matches_ground,
        k,
        consecutive_sizes,
        first_bad_position: first_bad,
        well_formed,
        vertex_coverage,
        uncovered,
        length_matches_ground,
        unsatisfiable: es.len() < n,
    })
}
