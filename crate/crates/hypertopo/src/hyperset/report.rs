use serde::Serialize;

use super::{Hyperedge, Hypergraph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict<W> {
    pub holds: bool,
    /// First violation in canonical order, when the verdict fails.
    pub witness: Option<W>,
}

impl<W> Verdict<W> {
    pub fn pass() -> Self {
        Verdict { holds: true, witness: None }
    }

    pub fn fail(w: W) -> Self {
        Verdict { holds: false, witness: Some(w) }
    }

    pub fn from_witness(w: Option<W>) -> Self {
        match w {
            Some(w) => Self::fail(w),
            None => Self::pass(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    /// `(smaller, larger)` with `smaller ⊂ larger`.
    pub independence: Verdict<(Hyperedge, Hyperedge)>,
    pub intersection: Verdict<Hyperedge>,
    /// Every hyperedge that meets no other one.
    pub intersection_failures: Vec<Hyperedge>,
    pub integrity: Verdict<Vec<Vertex>>,
    pub strict: bool,
    /// Overall verdict, only decided in strict mode.
    pub overall: Option<bool>,
    pub uniform_k: Option<usize>,
    pub equitable: bool,
    pub full: bool,
    /// Hypervertex degrees sorted ascending.
    pub degree_series: Vec<usize>,
    /// `(vertex, degree)` in ground order.
    pub degrees: Vec<(Vertex, usize)>,
    pub norm: usize,
    pub ears: Vec<Hyperedge>,
    pub isolated: Vec<Vertex>,
    pub euler: bool,
    pub bipartite_split: Option<(Vec<Hyperedge>, Vec<Hyperedge>)>,
    pub self_complementary: bool,
    /// Disjoint covers of Λ; `None` when the family exceeds the enumeration limit.
    pub perfect_hypermatchings: Option<Vec<Vec<Hyperedge>>>,
}

impl StructureReport {
    pub fn three_i(&self) -> bool {
        self.independence.holds && self.intersection.holds && self.integrity.holds
    }
}

pub const MATCHING_LIMIT: usize = 20;

pub(crate) fn independence(h: &Hypergraph) -> Verdict<(Hyperedge, Hyperedge)> {
    let es = h.edges().edges();
    for a in es {
        for b in es {
            if a.is_proper_subset(b) {
                return Verdict::fail((a.clone(), b.clone()));
            }
        }
    }
    Verdict::pass()
}

/// Hyperedges meeting no other hyperedge. A family consisting of Λ alone passes vacuously.
pub(crate) fn intersection_failures(h: &Hypergraph) -> Vec<Hyperedge> {
    let es = h.edges().edges();
    if es.len() == 1 && es[0].len() == h.ground().len() {
        return Vec::new();
    }
    es.iter()
        .enumerate()
        .filter(|(i, a)| !es.iter().enumerate().any(|(j, b)| *i != j && a.intersects(b)))
        .map(|(_, a)| a.clone())
        .collect()
}

pub(crate) fn missing_vertices(h: &Hypergraph) -> Vec<Vertex> {
    let deg = h.vertex_degrees();
    h.ground()
        .elements()
        .iter()
        .zip(deg)
        .filter(|(_, d)| *d == 0)
        .map(|(x, _)| *x)
        .collect()
}

/// Reports Independence, Intersection and Integrity. In strict mode `overall`
/// is the conjunction of the three.
pub fn verify_3i(h: &Hypergraph, strict: bool) -> StructureReport {
    let mut r = structure_report(h);
    r.strict = strict;
    r.overall = strict.then(|| r.three_i());
    r
}

pub fn structure_report(h: &Hypergraph) -> StructureReport {
    let independence = independence(h);
    let failures = intersection_failures(h);
    let intersection = Verdict::from_witness(failures.first().cloned());
    let missing = missing_vertices(h);
    let integrity = if missing.is_empty() {
        Verdict::pass()
    } else {
        Verdict::fail(missing)
    };

    let es = h.edges().edges();
    let deg = h.vertex_degrees();
    let degrees: Vec<(Vertex, usize)> =
        h.ground().elements().iter().copied().zip(deg.iter().copied()).collect();
    let mut degree_series = deg.clone();
    degree_series.sort_unstable();
    let isolated: Vec<Vertex> = degrees.iter().filter(|(_, d)| *d == 1).map(|(x, _)| *x).collect();

    let equitable = match (es.iter().map(|e| e.len()).min(), es.iter().map(|e| e.len()).max()) {
        (Some(a), Some(b)) => b - a <= 1,
        _ => true,
    };

    let edge_deg: Vec<usize> = (0..es.len())
        .map(|i| (0..es.len()).filter(|&j| j != i && es[i].intersects(&es[j])).count())
        .collect();

    StructureReport {
        independence,
        intersection,
        intersection_failures: failures,
        integrity,
        strict: false,
        overall: None,
        uniform_k: h.uniformity(),
        equitable,
        full: deg.iter().all(|&d| d >= 1),
        degree_series,
        degrees,
        norm: h.edges().norm(),
        ears: ears(h),
        isolated,
        euler: edge_deg.iter().all(|d| d % 2 == 0),
        bipartite_split: bipartite_split(h),
        self_complementary: self_complementary(h),
        perfect_hypermatchings: (es.len() <= MATCHING_LIMIT).then(|| perfect_hypermatchings(h)),
    }
}

/// An ear either meets no other hyperedge, or has a partner `e*` such that
/// every vertex of `e ∖ e*` lies in no other hyperedge.
fn ears(h: &Hypergraph) -> Vec<Hyperedge> {
    let es = h.edges().edges();
    let mut out = Vec::new();
    for (i, e) in es.iter().enumerate() {
        let others = || es.iter().enumerate().filter(move |(j, _)| *j != i).map(|(_, f)| f);
        let lonely = others().all(|f| !e.intersects(f));
        let private = |x: Vertex| others().all(|f| !f.contains(x));
        let has_partner = others().any(|star| e.difference(star).into_iter().all(private));
        if lonely || has_partner {
            out.push(e.clone());
        }
    }
    out
}

/// Splits ℰ into two internally disjoint parts where each member meets some
/// member of the other part. Components are 2-coloured from their canonically
/// first hyperedge.
fn bipartite_split(h: &Hypergraph) -> Option<(Vec<Hyperedge>, Vec<Hyperedge>)> {
    let es = h.edges().edges();
    let n = es.len();
    if n < 2 {
        return None;
    }
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && es[i].intersects(&es[j])).collect())
        .collect();
    if adj.iter().any(|a| a.is_empty()) {
        return None;
    }
    let mut side = vec![usize::MAX; n];
    for s in 0..n {
        if side[s] != usize::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if side[v] == usize::MAX {
                    side[v] = 1 - side[u];
                    queue.push_back(v);
                } else if side[v] == side[u] {
                    return None;
                }
            }
        }
    }
    let part = |k: usize| (0..n).filter(|&i| side[i] == k).map(|i| es[i].clone()).collect();
    Some((part(0), part(1)))
}

fn self_complementary(h: &Hypergraph) -> bool {
    match super::complement_set(h) {
        Ok(c) => c.edges() == h.edges(),
        Err(_) => false,
    }
}

/// Exact covers of Λ by pairwise disjoint hyperedges, canonical order.
fn perfect_hypermatchings(h: &Hypergraph) -> Vec<Vec<Hyperedge>> {
    let es = h.edges().edges();
    let ground = h.ground().elements();
    let mut covered = vec![false; ground.len()];
    let mut chosen = Vec::new();
    let mut out = Vec::new();

    fn rec(
        ground: &[Vertex],
        es: &[Hyperedge],
        h: &Hypergraph,
        covered: &mut Vec<bool>,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<Hyperedge>>,
    ) {
        let Some(first) = covered.iter().position(|c| !c) else {
            out.push(chosen.iter().map(|&i| es[i].clone()).collect());
            return;
        };
        let x = ground[first];
        for (i, e) in es.iter().enumerate() {
            if !e.contains(x) {
                continue;
            }
            let idx: Vec<usize> = e.members().iter().map(|v| h.ground().index_of(*v).unwrap()).collect();
            if idx.iter().any(|&k| covered[k]) {
                continue;
            }
            idx.iter().for_each(|&k| covered[k] = true);
            chosen.push(i);
            rec(ground, es, h, covered, chosen, out);
            chosen.pop();
            idx.iter().for_each(|&k| covered[k] = false);
        }
    }

    if ground.is_empty() {
        return out;
    }
    rec(ground, es, h, &mut covered, &mut chosen, &mut out);
    for m in out.iter_mut() {
        m.sort();
    }
    out.sort();
    out
}
