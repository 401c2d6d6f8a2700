use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::SetColoredGraph;
use crate::error::{limit, precondition, Error, Result};
use crate::hyperset::{Hyperedge, HyperedgeSet, Hypergraph, Verdict, Vertex};

pub const ISOMORPHISM_LIMIT: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SetOp {
    /// `F(uv) = F(u) ∩ F(v)`
    Intersection,
    /// `F(uv) = F(u) ∪ F(v)`
    Union,
    /// `F(uv) = F(u) Δ F(v)`
    SymmetricDifference,
    /// `F(uv) ⊇ F(u) ∩ F(v) ≠ ∅`
    ContainsIntersection,
}

impl SetOp {
    pub fn holds(self, fu: &Hyperedge, fv: &Hyperedge, fe: &Hyperedge) -> bool {
        let cap = fu.intersection(fv);
        match self {
            SetOp::Intersection => fe.members() == cap.as_slice(),
            SetOp::Union => fe == &fu.union(fv),
            SetOp::SymmetricDifference => {
                let mut d = fu.difference(fv);
                d.extend(fv.difference(fu));
                d.sort_unstable();
                fe.members() == d.as_slice()
            }
            SetOp::ContainsIntersection => !cap.is_empty() && cap.iter().all(|x| fe.contains(*x)),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomomorphismOptions {
    /// Lets an edge `uv` map onto a single vertex when `F(u) = F(v)`.
    pub allow_label_equal_collapse: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomomorphismReport {
    pub pass: bool,
    pub edge_preservation: Verdict<(usize, usize)>,
    /// The set relation holds on `uv` exactly when it holds on `f(u)f(v)`.
    pub relation: Verdict<(usize, usize)>,
    /// False when either graph lacks edge labels.
    pub relation_checked: bool,
    pub collapsed_edges: usize,
}

pub fn check_colored_homomorphism(
    a: &SetColoredGraph,
    b: &SetColoredGraph,
    f: &[usize],
    op: SetOp,
    opts: HomomorphismOptions,
) -> Result<HomomorphismReport> {
    if f.len() != a.graph.vertex_count() {
        return precondition(format!("map covers {} of {} vertices", f.len(), a.graph.vertex_count()));
    }
    if let Some(&bad) = f.iter().find(|&&w| w >= b.graph.vertex_count()) {
        return precondition(format!("image {bad} is not a vertex of the target"));
    }
    let labelled = a.edge_labels.is_some() && b.edge_labels.is_some();
    let mut preservation = Verdict::pass();
    let mut relation = Verdict::pass();
    let mut collapsed = 0;
    for (k, &(u, v)) in a.graph.edges().iter().enumerate() {
        let (fu, fv) = (f[u], f[v]);
        if fu == fv {
            if opts.allow_label_equal_collapse && a.vertex_labels[u] == a.vertex_labels[v] {
                collapsed += 1;
            } else if preservation.holds {
                preservation = Verdict::fail((u, v));
            }
            continue;
        }
        let Some(kb) = b.graph.edge_index(fu, fv) else {
            if preservation.holds {
                preservation = Verdict::fail((u, v));
            }
            continue;
        };
        if labelled && relation.holds {
            let ea = &a.edge_labels.as_ref().unwrap()[k];
            let eb = &b.edge_labels.as_ref().unwrap()[kb];
            let ra = op.holds(&a.vertex_labels[u], &a.vertex_labels[v], ea);
            let rb = op.holds(&b.vertex_labels[fu], &b.vertex_labels[fv], eb);
            if ra != rb {
                relation = Verdict::fail((u, v));
            }
        }
    }
    Ok(HomomorphismReport {
        pass: preservation.holds && relation.holds,
        edge_preservation: preservation,
        relation,
        relation_checked: labelled,
        collapsed_edges: collapsed,
    })
}

/// Replaces `e_i`, `e_j` by `e_i ∪ e_j`.
pub fn hyperedge_coincide(h: &Hypergraph, i: usize, j: usize) -> Result<Hypergraph> {
    let (ei, ej) = (h.edge(i)?, h.edge(j)?);
    if i == j {
        return precondition("cannot coincide a hyperedge with itself");
    }
    let u = ei.union(ej);
    let rest: Vec<Hyperedge> = h
        .edges()
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != i && k != j)
        .map(|(_, e)| e.clone())
        .collect();
    if rest.contains(&u) {
        return precondition(format!("union {u} is already a hyperedge"));
    }
    h.with_edges(HyperedgeSet::new(rest.into_iter().chain([u]))?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitResult {
    pub hypergraph: Hypergraph,
    /// Parts that coincided with an existing hyperedge (or each other).
    pub deduplicated: usize,
}

/// Replaces `e_i` by two parts whose union is `e_i`; the parts may overlap.
pub fn hyperedge_split(h: &Hypergraph, i: usize, parts: (&Hyperedge, &Hyperedge)) -> Result<SplitResult> {
    let e = h.edge(i)?;
    if &parts.0.union(parts.1) != e {
        return precondition(format!("parts {} and {} do not cover {e} exactly", parts.0, parts.1));
    }
    let rest = h.edges().iter().enumerate().filter(|&(k, _)| k != i).map(|(_, e)| e.clone());
    let (edges, deduplicated) = HyperedgeSet::new_dedup(rest.chain([parts.0.clone(), parts.1.clone()]));
    Ok(SplitResult {
        hypergraph: h.with_edges(edges)?,
        deduplicated,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsomorphismOutcome {
    /// `(x, θ(x))` for every `x` of the first ground set.
    pub bijection: Option<Vec<(Vertex, Vertex)>>,
    pub reason: Option<String>,
}

impl IsomorphismOutcome {
    fn absent(reason: impl Into<String>) -> Self {
        IsomorphismOutcome {
            bijection: None,
            reason: Some(reason.into()),
        }
    }
}

pub fn hypergraph_isomorphic(a: &Hypergraph, b: &Hypergraph) -> Result<IsomorphismOutcome> {
    let (ga, gb) = (a.ground().elements(), b.ground().elements());
    if ga.len() != gb.len() {
        return Ok(IsomorphismOutcome::absent("ground sets differ in size"));
    }
    limit("ground set", ga.len(), ISOMORPHISM_LIMIT)?;
    if a.len() != b.len() {
        return Ok(IsomorphismOutcome::absent("hyperedge counts differ"));
    }
    let series = |h: &Hypergraph| {
        let mut d = h.vertex_degrees();
        d.sort_unstable();
        let mut s: Vec<usize> = h.edges().iter().map(Hyperedge::len).collect();
        s.sort_unstable();
        (d, s)
    };
    if series(a) != series(b) {
        return Ok(IsomorphismOutcome::absent("degree or size series differ"));
    }
    let n = ga.len();
    for perm in (0..n).permutations(n) {
        let image = |e: &Hyperedge| {
            Hyperedge::new(e.members().iter().map(|x| gb[perm[a.ground().index_of(*x).unwrap()]]))
        };
        let mapped: Result<Vec<Hyperedge>> = a.edges().iter().map(image).collect();
        let mapped = mapped.map_err(|e| Error::Internal(e.to_string()))?;
        if mapped.iter().all(|e| b.edges().contains(e)) {
            return Ok(IsomorphismOutcome {
                bijection: Some((0..n).map(|i| (ga[i], gb[perm[i]])).collect()),
                reason: None,
            });
        }
    }
    Ok(IsomorphismOutcome::absent("no vertex bijection maps the families onto each other"))
}
