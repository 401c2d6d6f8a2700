use std::collections::BTreeSet;

use serde::Serialize;

use super::TotalColoring;
use crate::error::{precondition, Result};
use crate::hyperset::{GroundSet, Hyperedge, HyperedgeSet, Hypergraph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DneiRecord {
    pub vertex: usize,
    /// `C_v(u)`: colors of the neighbours.
    pub cv_open: Vec<Vertex>,
    /// `C_v[u] = C_v(u) ∪ {f(u)}`.
    pub cv_closed: Vec<Vertex>,
    /// `C_e(u)`: colors of the incident edges.
    pub ce_open: Vec<Vertex>,
    /// `C_e[u] = C_e(u) ∪ {f(u)}`.
    pub ce_closed: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DneiSets {
    /// Ground set is the total color set; the hyperedges are every nonempty
    /// derived set, deduplicated.
    pub hypergraph: Hypergraph,
    pub records: Vec<DneiRecord>,
}

pub fn derive_dnei_sets(c: &TotalColoring) -> Result<DneiSets> {
    let (fv, fe) = c.int_colors()?;
    let to_vertex = |x: i64| -> Result<Vertex> {
        Vertex::try_from(x).or_else(|_| precondition(format!("color {x} is not a nonnegative 32-bit value")))
    };
    let fv: Vec<Vertex> = fv.into_iter().map(to_vertex).collect::<Result<_>>()?;
    let fe: Vec<Vertex> = fe.into_iter().map(to_vertex).collect::<Result<_>>()?;
    let n = c.p();
    let mut cv = vec![BTreeSet::new(); n];
    let mut ce = vec![BTreeSet::new(); n];
    for (i, &(a, b)) in c.graph.edges().iter().enumerate() {
        cv[a].insert(fv[b]);
        cv[b].insert(fv[a]);
        ce[a].insert(fe[i]);
        ce[b].insert(fe[i]);
    }
    let mut records = Vec::with_capacity(n);
    let mut sets = Vec::new();
    for u in 0..n {
        let close = |s: &BTreeSet<Vertex>| {
            let mut t = s.clone();
            t.insert(fv[u]);
            t.into_iter().collect::<Vec<_>>()
        };
        let r = DneiRecord {
            vertex: u,
            cv_open: cv[u].iter().copied().collect(),
            cv_closed: close(&cv[u]),
            ce_open: ce[u].iter().copied().collect(),
            ce_closed: close(&ce[u]),
        };
        for s in [&r.cv_open, &r.cv_closed, &r.ce_open, &r.ce_closed] {
            if !s.is_empty() {
                sets.push(Hyperedge::new(s.iter().copied())?);
            }
        }
        records.push(r);
    }
    let ground = GroundSet::new(fv.iter().chain(&fe).copied().collect::<BTreeSet<_>>())?;
    let (edges, _) = HyperedgeSet::new_dedup(sets);
    Ok(DneiSets {
        hypergraph: Hypergraph::new(ground, edges)?,
        records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn p3_centre() {
        let c = TotalColoring::from_ints(Graph::path(3), &[1, 3, 2], &[2, 1], None).unwrap();
        let d = derive_dnei_sets(&c).unwrap();
        let r = &d.records[1];
        assert_eq!(r.ce_open, vec![1, 2]);
        assert_eq!(r.cv_open, vec![1, 2]);
        assert_eq!(r.cv_closed, vec![1, 2, 3]);
        assert_eq!(d.hypergraph.ground().elements(), &[1, 2, 3]);
    }

    #[test]
    fn single_edge() {
        let c = TotalColoring::from_ints(Graph::path(2), &[1, 3], &[2], None).unwrap();
        let d = derive_dnei_sets(&c).unwrap();
        assert_eq!(d.records[0].cv_open, vec![3]);
        assert_eq!(d.records[0].ce_open, vec![2]);
    }

    #[test]
    fn negative_colors_rejected() {
        let c = TotalColoring::from_ints(Graph::path(2), &[-1, 3], &[2], None).unwrap();
        assert!(derive_dnei_sets(&c).is_err());
    }
}
