use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{precondition, Result};
use crate::hyperset::{Hyperedge, Verdict};
use crate::intersected::SetColoredGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistinguishingVariant {
    V,
    ClosedV,
    E,
    ClosedE,
    Ve,
    ClosedVe,
    Closed4,
}

impl DistinguishingVariant {
    pub const ALL: [DistinguishingVariant; 7] = [
        DistinguishingVariant::V,
        DistinguishingVariant::ClosedV,
        DistinguishingVariant::E,
        DistinguishingVariant::ClosedE,
        DistinguishingVariant::Ve,
        DistinguishingVariant::ClosedVe,
        DistinguishingVariant::Closed4,
    ];

    fn needs_edges(self) -> bool {
        !matches!(self, DistinguishingVariant::V | DistinguishingVariant::ClosedV)
    }
}

type SetSet = BTreeSet<Hyperedge>;

/// Local set-sets of one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalSets {
    pub cv_open: SetSet,
    pub cv_closed: SetSet,
    pub ce_open: Option<SetSet>,
    pub ce_closed: Option<SetSet>,
}

impl LocalSets {
    fn key(&self, variant: DistinguishingVariant) -> Vec<SetSet> {
        let union = |a: &SetSet, b: &SetSet| a.union(b).cloned().collect::<SetSet>();
        let ce = self.ce_open.clone().unwrap_or_default();
        let ce_closed = self.ce_closed.clone().unwrap_or_default();
        match variant {
            DistinguishingVariant::V => vec![self.cv_open.clone()],
            DistinguishingVariant::ClosedV => vec![self.cv_closed.clone()],
            DistinguishingVariant::E => vec![ce],
            DistinguishingVariant::ClosedE => vec![ce_closed],
            DistinguishingVariant::Ve => vec![union(&self.cv_open, &ce)],
            DistinguishingVariant::ClosedVe => vec![union(&self.cv_closed, &ce)],
            DistinguishingVariant::Closed4 => {
                let four: BTreeSet<SetSet> =
                    [ce.clone(), ce_closed, self.cv_closed.clone(), union(&self.cv_closed, &ce)].into();
                four.into_iter().collect()
            }
        }
    }
}

pub fn local_sets(g: &SetColoredGraph) -> Vec<LocalSets> {
    let n = g.graph.vertex_count();
    let mut out: Vec<LocalSets> = (0..n)
        .map(|u| LocalSets {
            cv_open: SetSet::new(),
            cv_closed: [g.vertex_labels[u].clone()].into(),
            ce_open: g.edge_labels.as_ref().map(|_| SetSet::new()),
            ce_closed: g.edge_labels.as_ref().map(|_| [g.vertex_labels[u].clone()].into()),
        })
        .collect();
    for (i, &(a, b)) in g.graph.edges().iter().enumerate() {
        for (x, y) in [(a, b), (b, a)] {
            let l = &mut out[x];
            l.cv_open.insert(g.vertex_labels[y].clone());
            l.cv_closed.insert(g.vertex_labels[y].clone());
            if let Some(el) = &g.edge_labels {
                l.ce_open.as_mut().unwrap().insert(el[i].clone());
                l.ce_closed.as_mut().unwrap().insert(el[i].clone());
            }
        }
    }
    out
}

/// First edge `uv` whose endpoints have equal set-sets under `variant`.
pub fn verify_distinguishing(g: &SetColoredGraph, variant: DistinguishingVariant) -> Result<Verdict<(usize, usize)>> {
    if variant.needs_edges() && g.edge_labels.is_none() {
        return precondition("this variant needs edge labels");
    }
    let loc = local_sets(g);
    Ok(Verdict::from_witness(
        g.graph
            .edges()
            .iter()
            .copied()
            .find(|&(a, b)| loc[a].key(variant) == loc[b].key(variant)),
    ))
}
