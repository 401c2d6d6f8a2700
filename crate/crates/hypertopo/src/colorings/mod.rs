//! Total colorings of graphs and the verifiers built on them.

mod chromatic;
mod compound;
mod distinguishing;
mod dnei;
mod kd;
mod sixc;
mod topcode;
mod wconstraint;

pub use chromatic::{hypergraph_chromatics, ChromaticReport, CHROMATIC_EDGE_LIMIT, CHROMATIC_GROUND_LIMIT};
pub use compound::{compound_colorings, CompoundColoring, CompoundPerms};
pub use distinguishing::{local_sets, verify_distinguishing, DistinguishingVariant, LocalSets};
pub use dnei::{derive_dnei_sets, DneiRecord, DneiSets};
pub use kd::{verify_kd_total_coloring, verify_set_ordered_graceful, KdKind, KdParams, KdReport, SetOrderedReport};
pub use sixc::{verify_6c_labeling, EvOrder, SixCReport};
pub use topcode::{build_topcode_matrix, TopcodeMatrix};
pub use wconstraint::{verify_w_constraint_hyperedge_set, WConstraint, WConstraintReport};

use serde::{Deserialize, Serialize};

use crate::error::{precondition, Result};
use crate::graph::Graph;
use crate::hyperset::Hyperedge;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Color {
    Int(i64),
    Set(Hyperedge),
}

impl Color {
    pub fn as_int(&self) -> Option<i64> {
        match self {
            Color::Int(v) => Some(*v),
            Color::Set(_) => None,
        }
    }
}

impl From<i64> for Color {
    fn from(v: i64) -> Self {
        Color::Int(v)
    }
}

impl From<Hyperedge> for Color {
    fn from(e: Hyperedge) -> Self {
        Color::Set(e)
    }
}

impl std::fmt::Display for Color {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Color::Int(v) => write!(f, "{v}"),
            Color::Set(e) => write!(f, "{e}"),
        }
    }
}

/// A partial total coloring. `edge_colors[i]` belongs to `graph.edges()[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TotalColoring {
    pub graph: Graph,
    pub vertex_colors: Vec<Option<Color>>,
    pub edge_colors: Vec<Option<Color>>,
    pub bipartition: Option<(Vec<usize>, Vec<usize>)>,
}

impl TotalColoring {
    pub fn new(
        graph: Graph,
        vertex_colors: Vec<Option<Color>>,
        edge_colors: Vec<Option<Color>>,
        bipartition: Option<(Vec<usize>, Vec<usize>)>,
    ) -> Result<Self> {
        if vertex_colors.len() != graph.vertex_count() {
            return precondition(format!(
                "{} vertex colors for {} vertices",
                vertex_colors.len(),
                graph.vertex_count()
            ));
        }
        if edge_colors.len() != graph.edge_count() {
            return precondition(format!("{} edge colors for {} edges", edge_colors.len(), graph.edge_count()));
        }
        if let Some((x, y)) = &bipartition {
            let n = graph.vertex_count();
            let mut side = vec![None; n];
            for (s, part) in [(0, x), (1, y)] {
                for &v in part {
                    if v >= n {
                        return precondition(format!("bipartition names vertex {v} outside 0..{n}"));
                    }
                    if side[v].replace(s).is_some() {
                        return precondition(format!("vertex {v} appears twice in the bipartition"));
                    }
                }
            }
            if let Some(v) = side.iter().position(Option::is_none) {
                return precondition(format!("vertex {v} is missing from the bipartition"));
            }
            if let Some(&(a, b)) = graph.edges().iter().find(|&&(a, b)| side[a] == side[b]) {
                return precondition(format!("edge ({a},{b}) does not cross the bipartition"));
            }
        }
        Ok(TotalColoring {
            graph,
            vertex_colors,
            edge_colors,
            bipartition,
        })
    }

    /// Fully integer-colored; `edges` follows `graph.edges()`.
    pub fn from_ints(
        graph: Graph,
        vertices: &[i64],
        edges: &[i64],
        bipartition: Option<(Vec<usize>, Vec<usize>)>,
    ) -> Result<Self> {
        let wrap = |v: &[i64]| v.iter().map(|&c| Some(Color::Int(c))).collect();
        Self::new(graph, wrap(vertices), wrap(edges), bipartition)
    }

    pub fn p(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn q(&self) -> usize {
        self.graph.edge_count()
    }

    /// Given bipartition, or the graph's own 2-colouring.
    pub fn parts(&self) -> Result<(Vec<usize>, Vec<usize>)> {
        match &self.bipartition {
            Some(b) => Ok(b.clone()),
            None => match self.graph.bipartition() {
                Some(b) => Ok(b),
                None => precondition("graph is not bipartite"),
            },
        }
    }

    /// Integer vertex and edge colors; errors on a missing or set color.
    pub fn int_colors(&self) -> Result<(Vec<i64>, Vec<i64>)> {
        let grab = |cs: &[Option<Color>], what: &str| -> Result<Vec<i64>> {
            cs.iter()
                .enumerate()
                .map(|(i, c)| match c {
                    Some(Color::Int(v)) => Ok(*v),
                    Some(Color::Set(_)) => precondition(format!("{what} {i} has a set color")),
                    None => precondition(format!("{what} {i} is uncolored")),
                })
                .collect()
        };
        Ok((grab(&self.vertex_colors, "vertex")?, grab(&self.edge_colors, "edge")?))
    }
}

/// `S_{m,k,a,d} = {k+ad, k+(a+1)d, …, k+(a+m)d}`.
pub fn s_set(m: i64, k: i64, a: i64, d: i64) -> Vec<i64> {
    (a..=a + m).map(|j| k + j * d).collect()
}

/// `O_{2q−1,k,d} = {k+d, k+3d, …, k+(2q−1)d}`.
pub fn o_set(q: i64, k: i64, d: i64) -> Vec<i64> {
    (0..q).map(|j| k + (2 * j + 1) * d).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DualScope {
    Vertices,
    Edges,
    All,
}

/// `h′(z) = max h(S) + min h(S) − h(z)` over the integer colors in scope.
pub fn dual_labelling(c: &TotalColoring, scope: DualScope) -> Result<TotalColoring> {
    let vs = matches!(scope, DualScope::Vertices | DualScope::All);
    let es = matches!(scope, DualScope::Edges | DualScope::All);
    let mut in_scope: Vec<i64> = Vec::new();
    for (on, cs) in [(vs, &c.vertex_colors), (es, &c.edge_colors)] {
        if !on {
            continue;
        }
        for col in cs.iter().flatten() {
            match col {
                Color::Int(v) => in_scope.push(*v),
                Color::Set(_) => return precondition("dual labelling needs integer colors"),
            }
        }
    }
    let (Some(&lo), Some(&hi)) = (in_scope.iter().min(), in_scope.iter().max()) else {
        return Ok(c.clone());
    };
    let flip = |cs: &[Option<Color>]| -> Vec<Option<Color>> {
        cs.iter()
            .map(|col| col.as_ref().map(|x| Color::Int(hi + lo - x.as_int().expect("checked"))))
            .collect()
    };
    let mut out = c.clone();
    if vs {
        out.vertex_colors = flip(&c.vertex_colors);
    }
    if es {
        out.edge_colors = flip(&c.edge_colors);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_sets() {
        assert_eq!(s_set(3, 1, 0, 2), vec![1, 3, 5, 7]);
        assert_eq!(s_set(0, 5, 2, 1), vec![7]);
        assert_eq!(o_set(3, 0, 1), vec![1, 3, 5]);
    }

    #[test]
    fn bipartition_must_be_crossed() {
        let g = Graph::path(3);
        assert!(TotalColoring::from_ints(g.clone(), &[0, 1, 2], &[1, 1], Some((vec![0, 2], vec![1]))).is_ok());
        assert!(TotalColoring::from_ints(g.clone(), &[0, 1, 2], &[1, 1], Some((vec![0, 1], vec![2]))).is_err());
        assert!(TotalColoring::from_ints(g, &[0, 1], &[1, 1], None).is_err());
    }

    #[test]
    fn dual_on_p4_vertices() {
        let c = TotalColoring::from_ints(Graph::path(4), &[0, 3, 1, 2], &[3, 2, 1], None).unwrap();
        let d = dual_labelling(&c, DualScope::Vertices).unwrap();
        assert_eq!(d.int_colors().unwrap(), (vec![3, 0, 2, 1], vec![3, 2, 1]));
        assert_eq!(dual_labelling(&d, DualScope::Vertices).unwrap(), c);
    }

    #[test]
    fn dual_of_constant_is_itself() {
        let c = TotalColoring::from_ints(Graph::path(2), &[4, 4], &[4], None).unwrap();
        assert_eq!(dual_labelling(&c, DualScope::All).unwrap(), c);
    }
}
