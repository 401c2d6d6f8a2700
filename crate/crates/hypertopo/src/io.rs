//! JSON documents and DOT export.
//!
//! Hypergraphs: `{"ground":[1,…,n],"edges":[[…],…],"labels":{"a":1}}`.
//! Graphs: `{"vertices":p,"edges":[[u,v],…],"vertex_colors":…,"edge_colors":…,"bipartition":[[…],[…]]}`,
//! where colors are either a list aligned with the vertices / listed edges, or
//! a map keyed by `"v"` / `"u-v"`. A color is an integer or an integer array.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::colorings::{Color, TotalColoring};
use crate::error::{precondition, Error, Result};
use crate::graph::Graph;
use crate::hyperset::{GroundSet, Hyperedge, HyperedgeSet, Hypergraph, Vertex};
use crate::intersected::SetColoredGraph;

fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        let full = e.to_string();
        let suffix = format!(" at line {} column {}", e.line(), e.column());
        Error::Parse {
            line: e.line(),
            column: e.column(),
            message: full.strip_suffix(&suffix).unwrap_or(&full).to_string(),
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypergraphDocument {
    pub ground: Vec<Vertex>,
    pub edges: Vec<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<String, Vertex>>,
}

impl HypergraphDocument {
    pub fn parse(text: &str) -> Result<Self> {
        parse_json(text)
    }

    /// Sorts the ground set; repeated ground elements or hyperedges are errors.
    pub fn to_hypergraph(&self) -> Result<Hypergraph> {
        let ground: BTreeSet<Vertex> = self.ground.iter().copied().collect();
        if ground.len() != self.ground.len() {
            return precondition("ground set lists a vertex twice");
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        for (i, e) in self.edges.iter().enumerate() {
            let he = Hyperedge::new(e.iter().copied()).map_err(|_| Error::Precondition(format!("edge {i} is empty")))?;
            if let Some(x) = he.members().iter().find(|x| !ground.contains(x)) {
                return precondition(format!("edge {i} contains {x}, which is outside the ground set"));
            }
            edges.push(he);
        }
        if let Some(labels) = &self.labels {
            if let Some((name, v)) = labels.iter().find(|(_, v)| !ground.contains(v)) {
                return precondition(format!("label {name:?} names {v}, which is outside the ground set"));
            }
        }
        Hypergraph::new(GroundSet::new(ground)?, HyperedgeSet::new(edges)?)
    }

    pub fn from_hypergraph(h: &Hypergraph) -> Self {
        HypergraphDocument {
            ground: h.ground().elements().to_vec(),
            edges: h.edges().iter().map(|e| e.members().to_vec()).collect(),
            labels: None,
        }
    }
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    HypergraphDocument::parse(text)?.to_hypergraph()
}

fn int_list(v: &[Vertex]) -> String {
    let items: Vec<String> = v.iter().map(u32::to_string).collect();
    format!("[{}]", items.join(", "))
}

/// Sorted keys, one hyperedge per line, trailing LF.
pub fn canonical_hypergraph_json(h: &Hypergraph, labels: Option<&BTreeMap<String, Vertex>>) -> String {
    let mut out = String::from("{\n  \"edges\": [");
    if h.is_empty() {
        out.push_str("],\n");
    } else {
        out.push('\n');
        let lines: Vec<String> = h.edges().iter().map(|e| format!("    {}", int_list(e.members()))).collect();
        out.push_str(&lines.join(",\n"));
        out.push_str("\n  ],\n");
    }
    let _ = write!(out, "  \"ground\": {}", int_list(h.ground().elements()));
    if let Some(labels) = labels {
        let items: Vec<String> = labels
            .iter()
            .map(|(k, v)| format!("{}: {v}", serde_json::to_string(k).expect("string")))
            .collect();
        let _ = write!(out, ",\n  \"labels\": {{{}}}", items.join(", "));
    }
    out.push_str("\n}\n");
    out
}

/// Parses and re-emits a hypergraph document in canonical form.
pub fn canonicalize_hypergraph_text(text: &str) -> Result<String> {
    let doc = HypergraphDocument::parse(text)?;
    let h = doc.to_hypergraph()?;
    Ok(canonical_hypergraph_json(&h, doc.labels.as_ref()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ColorsDocument {
    List(Vec<Option<Color>>),
    Map(BTreeMap<String, Color>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_colors: Option<ColorsDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_colors: Option<ColorsDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bipartition: Option<(Vec<usize>, Vec<usize>)>,
}

fn edge_key(s: &str) -> Option<(usize, usize)> {
    let (a, b) = s.split_once('-')?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

impl GraphDocument {
    pub fn parse(text: &str) -> Result<Self> {
        parse_json(text)
    }

    pub fn graph(&self) -> Result<Graph> {
        Graph::new(self.vertices, self.edges.iter().copied())
    }

    pub fn to_coloring(&self) -> Result<TotalColoring> {
        let g = self.graph()?;
        let p = g.vertex_count();
        let mut vc: Vec<Option<Color>> = vec![None; p];
        match &self.vertex_colors {
            None => {}
            Some(ColorsDocument::List(l)) => {
                if l.len() != p {
                    return precondition(format!("{} vertex colors for {p} vertices", l.len()));
                }
                vc = l.clone();
            }
            Some(ColorsDocument::Map(m)) => {
                for (k, c) in m {
                    let v: usize = k.trim().parse().map_err(|_| Error::Precondition(format!("bad vertex key {k:?}")))?;
                    if v >= p {
                        return precondition(format!("vertex key {v} outside 0..{p}"));
                    }
                    vc[v] = Some(c.clone());
                }
            }
        }
        let mut ec: Vec<Option<Color>> = vec![None; g.edge_count()];
        match &self.edge_colors {
            None => {}
            Some(ColorsDocument::List(l)) => {
                if l.len() != self.edges.len() {
                    return precondition(format!("{} edge colors for {} edges", l.len(), self.edges.len()));
                }
                for (&(a, b), c) in self.edges.iter().zip(l) {
                    ec[g.edge_index(a, b).expect("listed edge")] = c.clone();
                }
            }
            Some(ColorsDocument::Map(m)) => {
                for (k, c) in m {
                    let (a, b) = edge_key(k).ok_or_else(|| Error::Precondition(format!("bad edge key {k:?}")))?;
                    let i = g
                        .edge_index(a, b)
                        .ok_or_else(|| Error::Precondition(format!("edge key {k:?} is not an edge")))?;
                    ec[i] = Some(c.clone());
                }
            }
        }
        TotalColoring::new(g, vc, ec, self.bipartition.clone())
    }

    /// Vertex colors must all be sets; edge colors are optional but all-or-nothing.
    pub fn to_set_colored(&self) -> Result<SetColoredGraph> {
        let c = self.to_coloring()?;
        let as_set = |col: &Option<Color>, what: String| match col {
            Some(Color::Set(e)) => Ok(e.clone()),
            _ => precondition(format!("{what} needs a set color")),
        };
        let vl = (0..c.p())
            .map(|v| as_set(&c.vertex_colors[v], format!("vertex {v}")))
            .collect::<Result<Vec<_>>>()?;
        let el = if c.edge_colors.iter().all(Option::is_none) && c.q() > 0 {
            None
        } else {
            Some(
                c.graph
                    .edges()
                    .iter()
                    .enumerate()
                    .map(|(i, &(a, b))| as_set(&c.edge_colors[i], format!("edge {a}-{b}")))
                    .collect::<Result<Vec<_>>>()?,
            )
        };
        SetColoredGraph::new(c.graph, vl, el)
    }

    pub fn from_coloring(c: &TotalColoring) -> Self {
        GraphDocument {
            vertices: c.p(),
            edges: c.graph.edges().to_vec(),
            vertex_colors: Some(ColorsDocument::List(c.vertex_colors.clone())),
            edge_colors: Some(ColorsDocument::List(c.edge_colors.clone())),
            bipartition: c.bipartition.clone(),
        }
    }

    pub fn from_set_colored(g: &SetColoredGraph) -> Self {
        let wrap = |v: &[Hyperedge]| ColorsDocument::List(v.iter().map(|e| Some(Color::Set(e.clone()))).collect());
        GraphDocument {
            vertices: g.graph.vertex_count(),
            edges: g.graph.edges().to_vec(),
            vertex_colors: Some(wrap(&g.vertex_labels)),
            edge_colors: g.edge_labels.as_deref().map(wrap),
            bipartition: None,
        }
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Undirected DOT with vertices `v<i>` labelled by their sets.
pub fn to_dot(g: &SetColoredGraph) -> String {
    let mut out = String::from("graph G {\n");
    for (i, l) in g.vertex_labels.iter().enumerate() {
        let _ = writeln!(out, "  v{i} [label=\"{}\"];", dot_escape(&l.to_string()));
    }
    for (k, &(a, b)) in g.graph.edges().iter().enumerate() {
        match &g.edge_labels {
            Some(el) => {
                let _ = writeln!(out, "  v{a} -- v{b} [label=\"{}\"];", dot_escape(&el[k].to_string()));
            }
            None => {
                let _ = writeln!(out, "  v{a} -- v{b};");
            }
        }
    }
    out.push_str("}\n");
    out
}
