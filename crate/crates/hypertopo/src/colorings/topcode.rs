use serde::{Deserialize, Serialize};

use super::{Color, TotalColoring};
use crate::error::{precondition, Result};

/// Three rows `(X, E, Y)` stored column-wise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopcodeMatrix {
    pub columns: Vec<(Color, Color, Color)>,
}

impl TopcodeMatrix {
    pub fn rows(&self) -> [Vec<&Color>; 3] {
        [
            self.columns.iter().map(|c| &c.0).collect(),
            self.columns.iter().map(|c| &c.1).collect(),
            self.columns.iter().map(|c| &c.2).collect(),
        ]
    }

    /// One block per column.
    pub fn split(&self) -> Vec<TopcodeMatrix> {
        self.columns
            .iter()
            .map(|c| TopcodeMatrix { columns: vec![c.clone()] })
            .collect()
    }

    pub fn union(parts: &[TopcodeMatrix]) -> TopcodeMatrix {
        TopcodeMatrix {
            columns: parts.iter().flat_map(|p| p.columns.iter().cloned()).collect(),
        }
    }

    /// Columns in sorted order; equal for matrices that differ only by column order.
    pub fn canonical(&self) -> TopcodeMatrix {
        let mut columns = self.columns.clone();
        columns.sort();
        TopcodeMatrix { columns }
    }
}

/// Column `i` is `(f(x), f(e_i), f(y))` for the `i`-th graph edge, where `x`
/// is the `X`-side endpoint when a bipartition is given, else the smaller one.
pub fn build_topcode_matrix(c: &TotalColoring) -> Result<TopcodeMatrix> {
    let in_x: Option<Vec<bool>> = c.bipartition.as_ref().map(|(x, _)| {
        let mut s = vec![false; c.p()];
        for &v in x {
            s[v] = true;
        }
        s
    });
    let vc = |v: usize| match &c.vertex_colors[v] {
        Some(col) => Ok(col.clone()),
        None => precondition(format!("vertex {v} is uncolored")),
    };
    let mut columns = Vec::with_capacity(c.q());
    for (i, &(a, b)) in c.graph.edges().iter().enumerate() {
        let (x, y) = match &in_x {
            Some(s) if s[b] => (b, a),
            _ => (a, b),
        };
        let Some(e) = c.edge_colors[i].clone() else {
            return precondition(format!("edge ({a},{b}) is uncolored"));
        };
        columns.push((vc(x)?, e, vc(y)?));
    }
    Ok(TopcodeMatrix { columns })
}
