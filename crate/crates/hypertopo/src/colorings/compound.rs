use serde::{Deserialize, Serialize};

use super::TotalColoring;
use crate::error::{precondition, Result};

/// Orders for `X` vertices, edges and `Y` vertices, each a permutation of `0..B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompoundPerms {
    pub x: Vec<usize>,
    pub e: Vec<usize>,
    pub y: Vec<usize>,
}

impl CompoundPerms {
    pub fn identity(b: usize) -> Self {
        let id: Vec<usize> = (0..b).collect();
        CompoundPerms {
            x: id.clone(),
            e: id.clone(),
            y: id,
        }
    }

    pub fn uniform(&self) -> bool {
        self.x == self.e && self.e == self.y
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompoundColoring {
    pub vertex_strings: Vec<String>,
    pub edge_strings: Vec<String>,
    pub vertex_vectors: Vec<Vec<i64>>,
    pub edge_vectors: Vec<Vec<i64>>,
    /// Distinct values ascending.
    pub vertex_sets: Vec<Vec<i64>>,
    pub edge_sets: Vec<Vec<i64>>,
    pub vertex_lattice: Option<Vec<i64>>,
    pub edge_lattice: Option<Vec<i64>>,
    pub uniform: bool,
}

fn check_perm(p: &[usize], b: usize, what: &str) -> Result<()> {
    let mut seen = vec![false; b];
    if p.len() != b {
        return precondition(format!("{what} order has length {} instead of {b}", p.len()));
    }
    for &i in p {
        if i >= b || std::mem::replace(&mut seen[i], true) {
            return precondition(format!("{what} order is not a permutation of 0..{b}"));
        }
    }
    Ok(())
}

pub fn compound_colorings(
    base: &[TotalColoring],
    perms: &CompoundPerms,
    coefficients: Option<&[u64]>,
) -> Result<CompoundColoring> {
    let b = base.len();
    if b < 2 {
        return precondition(format!("need at least two base colorings, got {b}"));
    }
    if base.iter().any(|c| c.graph != base[0].graph) {
        return precondition("base colorings are on different graphs");
    }
    check_perm(&perms.x, b, "X")?;
    check_perm(&perms.e, b, "edge")?;
    check_perm(&perms.y, b, "Y")?;
    if let Some(a) = coefficients {
        if a.len() != b || a.iter().sum::<u64>() < 1 {
            return precondition("lattice coefficients need length B and a positive sum");
        }
    }
    let (x, _) = base[0].parts()?;
    let ints = base.iter().map(TotalColoring::int_colors).collect::<Result<Vec<_>>>()?;
    let p = base[0].p();
    let q = base[0].q();
    let mut in_x = vec![false; p];
    for &v in &x {
        in_x[v] = true;
    }
    let vertex_vectors: Vec<Vec<i64>> = (0..p)
        .map(|v| {
            let order = if in_x[v] { &perms.x } else { &perms.y };
            order.iter().map(|&s| ints[s].0[v]).collect()
        })
        .collect();
    let edge_vectors: Vec<Vec<i64>> = (0..q).map(|i| perms.e.iter().map(|&s| ints[s].1[i]).collect()).collect();

    let strings = |vs: &[Vec<i64>]| vs.iter().map(|v| v.iter().map(i64::to_string).collect::<String>()).collect();
    let sets = |vs: &[Vec<i64>]| {
        vs.iter()
            .map(|v| {
                let mut s = v.clone();
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect()
    };
    let lattice = |vs: &[Vec<i64>]| {
        coefficients.map(|a| {
            vs.iter()
                .map(|v| v.iter().zip(a).map(|(&f, &ak)| ak as i64 * f).sum())
                .collect()
        })
    };
    Ok(CompoundColoring {
        vertex_strings: strings(&vertex_vectors),
        edge_strings: strings(&edge_vectors),
        vertex_sets: sets(&vertex_vectors),
        edge_sets: sets(&edge_vectors),
        vertex_lattice: lattice(&vertex_vectors),
        edge_lattice: lattice(&edge_vectors),
        vertex_vectors,
        edge_vectors,
        uniform: perms.uniform(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn p4(v: &[i64], e: &[i64]) -> TotalColoring {
        TotalColoring::from_ints(Graph::path(4), v, e, None).unwrap()
    }

    #[test]
    fn identical_pair() {
        let c = p4(&[0, 3, 1, 2], &[3, 2, 1]);
        let out = compound_colorings(&[c.clone(), c], &CompoundPerms::identity(2), Some(&[1, 0])).unwrap();
        assert_eq!(out.vertex_strings, vec!["00", "33", "11", "22"]);
        assert!(out.vertex_sets.iter().all(|s| s.len() == 1));
        assert_eq!(out.vertex_lattice.unwrap(), vec![0, 3, 1, 2]);
        assert!(out.uniform);
    }

    #[test]
    fn per_role_orders() {
        let a = p4(&[0, 3, 1, 2], &[3, 2, 1]);
        let b = p4(&[3, 0, 2, 1], &[7, 8, 9]);
        let perms = CompoundPerms {
            x: vec![0, 1],
            e: vec![1, 0],
            y: vec![0, 1],
        };
        let out = compound_colorings(&[a, b], &perms, None).unwrap();
        assert_eq!(out.edge_strings, vec!["73", "82", "91"]);
        assert_eq!(out.vertex_strings[1], "30");
        assert!(!out.uniform);
        assert!(out.vertex_lattice.is_none());
    }

    #[test]
    fn rejects_bad_inputs() {
        let a = p4(&[0, 3, 1, 2], &[3, 2, 1]);
        let other = TotalColoring::from_ints(Graph::path(2), &[0, 1], &[1], None).unwrap();
        assert!(compound_colorings(std::slice::from_ref(&a), &CompoundPerms::identity(1), None).is_err());
        assert!(compound_colorings(&[a.clone(), other], &CompoundPerms::identity(2), None).is_err());
        let bad = CompoundPerms {
            x: vec![0, 0],
            e: vec![0, 1],
            y: vec![0, 1],
        };
        assert!(compound_colorings(&[a.clone(), a.clone()], &bad, None).is_err());
        assert!(compound_colorings(&[a.clone(), a], &CompoundPerms::identity(2), Some(&[0, 0])).is_err());
    }
}
