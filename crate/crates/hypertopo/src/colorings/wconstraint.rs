use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{precondition, Result};
use crate::hyperset::{verify_3i, Hypergraph, Verdict, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "k", rename_all = "kebab-case")]
pub enum WConstraint {
    /// `γ = β − α`
    Graceful,
    /// `α + γ + β = k`
    EdgeMagic(i64),
    /// `γ + |α − β| = k`
    EdgeDifference(i64),
    /// `|α + β − γ| = k`
    FelicitousDifference(i64),
    /// `||α − β| − γ| = k`
    GracefulDifference(i64),
}

impl WConstraint {
    pub fn holds(self, alpha: i64, gamma: i64, beta: i64) -> bool {
        match self {
            WConstraint::Graceful => gamma == beta - alpha,
            WConstraint::EdgeMagic(k) => alpha + gamma + beta == k,
            WConstraint::EdgeDifference(k) => gamma + (alpha - beta).abs() == k,
            WConstraint::FelicitousDifference(k) => (alpha + beta - gamma).abs() == k,
            WConstraint::GracefulDifference(k) => ((alpha - beta).abs() - gamma).abs() == k,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WConstraintReport {
    /// Membership, set order and the constraint for every `γ`.
    pub pass: bool,
    /// `pass` plus every `α` and every `β` taking part.
    pub full: bool,
    /// `[a, b]` when the members form a gap-free run.
    pub interval: Option<(Vertex, Vertex)>,
    /// Whether the family is also strict 3I; reported only.
    pub three_i: bool,
    pub set_ordered: bool,
    /// First `γ` with no `(α, β)`.
    pub w_constraint: Verdict<Vertex>,
    pub alpha_coverage: Verdict<Vertex>,
    pub beta_coverage: Verdict<Vertex>,
    /// Every `γ` that has a witness, ascending.
    pub realized: Vec<Vertex>,
}

/// `parts` index the canonical hyperedges of `h` as `(x-part, E-part, y-part)`.
pub fn verify_w_constraint_hyperedge_set(
    h: &Hypergraph,
    parts: (&[usize], &[usize], &[usize]),
    w: WConstraint,
) -> Result<WConstraintReport> {
    let mut owner = vec![None; h.len()];
    for (tag, part) in [parts.0, parts.1, parts.2].into_iter().enumerate() {
        for &i in part {
            if i >= h.len() {
                return precondition(format!("part index {i} outside 0..{}", h.len()));
            }
            if owner[i].replace(tag).is_some() {
                return precondition(format!("hyperedge {i} lies in two parts"));
            }
        }
    }
    if let Some(i) = owner.iter().position(Option::is_none) {
        return precondition(format!("hyperedge {i} lies in no part"));
    }
    let gather = |part: &[usize]| -> BTreeSet<Vertex> {
        part.iter().flat_map(|&i| h.edges().edges()[i].members().iter().copied()).collect()
    };
    let (xs, es, ys) = (gather(parts.0), gather(parts.1), gather(parts.2));

    let members = h.edges().union_of_members();
    let interval = match (members.first(), members.last()) {
        (Some(&a), Some(&b)) if (b - a) as usize + 1 == members.len() => Some((a, b)),
        _ => None,
    };
    let set_ordered = match (xs.last(), ys.first()) {
        (Some(a), Some(b)) => a < b,
        _ => false,
    };
    let has = |a: Vertex, g: Vertex, b: Vertex| w.holds(a as i64, g as i64, b as i64);
    let realized: Vec<Vertex> = es
        .iter()
        .copied()
        .filter(|&g| xs.iter().any(|&a| ys.iter().any(|&b| has(a, g, b))))
        .collect();
    let w_constraint = Verdict::from_witness(es.iter().copied().find(|g| realized.binary_search(g).is_err()));
    let alpha_coverage =
        Verdict::from_witness(xs.iter().copied().find(|&a| !es.iter().any(|&g| ys.iter().any(|&b| has(a, g, b)))));
    let beta_coverage =
        Verdict::from_witness(ys.iter().copied().find(|&b| !xs.iter().any(|&a| es.iter().any(|&g| has(a, g, b)))));
    let pass = interval.is_some() && set_ordered && w_constraint.holds;
    Ok(WConstraintReport {
        pass,
        full: pass && alpha_coverage.holds && beta_coverage.holds,
        interval,
        three_i: verify_3i(h, true).overall == Some(true),
        set_ordered,
        w_constraint,
        alpha_coverage,
        beta_coverage,
        realized,
    })
}
