use std::collections::BTreeSet;

use serde::Serialize;

use super::TotalColoring;
use crate::error::Result;
use crate::hyperset::Verdict;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EvOrder {
    /// `min f(V) > max f(E)`
    VerticesAbove,
    /// `max f(V) < min f(E)`
    VerticesBelow,
    /// `f(V) ⊆ f(E)`
    VerticesInEdges,
    /// `f(E) ⊆ f(V)`
    EdgesInVertices,
    /// `f(V)` odd, `f(E)` even
    OddEven,
}

/// One field per clause (i)–(viii).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SixCReport {
    pub pass: bool,
    pub total_set: bool,
    pub e_magic: Option<i64>,
    /// First edge without a partner.
    pub ee_difference: Verdict<(usize, usize)>,
    pub ee_balanced: Option<i64>,
    pub ev_ordered: Vec<EvOrder>,
    pub ve_matching: Option<i64>,
    pub set_ordered: bool,
    pub odd_even: bool,
}

impl SixCReport {
    /// Clause numbers (1-based) that fail.
    pub fn failing_clauses(&self) -> Vec<usize> {
        let ok = [
            self.total_set,
            self.e_magic.is_some(),
            self.ee_difference.holds,
            self.ee_balanced.is_some(),
            !self.ev_ordered.is_empty(),
            self.ve_matching.is_some(),
            self.set_ordered,
            self.odd_even,
        ];
        (1..=8).filter(|&i| !ok[i - 1]).collect()
    }
}

pub fn verify_6c_labeling(c: &TotalColoring) -> Result<SixCReport> {
    let (fv, fe) = c.int_colors()?;
    let (p, q) = (c.p() as i64, c.q() as i64);
    let edges = c.graph.edges();
    let diff: Vec<i64> = edges.iter().map(|&(a, b)| (fv[a] - fv[b]).abs()).collect();

    let all: Vec<i64> = fv.iter().chain(&fe).copied().collect();
    let distinct: BTreeSet<i64> = all.iter().copied().collect();
    let total_set = distinct.len() == all.len() && distinct.iter().copied().eq(1..=p + q);

    let magic: Vec<i64> = (0..fe.len()).map(|i| fe[i] + diff[i]).collect();
    let e_magic = match magic.first() {
        Some(&k) if magic.iter().all(|&m| m == k) => Some(k),
        Some(_) => None,
        None => Some(0),
    };

    let ee_difference = Verdict::from_witness((0..fe.len()).find_map(|i| {
        let ok = diff.iter().any(|&dx| fe[i] == dx || fe[i] == 2 * (p + q) - dx);
        (!ok).then_some(edges[i])
    }));

    let s: Vec<i64> = (0..fe.len()).map(|i| diff[i] - fe[i]).collect();
    let balanced_with = |kp: i64| {
        s.iter()
            .all(|&a| s.iter().any(|&b| a + b == kp || 2 * (p + q) + a + b == kp))
    };
    let ee_balanced = match s.first() {
        None => Some(0),
        Some(&s0) => s
            .iter()
            .flat_map(|&b| [s0 + b, 2 * (p + q) + s0 + b])
            .collect::<BTreeSet<_>>()
            .into_iter()
            .find(|&kp| balanced_with(kp)),
    };

    let vs: BTreeSet<i64> = fv.iter().copied().collect();
    let es: BTreeSet<i64> = fe.iter().copied().collect();
    let odd_even = vs.iter().all(|v| v.rem_euclid(2) == 1) && es.iter().all(|e| e.rem_euclid(2) == 0);
    let mut ev_ordered = Vec::new();
    if let (Some(vmin), Some(vmax), Some(emin), Some(emax)) = (vs.first(), vs.last(), es.first(), es.last()) {
        if vmin > emax {
            ev_ordered.push(EvOrder::VerticesAbove);
        }
        if vmax < emin {
            ev_ordered.push(EvOrder::VerticesBelow);
        }
    }
    if vs.is_subset(&es) {
        ev_ordered.push(EvOrder::VerticesInEdges);
    }
    if es.is_subset(&vs) {
        ev_ordered.push(EvOrder::EdgesInVertices);
    }
    if odd_even {
        ev_ordered.push(EvOrder::OddEven);
    }

    let singular = (p + q + 1) / 2;
    let ve_with = |k2: i64| {
        fe.iter().all(|&e| fv.iter().any(|&w| e + w == k2))
            && fv.iter().filter(|&&z| z != singular).all(|&z| fe.iter().any(|&e| z + e == k2))
    };
    let ve_matching = match fe.first() {
        None => Some(0),
        Some(&e0) => fv
            .iter()
            .map(|&w| e0 + w)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .find(|&k2| ve_with(k2)),
    };

    let set_ordered = match c.parts() {
        Ok((x, y)) => {
            let max_of = |part: &[usize]| part.iter().map(|&v| fv[v]).max();
            let min_of = |part: &[usize]| part.iter().map(|&v| fv[v]).min();
            match (max_of(&x), min_of(&x), max_of(&y), min_of(&y)) {
                (Some(xmax), Some(xmin), Some(ymax), Some(ymin)) => xmax < ymin || xmin > ymax,
                _ => true,
            }
        }
        Err(_) => false,
    };

    let mut r = SixCReport {
        pass: false,
        total_set,
        e_magic,
        ee_difference,
        ee_balanced,
        ev_ordered,
        ve_matching,
        set_ordered,
        odd_even,
    };
    r.pass = r.failing_clauses().is_empty();
    Ok(r)
}
