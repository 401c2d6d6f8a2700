use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{o_set, s_set, TotalColoring};
use crate::error::{precondition, Result};
use crate::hyperset::Verdict;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum KdKind {
    Graceful,
    OddGraceful,
    EdgeAntimagic,
    Harmonious,
    OddElegant,
    EdgeMagic,
    EdgeDifference,
    FelicitousDifference,
    GracefulDifference,
}

impl KdKind {
    pub const ALL: [KdKind; 9] = [
        KdKind::Graceful,
        KdKind::OddGraceful,
        KdKind::EdgeAntimagic,
        KdKind::Harmonious,
        KdKind::OddElegant,
        KdKind::EdgeMagic,
        KdKind::EdgeDifference,
        KdKind::FelicitousDifference,
        KdKind::GracefulDifference,
    ];

    fn is_magic(self) -> bool {
        matches!(
            self,
            KdKind::EdgeMagic | KdKind::EdgeDifference | KdKind::FelicitousDifference | KdKind::GracefulDifference
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KdParams {
    pub kind: KdKind,
    pub k: i64,
    pub d: i64,
    #[serde(default)]
    pub strong: bool,
}

impl KdParams {
    pub fn new(kind: KdKind, k: i64, d: i64, strong: bool) -> Result<Self> {
        if d < 1 || k < 0 {
            return precondition(format!("need k ≥ 0 and d ≥ 1, got k = {k}, d = {d}"));
        }
        Ok(KdParams { kind, k, d, strong })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Element {
    Vertex(usize),
    Edge(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KdReport {
    pub pass: bool,
    pub params: KdParams,
    /// `X` colors in `{0, d, 2d, …}`, `Y ∪ E` colors in `{k, k+d, …}`, plus
    /// the kind's own total-color-set bound.
    pub domain: Verdict<Element>,
    pub edge_rule: Verdict<(usize, usize)>,
    pub edge_color_set: bool,
    /// Distinct edge colors, ascending.
    pub edge_colors: Vec<i64>,
    pub expected_edge_colors: Option<Vec<i64>>,
    /// The common value of the kind's edge expression, when there is one.
    pub constant: Option<i64>,
    pub antimagic_a: Option<i64>,
    /// Modulus used by the harmonious and odd-elegant rules.
    pub modulus: Option<i64>,
    /// Whether some maximum matching has every edge summing to the strong target.
    pub strong_matching: Option<bool>,
}

fn edge_value(kind: KdKind, fu: i64, fe: i64, fv: i64) -> i64 {
    match kind {
        KdKind::EdgeMagic | KdKind::EdgeAntimagic => fu + fe + fv,
        KdKind::EdgeDifference => fe + (fu - fv).abs(),
        KdKind::FelicitousDifference => (fu + fv - fe).abs(),
        KdKind::GracefulDifference => ((fu - fv).abs() - fe).abs(),
        _ => 0,
    }
}

fn in_progression(v: i64, base: i64, d: i64, lo: i64, hi: Option<i64>) -> bool {
    let off = v - base;
    if off < 0 || off % d != 0 {
        return false;
    }
    let j = off / d;
    j >= lo && hi.is_none_or(|h| j <= h)
}

/// Kuhn augmenting paths; size of a maximum matching using only `allowed` edges.
pub(crate) fn max_bipartite_matching(x: &[usize], n: usize, edges: &[(usize, usize)]) -> usize {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut mate: Vec<Option<usize>> = vec![None; n];
    fn augment(u: usize, adj: &[Vec<usize>], seen: &mut [bool], mate: &mut [Option<usize>]) -> bool {
        for &v in &adj[u] {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            if mate[v].is_none_or(|w| augment(w, adj, seen, mate)) {
                mate[v] = Some(u);
                return true;
            }
        }
        false
    }
    let mut size = 0;
    for &u in x {
        let mut seen = vec![false; n];
        if augment(u, &adj, &mut seen, &mut mate) {
            size += 1;
        }
    }
    size
}

pub fn verify_kd_total_coloring(c: &TotalColoring, p: KdParams) -> Result<KdReport> {
    let p = KdParams::new(p.kind, p.k, p.d, p.strong)?;
    let (x, _) = c.parts()?;
    let (fv, fe) = c.int_colors()?;
    let (k, d) = (p.k, p.d);
    let q = c.q() as i64;
    let edges = c.graph.edges();
    let mut in_x = vec![false; c.p()];
    for &v in &x {
        in_x[v] = true;
    }
    let oriented: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| if in_x[b] { (b, a) } else { (a, b) }).collect();

    let mut edge_rule = Verdict::pass();
    let mut constant = None;
    let mut antimagic_a = None;
    let mut modulus = None;
    let mut expected = None;
    match p.kind {
        KdKind::Graceful | KdKind::OddGraceful => {
            for (i, &(a, b)) in oriented.iter().enumerate() {
                if fe[i] != (fv[a] - fv[b]).abs() && edge_rule.holds {
                    edge_rule = Verdict::fail(edges[i]);
                }
            }
            expected = Some(if p.kind == KdKind::Graceful { s_set(q - 1, k, 0, d) } else { o_set(q, k, d) });
        }
        KdKind::Harmonious | KdKind::OddElegant => {
            let m = if p.kind == KdKind::Harmonious { q * d } else { 2 * q * d };
            modulus = Some(m);
            for (i, &(a, b)) in oriented.iter().enumerate() {
                if m > 0 && fe[i] != k + (fv[a] + fv[b] - k).rem_euclid(m) && edge_rule.holds {
                    edge_rule = Verdict::fail(edges[i]);
                }
            }
            expected = Some(if p.kind == KdKind::Harmonious { s_set(q - 1, k, 0, d) } else { o_set(q, k, d) });
        }
        KdKind::EdgeAntimagic => {
            let sums: Vec<i64> = oriented
                .iter()
                .enumerate()
                .map(|(i, &(a, b))| edge_value(p.kind, fv[a], fe[i], fv[b]))
                .collect();
            if let Some(&lo) = sums.iter().min() {
                let off = lo - 2 * k;
                if off >= 0 && off % (2 * d) == 0 {
                    let a = off / (2 * d);
                    antimagic_a = Some(a);
                    let want: BTreeSet<i64> = (0..q).map(|j| 2 * k + 2 * (a + j) * d).collect();
                    let mut seen = BTreeSet::new();
                    for (i, s) in sums.iter().enumerate() {
                        if (!want.contains(s) || !seen.insert(*s)) && edge_rule.holds {
                            edge_rule = Verdict::fail(edges[i]);
                        }
                    }
                } else {
                    edge_rule = Verdict::fail(edges[sums.iter().position(|&s| s == lo).unwrap()]);
                }
            }
        }
        _ => {
            let vals: Vec<i64> = oriented
                .iter()
                .enumerate()
                .map(|(i, &(a, b))| edge_value(p.kind, fv[a], fe[i], fv[b]))
                .collect();
            if let Some(&first) = vals.first() {
                match vals.iter().position(|&v| v != first) {
                    Some(i) => edge_rule = Verdict::fail(edges[i]),
                    None => constant = Some(first),
                }
            }
            if p.strong {
                expected = Some(s_set(q - 1, k, 0, d));
            }
        }
    }

    let edge_colors: Vec<i64> = fe.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let edge_color_set = match &expected {
        Some(want) => {
            let want: BTreeSet<i64> = want.iter().copied().collect();
            want.into_iter().eq(edge_colors.iter().copied())
        }
        None => edge_colors.len() as i64 <= q,
    };

    // kind-specific bound on Y ∪ E colors, as (lowest j, highest j) of k + jd
    let upper: Option<(i64, Option<i64>)> = match p.kind {
        KdKind::Graceful => Some((0, Some(q - 1))),
        KdKind::OddGraceful => Some((0, Some(2 * q - 1))),
        KdKind::EdgeAntimagic => antimagic_a.map(|a| (a, Some(a + 2 * (a + q - 1)))),
        KdKind::EdgeMagic if p.strong => Some((0, Some(q - 1))),
        _ => None,
    };
    let mult_d = |v: i64| in_progression(v, 0, d, 0, None);
    let base_ok = |v: i64| in_progression(v, k, d, 0, None);
    let bound_ok = |v: i64| match upper {
        Some((lo, hi)) => mult_d(v) || in_progression(v, k, d, lo, hi),
        None => true,
    };
    let mut domain = Verdict::pass();
    for v in 0..c.p() {
        let ok = if in_x[v] { mult_d(fv[v]) } else { base_ok(fv[v]) };
        if !(ok && bound_ok(fv[v])) {
            domain = Verdict::fail(Element::Vertex(v));
            break;
        }
    }
    if domain.holds {
        if let Some(i) = (0..fe.len()).find(|&i| !(base_ok(fe[i]) && bound_ok(fe[i]))) {
            domain = Verdict::fail(Element::Edge(edges[i].0, edges[i].1));
        }
    }

    let strong_matching = match p.kind {
        KdKind::Graceful | KdKind::OddGraceful if p.strong => {
            let target = if p.kind == KdKind::Graceful { k + (q - 1) * d } else { k + (2 * q - 1) * d };
            let good: Vec<(usize, usize)> =
                edges.iter().copied().filter(|&(a, b)| fv[a] + fv[b] == target).collect();
            let best = max_bipartite_matching(&x, c.p(), edges);
            Some(max_bipartite_matching(&x, c.p(), &good) == best)
        }
        _ => None,
    };

    let magic_ok = !p.kind.is_magic() || constant.is_some();
    let pass = domain.holds && edge_rule.holds && edge_color_set && magic_ok && strong_matching.unwrap_or(true);
    Ok(KdReport {
        pass,
        params: p,
        domain,
        edge_rule,
        edge_color_set,
        edge_colors,
        expected_edge_colors: expected,
        constant,
        antimagic_a,
        modulus,
        strong_matching,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SetOrderedReport {
    pub pass: bool,
    /// Two vertices sharing a color.
    pub injective: Verdict<(usize, usize)>,
    /// `max f(X) < min f(Y)`.
    pub set_ordered: bool,
    /// `f(xy) = f(y) − f(x)` with `x ∈ X`.
    pub edge_rule: Verdict<(usize, usize)>,
    /// `f(E) = [1, q]`.
    pub edge_set: bool,
}

pub fn verify_set_ordered_graceful(c: &TotalColoring) -> Result<SetOrderedReport> {
    let (x, y) = c.parts()?;
    let (fv, fe) = c.int_colors()?;
    let mut injective = Verdict::pass();
    'outer: for a in 0..fv.len() {
        for b in a + 1..fv.len() {
            if fv[a] == fv[b] {
                injective = Verdict::fail((a, b));
                break 'outer;
            }
        }
    }
    let max_x = x.iter().map(|&v| fv[v]).max();
    let min_y = y.iter().map(|&v| fv[v]).min();
    let set_ordered = match (max_x, min_y) {
        (Some(a), Some(b)) => a < b,
        _ => true,
    };
    let mut in_x = vec![false; c.p()];
    for &v in &x {
        in_x[v] = true;
    }
    let edges = c.graph.edges();
    let edge_rule = Verdict::from_witness(edges.iter().enumerate().find_map(|(i, &(a, b))| {
        let (u, w) = if in_x[a] { (a, b) } else { (b, a) };
        (fe[i] != fv[w] - fv[u]).then_some((a, b))
    }));
    let got: BTreeSet<i64> = fe.iter().copied().collect();
    let edge_set = got.len() == fe.len() && got.into_iter().eq(1..=c.q() as i64);
    Ok(SetOrderedReport {
        pass: injective.holds && set_ordered && edge_rule.holds && edge_set,
        injective,
        set_ordered,
        edge_rule,
        edge_set,
    })
}
