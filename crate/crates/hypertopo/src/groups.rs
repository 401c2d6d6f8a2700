//! Every-zero groups built from modular shifts of hyperedge sets.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{limit, precondition, Error, Result};
use crate::hyperset::{
    complement_set, power_set, GroundSet, Hyperedge, HyperedgeSet, Hypergraph, Verdict, Vertex,
};
use crate::intersected::SetColoredGraph;

pub const GROUP_LIMIT: usize = 64;
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 12;
pub const ASSOCIATIVITY_SAMPLES: usize = 10_000;
pub const ASSOCIATIVITY_SEED: u64 = 0x5EED_0001;
pub const PARTITION_LIMIT: usize = 10;

/// Residue of `x` in `1..=m`.
pub fn residue(x: i64, m: u32) -> Vertex {
    ((x - 1).rem_euclid(m as i64) + 1) as Vertex
}

fn check_range(members: impl IntoIterator<Item = Vertex>, m: u32) -> Result<()> {
    for x in members {
        if x == 0 || x > m {
            return precondition(format!("element {x} outside [1,{m}]"));
        }
    }
    Ok(())
}

pub fn shift_edge(e: &Hyperedge, r: i64, m: u32) -> Result<Hyperedge> {
    check_range(e.members().iter().copied(), m)?;
    Hyperedge::new(e.members().iter().map(|&x| residue(x as i64 + r, m)))
}

/// Adds `r` to every element modulo `m`, residues taken in `[1,m]`.
pub fn shift_set(e: &HyperedgeSet, r: i64, m: u32) -> Result<HyperedgeSet> {
    let edges: Vec<Hyperedge> = e.iter().map(|x| shift_edge(x, r, m)).collect::<Result<_>>()?;
    HyperedgeSet::new(edges)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupLaw {
    /// `λ = i + j − k (mod M)`
    #[default]
    Index,
    /// `λ = i + j − k − 1 (mod M)`, the offset read as a member index.
    LiteralOffset,
}

impl GroupLaw {
    pub fn lambda(self, i: usize, j: usize, k: usize, m: usize) -> usize {
        let off = match self {
            GroupLaw::Index => 0,
            GroupLaw::LiteralOffset => 1,
        };
        residue(i as i64 + j as i64 - k as i64 - off, m as u32) as usize
    }
}

/// `ℰ_1 … ℰ_M` stored positionally: `rows[i][s][t]` is the `t`-th element of
/// hyperedge `s` of member `i + 1`, aligned across members.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftFamily {
    pub modulus: u32,
    pub rows: Vec<Vec<Vec<Vertex>>>,
}

impl ShiftFamily {
    fn from_rows(modulus: u32, rows: Vec<Vec<Vec<Vertex>>>) -> Result<Self> {
        if rows.is_empty() {
            return precondition("empty family");
        }
        let shape: Vec<usize> = rows[0].iter().map(Vec::len).collect();
        for (i, r) in rows.iter().enumerate() {
            if r.iter().map(Vec::len).collect::<Vec<_>>() != shape {
                return precondition(format!("member {} has a different cardinality profile", i + 1));
            }
            check_range(r.iter().flatten().copied(), modulus)?;
        }
        Ok(ShiftFamily { modulus, rows })
    }

    /// Members `ℰ_i = ℰ_1 [+] (i−1)` for `i ∈ [1,M]`.
    pub fn generate(seed: &HyperedgeSet, modulus: u32) -> Result<Self> {
        limit("modulus", modulus as usize, GROUP_LIMIT)?;
        check_range(seed.iter().flat_map(|e| e.members().iter().copied()), modulus)?;
        let base: Vec<Vec<Vertex>> = seed.iter().map(|e| e.members().to_vec()).collect();
        let rows = (0..modulus as i64)
            .map(|r| {
                base.iter()
                    .map(|e| e.iter().map(|&x| residue(x as i64 + r, modulus)).collect())
                    .collect()
            })
            .collect();
        Self::from_rows(modulus, rows)
    }

    /// Aligns canonical listings against shifts of the first one; hyperedges
    /// with no shifted counterpart keep their canonical position.
    pub fn from_listing(modulus: u32, members: &[HyperedgeSet]) -> Result<Self> {
        limit("modulus", modulus as usize, GROUP_LIMIT)?;
        let Some(first) = members.first() else {
            return precondition("empty family");
        };
        let base: Vec<Vec<Vertex>> = first.iter().map(|e| e.members().to_vec()).collect();
        let mut rows = Vec::with_capacity(members.len());
        for (i, mem) in members.iter().enumerate() {
            if mem.len() != base.len() {
                return precondition(format!("member {} has {} hyperedges, expected {}", i + 1, mem.len(), base.len()));
            }
            let row = base
                .iter()
                .enumerate()
                .map(|(s, e)| {
                    let shifted: Vec<Vertex> = e.iter().map(|&x| residue(x as i64 + i as i64, modulus)).collect();
                    let mut sorted = shifted.clone();
                    sorted.sort_unstable();
                    if mem.iter().any(|f| f.members() == sorted.as_slice()) {
                        shifted
                    } else {
                        mem.edges()[s].members().to_vec()
                    }
                })
                .collect();
            rows.push(row);
        }
        Self::from_rows(modulus, rows)
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Canonical form of member `i` (1-based).
    pub fn member(&self, i: usize) -> Result<HyperedgeSet> {
        if i == 0 || i > self.rows.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.rows.len(),
            });
        }
        Ok(canonical(&self.rows[i - 1]))
    }

    pub fn members(&self) -> Vec<HyperedgeSet> {
        self.rows.iter().map(|r| canonical(r)).collect()
    }

    fn op(&self, a: &[Vec<Vertex>], b: &[Vec<Vertex>], c: &[Vec<Vertex>]) -> Vec<Vec<Vertex>> {
        a.iter()
            .zip(b)
            .zip(c)
            .map(|((x, y), z)| {
                x.iter()
                    .zip(y)
                    .zip(z)
                    .map(|((&p, &q), &r)| residue(p as i64 + q as i64 - r as i64, self.modulus))
                    .collect()
            })
            .collect()
    }

    /// Elementwise `ℰ_i [+] ℰ_j [−] ℰ_k` in positional form.
    pub fn elementwise(&self, i: usize, j: usize, k: usize) -> Result<Vec<Vec<Vertex>>> {
        let n = self.rows.len();
        for x in [i, j, k] {
            if x == 0 || x > n {
                return Err(Error::IndexOutOfRange { index: x, len: n });
            }
        }
        Ok(self.op(&self.rows[i - 1], &self.rows[j - 1], &self.rows[k - 1]))
    }
}

fn canonical(row: &[Vec<Vertex>]) -> HyperedgeSet {
    let edges = row.iter().map(|e| Hyperedge::new(e.iter().copied()).expect("nonempty rows"));
    HyperedgeSet::new_dedup(edges).0
}

/// `λ` for `ℰ_i [+] ℰ_j [−] ℰ_k`, checked against the elementwise sum.
pub fn combine(fam: &ShiftFamily, i: usize, j: usize, k: usize, law: GroupLaw) -> Result<usize> {
    let got = canonical(&fam.elementwise(i, j, k)?);
    let lambda = law.lambda(i, j, k, fam.len());
    if got != fam.member(lambda)? {
        return Err(Error::Internal(format!(
            "ℰ_{i} [+] ℰ_{j} [−] ℰ_{k} is not member {lambda}"
        )));
    }
    Ok(lambda)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EveryZeroReport {
    pub pass: bool,
    pub law: GroupLaw,
    /// `(i, j, k)` whose elementwise sum is not member `λ`.
    pub closure: Verdict<(usize, usize, usize)>,
    /// `(k, i)`: row `i` of the zero-`k` table misses a member.
    pub latin_square: Verdict<(usize, usize)>,
    /// `(i, k)` with `ℰ_i [+_k] ℰ_k ≠ ℰ_i`.
    pub zero: Verdict<(usize, usize)>,
    /// `(i, k)` for which no `j` gives `ℰ_i [+_k] ℰ_j = ℰ_k`.
    pub inverse: Verdict<(usize, usize)>,
    pub associativity: Verdict<(usize, usize, usize, usize)>,
    pub associativity_exhaustive: bool,
    pub commutativity: Verdict<(usize, usize, usize)>,
}

/// Checks every group axiom for every choice of zero.
pub fn verify_every_zero(fam: &ShiftFamily, law: GroupLaw) -> Result<EveryZeroReport> {
    let n = fam.len();
    limit("family", n, GROUP_LIMIT)?;
    let members = fam.members();
    let distinct: BTreeSet<&HyperedgeSet> = members.iter().collect();
    let rows = &fam.rows;
    let canon = |r: &[Vec<Vertex>]| canonical(r);

    let mut closure = Verdict::pass();
    let mut latin = Verdict::pass();
    let mut zero = Verdict::pass();
    let mut inverse = Verdict::pass();
    let mut commutativity = Verdict::pass();
    for k in 1..=n {
        for i in 1..=n {
            let mut row_sets = BTreeSet::new();
            for j in 1..=n {
                let sum = canon(&fam.op(&rows[i - 1], &rows[j - 1], &rows[k - 1]));
                if closure.holds && sum != members[law.lambda(i, j, k, n) - 1] {
                    closure = Verdict::fail((i, j, k));
                }
                if commutativity.holds && sum != canon(&fam.op(&rows[j - 1], &rows[i - 1], &rows[k - 1])) {
                    commutativity = Verdict::fail((i, j, k));
                }
                if j == k && zero.holds && sum != members[i - 1] {
                    zero = Verdict::fail((i, k));
                }
                row_sets.insert(sum);
            }
            if latin.holds && !distinct.iter().all(|m| row_sets.contains(*m)) {
                latin = Verdict::fail((k, i));
            }
            if inverse.holds && !row_sets.contains(&members[k - 1]) {
                inverse = Verdict::fail((i, k));
            }
        }
    }

    let assoc_at = |i: usize, j: usize, l: usize, k: usize| {
        let z = &rows[k - 1];
        let left = fam.op(&fam.op(&rows[i - 1], &rows[j - 1], z), &rows[l - 1], z);
        let right = fam.op(&rows[i - 1], &fam.op(&rows[j - 1], &rows[l - 1], z), z);
        canon(&left) == canon(&right)
    };
    let exhaustive = n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT;
    let mut associativity = Verdict::pass();
    if exhaustive {
        'a: for k in 1..=n {
            for i in 1..=n {
                for j in 1..=n {
                    for l in 1..=n {
                        if !assoc_at(i, j, l, k) {
                            associativity = Verdict::fail((i, j, l, k));
                            break 'a;
                        }
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(ASSOCIATIVITY_SEED);
        for _ in 0..ASSOCIATIVITY_SAMPLES {
            let q: [usize; 4] = std::array::from_fn(|_| rng.gen_range(1..=n));
            if !assoc_at(q[0], q[1], q[2], q[3]) {
                associativity = Verdict::fail((q[0], q[1], q[2], q[3]));
                break;
            }
        }
    }

    let pass = closure.holds && latin.holds && zero.holds && inverse.holds && associativity.holds && commutativity.holds;
    Ok(EveryZeroReport {
        pass,
        law,
        closure,
        latin_square: latin,
        zero,
        inverse,
        associativity,
        associativity_exhaustive: exhaustive,
        commutativity,
    })
}

/// Shifts of a seed hypergraph over `[1,N]`.
pub fn generate_hypergraph_group(seed: &Hypergraph, n: u32) -> Result<ShiftFamily> {
    ShiftFamily::generate(seed.edges(), n)
}

/// The index table `λ(i, j)` for a fixed zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupTable {
    pub modulus: usize,
    pub zero_index: usize,
    pub law: GroupLaw,
    /// `table[i−1][j−1] = λ`.
    pub table: Vec<Vec<usize>>,
}

impl GroupTable {
    pub fn new(modulus: usize, zero_index: usize, law: GroupLaw) -> Result<Self> {
        limit("modulus", modulus, GROUP_LIMIT)?;
        if zero_index == 0 || zero_index > modulus {
            return Err(Error::IndexOutOfRange {
                index: zero_index,
                len: modulus,
            });
        }
        let table = (1..=modulus)
            .map(|i| (1..=modulus).map(|j| law.lambda(i, j, zero_index, modulus)).collect())
            .collect();
        Ok(GroupTable {
            modulus,
            zero_index,
            law,
            table,
        })
    }

    pub fn is_latin(&self) -> bool {
        let m = self.modulus;
        let full: BTreeSet<usize> = (1..=m).collect();
        let rows_ok = self.table.iter().all(|r| r.iter().copied().collect::<BTreeSet<_>>() == full);
        let cols_ok = (0..m).all(|j| self.table.iter().map(|r| r[j]).collect::<BTreeSet<_>>() == full);
        rows_ok && cols_ok
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerSetPartition {
    pub modulus: u32,
    /// `classes[k−1] = U_k`, all `k`-subsets of `[1,M]`.
    pub classes: Vec<HyperedgeSet>,
    /// Shift orbits inside each `U_k`; member `i` is the one-hyperedge family `{e + (i−1)}`.
    pub orbits: Vec<Vec<ShiftFamily>>,
}

/// Splits the nonempty subsets of `[1,M]` by size.
pub fn partition_power_set(m: u32) -> Result<PowerSetPartition> {
    limit("modulus", m as usize, PARTITION_LIMIT)?;
    if m == 0 {
        return precondition("modulus must be positive");
    }
    let all = power_set(&GroundSet::interval(m)?)?;
    let mut classes = Vec::with_capacity(m as usize);
    let mut orbits = Vec::with_capacity(m as usize);
    for k in 1..=m as usize {
        let uk: Vec<Hyperedge> = all.iter().filter(|e| e.len() == k).cloned().collect();
        let mut seen = BTreeSet::new();
        let mut fams = Vec::new();
        for e in &uk {
            if seen.contains(e) {
                continue;
            }
            let single = HyperedgeSet::new([e.clone()])?;
            let fam = ShiftFamily::generate(&single, m)?;
            for mem in fam.members() {
                seen.insert(mem.edges()[0].clone());
            }
            fams.push(fam);
        }
        classes.push(HyperedgeSet::new(uk)?);
        orbits.push(fams);
    }
    Ok(PowerSetPartition {
        modulus: m,
        classes,
        orbits,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FixedPointTransform {
    Complement,
    Shift { r: i64, modulus: u32 },
}

/// Whether the transform maps the family onto itself; inapplicable transforms give `false`.
pub fn fixed_point_check(h: &Hypergraph, t: FixedPointTransform) -> bool {
    match t {
        FixedPointTransform::Complement => complement_set(h).map(|c| c.edges() == h.edges()).unwrap_or(false),
        FixedPointTransform::Shift { r, modulus } => shift_set(h.edges(), r, modulus)
            .map(|s| &s == h.edges())
            .unwrap_or(false),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoredGraphGroup {
    pub modulus: u32,
    /// Copy `i` carries every label of copy 1 shifted by `i − 1`.
    pub copies: Vec<SetColoredGraph>,
}

fn colored_labels(g: &SetColoredGraph) -> Vec<&Hyperedge> {
    g.vertex_labels
        .iter()
        .chain(g.edge_labels.iter().flatten())
        .collect()
}

/// `M` shifted copies of a set-colored graph.
pub fn set_colored_graph_group(g: &SetColoredGraph, m: u32) -> Result<ColoredGraphGroup> {
    limit("modulus", m as usize, GROUP_LIMIT)?;
    for l in colored_labels(g) {
        check_range(l.members().iter().copied(), m)?;
    }
    let shift = |l: &Hyperedge, r: i64| shift_edge(l, r, m);
    let mut copies = Vec::with_capacity(m as usize);
    for r in 0..m as i64 {
        let vl = g.vertex_labels.iter().map(|l| shift(l, r)).collect::<Result<Vec<_>>>()?;
        let el = match &g.edge_labels {
            Some(ls) => Some(ls.iter().map(|l| shift(l, r)).collect::<Result<Vec<_>>>()?),
            None => None,
        };
        copies.push(SetColoredGraph::new(g.graph.clone(), vl, el)?);
    }
    Ok(ColoredGraphGroup { modulus: m, copies })
}

impl ColoredGraphGroup {
    /// Checks `b_i + b_j − b_k = b_λ` at every label position, returning the
    /// first failing `(i, j, k, position)`.
    pub fn verify(&self) -> Verdict<(usize, usize, usize, usize)> {
        let m = self.modulus;
        let n = self.copies.len();
        let Some(first) = self.copies.first() else {
            return Verdict::pass();
        };
        let base: Vec<Vec<Vertex>> = colored_labels(first).iter().map(|l| l.members().to_vec()).collect();
        // positional alignment of copy i against the expected shift of copy 1
        let aligned: Vec<Vec<Vec<Vertex>>> = self
            .copies
            .iter()
            .enumerate()
            .map(|(i, c)| {
                colored_labels(c)
                    .iter()
                    .zip(&base)
                    .map(|(l, b)| {
                        let s: Vec<Vertex> = b.iter().map(|&x| residue(x as i64 + i as i64, m)).collect();
                        let mut sorted = s.clone();
                        sorted.sort_unstable();
                        if l.members() == sorted.as_slice() {
                            s
                        } else {
                            l.members().to_vec()
                        }
                    })
                    .collect()
            })
            .collect();
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    let lambda = GroupLaw::Index.lambda(i, j, k, n);
                    for pos in 0..base.len() {
                        let (a, b, c) = (&aligned[i - 1][pos], &aligned[j - 1][pos], &aligned[k - 1][pos]);
                        if a.len() != b.len() || a.len() != c.len() {
                            return Verdict::fail((i, j, k, pos));
                        }
                        let mut sum: Vec<Vertex> = (0..a.len())
                            .map(|t| residue(a[t] as i64 + b[t] as i64 - c[t] as i64, m))
                            .collect();
                        sum.sort_unstable();
                        let target = colored_labels(&self.copies[lambda - 1])[pos];
                        if target.members() != sum.as_slice() {
                            return Verdict::fail((i, j, k, pos));
                        }
                    }
                }
            }
        }
        Verdict::pass()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn set(lists: &[&[Vertex]]) -> HyperedgeSet {
        HyperedgeSet::from_lists(lists).unwrap()
    }

    fn cyclic8() -> HyperedgeSet {
        let lists: Vec<Vec<Vertex>> = (0..8).map(|j| (0..4).map(|t| residue(1 + j + t, 8)).collect()).collect();
        HyperedgeSet::new(lists.into_iter().map(|l| Hyperedge::new(l).unwrap())).unwrap()
    }

    #[test]
    fn residues_live_in_one_to_m() {
        assert_eq!(residue(0, 10), 10);
        assert_eq!(residue(11, 10), 1);
        assert_eq!(residue(-3, 10), 7);
    }

    #[test]
    fn shift_by_modulus_is_identity() {
        let e = set(&[&[1, 2], &[3, 9, 10]]);
        assert_eq!(shift_set(&e, 10, 10).unwrap(), e);
        assert!(shift_set(&e, 1, 9).is_err());
    }

    #[test]
    fn every_zero_on_cyclic_family() {
        let fam = ShiftFamily::generate(&set(&[&[1, 2, 3, 4]]), 8).unwrap();
        let r = verify_every_zero(&fam, GroupLaw::Index).unwrap();
        assert!(r.pass, "{r:?}");
        assert!(r.associativity_exhaustive);
        assert_eq!(combine(&fam, 2, 3, 1, GroupLaw::Index).unwrap(), 4);
    }

    #[test]
    fn literal_offset_disagrees_with_elementwise_sum() {
        let fam = ShiftFamily::generate(&set(&[&[1, 2, 3, 4]]), 8).unwrap();
        assert!(combine(&fam, 2, 3, 1, GroupLaw::LiteralOffset).is_err());
        let r = verify_every_zero(&fam, GroupLaw::LiteralOffset).unwrap();
        assert!(!r.closure.holds);
    }

    #[test]
    fn corrupted_member_breaks_closure() {
        let fam = ShiftFamily::generate(&set(&[&[1, 2], &[3, 5]]), 6).unwrap();
        let mut members = fam.members();
        members[2] = set(&[&[3, 4], &[2, 5]]);
        let bad = ShiftFamily::from_listing(6, &members).unwrap();
        let r = verify_every_zero(&bad, GroupLaw::Index).unwrap();
        assert!(!r.pass);
        assert!(r.closure.witness.is_some());
    }

    #[test]
    fn from_listing_recovers_generated_rows() {
        let fam = ShiftFamily::generate(&cyclic8(), 8).unwrap();
        let again = ShiftFamily::from_listing(8, &fam.members()).unwrap();
        assert_eq!(again.members(), fam.members());
        assert!(verify_every_zero(&again, GroupLaw::Index).unwrap().pass);
    }

    #[test]
    fn sampled_associativity_beyond_limit() {
        let fam = ShiftFamily::generate(&set(&[&[1, 5], &[2, 13]]), 13).unwrap();
        let r = verify_every_zero(&fam, GroupLaw::Index).unwrap();
        assert!(r.pass);
        assert!(!r.associativity_exhaustive);
    }

    #[test]
    fn table_is_latin_for_both_laws() {
        for law in [GroupLaw::Index, GroupLaw::LiteralOffset] {
            for k in 1..=7 {
                assert!(GroupTable::new(7, k, law).unwrap().is_latin());
            }
        }
        assert!(GroupTable::new(7, 0, GroupLaw::Index).is_err());
    }

    #[test]
    fn partition_of_four() {
        let p = partition_power_set(4).unwrap();
        let sizes: Vec<usize> = p.classes.iter().map(HyperedgeSet::len).collect();
        assert_eq!(sizes, vec![4, 6, 4, 1]);
        // {1,3} and {2,4} form a shift orbit of length 2
        assert_eq!(p.orbits[1].len(), 2);
        for fams in &p.orbits {
            for f in fams {
                assert!(verify_every_zero(f, GroupLaw::Index).unwrap().pass);
            }
        }
    }

    #[test]
    fn fixed_points() {
        let h = Hypergraph::over_interval(4, &[&[1, 2], &[3, 4]]).unwrap();
        assert!(fixed_point_check(&h, FixedPointTransform::Complement));
        assert!(fixed_point_check(&h, FixedPointTransform::Shift { r: 2, modulus: 4 }));
        assert!(!fixed_point_check(&h, FixedPointTransform::Shift { r: 1, modulus: 4 }));
        let full = Hypergraph::over_interval(2, &[&[1, 2]]).unwrap();
        assert!(!fixed_point_check(&full, FixedPointTransform::Complement));
    }

    #[test]
    fn colored_group_on_one_edge() {
        let g = SetColoredGraph::new(
            Graph::path(2),
            vec![Hyperedge::new([1]).unwrap(), Hyperedge::new([2]).unwrap()],
            None,
        )
        .unwrap();
        let grp = set_colored_graph_group(&g, 3).unwrap();
        assert_eq!(grp.copies.len(), 3);
        assert_eq!(grp.copies[2].vertex_labels[0].members(), &[3]);
        assert!(grp.verify().holds);
        let mut bad = grp.clone();
        bad.copies[1].vertex_labels[1] = Hyperedge::new([1]).unwrap();
        assert!(!bad.verify().holds);
    }
}
