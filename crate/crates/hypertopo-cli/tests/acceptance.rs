//! End-to-end acceptance run. Each criterion prints one PASS/FAIL line; the
//! test fails if any criterion does.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hypertopo::colorings::{build_topcode_matrix, verify_w_constraint_hyperedge_set, Color, TopcodeMatrix, WConstraint};
use hypertopo::fixtures::{
    fix_a, fix_a_listing, fix_b_e11, fix_b_e1_listing, fix_b_e21, fix_c_coloring, fix_d, fix_f, fix_g, WFixture,
    FIX_C_EDGES, FIX_C_VERTICES, FIX_D,
};
use hypertopo::generators::{cyclic_generation_order, cyclic_k_uniform, enumerate_3i, strong_hyperedge_set};
use hypertopo::graph::Graph;
use hypertopo::groups::{partition_power_set, verify_every_zero, GroupLaw, ShiftFamily};
use hypertopo::hyperset::{complement_set, structure_report, verify_3i, GroundSet, Hyperedge, HyperedgeSet, Hypergraph};
use hypertopo::intersected::{
    build_v_intersected, find_proper_hamiltonian_cycle, induce_3i_coloring, verify_uniform_cycle, verify_ve_intersected,
    VeOptions,
};
use hypertopo::treeforest::{bipartite_tree_formula, cayley, forest_count, group_digits, spanning_tree_count};

// Wall-clock budgets, one per timed criterion.
const STRONG_BUDGET: Duration = Duration::from_secs(1);
const CYCLIC_BUDGET: Duration = Duration::from_secs(10);
const EVERY_ZERO_BUDGET: Duration = Duration::from_secs(5);
const CHROMATIC_BUDGET: Duration = Duration::from_secs(60);
const COUNTING_BUDGET: Duration = Duration::from_secs(30);

const COMPLEMENT_SAMPLES: usize = 200;
const INDUCE_SAMPLES: usize = 50;
const SEED: u64 = 0x5eed_2024;

/// Collects failed sub-checks instead of stopping at the first one.
#[derive(Default)]
struct Checks(Vec<String>);

impl Checks {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.0.push(what.into());
        }
    }

    fn within(&mut self, start: Instant, budget: Duration) {
        let took = start.elapsed();
        self.check(took < budget, format!("took {took:?}, budget {budget:?}"));
    }
}

fn he(v: &[u32]) -> Hyperedge {
    Hyperedge::new(v.iter().copied()).unwrap()
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

fn find(p: &mut [usize], x: usize) -> usize {
    if p[x] != x {
        let r = find(p, p[x]);
        p[x] = r;
    }
    p[x]
}

fn acyclic(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut p: Vec<usize> = (0..n).collect();
    edges.iter().all(|&(a, b)| {
        let (ra, rb) = (find(&mut p, a), find(&mut p, b));
        p[ra] = rb;
        ra != rb
    })
}

/// Acyclic edge subsets of the given size, or of any size.
fn acyclic_subsets(n: usize, edges: &[(usize, usize)], size: Option<usize>) -> u64 {
    (0u32..1 << edges.len())
        .filter(|mask| size.is_none_or(|s| mask.count_ones() as usize == s))
        .filter(|mask| {
            let pick: Vec<_> = (0..edges.len()).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
            acyclic(n, &pick)
        })
        .count() as u64
}

fn prufer_trees(n: usize) -> usize {
    let mut trees = BTreeSet::new();
    let total = n.pow(n as u32 - 2);
    for code in 0..total {
        let seq: Vec<usize> = (0..n - 2).map(|i| code / n.pow(i as u32) % n).collect();
        let mut degree = vec![1; n];
        for &s in &seq {
            degree[s] += 1;
        }
        let mut t = BTreeSet::new();
        for &s in &seq {
            let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
            t.insert((leaf.min(s), leaf.max(s)));
            degree[leaf] -= 1;
            degree[s] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        t.insert((rest[0], rest[1]));
        trees.insert(t);
    }
    trees.len()
}

/// Fewest colours on hyperedges with intersecting hyperedges coloured apart.
fn brute_edge_chromatic(es: &[Hyperedge]) -> usize {
    let m = es.len();
    (1..=m)
        .find(|&k| {
            (0..k.pow(m as u32)).any(|code| {
                let col: Vec<usize> = (0..m).map(|i| code / k.pow(i as u32) % k).collect();
                all_pairs(m).iter().all(|&(i, j)| col[i] != col[j] || !es[i].intersects(&es[j]))
            })
        })
        .unwrap_or(m)
}

fn mask_edge(mask: u32) -> Hyperedge {
    Hyperedge::new((0..32).filter(|b| mask >> b & 1 == 1).map(|b| b + 1)).unwrap()
}

fn strong_listings() -> Checks {
    let mut c = Checks::default();
    let start = Instant::now();
    let sizes: Vec<usize> = FIX_D.iter().map(|&(m, t, _)| strong_hyperedge_set(m, t).unwrap().len()).collect();
    c.check(sizes == [4, 3, 6, 10, 7, 8, 21, 25, 15, 7], format!("cardinalities {sizes:?}"));
    for &(m, t, _) in &FIX_D {
        let got = strong_hyperedge_set(m, t).unwrap();
        c.check(Some(&got) == fix_d(m, t).as_ref(), format!("listing m={m} t={t}"));
    }
    c.within(start, STRONG_BUDGET);
    c
}

fn cyclic_families() -> Checks {
    let mut c = Checks::default();
    let start = Instant::now();
    for n in 3..=10 {
        for k in 2..n {
            let h = cyclic_k_uniform(n, k).unwrap();
            c.check(verify_3i(&h, true).overall == Some(true), format!("3I n={n} k={k}"));
            let order = cyclic_generation_order(n, k).unwrap();
            let r = verify_uniform_cycle(&h, &order).unwrap();
            c.check(r.pass, format!("uniform cycle n={n} k={k}: {r:?}"));
            let found = find_proper_hamiltonian_cycle(&h).unwrap();
            c.check(found.is_some_and(|cy| cy.verify(&h)), format!("hamiltonian n={n} k={k}"));
        }
    }
    c.within(start, CYCLIC_BUDGET);
    c
}

fn shift_fidelity() -> Checks {
    let mut c = Checks::default();
    let listing = fix_b_e1_listing();
    let fam = ShiftFamily::generate(fix_b_e11().edges(), 10).unwrap();
    let members = fam.members();
    for (i, listed) in listing.iter().enumerate() {
        c.check(&members[i % 10] == listed.edges(), format!("member {}", i + 1));
    }
    c.check(listing[10] == listing[0], "member 11 equals member 1");
    let e21 = fix_b_e21();
    c.check(complement_set(&e21).unwrap() == e21, "E_{2,1} complement fixed point");
    let e11 = fix_b_e11();
    c.check(complement_set(&e11).unwrap() == e11, "E_{1,1} complement fixed point");
    c
}

fn every_zero() -> Checks {
    let mut c = Checks::default();
    let start = Instant::now();
    let a = ShiftFamily::generate(&HyperedgeSet::new([he(&[1, 2, 3, 4])]).unwrap(), 8).unwrap();
    let listed: Vec<HyperedgeSet> = fix_a_listing().into_iter().map(|e| HyperedgeSet::new([e]).unwrap()).collect();
    c.check(a.members() == listed, "M=8 members equal the listing");
    c.check(fix_a().edges().len() == 8, "M=8 family size");
    c.check(verify_every_zero(&a, GroupLaw::Index).unwrap().pass, "M=8 axioms");
    let b_members: Vec<HyperedgeSet> = fix_b_e1_listing()[..10].iter().map(|h| h.edges().clone()).collect();
    let b = ShiftFamily::from_listing(10, &b_members).unwrap();
    let r = verify_every_zero(&b, GroupLaw::Index).unwrap();
    c.check(r.pass && r.associativity_exhaustive, format!("M=10 axioms: {r:?}"));

    let p = partition_power_set(4).unwrap();
    c.check(p.classes.len() == 4, "four classes");
    for k in 1..4 {
        let u = Hypergraph::new(GroundSet::interval(4).unwrap(), p.classes[k - 1].clone()).unwrap();
        c.check(complement_set(&u).unwrap().edges() == &p.classes[3 - k], format!("complement U_{k}"));
        c.check(p.classes[k - 1].iter().all(|e| e.len() == k), format!("U_{k} sizes"));
    }
    c.within(start, EVERY_ZERO_BUDGET);
    c
}

fn complement_laws() -> Checks {
    let mut c = Checks::default();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut done = 0;
    while done < COMPLEMENT_SAMPLES {
        let n: u32 = rng.gen_range(2..=8);
        let full = (1u32 << n) - 1;
        let m = rng.gen_range(1..=8);
        let (edges, _) = HyperedgeSet::new_dedup((0..m).map(|_| mask_edge(rng.gen_range(1..full))));
        let h = Hypergraph::new(GroundSet::interval(n).unwrap(), edges).unwrap();
        let comp = complement_set(&h).unwrap();
        c.check(complement_set(&comp).unwrap() == h, format!("involution {h:?}"));
        c.check(comp.len() == h.len(), format!("size {h:?}"));
        for e in h.edges().iter() {
            let want = Hyperedge::new((1..=n).filter(|v| !e.contains(*v))).unwrap();
            c.check(comp.edges().contains(&want), format!("pointwise {h:?}"));
        }
        let (r, rc) = (structure_report(&h), structure_report(&comp));
        if let Some(k) = r.uniform_k {
            c.check(rc.uniform_k == Some(n as usize - k), format!("uniformity {h:?}"));
        }
        if r.equitable {
            c.check(rc.equitable, format!("equitable {h:?}"));
        }
        let sizes: BTreeSet<usize> = h.edges().iter().map(Hyperedge::len).collect();
        if sizes.len() == h.len() {
            let sc: BTreeSet<usize> = comp.edges().iter().map(Hyperedge::len).collect();
            c.check(sc.len() == comp.len(), format!("distinct sizes {h:?}"));
        }
        done += 1;
    }
    c
}

fn chromatic_on_four() -> Checks {
    let mut c = Checks::default();
    let start = Instant::now();
    // every family of nonempty subsets of [1,4], filtered by the strict check
    let mut strict = BTreeSet::new();
    for fam in 1u32..1 << 15 {
        let edges = HyperedgeSet::new((0..15).filter(|i| fam >> i & 1 == 1).map(|i| mask_edge(i + 1))).unwrap();
        let h = Hypergraph::new(GroundSet::interval(4).unwrap(), edges).unwrap();
        if verify_3i(&h, true).overall == Some(true) {
            strict.insert(h.edges().clone());
        }
    }
    let listed: BTreeSet<HyperedgeSet> = enumerate_3i(4, true).unwrap().iter().map(|h| h.edges().clone()).collect();
    c.check(listed == strict, format!("enumeration {} vs {}", listed.len(), strict.len()));
    for es in &strict {
        let h = Hypergraph::new(GroundSet::interval(4).unwrap(), es.clone()).unwrap();
        let chi = build_v_intersected(&h).graph.chromatic_number();
        c.check(chi == brute_edge_chromatic(es.edges()), format!("chi {es:?}"));
    }
    c.within(start, CHROMATIC_BUDGET);
    c
}

fn counting() -> Checks {
    let mut c = Checks::default();
    let start = Instant::now();
    for n in 1..=8usize {
        let want = if n == 1 { BigInt::one() } else { BigInt::from(n).pow(n as u32 - 2) };
        c.check(spanning_tree_count(&Graph::complete(n)).unwrap() == want, format!("K_{n}"));
        c.check(cayley(n as u32) == want, format!("cayley {n}"));
        if (2..=7).contains(&n) {
            c.check(BigInt::from(prufer_trees(n)) == want, format!("prufer {n}"));
        }
    }
    for m in 1..=4usize {
        for n in 1..=4usize {
            let g = Graph::complete_bipartite(m, n);
            let brute = acyclic_subsets(m + n, g.edges(), Some(m + n - 1));
            let got = spanning_tree_count(&g).unwrap();
            c.check(got == BigInt::from(brute), format!("K_{{{m},{n}}} brute"));
            c.check(got == bipartite_tree_formula(m as u32, n as u32), format!("K_{{{m},{n}}} formula"));
        }
    }
    for n in 1..=6usize {
        let brute = acyclic_subsets(n, &all_pairs(n), None);
        c.check(forest_count(n).unwrap() == BigInt::from(brute), format!("forests {n}"));
    }
    let k26 = spanning_tree_count(&Graph::complete(26)).unwrap();
    c.check(k26 == BigInt::from(26u32).pow(24), "K_26 exact");
    let printed = "9,106,685,769,537,220,000,000,000,000,000,000";
    c.check(group_digits(&k26) == printed, format!("K_26 digits {} vs {printed}", group_digits(&k26)));
    c.within(start, COUNTING_BUDGET);
    c
}

fn induced_colorings() -> Checks {
    let mut c = Checks::default();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 8);
    for sample in 0..INDUCE_SAMPLES {
        let n = rng.gen_range(2..=12);
        let p = rng.gen_range(0.1..0.6);
        let g = Graph::random_connected(n, p, &mut rng);
        let (h, sc) = induce_3i_coloring(&g).unwrap();
        let el = sc.edge_labels.as_ref().unwrap();
        for (i, &(a, b)) in g.edges().iter().enumerate() {
            let meet = sc.vertex_labels[a].intersection(&sc.vertex_labels[b]);
            c.check(!meet.is_empty() && el[i].members() == meet.as_slice(), format!("sample {sample} edge {a}-{b}"));
        }
        for v in 0..n {
            let incident: Vec<&Hyperedge> =
                g.edges().iter().enumerate().filter(|(_, &(a, b))| a == v || b == v).map(|(i, _)| &el[i]).collect();
            let distinct: BTreeSet<&Hyperedge> = incident.iter().copied().collect();
            c.check(distinct.len() == incident.len(), format!("sample {sample} vertex {v} labels"));
        }
        let r = verify_ve_intersected(&sc, &h, VeOptions::default()).unwrap();
        c.check(r.pass, format!("sample {sample} ve: {r:?}"));
    }
    c
}

fn topcode() -> Checks {
    let mut c = Checks::default();
    let t = build_topcode_matrix(&fix_c_coloring()).unwrap();
    let rows = t.rows();
    c.check(rows.len() == 3 && rows.iter().all(|r| r.len() == 6), "3x6 shape");
    let e = |i: usize| Color::Set(he(FIX_C_VERTICES[i]));
    let u = |i: usize| Color::Set(he(FIX_C_EDGES[i]));
    let expected: Vec<(Color, Color, Color)> =
        all_pairs(4).iter().enumerate().map(|(i, &(a, b))| (e(a), u(i), e(b))).collect();
    c.check(t.columns == expected, "columns");
    let parts = t.split();
    c.check(parts.len() == 6 && parts.iter().all(|p| p.columns.len() == 1), "split blocks");
    c.check(TopcodeMatrix::union(&parts) == t, "union of split");
    let mut rev = parts.clone();
    rev.reverse();
    c.check(TopcodeMatrix::union(&rev).canonical() == t.canonical(), "union order invariance");
    c
}

/// Independent reading of the full W-constraint check for `γ = β − α`.
fn w_oracle(xs: &BTreeSet<u32>, es: &BTreeSet<u32>, ys: &BTreeSet<u32>) -> (Option<u32>, bool) {
    let unrealized = es.iter().copied().find(|&g| !xs.iter().any(|&a| ys.contains(&(a + g))));
    let a_ok = xs.iter().all(|&a| es.iter().any(|&g| ys.contains(&(a + g))));
    let b_ok = ys.iter().all(|&b| es.iter().any(|&g| g <= b && xs.contains(&(b - g))));
    (unrealized, a_ok && b_ok)
}

fn w_families() -> Checks {
    let mut c = Checks::default();
    for (fi, f) in fix_g().iter().enumerate() {
        let r = verify_w_constraint_hyperedge_set(&f.hypergraph, f.parts(), WConstraint::Graceful).unwrap();
        c.check(r.full, format!("E_{} full", fi + 1));
        let es = f.hypergraph.edges().edges();
        let side = |idx: &[usize]| -> Vec<Hyperedge> { idx.iter().map(|&i| es[i].clone()).collect() };
        let (x, e, y) = (side(&f.x), side(&f.e), side(&f.y));
        let mut failing = 0;
        for (part, at) in [(0usize, &x), (1, &e), (2, &y)].iter().flat_map(|(p, s)| (0..s.len()).map(move |i| (*p, i))) {
            let src = [&x, &e, &y][part];
            for &drop in src[at].members() {
                let mut sides = [x.clone(), e.clone(), y.clone()];
                let Ok(smaller) = Hyperedge::new(src[at].members().iter().copied().filter(|&v| v != drop)) else {
                    continue;
                };
                sides[part][at] = smaller;
                let Ok(pert) = WFixture::new(&sides[0], &sides[1], &sides[2]) else { continue };
                let gather = |s: &[Hyperedge]| -> BTreeSet<u32> { s.iter().flat_map(|h| h.members().to_vec()).collect() };
                let (xs, ess, ys) = (gather(&sides[0]), gather(&sides[1]), gather(&sides[2]));
                let members: BTreeSet<u32> = xs.iter().chain(&ess).chain(&ys).copied().collect();
                let gap_free = members.len() as u32 == members.last().unwrap() - members.first().unwrap() + 1;
                let ordered = xs.last() < ys.first();
                let (unrealized, cover) = w_oracle(&xs, &ess, &ys);
                let full = gap_free && ordered && unrealized.is_none() && cover;
                let r = verify_w_constraint_hyperedge_set(&pert.hypergraph, pert.parts(), WConstraint::Graceful).unwrap();
                let tag = format!("E_{} part {part}[{at}] minus {drop}", fi + 1);
                c.check(r.full == full, format!("{tag}: verdict"));
                c.check(r.w_constraint.witness == unrealized, format!("{tag}: witness {:?}", r.w_constraint.witness));
                c.check(r.interval.is_some() == gap_free && r.set_ordered == ordered, format!("{tag}: shape"));
                failing += usize::from(!full);
            }
        }
        c.check(failing > 0, format!("E_{} has failing perturbations", fi + 1));
        // 9 − 0 is the only way to reach γ = 9, and 9 sits in exactly one y-part hyperedge
        let at = y.iter().position(|h| h.contains(9)).unwrap();
        let mut ys = y.clone();
        ys[at] = Hyperedge::new(y[at].members().iter().copied().filter(|&v| v != 9)).unwrap();
        let pert = WFixture::new(&x, &e, &ys).unwrap();
        let r = verify_w_constraint_hyperedge_set(&pert.hypergraph, pert.parts(), WConstraint::Graceful).unwrap();
        c.check(!r.full && r.w_constraint.witness == Some(9), format!("E_{} without y=9: {r:?}", fi + 1));
    }
    c
}

fn complete_families() -> Checks {
    let mut c = Checks::default();
    for m in 3..=8 {
        let h = fix_f(m).unwrap();
        c.check(build_v_intersected(&h).graph == Graph::complete(m as usize), format!("K_{m}"));
        let r = verify_3i(&complement_set(&h).unwrap(), true);
        c.check(r.overall == Some(false), format!("M={m} complement fails"));
        c.check(r.intersection_failures.contains(&he(&[m])), format!("M={m} witness {{M}}"));
        if m > 3 {
            c.check(r.intersection_failures == vec![he(&[m])], format!("M={m} sole witness"));
        }
    }
    c
}

type Criterion = (&'static str, fn() -> Checks);

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        ("strong hyperedge set listings", strong_listings),
        ("cyclic k-uniform families", cyclic_families),
        ("shift family fidelity", shift_fidelity),
        ("every-zero groups", every_zero),
        ("complement laws", complement_laws),
        ("chromatic index on four vertices", chromatic_on_four),
        ("spanning tree and forest counts", counting),
        ("induced 3I colorings", induced_colorings),
        ("topcode matrix", topcode),
        ("W-constraint families", w_families),
        ("complete v-intersected graphs", complete_families),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let checks = run();
        if checks.0.is_empty() {
            println!("PASS {:>2} {name}", i + 1);
        } else {
            println!("FAIL {:>2} {name}: {}", i + 1, checks.0.join("; "));
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
