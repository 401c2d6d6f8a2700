//! Finite simple graphs on vertices `0..n`.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{precondition, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Normalises every edge to `(min, max)` and sorts; loops, out-of-range
    /// endpoints and repeated edges are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut es = Vec::new();
        for (a, b) in edges {
            if a == b {
                return precondition(format!("loop at vertex {a}"));
            }
            if a >= n || b >= n {
                return precondition(format!("edge ({a},{b}) outside 0..{n}"));
            }
            es.push((a.min(b), a.max(b)));
        }
        es.sort_unstable();
        if let Some(w) = es.windows(2).find(|w| w[0] == w[1]) {
            return precondition(format!("repeated edge ({},{})", w[0].0, w[0].1));
        }
        Ok(Graph { n, edges: es })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new() }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        Graph { n, edges }
    }

    /// `K_{m,n}` with parts `0..m` and `m..m+n`.
    pub fn complete_bipartite(m: usize, n: usize) -> Self {
        let edges = (0..m).flat_map(|a| (m..m + n).map(move |b| (a, b))).collect();
        Graph { n: m + n, edges }
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Self {
        Graph {
            n,
            edges: (1..n).map(|i| (i - 1, i)).collect(),
        }
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return precondition("cycles need at least 3 vertices");
        }
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Star with centre 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Graph {
            n: leaves + 1,
            edges: (1..=leaves).map(|i| (0, i)).collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.binary_search(&(a.min(b), a.max(b))).ok()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edge_index(a, b).is_some()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for a in adj.iter_mut() {
            a.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &v in &adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() + 1 == self.n && self.is_connected()
    }

    pub fn is_forest(&self) -> bool {
        let mut uf = UnionFind::new(self.n);
        self.edges.iter().all(|&(a, b)| uf.union(a, b))
    }

    pub fn bfs_distances(&self, s: usize) -> Vec<Option<usize>> {
        let adj = self.adjacency();
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            let du = dist[u].unwrap();
            for &v in &adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    q.push_back(v);
                }
            }
        }
        dist
    }

    /// `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for s in 0..self.n {
            for d in self.bfs_distances(s) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// 2-colouring with the smallest vertex of every component in `X`.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let adj = self.adjacency();
        let mut side = vec![usize::MAX; self.n];
        for s in 0..self.n {
            if side[s] != usize::MAX {
                continue;
            }
            side[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &v in &adj[u] {
                    if side[v] == usize::MAX {
                        side[v] = 1 - side[u];
                        q.push_back(v);
                    } else if side[v] == side[u] {
                        return None;
                    }
                }
            }
        }
        let part = |k| (0..self.n).filter(|&v| side[v] == k).collect();
        Some((part(0), part(1)))
    }

    /// Greedy colouring in vertex order; returns the colour count.
    pub fn greedy_colors(&self) -> usize {
        let adj = self.adjacency();
        let mut col = vec![usize::MAX; self.n];
        for v in 0..self.n {
            let used: Vec<usize> = adj[v].iter().map(|&u| col[u]).filter(|&c| c != usize::MAX).collect();
            col[v] = (0..).find(|c| !used.contains(c)).unwrap();
        }
        col.iter().map(|c| c + 1).max().unwrap_or(0)
    }

    /// Exact chromatic number by backtracking over vertices in decreasing degree order.
    pub fn chromatic_number(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        if self.edges.is_empty() {
            return 1;
        }
        let adj = self.adjacency();
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(adj[v].len()));
        let upper = self.greedy_colors();
        for k in 1..upper {
            let mut col = vec![usize::MAX; self.n];
            if color_rec(&adj, &order, 0, k, &mut col, 0) {
                return k;
            }
        }
        upper
    }

    pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Self {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        let edges = (1..n).map(|i| (perm[i], perm[rng.gen_range(0..i)]));
        Graph::new(n, edges).expect("tree edges are simple")
    }

    /// Random spanning tree plus each remaining pair with probability `p`.
    pub fn random_connected<R: Rng>(n: usize, p: f64, rng: &mut R) -> Self {
        let t = Self::random_tree(n, rng);
        let mut es = t.edges.clone();
        for a in 0..n {
            for b in a + 1..n {
                if !t.has_edge(a, b) && rng.gen_bool(p) {
                    es.push((a, b));
                }
            }
        }
        Graph::new(n, es).expect("simple by construction")
    }
}

fn color_rec(adj: &[Vec<usize>], order: &[usize], i: usize, k: usize, col: &mut [usize], used: usize) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    // symmetry breaking: a fresh colour is only ever the next unused one
    for c in 0..k.min(used + 1) {
        if adj[v].iter().all(|&u| col[u] != c) {
            col[v] = c;
            if color_rec(adj, order, i + 1, k, col, used.max(c + 1)) {
                return true;
            }
            col[v] = usize::MAX;
        }
    }
    false
}

/// Brute-force isomorphism with degree pruning; returns `map[a_vertex] = b_vertex`.
pub fn isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    if a.n != b.n || a.edges.len() != b.edges.len() {
        return None;
    }
    let (da, db) = (a.degrees(), b.degrees());
    let mut sa = da.clone();
    let mut sb = db.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let adj_a = a.adjacency();
    let mut map = vec![usize::MAX; a.n];
    let mut used = vec![false; a.n];

    fn rec(
        v: usize,
        a: &Graph,
        b: &Graph,
        adj_a: &[Vec<usize>],
        da: &[usize],
        db: &[usize],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if v == a.n {
            return true;
        }
        for w in 0..b.n {
            if used[w] || da[v] != db[w] {
                continue;
            }
            let consistent = adj_a[v].iter().filter(|&&u| u < v).all(|&u| b.has_edge(map[u], w))
                && (0..v).filter(|u| !adj_a[v].contains(u)).all(|u| !b.has_edge(map[u], w));
            if consistent {
                map[v] = w;
                used[w] = true;
                if rec(v + 1, a, b, adj_a, da, db, map, used) {
                    return true;
                }
                used[w] = false;
                map[v] = usize::MAX;
            }
        }
        false
    }

    rec(0, a, b, &adj_a, &da, &db, &mut map, &mut used).then_some(map)
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    /// False when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn construction_normalises() {
        let g = Graph::new(3, vec![(2, 1), (0, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert!(Graph::new(2, vec![(0, 0)]).is_err());
        assert!(Graph::new(2, vec![(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(2, vec![(0, 2)]).is_err());
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(Graph::complete(5).chromatic_number(), 5);
        assert_eq!(Graph::cycle(5).unwrap().chromatic_number(), 3);
        assert_eq!(Graph::cycle(6).unwrap().chromatic_number(), 2);
        assert_eq!(Graph::empty(3).chromatic_number(), 1);
        assert_eq!(Graph::empty(0).chromatic_number(), 0);
        // Petersen graph
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let p = Graph::new(10, outer.chain(spokes).chain(inner)).unwrap();
        assert_eq!(p.chromatic_number(), 3);
    }

    #[test]
    fn diameter_and_components() {
        assert_eq!(Graph::path(4).diameter(), Some(3));
        assert_eq!(Graph::empty(2).diameter(), None);
        assert_eq!(Graph::empty(3).components().len(), 3);
    }

    #[test]
    fn bipartition_of_path() {
        let (x, y) = Graph::path(4).bipartition().unwrap();
        assert_eq!((x, y), (vec![0, 2], vec![1, 3]));
        assert!(Graph::complete(3).bipartition().is_none());
    }

    #[test]
    fn isomorphism_of_relabelled_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let g = Graph::random_connected(7, 0.3, &mut rng);
            let mut perm: Vec<usize> = (0..7).collect();
            perm.shuffle(&mut rng);
            let h = Graph::new(7, g.edges().iter().map(|&(a, b)| (perm[a], perm[b]))).unwrap();
            let m = isomorphism(&g, &h).unwrap();
            for &(a, b) in g.edges() {
                assert!(h.has_edge(m[a], m[b]));
            }
        }
        assert!(isomorphism(&Graph::path(4), &Graph::star(3)).is_none());
    }

    #[test]
    fn random_trees_are_trees() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 1..12 {
            assert!(Graph::random_tree(n, &mut rng).is_tree());
        }
    }
}
