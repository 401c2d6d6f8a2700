//! Vertex splitting and coinciding, tree edge exchange, and spanning
//! tree / forest counts.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{limit, precondition, Error, Result};
use crate::graph::Graph;

pub const SPANNING_TREE_LIMIT: usize = 64;
pub const FOREST_LIMIT: usize = 30;

/// `G ∧ u`: `u` keeps the neighbours in `parts.0`, a new vertex `n` takes `parts.1`.
pub fn vertex_split(g: &Graph, u: usize, parts: (&[usize], &[usize])) -> Result<Graph> {
    let n = g.vertex_count();
    if u >= n {
        return Err(Error::IndexOutOfRange { index: u, len: n });
    }
    let nbrs: BTreeSet<usize> = g.adjacency()[u].iter().copied().collect();
    if nbrs.len() < 2 {
        return precondition(format!("vertex {u} has degree {} < 2", nbrs.len()));
    }
    let a: BTreeSet<usize> = parts.0.iter().copied().collect();
    let b: BTreeSet<usize> = parts.1.iter().copied().collect();
    let covers = a.union(&b).copied().collect::<BTreeSet<_>>() == nbrs;
    if a.is_empty() || b.is_empty() || !a.is_disjoint(&b) || !covers || a.len() + b.len() != parts.0.len() + parts.1.len() {
        return precondition(format!("parts do not partition the neighbourhood of {u}"));
    }
    let edges = g.edges().iter().map(|&(x, y)| {
        if (x == u && b.contains(&y)) || (y == u && b.contains(&x)) {
            (if x == u { y } else { x }, n)
        } else {
            (x, y)
        }
    });
    Graph::new(n + 1, edges)
}

/// Merges non-adjacent `a`, `b` without common neighbours into `min(a,b)`;
/// vertices above `max(a,b)` shift down by one.
pub fn vertex_coincide(g: &Graph, a: usize, b: usize) -> Result<Graph> {
    let n = g.vertex_count();
    for v in [a, b] {
        if v >= n {
            return Err(Error::IndexOutOfRange { index: v, len: n });
        }
    }
    if a == b {
        return precondition("cannot coincide a vertex with itself");
    }
    if g.has_edge(a, b) {
        return precondition(format!("{a} and {b} are adjacent"));
    }
    let adj = g.adjacency();
    if let Some(c) = adj[a].iter().find(|c| adj[b].contains(c)) {
        return precondition(format!("{a} and {b} share the neighbour {c}"));
    }
    let (keep, gone) = (a.min(b), a.max(b));
    let relabel = |v: usize| match v.cmp(&gone) {
        std::cmp::Ordering::Less => v,
        std::cmp::Ordering::Equal => keep,
        std::cmp::Ordering::Greater => v - 1,
    };
    Graph::new(n - 1, g.edges().iter().map(|&(x, y)| (relabel(x), relabel(y))))
}

/// `T + add − remove`, which must again be a tree.
pub fn adding_edge_removing(t: &Graph, add: (usize, usize), remove: (usize, usize)) -> Result<Graph> {
    if !t.is_tree() {
        return precondition("input is not a tree");
    }
    if t.has_edge(add.0, add.1) {
        return precondition(format!("({},{}) is already an edge", add.0, add.1));
    }
    if !t.has_edge(remove.0, remove.1) {
        return precondition(format!("({},{}) is not an edge", remove.0, remove.1));
    }
    let r = (remove.0.min(remove.1), remove.0.max(remove.1));
    let edges = t.edges().iter().copied().filter(|&e| e != r).chain([add]);
    let out = Graph::new(t.vertex_count(), edges)?;
    if !out.is_tree() {
        return precondition("result is not a tree");
    }
    Ok(out)
}

/// Matrix-tree theorem: determinant of the reduced Laplacian by fraction-free elimination.
pub fn spanning_tree_count(g: &Graph) -> Result<BigInt> {
    let n = g.vertex_count();
    limit("graph", n, SPANNING_TREE_LIMIT)?;
    if n <= 1 {
        return Ok(BigInt::from(n));
    }
    let m = n - 1;
    let mut a = vec![vec![BigInt::zero(); m]; m];
    for &(x, y) in g.edges() {
        for (p, q) in [(x, y), (y, x)] {
            if p < m {
                a[p][p] += 1;
                if q < m {
                    a[p][q] -= 1;
                }
            }
        }
    }
    Ok(bareiss_determinant(a))
}

fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let m = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..m {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..m).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..m {
            for j in k + 1..m {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[m - 1][m - 1]
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Labelled forests on `n` vertices:
/// `n!/(n+1) · Σ_k (−1)^k (2k+1)(n+1)^{n−2k} / (2^k k! (n−2k)!)`.
pub fn forest_count(n: usize) -> Result<BigInt> {
    limit("n", n, FOREST_LIMIT)?;
    let n1 = BigInt::from(n + 1);
    let mut sum = BigRational::zero();
    for k in 0..=n / 2 {
        let num = BigInt::from(2 * k + 1) * n1.pow((n - 2 * k) as u32);
        let den = BigInt::from(2).pow(k as u32) * factorial(k) * factorial(n - 2 * k);
        let term = BigRational::new(num, den);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let total = BigRational::new(factorial(n), n1) * sum;
    if !total.is_integer() {
        return Err(Error::Internal(format!("forest sum for n = {n} is not an integer")));
    }
    Ok(total.to_integer())
}

/// The `k = 0` term alone, `(n+1)^{n−1}` (trees on `n + 1` vertices).
pub fn forest_leading_term(n: usize) -> BigRational {
    let n1 = BigInt::from(n + 1);
    BigRational::new(factorial(n), n1.clone()) * BigRational::new(n1.pow(n as u32), factorial(n))
}

/// `n^{n−2}`, exact.
pub fn cayley(n: u32) -> BigInt {
    if n < 2 {
        return BigInt::one();
    }
    BigInt::from(n).pow(n - 2)
}

/// `m^{n−1} n^{m−1}`, exact.
pub fn bipartite_tree_formula(m: u32, n: u32) -> BigInt {
    if m == 0 || n == 0 {
        return BigInt::zero();
    }
    BigInt::from(m).pow(n - 1) * BigInt::from(n).pow(m - 1)
}

/// Digits with `,` every three places.
pub fn group_digits(x: &BigInt) -> String {
    let s = x.abs().to_string();
    let mut out = String::new();
    for (i, c) in s.chars().enumerate() {
        if i > 0 && (s.len() - i).is_multiple_of(3) {
            out.push(',');
        }
        out.push(c);
    }
    if x.is_negative() {
        out.insert(0, '-');
    }
    out
}
