//! Definition-literal reference implementations over adjacency matrices.
//! Nothing here touches bitsets or the library's algorithms.

#![allow(dead_code)]

use rand::Rng;
use squadgraph::{Digraph, UGraph};

pub type Adj = Vec<Vec<bool>>;

pub fn adj_of(d: &Digraph) -> Adj {
    let n = d.order();
    (0..n).map(|u| (0..n).map(|v| d.has_arc(u, v)).collect()).collect()
}

pub fn adj_of_graph(g: &UGraph) -> Adj {
    let n = g.order();
    (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect()
}

pub fn transpose(a: &Adj) -> Adj {
    let n = a.len();
    (0..n).map(|u| (0..n).map(|v| a[v][u]).collect()).collect()
}

pub fn random_digraph(rng: &mut impl Rng, n: usize, p: f64, loops: bool) -> Digraph {
    let mut d = Digraph::new(n).unwrap();
    for u in 0..n {
        for v in 0..n {
            if (u != v || loops) && rng.gen_bool(p) {
                d.add_arc(u, v).unwrap();
            }
        }
    }
    d
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> UGraph {
    let mut g = UGraph::new(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
}

/// Every ordered pair joined by a directed path (Warshall closure).
pub fn strong(a: &Adj) -> bool {
    let n = a.len();
    let mut r = a.clone();
    for (i, row) in r.iter_mut().enumerate() {
        row[i] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if r[i][k] && r[k][j] {
                    r[i][j] = true;
                }
            }
        }
    }
    r.iter().all(|row| row.iter().all(|&x| x))
}

fn common(a: &Adj, u: usize, v: usize) -> Vec<usize> {
    (0..a.len()).filter(|&w| a[u][w] && a[v][w]).collect()
}

/// `|S| >= 2` and every `u` in `S` shares an out-neighbour with some other `v` in `S`.
pub fn is_q_set(a: &Adj, s: &[usize]) -> bool {
    s.len() >= 2
        && s.iter()
            .all(|&u| s.iter().any(|&v| v != u && !common(a, u, v).is_empty()))
}

fn side_ok(a: &Adj) -> bool {
    subsets(a.len()).filter(|s| is_q_set(a, s)).all(|s| {
        let mut union = vec![false; a.len()];
        for &u in &s {
            for &v in &s {
                if u != v {
                    for w in common(a, u, v) {
                        union[w] = true;
                    }
                }
            }
        }
        union.iter().filter(|&&x| x).count() >= s.len()
    })
}

/// The q+ condition on `a` and the q- condition (q+ on the transpose).
pub fn s_quadrangular(a: &Adj) -> bool {
    side_ok(a) && side_ok(&transpose(a))
}

fn permutations(items: Vec<usize>) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items];
    }
    let mut all = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.clone();
        let x = rest.remove(i);
        for mut p in permutations(rest) {
            p.insert(0, x);
            all.push(p);
        }
    }
    all
}

/// Some ordering `0, p1, .., p_{n-1}` closes into a cycle. Requires `n >= 2`.
pub fn hamiltonian(a: &Adj) -> bool {
    let n = a.len();
    permutations((1..n).collect()).into_iter().any(|p| {
        let mut tour = vec![0];
        tour.extend(p);
        (0..n).all(|i| {
            let (x, y) = (tour[i], tour[(i + 1) % n]);
            x != y && a[x][y]
        })
    })
}

/// Hall's condition on loopless out-neighbourhoods: `|N+(X) - loops| >= |X|` for all X.
pub fn hall_holds(a: &Adj) -> bool {
    let n = a.len();
    subsets(n).all(|x| {
        let nb = (0..n).filter(|&w| x.iter().any(|&u| u != w && a[u][w])).count();
        nb >= x.len()
    })
}

/// A fixed-point-free permutation `s` with `u -> s(u)` for all `u`.
pub fn has_derangement_cover(a: &Adj) -> bool {
    let n = a.len();
    permutations((0..n).collect())
        .into_iter()
        .any(|s| (0..n).all(|u| s[u] != u && a[u][s[u]]))
}

/// Brute force over edge subsets: some subset meets every degree target exactly.
pub fn has_f_factor(g: &UGraph, f: &[u32]) -> bool {
    let edges: Vec<_> = g.edges().collect();
    assert!(edges.len() <= 22, "too many edges for brute force");
    (0u32..1 << edges.len()).any(|m| {
        let mut deg = vec![0u32; g.order()];
        for (k, &(u, v)) in edges.iter().enumerate() {
            if m >> k & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        deg == f
    })
}

/// Tutte's f-factor condition by direct evaluation over all disjoint `(S, T)`.
/// Returns the largest `lhs - rhs` (negative or zero when it holds).
pub fn tutte_excess(a: &Adj, f: &[u32]) -> i64 {
    let n = a.len();
    let mut best = i64::MIN;
    let mut code = vec![0u8; n];
    loop {
        let s: Vec<_> = (0..n).filter(|&i| code[i] == 1).collect();
        let t: Vec<_> = (0..n).filter(|&i| code[i] == 2).collect();
        let rest: Vec<_> = (0..n).filter(|&i| code[i] == 0).collect();
        // components of G - S - T by flood fill
        let mut comp = vec![usize::MAX; n];
        let mut q = 0usize;
        for &r in &rest {
            if comp[r] != usize::MAX {
                continue;
            }
            let mut stack = vec![r];
            comp[r] = r;
            let mut weight = 0i64;
            while let Some(x) = stack.pop() {
                weight += f[x] as i64 + t.iter().filter(|&&y| a[x][y]).count() as i64;
                for &y in &rest {
                    if a[x][y] && comp[y] == usize::MAX {
                        comp[y] = r;
                        stack.push(y);
                    }
                }
            }
            if weight % 2 == 1 {
                q += 1;
            }
        }
        let deficit: i64 = t
            .iter()
            .map(|&y| f[y] as i64 - (0..n).filter(|&x| code[x] != 1 && a[y][x]).count() as i64)
            .sum();
        let rhs: i64 = s.iter().map(|&x| f[x] as i64).sum();
        best = best.max(q as i64 + deficit - rhs);
        let mut i = 0;
        while i < n && code[i] == 2 {
            code[i] = 0;
            i += 1;
        }
        if i == n {
            return best;
        }
        code[i] += 1;
    }
}
