//! Independent reference implementations used only by the integration
//! tests. Nothing here calls into the library's own algorithms beyond the
//! `Graph` container.

#![allow(dead_code)]

use std::collections::BTreeSet;

use dalpha_core::Graph;
use nalgebra::DMatrix;

/// Every permutation of `0..n`, in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Upper-triangle bit string of the adjacency matrix after relabeling
/// `v -> perm[v]`, column by column.
fn code_under(g: &Graph, perm: &[usize]) -> Vec<bool> {
    let n = g.n();
    let mut inv = vec![0; n];
    for (old, &new) in perm.iter().enumerate() {
        inv[new] = old;
    }
    let mut bits = Vec::with_capacity(n * (n - 1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(inv[i], inv[j]));
        }
    }
    bits
}

/// Lexicographically smallest code over all `n!` relabelings.
pub fn brute_invariant(g: &Graph, perms: &[Vec<usize>]) -> Vec<bool> {
    perms.iter().map(|p| code_under(g, p)).min().unwrap_or_default()
}

pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && {
        let target = code_under(b, &(0..b.n()).collect::<Vec<_>>());
        permutations(a.n()).iter().any(|p| code_under(a, p) == target)
    }
}

/// Number of isomorphism classes in `graphs`.
pub fn count_classes(graphs: &[Graph]) -> usize {
    let Some(first) = graphs.first() else { return 0 };
    let perms = permutations(first.n());
    graphs.iter().map(|g| brute_invariant(g, &perms)).collect::<BTreeSet<_>>().len()
}

pub fn connected_bfs(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if g.has_edge(u, v) && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// All labeled graphs on `n` vertices, one per edge subset.
pub fn all_labeled(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
            Graph::from_edges(n, edges).unwrap()
        })
        .collect()
}

/// All `n^(n-2)` labeled trees, decoded from Prüfer sequences.
pub fn prufer_trees(n: usize) -> Vec<Graph> {
    assert!(n >= 2);
    if n == 2 {
        return vec![Graph::from_edges(2, [(0, 1)]).unwrap()];
    }
    let total = n.pow(n as u32 - 2);
    let mut out = Vec::with_capacity(total);
    for mut code in 0..total {
        let mut seq = Vec::with_capacity(n - 2);
        for _ in 0..n - 2 {
            seq.push(code % n);
            code /= n;
        }
        let mut degree = vec![1usize; n];
        for &s in &seq {
            degree[s] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        for &s in &seq {
            let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
            edges.push((leaf, s));
            degree[leaf] -= 1;
            degree[s] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        edges.push((rest[0], rest[1]));
        out.push(Graph::from_edges(n, edges).unwrap());
    }
    out
}

/// Smallest k such that some map `V -> 0..k` is a proper coloring, by
/// trying every map.
pub fn brute_chromatic(g: &Graph) -> usize {
    let n = g.n();
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| g.has_edge(u, v)).collect();
    if edges.is_empty() {
        return n.min(1);
    }
    for k in 2..=n {
        let mut color = vec![0usize; n];
        loop {
            if edges.iter().all(|&(u, v)| color[u] != color[v]) {
                return k;
            }
            let mut i = 0;
            while i < n && color[i] == k - 1 {
                color[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            color[i] += 1;
        }
    }
    n
}

/// All-pairs distances by Floyd–Warshall.
pub fn floyd(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.n();
    let mut d = vec![vec![f64::INFINITY; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0.0;
        for v in 0..n {
            if g.has_edge(u, v) {
                row[v] = 1.0;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

pub fn d_alpha_dense(g: &Graph, alpha: f64) -> DMatrix<f64> {
    let d = floyd(g);
    let n = g.n();
    DMatrix::from_fn(n, n, |i, j| {
        let off = (1.0 - alpha) * d[i][j];
        if i == j {
            alpha * d[i].iter().sum::<f64>()
        } else {
            off
        }
    })
}

/// Largest eigenvalue of `D_α(G)` from a dense symmetric eigensolver.
pub fn eig_rho(g: &Graph, alpha: f64) -> f64 {
    d_alpha_dense(g, alpha).symmetric_eigen().eigenvalues.iter().copied().fold(f64::NEG_INFINITY, f64::max)
}

/// Whether swapping `u` and `v` is an automorphism.
pub fn transposition_is_automorphism(g: &Graph, u: usize, v: usize) -> bool {
    let swap = |x: usize| if x == u { v } else if x == v { u } else { x };
    (0..g.n()).all(|a| (0..g.n()).all(|b| g.has_edge(a, b) == g.has_edge(swap(a), swap(b))))
}

/// Every connected graph with 2 ≤ n ≤ `max_n` vertices, one per class.
pub fn connected_suite(max_n: usize) -> Vec<Graph> {
    (2..=max_n).flat_map(|n| dalpha_core::enumeration::enumerate_connected(n, false).unwrap()).collect()
}
