//! Canonical forms for small graphs.
//!
//! The search individualizes vertices of the first non-singleton cell of an
//! equitable ordered partition and refines, as in the usual
//! individualization-refinement scheme. Every leaf gives a vertex ordering;
//! the canonical code is the smallest upper-triangular adjacency bit string
//! over the leaves. Twin vertices (equal neighborhoods apart from each
//! other) inside a cell lead to identical subtrees, so only one per twin
//! class is explored.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::format::{from_graph6, to_graph6};
use crate::graph::Graph;

/// Largest order accepted by [`canonical_form`]; the code must fit a `u128`.
pub const CANON_MAX_VERTICES: usize = 16;

/// Isomorphism-class key: the minimal adjacency code over the search
/// leaves. Bit order follows graph6, with pair `(0, 1)` as the most
/// significant bit.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: u8,
    code: u128,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn code(&self) -> u128 {
        self.code
    }

    /// The canonically labeled representative.
    pub fn to_graph(&self) -> Graph {
        decode(self.n(), self.code)
    }

    pub fn to_graph6(&self) -> String {
        to_graph6(&self.to_graph())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_graph6())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_graph6())
    }
}

impl<'de> Deserialize<'de> for CanonicalForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        let g = from_graph6(&text).map_err(serde::de::Error::custom)?;
        canonical_form(&g).map_err(serde::de::Error::custom)
    }
}

/// Adjacency code of `g` under the ordering `order` (position -> vertex).
fn encode(g: &Graph, order: &[usize]) -> u128 {
    let mut code = 0u128;
    for j in 1..order.len() {
        let row = g.neighbors(order[j]);
        for &u in &order[..j] {
            code = code << 1 | (row >> u & 1) as u128;
        }
    }
    code
}

fn decode(n: usize, code: u128) -> Graph {
    let bits = n * n.saturating_sub(1) / 2;
    let mut k = bits;
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            k -= 1;
            if code >> k & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("canonical code decodes to a valid graph")
}

/// Adjacency code of `g` as labeled, without any search.
pub fn labeled_code(g: &Graph) -> u128 {
    let order: Vec<usize> = (0..g.n()).collect();
    encode(g, &order)
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|(c, _)| c)
}

/// Canonical form plus a relabeling `perm` (old vertex -> new label) with
/// `g.permute(perm)` equal to `form.to_graph()`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.n();
    if n > CANON_MAX_VERTICES {
        return Err(Error::TooLarge { n, max: CANON_MAX_VERTICES });
    }
    let mut best: Option<(u128, Vec<usize>)> = None;
    search(g, initial_partition(g), &mut best);
    let (code, order) = best.unwrap_or((0, Vec::new()));
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok((CanonicalForm { n: n as u8, code }, perm))
}

/// Cells ordered by (degree, BFS layer sizes).
fn initial_partition(g: &Graph) -> Vec<Vec<usize>> {
    let mut keyed: Vec<((usize, Vec<u32>), usize)> = (0..g.n())
        .map(|v| {
            let layers = g.bfs_layers(v).iter().map(|l| l.count_ones()).collect();
            ((g.degree(v), layers), v)
        })
        .collect();
    keyed.sort();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for (i, (key, v)) in keyed.iter().enumerate() {
        if i > 0 && keyed[i - 1].0 == *key {
            cells.last_mut().unwrap().push(*v);
        } else {
            cells.push(vec![*v]);
        }
    }
    cells
}

/// Splits cells by neighbor counts into every cell until the partition is
/// equitable. Sub-cells are ordered by their count vectors, so the result
/// commutes with relabeling.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u32> = cells.iter().map(|c| c.iter().fold(0, |m, &v| m | 1 << v)).collect();
        let mut next = Vec::with_capacity(g.n());
        let mut split = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|m| (g.neighbors(v) & m).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let before = next.len();
            for (i, (key, v)) in keyed.iter().enumerate() {
                if i > 0 && keyed[i - 1].0 == *key {
                    if let Some(c) = next.last_mut() { c.push(*v) }
                } else {
                    next.push(vec![*v]);
                }
            }
            split |= next.len() - before > 1;
        }
        cells = next;
        if !split {
            return cells;
        }
    }
}

fn is_twin(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u) & !(1 << v) == g.neighbors(v) & !(1 << u)
}

fn search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<(u128, Vec<usize>)>) {
    let cells = refine(g, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.into_iter().flatten().collect();
        let code = encode(g, &order);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, order));
        }
        return;
    };
    let mut reps: Vec<usize> = Vec::new();
    for &v in &cells[target] {
        if reps.iter().any(|&r| is_twin(g, r, v)) {
            continue;
        }
        reps.push(v);
        let mut branch = Vec::with_capacity(cells.len() + 1);
        branch.extend_from_slice(&cells[..target]);
        branch.push(vec![v]);
        branch.push(cells[target].iter().copied().filter(|&w| w != v).collect());
        branch.extend_from_slice(&cells[target + 1..]);
        search(g, branch, best);
    }
}
