//! Exhaustive generation of small graphs up to isomorphism.
//!
//! Every enumerator returns one canonically labeled representative per
//! isomorphism class, sorted by canonical code.

mod canonical;
mod chromatic;
mod trees;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use canonical::{canonical_form, canonical_labeling, labeled_code, CanonicalForm, CANON_MAX_VERTICES};
pub use chromatic::{chromatic_number, clique_number, filter_by_chromatic, CHROMATIC_MAX_VERTICES};
pub use trees::{level_sequence_to_graph, FreeTrees};

pub const TREES_MAX: usize = 16;
pub const UNICYCLIC_MAX: usize = 12;
pub const CONNECTED_MAX: usize = 7;
/// Reachable only with an explicit opt-in.
pub const CONNECTED_MAX_LARGE: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Trees,
    Unicyclic,
    Connected,
    Chromatic,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::Trees => "trees",
            FamilyKind::Unicyclic => "unicyclic",
            FamilyKind::Connected => "connected",
            FamilyKind::Chromatic => "chromatic",
        })
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trees" => Ok(FamilyKind::Trees),
            "unicyclic" => Ok(FamilyKind::Unicyclic),
            "connected" => Ok(FamilyKind::Connected),
            "chromatic" => Ok(FamilyKind::Chromatic),
            other => Err(Error::Parse(format!("unknown family kind {other:?}"))),
        }
    }
}

/// A graph class to scan: all trees, unicyclic graphs or connected graphs
/// on `n` vertices, or the connected graphs with chromatic number `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
}

impl FamilySpec {
    /// `r` must be given exactly for the chromatic kind, with
    /// `3 ≤ r ≤ n − 1`.
    pub fn new(kind: FamilyKind, n: usize, r: Option<usize>) -> Result<Self> {
        match (kind, r) {
            (FamilyKind::Chromatic, Some(r)) if r >= 3 && r < n => {}
            (FamilyKind::Chromatic, Some(r)) => {
                return Err(Error::BadParams(format!("chromatic class needs 3 <= r <= n - 1, got n = {n}, r = {r}")))
            }
            (FamilyKind::Chromatic, None) => return Err(Error::BadParams("chromatic class needs r".into())),
            (_, Some(_)) => return Err(Error::BadParams(format!("r is only meaningful for the chromatic class, not {kind}"))),
            (_, None) => {}
        }
        Ok(FamilySpec { kind, n, r })
    }

    pub fn trees(n: usize) -> Self {
        FamilySpec { kind: FamilyKind::Trees, n, r: None }
    }

    pub fn unicyclic(n: usize) -> Self {
        FamilySpec { kind: FamilyKind::Unicyclic, n, r: None }
    }

    pub fn connected(n: usize) -> Self {
        FamilySpec { kind: FamilyKind::Connected, n, r: None }
    }

    pub fn chromatic(n: usize, r: usize) -> Result<Self> {
        FamilySpec::new(FamilyKind::Chromatic, n, Some(r))
    }

    /// All members, one per isomorphism class.
    pub fn enumerate(&self, allow_large: bool) -> Result<Vec<Graph>> {
        match self.kind {
            FamilyKind::Trees => enumerate_trees(self.n),
            FamilyKind::Unicyclic => enumerate_unicyclic(self.n),
            FamilyKind::Connected => enumerate_connected(self.n, allow_large),
            FamilyKind::Chromatic => {
                let r = self.r.ok_or_else(|| Error::BadParams("chromatic class needs r".into()))?;
                Ok(filter_by_chromatic(enumerate_connected(self.n, allow_large)?, r).collect())
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.r {
            Some(r) => write!(f, "{} n={} r={}", self.kind, self.n, r),
            None => write!(f, "{} n={}", self.kind, self.n),
        }
    }
}

fn cap_error(kind: &str, n: usize, cap: usize) -> Error {
    Error::EnumerationCapExceeded { kind: kind.into(), n, cap }
}

fn canonical_set<I: IntoIterator<Item = Graph>>(graphs: I) -> BTreeMap<CanonicalForm, Graph> {
    graphs
        .into_iter()
        .map(|g| {
            let c = canonical_form(&g).expect("within canonical cap");
            (c, c.to_graph())
        })
        .collect()
}

/// Free trees on `2 ≤ n ≤ 16` vertices.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if !(2..=TREES_MAX).contains(&n) {
        return Err(cap_error("trees", n, TREES_MAX));
    }
    let trees = FreeTrees::new(n).map(|seq| level_sequence_to_graph(&seq));
    Ok(canonical_set(trees).into_values().collect())
}

/// Connected unicyclic graphs on `3 ≤ n ≤ 12` vertices, built as a tree
/// plus one non-edge.
pub fn enumerate_unicyclic(n: usize) -> Result<Vec<Graph>> {
    if !(3..=UNICYCLIC_MAX).contains(&n) {
        return Err(cap_error("unicyclic", n, UNICYCLIC_MAX));
    }
    let mut out = BTreeMap::new();
    for tree in enumerate_trees(n)? {
        for (u, v) in tree.non_edges() {
            let g = tree.add_edge(u, v)?;
            let c = canonical_form(&g)?;
            out.entry(c).or_insert_with(|| c.to_graph());
        }
    }
    Ok(out.into_values().collect())
}

/// All graphs on `n` vertices, connected or not, by adding a vertex with
/// every possible neighborhood to each graph on `n − 1` vertices.
pub fn enumerate_all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > CONNECTED_MAX_LARGE {
        return Err(cap_error("all graphs", n, CONNECTED_MAX_LARGE));
    }
    let mut level: BTreeSet<CanonicalForm> = BTreeSet::new();
    level.insert(canonical_form(&Graph::empty(0)?)?);
    for m in 1..=n {
        let mut next = BTreeSet::new();
        for c in &level {
            let base = c.to_graph();
            let edges: Vec<(usize, usize)> = base.edges().collect();
            for nbrs in 0u32..(1 << (m - 1)) {
                let extra = (0..m - 1).filter(|&u| nbrs >> u & 1 == 1).map(|u| (u, m - 1));
                let g = Graph::from_edges(m, edges.iter().copied().chain(extra))?;
                next.insert(canonical_form(&g)?);
            }
        }
        level = next;
    }
    Ok(level.into_iter().map(|c| c.to_graph()).collect())
}

/// Connected graphs on `1 ≤ n ≤ 7` vertices, or `n = 8` with
/// `allow_large`.
pub fn enumerate_connected(n: usize, allow_large: bool) -> Result<Vec<Graph>> {
    let cap = if allow_large { CONNECTED_MAX_LARGE } else { CONNECTED_MAX };
    if n == 0 || n > cap {
        return Err(cap_error("connected", n, cap));
    }
    Ok(enumerate_all_graphs(n)?.into_iter().filter(Graph::is_connected).collect())
}

/// Graph whose upper-triangle pairs, in graph6 order, are the set bits of
/// `mask` (pair `(0, 1)` is bit 0).
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = (1..n).flat_map(|v| (0..v).map(move |u| (u, v)));
    let edges = pairs.enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, p)| p);
    Graph::from_edges(n, edges.collect::<Vec<_>>()).expect("pairs are valid")
}

/// Brute-force class list: every adjacency mask on `n ≤ 7` vertices,
/// filtered to connected graphs (with exactly `edges` edges if given),
/// deduplicated by canonical form.
pub fn scan_connected_masks(n: usize, edges: Option<usize>) -> Result<Vec<Graph>> {
    if n == 0 || n > CONNECTED_MAX {
        return Err(cap_error("mask scan", n, CONNECTED_MAX));
    }
    let pairs = n * (n - 1) / 2;
    let mut out = BTreeSet::new();
    for mask in 0u64..(1 << pairs) {
        if edges.is_some_and(|e| mask.count_ones() as usize != e) {
            continue;
        }
        let g = graph_from_mask(n, mask);
        if g.is_connected() {
            out.insert(canonical_form(&g)?);
        }
    }
    Ok(out.into_iter().map(|c| c.to_graph()).collect())
}
