//! Simple undirected graphs on at most 32 vertices, with all-pairs
//! distances, transmissions and the Wiener index.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count; one adjacency row fits a `u32`.
pub const MAX_VERTICES: usize = 32;

/// Immutable simple graph. Row `v` of `adj` is the neighbor bitset of `v`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u8,
    adj: [u32; MAX_VERTICES],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph { n: n as u8, adj: [0; MAX_VERTICES] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_pair(u, v)?;
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Builds a graph from neighbor bitsets. Rows must be symmetric and
    /// loop-free.
    pub fn from_rows(rows: &[u32]) -> Result<Self> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        let valid = if n == MAX_VERTICES { u32::MAX } else { (1u32 << n) - 1 };
        for (v, &row) in rows.iter().enumerate() {
            if row & !valid != 0 {
                return Err(Error::VertexOutOfRange { v: 31 - (row & !valid).leading_zeros() as usize, n });
            }
            if row & (1 << v) != 0 {
                return Err(Error::SelfLoop(v));
            }
            g.adj[v] = row;
        }
        for u in 0..n {
            for v in 0..n {
                if g.has_edge(u, v) != g.has_edge(v, u) {
                    return Err(Error::Parse(format!("adjacency is not symmetric at ({u}, {v})")));
                }
            }
        }
        Ok(g)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { v: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighbor bitset of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u32 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u32] {
        &self.adj[..self.n()]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` then `u`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n();
        (1..n).flat_map(move |v| (0..v).filter(move |&u| self.has_edge(u, v)).map(move |u| (u, v)))
    }

    /// Unordered vertex pairs that are not edges.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n();
        (1..n).flat_map(move |v| (0..v).filter(move |&u| !self.has_edge(u, v)).map(move |u| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.edge_count() == n * n.saturating_sub(1) / 2
    }

    /// Returns `g + uv`, leaving `self` untouched.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Err(Error::EdgeExists(u, v));
        }
        let mut g = *self;
        g.adj[u] |= 1 << v;
        g.adj[v] |= 1 << u;
        Ok(g)
    }

    /// Relabels vertices so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        if perm.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: perm.len() });
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= n || seen >> p & 1 == 1 {
                return Err(Error::BadParams(format!("{perm:?} is not a permutation")));
            }
            seen |= 1 << p;
        }
        Ok(self.permute_unchecked(perm))
    }

    pub(crate) fn permute_unchecked(&self, perm: &[usize]) -> Graph {
        let mut g = Graph { n: self.n, adj: [0; MAX_VERTICES] };
        for (u, v) in self.edges() {
            g.adj[perm[u]] |= 1 << perm[v];
            g.adj[perm[v]] |= 1 << perm[u];
        }
        g
    }

    /// Breadth-first layers from `source` as bitsets; unreachable vertices
    /// appear in no layer.
    pub fn bfs_layers(&self, source: usize) -> Vec<u32> {
        let mut layers = vec![1u32 << source];
        let mut seen = 1u32 << source;
        loop {
            let mut next = 0u32;
            let mut frontier = *layers.last().unwrap();
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                next |= self.adj[v];
            }
            next &= !seen;
            if next == 0 {
                return layers;
            }
            seen |= next;
            layers.push(next);
        }
    }

    /// True iff BFS from vertex 0 reaches every vertex. The empty graph and
    /// `K_1` count as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n <= 1 {
            return true;
        }
        let reached: u32 = self.bfs_layers(0).iter().fold(0, |acc, l| acc | l);
        reached.count_ones() as usize == n
    }

    pub fn distance_profile(&self) -> Result<DistanceProfile> {
        DistanceProfile::new(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// All-pairs hop distances of a connected graph with the derived
/// transmissions and Wiener index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceProfile {
    n: usize,
    dist: Vec<u32>,
    trans: Vec<u64>,
    wiener: u64,
}

impl DistanceProfile {
    fn new(g: &Graph) -> Result<Self> {
        let n = g.n();
        let mut dist = vec![0u32; n * n];
        for s in 0..n {
            let layers = g.bfs_layers(s);
            let mut reached = 0usize;
            for (d, &layer) in layers.iter().enumerate() {
                let mut bits = layer;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    dist[s * n + v] = d as u32;
                    reached += 1;
                }
            }
            if reached != n {
                return Err(Error::DisconnectedGraph);
            }
        }
        let trans: Vec<u64> = dist.chunks(n.max(1)).take(n).map(|row| row.iter().map(|&d| d as u64).sum()).collect();
        let total: u64 = trans.iter().sum();
        debug_assert!(total.is_multiple_of(2));
        Ok(DistanceProfile { n, dist, trans, wiener: total / 2 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    /// Transmission of every vertex: the sum of its distances to all others.
    pub fn transmissions(&self) -> &[u64] {
        &self.trans
    }

    pub fn transmission(&self, v: usize) -> u64 {
        self.trans[v]
    }

    pub fn wiener(&self) -> u64 {
        self.wiener
    }

    pub fn is_transmission_regular(&self) -> bool {
        self.trans.windows(2).all(|w| w[0] == w[1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    fn star(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (0, v))).unwrap()
    }

    #[test]
    fn connectivity() {
        assert!(path(4).is_connected());
        assert!(!Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn star_profile() {
        let p = star(5).distance_profile().unwrap();
        assert_eq!(p.transmissions(), &[4, 7, 7, 7, 7]);
        assert_eq!(p.wiener(), 16);
        assert!(!p.is_transmission_regular());
    }

    #[test]
    fn star_plus_wiener() {
        let g = star(6).add_edge(1, 2).unwrap();
        assert_eq!(g.distance_profile().unwrap().wiener(), 24);
    }

    #[test]
    fn complete_profile() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let p = k4.distance_profile().unwrap();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(p.dist(u, v), u32::from(u != v));
            }
        }
        assert_eq!(p.transmissions(), &[3, 3, 3, 3]);
        assert_eq!(p.wiener(), 6);
    }

    #[test]
    fn cycle_is_transmission_regular() {
        let c5 = Graph::from_edges(5, (0..5).map(|v| (v, (v + 1) % 5))).unwrap();
        assert!(c5.distance_profile().unwrap().is_transmission_regular());
    }

    #[test]
    fn disconnected_profile_is_an_error() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.distance_profile(), Err(Error::DisconnectedGraph));
    }

    #[test]
    fn add_edge_cases() {
        let s4 = star(4);
        let plus = s4.add_edge(1, 2).unwrap();
        assert_eq!(plus.edge_count(), 4);
        assert_eq!(s4.edge_count(), 3);
        let c3 = path(3).add_edge(0, 2).unwrap();
        assert!(c3.is_complete());
        assert_eq!(s4.add_edge(0, 1), Err(Error::EdgeExists(0, 1)));
        assert_eq!(s4.add_edge(2, 2), Err(Error::SelfLoop(2)));
        assert!(matches!(s4.add_edge(0, 9), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn vertex_cap() {
        assert!(Graph::empty(32).is_ok());
        assert!(matches!(Graph::empty(33), Err(Error::TooManyVertices { .. })));
        let big = path(32);
        assert_eq!(big.distance_profile().unwrap().dist(0, 31), 31);
    }

    #[test]
    fn from_rows_rejects_asymmetry() {
        assert!(Graph::from_rows(&[0b10, 0b00]).is_err());
        assert!(Graph::from_rows(&[0b01]).is_err());
        assert_eq!(Graph::from_rows(&[0b10, 0b01]).unwrap(), path(2));
    }
}
