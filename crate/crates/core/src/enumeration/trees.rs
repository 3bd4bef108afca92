//! Free trees by the Wright–Richmond–Odlyzko–McKay level-sequence
//! successor algorithm.
//!
//! A rooted tree is stored as its level sequence: vertex `i` in preorder
//! sits at depth `seq[i]`. Rooted trees are stepped through with the
//! Beyer–Hedetniemi successor; the free-tree layer only keeps sequences
//! rooted at a center with the canonical left subtree, and jumps over runs
//! of rejected sequences.

use crate::graph::Graph;

/// Iterator over one level sequence per isomorphism class of free trees
/// on `n ≥ 2` vertices.
pub struct FreeTrees {
    next: Option<Vec<usize>>,
}

impl FreeTrees {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "free trees need at least two vertices");
        // The path rooted at its center.
        let mut seq: Vec<usize> = (0..=n / 2).collect();
        seq.extend(1..n.div_ceil(2));
        FreeTrees { next: Some(seq) }
    }
}

impl Iterator for FreeTrees {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let candidate = self.next.take()?;
        let tree = next_free_tree(candidate);
        self.next = next_rooted_tree(&tree, None);
        Some(tree)
    }
}

/// Beyer–Hedetniemi successor. `p` defaults to the last position with
/// depth greater than 1.
fn next_rooted_tree(prev: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = prev.len() - 1;
            while prev[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while prev[q] != prev[p] - 1 {
        q -= 1;
    }
    let mut next = prev.to_vec();
    for i in p..next.len() {
        next[i] = next[i - p + q];
    }
    Some(next)
}

/// Splits a level sequence into the first subtree of the root (depths
/// shifted up by one) and the remainder rooted at the original root.
fn split_tree(seq: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = seq.iter().enumerate().skip(1).filter(|(_, &d)| d == 1).nth(1).map_or(seq.len(), |(i, _)| i);
    let left = seq[1..m].iter().map(|d| d - 1).collect();
    let mut rest = vec![0];
    rest.extend_from_slice(&seq[m..]);
    (left, rest)
}

fn next_free_tree(candidate: Vec<usize>) -> Vec<usize> {
    let (left, rest) = split_tree(&candidate);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    let mut valid = rest_height >= left_height;
    if valid && rest_height == left_height
        && (left.len() > rest.len() || (left.len() == rest.len() && left > rest)) {
            valid = false;
        }
    if valid {
        return candidate;
    }
    let p = left.len();
    let mut next = next_rooted_tree(&candidate, Some(p)).expect("p > 0");
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&next);
        let new_left_height = new_left.iter().copied().max().unwrap_or(0);
        let len = next.len();
        for (k, slot) in next[len - (new_left_height + 1)..].iter_mut().enumerate() {
            *slot = k + 1;
        }
    }
    next
}

/// Graph of a level sequence: each vertex joins the nearest earlier vertex
/// one level up.
pub fn level_sequence_to_graph(seq: &[usize]) -> Graph {
    let mut stack: Vec<usize> = Vec::new();
    let mut edges = Vec::with_capacity(seq.len().saturating_sub(1));
    for (i, &depth) in seq.iter().enumerate() {
        while let Some(&top) = stack.last() {
            if seq[top] >= depth {
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&parent) = stack.last() {
            edges.push((parent, i));
        }
        stack.push(i);
    }
    Graph::from_edges(seq.len(), edges).expect("level sequence gives a tree")
}
