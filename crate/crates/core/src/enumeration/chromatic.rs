use crate::error::{Error, Result};
use crate::graph::Graph;

pub const CHROMATIC_MAX_VERTICES: usize = 16;

/// Exact chromatic number: try k-colorability by backtracking for
/// k = ω(G), ω(G) + 1, ..., with vertices ordered by decreasing degree.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > CHROMATIC_MAX_VERTICES {
        return Err(Error::TooLarge { n, max: CHROMATIC_MAX_VERTICES });
    }
    if n == 0 {
        return Ok(0);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut colors = vec![usize::MAX; n];
    let mut k = clique_number(g);
    loop {
        if extend_coloring(g, &order, 0, k, 0, &mut colors) {
            return Ok(k);
        }
        k += 1;
    }
}

/// Assigns colors to `order[pos..]`. A vertex may open at most one new
/// color beyond those already used, which removes color permutations.
fn extend_coloring(g: &Graph, order: &[usize], pos: usize, k: usize, used: usize, colors: &mut [usize]) -> bool {
    let Some(&v) = order.get(pos) else {
        return true;
    };
    let limit = k.min(used + 1);
    for c in 0..limit {
        let mut nb = g.neighbors(v);
        let mut clash = false;
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if colors[u] == c {
                clash = true;
                break;
            }
        }
        if clash {
            continue;
        }
        colors[v] = c;
        if extend_coloring(g, order, pos + 1, k, used.max(c + 1), colors) {
            colors[v] = usize::MAX;
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}

/// Size of a largest clique.
pub fn clique_number(g: &Graph) -> usize {
    fn grow(g: &Graph, size: usize, mut candidates: u32, best: &mut usize) {
        if candidates == 0 {
            *best = (*best).max(size);
            return;
        }
        while candidates != 0 {
            if size + candidates.count_ones() as usize <= *best {
                return;
            }
            let v = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            grow(g, size + 1, candidates & g.neighbors(v), best);
        }
    }
    let n = g.n();
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut best = 0;
    grow(g, 0, all, &mut best);
    best
}

pub fn filter_by_chromatic<I>(graphs: I, r: usize) -> impl Iterator<Item = Graph>
where
    I: IntoIterator<Item = Graph>,
{
    graphs.into_iter().filter(move |g| chromatic_number(g) == Ok(r))
}
