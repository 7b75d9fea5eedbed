//! Exhaustive isomorphism, canonical labeling and subgraph embedding for
//! small graphs.

use crate::error::{Error, Result};
use crate::graph::{BitIter, Multigraph, Permutation, SimpleGraph, WeightMatrix};
use crate::graph6::to_graph6;

/// Largest order accepted by the permutation searches in this module.
pub const SEARCH_LIMIT: usize = 8;

fn check_limit(n: usize) -> Result<()> {
    if n > SEARCH_LIMIT {
        Err(Error::SizeLimit {
            n,
            limit: SEARCH_LIMIT,
        })
    } else {
        Ok(())
    }
}

struct CanonSearch<'a> {
    g: &'a SimpleGraph,
    n: usize,
    total_bits: u32,
    best: u64,
    best_order: Vec<usize>,
    order: Vec<usize>,
}

impl CanonSearch<'_> {
    /// The bits contributed by placing `v` at position `order.len()`:
    /// adjacency to each already placed vertex, first placed is most significant.
    fn chunk(&self, v: usize) -> u64 {
        self.order
            .iter()
            .fold(0u64, |acc, &u| acc << 1 | self.g.has_edge(u, v) as u64)
    }

    fn run(&mut self, prefix: u64, placed: u64) {
        let depth = self.order.len();
        if depth == self.n {
            if prefix < self.best {
                self.best = prefix;
                self.best_order.clone_from(&self.order);
            }
            return;
        }
        let prefix_bits = (depth * depth.saturating_sub(1) / 2) as u32;
        let best_prefix = if self.best == u64::MAX {
            u64::MAX
        } else {
            self.best >> (self.total_bits - prefix_bits)
        };
        if prefix > best_prefix {
            return;
        }

        let free = !placed & ((1u64 << self.n) - 1);
        let mut min_chunk = u64::MAX;
        let mut candidates = Vec::new();
        let mut tried = 0u64;
        for v in BitIter(free) {
            // Two unplaced twins give isomorphic subtrees; keep the first.
            if BitIter(tried).any(|u| self.twins(u, v)) {
                continue;
            }
            tried |= 1 << v;
            let c = self.chunk(v);
            if c < min_chunk {
                min_chunk = c;
                candidates.clear();
            }
            if c == min_chunk {
                candidates.push(v);
            }
        }
        let next = prefix << depth | min_chunk;
        for v in candidates {
            self.order.push(v);
            self.run(next, placed | 1 << v);
            self.order.pop();
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        let mask = !(1u64 << u | 1u64 << v);
        self.g.neighbors_mask(u) & mask == self.g.neighbors_mask(v) & mask
    }
}

/// Relabels `g` so its column-wise upper-triangle bit string is the
/// lexicographic minimum over all vertex permutations. Returns the relabeled
/// graph and the permutation applied.
pub fn canonical_labeling(g: &SimpleGraph) -> Result<(SimpleGraph, Permutation)> {
    let n = g.order();
    check_limit(n)?;
    let mut search = CanonSearch {
        g,
        n,
        total_bits: (n * (n - 1) / 2) as u32,
        best: u64::MAX,
        best_order: Vec::new(),
        order: Vec::with_capacity(n),
    };
    search.run(0, 0);
    let mut map = vec![0; n];
    for (pos, &v) in search.best_order.iter().enumerate() {
        map[v] = pos;
    }
    let perm = Permutation::new(map).expect("search places every vertex once");
    Ok((g.relabel(&perm), perm))
}

/// graph6 string of the canonical relabeling. graph6 preserves the order of
/// bit strings of equal length, so this is also the minimal graph6 string.
pub fn canonical_form(g: &SimpleGraph) -> Result<String> {
    let (canon, _) = canonical_labeling(g)?;
    to_graph6(&canon)
}

/// Row signature used to prune isomorphism candidates: loop weight then the
/// sorted off-diagonal weights.
fn signature<G: WeightMatrix>(g: &G, v: usize) -> (u64, Vec<u64>) {
    let mut row: Vec<u64> = (0..g.order())
        .filter(|&j| j != v)
        .map(|j| g.weight(v, j))
        .collect();
    row.sort_unstable();
    (g.weight(v, v), row)
}

/// A permutation `π` with `h[π(i)][π(j)] = g[i][j]` for all `i, j`, if any.
pub fn find_isomorphism<G: WeightMatrix>(g: &G, h: &G) -> Result<Option<Permutation>> {
    let n = g.order();
    if h.order() != n {
        return Ok(None);
    }
    check_limit(n)?;
    let sig_g: Vec<_> = (0..n).map(|v| signature(g, v)).collect();
    let sig_h: Vec<_> = (0..n).map(|v| signature(h, v)).collect();
    let mut a = sig_g.clone();
    let mut b = sig_h.clone();
    a.sort();
    b.sort();
    if a != b {
        return Ok(None);
    }

    fn extend<G: WeightMatrix>(
        g: &G,
        h: &G,
        compatible: &[Vec<usize>],
        map: &mut Vec<usize>,
        used: u64,
    ) -> bool {
        let i = map.len();
        if i == g.order() {
            return true;
        }
        for &t in &compatible[i] {
            if used >> t & 1 == 1 {
                continue;
            }
            if map
                .iter()
                .enumerate()
                .all(|(j, &tj)| g.weight(i, j) == h.weight(t, tj))
            {
                map.push(t);
                if extend(g, h, compatible, map, used | 1 << t) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }

    let compatible: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&t| sig_g[i] == sig_h[t]).collect())
        .collect();
    let mut map = Vec::with_capacity(n);
    Ok(extend(g, h, &compatible, &mut map, 0)
        .then(|| Permutation::new(map).expect("search builds a bijection")))
}

/// Exact isomorphism of weight matrices: multiplicities and loops must match.
pub fn is_isomorphic<G: WeightMatrix>(g: &G, h: &G) -> Result<bool> {
    Ok(find_isomorphism(g, h)?.is_some())
}

/// A permutation `π` mapping every edge `ij` of `g` onto a pair with
/// `h[π(i)][π(j)] ≥ 1`. Loops of `h` play no part.
pub fn find_embedding(g: &SimpleGraph, h: &Multigraph) -> Result<Option<Permutation>> {
    let n = g.order();
    if h.order() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: h.order(),
        });
    }
    check_limit(n)?;
    let target = h.skeleton();
    if g.edge_count() > target.edge_count() {
        return Ok(None);
    }
    // place high-degree vertices first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    fn extend(
        g: &SimpleGraph,
        target: &SimpleGraph,
        order: &[usize],
        map: &mut [usize],
        used: u64,
        depth: usize,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for t in 0..g.order() {
            if used >> t & 1 == 1 || target.degree(t) < g.degree(v) {
                continue;
            }
            let fits = order[..depth]
                .iter()
                .all(|&u| !g.has_edge(u, v) || target.has_edge(map[u], t));
            if fits {
                map[v] = t;
                if extend(g, target, order, map, used | 1 << t, depth + 1) {
                    return true;
                }
            }
        }
        false
    }

    let mut map = vec![usize::MAX; n];
    Ok(extend(g, &target, &order, &mut map, 0, 0)
        .then(|| Permutation::new(map).expect("search builds a bijection")))
}

pub fn embeds(g: &SimpleGraph, h: &Multigraph) -> Result<bool> {
    Ok(find_embedding(g, h)?.is_some())
}
