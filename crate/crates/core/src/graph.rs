//! Labeled simple graphs and nonnegative-integer multigraphs.
//!
//! Vertices are `0..n` in the API. Reports and text formats shift them to
//! `1..=n`.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Largest order a [`SimpleGraph`] can hold (one `u64` word per adjacency row).
pub const MAX_ORDER: usize = 64;

/// An undirected edge `(u, v)` with `u < v`.
pub type Edge = (usize, usize);

/// Read-only access to a square, symmetric weight matrix.
///
/// Simple graphs report weights in `{0, 1}` with a zero diagonal; multigraphs
/// report edge multiplicities and loop multiplicities on the diagonal.
pub trait WeightMatrix {
    fn order(&self) -> usize;
    fn weight(&self, i: usize, j: usize) -> u64;
}

/// Labeled undirected simple graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    rows: Vec<u64>,
}

impl SimpleGraph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::UnsupportedOrder {
                n,
                min: 1,
                max: MAX_ORDER,
            });
        }
        Ok(Self {
            n,
            rows: vec![0; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Self> {
        let mut g = Self::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric 0/1 matrix with zero diagonal.
    pub fn from_adjacency(matrix: &IntMatrix) -> Result<Self> {
        let n = matrix.dim();
        let mut g = Self::new(n)?;
        for i in 0..n {
            for j in 0..n {
                let a = matrix.get(i, j);
                if a != matrix.get(j, i) {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
                let bit = a.to_u8().filter(|b| *b <= 1).ok_or_else(|| {
                    Error::InvalidGraph(format!("entry ({i}, {j}) = {a} is not 0 or 1"))
                })?;
                if bit == 1 {
                    if i == j {
                        return Err(Error::InvalidGraph(format!("loop at vertex {i}")));
                    }
                    g.rows[i] |= 1 << j;
                }
            }
        }
        Ok(g)
    }

    pub(crate) fn from_rows_unchecked(n: usize, rows: Vec<u64>) -> Self {
        debug_assert_eq!(rows.len(), n);
        Self { n, rows }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidGraph(format!(
                "edge ({u}, {v}) out of range for order {}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
        }
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.rows[u] &= !(1 << v);
            self.rows[v] &= !(1 << u);
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bit set.
    #[inline]
    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.rows[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        (0..self.n)
            .flat_map(|u| BitIter(self.rows[u] >> u >> 1).map(move |k| (u, u + 1 + k)))
            .collect()
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| BigInt::from(self.has_edge(i, j) as u8))
    }

    /// The graph `π·g`: vertex `i` of `self` becomes vertex `π(i)`.
    pub fn relabel(&self, perm: &Permutation) -> SimpleGraph {
        assert_eq!(perm.len(), self.n, "permutation size mismatch");
        let mut rows = vec![0u64; self.n];
        for (i, row) in self.rows.iter().enumerate() {
            let pi = perm.apply(i);
            for j in BitIter(*row) {
                rows[pi] |= 1 << perm.apply(j);
            }
        }
        Self { n: self.n, rows }
    }

    pub fn is_connected(&self) -> bool {
        let full = if self.n == MAX_ORDER {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for v in BitIter(frontier) {
                next |= self.rows[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == full
    }

    /// Proper 2-colouring by BFS, if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                let c = colour[v].unwrap();
                for w in self.neighbors(v) {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Edges whose removal increases the number of connected components,
    /// sorted, via the low-link DFS.
    pub fn bridges(&self) -> Vec<Edge> {
        let n = self.n;
        let mut order = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut out = Vec::new();
        let mut clock = 0;
        for root in 0..n {
            if order[root] != usize::MAX {
                continue;
            }
            // (vertex, parent, remaining neighbours)
            let mut stack = vec![(root, usize::MAX, self.rows[root])];
            order[root] = clock;
            low[root] = clock;
            clock += 1;
            while let Some(top) = stack.last_mut() {
                let (v, parent, rest) = *top;
                if rest != 0 {
                    let w = rest.trailing_zeros() as usize;
                    top.2 &= rest - 1;
                    if w == parent {
                        continue;
                    }
                    if order[w] == usize::MAX {
                        order[w] = clock;
                        low[w] = clock;
                        clock += 1;
                        stack.push((w, v, self.rows[w]));
                    } else {
                        low[v] = low[v].min(order[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] > order[parent] {
                            out.push((parent.min(v), parent.max(v)));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn to_multigraph(&self) -> Multigraph {
        Multigraph::from(self)
    }
}

impl WeightMatrix for SimpleGraph {
    fn order(&self) -> usize {
        self.n
    }

    fn weight(&self, i: usize, j: usize) -> u64 {
        self.has_edge(i, j) as u64
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().iter().map(|(u, v)| (u + 1, v + 1)).collect();
        f.debug_struct("SimpleGraph")
            .field("n", &self.n)
            .field("edges", &edges)
            .finish()
    }
}

/// Undirected multigraph given by a symmetric nonnegative integer matrix.
/// The diagonal entry `w[i][i]` is the loop multiplicity at `i`, stored as is.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    weights: Vec<u64>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            weights: vec![0; n * n],
        }
    }

    pub fn from_rows(rows: &[Vec<u64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        for (i, row) in rows.iter().enumerate() {
            if let Some(j) = (0..i).find(|&j| row[j] != rows[j][i]) {
                return Err(Error::NotSymmetric { row: i, col: j });
            }
        }
        Ok(Self {
            n,
            weights: rows.iter().flatten().copied().collect(),
        })
    }

    /// Fails on asymmetric input or negative entries.
    pub fn from_int_matrix(matrix: &IntMatrix) -> Result<Self> {
        let n = matrix.dim();
        let mut weights = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let w = matrix.get(i, j);
                if w != matrix.get(j, i) {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
                if w.is_negative() {
                    return Err(Error::InvalidGraph(format!(
                        "negative weight {w} at ({i}, {j})"
                    )));
                }
                weights.push(w.to_u64().ok_or_else(|| {
                    Error::InvalidGraph(format!("weight {w} at ({i}, {j}) too large"))
                })?);
            }
        }
        Ok(Self { n, weights })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn weight(&self, i: usize, j: usize) -> u64 {
        self.weights[i * self.n + j]
    }

    pub fn set_weight(&mut self, i: usize, j: usize, w: u64) {
        self.weights[i * self.n + j] = w;
        self.weights[j * self.n + i] = w;
    }

    pub fn loop_multiplicity(&self, v: usize) -> u64 {
        self.weight(v, v)
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.weights
            .chunks(self.n.max(1))
            .map(<[u64]>::to_vec)
            .take(self.n)
            .collect()
    }

    /// Drops loops and flattens multiplicities to one.
    pub fn skeleton(&self) -> SimpleGraph {
        let mut rows = vec![0u64; self.n];
        for (i, row) in rows.iter_mut().enumerate() {
            for j in 0..self.n {
                if i != j && self.weight(i, j) > 0 {
                    *row |= 1 << j;
                }
            }
        }
        SimpleGraph::from_rows_unchecked(self.n, rows)
    }

    pub fn has_loops(&self) -> bool {
        (0..self.n).any(|i| self.weight(i, i) > 0)
    }

    pub fn has_multiple_edges(&self) -> bool {
        (0..self.n).any(|i| (0..i).any(|j| self.weight(i, j) > 1))
    }

    /// No loops and every multiplicity is at most one.
    pub fn is_simple(&self) -> bool {
        !self.has_loops() && !self.has_multiple_edges()
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| BigInt::from(self.weight(i, j)))
    }

    pub fn relabel(&self, perm: &Permutation) -> Multigraph {
        assert_eq!(perm.len(), self.n, "permutation size mismatch");
        let mut out = Multigraph::new(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.weights[perm.apply(i) * self.n + perm.apply(j)] = self.weight(i, j);
            }
        }
        out
    }
}

impl From<&SimpleGraph> for Multigraph {
    fn from(g: &SimpleGraph) -> Self {
        let mut m = Multigraph::new(g.order());
        for (u, v) in g.edges() {
            m.set_weight(u, v, 1);
        }
        m
    }
}

impl WeightMatrix for Multigraph {
    fn order(&self) -> usize {
        self.n
    }

    fn weight(&self, i: usize, j: usize) -> u64 {
        Multigraph::weight(self, i, j)
    }
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Multigraph")
            .field("n", &self.n)
            .field("weights", &self.rows())
            .finish()
    }
}

/// A bijection on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; map.len()];
        for &x in &map {
            if x >= map.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidGraph(format!("{map:?} is not a permutation")));
            }
        }
        Ok(Self(map))
    }

    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p] = i;
        }
        Permutation(inv)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// Iterates the set bit positions of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn fulvene() -> SimpleGraph {
        SimpleGraph::from_edges(6, &[(0, 1), (0, 4), (1, 2), (2, 3), (3, 4), (3, 5)]).unwrap()
    }

    fn cycle(n: usize) -> SimpleGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::from_edges(n, &edges).unwrap()
    }

    /// Delete each edge and recount components.
    fn naive_bridges(g: &SimpleGraph) -> Vec<Edge> {
        let components = |h: &SimpleGraph| {
            let mut seen = vec![false; h.order()];
            let mut count = 0;
            for s in 0..h.order() {
                if seen[s] {
                    continue;
                }
                count += 1;
                let mut stack = vec![s];
                seen[s] = true;
                while let Some(v) = stack.pop() {
                    for w in h.neighbors(v) {
                        if !seen[w] {
                            seen[w] = true;
                            stack.push(w);
                        }
                    }
                }
            }
            count
        };
        let base = components(g);
        g.edges()
            .into_iter()
            .filter(|&(u, v)| {
                let mut h = g.clone();
                h.remove_edge(u, v);
                components(&h) > base
            })
            .collect()
    }

    #[test]
    fn rejects_bad_construction() {
        assert!(SimpleGraph::new(0).is_err());
        assert!(SimpleGraph::new(65).is_err());
        assert!(SimpleGraph::from_edges(3, &[(1, 1)]).is_err());
        assert!(SimpleGraph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Multigraph::from_rows(&[vec![0, 1], vec![2, 0]]).is_err());
    }

    #[test]
    fn connectivity() {
        let k2 = SimpleGraph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(k2.is_connected());
        assert!(!SimpleGraph::new(2).unwrap().is_connected());
        assert!(SimpleGraph::new(1).unwrap().is_connected());
        assert!(fulvene().is_connected());
    }

    #[test]
    fn bipartiteness() {
        assert!(SimpleGraph::from_edges(2, &[(0, 1)])
            .unwrap()
            .is_bipartite());
        assert!(!cycle(3).is_bipartite());
        assert!(cycle(6).is_bipartite());
        assert!(!fulvene().is_bipartite());
    }

    #[test]
    fn bridge_examples() {
        assert_eq!(
            SimpleGraph::from_edges(2, &[(0, 1)]).unwrap().bridges(),
            vec![(0, 1)]
        );
        assert!(cycle(4).bridges().is_empty());
        assert_eq!(fulvene().bridges(), vec![(3, 5)]);
    }

    #[test]
    fn bridges_match_deletion_oracle_for_all_graphs_up_to_six() {
        for n in 1..=6usize {
            let pairs: Vec<Edge> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
            for mask in 0u32..(1 << pairs.len()) {
                let edges: Vec<Edge> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, e)| *e)
                    .collect();
                let g = SimpleGraph::from_edges(n, &edges).unwrap();
                assert_eq!(g.bridges(), naive_bridges(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn skeleton_drops_loops_and_multiplicity() {
        let m = Multigraph::from_rows(&[vec![2, 3, 0], vec![3, 0, 1], vec![0, 1, 4]]).unwrap();
        let s = m.skeleton();
        assert_eq!(s.edges(), vec![(0, 1), (1, 2)]);
        assert!(m.has_loops() && m.has_multiple_edges() && !m.is_simple());
        assert!(Multigraph::from(&s).is_simple());
    }

    #[test]
    fn relabel_round_trip() {
        let g = fulvene();
        let p = Permutation::new(vec![3, 5, 0, 1, 4, 2]).unwrap();
        assert_eq!(g.relabel(&p).relabel(&p.inverse()), g);
        assert_eq!(g.relabel(&p).edge_count(), g.edge_count());
    }
}
