//! Perfect matchings, uniqueness, Kotzig bridges and the pendant (corona)
//! construction.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BitIter, Edge, SimpleGraph};

/// A set of pairwise vertex-disjoint edges, each `(u, v)` with `u < v`,
/// kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    pub fn new(edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut edges: Vec<Edge> = edges
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        edges.sort_unstable();
        let mut covered = 0u64;
        for &(u, v) in &edges {
            if u == v || u >= 64 || v >= 64 {
                return Err(Error::InvalidMatching(format!("bad edge ({u}, {v})")));
            }
            let bits = 1u64 << u | 1u64 << v;
            if covered & bits != 0 {
                return Err(Error::InvalidMatching(format!(
                    "edges share a vertex at ({u}, {v})"
                )));
            }
            covered |= bits;
        }
        Ok(Self { edges })
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges
            .binary_search(&(e.0.min(e.1), e.0.max(e.1)))
            .is_ok()
    }

    /// True when every edge lies in `g` and every vertex of `g` is covered.
    pub fn is_perfect_in(&self, g: &SimpleGraph) -> bool {
        2 * self.edges.len() == g.order()
            && self
                .edges
                .iter()
                .all(|&(u, v)| v < g.order() && g.has_edge(u, v))
    }
}

/// Branch on the lowest uncovered vertex. Stops once `limit` matchings are
/// collected.
fn enumerate(g: &SimpleGraph, limit: usize) -> Vec<Matching> {
    let n = g.order();
    let mut out = Vec::new();
    if n % 2 == 1 {
        return out;
    }
    let mut stack: Vec<Edge> = Vec::with_capacity(n / 2);
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };

    fn rec(
        g: &SimpleGraph,
        uncovered: u64,
        stack: &mut Vec<Edge>,
        out: &mut Vec<Matching>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        if uncovered == 0 {
            out.push(Matching {
                edges: stack.clone(),
            });
            return;
        }
        let v = uncovered.trailing_zeros() as usize;
        for w in BitIter(g.neighbors_mask(v) & uncovered) {
            stack.push((v, w));
            rec(g, uncovered & !(1 << v | 1 << w), stack, out, limit);
            stack.pop();
        }
    }

    rec(g, full, &mut stack, &mut out, limit);
    out
}

/// All perfect matchings in lexicographic order of their sorted edge lists.
pub fn perfect_matchings(g: &SimpleGraph) -> Vec<Matching> {
    enumerate(g, usize::MAX)
}

pub fn has_unique_pm(g: &SimpleGraph) -> Option<Matching> {
    let mut found = enumerate(g, 2);
    if found.len() == 1 {
        found.pop()
    } else {
        None
    }
}

/// Smallest edge of `m` that is a bridge of `g`.
pub fn kotzig_bridge(g: &SimpleGraph, m: &Matching) -> Result<Option<Edge>> {
    if !m.is_perfect_in(g) {
        return Err(Error::InvalidMatching(format!(
            "{:?} is not a perfect matching of {g:?}",
            m.edges()
        )));
    }
    Ok(g.bridges().into_iter().find(|&e| m.contains(e)))
}

/// Attaches a pendant vertex `n + i` to every vertex `i`.
pub fn corona(g: &SimpleGraph) -> Result<SimpleGraph> {
    let n = g.order();
    let mut out = SimpleGraph::new(2 * n)?;
    for (u, v) in g.edges() {
        out.add_edge(u, v)?;
    }
    for i in 0..n {
        out.add_edge(i, n + i)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> SimpleGraph {
        let edges: Vec<_> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        SimpleGraph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> SimpleGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::from_edges(n, &edges).unwrap()
    }

    fn fulvene() -> SimpleGraph {
        SimpleGraph::from_edges(6, &[(0, 1), (0, 4), (1, 2), (2, 3), (3, 4), (3, 5)]).unwrap()
    }

    /// Pairs the first remaining vertex with every other remaining vertex,
    /// keeping only edges of `g`; no bit tricks.
    fn pairing_oracle(g: &SimpleGraph) -> Vec<Vec<Edge>> {
        fn rec(g: &SimpleGraph, left: Vec<usize>, acc: Vec<Edge>, out: &mut Vec<Vec<Edge>>) {
            if left.is_empty() {
                let mut m = acc;
                m.sort();
                out.push(m);
                return;
            }
            let v = left[0];
            for (k, &w) in left.iter().enumerate().skip(1) {
                if g.has_edge(v, w) {
                    let mut rest = left.clone();
                    rest.remove(k);
                    rest.remove(0);
                    let mut next = acc.clone();
                    next.push((v.min(w), v.max(w)));
                    rec(g, rest, next, out);
                }
            }
        }
        let mut out = Vec::new();
        if g.order().is_multiple_of(2) {
            rec(g, (0..g.order()).collect(), Vec::new(), &mut out);
        }
        out.sort();
        out
    }

    #[test]
    fn matching_examples() {
        let k2 = complete(2);
        assert_eq!(
            perfect_matchings(&k2),
            vec![Matching::new([(0, 1)]).unwrap()]
        );
        let c4 = perfect_matchings(&cycle(4));
        assert_eq!(c4.len(), 2);
        assert_eq!(c4[0].edges(), &[(0, 1), (2, 3)]);
        assert_eq!(c4[1].edges(), &[(0, 3), (1, 2)]);
        assert_eq!(
            perfect_matchings(&fulvene()),
            vec![Matching::new([(0, 4), (1, 2), (3, 5)]).unwrap()]
        );
        assert_eq!(
            pairing_oracle(&fulvene()),
            vec![vec![(0, 4), (1, 2), (3, 5)]]
        );
        assert!(perfect_matchings(&complete(3)).is_empty());
    }

    #[test]
    fn complete_graph_counts_are_double_factorials() {
        for (k, expected) in [(1, 1), (2, 3), (3, 15)] {
            assert_eq!(perfect_matchings(&complete(2 * k)).len(), expected);
        }
    }

    #[test]
    fn enumeration_agrees_with_pairing_oracle() {
        let pairs: Vec<_> = (0..6usize)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .collect();
        for mask in (0u32..1 << 15).step_by(7) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, e)| *e)
                .collect();
            let g = SimpleGraph::from_edges(6, &edges).unwrap();
            let got: Vec<Vec<Edge>> = perfect_matchings(&g)
                .into_iter()
                .map(|m| m.edges().to_vec())
                .collect();
            assert_eq!(got, pairing_oracle(&g));
        }
    }

    #[test]
    fn uniqueness() {
        assert!(has_unique_pm(&complete(2)).is_some());
        assert!(has_unique_pm(&cycle(6)).is_none());
        assert!(has_unique_pm(&complete(3)).is_none());
    }

    #[test]
    fn kotzig_examples() {
        let k2 = complete(2);
        let m = has_unique_pm(&k2).unwrap();
        assert_eq!(kotzig_bridge(&k2, &m).unwrap(), Some((0, 1)));
        let f = fulvene();
        let m = has_unique_pm(&f).unwrap();
        assert_eq!(kotzig_bridge(&f, &m).unwrap(), Some((3, 5)));
        // C4 matchings contain no bridge
        let c4 = cycle(4);
        let m = &perfect_matchings(&c4)[0];
        assert_eq!(kotzig_bridge(&c4, m).unwrap(), None);
        let bogus = Matching::new([(0, 2)]).unwrap();
        assert!(kotzig_bridge(&k2, &bogus).is_err());
    }

    #[test]
    fn matching_rejects_shared_vertices() {
        assert!(Matching::new([(0, 1), (1, 2)]).is_err());
        assert!(Matching::new([(1, 1)]).is_err());
    }

    #[test]
    fn corona_shapes() {
        let k1 = SimpleGraph::new(1).unwrap();
        assert_eq!(corona(&k1).unwrap(), complete(2));
        let p3 = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let h = corona(&p3).unwrap();
        assert_eq!(h.order(), 6);
        assert_eq!(h.edges(), vec![(0, 1), (0, 3), (1, 2), (1, 4), (2, 5)]);
        assert_eq!(
            has_unique_pm(&h).unwrap(),
            Matching::new([(0, 3), (1, 4), (2, 5)]).unwrap()
        );
        let c3 = corona(&cycle(3)).unwrap();
        assert_eq!(c3.edge_count(), 6);
        assert!(!c3.is_bipartite());
    }
}
