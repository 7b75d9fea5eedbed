//! Isomorph-free generation of small connected graphs and the census of
//! those with a unique perfect matching.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Permutation;
use crate::graph::{Edge, SimpleGraph};
use crate::graph6::to_graph6;
use crate::invertibility::{
    classify, inverse_from, max_unique_pm_subgraphs, Classification, InverseGraph, Verdict,
};
use crate::iso::{canonical_labeling, find_embedding, is_isomorphic};
use crate::linalg::{char_poly, IntPolynomial};
use crate::matching::{has_unique_pm, kotzig_bridge, Matching};

/// Largest order handled by generation.
pub const MAX_GENERATED_ORDER: usize = 8;
/// Largest order generated by plain edge-subset enumeration.
const SUBSET_LIMIT: usize = 6;

fn check_order(n: usize) -> Result<()> {
    if (1..=MAX_GENERATED_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::UnsupportedOrder {
            n,
            min: 1,
            max: MAX_GENERATED_ORDER,
        })
    }
}

fn pairs(n: usize) -> Vec<Edge> {
    (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Every labeled graph on `n` vertices passing `keep`, reduced to canonical
/// representatives in canonical order.
fn subsets_up_to_iso(n: usize, keep: impl Fn(&SimpleGraph) -> bool) -> Result<Vec<SimpleGraph>> {
    let pairs = pairs(n);
    let mut found = BTreeMap::new();
    for mask in 0u64..1 << pairs.len() {
        let mut rows = vec![0u64; n];
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
        }
        let g = SimpleGraph::from_rows_unchecked(n, rows);
        if keep(&g) {
            let (canon, _) = canonical_labeling(&g)?;
            found.entry(to_graph6(&canon)?).or_insert(canon);
        }
    }
    Ok(found.into_values().collect())
}

/// Adds vertex `n - 1` joined to a nonempty subset of a connected graph on
/// `n - 1` vertices. Every connected graph has a vertex whose removal keeps
/// it connected, so this reaches every class.
fn augment(smaller: &[SimpleGraph]) -> Result<Vec<SimpleGraph>> {
    let mut found = BTreeMap::new();
    for base in smaller {
        let m = base.order();
        for attach in 1u64..1 << m {
            let mut rows: Vec<u64> = (0..m).map(|v| base.neighbors_mask(v)).collect();
            for (v, row) in rows.iter_mut().enumerate() {
                if attach >> v & 1 == 1 {
                    *row |= 1 << m;
                }
            }
            rows.push(attach);
            let g = SimpleGraph::from_rows_unchecked(m + 1, rows);
            let (canon, _) = canonical_labeling(&g)?;
            found.entry(to_graph6(&canon)?).or_insert(canon);
        }
    }
    Ok(found.into_values().collect())
}

/// One canonical representative per isomorphism class of connected graphs on
/// `n` vertices, ordered by canonical form.
///
/// Orders above six are built by vertex augmentation and are slow at eight.
pub fn connected_graphs(n: usize) -> Result<Vec<SimpleGraph>> {
    check_order(n)?;
    if n <= SUBSET_LIMIT {
        subsets_up_to_iso(n, SimpleGraph::is_connected)
    } else {
        augment(&connected_graphs(n - 1)?)
    }
}

/// Connected graphs on `n` vertices with exactly one perfect matching, one per
/// isomorphism class, ordered by canonical form. Empty for odd `n`.
pub fn unique_pm_graphs(n: usize) -> Result<Vec<SimpleGraph>> {
    check_order(n)?;
    if n % 2 == 1 {
        return Ok(Vec::new());
    }
    if n <= SUBSET_LIMIT {
        subsets_up_to_iso(n, |g| has_unique_pm(g).is_some() && g.is_connected())
    } else {
        Ok(connected_graphs(n)?
            .into_iter()
            .filter(|g| has_unique_pm(g).is_some())
            .collect())
    }
}

/// Per-verdict tallies.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct VerdictCounts {
    pub bipartite_both: usize,
    pub positive_only: usize,
    pub negative_only: usize,
    pub integral_neither: usize,
    pub non_integral: usize,
    pub singular: usize,
}

impl VerdictCounts {
    pub fn add(&mut self, v: Verdict) {
        *self.slot(v) += 1;
    }

    pub fn get(&self, v: Verdict) -> usize {
        match v {
            Verdict::BipartiteBoth => self.bipartite_both,
            Verdict::PositiveOnly => self.positive_only,
            Verdict::NegativeOnly => self.negative_only,
            Verdict::IntegralNeither => self.integral_neither,
            Verdict::NonIntegral => self.non_integral,
            Verdict::Singular => self.singular,
        }
    }

    fn slot(&mut self, v: Verdict) -> &mut usize {
        match v {
            Verdict::BipartiteBoth => &mut self.bipartite_both,
            Verdict::PositiveOnly => &mut self.positive_only,
            Verdict::NegativeOnly => &mut self.negative_only,
            Verdict::IntegralNeither => &mut self.integral_neither,
            Verdict::NonIntegral => &mut self.non_integral,
            Verdict::Singular => &mut self.singular,
        }
    }

    pub fn total(&self) -> usize {
        Verdict::ALL.iter().map(|&v| self.get(v)).sum()
    }
}

/// One census graph with everything computed about it.
#[derive(Clone, Debug)]
pub struct CensusEntry {
    pub graph: SimpleGraph,
    pub graph6: String,
    pub matching: Matching,
    pub kotzig_bridge: Option<Edge>,
    pub classification: Classification,
    pub inverse: Option<InverseGraph>,
    pub char_poly: IntPolynomial,
    pub selfinvertible: bool,
    /// Census indices of the edge-maximal unique-matching subgraphs of the
    /// inverse graph's skeleton.
    pub maximal_subgraphs: Vec<usize>,
}

/// `graph` embeds into the skeleton of the inverse of `inverse_of`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Containment {
    pub graph: usize,
    pub inverse_of: usize,
    pub witness: Permutation,
}

#[derive(Clone, Debug)]
pub struct Census {
    pub n: usize,
    pub entries: Vec<CensusEntry>,
    pub counts: VerdictCounts,
    /// Index pairs `i < j` with equal characteristic polynomials that are not
    /// isomorphic.
    pub isospectral_pairs: Vec<(usize, usize)>,
    /// Every pair of invertible graphs `(i, j)` with `g_i` embedded in `(g_j)⁻¹`.
    pub containments: Vec<Containment>,
    pub self_contained: Vec<usize>,
    pub mutual_pairs: Vec<(usize, usize)>,
    /// Graphs that are an edge-maximal unique-matching subgraph of their own
    /// inverse graph.
    pub maximal_self_contained: Vec<usize>,
    /// Pairs `i < j` where each graph is an edge-maximal unique-matching
    /// subgraph of the other's inverse graph.
    pub maximal_mutual_pairs: Vec<(usize, usize)>,
    pub selfinvertible: Vec<usize>,
}

impl Census {
    pub fn indices_with(&self, verdict: Verdict) -> Vec<usize> {
        (0..self.entries.len())
            .filter(|&i| self.entries[i].classification.verdict == verdict)
            .collect()
    }

    pub fn containment(&self, graph: usize, inverse_of: usize) -> Option<&Containment> {
        self.containments
            .iter()
            .find(|c| c.graph == graph && c.inverse_of == inverse_of)
    }
}

/// Classifies every connected unique-matching graph on `n` vertices and
/// collects the relations between them and their inverse graphs.
pub fn census(n: usize) -> Result<Census> {
    let graphs = unique_pm_graphs(n)?;
    let index_of: BTreeMap<String, usize> = graphs
        .iter()
        .enumerate()
        .map(|(i, g)| Ok((to_graph6(g)?, i)))
        .collect::<Result<_>>()?;

    let mut entries = Vec::with_capacity(graphs.len());
    let mut counts = VerdictCounts::default();
    for g in graphs {
        let matching = has_unique_pm(&g).expect("filtered on a unique matching");
        let kotzig = kotzig_bridge(&g, &matching)?;
        let classification = classify(&g);
        counts.add(classification.verdict);
        let inverse = inverse_from(&classification).ok();
        let (selfinvertible, maximal_subgraphs) = match &inverse {
            Some(inv) => {
                let same = is_isomorphic(&inv.graph, &g.to_multigraph())?;
                let maximal = max_unique_pm_subgraphs(&inv.graph)?
                    .iter()
                    .filter_map(|h| to_graph6(h).ok().and_then(|s| index_of.get(&s).copied()))
                    .collect();
                (same, maximal)
            }
            None => (false, Vec::new()),
        };
        entries.push(CensusEntry {
            graph6: to_graph6(&g)?,
            char_poly: char_poly(&g.adjacency_matrix()),
            graph: g,
            matching,
            kotzig_bridge: kotzig,
            classification,
            inverse,
            selfinvertible,
            maximal_subgraphs,
        });
    }

    let mut isospectral_pairs = Vec::new();
    for i in 0..entries.len() {
        for j in i + 1..entries.len() {
            if entries[i].char_poly == entries[j].char_poly
                && !is_isomorphic(&entries[i].graph, &entries[j].graph)?
            {
                isospectral_pairs.push((i, j));
            }
        }
    }

    let mut containments = Vec::new();
    for (j, target) in entries.iter().enumerate() {
        let Some(inv) = &target.inverse else { continue };
        for (i, source) in entries.iter().enumerate() {
            if source.inverse.is_none() {
                continue;
            }
            if let Some(witness) = find_embedding(&source.graph, &inv.graph)? {
                containments.push(Containment {
                    graph: i,
                    inverse_of: j,
                    witness,
                });
            }
        }
    }
    containments.sort_by_key(|c| (c.graph, c.inverse_of));
    let contains = |i: usize, j: usize| {
        containments
            .iter()
            .any(|c| c.graph == i && c.inverse_of == j)
    };
    let self_contained = (0..entries.len()).filter(|&i| contains(i, i)).collect();
    let mut mutual_pairs = Vec::new();
    for i in 0..entries.len() {
        for j in i + 1..entries.len() {
            if contains(i, j) && contains(j, i) {
                mutual_pairs.push((i, j));
            }
        }
    }
    let is_maximal_in = |i: usize, j: usize| entries[j].maximal_subgraphs.contains(&i);
    let maximal_self_contained = (0..entries.len())
        .filter(|&i| is_maximal_in(i, i))
        .collect();
    let mut maximal_mutual_pairs = Vec::new();
    for i in 0..entries.len() {
        for j in i + 1..entries.len() {
            if is_maximal_in(i, j) && is_maximal_in(j, i) {
                maximal_mutual_pairs.push((i, j));
            }
        }
    }
    let selfinvertible = (0..entries.len())
        .filter(|&i| entries[i].selfinvertible)
        .collect();

    Ok(Census {
        n,
        entries,
        counts,
        isospectral_pairs,
        containments,
        self_contained,
        mutual_pairs,
        maximal_self_contained,
        maximal_mutual_pairs,
        selfinvertible,
    })
}

fn one_based_edge(e: Edge) -> [usize; 2] {
    [e.0 + 1, e.1 + 1]
}

/// JSON view of a census. Graph indices and vertices are 1-based.
impl Serialize for Census {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            index: usize,
            graph6: &'a str,
            edges: Vec<[usize; 2]>,
            matching: Vec<[usize; 2]>,
            kotzig_bridge: Option<[usize; 2]>,
            classification: &'a Classification,
            inverse_graph: &'a Option<InverseGraph>,
            char_poly: &'a IntPolynomial,
            selfinvertible: bool,
            maximal_subgraphs: Vec<usize>,
        }
        #[derive(Serialize)]
        struct ContainmentView {
            graph: usize,
            inverse_of: usize,
            witness: Vec<usize>,
        }
        #[derive(Serialize)]
        struct View<'a> {
            n: usize,
            total: usize,
            counts: &'a VerdictCounts,
            graphs: Vec<Entry<'a>>,
            isospectral_pairs: Vec<[usize; 2]>,
            self_contained: Vec<usize>,
            mutual_pairs: Vec<[usize; 2]>,
            maximal_self_contained: Vec<usize>,
            maximal_mutual_pairs: Vec<[usize; 2]>,
            selfinvertible: Vec<usize>,
            containments: Vec<ContainmentView>,
        }
        let graphs = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, e)| Entry {
                index: i + 1,
                graph6: &e.graph6,
                edges: e.graph.edges().into_iter().map(one_based_edge).collect(),
                matching: e
                    .matching
                    .edges()
                    .iter()
                    .copied()
                    .map(one_based_edge)
                    .collect(),
                kotzig_bridge: e.kotzig_bridge.map(one_based_edge),
                classification: &e.classification,
                inverse_graph: &e.inverse,
                char_poly: &e.char_poly,
                selfinvertible: e.selfinvertible,
                maximal_subgraphs: e.maximal_subgraphs.iter().map(|i| i + 1).collect(),
            })
            .collect();
        View {
            n: self.n,
            total: self.entries.len(),
            counts: &self.counts,
            graphs,
            isospectral_pairs: self
                .isospectral_pairs
                .iter()
                .map(|&(i, j)| [i + 1, j + 1])
                .collect(),
            self_contained: self.self_contained.iter().map(|i| i + 1).collect(),
            mutual_pairs: self
                .mutual_pairs
                .iter()
                .map(|&(i, j)| [i + 1, j + 1])
                .collect(),
            maximal_self_contained: self.maximal_self_contained.iter().map(|i| i + 1).collect(),
            maximal_mutual_pairs: self
                .maximal_mutual_pairs
                .iter()
                .map(|&(i, j)| [i + 1, j + 1])
                .collect(),
            selfinvertible: self.selfinvertible.iter().map(|i| i + 1).collect(),
            containments: self
                .containments
                .iter()
                .map(|c| ContainmentView {
                    graph: c.graph + 1,
                    inverse_of: c.inverse_of + 1,
                    witness: c.witness.as_slice().iter().map(|v| v + 1).collect(),
                })
                .collect(),
        }
        .serialize(s)
    }
}
