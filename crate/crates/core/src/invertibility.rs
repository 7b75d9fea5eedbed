//! Positive and negative invertibility of graphs with an integral inverse.
//!
//! A graph with adjacency matrix `A` and `det A = ±1` is positively invertible
//! when some ±1 diagonal `D` makes `D·A⁻¹·D` entrywise nonnegative, and
//! negatively invertible when some `D` makes it entrywise nonpositive. The
//! inverse graph is the multigraph with adjacency matrix `s·D·A⁻¹·D`,
//! `s = +1` or `-1` respectively.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Multigraph, SimpleGraph};
use crate::graph6::to_graph6;
use crate::iso::{canonical_labeling, is_isomorphic, SEARCH_LIMIT};
use crate::linalg::{bigint_json, determinant, inverse_exact, is_integral, RationalMatrix};
use crate::matching::perfect_matchings;
use crate::signing::{signability, Signing, Target};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Both signings exist.
    BipartiteBoth,
    PositiveOnly,
    NegativeOnly,
    /// `det = ±1` but neither signing exists.
    IntegralNeither,
    /// `|det| > 1`.
    NonIntegral,
    Singular,
}

impl Verdict {
    pub const ALL: [Verdict; 6] = [
        Verdict::BipartiteBoth,
        Verdict::PositiveOnly,
        Verdict::NegativeOnly,
        Verdict::IntegralNeither,
        Verdict::NonIntegral,
        Verdict::Singular,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::BipartiteBoth => "bipartite-both",
            Verdict::PositiveOnly => "positive-only",
            Verdict::NegativeOnly => "negative-only",
            Verdict::IntegralNeither => "integral-neither",
            Verdict::NonIntegral => "non-integral",
            Verdict::Singular => "singular",
        }
    }

    pub fn is_invertible(self) -> bool {
        matches!(
            self,
            Verdict::BipartiteBoth | Verdict::PositiveOnly | Verdict::NegativeOnly
        )
    }

    /// Wording used in the two-column text table.
    pub fn describe(self) -> &'static str {
        match self {
            Verdict::BipartiteBoth => "positively and negatively invertible (bipartite)",
            Verdict::PositiveOnly => "positively invertible",
            Verdict::NegativeOnly => "negatively invertible",
            Verdict::IntegralNeither => {
                "noninvertible with integral inverse of the adjacency matrix"
            }
            Verdict::NonIntegral => {
                "noninvertible with nonintegral inverse of the adjacency matrix"
            }
            Verdict::Singular => "singular adjacency matrix",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub graph: SimpleGraph,
    pub det: BigInt,
    pub integral: bool,
    pub bipartite: bool,
    /// Exact inverse of the adjacency matrix, absent when singular.
    pub inverse: Option<RationalMatrix>,
    pub positive_signing: Option<Signing>,
    pub negative_signing: Option<Signing>,
    pub verdict: Verdict,
}

impl Serialize for Classification {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Record<'a> {
            graph: Option<String>,
            n: usize,
            det: serde_json::Value,
            integral: bool,
            bipartite: bool,
            inverse: &'a Option<RationalMatrix>,
            positive_signing: &'a Option<Signing>,
            negative_signing: &'a Option<Signing>,
            verdict: Verdict,
        }
        Record {
            graph: to_graph6(&self.graph).ok(),
            n: self.graph.order(),
            det: bigint_json(&self.det),
            integral: self.integral,
            bipartite: self.bipartite,
            inverse: &self.inverse,
            positive_signing: &self.positive_signing,
            negative_signing: &self.negative_signing,
            verdict: self.verdict,
        }
        .serialize(s)
    }
}

pub fn classify(g: &SimpleGraph) -> Classification {
    let a = g.adjacency_matrix();
    let det = determinant(&a);
    let bipartite = g.is_bipartite();
    let inverse = (!det.is_zero()).then(|| inverse_exact(&a).expect("nonzero determinant"));
    let integral_inverse = inverse.as_ref().and_then(is_integral);
    let integral = integral_inverse.is_some();
    let (positive_signing, negative_signing) = match &integral_inverse {
        Some(b) => (
            signability(b, Target::Nonnegative).expect("inverse of a symmetric matrix"),
            signability(b, Target::Nonpositive).expect("inverse of a symmetric matrix"),
        ),
        None => (None, None),
    };
    let verdict = if det.is_zero() {
        Verdict::Singular
    } else if !integral {
        Verdict::NonIntegral
    } else {
        match (positive_signing.is_some(), negative_signing.is_some()) {
            (true, true) => Verdict::BipartiteBoth,
            (true, false) => Verdict::PositiveOnly,
            (false, true) => Verdict::NegativeOnly,
            (false, false) => Verdict::IntegralNeither,
        }
    };
    Classification {
        graph: g.clone(),
        det,
        integral,
        bipartite,
        inverse,
        positive_signing,
        negative_signing,
        verdict,
    }
}

/// Inverse multigraph `A_H = sign·D·A⁻¹·D` together with `D` and `sign`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseGraph {
    pub graph: Multigraph,
    pub signing: Signing,
    pub sign: i8,
}

impl Serialize for InverseGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Record<'a> {
            adjacency: Vec<Vec<u64>>,
            signing: &'a Signing,
            sign: i8,
        }
        Record {
            adjacency: self.graph.rows(),
            signing: &self.signing,
            sign: self.sign,
        }
        .serialize(s)
    }
}

pub(crate) fn inverse_from(c: &Classification) -> Result<InverseGraph> {
    let (signing, sign) = match (&c.positive_signing, &c.negative_signing) {
        (Some(d), _) => (d.clone(), 1),
        (None, Some(d)) => (d.clone(), -1),
        (None, None) => return Err(Error::NotInvertible(c.verdict)),
    };
    let inverse = c
        .inverse
        .as_ref()
        .and_then(is_integral)
        .ok_or(Error::NotInvertible(c.verdict))?;
    let signed = inverse.conjugate_by_signs(signing.as_slice(), sign < 0);
    let graph = Multigraph::from_int_matrix(&signed)?;
    Ok(InverseGraph {
        graph,
        signing,
        sign,
    })
}

/// The positive signing is used when both exist.
pub fn inverse_graph(g: &SimpleGraph) -> Result<InverseGraph> {
    inverse_from(&classify(g))
}

/// Whether `sign·D·A_H⁻¹·D` reproduces the adjacency matrix of `g`.
pub fn involution_check(g: &SimpleGraph) -> Result<bool> {
    let inv = inverse_graph(g)?;
    Ok(involution_holds(g, &inv))
}

pub(crate) fn involution_holds(g: &SimpleGraph, inv: &InverseGraph) -> bool {
    let Ok(back) = inverse_exact(&inv.graph.to_int_matrix()) else {
        return false;
    };
    let Some(back) = is_integral(&back) else {
        return false;
    };
    back.conjugate_by_signs(inv.signing.as_slice(), inv.sign < 0) == g.adjacency_matrix()
}

pub fn is_selfinvertible(g: &SimpleGraph) -> Result<bool> {
    let inv = inverse_graph(g)?;
    is_isomorphic(&inv.graph, &Multigraph::from(g))
}

/// Edge-maximal spanning subgraphs of the skeleton of `h` with exactly one
/// perfect matching, one per isomorphism class, as canonical representatives
/// sorted by canonical form.
///
/// For a fixed perfect matching `M` of the skeleton, an edge set containing
/// `M` has no other perfect matching iff its complement hits `M' \ M` for
/// every other matching `M'`. Maximal such sets are complements of minimal
/// hitting sets, enumerated by branching on the first unhit set.
pub fn max_unique_pm_subgraphs(h: &Multigraph) -> Result<Vec<SimpleGraph>> {
    let n = h.order();
    if n > SEARCH_LIMIT {
        return Err(Error::SizeLimit {
            n,
            limit: SEARCH_LIMIT,
        });
    }
    let skeleton = h.skeleton();
    let edges = skeleton.edges();
    let index: BTreeMap<(usize, usize), usize> =
        edges.iter().enumerate().map(|(k, &e)| (e, k)).collect();
    let masks: Vec<u64> = perfect_matchings(&skeleton)
        .iter()
        .map(|m| m.edges().iter().fold(0u64, |acc, e| acc | 1 << index[e]))
        .collect();
    let all = if edges.len() == 64 {
        u64::MAX
    } else {
        (1u64 << edges.len()) - 1
    };

    let mut found: BTreeMap<String, SimpleGraph> = BTreeMap::new();
    for &m in &masks {
        let others: Vec<u64> = masks.iter().filter(|&&o| o != m).map(|&o| o & !m).collect();
        let mut transversals = Vec::new();
        minimal_transversals(&others, 0, 0, &mut transversals);
        for t in transversals {
            let keep = all & !t;
            let kept: Vec<_> = (0..edges.len())
                .filter(|k| keep >> k & 1 == 1)
                .map(|k| edges[k])
                .collect();
            let sub = SimpleGraph::from_edges(n, &kept)?;
            let (canon, _) = canonical_labeling(&sub)?;
            found.entry(to_graph6(&canon)?).or_insert(canon);
        }
    }
    Ok(found.into_values().collect())
}

fn minimal_transversals(sets: &[u64], chosen: u64, forbidden: u64, out: &mut Vec<u64>) {
    let Some(&unhit) = sets.iter().find(|&&s| s & chosen == 0) else {
        let minimal = crate::graph::BitIter(chosen).all(|e| {
            let without = chosen & !(1 << e);
            sets.iter().any(|&s| s & without == 0)
        });
        if minimal {
            out.push(chosen);
        }
        return;
    };
    let mut forbidden = forbidden;
    for e in crate::graph::BitIter(unhit & !forbidden) {
        minimal_transversals(sets, chosen | 1 << e, forbidden, out);
        forbidden |= 1 << e;
    }
}
