//! Text and JSON renderings of command results.

use std::fmt::Write;

use serde::Serialize;
use upm_core::enumeration::Containment;
use upm_core::{Census, Classification, InverseGraph, Signing, Verdict, VerdictCounts};

/// Bumped whenever a JSON payload changes shape.
pub const FORMAT_VERSION: &str = "1";

#[derive(Serialize)]
pub struct Report<T: Serialize> {
    pub version: &'static str,
    pub command: String,
    pub input: Vec<String>,
    pub payload: T,
}

impl<T: Serialize> Report<T> {
    pub fn new(command: impl Into<String>, input: Vec<String>, payload: T) -> Self {
        Self {
            version: FORMAT_VERSION,
            command: command.into(),
            input,
            payload,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

fn signing_text(s: &Option<Signing>) -> String {
    match s {
        Some(d) => {
            let parts: Vec<String> = d.as_slice().iter().map(i8::to_string).collect();
            format!("diag({})", parts.join(", "))
        }
        None => "none".to_string(),
    }
}

pub fn classification_text(graph6: &str, c: &Classification) -> String {
    let mut out = String::new();
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let _ = writeln!(out, "graph:             {graph6} (n = {})", c.graph.order());
    let _ = writeln!(out, "determinant:       {}", c.det);
    let _ = writeln!(out, "integral inverse:  {}", yes_no(c.integral));
    let _ = writeln!(out, "bipartite:         {}", yes_no(c.bipartite));
    let _ = writeln!(
        out,
        "positive signing:  {}",
        signing_text(&c.positive_signing)
    );
    let _ = writeln!(
        out,
        "negative signing:  {}",
        signing_text(&c.negative_signing)
    );
    let _ = writeln!(out, "verdict:           {}", c.verdict);
    out
}

pub fn inverse_text(inv: &InverseGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "sign:    {}", inv.sign);
    let _ = writeln!(out, "signing: {}", signing_text(&Some(inv.signing.clone())));
    out.push_str("adjacency:\n");
    for row in inv.graph.rows() {
        let cells: Vec<String> = row.iter().map(|w| format!("{w:>2}")).collect();
        let _ = writeln!(out, "  {}", cells.join(" "));
    }
    out
}

#[derive(Serialize)]
pub struct TableRow<'a> {
    pub index: usize,
    pub graph6: &'a str,
    pub verdict: Verdict,
    pub det: i64,
}

#[derive(Serialize)]
pub struct TablePayload<'a> {
    pub n: usize,
    pub rows: Vec<TableRow<'a>>,
    pub counts: &'a VerdictCounts,
}

pub fn table_payload(census: &Census) -> TablePayload<'_> {
    let rows = census
        .entries
        .iter()
        .enumerate()
        .map(|(i, e)| TableRow {
            index: i + 1,
            graph6: &e.graph6,
            verdict: e.classification.verdict,
            det: i64::try_from(&e.classification.det).unwrap_or(i64::MAX),
        })
        .collect();
    TablePayload {
        n: census.n,
        rows,
        counts: &census.counts,
    }
}

pub fn counts_text(counts: &VerdictCounts) -> String {
    let mut out = String::new();
    for v in Verdict::ALL {
        let _ = writeln!(out, "  {:<17} {}", v.as_str(), counts.get(v));
    }
    out
}

pub fn table_text(census: &Census) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "Connected graphs on {} vertices with a unique perfect matching",
        census.n
    );
    let _ = writeln!(out, "{:<6} {:<10} invertibility", "Graph", "graph6");
    let _ = writeln!(out, "{}", "-".repeat(72));
    for (i, e) in census.entries.iter().enumerate() {
        let _ = writeln!(
            out,
            "{:<6} {:<10} {}",
            format!("G{}", i + 1),
            e.graph6,
            e.classification.verdict.describe()
        );
    }
    let _ = writeln!(out, "{}", "-".repeat(72));
    let _ = writeln!(out, "total: {}", census.entries.len());
    out.push_str(&counts_text(&census.counts));
    out
}

fn labels(indices: impl IntoIterator<Item = usize>) -> String {
    let v: Vec<String> = indices.into_iter().map(|i| format!("G{}", i + 1)).collect();
    if v.is_empty() {
        "none".to_string()
    } else {
        v.join(", ")
    }
}

fn pair_labels(pairs: &[(usize, usize)]) -> String {
    if pairs.is_empty() {
        return "none".to_string();
    }
    pairs
        .iter()
        .map(|(i, j)| format!("(G{}, G{})", i + 1, j + 1))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Relations restricted to graphs of one verdict.
pub struct Restricted {
    pub members: Vec<usize>,
    pub self_contained: Vec<usize>,
    pub mutual_pairs: Vec<(usize, usize)>,
    pub maximal_self_contained: Vec<usize>,
    pub maximal_mutual_pairs: Vec<(usize, usize)>,
    pub selfinvertible: Vec<usize>,
}

pub fn restrict(census: &Census, verdict: Verdict) -> Restricted {
    let members = census.indices_with(verdict);
    let inside = |i: &usize| members.contains(i);
    let both = |(i, j): &(usize, usize)| inside(i) && inside(j);
    Restricted {
        self_contained: census
            .self_contained
            .iter()
            .copied()
            .filter(inside)
            .collect(),
        mutual_pairs: census.mutual_pairs.iter().copied().filter(both).collect(),
        maximal_self_contained: census
            .maximal_self_contained
            .iter()
            .copied()
            .filter(inside)
            .collect(),
        maximal_mutual_pairs: census
            .maximal_mutual_pairs
            .iter()
            .copied()
            .filter(both)
            .collect(),
        selfinvertible: census
            .selfinvertible
            .iter()
            .copied()
            .filter(inside)
            .collect(),
        members,
    }
}

#[derive(Serialize)]
pub struct ContainmentView {
    pub graph: usize,
    pub inverse_of: usize,
    pub witness: Vec<usize>,
}

impl From<&Containment> for ContainmentView {
    fn from(c: &Containment) -> Self {
        Self {
            graph: c.graph + 1,
            inverse_of: c.inverse_of + 1,
            witness: c.witness.as_slice().iter().map(|v| v + 1).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct VerdictRelations {
    pub verdict: Verdict,
    pub members: Vec<usize>,
    pub self_contained: Vec<usize>,
    pub mutual_pairs: Vec<[usize; 2]>,
    pub maximal_self_contained: Vec<usize>,
    pub maximal_mutual_pairs: Vec<[usize; 2]>,
    pub selfinvertible: Vec<usize>,
}

#[derive(Serialize)]
pub struct RelationsPayload {
    pub n: usize,
    pub graphs: Vec<String>,
    pub selfinvertible: Vec<usize>,
    pub self_contained: Vec<usize>,
    pub mutual_pairs: Vec<[usize; 2]>,
    pub maximal_self_contained: Vec<usize>,
    pub maximal_mutual_pairs: Vec<[usize; 2]>,
    pub isospectral_pairs: Vec<[usize; 2]>,
    pub maximal_subgraphs: Vec<Vec<usize>>,
    pub by_verdict: Vec<VerdictRelations>,
    pub containments: Vec<ContainmentView>,
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

fn one_based_pairs(v: &[(usize, usize)]) -> Vec<[usize; 2]> {
    v.iter().map(|&(i, j)| [i + 1, j + 1]).collect()
}

pub fn relations_payload(census: &Census) -> RelationsPayload {
    let by_verdict = [
        Verdict::BipartiteBoth,
        Verdict::PositiveOnly,
        Verdict::NegativeOnly,
    ]
    .into_iter()
    .map(|v| {
        let r = restrict(census, v);
        VerdictRelations {
            verdict: v,
            members: one_based(&r.members),
            self_contained: one_based(&r.self_contained),
            mutual_pairs: one_based_pairs(&r.mutual_pairs),
            maximal_self_contained: one_based(&r.maximal_self_contained),
            maximal_mutual_pairs: one_based_pairs(&r.maximal_mutual_pairs),
            selfinvertible: one_based(&r.selfinvertible),
        }
    })
    .collect();
    RelationsPayload {
        n: census.n,
        graphs: census.entries.iter().map(|e| e.graph6.clone()).collect(),
        selfinvertible: one_based(&census.selfinvertible),
        self_contained: one_based(&census.self_contained),
        mutual_pairs: one_based_pairs(&census.mutual_pairs),
        maximal_self_contained: one_based(&census.maximal_self_contained),
        maximal_mutual_pairs: one_based_pairs(&census.maximal_mutual_pairs),
        isospectral_pairs: one_based_pairs(&census.isospectral_pairs),
        maximal_subgraphs: census
            .entries
            .iter()
            .map(|e| one_based(&e.maximal_subgraphs))
            .collect(),
        by_verdict,
        containments: census
            .containments
            .iter()
            .map(ContainmentView::from)
            .collect(),
    }
}

pub fn relations_text(census: &Census) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "Relations among the {} census graphs on {} vertices",
        census.entries.len(),
        census.n
    );
    for (i, e) in census.entries.iter().enumerate() {
        let maximal = if e.inverse.is_some() {
            labels(e.maximal_subgraphs.iter().copied())
        } else {
            "-".to_string()
        };
        let _ = writeln!(
            out,
            "  G{:<3} {:<10} {:<17} maximal unique-PM subgraphs of inverse: {}",
            i + 1,
            e.graph6,
            e.classification.verdict.as_str(),
            maximal
        );
    }
    let _ = writeln!(
        out,
        "selfinvertible:              {}",
        labels(census.selfinvertible.iter().copied())
    );
    let _ = writeln!(
        out,
        "iso-spectral pairs:          {}",
        pair_labels(&census.isospectral_pairs)
    );
    let _ = writeln!(
        out,
        "maximal subgraph of own inverse:      {}",
        labels(census.maximal_self_contained.iter().copied())
    );
    let _ = writeln!(
        out,
        "maximal subgraphs of each other's inverse: {}",
        pair_labels(&census.maximal_mutual_pairs)
    );
    let _ = writeln!(
        out,
        "embeds in own inverse:       {}",
        labels(census.self_contained.iter().copied())
    );
    let _ = writeln!(
        out,
        "embed in each other's inverse: {}",
        pair_labels(&census.mutual_pairs)
    );
    for v in [
        Verdict::BipartiteBoth,
        Verdict::PositiveOnly,
        Verdict::NegativeOnly,
    ] {
        let r = restrict(census, v);
        if r.members.is_empty() {
            continue;
        }
        let _ = writeln!(out, "{v} ({} graphs):", r.members.len());
        let _ = writeln!(
            out,
            "  selfinvertible:                            {}",
            labels(r.selfinvertible)
        );
        let _ = writeln!(
            out,
            "  maximal subgraph of own inverse:           {}",
            labels(r.maximal_self_contained)
        );
        let _ = writeln!(
            out,
            "  maximal subgraphs of each other's inverse: {}",
            pair_labels(&r.maximal_mutual_pairs)
        );
        let _ = writeln!(
            out,
            "  embeds in own inverse:                     {}",
            labels(r.self_contained)
        );
        let _ = writeln!(
            out,
            "  embed in each other's inverse:             {}",
            pair_labels(&r.mutual_pairs)
        );
    }
    out
}
