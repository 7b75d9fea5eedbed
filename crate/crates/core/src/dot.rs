//! Graphviz DOT output. Vertices are written 1-based; multigraph edges and
//! loops are repeated once per unit of multiplicity.

use std::fmt::Write;

use crate::graph::WeightMatrix;

pub fn to_dot<G: WeightMatrix>(g: &G) -> String {
    let n = g.order();
    let mut out = String::from("graph {\n");
    for v in 0..n {
        let _ = writeln!(out, "  {};", v + 1);
    }
    for i in 0..n {
        for j in i..n {
            for _ in 0..g.weight(i, j) {
                let _ = writeln!(out, "  {} -- {};", i + 1, j + 1);
            }
        }
    }
    out.push_str("}\n");
    out
}
