//! Diagonal ±1 similarities and the balance test behind positive and negative
//! signability.
//!
//! `diag(d)·B·diag(d)` multiplies `B[i][j]` by `d[i]·d[j]` and leaves the
//! diagonal fixed. Every nonzero off-diagonal entry therefore demands a
//! parity relation between `d[i]` and `d[j]`; a signing exists iff those
//! relations are consistent on each component of the support graph.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Sign pattern the signed matrix must reach.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    Nonnegative,
    Nonpositive,
}

/// A vector of `+1`/`-1` entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Signing(Vec<i8>);

impl Signing {
    pub fn new(d: Vec<i8>) -> Result<Self> {
        if let Some(bad) = d.iter().find(|x| x.abs() != 1) {
            return Err(Error::InvalidGraph(format!(
                "signing entry {bad} is not ±1"
            )));
        }
        Ok(Self(d))
    }

    pub fn all_positive(n: usize) -> Self {
        Self(vec![1; n])
    }

    pub fn as_slice(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `diag(d)·b·diag(d)`.
    pub fn apply(&self, b: &IntMatrix) -> IntMatrix {
        b.conjugate_by_signs(&self.0, false)
    }
}

impl fmt::Debug for Signing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Signing{:?}", self.0)
    }
}

impl Serialize for Signing {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Union-find whose links carry the parity of a vertex relative to its parent.
struct ParityForest {
    parent: Vec<usize>,
    parity: Vec<bool>,
    rank: Vec<u8>,
}

impl ParityForest {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            parity: vec![false; n],
            rank: vec![0; n],
        }
    }

    /// Root of `v` and the parity of `v` relative to it.
    fn find(&mut self, v: usize) -> (usize, bool) {
        let p = self.parent[v];
        if p == v {
            return (v, false);
        }
        let (root, up) = self.find(p);
        self.parity[v] ^= up;
        self.parent[v] = root;
        (root, self.parity[v])
    }

    /// Records `parity(u) xor parity(v) = odd`; false on contradiction.
    fn relate(&mut self, u: usize, v: usize, odd: bool) -> bool {
        let (ru, pu) = self.find(u);
        let (rv, pv) = self.find(v);
        if ru == rv {
            return pu ^ pv == odd;
        }
        let (child, root) = if self.rank[ru] < self.rank[rv] {
            (ru, rv)
        } else {
            (rv, ru)
        };
        self.parent[child] = root;
        self.parity[child] = pu ^ pv ^ odd;
        if self.rank[ru] == self.rank[rv] {
            self.rank[root] += 1;
        }
        true
    }
}

/// A signing `d` with every entry of `diag(d)·b·diag(d)` on the `target`
/// side of zero, or `None`.
///
/// The result is canonical: the lowest index of each support component gets
/// `+1`, and zero rows get `+1`.
pub fn signability(b: &IntMatrix, target: Target) -> Result<Option<Signing>> {
    if let Some((row, col)) = b.asymmetry() {
        return Err(Error::NotSymmetric { row, col });
    }
    let n = b.dim();
    let wrong_side = |x: &num_bigint::BigInt| match target {
        Target::Nonnegative => x.is_negative(),
        Target::Nonpositive => x.is_positive(),
    };
    if (0..n).any(|i| wrong_side(b.get(i, i))) {
        return Ok(None);
    }
    let mut forest = ParityForest::new(n);
    for i in 0..n {
        for j in 0..i {
            let x = b.get(i, j);
            if x.is_zero() {
                continue;
            }
            // d_i and d_j must differ exactly when the entry is on the wrong side
            if !forest.relate(i, j, wrong_side(x)) {
                return Ok(None);
            }
        }
    }
    let mut anchor: Vec<Option<bool>> = vec![None; n];
    let mut d = Vec::with_capacity(n);
    for v in 0..n {
        let (root, parity) = forest.find(v);
        let base = *anchor[root].get_or_insert(parity);
        d.push(if parity == base { 1 } else { -1 });
    }
    Ok(Some(Signing(d)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        IntMatrix::from_rows(&rows).unwrap()
    }

    fn fulvene_inverse() -> IntMatrix {
        mat(&[
            &[0, 0, 0, 0, 1, -1],
            &[0, 0, 1, 0, 0, -1],
            &[0, 1, 0, 0, -1, 1],
            &[0, 0, 0, 0, 0, 1],
            &[1, 0, -1, 0, 0, 1],
            &[-1, -1, 1, 1, 1, -2],
        ])
    }

    #[test]
    fn fulvene_inverse_signs_to_nonpositive_only() {
        let d = signability(&fulvene_inverse(), Target::Nonpositive)
            .unwrap()
            .unwrap();
        assert_eq!(d.as_slice(), &[1, 1, -1, -1, -1, 1]);
        assert_eq!(
            signability(&fulvene_inverse(), Target::Nonnegative).unwrap(),
            None
        );
    }

    #[test]
    fn identity_is_nonnegative() {
        let d = signability(&IntMatrix::identity(3), Target::Nonnegative)
            .unwrap()
            .unwrap();
        assert_eq!(d, Signing::all_positive(3));
        assert_eq!(
            signability(&IntMatrix::identity(3), Target::Nonpositive).unwrap(),
            None
        );
    }

    #[test]
    fn rejects_asymmetric_input() {
        assert!(matches!(
            signability(&mat(&[&[0, 1], &[0, 0]]), Target::Nonnegative),
            Err(Error::NotSymmetric { .. })
        ));
    }

    #[test]
    fn unbalanced_triangle() {
        // product of off-diagonal signs around the cycle is negative
        let b = mat(&[&[0, 1, 1], &[1, 0, -1], &[1, -1, 0]]);
        assert_eq!(signability(&b, Target::Nonnegative).unwrap(), None);
        assert!(signability(&b, Target::Nonpositive).unwrap().is_some());
    }

    #[test]
    fn second_component_anchored_at_lowest_index() {
        let b = mat(&[&[0, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 0, 0], &[0, -1, 0, 0]]);
        let d = signability(&b, Target::Nonnegative).unwrap().unwrap();
        assert_eq!(d.as_slice(), &[1, 1, 1, -1]);
    }

    #[test]
    fn signing_validates_entries() {
        assert!(Signing::new(vec![1, 0]).is_err());
        assert!(Signing::new(vec![1, -1]).is_ok());
    }
}
