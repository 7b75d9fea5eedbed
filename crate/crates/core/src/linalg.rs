//! Exact integer and rational matrices over arbitrary-precision integers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};

/// Dense square matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| BigInt::from((i == j) as u8))
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Self { n, entries }
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        Ok(Self {
            n,
            entries: rows.iter().flatten().cloned().map(Into::into).collect(),
        })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.n + j] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    /// First asymmetric position, if any.
    pub fn asymmetry(&self) -> Option<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| (0..i).map(move |j| (i, j)))
            .find(|&(i, j)| self.get(i, j) != self.get(j, i))
    }

    pub fn is_symmetric(&self) -> bool {
        self.asymmetry().is_none()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        IntMatrix::from_fn(n, |i, j| {
            (0..n).map(|k| self.get(i, k) * other.get(k, j)).sum()
        })
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix {
            n: self.n,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }

    /// `diag(d) · self · diag(d)` for a ±1 vector `d`, optionally negated.
    pub fn conjugate_by_signs(&self, d: &[i8], negate: bool) -> IntMatrix {
        assert_eq!(d.len(), self.n, "dimension mismatch");
        IntMatrix::from_fn(self.n, |i, j| {
            let flip = (d[i] * d[j] < 0) != negate;
            if flip {
                -self.get(i, j)
            } else {
                self.get(i, j).clone()
            }
        })
    }

    pub fn to_rational(&self) -> RationalMatrix {
        RationalMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect(),
        }
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self
            .rows()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        f.debug_tuple("IntMatrix").field(&rows).finish()
    }
}

/// Row-major nested integer lists. Entries outside the `i64` range are
/// written as decimal strings.
impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.n))?;
        for row in self.rows() {
            let row: Vec<serde_json::Value> = row.iter().map(bigint_json).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

pub(crate) fn bigint_json(x: &BigInt) -> serde_json::Value {
    match x.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(x.to_string()),
    }
}

/// Dense square matrix of exact rationals in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    n: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigRational]> {
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push((0..n).map(|k| self.get(i, k) * other.get(k, j)).sum());
            }
        }
        RationalMatrix { n, entries }
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let x = self.get(i, j);
                if i == j {
                    x.is_one()
                } else {
                    x.is_zero()
                }
            })
        })
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self
            .rows()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        f.debug_tuple("RationalMatrix").field(&rows).finish()
    }
}

/// Row-major nested lists of `"p/q"` strings (`"p"` when `q = 1`).
impl Serialize for RationalMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.n))?;
        for row in self.rows() {
            let row: Vec<String> = row.iter().map(ToString::to_string).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

/// Integer polynomial, coefficients in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coefficients: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coefficients
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}x^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coefficients.len()))?;
        for c in &self.coefficients {
            seq.serialize_element(&bigint_json(c))?;
        }
        seq.end()
    }
}

/// Determinant by Bareiss fraction-free elimination. Every division is exact.
pub fn determinant(a: &IntMatrix) -> BigInt {
    let n = a.dim();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = a.rows().map(<[BigInt]>::to_vec).collect();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Exact inverse by Gauss-Jordan elimination over the rationals.
pub fn inverse_exact(a: &IntMatrix) -> Result<RationalMatrix> {
    let n = a.dim();
    let mut left: Vec<Vec<BigRational>> = a
        .rows()
        .map(|r| r.iter().cloned().map(BigRational::from_integer).collect())
        .collect();
    let mut right: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from_integer(BigInt::from((i == j) as u8)))
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !left[r][col].is_zero())
            .ok_or(Error::Singular)?;
        left.swap(col, pivot);
        right.swap(col, pivot);
        let inv = left[col][col].recip();
        for x in left[col].iter_mut().chain(right[col].iter_mut()) {
            *x *= &inv;
        }
        for r in 0..n {
            if r == col || left[r][col].is_zero() {
                continue;
            }
            let factor = left[r][col].clone();
            for c in 0..n {
                let dl = &factor * &left[col][c];
                left[r][c] -= dl;
                let dr = &factor * &right[col][c];
                right[r][c] -= dr;
            }
        }
    }
    Ok(RationalMatrix {
        n,
        entries: right.into_iter().flatten().collect(),
    })
}

/// The integer matrix behind `r` when every denominator is one.
pub fn is_integral(r: &RationalMatrix) -> Option<IntMatrix> {
    r.entries
        .iter()
        .all(BigRational::is_integer)
        .then(|| IntMatrix {
            n: r.n,
            entries: r.entries.iter().map(BigRational::to_integer).collect(),
        })
}

/// Monic `det(xI - A)` by the Faddeev-LeVerrier recurrence.
pub fn char_poly(a: &IntMatrix) -> IntPolynomial {
    let n = a.dim();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // m holds M_k, starting from M_1 = I
    let mut m = IntMatrix::identity(n);
    for k in 1..=n {
        let mut am = a.mul(&m);
        let (q, rem) = am.trace().div_rem(&BigInt::from(k));
        debug_assert!(rem.is_zero());
        let c = -q;
        for i in 0..n {
            am.entries[i * n + i] += &c;
        }
        coeffs[n - k] = c;
        m = am;
    }
    IntPolynomial::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        IntMatrix::from_rows(&rows).unwrap()
    }

    fn fulvene() -> IntMatrix {
        mat(&[
            &[0, 1, 0, 0, 1, 0],
            &[1, 0, 1, 0, 0, 0],
            &[0, 1, 0, 1, 0, 0],
            &[0, 0, 1, 0, 1, 1],
            &[1, 0, 0, 1, 0, 0],
            &[0, 0, 0, 1, 0, 0],
        ])
    }

    /// Cofactor expansion along the first row.
    fn laplace(a: &IntMatrix) -> BigInt {
        fn rec(rows: &[Vec<BigInt>]) -> BigInt {
            let n = rows.len();
            if n == 0 {
                return BigInt::one();
            }
            (0..n)
                .map(|c| {
                    let minor: Vec<Vec<BigInt>> = rows[1..]
                        .iter()
                        .map(|r| {
                            r.iter()
                                .enumerate()
                                .filter(|(j, _)| *j != c)
                                .map(|(_, x)| x.clone())
                                .collect()
                        })
                        .collect();
                    let term = &rows[0][c] * rec(&minor);
                    if c % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        }
        rec(&a.rows().map(<[BigInt]>::to_vec).collect::<Vec<_>>())
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant(&mat(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(determinant(&fulvene()), BigInt::from(-1));
        assert_eq!(laplace(&fulvene()), BigInt::from(-1));
        assert_eq!(determinant(&IntMatrix::zeros(3)), BigInt::zero());
        assert_eq!(determinant(&IntMatrix::zeros(0)), BigInt::one());
    }

    #[test]
    fn determinant_matches_laplace_on_pseudorandom_matrices() {
        let mut state = 0x2545_f491_4f6c_dd1du64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 7) as i64 - 3
        };
        for n in 1..=5 {
            for _ in 0..200 {
                let a = IntMatrix::from_fn(n, |_, _| BigInt::from(next()));
                assert_eq!(determinant(&a), laplace(&a), "{a:?}");
            }
        }
    }

    #[test]
    fn fulvene_inverse_is_the_displayed_integer_matrix() {
        let inv = inverse_exact(&fulvene()).unwrap();
        let expected = mat(&[
            &[0, 0, 0, 0, 1, -1],
            &[0, 0, 1, 0, 0, -1],
            &[0, 1, 0, 0, -1, 1],
            &[0, 0, 0, 0, 0, 1],
            &[1, 0, -1, 0, 0, 1],
            &[-1, -1, 1, 1, 1, -2],
        ]);
        assert_eq!(is_integral(&inv), Some(expected));
        assert!(fulvene().to_rational().mul(&inv).is_identity());
    }

    #[test]
    fn inverse_edge_cases() {
        let k2 = mat(&[&[0, 1], &[1, 0]]);
        assert_eq!(is_integral(&inverse_exact(&k2).unwrap()), Some(k2));
        let id = IntMatrix::identity(4);
        assert_eq!(is_integral(&inverse_exact(&id).unwrap()), Some(id));
        assert_eq!(inverse_exact(&IntMatrix::zeros(2)), Err(Error::Singular));
        let half = inverse_exact(&mat(&[&[2, 0], &[0, 1]])).unwrap();
        assert!(is_integral(&half).is_none());
        assert_eq!(half.get(0, 0).to_string(), "1/2");
    }

    #[test]
    fn char_poly_examples() {
        let k2 = char_poly(&mat(&[&[0, 1], &[1, 0]]));
        assert_eq!(k2.coefficients(), &[-1, 0, 1].map(BigInt::from));
        assert_eq!(k2.to_string(), "x^2 - 1");
        let zero = char_poly(&IntMatrix::zeros(1));
        assert_eq!(zero.coefficients(), &[0, 1].map(BigInt::from));
        assert_eq!(zero.to_string(), "x");
    }

    #[test]
    fn char_poly_evaluates_to_shifted_determinants() {
        let a = fulvene();
        let p = char_poly(&a);
        for k in -2i64..=2 {
            let shifted =
                IntMatrix::from_fn(6, |i, j| BigInt::from(k * (i == j) as i64) - a.get(i, j));
            assert_eq!(p.eval(&BigInt::from(k)), laplace(&shifted));
        }
        // constant term times (-1)^n is det(A)
        assert_eq!(p.coefficients()[0], determinant(&a));
    }

    #[test]
    fn serializes_as_nested_lists() {
        let json = serde_json::to_string(&mat(&[&[0, -1], &[-1, 2]])).unwrap();
        assert_eq!(json, "[[0,-1],[-1,2]]");
        let inv = inverse_exact(&mat(&[&[2, 1], &[1, 2]])).unwrap();
        assert_eq!(
            serde_json::to_string(&inv).unwrap(),
            r#"[["2/3","-1/3"],["-1/3","2/3"]]"#
        );
    }
}
