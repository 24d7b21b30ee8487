//! Exact sparse rational matrices.
//!
//! Tensor products use row-major flattening: the basis vector `e_i ⊗ f_j` of
//! `V ⊗ W` sits at index `i * dim(W) + j`. This is the only flattening
//! convention in the crate; duals reuse the index set of the original space.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// `base^exp` for an arbitrary signed exponent; `base` must be nonzero when `exp < 0`.
pub fn q_pow(base: &Q, exp: i64) -> Q {
    let mut acc = Q::one();
    for _ in 0..exp.unsigned_abs() {
        acc *= base;
    }
    if exp < 0 {
        acc.recip()
    } else {
        acc
    }
}

pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let parsed = match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|e| Error::Invalid(e.to_string()))?;
            let d = BigInt::from_str(d.trim()).map_err(|e| Error::Invalid(e.to_string()))?;
            if d.is_zero() {
                return Err(Error::Invalid(format!("zero denominator in `{s}`")));
            }
            Q::new(n, d)
        }
        None => Q::from_integer(BigInt::from_str(s).map_err(|e| Error::Invalid(e.to_string()))?),
    };
    Ok(parsed)
}

pub fn format_q(q: &Q) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Sparse matrix with exact rational entries. Zero entries are never stored,
/// so derived equality is equality of linear maps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Q>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal((0..n).map(|_| Q::one()))
    }

    pub fn diagonal(values: impl IntoIterator<Item = Q>) -> Self {
        let values: Vec<Q> = values.into_iter().collect();
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in values.into_iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    pub fn scalar(value: Q) -> Self {
        Self::diagonal([value])
    }

    pub fn from_rows(rows: &[Vec<Q>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Invalid("ragged matrix literal".into()));
        }
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let rows: Vec<Vec<Q>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| q_int(v)).collect())
            .collect();
        Self::from_rows(&rows).expect("rectangular literal")
    }

    /// Matrix of the map sending basis vector `j` to `scale[j] * e_{perm[j]}`.
    pub fn weighted_permutation(perm: &[usize], scale: &[Q]) -> Self {
        let mut m = Self::zeros(perm.len(), perm.len());
        for (j, (&i, s)) in perm.iter().zip(scale).enumerate() {
            m.set(i, j, s.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(Q::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Q)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        let mut out = vec![vec![Q::zero(); self.cols]; self.rows];
        for (i, j, v) in self.entries() {
            out[i][j] = v.clone();
        }
        out
    }

    /// `self · rhs`
    pub fn mul(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::domain(
                "matrix product",
                format!("{} rows", self.cols),
                format!("{} rows", rhs.rows),
            ));
        }
        let mut by_row: Vec<Vec<(usize, &Q)>> = vec![Vec::new(); rhs.rows];
        for (k, j, v) in rhs.entries() {
            by_row[k].push((j, v));
        }
        let mut acc: BTreeMap<(usize, usize), Q> = BTreeMap::new();
        for (i, k, a) in self.entries() {
            for &(j, b) in &by_row[k] {
                *acc.entry((i, j)).or_insert_with(Q::zero) += a * b;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(RatMatrix {
            rows: self.rows,
            cols: rhs.cols,
            entries: acc,
        })
    }

    pub fn kron(&self, rhs: &RatMatrix) -> RatMatrix {
        let mut out = RatMatrix::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for (i, j, a) in self.entries() {
            for (k, l, b) in rhs.entries() {
                out.entries
                    .insert((i * rhs.rows + k, j * rhs.cols + l), a * b);
            }
        }
        out
    }

    pub fn add(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::domain(
                "matrix sum",
                format!("{}x{}", self.rows, self.cols),
                format!("{}x{}", rhs.rows, rhs.cols),
            ));
        }
        let mut out = self.clone();
        for (i, j, v) in rhs.entries() {
            let sum = out.get(i, j) + v;
            out.set(i, j, sum);
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Q) -> RatMatrix {
        if s.is_zero() {
            return RatMatrix::zeros(self.rows, self.cols);
        }
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|(k, v)| (*k, v * s)).collect(),
        }
    }

    pub fn neg(&self) -> RatMatrix {
        self.scale(&-Q::one())
    }

    pub fn transpose(&self) -> RatMatrix {
        RatMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|(&(i, j), v)| ((j, i), v.clone())).collect(),
        }
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    /// Sum of diagonal entries.
    pub fn trace(&self) -> Result<Q> {
        if !self.is_square() {
            return Err(Error::NotEndo {
                source_obj: self.cols.to_string(),
                target_obj: self.rows.to_string(),
            });
        }
        Ok(self
            .entries()
            .filter(|(i, j, _)| i == j)
            .fold(Q::zero(), |acc, (_, _, v)| acc + v))
    }

    pub fn pow(&self, n: u32) -> Result<RatMatrix> {
        if !self.is_square() {
            return Err(Error::Invalid("power of a non-square matrix".into()));
        }
        let mut acc = RatMatrix::identity(self.rows);
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Rank by fraction-free Gaussian elimination over Q.
    pub fn rank(&self) -> usize {
        let mut rows = self.to_dense();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, pivot);
            let pivot_row = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && !row[col].is_zero() {
                    let factor = &row[col] / &pivot_row[col];
                    for (x, y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                        *x -= &factor * y;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn max_abs_height(&self) -> BigInt {
        self.entries
            .values()
            .map(|v| v.numer().abs().max(v.denom().abs()))
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Prints the matrix literal form `[[1, 2], [3/2, 0]]`. Matrices with zero
/// rows or columns print as `zeros(r, c)`.
impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows == 0 || self.cols == 0 {
            return write!(f, "zeros({}, {})", self.rows, self.cols);
        }
        let dense = self.to_dense();
        write!(f, "[")?;
        for (i, row) in dense.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let cells: Vec<String> = row.iter().map(format_q).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, String)>,
}

impl Serialize for RatMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries().map(|(i, j, v)| (i, j, format_q(v))).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RatMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = MatrixRepr::deserialize(deserializer)?;
        let mut m = RatMatrix::zeros(repr.rows, repr.cols);
        for (i, j, v) in repr.entries {
            if i >= repr.rows || j >= repr.cols {
                return Err(serde::de::Error::custom("matrix entry out of bounds"));
            }
            let q = parse_q(&v).map_err(serde::de::Error::custom)?;
            m.set(i, j, q);
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let n = b.first().map_or(0, Vec::len);
        a.iter()
            .map(|row| {
                (0..n)
                    .map(|j| row.iter().zip(b).map(|(x, brow)| x * brow[j]).sum())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn product_matches_dense_oracle() {
        let a = vec![vec![1, 0], vec![2, -1], vec![0, 3]];
        let b = vec![vec![4, 5, 0], vec![-2, 1, 1]];
        let expected = dense_mul(&a, &b);
        let to_m = |m: &Vec<Vec<i64>>| {
            RatMatrix::from_i64(&m.iter().map(Vec::as_slice).collect::<Vec<_>>())
        };
        assert_eq!(to_m(&a).mul(&to_m(&b)).unwrap(), to_m(&expected));
    }

    #[test]
    fn row_times_column() {
        let g = RatMatrix::from_i64(&[&[1, 0]]);
        let f = RatMatrix::from_i64(&[&[2], &[3]]);
        assert_eq!(g.mul(&f).unwrap(), RatMatrix::from_i64(&[&[2]]));
    }

    #[test]
    fn kron_uses_row_major_flattening() {
        let a = RatMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        let b = RatMatrix::from_i64(&[&[0, 5], &[6, 7]]);
        let k = a.kron(&b);
        for i in 0..2 {
            for j in 0..2 {
                for k2 in 0..2 {
                    for l in 0..2 {
                        assert_eq!(k.get(i * 2 + k2, j * 2 + l), a.get(i, j) * b.get(k2, l));
                    }
                }
            }
        }
        assert_eq!(
            RatMatrix::from_i64(&[&[2]]).kron(&RatMatrix::from_i64(&[&[3]])),
            RatMatrix::from_i64(&[&[6]])
        );
    }

    #[test]
    fn trace_and_errors() {
        assert_eq!(RatMatrix::from_i64(&[&[1, 2], &[3, 4]]).trace().unwrap(), q_int(5));
        assert_eq!(RatMatrix::zeros(3, 3).trace().unwrap(), q_int(0));
        assert!(RatMatrix::zeros(2, 3).trace().is_err());
        assert!(RatMatrix::zeros(2, 3).mul(&RatMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let mut m = RatMatrix::from_i64(&[&[1, 0], &[0, 1]]);
        m.set(0, 0, q_int(0));
        assert_eq!(m.nnz(), 1);
        let sum = m.add(&m.neg()).unwrap();
        assert!(sum.is_zero());
        assert_eq!(sum, RatMatrix::zeros(2, 2));
    }

    #[test]
    fn rationals_parse_and_print() {
        assert_eq!(parse_q("3/2").unwrap(), q_frac(3, 2));
        assert_eq!(parse_q("-4").unwrap(), q_int(-4));
        assert_eq!(parse_q("6/4").unwrap(), q_frac(3, 2));
        assert!(parse_q("1/0").is_err());
        assert_eq!(format_q(&q_frac(-3, 6)), "-1/2");
        let m = RatMatrix::from_rows(&[vec![q_int(1), q_int(2)], vec![q_frac(3, 2), q_int(0)]]).unwrap();
        assert_eq!(m.to_string(), "[[1, 2], [3/2, 0]]");
    }

    #[test]
    fn rank_and_power() {
        assert_eq!(RatMatrix::from_i64(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(RatMatrix::identity(3).rank(), 3);
        let a = RatMatrix::from_i64(&[&[1, 1], &[0, 1]]);
        assert_eq!(a.pow(3).unwrap(), RatMatrix::from_i64(&[&[1, 3], &[0, 1]]));
        assert_eq!(q_pow(&q_int(2), -3), q_frac(1, 8));
    }

    #[test]
    fn serde_round_trip() {
        let m = RatMatrix::from_rows(&[vec![q_frac(-1, 3), q_int(0)]]).unwrap();
        let json = serde_json::to_string(&m).unwrap();
        let back: RatMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(m, back);
    }
}
