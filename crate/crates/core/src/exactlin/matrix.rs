use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense matrix of arbitrary-precision integers, stored row-major.
///
/// All linear maps in this crate act on row vectors: a map `Z^m -> Z^k`
/// is an `m x k` matrix whose `i`-th row is the image of the `i`-th basis
/// vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {}x{} matrix",
                entries.len(),
                rows,
                cols
            )));
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    /// Builds a matrix from rows of equal length. `cols` is needed so that an
    /// empty row list still has a well-defined width.
    pub fn from_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            entries.extend(r);
        }
        IntMatrix {
            rows: n,
            cols,
            entries,
        }
    }

    pub fn from_i64_rows(cols: usize, rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [BigInt] {
        &mut self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn apply(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.rows {
            return Err(Error::Dimension(format!(
                "vector of length {} against {} rows",
                v.len(),
                self.rows
            )));
        }
        let mut out = vec![BigInt::zero(); self.cols];
        for (i, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(self.row(i)) {
                if !b.is_zero() {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "cannot stack widths {} and {}",
                self.cols, other.cols
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(IntMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.rows != other.rows {
            return Err(Error::Dimension(format!(
                "cannot join heights {} and {}",
                self.rows, other.rows
            )));
        }
        let rows = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend_from_slice(other.row(i));
                r
            })
            .collect();
        Ok(IntMatrix::from_rows(self.cols + other.cols, rows))
    }

    /// Columns `start..end` of every row.
    pub fn column_block(&self, start: usize, end: usize) -> IntMatrix {
        let rows = (0..self.rows)
            .map(|i| self.row(i)[start..end].to_vec())
            .collect();
        IntMatrix::from_rows(end - start, rows)
    }

    pub fn max_abs(&self) -> BigInt {
        self.entries
            .iter()
            .map(|x| x.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix {}x{} ", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Dot product of two integer vectors of equal length.
pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    let mut s = BigInt::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += x * y;
        }
    }
    s
}

pub fn int_vec(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn is_zero_vec(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `dst -= q * src`, skipping zero entries of `src`, from column `start` on.
pub(crate) fn sub_scaled(dst: &mut [BigInt], src: &[BigInt], q: &BigInt, start: usize) {
    if q.is_zero() {
        return;
    }
    for k in start..dst.len() {
        let s = &src[k];
        if !s.is_zero() {
            dst[k] -= q * s;
        }
    }
}

pub(crate) fn add_assign_vec(dst: &mut [BigInt], src: &[BigInt]) {
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d += s;
        }
    }
}

pub(crate) fn negate_vec(v: &mut [BigInt]) {
    for x in v.iter_mut() {
        if !x.is_zero() {
            *x = -std::mem::take(x);
        }
    }
}

/// Mutable access to two distinct rows of a row list.
pub(crate) fn two_rows(rows: &mut [Vec<BigInt>], a: usize, b: usize) -> (&mut Vec<BigInt>, &mut Vec<BigInt>) {
    assert_ne!(a, b);
    if a < b {
        let (lo, hi) = rows.split_at_mut(b);
        (&mut lo[a], &mut hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(a);
        (&mut hi[0], &mut lo[b])
    }
}

/// Serializes integers as JSON numbers when they fit in an `i64`, as
/// decimal strings otherwise.
pub mod serde_int {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::ser::SerializeSeq;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match x.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&x.to_string()),
        }
    }

    pub fn vec<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            match x.to_i64() {
                Some(i) => seq.serialize_element(&i)?,
                None => seq.serialize_element(&x.to_string())?,
            }
        }
        seq.end()
    }
}
