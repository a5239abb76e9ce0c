use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::word::Word;

/// A power series in noncommuting `X_1..X_n`, truncated above degree 3.
///
/// Degree-`d` coefficients are indexed by words `X_{a_1}...X_{a_d}` read as
/// base-`n` numbers with the first letter most significant (0-based
/// letters), so index order is lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    n: usize,
    constant: BigInt,
    degree: [Vec<BigInt>; 3],
}

pub const MAX_DEGREE: usize = 3;

impl TruncatedSeries {
    pub fn zero(n: usize) -> Self {
        TruncatedSeries {
            n,
            constant: BigInt::zero(),
            degree: [vec![BigInt::zero(); n], vec![BigInt::zero(); n * n], vec![BigInt::zero(); n * n * n]],
        }
    }

    pub fn one(n: usize) -> Self {
        let mut s = Self::zero(n);
        s.constant = BigInt::one();
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn constant(&self) -> &BigInt {
        &self.constant
    }

    /// True when the constant term is 1, as for every group element.
    pub fn is_unit(&self) -> bool {
        self.constant.is_one()
    }

    /// Homogeneous component of degree `d` in `1..=3`.
    pub fn component(&self, d: usize) -> &[BigInt] {
        &self.degree[d - 1]
    }

    pub fn component_mut(&mut self, d: usize) -> &mut [BigInt] {
        &mut self.degree[d - 1]
    }

    /// The image of `w_i^{±1}`: `1 + X_i` or `1 - X_i + X_i^2 - X_i^3`.
    pub fn letter(n: usize, generator: usize, inverse: bool) -> Self {
        let i = generator - 1;
        let mut s = Self::one(n);
        let sign = if inverse { -1 } else { 1 };
        s.degree[0][i] = BigInt::from(sign);
        if inverse {
            s.degree[1][i * n + i] = BigInt::one();
            s.degree[2][(i * n + i) * n + i] = BigInt::from(-1);
        }
        s
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zero(n);
        out.constant = &self.constant * &other.constant;
        for d in 1..=MAX_DEGREE {
            let target = &mut out.degree[d - 1];
            for (k, t) in target.iter_mut().enumerate() {
                if !self.constant.is_zero() {
                    *t += &self.constant * &other.degree[d - 1][k];
                }
                if !other.constant.is_zero() {
                    *t += &self.degree[d - 1][k] * &other.constant;
                }
            }
            // split d = e + (d - e) with both parts positive
            for e in 1..d {
                let right_len = n.pow((d - e) as u32);
                for (a, x) in self.degree[e - 1].iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (b, y) in other.degree[d - e - 1].iter().enumerate() {
                        if !y.is_zero() {
                            target[a * right_len + b] += x * y;
                        }
                    }
                }
            }
        }
        out
    }
}

/// The Magnus expansion of a word, truncated at degree 3.
pub fn magnus(w: &Word, n: usize) -> TruncatedSeries {
    w.letters()
        .iter()
        .fold(TruncatedSeries::one(n), |acc, l| acc.mul(&TruncatedSeries::letter(n, l.generator, l.inverse)))
}
