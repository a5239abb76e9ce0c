use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::{add_assign_vec, negate_vec, sub_scaled, two_rows, IntMatrix};

/// Smith normal form `left * m * right = diag(divisors, 0, ...)`.
#[derive(Clone, Debug)]
pub struct Snf {
    /// Nonzero invariant factors, each dividing the next.
    pub divisors: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
    /// Inverse of `right`, kept so that quotient maps have an explicit section.
    pub right_inverse: IntMatrix,
}

impl Snf {
    pub fn rank(&self) -> usize {
        self.divisors.len()
    }
}

/// Column-major scratch space for the right transform; column operations
/// become row operations on the transposed storage.
struct Work {
    a: Vec<Vec<BigInt>>,
    left: Vec<Vec<BigInt>>,
    right_t: Vec<Vec<BigInt>>,
    right_inv: Vec<Vec<BigInt>>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap(i, j);
            self.left.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            for row in &mut self.a {
                row.swap(i, j);
            }
            self.right_t.swap(i, j);
            self.right_inv.swap(i, j);
        }
    }

    /// row_i -= q * row_t
    fn row_op(&mut self, i: usize, t: usize, q: &BigInt) {
        let (d, s) = two_rows(&mut self.a, i, t);
        sub_scaled(d, s, q, 0);
        let (d, s) = two_rows(&mut self.left, i, t);
        sub_scaled(d, s, q, 0);
    }

    /// col_j -= q * col_t; the inverse picks up row_t += q * row_j.
    fn col_op(&mut self, j: usize, t: usize, q: &BigInt) {
        for row in &mut self.a {
            if !row[t].is_zero() {
                let delta = q * &row[t];
                row[j] -= delta;
            }
        }
        let (d, s) = two_rows(&mut self.right_t, j, t);
        sub_scaled(d, s, q, 0);
        let (d, s) = two_rows(&mut self.right_inv, t, j);
        sub_scaled(d, s, &-q, 0);
    }
}

pub fn snf(m: &IntMatrix) -> Snf {
    let (nr, nc) = (m.rows(), m.cols());
    let mut w = Work {
        a: m.row_vecs(),
        left: IntMatrix::identity(nr).row_vecs(),
        right_t: IntMatrix::identity(nc).row_vecs(),
        right_inv: IntMatrix::identity(nc).row_vecs(),
    };
    let mut divisors = Vec::new();
    for t in 0..nr.min(nc) {
        let Some((bi, bj)) = min_entry(&w.a, t, |_, _| true) else {
            break;
        };
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);
        loop {
            let mut clean = true;
            for i in t + 1..nr {
                if !w.a[i][t].is_zero() {
                    let q = w.a[i][t].div_floor(&w.a[t][t]);
                    w.row_op(i, t, &q);
                    clean &= w.a[i][t].is_zero();
                }
            }
            for j in t + 1..nc {
                if !w.a[t][j].is_zero() {
                    let q = w.a[t][j].div_floor(&w.a[t][t]);
                    w.col_op(j, t, &q);
                    clean &= w.a[t][j].is_zero();
                }
            }
            if !clean {
                let (bi, bj) = min_entry(&w.a, t, |i, j| i == t || j == t).expect("pivot nonzero");
                w.swap_rows(t, bi);
                w.swap_cols(t, bj);
                continue;
            }
            let p = w.a[t][t].clone();
            let bad = (t + 1..nr).find(|&i| w.a[i][t + 1..].iter().any(|x| !x.is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    let (d, s) = two_rows(&mut w.a, t, i);
                    add_assign_vec(d, s);
                    let (d, s) = two_rows(&mut w.left, t, i);
                    add_assign_vec(d, s);
                }
                None => break,
            }
        }
        if w.a[t][t].is_negative() {
            negate_vec(&mut w.a[t]);
            negate_vec(&mut w.left[t]);
        }
        divisors.push(w.a[t][t].clone());
    }
    Snf {
        divisors,
        left: IntMatrix::from_rows(nr, w.left),
        right: IntMatrix::from_rows(nc, w.right_t).transpose(),
        right_inverse: IntMatrix::from_rows(nc, w.right_inv),
    }
}

/// Position of a nonzero entry of least absolute value in the lower-right
/// block starting at `(t, t)`, restricted by `keep`.
fn min_entry(
    a: &[Vec<BigInt>],
    t: usize,
    keep: impl Fn(usize, usize) -> bool,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() || !keep(i, j) {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(_, _, b)| &ax < b) {
                best = Some((i, j, ax));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::matrix::int_vec;

    fn check(m: &IntMatrix) -> Snf {
        let s = snf(m);
        let d = s.left.mul(m).unwrap().mul(&s.right).unwrap();
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let expect = if i == j && i < s.divisors.len() {
                    s.divisors[i].clone()
                } else {
                    BigInt::zero()
                };
                assert_eq!(d[(i, j)], expect, "entry ({i},{j})");
            }
        }
        assert_eq!(s.right.mul(&s.right_inverse).unwrap(), IntMatrix::identity(m.cols()));
        for w in s.divisors.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        s
    }

    #[test]
    fn diag_two_three() {
        let s = check(&IntMatrix::from_i64_rows(2, &[vec![2, 0], vec![0, 3]]));
        assert_eq!(s.divisors, int_vec(&[1, 6]));
    }

    #[test]
    fn zero_matrix() {
        let s = check(&IntMatrix::zeros(3, 2));
        assert!(s.divisors.is_empty());
    }

    #[test]
    fn rectangular() {
        let s = check(&IntMatrix::from_i64_rows(
            4,
            &[vec![2, 4, 4, 6], vec![-6, 6, 12, 0], vec![10, -4, -16, 2]],
        ));
        assert_eq!(s.divisors, int_vec(&[2, 2, 12]));
    }
}
