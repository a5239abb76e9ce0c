use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::{negate_vec, sub_scaled, two_rows, IntMatrix};

/// Row-style Hermite normal form with zero rows dropped.
///
/// Pivots are positive, strictly increasing in column, and every entry above
/// a pivot lies in `[0, pivot)`. The row span is unchanged.
pub fn hnf(m: &IntMatrix) -> IntMatrix {
    let mut rows = m.row_vecs();
    let rank = echelon(&mut rows, 0, 0, m.cols()).len();
    rows.truncate(rank);
    IntMatrix::from_rows(m.cols(), rows)
}

/// Hermite normal form together with a unimodular `u` such that `u * m`
/// equals the HNF followed by zero rows.
pub fn hnf_with_transform(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let aug = m
        .hstack(&IntMatrix::identity(m.rows()))
        .expect("identity has matching height");
    let mut rows = aug.row_vecs();
    let rank = echelon(&mut rows, 0, 0, m.cols()).len();
    let full = IntMatrix::from_rows(aug.cols(), rows);
    let h = IntMatrix::from_rows(
        m.cols(),
        (0..rank).map(|i| full.row(i)[..m.cols()].to_vec()).collect(),
    );
    (h, full.column_block(m.cols(), aug.cols()))
}

/// Basis of the left kernel `{x : x * m = 0}`, returned in Hermite normal
/// form. The kernel of an integer matrix is always saturated.
pub fn left_kernel(m: &IntMatrix) -> IntMatrix {
    let k = m.rows();
    let aug = m
        .hstack(&IntMatrix::identity(k))
        .expect("identity has matching height");
    let mut rows = aug.row_vecs();
    let rank = echelon(&mut rows, 0, 0, m.cols()).len();
    let null = echelon(&mut rows, rank, m.cols(), aug.cols()).len();
    let kernel = rows[rank..rank + null]
        .iter()
        .map(|r| r[m.cols()..].to_vec())
        .collect();
    IntMatrix::from_rows(k, kernel)
}

/// Brings `rows[first_row..]` into Hermite form with respect to the columns
/// `col_start..col_end`, assuming those rows vanish left of `col_start`.
/// Rows before `first_row` are untouched. Returns the pivot columns; the
/// pivot rows are `first_row..first_row + pivots.len()`, and the remaining
/// rows are zero on the column range.
pub(crate) fn echelon(
    rows: &mut [Vec<BigInt>],
    first_row: usize,
    col_start: usize,
    col_end: usize,
) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = first_row;
    for col in col_start..col_end {
        if r == rows.len() {
            break;
        }
        let mut found = false;
        loop {
            let best = (r..rows.len())
                .filter(|&i| !rows[i][col].is_zero())
                .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
            let Some(best) = best else { break };
            found = true;
            rows.swap(r, best);
            let mut clean = true;
            for i in r + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let (dst, src) = two_rows(rows, i, r);
                let q = dst[col].div_floor(&src[col]);
                sub_scaled(dst, src, &q, col);
                if !dst[col].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if !found {
            continue;
        }
        if rows[r][col].is_negative() {
            negate_vec(&mut rows[r][col..]);
        }
        for i in first_row..r {
            if rows[i][col].is_zero() {
                continue;
            }
            let (dst, src) = two_rows(rows, i, r);
            let q = dst[col].div_floor(&src[col]);
            sub_scaled(dst, src, &q, col);
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Checks the shape of a row Hermite normal form.
pub fn is_hnf(m: &IntMatrix) -> bool {
    let mut last: Option<usize> = None;
    for i in 0..m.rows() {
        let row = m.row(i);
        let Some(p) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        if last.is_some_and(|l| p <= l) || !row[p].is_positive() {
            return false;
        }
        for k in 0..i {
            let above = &m[(k, p)];
            if above.is_negative() || above >= &row[p] {
                return false;
            }
        }
        last = Some(p);
    }
    true
}
