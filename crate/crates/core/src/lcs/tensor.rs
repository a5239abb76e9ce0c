//! Coordinates on `H`, `L_2 = Λ²H` and `H ⊗ L_2` (and their duals).
//!
//! `H` has basis `x_1..x_n` stored 0-based; `Λ²H` uses `x_a ∧ x_b`, `a < b`,
//! at `pair_index(a, b)`; `H ⊗ Λ²H` puts `x_m ⊗ (x_a ∧ x_b)` at
//! `m * dim Λ²H + pair_index(a, b)`. Dual spaces use the dual bases, so
//! pairings are plain dot products.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactlin::IntMatrix;
use crate::words::pair_index;

pub fn l2_dim(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Adds `coeff * (x_a ∧ x_b)` for any `a != b`.
pub fn add_wedge_basis(out: &mut [BigInt], a: usize, b: usize, n: usize, coeff: &BigInt) {
    if a < b {
        out[pair_index(a, b, n)] += coeff;
    } else if b < a {
        out[pair_index(b, a, n)] -= coeff;
    }
}

/// `u ∧ v` for `u, v ∈ H` (or `H*`).
pub fn wedge(u: &[BigInt], v: &[BigInt]) -> Vec<BigInt> {
    let n = u.len();
    let mut out = vec![BigInt::zero(); l2_dim(n)];
    for a in 0..n {
        for b in a + 1..n {
            out[pair_index(a, b, n)] = &u[a] * &v[b] - &u[b] * &v[a];
        }
    }
    out
}

/// `[x_m, v]` for `v ∈ H`.
pub fn bracket_with_generator(m: usize, v: &[BigInt]) -> Vec<BigInt> {
    let n = v.len();
    let mut out = vec![BigInt::zero(); l2_dim(n)];
    for (b, coeff) in v.iter().enumerate() {
        if !coeff.is_zero() {
            add_wedge_basis(&mut out, m, b, n, coeff);
        }
    }
    out
}

/// Adds `coeff * (h ⊗ w)` to an `H ⊗ L_2` vector.
pub fn add_tensor(out: &mut [BigInt], h: &[BigInt], w: &[BigInt], coeff: &BigInt) {
    let l2 = w.len();
    for (m, hm) in h.iter().enumerate() {
        if hm.is_zero() {
            continue;
        }
        let scale = hm * coeff;
        for (k, wk) in w.iter().enumerate() {
            if !wk.is_zero() {
                out[m * l2 + k] += &scale * wk;
            }
        }
    }
}

/// `h ⊗ w`.
pub fn tensor(h: &[BigInt], w: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); h.len() * w.len()];
    add_tensor(&mut out, h, w, &BigInt::from(1));
    out
}

/// Unit vector `x_m`.
pub fn unit(n: usize, m: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[m] = BigInt::from(1);
    v
}

/// `d : Λ³H -> H ⊗ L_2`,
/// `x∧y∧z ↦ x⊗[y,z] + y⊗[z,x] + z⊗[x,y]`, one row per `a < b < c`.
pub fn d_matrix(n: usize) -> IntMatrix {
    let l2 = l2_dim(n);
    let one = BigInt::from(1);
    let mut rows = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let mut row = vec![BigInt::zero(); n * l2];
                for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                    let mut w = vec![BigInt::zero(); l2];
                    add_wedge_basis(&mut w, y, z, n, &one);
                    add_tensor(&mut row, &unit(n, x), &w, &one);
                }
                rows.push(row);
            }
        }
    }
    IntMatrix::from_rows(n * l2, rows)
}

/// Sum of the generators `x_j` over the lines `j` (1-based) of a point.
pub fn line_sum(n: usize, lines: impl IntoIterator<Item = usize>) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    for j in lines {
        v[j - 1] += 1;
    }
    v
}
