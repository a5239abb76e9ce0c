use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::graded::LcsData;
use super::tensor::{add_tensor, bracket_with_generator, l2_dim, line_sum, unit};
use crate::config::{Configuration, IncidenceIndex};
use crate::exactlin::{serde_int, IntMatrix, Lattice};
use crate::words::AbelianGMap;

/// An element of `Hom(R_2, P_3)`: the `P_3` coordinates of the image of each
/// `R_2` generator, in generator order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomR2P3 {
    pub values: Vec<Vec<BigInt>>,
}

/// One labelled value, used in reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairValue {
    pub line: usize,
    pub point: String,
    #[serde(serialize_with = "serde_int::vec")]
    pub value: Vec<BigInt>,
}

impl HomR2P3 {
    pub fn zero(generators: usize, p3_rank: usize) -> Self {
        HomR2P3 {
            values: vec![vec![BigInt::zero(); p3_rank]; generators],
        }
    }

    pub fn from_flat(p3_rank: usize, flat: &[BigInt]) -> Self {
        HomR2P3 {
            values: flat.chunks(p3_rank.max(1)).map(<[BigInt]>::to_vec).collect(),
        }
    }

    pub fn flat(&self) -> Vec<BigInt> {
        self.values.iter().flatten().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().flatten().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        HomR2P3 {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
                .collect(),
        }
    }

    /// Nonzero values keyed by their generator.
    pub fn labelled(&self, c: &Configuration, generators: &[(usize, usize)]) -> Vec<PairValue> {
        generators
            .iter()
            .zip(&self.values)
            .filter(|(_, v)| v.iter().any(|x| !x.is_zero()))
            .map(|(&(line, p), v)| PairValue {
                line,
                point: c.points()[p].name.clone(),
                value: v.clone(),
            })
            .collect()
    }
}

/// `H ⊗ L_2` representative of `τ̃a(r̄(i, p))`:
/// `[[x_i, a(i,p)], X_p] + [x_i, Σ_j [x_j, a(j,p)]]` with `X_p = Σ_{j on p} x_j`,
/// written as `-X_p ⊗ [x_i, a(i,p)] + x_i ⊗ Σ_j [x_j, a(j,p)]`.
/// Defined for every pair of the incidence set, not only the generators.
pub fn tau_rep(c: &Configuration, index: &IncidenceIndex, a: &AbelianGMap, line: usize, point: usize) -> Vec<BigInt> {
    let n = c.n();
    let l2 = l2_dim(n);
    let lines = &c.points()[point].lines;
    let x_p = line_sum(n, lines.iter().copied());
    let at = |j: usize| a.get(index.pair_index(j, point).expect("incidence pair"));
    let mut out = vec![BigInt::zero(); n * l2];
    add_tensor(&mut out, &x_p, &bracket_with_generator(line - 1, at(line)), &BigInt::from(-1));
    let mut inner = vec![BigInt::zero(); l2];
    for &j in lines {
        for (k, v) in bracket_with_generator(j - 1, at(j)).into_iter().enumerate() {
            inner[k] += v;
        }
    }
    add_tensor(&mut out, &unit(n, line - 1), &inner, &BigInt::from(1));
    out
}

/// `τ̃a ∈ Hom(R_2, P_3)`.
pub fn tau_tilde(c: &Configuration, index: &IncidenceIndex, data: &LcsData, a: &AbelianGMap) -> HomR2P3 {
    HomR2P3 {
        values: data
            .generators()
            .iter()
            .map(|&(i, p)| data.p3_of(&tau_rep(c, index, a, i, p)))
            .collect(),
    }
}

/// The matrix of `τ̃ : A -> Hom(R_2, P_3)`, one row per basis vector of `A`.
pub fn tau_matrix(c: &Configuration, index: &IncidenceIndex, data: &LcsData) -> IntMatrix {
    let n = c.n();
    let pairs = index.pairs().len();
    let p3 = data.p3.free_rank();
    let gens = data.generators();
    let mut rows = Vec::with_capacity(n * pairs);
    for k in 0..pairs {
        let point = index.pairs()[k].1;
        for j in 0..n {
            let mut a = AbelianGMap::zero(n, pairs);
            a.set(k, unit(n, j));
            let mut row = vec![BigInt::zero(); gens.len() * p3];
            for (g, &(i, p)) in gens.iter().enumerate() {
                if p == point {
                    let v = data.p3_of(&tau_rep(c, index, &a, i, p));
                    row[g * p3..(g + 1) * p3].clone_from_slice(&v);
                }
            }
            rows.push(row);
        }
    }
    IntMatrix::from_rows(gens.len() * p3, rows)
}

/// `H ⊗ L_2` representative of `δf(r̄(i, p))` for an `L_2`-valued lift
/// `f̂` of `f ∈ Hom(H, P_2)`, where `δf(x ∧ y) = [x, f̂(y)] - [y, f̂(x)]`.
pub fn delta_rep(c: &Configuration, f_hat: &[Vec<BigInt>], line: usize, point: usize) -> Vec<BigInt> {
    let n = c.n();
    let l2 = l2_dim(n);
    let one = BigInt::from(1);
    let mut out = vec![BigInt::zero(); n * l2];
    for &j in &c.points()[point].lines {
        if j == line {
            continue;
        }
        add_tensor(&mut out, &unit(n, line - 1), &f_hat[j - 1], &one);
        add_tensor(&mut out, &unit(n, j - 1), &f_hat[line - 1], &-&one);
    }
    out
}

/// The canonical lift of `f`, given by the `P_2` coordinates of each `f(x_m)`.
pub fn lift_hom(data: &LcsData, f: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    f.iter().map(|v| data.p2().lift(v)).collect()
}

/// `δ̄f` computed from an arbitrary lift `f̂`.
pub fn delta_bar_from_lift(c: &Configuration, data: &LcsData, f_hat: &[Vec<BigInt>]) -> HomR2P3 {
    HomR2P3 {
        values: data
            .generators()
            .iter()
            .map(|&(i, p)| data.p3_of(&delta_rep(c, f_hat, i, p)))
            .collect(),
    }
}

/// `δ̄f ∈ Hom(R_2, P_3)` for `f ∈ Hom(H, P_2)` in `P_2` coordinates.
pub fn delta_bar(c: &Configuration, data: &LcsData, f: &[Vec<BigInt>]) -> HomR2P3 {
    delta_bar_from_lift(c, data, &lift_hom(data, f))
}

/// The matrix of `δ̄`, one row per `x_m ↦ e_s` in `Hom(H, P_2)`; row
/// `m * rank P_2 + s`.
pub fn delta_matrix(c: &Configuration, data: &LcsData) -> IntMatrix {
    let n = c.n();
    let p2 = data.p2().free_rank();
    let cols = data.generators().len() * data.p3.free_rank();
    let mut rows = Vec::with_capacity(n * p2);
    for m in 0..n {
        for s in 0..p2 {
            let mut f = vec![vec![BigInt::zero(); p2]; n];
            f[m][s] = BigInt::from(1);
            rows.push(delta_bar(c, data, &f).flat());
        }
    }
    IntMatrix::from_rows(cols, rows)
}

/// Generators `a⁽⁰⁾, a⁽¹⁾, a⁽²⁾` of `U ⊂ A`, flattened.
pub fn u_generators(c: &Configuration, index: &IncidenceIndex) -> Vec<Vec<BigInt>> {
    let n = c.n();
    let pairs = index.pairs();
    let mut out = Vec::new();
    let flat = |entries: &[(usize, Vec<BigInt>)]| {
        let mut a = AbelianGMap::zero(n, pairs.len());
        for (k, v) in entries {
            a.set(*k, v.clone());
        }
        a.flat()
    };
    for (k, &(i, _)) in pairs.iter().enumerate() {
        out.push(flat(&[(k, unit(n, i - 1))]));
    }
    for i in 1..=n {
        for &p in index.p0() {
            let entries: Vec<(usize, Vec<BigInt>)> = c.points()[p]
                .lines
                .iter()
                .map(|&j| (index.pair_index(j, p).expect("pair"), unit(n, i - 1)))
                .collect();
            out.push(flat(&entries));
        }
    }
    for i in 1..=n {
        let through: Vec<usize> = index.p0().iter().copied().filter(|&p| c.is_incident(i, p)).collect();
        for &p1 in &through {
            for &p2 in &through {
                let v = line_sum(n, c.points()[p2].lines.iter().copied());
                out.push(flat(&[(index.pair_index(i, p1).expect("pair"), v)]));
            }
        }
    }
    out
}

pub fn u_lattice(c: &Configuration, index: &IncidenceIndex) -> Lattice {
    Lattice::from_rows(c.n() * index.pairs().len(), u_generators(c, index))
}

/// Generators of `B`: `a(k, p) = x_m` for all `p` on `l_k`, one per `(k, m)`.
pub fn b_generators(c: &Configuration, index: &IncidenceIndex) -> Vec<Vec<BigInt>> {
    let n = c.n();
    let pairs = index.pairs();
    let mut out = Vec::new();
    for k in 1..=n {
        for m in 0..n {
            let mut a = AbelianGMap::zero(n, pairs.len());
            for (idx, &(i, _)) in pairs.iter().enumerate() {
                if i == k {
                    a.set(idx, unit(n, m));
                }
            }
            out.push(a.flat());
        }
    }
    out
}

pub fn b_lattice(c: &Configuration, index: &IncidenceIndex) -> Lattice {
    Lattice::from_rows(c.n() * index.pairs().len(), b_generators(c, index))
}
