use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::tensor::{add_wedge_basis, d_matrix, l2_dim, tensor, unit, wedge};
use crate::config::{Configuration, IncidenceIndex};
use crate::error::{Error, Result};
use crate::exactlin::{IntMatrix, Lattice, QuotientPresentation};
use crate::words::{bracket_h_l2, LieBasis};

/// `r̄(i, p) = [x_i, Σ_{j on p} x_j]` in `Λ²H` coordinates.
pub fn r_bar(c: &Configuration, line: usize, point: usize) -> Vec<BigInt> {
    let n = c.n();
    let mut v = vec![BigInt::zero(); l2_dim(n)];
    let one = BigInt::from(1);
    for &j in &c.points()[point].lines {
        if j != line {
            add_wedge_basis(&mut v, line - 1, j - 1, n, &one);
        }
    }
    v
}

/// `ω_{ijk} = (x_i* - x_j*) ∧ (x_j* - x_k*)`.
pub fn omega3(n: usize, i: usize, j: usize, k: usize) -> Vec<BigInt> {
    let d = |a: usize, b: usize| -> Vec<BigInt> {
        let mut v = unit(n, a - 1);
        v[b - 1] -= 1;
        v
    };
    wedge(&d(i, j), &d(j, k))
}

/// `ω_{ij} = x_i* ∧ x_j*`.
pub fn omega2(n: usize, i: usize, j: usize) -> Vec<BigInt> {
    wedge(&unit(n, i - 1), &unit(n, j - 1))
}

/// Pairs `i < j` of affine lines meeting on the line at infinity.
pub fn infinity_pairs(c: &Configuration) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for p in c.points_on(0) {
        let ls: Vec<usize> = c.points()[p].lines.iter().copied().filter(|&l| l != 0).collect();
        for (a, &i) in ls.iter().enumerate() {
            for &j in &ls[a + 1..] {
                out.push((i, j));
            }
        }
    }
    out.sort();
    out
}

/// The `ω` forms: one `ω_{ijk}` per affine point on at least three lines
/// (its three smallest lines) and `ω_{ij}` for every pair meeting at infinity.
pub fn omega_generators(c: &Configuration, index: &IncidenceIndex) -> Vec<Vec<BigInt>> {
    let n = c.n();
    let mut out = Vec::new();
    for &p in index.p0() {
        let ls = &c.points()[p].lines;
        for (a, &i) in ls.iter().enumerate() {
            for (b, &j) in ls.iter().enumerate().skip(a + 1) {
                for &k in &ls[b + 1..] {
                    out.push(omega3(n, i, j, k));
                }
            }
        }
    }
    for (i, j) in infinity_pairs(c) {
        out.push(omega2(n, i, j));
    }
    out
}

/// `R_2`, `P_2 = L_2 / R_2` and `R_2⊥`.
#[derive(Clone, Debug)]
pub struct DegreeTwo {
    pub n: usize,
    /// Relator pairs in incidence order; the `R_2` generators are `r̄` of these.
    pub generators: Vec<(usize, usize)>,
    pub generator_matrix: IntMatrix,
    pub r2: Lattice,
    pub p2: QuotientPresentation,
    pub r2perp: Lattice,
}

impl DegreeTwo {
    pub fn new(c: &Configuration, index: &IncidenceIndex) -> Self {
        let n = c.n();
        let generators: Vec<(usize, usize)> = index.relator_pairs(c).collect();
        let rows = generators.iter().map(|&(i, p)| r_bar(c, i, p)).collect();
        let generator_matrix = IntMatrix::from_rows(l2_dim(n), rows);
        let r2 = Lattice::new(generator_matrix.clone());
        let p2 = QuotientPresentation::new(r2.clone());
        let r2perp = r2.perp();
        DegreeTwo {
            n,
            generators,
            generator_matrix,
            r2,
            p2,
            r2perp,
        }
    }
}

/// Everything about `gr_2` and `gr_3` that the invariant needs.
#[derive(Clone, Debug)]
pub struct LcsData {
    pub degree_two: DegreeTwo,
    pub basis3: LieBasis,
    /// `c : H ⊗ L_2 -> L_3` with rows indexed as in [`super::tensor`].
    pub bracket: IntMatrix,
    pub r3: Lattice,
    pub p3: QuotientPresentation,
    /// `R_3⊥ ⊂ L_3*` in Lyndon-dual coordinates.
    pub r3perp: Lattice,
    /// `c*(R_3⊥) ⊂ H* ⊗ Λ²H*`.
    pub r3perp_pulled: Lattice,
    /// `ker d* ∩ (H* ⊗ R_2⊥)`, computed without reference to `L_3`.
    pub r3perp_kernel: Lattice,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ranks {
    pub l2: usize,
    pub l3: usize,
    pub r2: usize,
    pub p2: usize,
    pub r3: usize,
    pub p3: usize,
    pub r3perp: usize,
    pub p2_torsion_free: bool,
    pub p3_torsion_free: bool,
    pub r3perp_routes_agree: bool,
}

impl LcsData {
    pub fn n(&self) -> usize {
        self.degree_two.n
    }

    pub fn generators(&self) -> &[(usize, usize)] {
        &self.degree_two.generators
    }

    pub fn p2(&self) -> &QuotientPresentation {
        &self.degree_two.p2
    }

    /// Applies `c` to an `H ⊗ L_2` vector.
    pub fn bracket_of(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.bracket.apply(v).expect("H ⊗ L_2 vector")
    }

    /// `P_3` coordinates of `c(v)`.
    pub fn p3_of(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.p3.project(&self.bracket_of(v))
    }

    /// The `L_3*` functional `φ` with `c*φ = s`, if any.
    pub fn descend(&self, s: &[BigInt]) -> Result<Vec<BigInt>> {
        let image = Lattice::new(self.bracket.transpose());
        match image.member(s)? {
            crate::exactlin::Membership::Member { coefficients } => Ok(coefficients),
            crate::exactlin::Membership::NonMember(_) => {
                Err(Error::Domain("form does not vanish on the image of d".into()))
            }
        }
    }

    pub fn ranks(&self) -> Ranks {
        Ranks {
            l2: l2_dim(self.n()),
            l3: self.basis3.dimension(),
            r2: self.degree_two.r2.rank(),
            p2: self.degree_two.p2.free_rank(),
            r3: self.r3.rank(),
            p3: self.p3.free_rank(),
            r3perp: self.r3perp.rank(),
            p2_torsion_free: self.degree_two.p2.is_torsion_free(),
            p3_torsion_free: self.p3.is_torsion_free(),
            r3perp_routes_agree: self.r3perp_pulled == self.r3perp_kernel,
        }
    }
}

/// Builds `R_2, R_3 = [H, R_2]`, the quotients and both descriptions of
/// `R_3⊥`. Refuses configurations whose `P_2` or `P_3` has torsion.
pub fn build_lcs(c: &Configuration, index: &IncidenceIndex) -> Result<LcsData> {
    let degree_two = DegreeTwo::new(c, index);
    if !degree_two.p2.is_torsion_free() {
        return Err(Error::Torsion(format!(
            "P_2 has invariant factors {:?}",
            degree_two.p2.elementary_divisors().iter().map(ToString::to_string).collect::<Vec<_>>()
        )));
    }
    let n = c.n();
    let l2 = l2_dim(n);
    let basis3 = LieBasis::new(n, 3);
    let bracket = bracket_h_l2(&basis3);

    let mut r3_rows = Vec::new();
    for m in 0..n {
        for k in 0..degree_two.generator_matrix.rows() {
            let t = tensor(&unit(n, m), degree_two.generator_matrix.row(k));
            r3_rows.push(bracket.apply(&t)?);
        }
    }
    let r3 = Lattice::from_rows(basis3.dimension(), r3_rows);
    let p3 = QuotientPresentation::new(r3.clone());
    if !p3.is_torsion_free() {
        return Err(Error::Torsion(format!(
            "P_3 has invariant factors {:?}",
            p3.elementary_divisors().iter().map(ToString::to_string).collect::<Vec<_>>()
        )));
    }
    let r3perp = r3.perp();
    let pulled = r3perp.canonical_form().mul(&bracket.transpose())?;
    let r3perp_pulled = Lattice::new(pulled);

    // (ker d* ∩ (H* ⊗ R_2⊥))⊥ = im d + H ⊗ R_2 for saturated R_2
    let mut rows = d_matrix(n).row_vecs();
    let r2_sat = degree_two.r2.saturate();
    for m in 0..n {
        for k in 0..r2_sat.canonical_form().rows() {
            rows.push(tensor(&unit(n, m), r2_sat.canonical_form().row(k)));
        }
    }
    let r3perp_kernel = Lattice::from_rows(n * l2, rows).perp();

    Ok(LcsData {
        degree_two,
        basis3,
        bracket,
        r3,
        p3,
        r3perp,
        r3perp_pulled,
        r3perp_kernel,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::maclane_c8;

    #[test]
    fn c8_ranks() {
        let c = maclane_c8();
        let idx = IncidenceIndex::new(&c);
        let data = build_lcs(&c, &idx).unwrap();
        assert_eq!(
            data.ranks(),
            Ranks {
                l2: 21,
                l3: 112,
                r2: 13,
                p2: 8,
                r3: 91,
                p3: 21,
                r3perp: 21,
                p2_torsion_free: true,
                p3_torsion_free: true,
                r3perp_routes_agree: true,
            }
        );
    }

    #[test]
    fn c8_omegas_span_r2perp() {
        let c = maclane_c8();
        let idx = IncidenceIndex::new(&c);
        let two = DegreeTwo::new(&c, &idx);
        let omegas = Lattice::from_rows(21, omega_generators(&c, &idx));
        assert_eq!(omegas, two.r2perp);
        assert_eq!(two.r2perp.perp(), two.r2);
        assert_eq!(infinity_pairs(&c), vec![(1, 2), (3, 4), (5, 6)]);
    }
}
