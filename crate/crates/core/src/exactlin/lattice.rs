use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::hnf::{hnf, left_kernel};
use super::matrix::{dot, serde_int, IntMatrix};
use super::snf::{snf, Snf};
use crate::error::{Error, Result};

/// A finitely generated subgroup of `Z^n`, canonically represented by the
/// Hermite normal form of its generators.
#[derive(Clone, Debug)]
pub struct Lattice {
    ambient_rank: usize,
    basis: IntMatrix,
    canonical: IntMatrix,
    smith: OnceLock<Snf>,
}

impl Lattice {
    /// The subgroup spanned by the rows of `generators`.
    pub fn new(generators: IntMatrix) -> Self {
        let canonical = hnf(&generators);
        Lattice {
            ambient_rank: generators.cols(),
            basis: generators,
            canonical,
            smith: OnceLock::new(),
        }
    }

    pub fn from_rows(ambient_rank: usize, rows: Vec<Vec<BigInt>>) -> Self {
        Self::new(IntMatrix::from_rows(ambient_rank, rows))
    }

    pub fn zero(ambient_rank: usize) -> Self {
        Self::new(IntMatrix::zeros(0, ambient_rank))
    }

    pub fn full(ambient_rank: usize) -> Self {
        Self::new(IntMatrix::identity(ambient_rank))
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    /// The generators this lattice was built from.
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn canonical_form(&self) -> &IntMatrix {
        &self.canonical
    }

    pub fn rank(&self) -> usize {
        self.canonical.rows()
    }

    pub fn smith(&self) -> &Snf {
        self.smith.get_or_init(|| snf(&self.basis))
    }

    fn check_ambient(&self, other: &Lattice) -> Result<()> {
        if self.ambient_rank != other.ambient_rank {
            return Err(Error::Dimension(format!(
                "ambient ranks {} and {} differ",
                self.ambient_rank, other.ambient_rank
            )));
        }
        Ok(())
    }

    /// Equality as subgroups: identical Hermite forms.
    pub fn equals(&self, other: &Lattice) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.canonical == other.canonical)
    }

    pub fn sum(&self, other: &Lattice) -> Result<Lattice> {
        self.check_ambient(other)?;
        Ok(Lattice::new(self.canonical.vstack(&other.canonical)?))
    }

    /// `self ⊆ other`, tested generator by generator.
    pub fn is_sublattice_of(&self, other: &Lattice) -> Result<bool> {
        self.check_ambient(other)?;
        for i in 0..self.canonical.rows() {
            if !other.contains(self.canonical.row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All integer functionals vanishing on the lattice.
    pub fn perp(&self) -> Lattice {
        Lattice::new(left_kernel(&self.canonical.transpose()))
    }

    /// The smallest saturated lattice containing this one.
    pub fn saturate(&self) -> Lattice {
        self.perp().perp()
    }

    pub fn is_saturated(&self) -> bool {
        self.smith().divisors.iter().all(One::is_one)
    }

    pub fn contains(&self, v: &[BigInt]) -> Result<bool> {
        Ok(matches!(self.member(v)?, Membership::Member { .. }))
    }

    /// Decides `v ∈ self`. On success the certificate expresses `v` in the
    /// generators; on failure the witness is a functional that is divisible
    /// by `modulus` on every generator but not on `v` (modulus 0 means `v`
    /// is outside the rational span).
    pub fn member(&self, v: &[BigInt]) -> Result<Membership> {
        if v.len() != self.ambient_rank {
            return Err(Error::Dimension(format!(
                "vector of length {} in a lattice of ambient rank {}",
                v.len(),
                self.ambient_rank
            )));
        }
        let s = self.smith();
        let y = s.right.apply(v)?;
        let mut z = vec![BigInt::zero(); self.basis.rows()];
        for (k, yk) in y.iter().enumerate() {
            let modulus = s.divisors.get(k).cloned().unwrap_or_else(BigInt::zero);
            let ok = if modulus.is_zero() {
                yk.is_zero()
            } else {
                yk.is_multiple_of(&modulus)
            };
            if !ok {
                let functional = s.right.column(k);
                return Ok(Membership::NonMember(Witness {
                    value: yk.clone(),
                    functional,
                    modulus,
                }));
            }
            if k < s.divisors.len() {
                z[k] = yk / &s.divisors[k];
            }
        }
        let coefficients = s.left.apply(&z)?;
        Ok(Membership::Member { coefficients })
    }
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_rank == other.ambient_rank && self.canonical == other.canonical
    }
}

impl Eq for Lattice {}

/// Integer kernel `{x : x * m = 0}` as a lattice.
pub fn kernel_basis(m: &IntMatrix) -> Lattice {
    Lattice::new(left_kernel(m))
}

/// Image `{x * m}` as a lattice.
pub fn image(m: &IntMatrix) -> Lattice {
    Lattice::new(m.clone())
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Membership {
    Member {
        #[serde(serialize_with = "serde_int::vec")]
        coefficients: Vec<BigInt>,
    },
    NonMember(Witness),
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member { .. })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    #[serde(serialize_with = "serde_int::vec")]
    pub functional: Vec<BigInt>,
    #[serde(serialize_with = "serde_int::serialize")]
    pub modulus: BigInt,
    #[serde(serialize_with = "serde_int::serialize")]
    pub value: BigInt,
}

impl Witness {
    /// Re-checks the witness against the lattice generators and the vector.
    pub fn verify(&self, lattice: &Lattice, v: &[BigInt]) -> bool {
        let divisible = |x: &BigInt| {
            if self.modulus.is_zero() {
                x.is_zero()
            } else {
                x.is_multiple_of(&self.modulus)
            }
        };
        let gens = lattice.basis();
        (0..gens.rows()).all(|i| divisible(&dot(&self.functional, gens.row(i))))
            && !divisible(&dot(&self.functional, v))
    }
}

/// `Z^n / R` for a relator lattice `R`, with explicit coordinates.
#[derive(Clone, Debug)]
pub struct QuotientPresentation {
    ambient_rank: usize,
    relators: Lattice,
    elementary_divisors: Vec<BigInt>,
    free_rank: usize,
    /// `ambient x free_rank`: ambient coordinates to free quotient coordinates.
    projection: IntMatrix,
    /// `free_rank x ambient`: a lift of each free quotient basis vector.
    section: IntMatrix,
}

impl QuotientPresentation {
    pub fn new(relators: Lattice) -> Self {
        let n = relators.ambient_rank();
        let s = relators.smith();
        let r = s.rank();
        let elementary_divisors = s.divisors.iter().filter(|d| !d.is_one()).cloned().collect();
        let projection = s.right.column_block(r, n);
        let section = IntMatrix::from_rows(
            n,
            (r..n).map(|k| s.right_inverse.row(k).to_vec()).collect(),
        );
        QuotientPresentation {
            ambient_rank: n,
            free_rank: n - r,
            elementary_divisors,
            projection,
            section,
            relators,
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn relator_lattice(&self) -> &Lattice {
        &self.relators
    }

    /// Invariant factors greater than one.
    pub fn elementary_divisors(&self) -> &[BigInt] {
        &self.elementary_divisors
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn is_torsion_free(&self) -> bool {
        self.elementary_divisors.is_empty()
    }

    pub fn projection(&self) -> &IntMatrix {
        &self.projection
    }

    pub fn section(&self) -> &IntMatrix {
        &self.section
    }

    /// Free quotient coordinates of an ambient vector.
    pub fn project(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.projection.apply(v).expect("ambient length")
    }

    /// An ambient representative of a quotient vector.
    pub fn lift(&self, q: &[BigInt]) -> Vec<BigInt> {
        self.section.apply(q).expect("quotient length")
    }
}
