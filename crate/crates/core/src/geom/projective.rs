use serde::{Deserialize, Serialize};

use super::field::CycloRational;
use crate::error::{Error, Result};

/// Homogeneous coordinates `(z_0 : z_1 : z_2)`, normalized so the first
/// nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "[CycloRational; 3]", into = "[CycloRational; 3]")]
pub struct Projective([CycloRational; 3]);

/// A line `c_0 z_0 + c_1 z_1 + c_2 z_2 = 0`, stored by its coefficients.
pub type ProjLine = Projective;
pub type ProjPoint = Projective;

impl Projective {
    pub fn new(coords: [CycloRational; 3]) -> Result<Self> {
        let k = coords
            .iter()
            .position(|c| !c.is_zero())
            .ok_or_else(|| Error::Domain("all homogeneous coordinates vanish".into()))?;
        let inv = coords[k].inverse()?;
        Ok(Projective(coords.map(|c| &c * &inv)))
    }

    pub fn from_ints(coords: [(i64, i64); 3]) -> Result<Self> {
        Self::new(coords.map(|(a, b)| CycloRational::from_ints(a, b)))
    }

    pub fn coords(&self) -> &[CycloRational; 3] {
        &self.0
    }

    pub fn dot(&self, other: &Projective) -> CycloRational {
        (0..3).fold(CycloRational::zero(), |acc, k| &acc + &(&self.0[k] * &other.0[k]))
    }

    /// A point and a line are incident iff the pairing vanishes.
    pub fn incident(&self, other: &Projective) -> bool {
        self.dot(other).is_zero()
    }

    /// The meet of two lines (or join of two points); `None` if they coincide.
    pub fn cross(&self, other: &Projective) -> Option<Projective> {
        let (a, b) = (&self.0, &other.0);
        let c = |i: usize, j: usize| &(&a[i] * &b[j]) - &(&a[j] * &b[i]);
        Projective::new([c(1, 2), c(2, 0), c(0, 1)]).ok()
    }

    pub fn conj(&self) -> Projective {
        Projective::new(self.0.clone().map(|c| c.conj())).expect("conjugate of a nonzero vector")
    }
}

impl TryFrom<[CycloRational; 3]> for Projective {
    type Error = Error;
    fn try_from(c: [CycloRational; 3]) -> Result<Self> {
        Projective::new(c)
    }
}

impl From<Projective> for [CycloRational; 3] {
    fn from(p: Projective) -> Self {
        p.0
    }
}

/// A 3x3 matrix over `Q(ω)` acting on points as column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Transform(pub [[CycloRational; 3]; 3]);

impl Transform {
    pub fn apply_point(&self, p: &ProjPoint) -> Result<ProjPoint> {
        let m = &self.0;
        let z = p.coords();
        Projective::new(std::array::from_fn(|i| {
            (0..3).fold(CycloRational::zero(), |acc, k| &acc + &(&m[i][k] * &z[k]))
        }))
    }

    /// Lines move by `ℓ ↦ ℓ M⁻¹` so that incidence is preserved.
    pub fn apply_line(&self, l: &ProjLine) -> Result<ProjLine> {
        let inv = self.inverse()?;
        let c = l.coords();
        Projective::new(std::array::from_fn(|j| {
            (0..3).fold(CycloRational::zero(), |acc, k| &acc + &(&c[k] * &inv.0[k][j]))
        }))
    }

    pub fn determinant(&self) -> CycloRational {
        let m = &self.0;
        let minor = |r1: usize, r2: usize, c1: usize, c2: usize| &(&m[r1][c1] * &m[r2][c2]) - &(&m[r1][c2] * &m[r2][c1]);
        let t0 = &m[0][0] * &minor(1, 2, 1, 2);
        let t1 = &m[0][1] * &minor(1, 2, 0, 2);
        let t2 = &m[0][2] * &minor(1, 2, 0, 1);
        &(&t0 - &t1) + &t2
    }

    pub fn inverse(&self) -> Result<Transform> {
        let det = self.determinant();
        let inv_det = det.inverse()?;
        let m = &self.0;
        let cof = |r: usize, c: usize| {
            let rows: Vec<usize> = (0..3).filter(|&x| x != r).collect();
            let cols: Vec<usize> = (0..3).filter(|&x| x != c).collect();
            let v = &(&m[rows[0]][cols[0]] * &m[rows[1]][cols[1]]) - &(&m[rows[0]][cols[1]] * &m[rows[1]][cols[0]]);
            if (r + c) % 2 == 0 {
                v
            } else {
                -&v
            }
        };
        Ok(Transform(std::array::from_fn(|i| std::array::from_fn(|j| &cof(j, i) * &inv_det))))
    }
}
