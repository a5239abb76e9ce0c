use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::field::CycloRational;
use super::projective::{ProjLine, ProjPoint, Projective, Transform};
use crate::config::Configuration;
use crate::error::{Error, Result};

/// Which of the two conjugate realizations of C8.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// The eight lines of C8 over `Q(ω)`. `Minus` replaces `ω` by its conjugate.
pub fn phi_c8(sign: Sign) -> Vec<ProjLine> {
    // coefficients of z0, z1, z2 as (rational part, ω part)
    let table: [[(i64, i64); 3]; 8] = [
        [(1, 0), (0, 0), (0, 0)],
        [(0, 0), (1, 0), (0, 0)],
        [(-1, 0), (1, 0), (0, 0)],
        [(0, 0), (0, 0), (1, 0)],
        [(-1, 0), (0, 0), (1, 0)],
        [(0, 0), (0, 1), (1, 0)],
        [(-1, -1), (0, 1), (1, 0)],
        [(-1, 0), (1, 1), (1, 0)],
    ];
    table
        .iter()
        .map(|row| {
            let l = Projective::from_ints(*row).expect("nonzero line");
            match sign {
                Sign::Plus => l,
                Sign::Minus => l.conj(),
            }
        })
        .collect()
}

/// The point transform `z ↦ M z` with `M = [[1,0,0],[0,1,0],[u,v,w]]`.
/// Its action on lines fixes `z0 = 0`, `z1 = 0` and `z1 = z0`.
pub fn psi_from(u: BigRational, v: BigRational, w: BigRational) -> Transform {
    let c = CycloRational::rational;
    let z = CycloRational::zero;
    let o = CycloRational::one;
    Transform([[o(), z(), z()], [z(), o(), z()], [c(u), c(v), c(w)]])
}

fn random_nonzero<R: Rng>(rng: &mut R) -> BigRational {
    let num = loop {
        let k: i64 = rng.gen_range(-1000..=1000);
        if k != 0 {
            break k;
        }
    };
    let den: i64 = rng.gen_range(1..=1000);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// A transform of the shape of [`psi_from`] with random nonzero `u, v, w`.
pub fn psi_generic(seed: u64) -> Transform {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let u = random_nonzero(&mut rng);
    let v = random_nonzero(&mut rng);
    let w = random_nonzero(&mut rng);
    psi_from(u, v, w)
}

pub fn psi_identity() -> Transform {
    let one = || BigRational::from_integer(1.into());
    psi_from(BigRational::from_integer(0.into()), BigRational::from_integer(0.into()), one())
}

/// Thirteen lines: `φ⁺ l0..l7`, then `ψ φ^sign l3..l7`.
pub fn glue_realization(sign: Sign, psi: &Transform) -> Result<Vec<ProjLine>> {
    let mut lines = phi_c8(Sign::Plus);
    for l in phi_c8(sign).iter().skip(3) {
        lines.push(psi.apply_line(l)?);
    }
    Ok(lines)
}

/// A point where at least two lines meet, with every line through it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cluster {
    pub point: ProjPoint,
    pub lines: Vec<usize>,
}

/// All intersection points of a line arrangement.
pub fn clusters(lines: &[ProjLine]) -> Vec<Cluster> {
    let mut out: Vec<Cluster> = Vec::new();
    for a in 0..lines.len() {
        for b in a + 1..lines.len() {
            let Some(p) = lines[a].cross(&lines[b]) else { continue };
            if out.iter().any(|c| c.point == p) {
                continue;
            }
            let on = (0..lines.len()).filter(|&k| lines[k].incident(&p)).collect();
            out.push(Cluster { point: p, lines: on });
        }
    }
    out
}

/// How an arrangement of lines compares with a configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealizationReport {
    pub matches: bool,
    /// Configured points with no intersection point on exactly their lines.
    pub missing: Vec<String>,
    /// Intersection points whose line sets are not configured points.
    pub extra: Vec<Vec<usize>>,
    /// Pairs of lines that coincide.
    pub duplicate_lines: Vec<(usize, usize)>,
}

pub fn check_realization(c: &Configuration, lines: &[ProjLine]) -> RealizationReport {
    let mut duplicate_lines = Vec::new();
    for a in 0..lines.len() {
        for b in a + 1..lines.len() {
            if lines[a] == lines[b] {
                duplicate_lines.push((a, b));
            }
        }
    }
    let found: BTreeSet<Vec<usize>> = clusters(lines).into_iter().map(|c| c.lines).collect();
    let configured: BTreeSet<Vec<usize>> = c.points().iter().map(|p| p.lines.clone()).collect();
    let missing: Vec<String> = c
        .points()
        .iter()
        .filter(|p| !found.contains(&p.lines))
        .map(|p| p.name.clone())
        .collect();
    let extra: Vec<Vec<usize>> = found.difference(&configured).cloned().collect();
    let matches = lines.len() == c.line_count() && missing.is_empty() && extra.is_empty() && duplicate_lines.is_empty();
    RealizationReport {
        matches,
        missing,
        extra,
        duplicate_lines,
    }
}

/// A candidate ψ that was rejected, with the concurrences it produced.
#[derive(Clone, Debug, Serialize)]
pub struct Rejection {
    pub seed: Option<u64>,
    pub sign: Sign,
    pub report: RealizationReport,
}

/// The outcome of searching for a ψ that makes both glued realizations
/// of C13 generic.
#[derive(Clone, Debug, Serialize)]
pub struct GenericPsi {
    pub seed: u64,
    pub psi: Transform,
    pub plus_plus: Vec<ProjLine>,
    pub plus_minus: Vec<ProjLine>,
    pub rejected: Vec<Rejection>,
}

fn try_psi(c13: &Configuration, psi: &Transform, seed: Option<u64>, rejected: &mut Vec<Rejection>) -> Result<Option<[Vec<ProjLine>; 2]>> {
    let mut out = Vec::new();
    for sign in [Sign::Plus, Sign::Minus] {
        let lines = glue_realization(sign, psi)?;
        let report = check_realization(c13, &lines);
        if !report.matches {
            rejected.push(Rejection { seed, sign, report });
            return Ok(None);
        }
        out.push(lines);
    }
    let minus = out.pop().expect("two realizations");
    let plus = out.pop().expect("two realizations");
    Ok(Some([plus, minus]))
}

const MAX_ATTEMPTS: u64 = 1000;

/// Tries the seeds `seed, seed + 1, ...` until both glued realizations match
/// C13. With `degenerate_first`, the identity transform is tried (and
/// rejected) before any seed.
pub fn find_generic_psi(c13: &Configuration, seed: u64, degenerate_first: bool) -> Result<GenericPsi> {
    let mut rejected = Vec::new();
    if degenerate_first {
        let id = psi_identity();
        if let Some([pp, pm]) = try_psi(c13, &id, None, &mut rejected)? {
            return Ok(GenericPsi {
                seed,
                psi: id,
                plus_plus: pp,
                plus_minus: pm,
                rejected,
            });
        }
    }
    for s in (0..MAX_ATTEMPTS).map(|k| seed.wrapping_add(k)) {
        let psi = psi_generic(s);
        if let Some([pp, pm]) = try_psi(c13, &psi, Some(s), &mut rejected)? {
            return Ok(GenericPsi {
                seed: s,
                psi,
                plus_plus: pp,
                plus_minus: pm,
                rejected,
            });
        }
    }
    Err(Error::Domain(format!("no generic gluing among {MAX_ATTEMPTS} seeds from {seed}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{glue_c13, maclane_c8};

    #[test]
    fn l3_meets_l5_on_l1() {
        let phi = phi_c8(Sign::Plus);
        let p = phi[3].cross(&phi[5]).unwrap();
        assert_eq!(p, Projective::from_ints([(1, 0), (0, 0), (0, 0)]).unwrap());
        assert!(phi[1].incident(&p));
    }

    #[test]
    fn both_signs_realize_c8() {
        let c = maclane_c8();
        for sign in [Sign::Plus, Sign::Minus] {
            let r = check_realization(&c, &phi_c8(sign));
            assert!(r.matches, "{r:?}");
            assert_eq!(clusters(&phi_c8(sign)).len(), 12);
        }
    }

    #[test]
    fn conjugation_swaps_signs() {
        let plus: BTreeSet<String> = phi_c8(Sign::Plus).iter().map(|l| format!("{:?}", l.conj())).collect();
        let minus: BTreeSet<String> = phi_c8(Sign::Minus).iter().map(|l| format!("{l:?}")).collect();
        assert_eq!(plus, minus);
        assert_ne!(phi_c8(Sign::Plus), phi_c8(Sign::Minus));
    }

    #[test]
    fn perturbed_line_breaks_its_points() {
        let c = maclane_c8();
        let mut phi = phi_c8(Sign::Plus);
        phi[7] = Projective::from_ints([(-2, 0), (1, 1), (1, 0)]).unwrap();
        let r = check_realization(&c, &phi);
        assert!(!r.matches);
        assert_eq!(r.missing, ["p147", "p257", "p367"]);
        // each broken triple point splits into three double points
        assert_eq!(r.extra.len(), 9);
        assert!(r.extra.iter().all(|s| s.len() == 2));
        // moving the l0 coefficient too shifts l0 ∩ l7 onto p056
        phi[7] = Projective::from_ints([(-2, 0), (0, 1), (1, 0)]).unwrap();
        let r = check_realization(&c, &phi);
        assert!(r.missing.contains(&"p07".to_string()));
    }

    #[test]
    fn psi_fixes_shared_lines() {
        let psi = psi_generic(7);
        let phi = phi_c8(Sign::Plus);
        for l in &phi[..3] {
            assert_eq!(&psi.apply_line(l).unwrap(), l);
        }
        assert!(!psi.determinant().is_zero());
    }

    #[test]
    fn identity_psi_is_degenerate() {
        let c13 = glue_c13();
        let r = check_realization(&c13, &glue_realization(Sign::Plus, &psi_identity()).unwrap());
        assert!(!r.matches);
        assert_eq!(r.duplicate_lines.len(), 5);
        let g = find_generic_psi(&c13, 0, true).unwrap();
        assert_eq!(g.rejected[0].seed, None);
    }

    #[test]
    fn cross_points_are_distinct() {
        let c13 = glue_c13();
        let g = find_generic_psi(&c13, 1, false).unwrap();
        let cl = clusters(&g.plus_minus);
        let cross: std::collections::HashSet<&ProjPoint> = cl
            .iter()
            .filter(|c| c.lines.len() == 2 && (3..=7).contains(&c.lines[0]) && c.lines[1] >= 8)
            .map(|c| &c.point)
            .collect();
        assert_eq!(cross.len(), 25);
        assert_eq!(cl.len(), c13.point_count());
    }
}
