use std::sync::OnceLock;

use serde::Serialize;

use super::graded::{build_lcs, LcsData, Ranks};
use super::tau::{b_lattice, delta_matrix, tau_matrix, tau_tilde, u_lattice, HomR2P3, PairValue};
use crate::config::{Configuration, IncidenceIndex};
use crate::error::{Error, Result};
use crate::exactlin::{kernel_basis, IntMatrix, Lattice, Membership};
use crate::words::AbelianGMap;

/// A configuration together with everything needed to evaluate `κ` on it.
#[derive(Debug)]
pub struct KappaContext {
    config: Configuration,
    index: IncidenceIndex,
    data: LcsData,
    delta: IntMatrix,
    image_delta: Lattice,
    tau: OnceLock<IntMatrix>,
}

/// The verdict for one pair of conjugator maps.
#[derive(Clone, Debug, Serialize)]
pub struct KappaReport {
    pub lines: usize,
    pub relators: usize,
    pub ranks: Ranks,
    /// Nonzero values of `ḡ - ḡ'`.
    pub difference: Vec<PairValue>,
    /// Nonzero values of `τ̃(ḡ - ḡ')` in `P_3` coordinates.
    pub tau_value: Vec<PairValue>,
    /// Membership of `τ̃(ḡ - ḡ')` in `Im δ̄`.
    pub membership: Membership,
    pub zero: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_value: Option<u8>,
}

impl KappaContext {
    pub fn new(config: Configuration) -> Result<Self> {
        let index = IncidenceIndex::new(&config);
        let data = build_lcs(&config, &index)?;
        let delta = delta_matrix(&config, &data);
        let image_delta = Lattice::new(delta.clone());
        Ok(KappaContext {
            config,
            index,
            data,
            delta,
            image_delta,
            tau: OnceLock::new(),
        })
    }

    pub fn config(&self) -> &Configuration {
        &self.config
    }

    pub fn index(&self) -> &IncidenceIndex {
        &self.index
    }

    pub fn data(&self) -> &LcsData {
        &self.data
    }

    /// Dimension of `A = H^𝒜`.
    pub fn a_rank(&self) -> usize {
        self.config.n() * self.index.pairs().len()
    }

    pub fn delta_matrix(&self) -> &IntMatrix {
        &self.delta
    }

    pub fn image_delta(&self) -> &Lattice {
        &self.image_delta
    }

    pub fn tau_matrix(&self) -> &IntMatrix {
        self.tau.get_or_init(|| tau_matrix(&self.config, &self.index, &self.data))
    }

    pub fn tau_tilde(&self, a: &AbelianGMap) -> HomR2P3 {
        tau_tilde(&self.config, &self.index, &self.data, a)
    }

    pub fn u_lattice(&self) -> Lattice {
        u_lattice(&self.config, &self.index)
    }

    pub fn b_lattice(&self) -> Lattice {
        b_lattice(&self.config, &self.index)
    }

    /// `ker τ̃ ⊂ A`.
    pub fn tau_kernel(&self) -> Lattice {
        kernel_basis(self.tau_matrix())
    }

    /// `ker δ̄ ⊂ Hom(H, P_2)`.
    pub fn delta_kernel(&self) -> Lattice {
        kernel_basis(&self.delta)
    }

    /// `τ̃⁻¹(Im δ̄)`: the `A` part of the joint kernel of `[τ̃; -δ̄]`.
    pub fn tau_preimage_of_delta_image(&self) -> Result<Lattice> {
        let neg = IntMatrix::from_rows(
            self.delta.cols(),
            self.delta.row_vecs().into_iter().map(|r| r.into_iter().map(|x| -x).collect()).collect(),
        );
        let joint = kernel_basis(&self.tau_matrix().vstack(&neg)?);
        let a = self.a_rank();
        Ok(Lattice::new(joint.basis().column_block(0, a)))
    }

    fn check_domain(&self, g: &AbelianGMap) -> Result<()> {
        if g.n() != self.config.n() || g.pair_count() != self.index.pairs().len() {
            return Err(Error::Domain(format!(
                "map has {} pairs over {} generators; the configuration has {} pairs over {}",
                g.pair_count(),
                g.n(),
                self.index.pairs().len(),
                self.config.n()
            )));
        }
        Ok(())
    }

    /// `κ(ℛ(g), ℛ(g')) = τ(ḡ - ḡ')`, decided by membership in `Im δ̄`.
    pub fn kappa(&self, g: &AbelianGMap, g_prime: &AbelianGMap) -> Result<KappaReport> {
        self.check_domain(g)?;
        self.check_domain(g_prime)?;
        let diff = g.sub(g_prime)?;
        let value = self.tau_tilde(&diff);
        let membership = self.image_delta.member(&value.flat())?;
        let zero = membership.is_member();
        let t_value = if crate::lcs::maclane::is_maclane(&self.config) {
            Some(crate::lcs::maclane::t_functional(&self.config, &self.index, &diff)?)
        } else {
            None
        };
        Ok(KappaReport {
            lines: self.config.line_count(),
            relators: self.data.generators().len(),
            ranks: self.data.ranks(),
            difference: diff
                .nonzero(&self.config, &self.index)
                .into_iter()
                .map(|((line, point), value)| PairValue { line, point, value })
                .collect(),
            tau_value: value.labelled(&self.config, self.data.generators()),
            membership,
            zero,
            t_value,
        })
    }
}
