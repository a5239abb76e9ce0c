//! Exact projective geometry over `Q(ω)`: the explicit realizations of C8
//! and the glued realizations of C13.

mod field;
mod projective;
mod realization;

pub use field::CycloRational;
pub use projective::{ProjLine, ProjPoint, Projective, Transform};
pub use realization::{
    check_realization, clusters, find_generic_psi, glue_realization, phi_c8, psi_from, psi_generic, psi_identity,
    Cluster, GenericPsi, Rejection, RealizationReport, Sign,
};
