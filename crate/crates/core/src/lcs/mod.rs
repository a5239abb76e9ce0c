//! Lower central series data and the invariant `κ`.

mod graded;
pub mod tensor;

pub use graded::{
    build_lcs, infinity_pairs, omega2, omega3, omega_generators, r_bar, DegreeTwo, LcsData, Ranks,
};
mod dual;
mod kappa;
pub mod maclane;
mod tau;

pub use dual::{
    label_point, parse_combination, parse_dual_data, parse_functional, parse_linear, parse_tensor, s_elements,
    DualData, DualElement, Identity,
};
pub use kappa::{KappaContext, KappaReport};
pub use tau::{
    b_generators, b_lattice, delta_bar, delta_bar_from_lift, delta_matrix, delta_rep, lift_hom, tau_matrix,
    tau_rep, tau_tilde, u_generators, u_lattice, HomR2P3, PairValue,
};
