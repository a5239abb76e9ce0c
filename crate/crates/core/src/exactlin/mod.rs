//! Exact integer linear algebra: Hermite and Smith normal forms, kernels,
//! lattice membership with certificates, saturation, duals and quotients.
//!
//! Everything works over arbitrary-precision integers and acts on row
//! vectors (see [`IntMatrix`]).

mod hnf;
mod lattice;
mod matrix;
mod snf;

pub use hnf::{hnf, hnf_with_transform, is_hnf, left_kernel};
pub use lattice::{image, kernel_basis, Lattice, Membership, QuotientPresentation, Witness};
pub use matrix::{dot, int_vec, is_zero_vec, serde_int, IntMatrix};
pub use snf::{snf, Snf};
