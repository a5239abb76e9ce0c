//! Exact lower-central-series invariants of line-arrangement groups.
//!
//! The pipeline runs from an abstract [`config::Configuration`] through
//! free-group [`words`] and exact integer linear algebra ([`exactlin`]) to
//! the graded pieces and the invariant `κ` ([`lcs`]). [`geom`] verifies
//! explicit realizations over `Q(ω)` and [`report`] assembles the checks
//! into machine-readable reports.

pub mod config;
pub mod error;
pub mod exactlin;
pub mod geom;
pub mod lcs;
pub mod report;
pub mod words;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/configurations.md")]
    mod configurations {}
    #[doc = include_str!("../../../book/src/words.md")]
    mod words {}
    #[doc = include_str!("../../../book/src/lattices.md")]
    mod lattices {}
    #[doc = include_str!("../../../book/src/graded.md")]
    mod graded {}
    #[doc = include_str!("../../../book/src/kappa.md")]
    mod kappa {}
    #[doc = include_str!("../../../book/src/maclane.md")]
    mod maclane {}
    #[doc = include_str!("../../../book/src/geometry.md")]
    mod geometry {}
    #[doc = include_str!("../../../book/src/gluing.md")]
    mod gluing {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
