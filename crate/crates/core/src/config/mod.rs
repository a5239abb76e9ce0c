//! Abstract projective configurations: the incidence data every other
//! module is computed from.

mod automorphism;
mod builtin;
mod configuration;
mod random;

pub use automorphism::{automorphisms, is_group, isomorphisms, partition_check, ConfigAutomorphism, GroupSummary};
pub use builtin::{c13_partition, glue_c13, maclane_c8, second_copy_line};
pub use configuration::{
    ConfigFile, Configuration, IncidenceIndex, Point, PointFile, ValidationReport, Violation,
};
pub use random::random_configuration;
