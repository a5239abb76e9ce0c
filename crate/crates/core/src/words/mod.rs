//! Free group words, the truncated Magnus expansion and Lie coordinates.

mod gmap;
mod lyndon;
mod magnus;
mod relators;
mod word;

pub use gmap::{parse_pair_key, AbelianGMap, GMap};
pub use lyndon::*;
pub use magnus::{magnus, TruncatedSeries, MAX_DEGREE};
pub use relators::{
    admissibility_check, admissibility_failures, all_point_relators, cyclic_products, expected_degree_two,
    parse_bracket_list, point_relators, relators_from_g, same_relator_sets, AdmissibilityFailure, BracketList,
    Relator,
};
pub use word::{Letter, Word};
