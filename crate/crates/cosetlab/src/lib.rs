//! Finite-group computations around the interplay of left and right cosets:
//! build the bipartite intersection graph of the left cosets of one subgroup
//! against the right cosets of another, decompose it into its complete
//! bipartite components ("chessboards"), relate those to double cosets, count
//! how many cosets of one kind a coset of the other kind meets, and construct
//! left/right/left-right transversals off the chessboard diagonals, with an
//! independent matching-based construction as a cross-check.
//!
//! Everything is explicit and exhaustive: groups are element lists closed
//! under composition, so the library is meant for desk-scale groups, not for
//! large-degree permutation domains.

mod analysis;
mod catalog;
mod coset;
mod counting;
mod error;
mod graph;
mod group;
mod groupfile;
mod perm;
mod render;
mod transversal;

pub use analysis::{
    analyze, transversal_section, AnalysisOptions, AnalysisReport, ChessboardReport,
    CountSection, TransversalMode, TransversalSection,
};
pub use catalog::{
    alternating, catalog_group, cyclic, dihedral, quaternion8, symmetric, CatalogSpec, Family,
};
pub use coset::{Coset, CosetSide};
pub use counting::{
    count_meeting_left_cosets, count_meeting_right_cosets, full_count_report, m_g_by_index,
    m_g_by_order, CountReport,
};
pub use error::{Error, Result};
pub use graph::{
    double_cosets, edge_intersection, verify_complete_bipartite,
    verify_double_coset_correspondence, verify_ratio, verify_tile_uniformity, Chessboard,
    CosetGraph, DoubleCoset, Verdict,
};
pub use group::{direct_product, PermutationGroup, DEFAULT_CAP};
pub use groupfile::{format_group_file, load_group, parse_generator_list, parse_group_file};
pub use perm::Permutation;
pub use render::{to_ascii, to_dot, CellStyle};
pub use transversal::{
    extendable_transversal, hall_matching_transversal, left_right_transversal, left_transversal,
    right_transversal, verify_transversal, Transversal, TransversalKind,
};
