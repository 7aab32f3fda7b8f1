//! Bitableau standardization of simple graphs.
//!
//! A graph on `1..=p` is encoded as a vertex adjacency bitableau ([`Vab`]) or
//! an incidence bitableau ([`Ib`]). Relabelings act on these tableaux by
//! transpositions, and the `[m, n]` order key ranks the labeled copies of a
//! graph. [`standardize`] climbs that order greedily, [`clique`] runs the
//! degree-restricted variant for k-clique detection, and [`oracle`] provides
//! exhaustive ground truth for both.
//!
//! ```
//! use bitableau_core::{parse_edge_list, standardize_vab};
//!
//! let tree = parse_edge_list("7 6\n1 7\n2 4\n2 6\n2 7\n3 6\n4 5").unwrap();
//! let std = standardize_vab(&tree);
//! assert_eq!(std.tableau.row(1), &[2, 3, 4]);
//! ```

pub mod bitableau;
pub mod clique;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod perm;
pub mod standardize;

pub use bitableau::{build_ib, build_vab, compare_keys, Ib, OrderKey, Vab};
pub use clique::{
    build_restricted_vab, find_k_clique, find_k_clique_traced, leading_clique_check,
    restricted_order_key, restricted_standardize, CliqueVerdict, RestrictedOrderKey,
    RestrictedOutcome, RestrictedStandardization, RestrictedVab,
};
pub use error::{Error, Result};
pub use graph::{
    enumerate_labeled_graphs, labeled_graph_count, parse_edge_list, EdgeLabeledGraph, Graph,
    DEFAULT_ENUMERATION_CAP,
};
pub use graph6::{encode_graph6, parse_graph6};
pub use oracle::{
    automorphism_count, canonical_form_exhaustive, clique_exhaustive, distinct_labeled_copies,
    iso_exhaustive, CanonicalForm, OracleConfig,
};
pub use perm::Permutation;
pub use standardize::{
    certified_difference, iso_check_ib, iso_check_vab, render_trace, standardize_ib,
    standardize_vab, step_budget, IbStandardizer, IsoVerdict, Move, NonIsoReason, Phase,
    StandardizationResult, TraceStep, VabStandardizer,
};
