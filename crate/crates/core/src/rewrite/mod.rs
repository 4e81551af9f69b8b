//! Edge replacement categories, their indirect product with graph
//! isomorphisms, and co-expansion complexes.

pub mod checks;
pub mod coexpand;
pub mod graph;
pub mod rule;

pub use checks::{check_iso_action, check_ore_laws, enumerate_expansions};
pub use coexpand::{
    bad_graph, basilica_graph, build_e_graph, contract, find_coexpansions, pattern_orbits,
    single_edge, EGraph, Pattern,
};
pub use graph::{automorphisms, find_isomorphism, isomorphisms, GraphIso, MultiGraph};
pub use rule::{apply_rule, height_graph, RewriteMorphism, Rule};
