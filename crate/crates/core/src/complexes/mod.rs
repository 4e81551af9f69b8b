//! Simplicial complexes, homology, and the complexes attached to
//! elementary morphisms and descending links.

pub mod epos;
pub mod homology;
pub mod morse;
pub mod simplicial;
pub mod snf;

pub use epos::{build_e, e_to_matching_map, EComplex, EPoset, FiberReport, MatchingMap};
pub use homology::{
    grounded_bound, grounded_certificate, homological_connectivity, reduced_homology,
    GroundedCertificate, HomologyGroup,
};
pub use morse::{descending_link, order_complex, positive_sublevel_complex, DescendingLink, OreFraction};
pub use simplicial::{
    flag_complex, matching_complex, size_budget, SimpleGraph, Simplex, SimplicialComplex,
};
