//! Exact computation and enumeration of vertex covers, feedback vertex sets,
//! and odd cycle transversals, with their connected variants.
//!
//! The solver pipeline enumerates minimal transversals and pads each one to
//! connectivity within an additive budget; for graphs with no induced
//! matching of size s the price-of-connectivity constants make the padded
//! search exact with a constant budget. The `gadget` module builds the
//! line-graph and girth reduction instances relating even cycle factors,
//! Hamiltonian paths, and connected vertex covers to the three transversal
//! problems, and checks each claimed equivalence by brute force.

pub mod bitset;
pub mod corpus;
pub mod dimacs;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod gadget;
pub mod graph;
pub mod solve;

pub use enumerate::{brute_force_minimal_sets, EnumerationStream, StreamKind};
pub use error::{Error, Result};
pub use gadget::{
    gadget_cfvs_girth, gadget_cfvs_linegraph, gadget_coct_girth, gadget_coct_linegraph,
    gadget_oct_girth, gadget_oct_linegraph, has_even_cycle_factor, has_hamiltonian_path,
    verify_gadget, CycleFactor, GadgetInstance, Provenance, VertexRole,
};
pub use graph::{Graph, LineGraphMap, VertexSet};
pub use solve::{
    brute_force_has_transversal, brute_force_min_connected, brute_force_min_size, connect_padding,
    min_connected_transversal, min_transversal, price_constant, satisfies, Certificate, PadBudget,
    PriceBound, SolveReport, TransversalKind,
};
