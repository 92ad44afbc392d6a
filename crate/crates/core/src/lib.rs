//! Broadcast networks from finite groups.
//!
//! This crate builds Cayley graphs from declarative group specifications,
//! simulates telephone-model broadcasting under several scheme families,
//! solves small instances exactly, computes Moore-type order bounds, and
//! maintains a replayable catalog of the best (degree, time)-broadcast
//! networks found.
//!
//! The quick tour:
//!
//! ```
//! use cayley_broadcast::{
//!     build_cayley, dihedral_scheme, broadcast_time_under_scheme,
//!     GeneratorSet, GroupSpec, SimOptions,
//! };
//!
//! let spec = GroupSpec::parse("dihedral(7)").unwrap();
//! let gens = GeneratorSet::parse(&spec, "(1,0),(1,1),(1,3)").unwrap();
//! let graph = build_cayley(&spec, &gens).unwrap();
//! let scheme = dihedral_scheme(3).unwrap();
//! let rounds = broadcast_time_under_scheme(&graph, &scheme, SimOptions::default()).unwrap();
//! assert_eq!(rounds, Some(4));
//! ```

#![forbid(unsafe_code)]

pub mod bounds;
pub mod catalog;
pub mod cayley;
pub mod error;
pub mod exact;
pub mod families;
pub mod graph;
pub mod group;
pub mod search;
pub mod sim;

pub use bounds::{bound_table, call_tree_bound, moore_bound, product_lower_bound, BoundTable};
pub use catalog::{
    catalog_update, catalog_verify, derive_product_record, seed_catalog, verify_record, Catalog,
    CatalogRecord, SeedOutcome, UpdateOutcome,
};
pub use cayley::{build_cayley, build_cayley_with_limit, hypercube, CayleyGraph};
pub use error::{Error, Result};
pub use exact::{
    exact_broadcast_time, exact_broadcast_time_cayley, exact_broadcast_time_from,
    exact_broadcast_time_from_with_cap, greedy_upper_bound, log2_lower_bound, ExactResult,
    DEFAULT_VERTEX_CAP,
};
pub use families::{
    dihedral_family, hypercube_family, verify_family_witness, FamilyReport, FamilyWitness,
};
pub use graph::{named_graph, Graph};
pub use group::{
    validate_generators, Element, GeneratorReport, GeneratorSet, GroupSpec, DEFAULT_ORDER_LIMIT,
};
pub use search::{
    run_search, GroupFamily, GroupScope, SchemePolicy, SearchOutcome, SearchSpace,
};
pub use sim::{
    broadcast_time_under_scheme, default_max_rounds, simulate, dihedral_scheme, validate_trace,
    BroadcastScheme, SimOptions, SimulationTrace, TraceViolation,
};
