//! H-irregular labelings of grid graphs `P_m x P_n` under coverings by
//! `P_m x P_c` column windows.
//!
//! The crate builds the explicit vertex, edge and total labelings whose
//! window weights form consecutive runs, verifies arbitrary labelings
//! against arbitrary subgraph families, computes the general lower and upper
//! bounds on the three strengths, and certifies minimum budgets with an
//! exhaustive search.

pub mod arith;
pub mod bounds;
pub mod construct;
pub mod covering;
pub mod error;
pub mod grid;
pub mod io;
pub mod oracle;
pub mod report;
pub mod verify;

pub use arith::ceil_div;
pub use bounds::{
    bound_report, closed_form_strength, grid_lower_bound, lower_bound, upper_bound_exponent, BoundReport,
};
pub use construct::{
    construct_edge_labeling, construct_labeling, construct_total_labeling, construct_vertex_labeling, labeled_elements,
    Element, Labeling, LabelingKind, TotalVariant,
};
pub use covering::{enumerate_windows, is_edge_covering, CoverFamily, Covering, Subgraph};
pub use error::{Error, Result};
pub use grid::{canonical_edge, check_scope, make_grid, EdgeId, Graph, GridSpec, Orientation, VertexId};
pub use oracle::{exists_irregular, family_lower_bound, min_strength, Search, SearchOptions, SearchResult};
pub use report::{strength_report, sweep, write_sweep_csv, StrengthReport, SweepRow};
pub use verify::{subgraph_weight, verify_irregular, weight_profile, Verdict, Violation, WeightProfile};
