//! Graph recolouring: reconfiguration graphs of proper (list) colourings.
//!
//! The crate has three layers:
//!
//! * [`graph`] and [`colouring`] hold the substrate types and the graph
//!   families used throughout (complete bipartite graphs, `K_{m,m}` minus a
//!   perfect matching, list-forcing gadgets, ...).
//! * [`explorer`] enumerates a reconfiguration graph exhaustively and
//!   answers distance, diameter, radius, connectivity and Hamiltonicity
//!   queries. It is the ground-truth oracle for everything else.
//! * [`renaming`] and [`kpq`] build recolouring sequences constructively,
//!   with certified length bounds, and evaluate the closed-form diameter
//!   bounds for complete bipartite graphs.
//!
//! [`checks`] bundles reproducible reports for the headline numbers.

pub mod checks;
pub mod colouring;
pub mod error;
pub mod explorer;
pub mod graph;
pub mod kpq;
pub mod renaming;

pub use colouring::{Colour, ColourSplit, Colouring, ListAssignment, Palette};
pub use error::{Error, Result};
pub use explorer::{RecolouringSequence, Step};
pub use graph::{Graph, GraphStats, Vertex};
