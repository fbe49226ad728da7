//! Streaming estimation of the Euclidean Steiner forest cost for a dynamic
//! stream of colored grid points.
//!
//! The pipeline maintains, per color, a bank of mergeable linear sketches
//! (minimal-enclosing-square finder, net builder, and an MST sketch that
//! answers cost queries restricted to cells of a quad-tree square). After the
//! stream freezes, a dynamic program over a small set of quad-tree squares
//! combines subset MST estimates into a forest cost estimate, together with a
//! partition of the colors into trees.
//!
//! Exact offline oracles (`oracle`) and a subset-enumeration baseline are
//! included for cross-validation, plus stream generators and a CLI.

pub mod config;
pub mod corpus;
pub mod dp;
pub mod exec;
pub mod geometry;
pub mod mst;
pub mod nets;
pub mod oracle;
pub mod report;
pub mod simple_squares;
pub mod sketch;
pub mod stream;

pub use config::{Config, Constants};
pub use geometry::{ColoredPoint, PortalSet, ShiftedQuadTree, SquareId};
pub use report::Report;
pub use stream::StreamEvent;
