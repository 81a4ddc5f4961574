//! Pairs of edge-disjoint Hamiltonian paths and tours on geometric graphs.
//!
//! - [`instances`]: line, circle and general metric instances, paths, tours.
//! - [`depth`]: segment depth profiles, cut-points, pieces and 1-sections.
//! - [`constructions`]: the base pair catalog, concatenation, and the
//!   path and tour constructions on uniform instances.
//! - [`metric`]: exact single-solution solvers and the 3- and 2-ratio
//!   algorithms for general metrics.
//! - [`oracle`]: exhaustive pair search and the small-case claim checks.
//! - [`analysis`]: ratio reports and sweeps.
//! - [`properties`]: exhaustive structural checks on small instances.
//! - [`io`]: JSON, DOT and CSV formats.

pub mod analysis;
pub mod constructions;
pub mod depth;
pub mod error;
pub mod exec;
pub mod instances;
pub mod io;
pub mod metric;
pub mod oracle;
pub mod properties;

pub use error::{Error, Result};
pub use exec::Execution;
pub use instances::{
    CircleInstance, DisjointPair, HamPath, Instance, LineInstance, Metric, MetricInstance, Solution, Tour,
};
