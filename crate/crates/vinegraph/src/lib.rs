//! Dependence graphs for high-dimensional, monotonically related variables.
//!
//! The crate builds dependence graphs from correlation matrices using
//! low-order partial correlations. Variables are rank-transformed to the
//! z-scale, clustered into homogeneous groups around latent components,
//! summarized by proxy latent variables, and linked through a truncated
//! partial-correlation vine constructed by sequential maximum spanning
//! trees. Three baseline constructions (correlation thresholding, the
//! conditional dependence graph from the precision matrix, and first-order
//! conditional independence screening) are provided for comparison.
//!
//! Data-parallel inner loops (column transforms, candidate edge weights,
//! clustering restarts) run on rayon when the default `parallel` feature is
//! enabled and fall back to sequential loops without it; results are
//! bit-identical either way.

pub mod correlation;
pub mod export;
pub mod factor;
pub mod graphs;
pub mod grouping;
pub mod io;
pub(crate) mod par;
pub mod pipeline;
pub mod transform;
pub mod vine;

pub use correlation::{
    empirical_corr, log_det, partial_corr_given_rest, partial_corr_recursive, CorrelationError,
    CorrelationMatrix, PartialCorrelation,
};
pub use factor::{
    fit_one_factor, make_proxy, residual_report, simulate_bifactor, simulate_one_factor,
    FactorError, OneFactorFit, ProxyVariable, ResidualReport,
};
pub use graphs::{graph_cdg, graph_foci, graph_tc, vine_to_graph, DependenceGraph, GraphError, NodeKind};
pub use grouping::{clv_partition, select_group_count, separate_weak, GroupPartition, GroupingError};
pub use pipeline::{compare_methods, export_graph, run_pipeline, PipelineConfig, PipelineError, RunReport};
pub use transform::{impute_missing, rank_to_normal, reorient, DataMatrix, TransformError, ZMatrix};
pub use vine::{build_truncated_vine, validate_vine, VineEdge, VineError, VineStructure, VineViolation};
