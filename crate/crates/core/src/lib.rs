//! Cayley graphs on finite Abelian groups and their exact metric dimension.
//!
//! The library builds `Cay(G, S)` from a group given as a product of cyclic
//! factors and an inverse-closed connection set, computes metric dimension by
//! pruned exhaustive search, and checks the closed-form dimension predictions
//! for the classical families (prisms, Möbius ladders, hypercubes, antipodal
//! circulants) against that ground truth. A sweep harness enumerates every
//! group and connection set at desk scale and reports each instance where a
//! stated claim and the solver disagree.
//!
//! Start with the runnable programs under `examples/`; each one exercises a
//! major capability end to end. The `cayleydim` binary exposes the same
//! functionality as `dim`, `sweep`, and `export` subcommands.

pub mod cayley;
pub mod families;
pub mod graph;
pub mod group;
pub mod io;
pub mod iso;
pub mod metric;
pub mod sweep;

pub use cayley::{build_cayley, enumerate_connection_sets, CayleyError, ConnectionSet};
pub use families::{
    check_landmark_disjointness, complete, cycle, hypercube, mobius_convention_report,
    mobius_ladder, predict_antipodal_circulant, predict_characterization,
    predict_cyclic_involution, predict_mobius, predict_prism, prism, FamilyError,
    LandmarkDisjointness, MobiusConvention, MobiusConventionReport, MobiusVerdict,
    PredictedValue, Prediction, PredictionPair, PredictionSource, Variant,
};
pub use graph::{
    all_pairs_distances, bfs_distances, count_shortest_paths, distance_step_check, is_bipartite,
    is_connected, is_regular, DistanceMatrix, Graph, GraphError,
};
pub use group::{AbelianGroup, GroupElement, GroupError, DEFAULT_ORDER_CAP};
pub use io::{from_adjacency_list, from_dot, parse_auto, to_adjacency_list, to_dot, FormatError};
pub use iso::is_isomorphic;
pub use metric::{
    all_resolving_pairs, dim2_search, is_resolving, metric_dimension, twin_classes, twin_floor,
    DimensionOutcome, MetricError, ResolutionVerdict, ResolvingWitness,
};
pub use sweep::{
    abelian_groups_of_order, run_sweep, GatingVariant, SweepError, SweepOptions, SweepRecord,
    SweepReport, SweepRow,
};
