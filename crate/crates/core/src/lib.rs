//! Monic complex polynomials of degree `n` and the multisets of their `n`
//! roots, as two metric spaces linked by the Vieta map and its inverse.
//!
//! * [`metric`]: coefficient metric `d_P`, sup metric `d_inf`, and the
//!   bottleneck multiset metric `d_F`.
//! * [`vieta`]: roots to coefficients.
//! * [`rootfinder`]: coefficients to roots (Aberth-Ehrlich) and the Cauchy
//!   bound.
//! * [`perturbation`]: Ostrowski and Rahman-Schmeisser displacement bounds,
//!   cluster structure and disk counts.
//! * [`ordering`]: total orders on the complex plane, ordered selections and
//!   a discontinuity witness for the lexicographic selection.
//! * [`paths`]: paths through tuples with distinct coordinates and root
//!   tracking along coefficient segments.
//! * [`cli`]: the `rootspace` command-line front end.

pub mod cli;
pub mod error;
pub mod metric;
pub mod ordering;
pub mod paths;
pub mod perturbation;
pub mod rootfinder;
pub mod types;
pub mod vieta;

pub use error::{Error, Result};
pub use metric::{
    multiset_metric, multiset_metric_naive, permute, poly_metric, project, sup_metric,
    MatchingResult,
};
pub use num_complex::Complex64;
pub use ordering::{
    discontinuity_witness, lex_compare, mod_arg_compare, order_tuple, DiscontinuityWitness,
    OrderKind,
};
pub use paths::{connect_in_d, track, RootTrajectory, TuplePath};
pub use perturbation::{
    certify, cluster_structure, disk_counts, ostrowski, rahman_schmeisser, BoundCertificate,
    BoundName, ClusterStructure, OstrowskiData, RSData,
};
pub use rootfinder::{cauchy_bound, roots_of, solve, SolveReport, SolverConfig};
pub use types::{ComplexTuple, MonicPolynomial, Permutation, RootMultiset};
pub use vieta::{expand, symmetric_values, SymmetricValues};
