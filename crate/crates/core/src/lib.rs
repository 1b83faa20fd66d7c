//! Exact-arithmetic machinery for tolerated Tverberg partitions.
//!
//! Everything here runs on arbitrary-precision rationals; there is no
//! floating-point path. The crate is `no_std` and only needs `alloc`.
//!
//! Module map:
//!
//! * [`geometry`]: rationals, points, hyperplanes and the orientation predicate.
//! * [`order_type`]: moment curve, homogeneity, Gale facets, path crossings.
//! * [`lp`]: exact phase-one simplex with Bland's rule and Farkas duals.
//! * [`feasibility`]: certified hull membership and common-point decisions,
//!   Tukey depth.
//! * [`tolerance`]: partitions, tolerance of a partition and of a set, bounds.
//! * [`search`]: seeded counterexample search for the alternating-partition
//!   constant, exact line values.

#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

mod combinatorics;
mod error;
pub mod feasibility;
pub mod geometry;
mod linalg;
pub mod lp;
pub mod order_type;
pub mod search;
pub mod tolerance;

pub use combinatorics::{set_partitions, SetPartitions};
pub use error::{Error, Result};
pub use feasibility::{
    hull_membership, hulls_common_point, tukey_depth, verify_centerpoint, Certificate,
    DepthReport, FeasibilityOutcome, Functional, ReplayError, Witness,
};
pub use geometry::{orientation, side_of, Hyperplane, Point, PointSet, Rational, Sign};
pub use order_type::{
    gale_facets, is_neighborly, is_order_homogeneous, largest_homogeneous_subset, moment_points,
    path_crossings, Crossings, FacetSet, Homogeneity, MomentSpec,
};
pub use search::{
    check_thm_main_inequalities, figure2_counterexample, find_counterexample, n_line, scan_c_lower,
    t_line, Counterexample, ScanReport, SearchOutcome, SearchStrategy, StrategyKind,
};
pub use tolerance::{
    alternating_partition, bound_even_d, bound_lemma32, bound_prop41, check_thm34,
    partition_tolerance, set_tolerance, Partition, SandwichReport, SetToleranceReport,
    ToleranceReport,
};
