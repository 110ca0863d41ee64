//! Exact spectral and mixing analysis of the "transpose top-2 with
//! random shuffle" on the alternating group A_n.
//!
//! One step of the walk multiplies the current permutation by a
//! uniformly random element of {identity} ∪ {(i, n-1, n), (i, n, n-1) :
//! 1 ≤ i ≤ n-2}, a set of 2n-3 even permutations. This crate computes,
//! without approximation where possible:
//!
//! - the full eigenvalue spectrum of the transition operator from
//!   standard Young tableau contents ([`spectrum`]),
//! - exact k-step distributions by convolution over all of A_n, their
//!   total-variation distance to uniform, and fixed-point moments
//!   ([`walk`]),
//! - closed-form moment formulas and the upper/lower mixing-time bounds
//!   that exhibit the total-variation cutoff at (n - 3/2) ln n
//!   ([`bounds`]),
//! - the group-algebra identities behind the spectrum ([`jm`]),
//! - seeded, reproducible Monte Carlo simulation for degrees far beyond
//!   exhaustive reach ([`montecarlo`]).

pub mod bounds;
pub mod error;
pub mod jm;
pub mod measure;
pub mod montecarlo;
pub mod perm;
pub mod spectrum;
pub mod tableaux;
pub mod walk;

pub use bounds::{
    cutoff_time, expected_fixed_points, fixed_point_variance, lower_bound_fixed_points,
    upper_bound_envelope, upper_bound_spectral, BoundPoint,
};
pub use error::{Error, Result};
pub use measure::MeasureSpec;
pub use montecarlo::{estimate_fixed_point_stats, WalkStats};
pub use perm::{Orientation, Parity, Perm, PermRank};
pub use spectrum::{EigenvalueCase, Spectrum, SpectrumEntry};
pub use tableaux::{Partition, Tableau};
pub use walk::{ActionTable, DistVector};
