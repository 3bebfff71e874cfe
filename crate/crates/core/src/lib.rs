//! Exact arithmetic for partition statistics and truncated q-series.
//!
//! The crate enumerates integer partitions, computes their multiplicity and
//! hook-length statistics, builds the associated generating functions as
//! truncated power series over exact coefficient rings (rationals,
//! polynomials in the deformation parameter `b`, polynomials in marker
//! variables), and machine-checks a family of identities relating the two
//! kinds of statistics — coefficient by coefficient, with no floating point
//! and no tolerances.
//!
//! Layout:
//!
//! * [`partition`] — partitions, enumeration, conjugation, hook lengths,
//!   multiplicity statistics;
//! * [`ring`] — exact rational scalars and the coefficient-ring abstraction;
//! * [`bpoly`] — dense polynomials in `b`;
//! * [`upoly`] — capped multivariate polynomials in marker variables;
//! * [`series`] — truncated q-series over any coefficient ring, with
//!   guarded infinite-product evaluation;
//! * [`genfun`] — the generating functions themselves: hook-weight and
//!   multiplicity truncations, closed moment formulas, brute-force sums;
//! * [`verify`] — one named, swept, exact check per identity.

pub mod bpoly;
pub mod genfun;
pub mod partition;
pub mod ring;
pub mod series;
pub mod upoly;
pub mod verify;

pub use bpoly::{bpoly_binom, BPoly, BPolyRing};
pub use partition::{enumerate_partitions, Partition, PartitionError, PartitionIter, StatVector};
pub use ring::{binom_u64, CoeffRing, Rat, RationalField};
pub use series::{euler_inverse, geometric_factor, product_truncated, QSeries, SeriesError};
pub use upoly::{UPoly, UPolyRing};
pub use verify::{
    quadratic_gap_check, verify, verify_all, FirstFailure, Params, Status, TheoremId,
    VerificationReport, VerifyError, ALL_THEOREMS,
};
