//! Exact combinatorics and algebra for toric fans and spaces of monic
//! polynomial systems with bounded real root multiplicity.
//!
//! The crate has three layers:
//!
//! * integer/rational geometry of fans (`fan`, `linalg`, `lp`): validation,
//!   smoothness, completeness, lattice spanning, positive degree relations;
//! * combinatorics of the underlying simplicial complexes (`complex`):
//!   minimal non-faces, power complexes, fans of power complexes, and
//!   desk-scale integral homology of complexes and polyhedral products;
//! * exact polynomial systems over Q and Q(i) (`poly`, `sturm`, `polysys`,
//!   `configs`, `cox`, `ssrange`): multiplicity loci via gcds, Sturm-based
//!   real-root detection, membership oracles, the divisor/configuration
//!   model with stabilization and strip scanning, homogeneous-coordinate
//!   checks, and the truncated spectral-grid arithmetic with brute-force
//!   cross-checks of every closed-form dimension.
//!
//! Everything is exact: `BigInt`, `BigRational`, and Q(i) throughout. No
//! floating point is used anywhere.

pub mod complex;
pub mod configs;
pub mod cox;
pub mod error;
pub mod fan;
pub mod gaussint;
pub mod linalg;
pub mod lp;
pub mod num;
pub mod poly;
pub mod polysys;
pub mod ssrange;
pub mod sturm;

pub use error::{Error, Result};
pub use num::GaussianRational;
