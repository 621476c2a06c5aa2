//! Exact combinatorics of the semistable locus of the global nilpotent cone
//! of Higgs sheaves on a curve of genus `g >= 2`.
//!
//! * [`class`]: sheaf classes, twists, slopes, Euler form.
//! * [`tableau`]: Jordan types, the tableau filling, canonical regions.
//! * [`semistability`]: the region-slope and inequality tests.
//! * [`polytope`]: the inequality system in `d_2..d_s`, its lattice points, censuses.
//! * [`chains`]: 1-flags, chain types, the conditions on them and the map `κ`.
//! * [`kac`]: Kac polynomials of the `g`-loop quiver and a finite-field oracle.
//! * [`verify`]: self-check suites used by the command line.
//!
//! All arithmetic is exact.

pub mod chains;
pub mod class;
pub mod error;
pub mod kac;
pub mod partition;
pub mod polytope;
pub mod semistability;
pub mod tableau;
pub mod verify;

pub use class::{euler_form, slope, twist, ClassH, GenusContext, Slope};
pub use error::{Error, Result};
pub use semistability::{is_semistable_inequalities, is_semistable_regions, SemistabilityVerdict};
pub use tableau::{enumerate_canonical_regions, stratum_leq, BoxSet, CanonicalRegion, JordanRecord, JordanType};

/// Schema version stamped on cached and serialized reports.
pub const SCHEMA_VERSION: u32 = 1;
