//! Permutation pattern containment, avoidance-class enumeration, and signed
//! (even/odd) counting, plus a catalog of machine-checkable sign-balance
//! claims over those classes.
//!
//! Everything here is exact integer combinatorics at desk scale: classes are
//! generated either by a brute-force filter over S_n (the oracle) or by a
//! pruned prefix-DFS, and the two routes are required to agree member for
//! member. All values are immutable and all operations are pure, so they can
//! be shared across threads freely; parallel drivers merge counts by plain
//! addition and assemble rows in input order, which keeps every report
//! deterministic regardless of thread count.
//!
//! ```
//! use signbal::enumeration::{self, AvoidanceClassQuery};
//!
//! let query = AvoidanceClassQuery::new(9, "321".parse().unwrap()).unwrap();
//! assert_eq!(enumeration::class_cardinality(&query).unwrap(), 4862);
//! ```

pub mod enumeration;
pub mod error;
pub mod experiments;
pub mod patterns;
pub mod perm;
pub mod signbalance;

pub use error::{Error, Result};
pub use patterns::{OccurrenceWitness, PatternSet, SymmetryOp};
pub use perm::{InversionStats, Parity, Permutation};
pub use signbalance::SignedCount;
