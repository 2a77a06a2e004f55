//! Cyclic regularities of strings.
//!
//! A string is *k-cyclic periodic* when it splits into blocks of length `k`
//! that are all rotations of each other, e.g. `aaab·aaba·abaa·baaa`. This
//! crate decides and witnesses such decompositions and builds several
//! analyses on top of them:
//!
//! - [`period`]: k-cyclic decompositions, all cyclic periods, the smallest
//!   one, and the cyclic-periodic array over prefixes;
//! - [`runs`]: maximal cyclic periodic factors;
//! - [`cover`]: covers by rotations of a prefix;
//! - [`text`]: rotations and least-rotation canonical forms;
//! - [`lce`]: constant-time longest-common-extension queries;
//! - [`oracle`]: brute-force reference implementations for cross-checking.
//!
//! Positions in the public API are 1-based and intervals are inclusive.
//!
//! ```
//! use cyclorex::{period, Text};
//!
//! let x = Text::try_from("aaabaabaabaabaaa").unwrap();
//! let d = period::k_cyclic_decompose(&x, 4).unwrap().unwrap();
//! assert_eq!(d.block_count, 4);
//! ```

pub mod bench;
pub mod cli;
pub mod cover;
pub mod error;
pub mod lce;
pub mod oracle;
pub mod period;
pub mod runs;
pub mod text;

pub use cover::{
    all_cyclic_covers, is_k_cyclic_coverable, k_cyclic_cover_report, smallest_cyclic_cover,
    CoverReport, Interval,
};
pub use error::{Error, Result};
pub use lce::{lce_reverse, LceIndex, TwoWayLce};
pub use period::{
    all_cyclic_periods, cyclic_period_array, is_k_cyclic_periodic, k_cyclic_decompose,
    smallest_cyclic_period, CyclicDecomposition, CyclicPeriod, CyclicPeriodArray,
};
pub use runs::{
    is_cyclic_periodic_substring, maximal_cyclic_runs, maximal_k_cyclic_runs, Run, Witness,
};
pub use text::{
    canonical_rotation, is_rotation, least_rotation_offset, rotate, RotationShift, Text,
};
