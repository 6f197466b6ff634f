//! Finite permutation groups, deficient conjugacy classes and the defect.
//!
//! An element `x ≠ 1` of a finite group `G` is *deficient* when the cyclic
//! subgroup `<x>` is strictly smaller than its centralizer `C_G(x)`. A group
//! has *defect* `j` when exactly `j` of its non-trivial conjugacy classes are
//! deficient. This crate enumerates permutation groups, computes their
//! defect, and recognizes the groups of defect 0 and 1 by their structure.
//!
//! ```
//! use defect_core::{classify, families, Form};
//!
//! let q8 = families::generalized_quaternion(8).unwrap();
//! let verdict = classify::classify(&q8).unwrap();
//! assert_eq!(verdict.defect, 1);
//! assert_eq!(verdict.form, Form::Q8);
//! ```

pub mod arith;
pub mod classify;
pub mod deficiency;
mod error;
pub mod families;
pub mod group;
pub mod harness;
pub mod perm;

pub use classify::{ClassificationVerdict, Form};
pub use deficiency::DeficiencyReport;
pub use error::{Error, Result};
pub use group::{ConjugacyClass, FrobeniusStructure, Group, Limits};
pub use perm::Perm;
