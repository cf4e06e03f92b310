//! Burnside rings of finite permutation groups.
//!
//! The crate computes the subgroup lattice of a permutation group up to
//! conjugacy, the table of marks, the ghost map into the ring of integer
//! valued functions on conjugacy classes of subgroups, the unit group and the
//! Picard group of the Burnside ring, and a certificate recording the
//! checkable inputs of the vanishing of its Brauer group.
//!
//! ```
//! use burnside_core::{catalog, Config, burnside::MarksTable};
//!
//! let g = catalog::parse_group_spec("symmetric:3", &Config::default()).unwrap();
//! let marks = MarksTable::compute(&g, &Config::default()).unwrap();
//! assert_eq!(marks.class_count(), 4);
//! assert_eq!(marks.matrix().row(3), &[1, 1, 1, 1]);
//! ```

pub mod burnside;
pub mod cache;
pub mod catalog;
pub mod config;
pub mod error;
pub mod group;
pub mod invariants;
pub mod oracle;
pub mod par;
pub mod zlattice;

pub use config::{Budgets, Config, Exec};
pub use error::{Error, Result};

/// Version string embedded in every report.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
