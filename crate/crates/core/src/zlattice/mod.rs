//! Exact integer linear algebra and finite abelian groups.
//!
//! Small matrices (tables of marks, ghost vectors) use `i64` entries with
//! checked or `i128` intermediate arithmetic; Smith forms and determinants are
//! computed over arbitrary-precision integers.

mod cokernel;
mod hnf;
mod matrix;
mod snf;
mod zn;

pub use cokernel::{subgroup_cokernel, FiniteAbelianPresentation};
pub use hnf::ModularLattice;
pub use matrix::{solve_lower_triangular, IntMatrix};
pub use snf::{normalize_diagonal, smith_normal_form, smith_normal_form_big, SmithForm};
pub use zn::{factorize, gcd_u64, CyclicFactor, UnitGroupOfZn};
