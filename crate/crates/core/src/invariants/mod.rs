//! Units, the finite quotient ring `A(G)/nC(G)`, the Picard group, and the
//! certificate for the vanishing of the Brauer group.
//!
//! Throughout, `n = |G|`, so that `nC(G)` lies inside the image of the ghost
//! map and `R = A(G)/nC(G)` is a subring of `(Z/n)^c`.

mod certificate;
mod picard;
mod pullback;
mod quotient;
mod units;

pub use certificate::{certify, Certificate, Check, CITED_AXIOMS, CONCLUSION, PULLBACK_SAMPLES, PULLBACK_SEED};
pub use picard::{kernel_check, picard, PicardReport};
pub use pullback::{pullback_check, PullbackEvidence};
pub use quotient::{quotient_image, unit_elements_of_image, QuotientImage};
pub use units::{index_two_subgroups, units, UnitsReport};

/// Sign vector with `-1` exactly at the set bits of `mask`.
pub(crate) fn sign_vector(c: usize, mask: u64) -> Vec<i64> {
    (0..c).map(|j| if mask >> j & 1 == 1 { -1 } else { 1 }).collect()
}
