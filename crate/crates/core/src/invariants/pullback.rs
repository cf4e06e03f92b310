use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::QuotientImage;
use crate::burnside::{GhostVector, MarksTable};
use crate::config::Exec;
use crate::error::Result;
use crate::par;
use crate::zlattice::ModularLattice;

/// Concrete evidence that `A(G)` is the fibre product of `C(G)` and
/// `A(G)/nC(G)` over `C(G)/nC(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PullbackEvidence {
    pub samples: usize,
    pub seed: u64,
    pub members: usize,
    /// Vectors where ghost-image membership and membership of the reduction
    /// in `R` disagree.
    pub discrepancies: usize,
    /// `n * e_j` is in the image and reduces into `R` for every class `j`.
    pub multiples_of_n_in_image: bool,
    /// Coordinatewise reduction `Z^c -> (Z/n)^c` hits every residue.
    pub reduction_surjective: bool,
}

impl PullbackEvidence {
    pub fn passed(&self) -> bool {
        self.discrepancies == 0 && self.multiples_of_n_in_image && self.reduction_surjective
    }
}

/// Compares `v in Phi(A(G))` (exact triangular solve) with `v mod n in R`
/// (echelon reduction) on random vectors with entries in `[-n^2, n^2]`.
pub fn pullback_check(
    marks: &MarksTable,
    image: &QuotientImage,
    samples: usize,
    seed: u64,
    exec: Exec,
) -> Result<PullbackEvidence> {
    let n = marks.group_order() as i64;
    let c = marks.class_count();
    let bound = n * n;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vectors: Vec<Vec<i64>> = (0..samples)
        .map(|_| (0..c).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect();
    let verdicts = par::map_slice(exec, &vectors, |v| -> Result<(bool, bool)> {
        Ok((marks.is_in_image(&GhostVector(v.clone()))?, image.contains(v)?))
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let members = verdicts.iter().filter(|(a, _)| *a).count();
    let discrepancies = verdicts.iter().filter(|(a, b)| a != b).count();

    let mut multiples_of_n_in_image = true;
    for j in 0..c {
        let v = GhostVector::unit_vector(c, j, n);
        multiples_of_n_in_image &= marks.is_in_image(&v)? && image.contains(&v.0)?;
    }

    // the reductions of e_1, ..., e_c span all of (Z/n)^c
    let mut span = ModularLattice::new(vec![n; c])?;
    for j in 0..c {
        span.insert(&GhostVector::unit_vector(c, j, 1).0)?;
    }
    let reduction_surjective = span.quotient_order() == BigUint::from(n as u64).pow(c as u32);

    Ok(PullbackEvidence {
        samples,
        seed,
        members,
        discrepancies,
        multiples_of_n_in_image,
        reduction_surjective,
    })
}
