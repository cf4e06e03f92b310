use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::{normalize_diagonal, smith_normal_form_big, ModularLattice, UnitGroupOfZn};
use crate::error::{Error, Result};

/// `Z/d1 x ... x Z/dk` with `d1 | d2 | ... | dk`, every `di >= 2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteAbelianPresentation {
    pub invariant_factors: Vec<u64>,
    pub generator_labels: Vec<String>,
}

impl FiniteAbelianPresentation {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// Presentation of a product of cyclic groups of the given orders.
    pub fn from_cyclic_orders(orders: impl IntoIterator<Item = u64>, labels: Vec<String>) -> Self {
        let diag = orders.into_iter().map(BigInt::from).collect();
        let invariant_factors = normalize_diagonal(diag)
            .into_iter()
            .map(|d| d.to_u64().expect("product of u64 orders fits"))
            .filter(|&d| d > 1)
            .collect();
        FiniteAbelianPresentation {
            invariant_factors,
            generator_labels: labels,
        }
    }

    pub fn order(&self) -> BigUint {
        self.invariant_factors
            .iter()
            .fold(BigUint::one(), |acc, &d| acc * BigUint::from(d))
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }
}

impl std::fmt::Display for FiniteAbelianPresentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.invariant_factors.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// Quotient of the product `target[0] x target[1] x ...` of unit groups by
/// the subgroup generated by `image_generators`.
///
/// Each generator is a tuple of residues, one per target factor. Generators
/// are mapped to exponent vectors by discrete log and accumulated, together
/// with the factor-order relations, into a Hermite basis; the invariant
/// factors of that basis are the invariant factors of the quotient.
pub fn subgroup_cokernel<I, V>(
    target: &[&UnitGroupOfZn],
    image_generators: I,
) -> Result<FiniteAbelianPresentation>
where
    I: IntoIterator<Item = V>,
    V: AsRef<[u64]>,
{
    let moduli: Vec<i64> = target
        .iter()
        .flat_map(|g| g.factors().iter().map(|f| f.order as i64))
        .collect();
    let mut lattice = ModularLattice::new(moduli)?;
    let mut exps = Vec::with_capacity(lattice.dim());
    for gen in image_generators {
        let gen = gen.as_ref();
        if gen.len() != target.len() {
            return Err(Error::DimensionMismatch {
                expected: target.len(),
                got: gen.len(),
            });
        }
        exps.clear();
        for (g, &u) in target.iter().zip(gen) {
            exps.extend(g.dlog(u)?.into_iter().map(|e| e as i64));
        }
        lattice.insert(&exps)?;
    }
    let rows = lattice
        .basis()
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let snf = smith_normal_form_big(rows);
    let invariant_factors: Vec<u64> = snf
        .nontrivial_factors()
        .into_iter()
        .map(|d| d.to_u64().ok_or(Error::Overflow("invariant factor")))
        .collect::<Result<_>>()?;
    let generator_labels = invariant_factors
        .iter()
        .enumerate()
        .map(|(i, d)| format!("q{i} (order {d})"))
        .collect();
    Ok(FiniteAbelianPresentation {
        invariant_factors,
        generator_labels,
    })
}
