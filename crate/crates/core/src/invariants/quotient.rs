use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::burnside::MarksTable;
use crate::config::Exec;
use crate::error::{Error, Result};
use crate::par;
use crate::zlattice::{gcd_u64, ModularLattice};

/// `R = A(G)/nC(G)` as an additive subgroup of `(Z/n)^c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientImage {
    modulus: u64,
    lattice: ModularLattice,
}

/// Serialized form of [`QuotientImage`]; `size` is a decimal string because
/// it can exceed 64 bits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientImageSummary {
    pub modulus: u64,
    pub classes: usize,
    pub additive_basis: Vec<Vec<i64>>,
    pub size: String,
}

/// Reduces the marks rows modulo `n = |G|` and echelonizes their span.
pub fn quotient_image(marks: &MarksTable) -> Result<QuotientImage> {
    let n = marks.group_order() as u64;
    let c = marks.class_count();
    let mut lattice = ModularLattice::new(vec![n as i64; c])?;
    for i in 0..c {
        lattice.insert(marks.matrix().row(i))?;
    }
    Ok(QuotientImage { modulus: n, lattice })
}

impl QuotientImage {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn classes(&self) -> usize {
        self.lattice.dim()
    }

    /// Echelon basis rows; row `i` has pivot `h_i` dividing `n` at column `i`.
    pub fn additive_basis(&self) -> &[Vec<i64>] {
        self.lattice.basis()
    }

    /// `|R|`, the product of `n / h_i` over the pivots.
    pub fn size(&self) -> BigUint {
        self.lattice.quotient_order()
    }

    /// Whether the reduction of `v` modulo `n` lies in `R`.
    pub fn contains(&self, v: &[i64]) -> Result<bool> {
        self.lattice.contains(v)
    }

    pub fn summary(&self) -> QuotientImageSummary {
        QuotientImageSummary {
            modulus: self.modulus,
            classes: self.classes(),
            additive_basis: self.additive_basis().to_vec(),
            size: self.size().to_string(),
        }
    }

    /// Element with mixed-radix coordinates `index` in the echelon basis.
    fn element(&self, mut index: u64) -> Vec<u64> {
        let n = self.modulus as i128;
        let c = self.classes();
        let mut v = vec![0i128; c];
        for (i, row) in self.additive_basis().iter().enumerate() {
            let radix = (self.modulus / row[i] as u64).max(1);
            let a = (index % radix) as i128;
            index /= radix;
            if a != 0 {
                for j in i..c {
                    v[j] = (v[j] + a * row[j] as i128) % n;
                }
            }
        }
        v.into_iter().map(|x| x.rem_euclid(n) as u64).collect()
    }

    fn enumeration_len(&self, budget: u64) -> Result<u64> {
        let size = self.size();
        match size.to_u64() {
            Some(s) if s <= budget => Ok(s),
            _ => Err(Error::budget(format!("quotient ring of size {size}"), budget)),
        }
    }

    /// Every element of `R`, each exactly once.
    pub fn elements(&self, budget: u64, exec: Exec) -> Result<Vec<Vec<u64>>> {
        let len = self.enumeration_len(budget)?;
        Ok(par::filter_map_range(exec, len, |i| Some(self.element(i))))
    }

    /// Whether every coordinate of `v` is a unit modulo `n`.
    pub fn is_unit_vector(&self, v: &[u64]) -> bool {
        v.iter().all(|&x| gcd_u64(x, self.modulus) == 1)
    }
}

/// The units of `R`, enumerated through the echelon basis.
///
/// An element of `R` is a unit of `R` iff it is a unit of `(Z/n)^c`: in a
/// finite ring the inverse of a unit is one of its powers, so it stays in
/// the subring.
pub fn unit_elements_of_image(
    image: &QuotientImage,
    budget: u64,
    exec: Exec,
) -> Result<Vec<Vec<u64>>> {
    let len = image.enumeration_len(budget)?;
    Ok(par::filter_map_range(exec, len, |i| {
        let v = image.element(i);
        image.is_unit_vector(&v).then_some(v)
    }))
}
