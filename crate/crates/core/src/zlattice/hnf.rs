use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// A full-rank sublattice `L` of `Z^k` containing `m_i * e_i` for fixed
/// moduli `m_i >= 1`, kept as an upper-triangular Hermite basis.
///
/// Vectors are added one at a time; all entries stay reduced below the
/// moduli, so `i64` storage with `i128` intermediates never overflows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularLattice {
    moduli: Vec<i64>,
    basis: Vec<Vec<i64>>,
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

impl ModularLattice {
    pub fn new(moduli: Vec<i64>) -> Result<Self> {
        if let Some(&bad) = moduli.iter().find(|&&m| m < 1) {
            return Err(Error::Internal(format!("lattice modulus {bad} must be positive")));
        }
        let k = moduli.len();
        let basis = (0..k)
            .map(|i| {
                let mut row = vec![0; k];
                row[i] = moduli[i];
                row
            })
            .collect();
        Ok(ModularLattice { moduli, basis })
    }

    pub fn dim(&self) -> usize {
        self.moduli.len()
    }

    pub fn moduli(&self) -> &[i64] {
        &self.moduli
    }

    /// Basis rows; row `i` has zeros before column `i` and a positive pivot
    /// at column `i` dividing `m_i`.
    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<i64> {
        (0..self.dim()).map(|i| self.basis[i][i]).collect()
    }

    /// `[Z^k : L]`, the product of the pivots.
    pub fn index(&self) -> BigUint {
        self.pivots()
            .iter()
            .fold(BigUint::one(), |acc, &h| acc * BigUint::from(h as u64))
    }

    /// `[L : (m_1 Z, ..., m_k Z)]`, the order of `L` modulo the moduli.
    pub fn quotient_order(&self) -> BigUint {
        self.moduli
            .iter()
            .zip(self.pivots())
            .fold(BigUint::one(), |acc, (&m, h)| acc * BigUint::from((m / h) as u64))
    }

    fn reduced(&self, v: &[i64]) -> Result<Vec<i128>> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: v.len(),
            });
        }
        Ok(v.iter()
            .zip(&self.moduli)
            .map(|(&x, &m)| (x as i128).rem_euclid(m as i128))
            .collect())
    }

    pub fn contains(&self, v: &[i64]) -> Result<bool> {
        let mut v = self.reduced(v)?;
        for i in 0..self.dim() {
            let h = self.basis[i][i] as i128;
            if v[i] % h != 0 {
                return Ok(false);
            }
            let q = v[i] / h;
            if q != 0 {
                for j in i..self.dim() {
                    v[j] = (v[j] - q * self.basis[i][j] as i128).rem_euclid(self.moduli[j] as i128);
                }
            }
        }
        Ok(true)
    }

    /// Adds `v` to the lattice; returns whether the lattice grew.
    pub fn insert(&mut self, v: &[i64]) -> Result<bool> {
        let k = self.dim();
        let mut v = self.reduced(v)?;
        let mut grew = false;
        for i in 0..k {
            if v[i] == 0 {
                continue;
            }
            let h = self.basis[i][i] as i128;
            let (g, a, b) = ext_gcd(h, v[i]);
            let (vh, hh) = (v[i] / g, h / g);
            let mut row = vec![0i128; k];
            let mut rest = vec![0i128; k];
            for j in i..k {
                let bij = self.basis[i][j] as i128;
                let m = self.moduli[j] as i128;
                row[j] = (a * bij + b * v[j]).rem_euclid(m);
                rest[j] = (vh * bij - hh * v[j]).rem_euclid(m);
            }
            // the pivot itself is not reduced: g divides m_i and is positive
            row[i] = g;
            rest[i] = 0;
            if g != h {
                grew = true;
            }
            for j in i..k {
                self.basis[i][j] = row[j] as i64;
            }
            v = rest;
        }
        // the index is the pivot product, so it shrinks iff some pivot did
        self.hermite_reduce();
        Ok(grew)
    }

    fn hermite_reduce(&mut self) {
        let k = self.dim();
        for i in (0..k).rev() {
            for j in i + 1..k {
                let h = self.basis[j][j];
                let q = self.basis[i][j].div_euclid(h);
                if q != 0 {
                    for l in j..k {
                        let v = self.basis[i][l] as i128 - q as i128 * self.basis[j][l] as i128;
                        self.basis[i][l] = v as i64;
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    #[test]
    fn marks_rows_of_c2() {
        let mut l = ModularLattice::new(vec![2, 2]).unwrap();
        assert!(!l.insert(&[2, 0]).unwrap());
        assert!(l.insert(&[1, 1]).unwrap());
        assert_eq!(l.basis(), &[vec![1, 1], vec![0, 2]]);
        assert_eq!(l.quotient_order(), BigUint::from(2u32));
        assert!(l.contains(&[3, 1]).unwrap());
        assert!(!l.contains(&[0, 1]).unwrap());
    }

    #[test]
    fn pivots_divide_moduli() {
        let mut l = ModularLattice::new(vec![12, 12, 12]).unwrap();
        l.insert(&[8, 3, 0]).unwrap();
        l.insert(&[0, 9, 4]).unwrap();
        for (h, m) in l.pivots().iter().zip(l.moduli()) {
            assert_eq!(m % h, 0);
        }
    }

    /// Brute-force span of generators in `Z/m1 x ... x Z/mk`.
    fn span(moduli: &[i64], gens: &[Vec<i64>]) -> HashSet<Vec<i64>> {
        let mut set: HashSet<Vec<i64>> = HashSet::new();
        let zero = vec![0; moduli.len()];
        set.insert(zero.clone());
        let mut stack = vec![zero];
        while let Some(x) = stack.pop() {
            for g in gens {
                let y: Vec<i64> = x
                    .iter()
                    .zip(g)
                    .zip(moduli)
                    .map(|((a, b), m)| (a + b).rem_euclid(*m))
                    .collect();
                if set.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        set
    }

    proptest! {
        #[test]
        fn agrees_with_brute_force_span(
            moduli in prop::collection::vec(1i64..=6, 3),
            gens in prop::collection::vec(prop::collection::vec(-10i64..=10, 3), 0..4),
            probe in prop::collection::vec(-10i64..=10, 3),
        ) {
            let mut l = ModularLattice::new(moduli.clone()).unwrap();
            for g in &gens {
                l.insert(g).unwrap();
            }
            let s = span(&moduli, &gens);
            prop_assert_eq!(l.quotient_order(), BigUint::from(s.len()));
            let reduced: Vec<i64> = probe.iter().zip(&moduli).map(|(a, m)| a.rem_euclid(*m)).collect();
            prop_assert_eq!(l.contains(&probe).unwrap(), s.contains(&reduced));
        }
    }
}
