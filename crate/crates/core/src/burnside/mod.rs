//! The Burnside ring `A(G)` inside its ghost ring `C(G)`.
//!
//! `A(G)` is free abelian on the transitive G-sets `[G/K]`, one per conjugacy
//! class of subgroups; `C(G)` is `Z^c` with pointwise operations, one
//! coordinate per class `[H]`. The ghost map sends a G-set `S` to the vector
//! of fixed-point counts `|S^H|`, and on the transitive basis it is the table
//! of marks.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::group::{conjugacy_classes_of_subgroups, PermGroup, SubgroupLattice};
use crate::par;
use crate::zlattice::{solve_lower_triangular, IntMatrix};

/// Coefficients of an element of `A(G)` in the basis `[G/K_i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BurnsideElement(pub Vec<i64>);

/// An element of `C(G)`: one integer per conjugacy class of subgroups.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GhostVector(pub Vec<i64>);

impl BurnsideElement {
    pub fn zero(c: usize) -> Self {
        BurnsideElement(vec![0; c])
    }

    /// The transitive G-set `[G/K_i]`.
    pub fn basis(c: usize, i: usize) -> Self {
        let mut v = vec![0; c];
        v[i] = 1;
        BurnsideElement(v)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        checked_zip(&self.0, &other.0, i64::checked_add).map(BurnsideElement)
    }
}

impl GhostVector {
    pub fn constant(c: usize, value: i64) -> Self {
        GhostVector(vec![value; c])
    }

    pub fn unit_vector(c: usize, j: usize, value: i64) -> Self {
        let mut v = vec![0; c];
        v[j] = value;
        GhostVector(v)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        checked_zip(&self.0, &other.0, i64::checked_add).map(GhostVector)
    }

    pub fn pointwise_mul(&self, other: &Self) -> Result<Self> {
        checked_zip(&self.0, &other.0, i64::checked_mul).map(GhostVector)
    }
}

fn checked_zip(a: &[i64], b: &[i64], op: fn(i64, i64) -> Option<i64>) -> Result<Vec<i64>> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    a.iter()
        .zip(b)
        .map(|(&x, &y)| op(x, y).ok_or(Error::Overflow("ghost ring arithmetic")))
        .collect()
}

/// Table of marks: `matrix[i][j] = |(G/K_i)^{H_j}|`, rows and columns in
/// lattice order.
///
/// Lattice order sorts classes by subgroup order, so the matrix is lower
/// triangular with diagonal `[N_G(K_i) : K_i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarksTable {
    group_hash: String,
    group_order: usize,
    lattice: SubgroupLattice,
    matrix: IntMatrix,
}

impl MarksTable {
    pub fn compute(group: &PermGroup, config: &Config) -> Result<Self> {
        let lattice = conjugacy_classes_of_subgroups(group, config)?;
        Ok(Self::from_lattice(group, lattice, config))
    }

    /// Fills in the marks by enumerating the cosets `gK` of each class
    /// representative and counting those fixed by `H`, i.e. with
    /// `g^-1 H g <= K`.
    pub fn from_lattice(group: &PermGroup, lattice: SubgroupLattice, config: &Config) -> Self {
        let n = group.order();
        let t = group.table();
        let classes = lattice.classes();
        let c = classes.len();
        let rows: Vec<Vec<i64>> = par::map_range(config.exec, c, |i| {
            let k = &classes[i];
            let mut in_k = vec![false; n];
            for &x in k.members() {
                in_k[x as usize] = true;
            }
            let mut covered = vec![false; n];
            let mut reps = Vec::with_capacity(n / k.order());
            for g in 0..n as u32 {
                if covered[g as usize] {
                    continue;
                }
                reps.push(g);
                for &x in k.members() {
                    covered[t.mul(g, x) as usize] = true;
                }
            }
            classes
                .iter()
                .map(|h| {
                    reps.iter()
                        .filter(|&&g| h.members().iter().all(|&x| in_k[t.conj(x, g) as usize]))
                        .count() as i64
                })
                .collect()
        });
        let matrix = IntMatrix::from_rows(rows).expect("rows have length c");
        MarksTable {
            group_hash: group.canonical_hash(),
            group_order: n,
            lattice,
            matrix,
        }
    }

    pub fn group_hash(&self) -> &str {
        &self.group_hash
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn lattice(&self) -> &SubgroupLattice {
        &self.lattice
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn class_count(&self) -> usize {
        self.matrix.rows()
    }

    pub fn diagonal(&self) -> Vec<i64> {
        self.matrix.diagonal()
    }

    /// Product of the diagonal marks, which is the index of `A(G)` in `C(G)`.
    pub fn diagonal_product(&self) -> BigInt {
        self.diagonal().into_iter().map(BigInt::from).product()
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.class_count() {
            return Err(Error::DimensionMismatch {
                expected: self.class_count(),
                got: len,
            });
        }
        Ok(())
    }

    /// The ghost map on coefficient vectors: `coeffs^T * M`.
    pub fn ghost(&self, x: &BurnsideElement) -> Result<GhostVector> {
        self.check_len(x.0.len())?;
        self.matrix.left_mul(&x.0).map(GhostVector)
    }

    /// The unique preimage of `v` under the ghost map, if there is one.
    pub fn unghost(&self, v: &GhostVector) -> Result<Option<BurnsideElement>> {
        self.check_len(v.0.len())?;
        Ok(solve_lower_triangular(&self.matrix, &v.0)?.map(BurnsideElement))
    }

    pub fn is_in_image(&self, v: &GhostVector) -> Result<bool> {
        Ok(self.unghost(v)?.is_some())
    }

    pub fn add(&self, x: &BurnsideElement, y: &BurnsideElement) -> Result<BurnsideElement> {
        self.check_len(x.0.len())?;
        x.add(y)
    }

    /// Product in `A(G)`, computed as the preimage of the pointwise product
    /// of ghosts.
    pub fn multiply(&self, x: &BurnsideElement, y: &BurnsideElement) -> Result<BurnsideElement> {
        let prod = self.ghost(x)?.pointwise_mul(&self.ghost(y)?)?;
        self.unghost(&prod)?.ok_or_else(|| {
            Error::Internal(format!(
                "ghost product {:?} of {:?} and {:?} is not in the image",
                prod.0, x.0, y.0
            ))
        })
    }

    /// The multiplicative identity `[G/G]`.
    pub fn one(&self) -> BurnsideElement {
        let c = self.class_count();
        BurnsideElement::basis(c, c - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::parse_group_spec;

    fn marks(spec: &str) -> MarksTable {
        let cfg = Config::default();
        MarksTable::compute(&parse_group_spec(spec, &cfg).unwrap(), &cfg).unwrap()
    }

    #[test]
    fn small_tables() {
        assert_eq!(marks("cyclic:1").matrix().to_rows(), vec![vec![1]]);
        assert_eq!(marks("cyclic:2").matrix().to_rows(), vec![vec![2, 0], vec![1, 1]]);
        assert_eq!(
            marks("symmetric:3").matrix().to_rows(),
            vec![
                vec![6, 0, 0, 0],
                vec![3, 1, 0, 0],
                vec![2, 0, 2, 0],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn ghost_examples() {
        let t = marks("cyclic:2");
        assert_eq!(t.ghost(&t.one()).unwrap(), GhostVector::constant(2, 1));
        assert_eq!(t.ghost(&BurnsideElement::basis(2, 0)).unwrap(), GhostVector(vec![2, 0]));
        assert_eq!(t.ghost(&BurnsideElement::zero(2)).unwrap(), GhostVector(vec![0, 0]));
        assert!(matches!(
            t.ghost(&BurnsideElement::zero(3)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn unghost_examples() {
        let t = marks("cyclic:2");
        assert_eq!(
            t.unghost(&GhostVector(vec![1, -1])).unwrap(),
            Some(BurnsideElement(vec![1, -1]))
        );
        assert_eq!(t.unghost(&GhostVector(vec![0, 1])).unwrap(), None);
        assert!(!t.is_in_image(&GhostVector(vec![0, 1])).unwrap());
        assert!(t.is_in_image(&GhostVector(vec![1, 1])).unwrap());
        for j in 0..2 {
            assert!(t.is_in_image(&GhostVector::unit_vector(2, j, 2)).unwrap());
        }
    }

    #[test]
    fn multiplication_examples() {
        let t = marks("cyclic:2");
        let free = BurnsideElement::basis(2, 0);
        assert_eq!(t.multiply(&free, &free).unwrap(), BurnsideElement(vec![2, 0]));
        assert_eq!(t.multiply(&t.one(), &free).unwrap(), free);
        assert_eq!(
            t.multiply(&BurnsideElement::zero(2), &free).unwrap(),
            BurnsideElement::zero(2)
        );
    }

    #[test]
    fn s3_products() {
        // [G/C2] x [G/C2] = [G/e] + [G/C2] in A(S3)
        let t = marks("symmetric:3");
        let c2 = BurnsideElement::basis(4, 1);
        assert_eq!(t.multiply(&c2, &c2).unwrap(), BurnsideElement(vec![1, 1, 0, 0]));
    }
}
