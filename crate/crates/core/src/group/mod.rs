//! Finite permutation groups, their subgroups, and the lattice of conjugacy
//! classes of subgroups.
//!
//! Points are 0-indexed. A group keeps its full element list sorted
//! lexicographically by image array, so an element is identified by its
//! position in that list and the identity always sits at index 0.

mod lattice;
mod perm;

pub use lattice::{conjugacy_classes_of_subgroups, normalizer, subgroups, Subgroup, SubgroupLattice};
pub use perm::Perm;

use std::collections::{HashSet, VecDeque};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::config::Budgets;
use crate::error::{Error, Result};

/// On-disk group description: `{"degree": d, "generators": [[images...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
}

/// A finite group of permutations of `{0, ..., degree - 1}`.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    table: OnceLock<CayleyTable>,
}

/// Multiplication and inversion on element indices.
#[derive(Debug)]
pub struct CayleyTable {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

impl CayleyTable {
    /// Index of `a * b` (apply `a`, then `b`).
    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    /// Index of `g^-1 * h * g`.
    #[inline]
    pub fn conj(&self, h: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv(g), h), g)
    }
}

impl PermGroup {
    /// Builds the group generated by `generators`, enumerating all elements.
    ///
    /// An empty generator list gives the trivial group of the given degree.
    pub fn new(degree: usize, generators: Vec<Perm>, budgets: &Budgets) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPerm("degree must be positive".into()));
        }
        if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidPerm(format!(
                "generator of degree {} in a group of degree {degree}",
                bad.degree()
            )));
        }
        let elements = closure(degree, &generators, budgets.elements)?;
        Ok(PermGroup {
            degree,
            generators,
            elements,
            table: OnceLock::new(),
        })
    }

    pub fn from_file(file: &GroupFile, budgets: &Budgets) -> Result<Self> {
        let gens = file
            .generators
            .iter()
            .map(|g| Perm::new(g.clone()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(file.degree, gens, budgets)
    }

    pub fn from_json(text: &str, budgets: &Budgets) -> Result<Self> {
        let file: GroupFile =
            serde_json::from_str(text).map_err(|e| Error::MalformedInput(e.to_string()))?;
        Self::from_file(&file, budgets)
    }

    pub fn to_file(&self) -> GroupFile {
        GroupFile {
            degree: self.degree,
            generators: self.generators.iter().map(|g| g.images().to_vec()).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// All elements, sorted by image array.
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, index: u32) -> &Perm {
        &self.elements[index as usize]
    }

    pub fn index_of(&self, p: &Perm) -> Option<u32> {
        self.elements.binary_search(p).ok().map(|i| i as u32)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|a| self.generators.iter().all(|b| a.then(b) == b.then(a)))
    }

    /// Hex SHA-256 of the sorted element list; identifies the group as a set
    /// of permutations regardless of the generators used.
    pub fn canonical_hash(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update((self.degree as u64).to_le_bytes());
        for e in &self.elements {
            for &x in e.images() {
                hasher.update(x.to_le_bytes());
            }
        }
        hex::encode(hasher.finalize())
    }

    /// Multiplication table on element indices, built on first use.
    ///
    /// Costs `order^2` words; callers bound the order first.
    pub fn table(&self) -> &CayleyTable {
        self.table.get_or_init(|| {
            let n = self.order();
            let mut mul = Vec::with_capacity(n * n);
            for a in &self.elements {
                for b in &self.elements {
                    let ab = a.then(b);
                    mul.push(self.index_of(&ab).expect("group is closed"));
                }
            }
            let inv = self
                .elements
                .iter()
                .map(|a| self.index_of(&a.inverse()).expect("group is closed"))
                .collect();
            CayleyTable { order: n, mul, inv }
        })
    }
}

fn closure(degree: usize, generators: &[Perm], cap: usize) -> Result<Vec<Perm>> {
    let identity = Perm::identity(degree);
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(identity.clone());
    queue.push_back(identity);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = x.then(g);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::budget("group order", cap));
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut elements: Vec<Perm> = seen.into_iter().collect();
    elements.sort_unstable();
    Ok(elements)
}
