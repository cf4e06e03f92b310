use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use super::{CayleyTable, Perm, PermGroup};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::par;

/// A subgroup, stored as the sorted list of its element indices in the
/// parent group.
///
/// Because parent elements are sorted by image array, comparing member lists
/// lexicographically is the same as comparing the sorted lists of image
/// arrays.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subgroup {
    members: Vec<u32>,
}

impl Subgroup {
    pub fn trivial() -> Self {
        Subgroup { members: vec![0] }
    }

    pub fn whole(group: &PermGroup) -> Self {
        Subgroup {
            members: (0..group.order() as u32).collect(),
        }
    }

    /// Validates a list of element indices as a subgroup of `group`.
    pub fn from_members(group: &PermGroup, mut members: Vec<u32>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if members.first() != Some(&0) {
            return Err(Error::InvalidSubgroup("identity missing".into()));
        }
        if members.iter().any(|&m| m as usize >= group.order()) {
            return Err(Error::InvalidSubgroup("element index out of range".into()));
        }
        let h = Subgroup { members };
        let t = group.table();
        for &a in &h.members {
            for &b in &h.members {
                if !h.contains(t.mul(a, b)) {
                    return Err(Error::InvalidSubgroup("not closed under products".into()));
                }
            }
        }
        Ok(h)
    }

    /// Validates a list of permutations as a subgroup of `group`.
    pub fn from_perms(group: &PermGroup, perms: &[Perm]) -> Result<Self> {
        let members = perms
            .iter()
            .map(|p| {
                group
                    .index_of(p)
                    .ok_or_else(|| Error::InvalidSubgroup(format!("{p:?} is not in the group")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_members(group, members)
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn contains(&self, index: u32) -> bool {
        self.members.binary_search(&index).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.order() <= other.order() && self.members.iter().all(|&m| other.contains(m))
    }

    /// `g^-1 H g`.
    pub fn conjugate(&self, table: &CayleyTable, g: u32) -> Subgroup {
        let mut members: Vec<u32> = self.members.iter().map(|&h| table.conj(h, g)).collect();
        members.sort_unstable();
        Subgroup { members }
    }

    /// A small generating set, chosen greedily in element order.
    pub fn generators(&self, group: &PermGroup) -> Vec<u32> {
        let t = group.table();
        let mut gens = Vec::new();
        let mut span = vec![0u32];
        for &x in &self.members {
            if span.binary_search(&x).is_err() {
                gens.push(x);
                span = generate(t, group.order(), &gens);
            }
        }
        gens
    }
}

/// Sorted element indices of the subgroup generated by `gens`.
fn generate(table: &CayleyTable, order: usize, gens: &[u32]) -> Vec<u32> {
    let mut seen = vec![false; order];
    seen[0] = true;
    let mut list = vec![0u32];
    let mut k = 0;
    while k < list.len() {
        let x = list[k];
        k += 1;
        for &g in gens {
            let y = table.mul(x, g);
            if !seen[y as usize] {
                seen[y as usize] = true;
                list.push(y);
            }
        }
    }
    list.sort_unstable();
    list
}

fn check_subgroup_budget(group: &PermGroup, config: &Config) -> Result<()> {
    let cap = config.budgets.subgroup_order;
    if group.order() > cap {
        return Err(Error::budget(
            format!("group order {} for subgroup enumeration", group.order()),
            cap,
        ));
    }
    Ok(())
}

struct Found {
    members: Vec<u32>,
    gens: Vec<u32>,
}

/// All subgroups of `group`, sorted by order and then by member list.
///
/// Seeds with the cyclic subgroups and repeatedly joins every newly found
/// subgroup with every cyclic subgroup until nothing new appears. Every
/// subgroup is generated by its cyclic subgroups, so the fixed point is the
/// full subgroup set.
pub fn subgroups(group: &PermGroup, config: &Config) -> Result<Vec<Subgroup>> {
    check_subgroup_budget(group, config)?;
    let cap = config.budgets.subgroups;
    let n = group.order();
    let t = group.table();

    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut all: Vec<Found> = Vec::new();
    let mut cyclic_gens: Vec<u32> = Vec::new();
    for x in 0..n as u32 {
        let gens = if x == 0 { vec![] } else { vec![x] };
        let members = generate(t, n, &gens);
        if seen.insert(members.clone()) {
            if x != 0 {
                cyclic_gens.push(x);
            }
            all.push(Found { members, gens });
        }
    }
    if all.len() > cap {
        return Err(Error::budget("subgroup count", cap));
    }

    let mut frontier: Vec<usize> = (0..all.len()).collect();
    while !frontier.is_empty() {
        let current: Vec<&Found> = frontier.iter().map(|&i| &all[i]).collect();
        let candidates: Vec<Vec<Found>> = par::map_slice(config.exec, &current, |s| {
            let mut local: HashSet<Vec<u32>> = HashSet::new();
            let mut out = Vec::new();
            for &x in &cyclic_gens {
                if s.members.binary_search(&x).is_ok() {
                    continue;
                }
                let mut gens = s.gens.clone();
                gens.push(x);
                let members = generate(t, n, &gens);
                if local.insert(members.clone()) {
                    out.push(Found { members, gens });
                }
            }
            out
        });
        let mut next = Vec::new();
        for found in candidates.into_iter().flatten() {
            if seen.insert(found.members.clone()) {
                if seen.len() > cap {
                    return Err(Error::budget("subgroup count", cap));
                }
                next.push(all.len());
                all.push(found);
            }
        }
        frontier = next;
    }

    let mut result: Vec<Subgroup> = all
        .into_iter()
        .map(|f| Subgroup { members: f.members })
        .collect();
    result.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members.cmp(&b.members)));
    Ok(result)
}

/// `N_G(H) = {g : g^-1 H g = H}`.
pub fn normalizer(group: &PermGroup, h: &Subgroup) -> Result<Subgroup> {
    let h = Subgroup::from_members(group, h.members.clone())?;
    let t = group.table();
    let members = (0..group.order() as u32)
        .filter(|&g| h.members.iter().all(|&x| h.contains(t.conj(x, g))))
        .collect();
    Ok(Subgroup { members })
}

/// Conjugacy classes of subgroups with normalizers and the subconjugacy
/// relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupLattice {
    group_order: usize,
    classes: Vec<Subgroup>,
    class_sizes: Vec<usize>,
    normalizer_orders: Vec<usize>,
    /// `subconjugacy[i][j]`: class `i` is subconjugate to class `j`.
    subconjugacy: Vec<Vec<bool>>,
    subgroup_count: usize,
}

impl SubgroupLattice {
    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Class representatives, ordered by subgroup order and then
    /// lexicographically; each is the least member of its class.
    pub fn classes(&self) -> &[Subgroup] {
        &self.classes
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn normalizer_orders(&self) -> &[usize] {
        &self.normalizer_orders
    }

    pub fn is_subconjugate(&self, i: usize, j: usize) -> bool {
        self.subconjugacy[i][j]
    }

    /// Total number of subgroups (sum of class sizes).
    pub fn subgroup_count(&self) -> usize {
        self.subgroup_count
    }

    pub fn orders(&self) -> Vec<usize> {
        self.classes.iter().map(Subgroup::order).collect()
    }
}

pub fn conjugacy_classes_of_subgroups(group: &PermGroup, config: &Config) -> Result<SubgroupLattice> {
    let subs = subgroups(group, config)?;
    let t = group.table();
    let n = group.order() as u32;

    let mut assigned = vec![false; subs.len()];
    let index: HashMap<&[u32], usize> = subs
        .iter()
        .enumerate()
        .map(|(i, s)| (s.members(), i))
        .collect();

    let mut classes = Vec::new();
    let mut orbits: Vec<Vec<Subgroup>> = Vec::new();
    for (i, s) in subs.iter().enumerate() {
        if assigned[i] {
            continue;
        }
        let mut orbit: Vec<Subgroup> = Vec::new();
        for g in 0..n {
            let c = s.conjugate(t, g);
            let k = index[c.members()];
            if !assigned[k] {
                assigned[k] = true;
                orbit.push(c);
            }
        }
        classes.push(s.clone());
        orbits.push(orbit);
    }

    let class_sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
    let normalizer_orders = par::map_slice(config.exec, &classes, |h| {
        normalizer(group, h).map(|nh| nh.order())
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;

    let c = classes.len();
    let subconjugacy = par::map_range(config.exec, c, |i| {
        (0..c)
            .map(|j| {
                let (hi, kj) = (&classes[i], &classes[j]);
                kj.order() % hi.order() == 0 && orbits[i].iter().any(|h| h.is_subset_of(kj))
            })
            .collect()
    });

    Ok(SubgroupLattice {
        group_order: group.order(),
        classes,
        class_sizes,
        normalizer_orders,
        subconjugacy,
        subgroup_count: subs.len(),
    })
}
