use serde::{Deserialize, Serialize};

use super::sign_vector;
use crate::burnside::{GhostVector, MarksTable};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::group::SubgroupLattice;
use crate::par;

/// The unit group of `A(G)`: the `+-1`-valued ghost vectors in the image.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitsReport {
    pub classes: usize,
    /// `|A(G)^x| = 2^rank`.
    pub rank: u32,
    pub units: Vec<GhostVector>,
    /// An `F_2`-basis of the units.
    pub generators: Vec<GhostVector>,
}

/// Exhaustive search over all `2^c` sign vectors.
pub fn units(marks: &MarksTable, config: &Config) -> Result<UnitsReport> {
    let c = marks.class_count();
    let cap = config.budgets.unit_search_classes.min(63);
    if c > cap {
        return Err(Error::budget(format!("{c} classes for the 2^c unit search"), cap));
    }
    let found = par::filter_map_range(config.exec, 1u64 << c, |mask| {
        match marks.is_in_image(&GhostVector(sign_vector(c, mask))) {
            Ok(true) => Some(Ok(mask)),
            Ok(false) => None,
            Err(e) => Some(Err(e)),
        }
    });
    let masks = found.into_iter().collect::<Result<Vec<u64>>>()?;
    let count = masks.len() as u64;
    if !count.is_power_of_two() {
        return Err(Error::CheckFailed {
            check: "units".into(),
            detail: format!("{count} units is not a power of two"),
        });
    }

    // greedy basis over F_2, sign patterns read as bit vectors
    let mut pivots: Vec<u64> = Vec::new();
    let mut generators = Vec::new();
    for &m in &masks {
        let mut r = m;
        for &p in &pivots {
            r = r.min(r ^ p);
        }
        if r != 0 {
            pivots.push(r);
            pivots.sort_unstable_by(|a, b| b.cmp(a));
            generators.push(GhostVector(sign_vector(c, m)));
        }
    }

    Ok(UnitsReport {
        classes: c,
        rank: count.trailing_zeros(),
        units: masks.iter().map(|&m| GhostVector(sign_vector(c, m))).collect(),
        generators,
    })
}

/// Number of subgroups (not classes) of index 2.
pub fn index_two_subgroups(lattice: &SubgroupLattice) -> usize {
    let n = lattice.group_order();
    lattice
        .classes()
        .iter()
        .zip(lattice.class_sizes())
        .filter(|(h, _)| 2 * h.order() == n)
        .map(|(_, &size)| size)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::parse_group_spec;

    fn units_of(spec: &str) -> UnitsReport {
        let cfg = Config::default();
        let g = parse_group_spec(spec, &cfg).unwrap();
        units(&MarksTable::compute(&g, &cfg).unwrap(), &cfg).unwrap()
    }

    #[test]
    fn examples() {
        let u = units_of("cyclic:3");
        assert_eq!(u.rank, 1);
        assert_eq!(u.units, vec![GhostVector(vec![1, 1]), GhostVector(vec![-1, -1])]);

        let u = units_of("cyclic:2");
        assert_eq!((u.rank, u.units.len()), (2, 4));

        let u = units_of("symmetric:3");
        assert_eq!(u.rank, 3);
        assert!(u.units.iter().all(|v| v.0[0] == v.0[2]));
        assert_eq!(u.generators.len(), 3);
    }

    #[test]
    fn budget() {
        let cfg = Config {
            budgets: crate::Budgets {
                unit_search_classes: 3,
                ..Default::default()
            },
            ..Config::default()
        };
        let g = parse_group_spec("symmetric:3", &cfg).unwrap();
        let m = MarksTable::compute(&g, &cfg).unwrap();
        assert!(matches!(units(&m, &cfg), Err(Error::BudgetExceeded { .. })));
    }
}
