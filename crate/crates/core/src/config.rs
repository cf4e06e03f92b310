use serde::{Deserialize, Serialize};

/// Size limits for the exhaustive parts of the computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budgets {
    /// Maximum group order produced by generator closure.
    pub elements: usize,
    /// Maximum group order for which all subgroups are enumerated.
    pub subgroup_order: usize,
    /// Maximum number of distinct subgroups held during enumeration.
    pub subgroups: usize,
    /// Maximum size of a finite quotient ring enumerated element by element.
    pub enumeration: u64,
    /// Maximum modulus n for which (Z/n)^x is tabulated.
    pub modulus: u64,
    /// Maximum number of conjugacy classes for the 2^c unit search.
    pub unit_search_classes: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            elements: 20_160,
            subgroup_order: 2_000,
            subgroups: 100_000,
            enumeration: 1_000_000,
            modulus: 1_000_000,
            unit_search_classes: 24,
        }
    }
}

/// Execution strategy for the data-parallel loops.
///
/// `Parallel` silently runs sequentially when the crate is built without the
/// `parallel` feature.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Config {
    pub budgets: Budgets,
    pub exec: Exec,
}

impl Config {
    pub fn sequential() -> Self {
        Config {
            exec: Exec::Sequential,
            ..Config::default()
        }
    }
}
