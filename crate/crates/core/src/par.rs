//! Thin switch between rayon and plain iterators.
//!
//! Every helper returns results in input order, so output is identical for
//! both strategies.

use crate::config::Exec;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Whether parallel execution is compiled in.
pub const PARALLEL_AVAILABLE: bool = cfg!(feature = "parallel");

/// Maps `f` over `0..len`.
pub fn map_range<T, F>(exec: Exec, len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => (0..len).into_par_iter().map(f).collect(),
        _ => (0..len).map(f).collect(),
    }
}

/// Maps `f` over a slice.
pub fn map_slice<S, T, F>(exec: Exec, items: &[S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => items.par_iter().map(f).collect(),
        _ => items.iter().map(f).collect(),
    }
}

/// Keeps the indices in `0..len` for which `f` returns `Some`, in order.
pub fn filter_map_range<T, F>(exec: Exec, len: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => (0..len).into_par_iter().filter_map(f).collect(),
        _ => (0..len).filter_map(f).collect(),
    }
}

/// Counts the indices in `0..len` satisfying `f`.
pub fn count_range<F>(exec: Exec, len: u64, f: F) -> u64
where
    F: Fn(u64) -> bool + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => (0..len).into_par_iter().filter(|&i| f(i)).count() as u64,
        _ => (0..len).filter(|&i| f(i)).count() as u64,
    }
}
