//! Execution strategy for case-parallel work.
//!
//! Campaigns and grid enumeration map a pure function over case indices
//! and merge results in index order, so parallel and sequential execution
//! are observably identical. The `parallel` feature (on by default)
//! enables the rayon path; without it only the sequential path exists.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for Exec {
    #[cfg(feature = "parallel")]
    fn default() -> Self {
        Exec::Parallel
    }

    #[cfg(not(feature = "parallel"))]
    fn default() -> Self {
        Exec::Sequential
    }
}

/// Map `f` over `0..count`, returning results in index order.
pub fn map_indexed<T, F>(exec: Exec, count: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    match exec {
        Exec::Sequential => (0..count).map(f).collect(),
        #[cfg(feature = "parallel")]
        Exec::Parallel => (0..count).into_par_iter().map(f).collect(),
    }
}
