//! Sequential / data-parallel execution switch.
//!
//! Every data-parallel loop in the crate goes through [`Execution::map`],
//! which keeps output order identical to input order. Without the
//! `parallel` feature the parallel variant runs sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Parallel when `jobs > 1`.
    pub fn from_jobs(jobs: usize) -> Self {
        if jobs > 1 {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }

    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    /// Order-preserving map.
    pub fn map<T, R, F>(self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Execution::Parallel {
            return items.into_par_iter().map(f).collect();
        }
        items.into_iter().map(f).collect()
    }

    /// Lowest index in `0..len` satisfying `pred`, if any.
    pub fn find_first<F>(self, len: usize, pred: F) -> Option<usize>
    where
        F: Fn(usize) -> bool + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Execution::Parallel {
            return (0..len).into_par_iter().find_first(|&i| pred(i));
        }
        (0..len).find(|&i| pred(i))
    }
}
