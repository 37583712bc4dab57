//! Data-parallel helpers with a sequential fallback when the `parallel`
//! feature is disabled.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub const PARALLEL: bool = cfg!(feature = "parallel");

/// All (i, j) with i in 0..rows, j in 0..cols satisfy the predicate.
#[cfg(feature = "parallel")]
pub fn all_pairs(rows: usize, cols: usize, pred: impl Fn(usize, usize) -> bool + Sync) -> bool {
    (0..rows).into_par_iter().all(|i| (0..cols).all(|j| pred(i, j)))
}

#[cfg(not(feature = "parallel"))]
pub fn all_pairs(rows: usize, cols: usize, pred: impl Fn(usize, usize) -> bool + Sync) -> bool {
    (0..rows).all(|i| (0..cols).all(|j| pred(i, j)))
}

/// All unordered pairs i <= j < n satisfy the predicate.
#[cfg(feature = "parallel")]
pub fn all_sym_pairs(n: usize, pred: impl Fn(usize, usize) -> bool + Sync) -> bool {
    (0..n).into_par_iter().all(|i| (i..n).all(|j| pred(i, j)))
}

#[cfg(not(feature = "parallel"))]
pub fn all_sym_pairs(n: usize, pred: impl Fn(usize, usize) -> bool + Sync) -> bool {
    (0..n).all(|i| (i..n).all(|j| pred(i, j)))
}

/// Map over indices, collecting in order.
#[cfg(feature = "parallel")]
pub fn map_indices<T: Send>(n: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_indices<T: Send>(n: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    (0..n).map(f).collect()
}

/// Map over a slice of items, collecting in order.
#[cfg(feature = "parallel")]
pub fn map_items<I: Sync, T: Send>(items: &[I], f: impl Fn(&I) -> T + Sync + Send) -> Vec<T> {
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_items<I: Sync, T: Send>(items: &[I], f: impl Fn(&I) -> T + Sync + Send) -> Vec<T> {
    items.iter().map(f).collect()
}
