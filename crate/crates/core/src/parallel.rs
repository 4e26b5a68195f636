//! Internal dispatch between the rayon data-parallel path and the sequential
//! fallback. Both paths produce identical results: `map_indexed` assembles
//! its output in index order and `min_indexed` reduces with a total order,
//! so callers are deterministic regardless of thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map `f` over `0..len`, collecting results in index order.
#[cfg(feature = "parallel")]
pub(crate) fn map_indexed<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..len).into_par_iter().map(f).collect()
}

/// Map `f` over `0..len`, collecting results in index order.
#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indexed<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..len).map(f).collect()
}

/// Minimum of `f(i)` over `0..len`, ignoring `None`s.
#[cfg(feature = "parallel")]
pub(crate) fn min_indexed<T, F>(len: usize, f: F) -> Option<T>
where
    T: Ord + Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    (0..len).into_par_iter().filter_map(f).min()
}

/// Minimum of `f(i)` over `0..len`, ignoring `None`s.
#[cfg(not(feature = "parallel"))]
pub(crate) fn min_indexed<T, F>(len: usize, f: F) -> Option<T>
where
    T: Ord + Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    (0..len).filter_map(f).min()
}
