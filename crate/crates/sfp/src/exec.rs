//! Thin execution layer: data-parallel map with a sequential fallback.
//!
//! With the `parallel` feature (default) the parallel path runs on rayon and
//! the choice is a runtime flag, so benchmarks can compare both. Without the
//! feature everything compiles to plain iterators.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items`, in parallel when `parallel` is set and the feature
/// is compiled in. Output order matches input order either way.
pub fn map_vec<T, U, F>(parallel: bool, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if parallel {
            return items.par_iter().map(f).collect();
        }
    }
    let _ = parallel;
    items.iter().map(f).collect()
}

/// Indexed variant: `f` receives `(index, item)`.
pub fn map_indexed<T, U, F>(parallel: bool, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(usize, &T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if parallel {
            return items.par_iter().enumerate().map(|(i, t)| f(i, t)).collect();
        }
    }
    let _ = parallel;
    items.iter().enumerate().map(|(i, t)| f(i, t)).collect()
}

/// Runs `f` for each index in `0..n`, collecting results in index order.
pub fn map_range<U, F>(parallel: bool, n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if parallel {
            return (0..n).into_par_iter().map(f).collect();
        }
    }
    let _ = parallel;
    (0..n).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_and_sequential_agree() {
        let xs: Vec<u64> = (0..1000).collect();
        let a = map_vec(true, &xs, |x| x * x);
        let b = map_vec(false, &xs, |x| x * x);
        assert_eq!(a, b);
        let c = map_range(true, 100, |i| i as u64 + 7);
        let d = map_range(false, 100, |i| i as u64 + 7);
        assert_eq!(c, d);
    }
}
