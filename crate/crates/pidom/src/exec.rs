//! Execution strategy for the data-parallel enumeration loops.
//!
//! With the `parallel` feature (default) the index space is folded over
//! rayon; without it, or with [`Exec::Sequential`], the same chunk folds run
//! in order on one thread. Combining functions must be associative so the
//! result is identical under either strategy.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Rayon work-stealing over fixed-size chunks. Falls back to sequential
    /// when the `parallel` feature is disabled.
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

/// Splits `0..len` into chunks of `chunk` indices, maps each chunk through
/// `fold_chunk(start, end)` and combines the results with the associative
/// `combine`, starting from `identity`.
pub(crate) fn fold_chunks<T, F, C>(
    exec: Exec,
    len: u64,
    chunk: u64,
    identity: T,
    fold_chunk: F,
    combine: C,
) -> T
where
    T: Send + Sync + Clone,
    F: Fn(u64, u64) -> T + Sync,
    C: Fn(T, T) -> T + Send + Sync,
{
    let chunk = chunk.max(1);
    let chunks = len.div_ceil(chunk);
    let bounds = |i: u64| {
        let start = i * chunk;
        (start, (start + chunk).min(len))
    };
    match exec {
        Exec::Sequential => (0..chunks).fold(identity, |acc, i| {
            let (start, end) = bounds(i);
            combine(acc, fold_chunk(start, end))
        }),
        #[cfg(feature = "parallel")]
        Exec::Parallel => (0..chunks)
            .into_par_iter()
            .map(|i| {
                let (start, end) = bounds(i);
                fold_chunk(start, end)
            })
            .reduce(|| identity.clone(), &combine),
        #[cfg(not(feature = "parallel"))]
        Exec::Parallel => fold_chunks(Exec::Sequential, len, chunk, identity, fold_chunk, combine),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequential_and_parallel_agree() {
        let sum = |s: u64, e: u64| (s..e).sum::<u64>();
        let seq = fold_chunks(Exec::Sequential, 10_000, 101, 0, sum, |a, b| a + b);
        let par = fold_chunks(Exec::Parallel, 10_000, 101, 0, sum, |a, b| a + b);
        assert_eq!(seq, par);
        assert_eq!(seq, 10_000u64 * 9_999 / 2);
    }

    #[test]
    fn min_key_reduction_is_schedule_independent() {
        // minimum of (value, index) keys over a synthetic landscape
        let key = |i: u64| ((i % 97) as u32, i);
        let fold = |s: u64, e: u64| (s..e).map(key).min().unwrap_or((u32::MAX, u64::MAX));
        let id = (u32::MAX, u64::MAX);
        let seq = fold_chunks(Exec::Sequential, 5_000, 64, id, fold, std::cmp::min);
        let par = fold_chunks(Exec::Parallel, 5_000, 64, id, fold, std::cmp::min);
        assert_eq!(seq, par);
        assert_eq!(seq.0, 0);
    }
}
