//! Execution strategy for the data-parallel loops.
//!
//! Every exhaustive scan in the crate goes through [`Exec`], so the same
//! call site can run on the rayon pool or on the current thread. Results are
//! always collected in input order, which keeps reports and listings
//! deterministic regardless of how the work was split.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Falls back to sequential execution when the `parallel` feature is off.
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

impl Exec {
    /// Ordered map over a slice.
    pub fn map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }

    /// Ordered map over `0..n`.
    pub fn map_range<U, F>(self, n: usize, f: F) -> Vec<U>
    where
        U: Send,
        F: Fn(usize) -> U + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => (0..n).into_par_iter().map(f).collect(),
            _ => (0..n).map(f).collect(),
        }
    }

    /// Ordered flat map over `0..n`; each chunk keeps its internal order.
    pub fn flat_map_range<U, F>(self, n: usize, f: F) -> Vec<U>
    where
        U: Send,
        F: Fn(usize) -> Vec<U> + Sync + Send,
    {
        self.map_range(n, f).into_iter().flatten().collect()
    }

    /// Ordered flat map over a slice.
    pub fn flat_map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> Vec<U> + Sync + Send,
    {
        self.map(items, f).into_iter().flatten().collect()
    }

    /// Splits `0..n` into contiguous blocks and maps each block.
    pub fn map_blocks<U, F>(self, n: u64, block: u64, f: F) -> Vec<U>
    where
        U: Send,
        F: Fn(std::ops::Range<u64>) -> U + Sync + Send,
    {
        let block = block.max(1);
        let count = n.div_ceil(block) as usize;
        self.map_range(count, |b| {
            let start = b as u64 * block;
            f(start..(start + block).min(n))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree_and_preserve_order() {
        let items: Vec<u32> = (0..1000).collect();
        let seq = Exec::Sequential.map(&items, |x| x * 3);
        let par = Exec::Parallel.map(&items, |x| x * 3);
        assert_eq!(seq, par);
        assert_eq!(seq[999], 2997);

        let seq = Exec::Sequential.flat_map_range(50, |i| vec![i; i % 3]);
        let par = Exec::Parallel.flat_map_range(50, |i| vec![i; i % 3]);
        assert_eq!(seq, par);
    }

    #[test]
    fn blocks_cover_range_exactly() {
        let sums = Exec::Parallel.map_blocks(1001, 100, |r| r.clone().count());
        assert_eq!(sums.len(), 11);
        assert_eq!(sums.iter().sum::<usize>(), 1001);
    }
}
