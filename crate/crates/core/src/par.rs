//! Switch between rayon and plain iteration for independent work items.

use std::ops::Range;

/// How independent work items are evaluated. Without the `parallel`
/// feature both variants run sequentially.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// `f` over `items`, results in input order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            _ => items.iter().map(f).collect(),
        }
    }

    /// The result for the smallest index in `range` at which `f` returns
    /// `Some`, independent of scheduling.
    pub fn find_first<R, F>(self, range: Range<u64>, f: F) -> Option<R>
    where
        R: Send,
        F: Fn(u64) -> Option<R> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                range.into_par_iter().find_map_first(f)
            }
            _ => range.into_iter().find_map(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_agree() {
        let items: Vec<u64> = (0..1000).collect();
        for mode in [Execution::Sequential, Execution::Parallel] {
            assert_eq!(mode.map(&items, |x| x * 2)[999], 1998);
            assert_eq!(mode.find_first(0..10_000, |i| (i % 97 == 96).then_some(i)), Some(96));
            assert_eq!(mode.find_first(0..10, |_| None::<u64>), None);
        }
    }
}
