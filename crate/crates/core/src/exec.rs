//! Execution strategy for the data-parallel loops (concept-pair images,
//! brute-force subset sweeps). With the `parallel` feature the work fans out
//! over rayon; results are collected in input order and every reduction goes
//! through canonical forms, so the output is identical for any thread count
//! and for the sequential fallback.

/// Whether fan-out loops run on the rayon pool or inline.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    Sequential,
    Parallel,
}

impl Default for Mode {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Mode::Parallel
        } else {
            Mode::Sequential
        }
    }
}

#[cfg(feature = "parallel")]
pub(crate) fn map_collect<T, R, G>(mode: Mode, items: &[T], f: G) -> Vec<R>
where
    T: Sync,
    R: Send,
    G: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    match mode {
        Mode::Parallel => items.par_iter().map(f).collect(),
        Mode::Sequential => items.iter().map(f).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_collect<T, R, G>(_mode: Mode, items: &[T], f: G) -> Vec<R>
where
    T: Sync,
    R: Send,
    G: Fn(&T) -> R + Sync,
{
    items.iter().map(f).collect()
}
