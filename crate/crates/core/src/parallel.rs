//! Execution substrate for sweeps and table construction.
//!
//! Library code only asks for an order-preserving indexed map; the CLI plugs in
//! a thread pool, tests and embedded callers use [`Sequential`].

use alloc::vec::Vec;

/// An order-preserving map over `0..len`.
pub trait ParallelMap: Sync {
    fn map_indexed<R, F>(&self, len: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send;
}

/// Runs everything on the calling thread.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sequential;

impl ParallelMap for Sequential {
    fn map_indexed<R, F>(&self, len: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        (0..len).map(f).collect()
    }
}
