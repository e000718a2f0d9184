//! Command-line tools around `symlevel-core`: a thread pool, an on-disk
//! character table cache, JSON/CSV formats and the `symlevel` binary.

pub mod cache;
pub mod cli;
pub mod config;
pub mod formats;
pub mod pool;

pub use cache::{CacheOutcome, TableCache};
pub use cli::run;
pub use pool::RayonPool;
