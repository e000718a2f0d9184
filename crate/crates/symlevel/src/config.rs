//! Run configuration shared by every subcommand.

use std::path::PathBuf;

use symlevel_core::character::TABLE_CAP;
use symlevel_core::growth::{DIMENSION_SWEEP_CAP, DIM_BOUND_CAP, F_SWEEP_CAP, GROWTH_CAP, G_SWEEP_CAP};
use symlevel_core::rank::{SPECHT_RANK_CAP, TENSOR_ADDITIVITY_CAP};
use symlevel_core::tensor::MURNAGHAN_LITTLEWOOD_CAP;
use symlevel_core::Characteristic;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Per-command limits on `n`. Defaults are the library's hard limits; a
/// configuration may tighten but never loosen them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub table: usize,
    pub murnaghan_littlewood: usize,
    pub tensor_additivity: usize,
    pub specht_rank: usize,
    pub growth: usize,
    pub f_sweep: usize,
    pub g_sweep: usize,
    pub dimension_sweep: usize,
    pub dim_bound: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            table: TABLE_CAP,
            murnaghan_littlewood: MURNAGHAN_LITTLEWOOD_CAP,
            tensor_additivity: TENSOR_ADDITIVITY_CAP,
            specht_rank: SPECHT_RANK_CAP,
            growth: GROWTH_CAP,
            f_sweep: F_SWEEP_CAP,
            g_sweep: G_SWEEP_CAP,
            dimension_sweep: DIMENSION_SWEEP_CAP,
            dim_bound: DIM_BOUND_CAP,
        }
    }
}

impl Caps {
    pub fn validate(&self) -> Result<(), String> {
        let hard = Caps::default();
        let pairs = [
            ("table", self.table, hard.table),
            ("murnaghan_littlewood", self.murnaghan_littlewood, hard.murnaghan_littlewood),
            ("tensor_additivity", self.tensor_additivity, hard.tensor_additivity),
            ("specht_rank", self.specht_rank, hard.specht_rank),
            ("growth", self.growth, hard.growth),
            ("f_sweep", self.f_sweep, hard.f_sweep),
            ("g_sweep", self.g_sweep, hard.g_sweep),
            ("dimension_sweep", self.dimension_sweep, hard.dimension_sweep),
            ("dim_bound", self.dim_bound, hard.dim_bound),
        ];
        for (name, v, cap) in pairs {
            if v > cap {
                return Err(format!("cap {name}={v} exceeds hard limit {cap}"));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub caps: Caps,
    pub p: Characteristic,
    pub cache_dir: PathBuf,
    pub format: Option<Format>,
    pub workers: usize,
    pub timing: bool,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), String> {
        self.caps.validate()?;
        if self.workers == 0 {
            return Err("worker count must be at least 1".into());
        }
        Ok(())
    }

    /// Fails with a usage message when `n` is above `cap`.
    pub fn within(&self, what: &str, n: usize, cap: usize) -> Result<(), String> {
        if n > cap {
            Err(format!("{what}: n={n} exceeds cap {cap}"))
        } else {
            Ok(())
        }
    }
}
