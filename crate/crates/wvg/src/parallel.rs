//! Monte Carlo chunks on a thread pool.
//!
//! Chunks are independent streams, so they can run in any order; the
//! tallies are merged in chunk order afterwards, which makes the result
//! identical for every thread count.

use rayon::prelude::*;
use wvg_core::montecarlo::{McPlan, McResult, PayoffDiff};
use wvg_core::{Game, McConfig, PayoffEstimate, Profile};

use crate::error::Result;

/// Environment variable holding the default worker count.
pub const THREADS_ENV: &str = "WVG_THREADS";

/// Worker count from [`THREADS_ENV`], else the available parallelism.
pub fn default_threads() -> usize {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&t| t > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

pub fn run_plan(plan: &McPlan, threads: usize) -> Result<McResult> {
    if threads <= 1 {
        return Ok(plan.run_sequential()?);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()?;
    let tallies: Vec<_> = pool.install(|| {
        (0..plan.chunks())
            .into_par_iter()
            .map(|c| plan.run_chunk(c))
            .collect()
    });
    Ok(plan.finish(tallies)?)
}

/// All profiles evaluated on the same draws.
pub fn estimate_many(
    game: &Game,
    profiles: &[Profile],
    cfg: &McConfig,
    threads: usize,
) -> Result<McResult> {
    run_plan(&McPlan::new(game, profiles, cfg)?, threads)
}

pub fn estimate_payoffs(
    game: &Game,
    profile: &Profile,
    cfg: &McConfig,
    threads: usize,
) -> Result<PayoffEstimate> {
    Ok(estimate_many(game, std::slice::from_ref(profile), cfg, threads)?.payoffs(0))
}

pub fn estimate_payoff_diff(
    game: &Game,
    a: &Profile,
    b: &Profile,
    cfg: &McConfig,
    threads: usize,
) -> Result<PayoffDiff> {
    Ok(estimate_many(game, &[a.clone(), b.clone()], cfg, threads)?.diff(0, 1))
}
