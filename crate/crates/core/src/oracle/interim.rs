//! Interim payoffs and best responses of a single group.

use alloc::format;
use alloc::vec::Vec;

use crate::game::Game;
use crate::oracle::lattice::OpponentSumDistribution;
use crate::{Error, Result};

/// Expected payoff of group `i` with realized margin `θ_i` when it casts the
/// weight margin `x_i`:
/// `θ_i·(P{w_i x_i + S > 0} − P{w_i x_i + S < 0})`, the tie contributing 0.
pub fn interim_payoff(
    game: &Game,
    i: usize,
    x_i: f64,
    theta_i: f64,
    opp: &OpponentSumDistribution,
) -> Result<f64> {
    if opp.excluded() != i {
        return Err(Error::usage(format!(
            "opponent law excludes group {}, not {i}",
            opp.excluded()
        )));
    }
    if i >= game.n() {
        return Err(Error::usage(format!("group index {i} out of range")));
    }
    if !(-1.0..=1.0).contains(&x_i) || !(-1.0..=1.0).contains(&theta_i) {
        return Err(Error::usage("margins must lie in [-1, 1]"));
    }
    if theta_i == 0.0 {
        return Ok(0.0);
    }
    let t = -game.weight(i) * x_i;
    // with a continuous cell law, P{S < t} = P{S ≤ t} = cdf(t)
    let below = opp.cdf(t);
    let above = opp.total_mass() - below;
    Ok(theta_i * (above - below))
}

/// `n` evenly spaced points covering `[-1, 1]`.
pub fn unit_grid(n: usize) -> Vec<f64> {
    assert!(n >= 2, "a grid over [-1, 1] needs both endpoints");
    (0..n)
        .map(|k| (-1.0 + 2.0 * k as f64 / (n - 1) as f64).clamp(-1.0, 1.0))
        .collect()
}

/// Grid points maximizing the interim payoff; ties within rounding are all
/// returned.
pub fn best_response(
    game: &Game,
    i: usize,
    theta_i: f64,
    opp: &OpponentSumDistribution,
    x_grid: &[f64],
) -> Result<Vec<f64>> {
    if x_grid.is_empty() {
        return Err(Error::usage("empty response grid"));
    }
    let values = x_grid
        .iter()
        .map(|&x| interim_payoff(game, i, x, theta_i, opp))
        .collect::<Result<Vec<f64>>>()?;
    let best = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let tol = 4.0 * f64::EPSILON * best.abs().max(f64::MIN_POSITIVE);
    Ok(x_grid
        .iter()
        .zip(&values)
        .filter(|&(_, &v)| v >= best - tol)
        .map(|(&x, _)| x)
        .collect())
}
