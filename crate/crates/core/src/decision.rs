//! The weighted-majority decision `d = sgn Σ w_i φ_i(θ_i)`.

use alloc::format;

use rand_core::RngCore;

use crate::game::Game;
use crate::rng::coin;
use crate::rule::{sgn, Profile};
use crate::{Error, Result};

/// `Σ w_i φ_i(θ_i)`.
pub fn weighted_sum(game: &Game, profile: &Profile, theta: &[f64]) -> Result<f64> {
    profile.check_game(game)?;
    if theta.len() != game.n() {
        return Err(Error::usage(format!(
            "margin vector has {} entries but the game has {} groups",
            theta.len(),
            game.n()
        )));
    }
    if let Some(t) = theta.iter().find(|t| !(-1.0..=1.0).contains(*t)) {
        return Err(Error::usage(format!("margin {t} outside [-1, 1]")));
    }
    Ok(game
        .groups()
        .iter()
        .zip(profile.rules())
        .zip(theta)
        .map(|((g, r), &t)| g.weight * r.eval(t))
        .sum())
}

/// The social decision in `{-1, +1}`; an exact tie is settled by one fair
/// coin drawn from `tie_draw`.
pub fn decide(
    game: &Game,
    profile: &Profile,
    theta: &[f64],
    tie_draw: &mut impl RngCore,
) -> Result<f64> {
    let s = weighted_sum(game, profile, theta)?;
    Ok(if s == 0.0 { coin(tie_draw) } else { sgn(s) })
}

/// `sgn` of the weighted sum, `0` on a tie. This is the expected decision
/// given `θ` under fair tie-breaking.
pub fn expected_decision(game: &Game, profile: &Profile, theta: &[f64]) -> Result<f64> {
    Ok(sgn(weighted_sum(game, profile, theta)?))
}
