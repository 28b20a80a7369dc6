//! Brute-force payoffs on a product grid.
//!
//! Uniform latent margins are replaced by the `m` midpoints of `[-1, 1]`,
//! discrete ones by their atoms. Under the one-factor law the grid runs
//! over the latent draws `Z` for each value of the common sign. Ties
//! contribute zero.

use alloc::format;
use alloc::vec::Vec;

use crate::dist::{MarginDistribution, Marginal};
use crate::game::Game;
use crate::montecarlo::{Method, PayoffEstimate};
use crate::rule::{sgn, Profile};
use crate::{Error, Result};

pub const MAX_GROUPS: usize = 5;
pub const MAX_POINTS: f64 = 1e9;

fn latent_grid(marginal: &Marginal, m: usize) -> Vec<(f64, f64)> {
    match marginal.atoms() {
        Some(atoms) => atoms,
        None => (0..m)
            .map(|k| (-1.0 + (2 * k + 1) as f64 / m as f64, 1.0 / m as f64))
            .collect(),
    }
}

struct Tables {
    /// margin of group j at grid point k
    theta: Vec<Vec<f64>>,
    /// weighted rule output of group j at grid point k
    vote: Vec<Vec<f64>>,
    prob: Vec<f64>,
}

/// `Σ_{tuples} P(tuple)·θ_i·sgn(Σ_j vote_j)` for every `i`.
fn sweep(t: &Tables, n: usize) -> [f64; MAX_GROUPS] {
    let mut out = [0.0; MAX_GROUPS];
    let mut counts = [0usize; MAX_GROUPS];
    let mut partial = [0.0; MAX_GROUPS + 1];
    let mut weight = [1.0; MAX_GROUPS + 1];
    let len = t.prob.len();
    let last = n - 1;
    'outer: loop {
        // prefix sums for the outer coordinates
        for j in 0..last {
            partial[j + 1] = partial[j] + t.vote[j][counts[j]];
            weight[j + 1] = weight[j] * t.prob[counts[j]];
        }
        let base = partial[last];
        let (mut sd, mut sdt) = (0.0, 0.0);
        for k in 0..len {
            let d = sgn(base + t.vote[last][k]) * t.prob[k];
            sd += d;
            sdt += d * t.theta[last][k];
        }
        let w = weight[last];
        for (j, o) in out.iter_mut().enumerate().take(last) {
            *o += w * t.theta[j][counts[j]] * sd;
        }
        out[last] += w * sdt;
        // odometer over the outer coordinates
        let mut j = last;
        loop {
            if j == 0 {
                break 'outer;
            }
            j -= 1;
            counts[j] += 1;
            if counts[j] < len {
                break;
            }
            counts[j] = 0;
        }
    }
    out
}

/// Midpoint-grid payoffs with `m` points per uniform coordinate.
pub fn bruteforce_payoffs(
    game: &Game,
    profile: &Profile,
    dist: &MarginDistribution,
    m: usize,
) -> Result<PayoffEstimate> {
    profile.check_game(game)?;
    dist.validate()?;
    let n = game.n();
    if n > MAX_GROUPS {
        return Err(Error::usage(format!(
            "brute force handles at most {MAX_GROUPS} groups, got {n}"
        )));
    }
    if m == 0 {
        return Err(Error::usage("grid needs at least one point per dimension"));
    }
    let latent = latent_grid(dist.base_marginal(), m);
    let points = libm::pow(latent.len() as f64, n as f64);
    if points > MAX_POINTS {
        return Err(Error::usage(format!(
            "grid of {points:.3e} points exceeds the budget of {MAX_POINTS:.0e}"
        )));
    }
    let prob: Vec<f64> = latent.iter().map(|a| a.1).collect();
    let branches: Vec<(f64, Vec<f64>)> = match dist {
        MarginDistribution::Iid(_) => alloc::vec![(1.0, latent.iter().map(|a| a.0).collect())],
        MarginDistribution::OneFactor { rho, .. } => [1.0, -1.0]
            .iter()
            .map(|&s| {
                (
                    0.5,
                    latent
                        .iter()
                        .map(|a| MarginDistribution::tilt(*rho, s, a.0))
                        .collect(),
                )
            })
            .collect(),
    };
    let mut mean = alloc::vec![0.0; n];
    for (p_branch, thetas) in branches {
        let tables = Tables {
            theta: alloc::vec![thetas.clone(); n],
            vote: (0..n)
                .map(|j| {
                    let w = game.weight(j);
                    let r = profile.rule(j);
                    thetas.iter().map(|&t| w * r.eval(t)).collect()
                })
                .collect(),
            prob: prob.clone(),
        };
        let s = sweep(&tables, n);
        for (acc, v) in mean.iter_mut().zip(s) {
            *acc += p_branch * v;
        }
    }
    Ok(PayoffEstimate::exact(mean, Method::BruteForce))
}
