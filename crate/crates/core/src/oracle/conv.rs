//! Payoffs by lattice convolution of the opponents' weighted rule outputs.
//!
//! For group `i` with margin `θ > 0` the decision is `+1` exactly when the
//! opponents' sum `S` exceeds `−w_i φ_i(θ)`; symmetry of `S` turns the ex
//! ante payoff into
//!
//! ```text
//! π_i = 2 ∫_{θ>0} θ · P{−w_i φ_i(θ) < S ≤ w_i φ_i(θ)} dF(θ)
//! ```
//!
//! which is evaluated with the lattice law of `S` and Gauss–Legendre
//! quadrature split at the rule's breakpoints.

use alloc::vec::Vec;

use crate::dist::{MarginDistribution, Marginal};
use crate::game::Game;
use crate::montecarlo::{Method, PayoffEstimate};
use crate::oracle::lattice::{
    check_resolution, convolve_all, default_resolution, FactorLaw, LatticePmf,
    OpponentSumDistribution,
};
use crate::quadrature::GaussLegendre;
use crate::rule::{Profile, Rule};
use crate::{Error, Result};

/// Lattice step and quadrature order for [`conv_payoffs`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvOptions {
    /// Lattice step; `None` picks [`default_resolution`] of the total weight.
    pub resolution: Option<f64>,
    /// Gauss–Legendre points per smooth piece of the rule.
    pub order: usize,
}

impl Default for ConvOptions {
    fn default() -> Self {
        ConvOptions {
            resolution: None,
            order: 64,
        }
    }
}

impl ConvOptions {
    pub fn with_resolution(resolution: f64) -> Self {
        ConvOptions {
            resolution: Some(resolution),
            ..Default::default()
        }
    }

    fn step(&self, game: &Game) -> f64 {
        self.resolution
            .unwrap_or_else(|| default_resolution(game.total_weight()))
    }
}

fn factor_laws(game: &Game, profile: &Profile, marginal: &Marginal) -> Vec<FactorLaw> {
    game.groups()
        .iter()
        .zip(profile.rules())
        .map(|(g, r)| FactorLaw::new(r, g.weight, marginal))
        .collect()
}

fn prepare<'a>(
    game: &Game,
    profile: &Profile,
    dist: &'a MarginDistribution,
    resolution: f64,
) -> Result<(&'a Marginal, Vec<FactorLaw>)> {
    profile.check_game(game)?;
    let marginal = dist.iid_marginal("lattice convolution")?;
    marginal.validate()?;
    let laws = factor_laws(game, profile, marginal);
    check_resolution(resolution, &laws)?;
    Ok((marginal, laws))
}

/// Law of the weighted sum of all groups but `exclude`.
pub fn opponent_sum(
    game: &Game,
    profile: &Profile,
    dist: &MarginDistribution,
    exclude: usize,
    resolution: f64,
) -> Result<OpponentSumDistribution> {
    if exclude >= game.n() {
        return Err(Error::usage(alloc::format!(
            "group index {exclude} out of range for {} groups",
            game.n()
        )));
    }
    let (_, laws) = prepare(game, profile, dist, resolution)?;
    let pmfs: Vec<LatticePmf> = laws
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != exclude)
        .map(|(_, l)| l.discretize(resolution))
        .collect();
    Ok(OpponentSumDistribution::from_lattice(
        exclude,
        resolution,
        convolve_all(&pmfs),
    ))
}

/// Payoff of group `i` given the law of its opponents' sum.
pub fn group_payoff(
    rule: &Rule,
    weight: f64,
    marginal: &Marginal,
    opp: &OpponentSumDistribution,
    gl: &GaussLegendre,
) -> f64 {
    let pieces = rule.pieces();
    let breaks: Vec<f64> = pieces.iter().map(|p| p.lo).collect();
    2.0 * marginal.expect_positive(&breaks, gl, |theta| {
        theta * opp.within(weight * rule.eval(theta))
    })
}

/// Payoffs of every group by lattice convolution.
///
/// Groups with the same weight and rule share one opponent law.
pub fn conv_payoffs(
    game: &Game,
    profile: &Profile,
    dist: &MarginDistribution,
    opts: ConvOptions,
) -> Result<PayoffEstimate> {
    let h = opts.step(game);
    let (marginal, laws) = prepare(game, profile, dist, h)?;
    if opts.order == 0 {
        return Err(Error::usage("quadrature order must be positive"));
    }
    let gl = GaussLegendre::new(opts.order);
    let pmfs: Vec<LatticePmf> = laws.iter().map(|l| l.discretize(h)).collect();

    let n = game.n();
    let mut mean = alloc::vec![f64::NAN; n];
    for i in 0..n {
        if !mean[i].is_nan() {
            continue;
        }
        let opp = OpponentSumDistribution::from_lattice(
            i,
            h,
            convolve_all(
                pmfs.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, p)| p),
            ),
        );
        let rule = profile.rule(i);
        let w = game.weight(i);
        let value = group_payoff(rule, w, marginal, &opp, &gl);
        if !value.is_finite() {
            return Err(Error::numeric(alloc::format!(
                "non-finite payoff for group {i}"
            )));
        }
        for j in i..n {
            if game.weight(j) == w && profile.rule(j) == rule {
                mean[j] = value;
            }
        }
    }
    Ok(PayoffEstimate::exact(mean, Method::Convolution))
}

/// Payoff of a single group; cheaper than [`conv_payoffs`] when only one
/// entry is needed.
pub fn conv_payoff_of(
    game: &Game,
    profile: &Profile,
    dist: &MarginDistribution,
    i: usize,
    opts: ConvOptions,
) -> Result<f64> {
    let h = opts.step(game);
    let opp = opponent_sum(game, profile, dist, i, h)?;
    let marginal = dist.iid_marginal("lattice convolution")?;
    let gl = GaussLegendre::new(opts.order.max(1));
    Ok(group_payoff(
        profile.rule(i),
        game.weight(i),
        marginal,
        &opp,
        &gl,
    ))
}
