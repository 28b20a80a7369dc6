//! Large-`n` limits of ex ante payoffs.
//!
//! For a symmetric profile `φ` and iid margins,
//! `√(2πn)·π_i → A^φ·w_i` with
//! `A^φ = 2·E[Θφ(Θ)] / √(E[φ(Θ)²]·∫w²dG)`, so a rule enters only through
//! `Corr[Θ, φ(Θ)]`. Under the district profile the limit is affine,
//! `B·w_i + C`, with a positive intercept; the crossing weight `w*` where it
//! meets a symmetric rule's line separates the groups that gain from the
//! district profile from those that lose.
//!
//! The weight distribution `G` is the empirical one of the game.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::dist::{MarginDistribution, Marginal};
use crate::game::Game;
use crate::rule::Rule;
use crate::{Error, Result};

/// `E[Θ·φ(Θ)]` and `E[φ(Θ)²]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RuleMoments {
    pub cross: f64,
    pub square: f64,
}

/// Moments of `φ(rZ)` with `Z` from `marginal`, integrating the rule's
/// affine pieces exactly.
fn scaled_rule_moments(rule: &Rule, marginal: &Marginal, r: f64) -> RuleMoments {
    if r == 0.0 {
        return RuleMoments {
            cross: 0.0,
            square: 0.0,
        };
    }
    if let Some(atoms) = marginal.atoms() {
        let (mut cross, mut square) = (0.0, 0.0);
        for (v, p) in atoms {
            let t = r * v;
            let y = rule.eval(t);
            cross += p * t * y;
            square += p * y * y;
        }
        return RuleMoments { cross, square };
    }
    // Θ = rZ is uniform on [-r, r]; by symmetry integrate over (0, r] with
    // density 1/r.
    let (mut cross, mut square) = (0.0, 0.0);
    for piece in rule.pieces() {
        let lo = piece.lo.min(r);
        let hi = piece.hi.min(r);
        if hi <= lo {
            continue;
        }
        let (a, b) = (piece.intercept, piece.slope);
        let d1 = hi - lo;
        let d2 = hi * hi - lo * lo;
        let d3 = hi * hi * hi - lo * lo * lo;
        cross += a * d2 / 2.0 + b * d3 / 3.0;
        square += a * a * d1 + a * b * d2 + b * b * d3 / 3.0;
    }
    RuleMoments {
        cross: cross / r,
        square: square / r,
    }
}

/// `E[Θφ(Θ)]` and `E[φ(Θ)²]` under the marginal law of one margin.
pub fn rule_moments(rule: &Rule, dist: &MarginDistribution) -> RuleMoments {
    match dist {
        MarginDistribution::Iid(m) => scaled_rule_moments(rule, m, 1.0),
        MarginDistribution::OneFactor { marginal, rho } => {
            // |Θ| is |Z| or |1 − 2ρ|·|Z| with probability ½ each
            let a = scaled_rule_moments(rule, marginal, 1.0);
            let b = scaled_rule_moments(rule, marginal, (1.0 - 2.0 * rho).abs());
            RuleMoments {
                cross: 0.5 * (a.cross + b.cross),
                square: 0.5 * (a.square + b.square),
            }
        }
    }
}

/// `Corr[Θ, φ(Θ)]`; zero when `φ(Θ) ≡ 0`.
pub fn corr_factor(rule: &Rule, dist: &MarginDistribution) -> f64 {
    let m = rule_moments(rule, dist);
    let var = dist.moments().mean_sq;
    if m.square <= 0.0 || var <= 0.0 {
        return 0.0;
    }
    m.cross / libm::sqrt(var * m.square)
}

/// Closed-form `Corr[Θ, a·sgn Θ + (1 − a)Θ]` from `E|Θ|` and `E[Θ²]`:
///
/// ```text
/// E[Θ²]·Corr² = (a E|Θ| + (1−a) E[Θ²])² / (a² + 2a(1−a) E|Θ| + (1−a)² E[Θ²])
/// ```
///
/// Assumes `P{Θ = 0} = 0`.
pub fn mixed_corr(a: f64, dist: &MarginDistribution) -> f64 {
    let m = dist.moments();
    let num = a * m.mean_abs + (1.0 - a) * m.mean_sq;
    let den = a * a + 2.0 * a * (1.0 - a) * m.mean_abs + (1.0 - a) * (1.0 - a) * m.mean_sq;
    if den <= 0.0 {
        return 0.0;
    }
    libm::sqrt(num * num / den / m.mean_sq)
}

/// `A^φ = 2·E[Θφ(Θ)] / √(E[φ²]·(Σw²)/n)`.
pub fn symmetric_slope(rule: &Rule, dist: &MarginDistribution, game: &Game) -> f64 {
    let m = rule_moments(rule, dist);
    if m.square <= 0.0 {
        return 0.0;
    }
    2.0 * m.cross / libm::sqrt(m.square * game.mean_sq_weight())
}

/// Per-group limits of `√(2πn)·π_i` under the symmetric profile `rule`.
pub fn symmetric_limit(rule: &Rule, dist: &MarginDistribution, game: &Game) -> Result<Vec<f64>> {
    if matches!(rule, Rule::Cd { .. }) {
        return Err(Error::usage(
            "the district rule depends on the weight; use cd_limit",
        ));
    }
    let a = symmetric_slope(rule, dist, game);
    Ok(game.weights().into_iter().map(|w| a * w).collect())
}

/// Turns a limit of `√(2πn)·π_i` into a payoff prediction.
pub fn predicted_payoff(limit: f64, n: usize) -> f64 {
    limit / libm::sqrt(2.0 * PI * n as f64)
}

/// Slope and intercept of the district-profile limit.
#[derive(Debug, Clone, PartialEq)]
pub struct CdLimit {
    pub slope: f64,
    pub intercept: f64,
    /// `B·w_i + C` per group.
    pub limits: Vec<f64>,
}

pub fn cd_limit(c: f64, dist: &MarginDistribution, game: &Game) -> Result<CdLimit> {
    let min_w = game.min_weight();
    if !(c > 0.0 && c <= min_w) {
        return Err(Error::config(format!(
            "district parameter must lie in (0, {min_w}], got {c}"
        )));
    }
    let m = dist.moments();
    let nonzero = match dist {
        MarginDistribution::Iid(marg) => marg.mass_nonzero(),
        MarginDistribution::OneFactor { marginal, rho } => {
            // half of the margins collapse to 0 when ρ = ½
            if *rho == 0.5 {
                0.5 * marginal.mass_nonzero()
            } else {
                marginal.mass_nonzero()
            }
        }
    };
    let second: f64 = game
        .weights()
        .iter()
        .map(|&w| c * c * nonzero + 2.0 * c * (w - c) * m.mean_abs + (w - c) * (w - c) * m.mean_sq)
        .sum::<f64>()
        / game.n() as f64;
    let denom = libm::sqrt(second);
    let slope = 2.0 * m.mean_sq / denom;
    let intercept = 2.0 * c * (m.mean_abs - m.mean_sq) / denom;
    let limits = game
        .weights()
        .iter()
        .map(|w| slope * w + intercept)
        .collect();
    Ok(CdLimit {
        slope,
        intercept,
        limits,
    })
}

/// Where the district line crosses a symmetric rule's line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Crossing {
    /// `max{w_min, min{ŵ, w_max}}`.
    pub w_star: f64,
    /// Unclamped root, when the lines cross.
    pub root: Option<f64>,
    /// The reference slope does not exceed the district slope, so the
    /// district profile is ahead for every weight.
    pub cd_dominates_all: bool,
}

pub fn cd_crossing(
    c: f64,
    reference: &Rule,
    dist: &MarginDistribution,
    game: &Game,
) -> Result<Crossing> {
    let cd = cd_limit(c, dist, game)?;
    let a = symmetric_slope(reference, dist, game);
    let (lo, hi) = (game.min_weight(), game.max_weight());
    if a <= cd.slope {
        return Ok(Crossing {
            w_star: hi,
            root: None,
            cd_dominates_all: true,
        });
    }
    let root = cd.intercept / (a - cd.slope);
    Ok(Crossing {
        w_star: root.min(hi).max(lo),
        root: Some(root),
        cd_dominates_all: false,
    })
}

/// Everything the asymptotic report shows for one symmetric rule and one
/// district parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticSummary {
    pub corr: f64,
    pub a_phi: f64,
    pub b: f64,
    pub c: f64,
    pub w_star: f64,
    pub cd_dominates_all: bool,
    pub mean_sq_weight: f64,
}

pub fn summarize(
    rule: &Rule,
    district: f64,
    dist: &MarginDistribution,
    game: &Game,
) -> Result<AsymptoticSummary> {
    let cd = cd_limit(district, dist, game)?;
    let crossing = cd_crossing(district, rule, dist, game)?;
    Ok(AsymptoticSummary {
        corr: corr_factor(rule, dist),
        a_phi: symmetric_slope(rule, dist, game),
        b: cd.slope,
        c: cd.intercept,
        w_star: crossing.w_star,
        cd_dominates_all: crossing.cd_dominates_all,
        mean_sq_weight: game.mean_sq_weight(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::builtin_ec;
    use crate::quadrature::GaussLegendre;

    fn uniform() -> MarginDistribution {
        MarginDistribution::uniform()
    }

    #[test]
    fn correlation_examples() {
        assert!((corr_factor(&Rule::Pr, &uniform()) - 1.0).abs() < 1e-15);
        assert!((corr_factor(&Rule::Gp(0.3), &uniform()) - 1.0).abs() < 1e-15);
        let half_sqrt3 = libm::sqrt(3.0) / 2.0;
        assert!((corr_factor(&Rule::Wta, &uniform()) - half_sqrt3).abs() < 1e-15);
        assert_eq!(corr_factor(&Rule::Zero, &uniform()), 0.0);
        assert!((mixed_corr(0.0, &uniform()) - 1.0).abs() < 1e-15);
        assert!((mixed_corr(1.0, &uniform()) - half_sqrt3).abs() < 1e-15);
        let c = mixed_corr(102.0 / 538.0, &uniform());
        assert!((c - 0.989).abs() < 5e-4, "{c}");
        let two = MarginDistribution::two_atom(0.5).unwrap();
        assert!((corr_factor(&Rule::Pr, &two) - 1.0).abs() < 1e-15);
        // ±m margins make WTA a rescaled PR
        assert!((corr_factor(&Rule::Wta, &two) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn piecewise_moments_match_quadrature() {
        let gl = GaussLegendre::new(32);
        let rule = Rule::step(alloc::vec![(0.2, 0.3), (0.7, 0.9)]).unwrap();
        let m = rule_moments(&rule, &uniform());
        let q = |f: &dyn Fn(f64) -> f64| {
            gl.integrate(0.0, 0.2, f) + gl.integrate(0.2, 0.7, f) + gl.integrate(0.7, 1.0, f)
        };
        assert!((m.cross - q(&|t| t * rule.eval(t))).abs() < 1e-14);
        assert!((m.square - q(&|t| rule.eval(t).powi(2))).abs() < 1e-14);
    }

    #[test]
    fn one_factor_reduces_to_iid_at_zero() {
        let d = MarginDistribution::one_factor(Marginal::Uniform, 0.0).unwrap();
        for r in [Rule::Wta, Rule::Mixed(0.4), Rule::Pr] {
            assert!((corr_factor(&r, &d) - corr_factor(&r, &uniform())).abs() < 1e-15);
        }
    }

    #[test]
    fn equal_weight_limits() {
        let g = Game::from_weights(&[1.0; 9]).unwrap();
        let pr = symmetric_limit(&Rule::Pr, &uniform(), &g).unwrap();
        let wta = symmetric_limit(&Rule::Wta, &uniform(), &g).unwrap();
        assert!((pr[0] - 2.0 / libm::sqrt(3.0)).abs() < 1e-14);
        assert!((wta[0] - 1.0).abs() < 1e-14);
        assert_eq!(
            symmetric_limit(&Rule::Zero, &uniform(), &g).unwrap(),
            [0.0; 9]
        );
        assert!(symmetric_limit(
            &Rule::Cd {
                c: 1.0,
                weight: 1.0
            },
            &uniform(),
            &g
        )
        .is_err());
    }

    #[test]
    fn ec_pr_prediction_for_small_states() {
        let g = builtin_ec();
        let lim = symmetric_limit(&Rule::Pr, &uniform(), &g).unwrap();
        let i = g.weights().iter().position(|&w| w == 3.0).unwrap();
        let expect = 3.0 * 2.0 * libm::sqrt(1.0 / 3.0)
            / libm::sqrt(10366.0 / 51.0)
            / libm::sqrt(2.0 * PI * 51.0);
        let got = predicted_payoff(lim[i], 51);
        assert!((got - expect).abs() < 1e-15);
        assert!((got - 0.0136).abs() < 5e-5);
    }

    #[test]
    fn cd_limit_properties() {
        let g = builtin_ec();
        let cd = cd_limit(2.0, &uniform(), &g).unwrap();
        assert!(cd.intercept > 0.0);
        let tiny = cd_limit(1e-9, &uniform(), &g).unwrap();
        assert!(tiny.intercept < 1e-8);
        assert!((tiny.slope - symmetric_slope(&Rule::Pr, &uniform(), &g)).abs() < 1e-9);
        assert!(matches!(
            cd_limit(4.0, &uniform(), &g),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            cd_limit(0.0, &uniform(), &g),
            Err(Error::Config(_))
        ));
        // EV-3 prediction within 15% of 0.0167
        let i = g.weights().iter().position(|&w| w == 3.0).unwrap();
        let p = predicted_payoff(cd.limits[i], 51);
        assert!((p / 0.0167 - 1.0).abs() < 0.15, "{p}");
    }

    #[test]
    fn crossing_weights() {
        let g = builtin_ec();
        let pr = cd_crossing(2.0, &Rule::Pr, &uniform(), &g).unwrap();
        assert!(pr.w_star > 16.0 && pr.w_star < 18.0, "{pr:?}");
        assert!(!pr.cd_dominates_all);
        let wta = cd_crossing(2.0, &Rule::Wta, &uniform(), &g).unwrap();
        assert_eq!(wta.w_star, 55.0);
        let zero = cd_crossing(2.0, &Rule::Zero, &uniform(), &g).unwrap();
        assert_eq!(zero.w_star, 55.0);
        assert!(zero.cd_dominates_all);
    }

    #[test]
    fn mixed_correlation_decreases() {
        let vals: Vec<f64> = (0..=10)
            .map(|k| mixed_corr(k as f64 / 10.0, &uniform()))
            .collect();
        for w in vals.windows(2) {
            assert!(w[1] < w[0]);
        }
    }
}
