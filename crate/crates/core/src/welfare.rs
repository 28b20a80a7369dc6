//! Welfare comparisons of payoff vectors: Pareto dominance, scaled
//! proportional profiles, Lorenz dominance and the Gini coefficient.

use alloc::format;
use alloc::vec::Vec;

use crate::dist::MarginDistribution;
use crate::game::Game;
use crate::montecarlo::{PayoffDiff, PayoffEstimate};
use crate::oracle::conv::{conv_payoffs, group_payoff, ConvOptions};
use crate::oracle::lattice::{
    convolve_all, default_resolution, FactorLaw, LatticePmf, OpponentSumDistribution,
};
use crate::oracle::wta::wta_exact_payoffs;
use crate::quadrature::GaussLegendre;
use crate::rule::{Profile, Rule};
use crate::{Error, Result};

/// Margin below which two deterministic payoffs count as equal.
pub const EXACT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParetoOutcome {
    ADominates,
    BDominates,
    Incomparable,
    Indistinguishable,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParetoVerdict {
    pub outcome: ParetoOutcome,
    /// `π_i(A) − π_i(B)`.
    pub margin: Vec<f64>,
    /// Standard error of each margin (zero for deterministic inputs).
    pub standard_error: Vec<f64>,
    /// `+1` / `−1` when the margin is significantly positive / negative.
    pub significant: Vec<i8>,
}

fn verdict(margin: Vec<f64>, se: Vec<f64>, z: f64) -> ParetoVerdict {
    let significant: Vec<i8> = margin
        .iter()
        .zip(&se)
        .map(|(&m, &s)| {
            let bar = if s > 0.0 { z * s } else { EXACT_TOLERANCE };
            if m > bar {
                1
            } else if m < -bar {
                -1
            } else {
                0
            }
        })
        .collect();
    // "weakly better" for deterministic inputs allows rounding noise
    let floor = |s: f64| if s > 0.0 { 0.0 } else { EXACT_TOLERANCE };
    let a_weak = margin.iter().zip(&se).all(|(&m, &s)| m >= -floor(s));
    let b_weak = margin.iter().zip(&se).all(|(&m, &s)| m <= floor(s));
    let any_pos = significant.contains(&1);
    let any_neg = significant.contains(&-1);
    let outcome = if a_weak && any_pos {
        ParetoOutcome::ADominates
    } else if b_weak && any_neg {
        ParetoOutcome::BDominates
    } else if !any_pos && !any_neg {
        ParetoOutcome::Indistinguishable
    } else {
        ParetoOutcome::Incomparable
    };
    ParetoVerdict {
        outcome,
        margin,
        standard_error: se,
        significant,
    }
}

/// Compares two payoff vectors of the same game. Monte Carlo inputs are
/// treated as independent; strict gains must exceed `z` combined standard
/// errors.
pub fn pareto_compare(a: &PayoffEstimate, b: &PayoffEstimate, z: f64) -> Result<ParetoVerdict> {
    if a.len() != b.len() {
        return Err(Error::usage(format!(
            "payoff vectors have {} and {} groups",
            a.len(),
            b.len()
        )));
    }
    let margin = a.mean.iter().zip(&b.mean).map(|(x, y)| x - y).collect();
    let se = a
        .standard_error
        .iter()
        .zip(&b.standard_error)
        .map(|(x, y)| libm::sqrt(x * x + y * y))
        .collect();
    Ok(verdict(margin, se, z))
}

/// Verdict from a common-random-number difference `π(A) − π(B)`.
pub fn pareto_from_diff(diff: &PayoffDiff, z: f64) -> ParetoVerdict {
    verdict(diff.mean.clone(), diff.standard_error.clone(), z)
}

/// How the coefficients of a scaled proportional profile are chosen.
#[derive(Debug, Clone, PartialEq)]
pub enum GpScheme {
    Coefficients(Vec<f64>),
    /// `λ_i = 1/w_i`: every group casts the same effective weight.
    Equalizing,
    /// `λ_i = n_i/w_i`: reproduces the popular vote.
    Popular,
}

/// Raw coefficients of a scheme, rescaled so that the largest is 1.
pub fn gp_coefficients(game: &Game, scheme: &GpScheme) -> Result<Vec<f64>> {
    let raw: Vec<f64> = match scheme {
        GpScheme::Coefficients(l) => {
            if l.len() != game.n() {
                return Err(Error::usage(format!(
                    "{} coefficients for {} groups",
                    l.len(),
                    game.n()
                )));
            }
            l.clone()
        }
        GpScheme::Equalizing => game.weights().iter().map(|w| 1.0 / w).collect(),
        GpScheme::Popular => {
            let pops = game.populations().ok_or_else(|| {
                Error::config("the popular-vote scheme needs a population for every group")
            })?;
            pops.iter()
                .zip(game.weights())
                .map(|(p, w)| p / w)
                .collect()
        }
    };
    if raw.iter().any(|l| !(l.is_finite() && *l >= 0.0)) {
        return Err(Error::config(
            "coefficients must be finite and non-negative",
        ));
    }
    let max = raw.iter().copied().fold(0.0, f64::max);
    if max <= 0.0 {
        return Err(Error::config("at least one coefficient must be positive"));
    }
    Ok(raw.iter().map(|l| l / max).collect())
}

/// Scaled proportional profile `φ_i(θ) = λ_i θ`.
pub fn gp_profile(game: &Game, scheme: &GpScheme) -> Result<Profile> {
    Profile::new(
        gp_coefficients(game, scheme)?
            .into_iter()
            .map(Rule::Gp)
            .collect(),
    )
}

/// Settings for [`find_dominating_gp`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GpSearch {
    /// Grid points per coordinate on `[0, 1]`.
    pub grid_points: usize,
    /// Quadrature order; the lattice step is derived from the game.
    pub order: usize,
}

impl Default for GpSearch {
    fn default() -> Self {
        GpSearch {
            grid_points: 21,
            order: 64,
        }
    }
}

pub const MAX_SEARCH_GROUPS: usize = 4;

fn dominates(candidate: &[f64], target: &[f64]) -> bool {
    let weak = candidate
        .iter()
        .zip(target)
        .all(|(c, t)| *c >= t - EXACT_TOLERANCE);
    weak && candidate
        .iter()
        .zip(target)
        .any(|(c, t)| *c > t + EXACT_TOLERANCE)
}

/// Searches scaled proportional profiles for one that Pareto-dominates
/// `target` according to the deterministic oracles.
///
/// The equalizing and popular schemes are tried first, then every grid
/// vector whose largest coordinate is 1. Returns the first success.
pub fn find_dominating_gp(
    game: &Game,
    dist: &MarginDistribution,
    target: &Profile,
    search: &GpSearch,
) -> Result<Option<Vec<f64>>> {
    target.check_game(game)?;
    let n = game.n();
    if n > MAX_SEARCH_GROUPS {
        return Err(Error::usage(format!(
            "grid search handles at most {MAX_SEARCH_GROUPS} groups, got {n}"
        )));
    }
    if search.grid_points < 2 {
        return Err(Error::usage(
            "the coefficient grid needs at least two points",
        ));
    }
    let marginal = dist.iid_marginal("the dominating-profile search")?;
    let levels: Vec<f64> = (0..search.grid_points)
        .map(|k| k as f64 / (search.grid_points - 1) as f64)
        .collect();
    // fine enough to resolve the smallest nonzero grid coefficient
    let h = default_resolution(game.total_weight()).min(levels[1] * game.min_weight());
    let opts = ConvOptions {
        resolution: Some(h),
        order: search.order,
    };
    let target_pay = if target.rules().iter().all(|r| r.same_function(&Rule::Wta)) {
        wta_exact_payoffs(game, dist)?.mean
    } else {
        conv_payoffs(game, target, dist, opts)?.mean
    };

    let mut seeds = alloc::vec![gp_coefficients(game, &GpScheme::Equalizing)?];
    if game.populations().is_some() {
        seeds.push(gp_coefficients(game, &GpScheme::Popular)?);
    }
    for lambda in seeds.iter().cloned() {
        let p = gp_profile(game, &GpScheme::Coefficients(lambda.clone()))?;
        if dominates(&conv_payoffs(game, &p, dist, opts)?.mean, &target_pay) {
            return Ok(Some(lambda));
        }
    }

    let gl = GaussLegendre::new(search.order);
    // pmfs[j][k]: law of w_j·levels[k]·Θ_j on the lattice
    let pmfs: Vec<Vec<LatticePmf>> = (0..n)
        .map(|j| {
            levels
                .iter()
                .map(|&l| FactorLaw::new(&Rule::Gp(l), game.weight(j), marginal).discretize(h))
                .collect()
        })
        .collect();
    // The group with the largest target payoff is the hardest to satisfy,
    // so it is checked first and its opponent law is shared across its own
    // coefficient.
    let primary = (0..n)
        .max_by(|&a, &b| target_pay[a].total_cmp(&target_pay[b]))
        .unwrap_or(0);
    let others: Vec<usize> = (0..n).filter(|&j| j != primary).collect();
    let top = levels.len() - 1;
    let mut idx = alloc::vec![0usize; others.len()];
    'grid: loop {
        let opp = OpponentSumDistribution::from_lattice(
            primary,
            h,
            convolve_all(others.iter().zip(&idx).map(|(&j, &k)| &pmfs[j][k])),
        );
        let others_top = idx.contains(&top);
        for (kp, &lp) in levels.iter().enumerate() {
            if !(others_top || kp == top) {
                continue;
            }
            let pay_p = group_payoff(&Rule::Gp(lp), game.weight(primary), marginal, &opp, &gl);
            if pay_p < target_pay[primary] - EXACT_TOLERANCE {
                continue;
            }
            let mut lambda = alloc::vec![0.0; n];
            lambda[primary] = lp;
            let mut kidx = alloc::vec![0usize; n];
            kidx[primary] = kp;
            for (&j, &k) in others.iter().zip(&idx) {
                lambda[j] = levels[k];
                kidx[j] = k;
            }
            let mut pay = alloc::vec![0.0; n];
            pay[primary] = pay_p;
            let mut ok = true;
            for &i in &others {
                let opp_i = OpponentSumDistribution::from_lattice(
                    i,
                    h,
                    convolve_all((0..n).filter(|&j| j != i).map(|j| &pmfs[j][kidx[j]])),
                );
                pay[i] = group_payoff(&Rule::Gp(lambda[i]), game.weight(i), marginal, &opp_i, &gl);
                if pay[i] < target_pay[i] - EXACT_TOLERANCE {
                    ok = false;
                    break;
                }
            }
            if ok && dominates(&pay, &target_pay) {
                return Ok(Some(lambda));
            }
        }
        // odometer over the other groups' coefficients
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                break 'grid;
            }
            idx[pos] += 1;
            if idx[pos] < levels.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }

    // The dominating region can be thinner than the grid spacing when the
    // target sits close to the frontier; climb the smallest margin instead.
    seeds.push(alloc::vec![1.0; n]);
    let score = |lambda: &[f64]| -> Result<(f64, Vec<f64>)> {
        let p = gp_profile(game, &GpScheme::Coefficients(lambda.to_vec()))?;
        let pay = conv_payoffs(game, &p, dist, opts)?.mean;
        let m = pay
            .iter()
            .zip(&target_pay)
            .map(|(a, b)| a - b)
            .fold(f64::INFINITY, f64::min);
        Ok((m, pay))
    };
    for start in seeds {
        let mut x = start;
        let (mut best, mut pay) = score(&x)?;
        let mut step = 0.5;
        while step > 1e-3 {
            if dominates(&pay, &target_pay) {
                return Ok(Some(x));
            }
            let mut improved = false;
            for i in 0..n {
                for dir in [1.0, -1.0] {
                    let mut y = x.clone();
                    y[i] *= libm::exp(dir * step);
                    let max = y.iter().copied().fold(0.0, f64::max);
                    // stay above the finest grid level the lattice resolves
                    y.iter_mut().for_each(|v| *v = (*v / max).max(levels[1]));
                    let (sy, py) = score(&y)?;
                    if sy > best {
                        (x, best, pay) = (y, sy, py);
                        improved = true;
                    }
                }
            }
            if !improved {
                step *= 0.5;
            }
        }
        if dominates(&pay, &target_pay) {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// Cumulative payoff shares of the poorest `k` groups, `k = 0..n`.
#[derive(Debug, Clone, PartialEq)]
pub struct LorenzCurve {
    pub points: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LorenzOrder {
    Dominates,
    Dominated,
    Crossing,
    Equal,
}

fn check_nonnegative(payoffs: &[f64]) -> Result<f64> {
    if payoffs.is_empty() {
        return Err(Error::usage("empty payoff vector"));
    }
    if let Some(p) = payoffs.iter().find(|p| !(**p >= 0.0)) {
        return Err(Error::unsupported(format!(
            "Lorenz comparisons need non-negative payoffs, got {p}"
        )));
    }
    let total: f64 = payoffs.iter().sum();
    if total <= 0.0 {
        return Err(Error::unsupported(
            "Lorenz curve of an all-zero payoff vector",
        ));
    }
    Ok(total)
}

pub fn lorenz_curve(payoffs: &[f64]) -> Result<LorenzCurve> {
    let total = check_nonnegative(payoffs)?;
    let mut sorted = payoffs.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut points = Vec::with_capacity(sorted.len() + 1);
    let mut acc = 0.0;
    points.push(0.0);
    for p in &sorted {
        acc += p;
        points.push(acc / total);
    }
    // pin the end point against rounding
    *points.last_mut().unwrap() = 1.0;
    Ok(LorenzCurve { points })
}

/// Pointwise comparison of the two Lorenz curves.
pub fn lorenz_dominates(a: &[f64], b: &[f64]) -> Result<LorenzOrder> {
    if a.len() != b.len() {
        return Err(Error::usage(
            "Lorenz comparison needs vectors of equal length",
        ));
    }
    let la = lorenz_curve(a)?;
    let lb = lorenz_curve(b)?;
    let tol = 1e-12;
    let mut above = false;
    let mut below = false;
    for (x, y) in la.points.iter().zip(&lb.points) {
        if x > &(y + tol) {
            above = true;
        } else if x < &(y - tol) {
            below = true;
        }
    }
    Ok(match (above, below) {
        (true, false) => LorenzOrder::Dominates,
        (false, true) => LorenzOrder::Dominated,
        (true, true) => LorenzOrder::Crossing,
        (false, false) => LorenzOrder::Equal,
    })
}

/// Mean absolute difference over twice the mean.
pub fn gini(payoffs: &[f64]) -> Result<f64> {
    let total = check_nonnegative(payoffs)?;
    let n = payoffs.len() as f64;
    let mut sorted = payoffs.to_vec();
    sorted.sort_by(f64::total_cmp);
    // Σ_i Σ_j |x_i − x_j| = 2 Σ_k (2k − n + 1) x_(k)
    let s: f64 = sorted
        .iter()
        .enumerate()
        .map(|(k, x)| (2.0 * k as f64 - n + 1.0) * x)
        .sum();
    Ok(s / (n * total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::montecarlo::Method;
    use proptest::prelude::*;

    fn exact(v: &[f64]) -> PayoffEstimate {
        PayoffEstimate::exact(v.to_vec(), Method::Convolution)
    }

    #[test]
    fn pareto_outcomes() {
        let a = exact(&[0.3, 0.3, 0.3]);
        let b = exact(&[0.25, 0.25, 0.25]);
        assert_eq!(
            pareto_compare(&a, &b, 3.0).unwrap().outcome,
            ParetoOutcome::ADominates
        );
        assert_eq!(
            pareto_compare(&b, &a, 3.0).unwrap().outcome,
            ParetoOutcome::BDominates
        );
        assert_eq!(
            pareto_compare(&a, &a, 3.0).unwrap().outcome,
            ParetoOutcome::Indistinguishable
        );
        let c = exact(&[0.33, 0.33, 0.03]);
        assert_eq!(
            pareto_compare(&c, &b, 3.0).unwrap().outcome,
            ParetoOutcome::Incomparable
        );
        assert!(pareto_compare(&a, &exact(&[0.1]), 3.0).is_err());
    }

    #[test]
    fn monte_carlo_margins_need_significance() {
        let mut a = exact(&[0.30, 0.30]);
        let mut b = exact(&[0.29, 0.30]);
        a.method = Method::Mc;
        b.method = Method::Mc;
        a.standard_error = alloc::vec![0.002, 0.002];
        b.standard_error = alloc::vec![0.002, 0.002];
        // 0.01 / (0.002·√2) ≈ 3.5 > 3
        assert_eq!(
            pareto_compare(&a, &b, 3.0).unwrap().outcome,
            ParetoOutcome::ADominates
        );
        assert_eq!(
            pareto_compare(&a, &b, 4.0).unwrap().outcome,
            ParetoOutcome::Indistinguishable
        );
    }

    #[test]
    fn gp_schemes() {
        let g = Game::new(alloc::vec![
            crate::GroupSpec::new("FL", 29.0, Some(15047.0)).unwrap(),
            crate::GroupSpec::new("NY", 29.0, Some(13684.0)).unwrap(),
            crate::GroupSpec::new("WY", 3.0, Some(422.0)).unwrap(),
        ])
        .unwrap();
        let l = gp_coefficients(&g, &GpScheme::Equalizing).unwrap();
        assert!((l[0] - 3.0 / 29.0).abs() < 1e-15);
        assert_eq!(l[2], 1.0);
        let l = gp_coefficients(&g, &GpScheme::Popular).unwrap();
        assert_eq!(l[0], 1.0);
        assert!(gp_coefficients(&g, &GpScheme::Coefficients(alloc::vec![0.0; 3])).is_err());
        assert!(gp_coefficients(&g, &GpScheme::Coefficients(alloc::vec![1.0, -1.0, 1.0])).is_err());
        let bare = Game::from_weights(&[1.0, 2.0]).unwrap();
        assert!(matches!(
            gp_profile(&bare, &GpScheme::Popular),
            Err(Error::Config(_))
        ));
        let p = gp_profile(&g, &GpScheme::Coefficients(alloc::vec![0.5, 0.5, 0.5])).unwrap();
        assert!(p.rules().iter().all(|r| r.same_function(&Rule::Pr)));
    }

    #[test]
    fn lorenz_and_gini_examples() {
        assert_eq!(
            lorenz_dominates(&[1.0, 1.0, 1.0], &[0.5, 1.0, 2.0]).unwrap(),
            LorenzOrder::Dominates
        );
        assert_eq!(
            lorenz_dominates(&[0.5, 1.0, 2.0], &[1.0, 1.0, 1.0]).unwrap(),
            LorenzOrder::Dominated
        );
        assert_eq!(
            lorenz_dominates(&[0.5, 1.0, 2.0], &[2.0, 0.5, 1.0]).unwrap(),
            LorenzOrder::Equal
        );
        assert_eq!(
            lorenz_dominates(&[1.0, 1.0, 4.0], &[0.5, 2.5, 2.5]).unwrap(),
            LorenzOrder::Crossing
        );
        assert_eq!(gini(&[2.0, 2.0, 2.0]).unwrap(), 0.0);
        assert!((gini(&[0.0, 1.0]).unwrap() - 0.5).abs() < 1e-15);
        assert!(matches!(gini(&[-1.0, 1.0]), Err(Error::Unsupported(_))));
        assert!(matches!(
            lorenz_curve(&[0.0, 0.0]),
            Err(Error::Unsupported(_))
        ));
        let c = lorenz_curve(&[3.0, 1.0]).unwrap();
        assert_eq!(c.points, [0.0, 0.25, 1.0]);
    }

    #[test]
    fn search_on_small_games() {
        let g = crate::data::builtin_fl_ny_wy();
        let d = MarginDistribution::uniform();
        let s = GpSearch::default();
        let l = find_dominating_gp(&g, &d, &Profile::wta(3), &s)
            .unwrap()
            .unwrap();
        assert_eq!(l, gp_coefficients(&g, &GpScheme::Equalizing).unwrap());
        let dict = Game::from_weights(&[5.0, 1.0, 1.0]).unwrap();
        assert_eq!(
            find_dominating_gp(&dict, &d, &Profile::wta(3), &s).unwrap(),
            None
        );
        let g = Game::from_weights(&[4.0, 3.0, 2.0]).unwrap();
        assert_eq!(
            find_dominating_gp(&g, &d, &Profile::pr(3), &s).unwrap(),
            None
        );
        let big = Game::from_weights(&[1.0; 5]).unwrap();
        assert!(find_dominating_gp(&big, &d, &Profile::wta(5), &s).is_err());
    }

    fn brute_gini(x: &[f64]) -> f64 {
        let n = x.len() as f64;
        let mean = x.iter().sum::<f64>() / n;
        let mut s = 0.0;
        for a in x {
            for b in x {
                s += (a - b).abs();
            }
        }
        s / (2.0 * n * n * mean)
    }

    proptest! {
        #[test]
        fn gini_matches_pairwise_definition(x in proptest::collection::vec(0.01..10.0f64, 1..30)) {
            prop_assert!((gini(&x).unwrap() - brute_gini(&x)).abs() < 1e-12);
        }

        #[test]
        fn lorenz_and_gini_scale_invariant(
            x in proptest::collection::vec(0.01..10.0f64, 2..20),
            y in proptest::collection::vec(0.01..10.0f64, 2..20),
            k in 0.01..100.0f64,
        ) {
            let m = x.len().min(y.len());
            let (x, y) = (&x[..m], &y[..m]);
            let xs: Vec<f64> = x.iter().map(|v| v * k).collect();
            prop_assert!((gini(&xs).unwrap() - gini(x).unwrap()).abs() < 1e-12);
            let order = lorenz_dominates(x, y).unwrap();
            // scaling can only move points by rounding, far below the
            // comparison tolerance unless the curves touch
            let scaled = lorenz_dominates(&xs, y).unwrap();
            let la = lorenz_curve(x).unwrap();
            let lb = lorenz_curve(y).unwrap();
            let gap = la.points.iter().zip(&lb.points).map(|(a, b)| (a - b).abs())
                .filter(|d| *d > 0.0).fold(f64::INFINITY, f64::min);
            if gap > 1e-9 {
                prop_assert_eq!(order, scaled);
            }
        }

        #[test]
        fn pareto_is_antisymmetric(
            a in proptest::collection::vec(0.0..1.0f64, 3),
            b in proptest::collection::vec(0.0..1.0f64, 3),
        ) {
            let va = pareto_compare(&exact(&a), &exact(&b), 3.0).unwrap().outcome;
            let vb = pareto_compare(&exact(&b), &exact(&a), 3.0).unwrap().outcome;
            let swapped = match va {
                ParetoOutcome::ADominates => ParetoOutcome::BDominates,
                ParetoOutcome::BDominates => ParetoOutcome::ADominates,
                o => o,
            };
            prop_assert_eq!(vb, swapped);
        }

        #[test]
        fn affine_payoffs_lorenz_dominate_linear_ones(
            w in proptest::collection::vec(1u32..60, 2..40),
            a in 0.01..1.0f64,
            b in 0.01..1.0f64,
            c in 0.001..1.0f64,
        ) {
            // f(w) = Bw + C has f(w)/g(w) decreasing in w against g(w) = Aw
            let w: Vec<f64> = w.into_iter().map(f64::from).collect();
            let f: Vec<f64> = w.iter().map(|x| b * x + c).collect();
            let g: Vec<f64> = w.iter().map(|x| a * x).collect();
            let order = lorenz_dominates(&f, &g).unwrap();
            let distinct = w.iter().any(|x| *x != w[0]);
            if distinct {
                prop_assert_eq!(order, LorenzOrder::Dominates);
            } else {
                prop_assert_eq!(order, LorenzOrder::Equal);
            }
        }

        #[test]
        fn gp_rescaling_keeps_the_decision(
            lambda in proptest::collection::vec(0.05..1.0f64, 3),
            kappa in 0.1..1.0f64,
            theta in proptest::collection::vec(-1.0..1.0f64, 3),
        ) {
            let g = Game::from_weights(&[5.0, 3.0, 2.0]).unwrap();
            let scaled: Vec<f64> = lambda.iter().map(|l| l * kappa).collect();
            let pa = Profile::new(lambda.iter().map(|&l| Rule::Gp(l)).collect()).unwrap();
            let pb = Profile::new(scaled.iter().map(|&l| Rule::Gp(l)).collect()).unwrap();
            let sa = crate::decision::weighted_sum(&g, &pa, &theta).unwrap();
            if sa.abs() > 1e-12 {
                let da = crate::decision::expected_decision(&g, &pa, &theta).unwrap();
                let db = crate::decision::expected_decision(&g, &pb, &theta).unwrap();
                prop_assert_eq!(da, db);
            }
        }
    }
}
