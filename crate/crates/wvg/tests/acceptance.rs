//! Acceptance suite: one line per criterion, exit status 1 on an unexpected
//! result. Criteria whose published reference cannot be met are listed in
//! `KNOWN_DEVIATIONS`; they are still computed and reported as FAIL.

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wvg::commands::{class_ratios, ec_class_payoffs, reproduce_example1, Evaluator};
use wvg::parallel::{default_threads, estimate_many};
use wvg::reference::*;
use wvg::spec::MethodSpec;
use wvg_core::asymptotics::{cd_crossing, cd_limit, mixed_corr, symmetric_limit, symmetric_slope};
use wvg_core::data::builtin_ec;
use wvg_core::oracle::{
    best_response, bruteforce_payoffs, conv_payoffs, interim_payoff, opponent_sum, unit_grid,
    wta_exact_payoffs, ConvOptions,
};
use wvg_core::welfare::{find_dominating_gp, gini, lorenz_dominates, GpSearch, LorenzOrder};
use wvg_core::{Game, MarginDistribution, McConfig, Profile, Rule};

/// Criteria expected to fail, with the reason printed next to the result.
const KNOWN_DEVIATIONS: &[(u32, &str)] = &[
    (
        3,
        "the popular-vote column cannot be reproduced from the listed populations",
    ),
    (
        6,
        "at 10^7 draws the PR/mixed gap is below 3 SE for small states and reversed for EV 55",
    ),
];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn uniform() -> MarginDistribution {
    MarginDistribution::uniform()
}

fn fine() -> ConvOptions {
    ConvOptions::with_resolution(0.1)
}

fn class_members(game: &Game, ev: u32) -> Vec<usize> {
    (0..game.n())
        .filter(|&i| game.weight(i) == ev as f64)
        .collect()
}

/// Random odd step rule: either a few coarse steps or a dense staircase.
fn step_rule(rng: &mut ChaCha8Rng) -> Rule {
    let dense = rng.random_bool(0.5);
    let k = if dense {
        rng.random_range(150..300)
    } else {
        rng.random_range(1..5)
    };
    let mut ts: Vec<f64> = if dense {
        (1..=k).map(|j| j as f64 / k as f64).collect()
    } else {
        (0..k).map(|_| rng.random_range(0.01..1.0)).collect()
    };
    ts.sort_by(f64::total_cmp);
    ts.dedup();
    let top = rng.random_range(0.3..=1.0);
    let mut vs: Vec<f64> = (0..ts.len()).map(|_| rng.random_range(0.0..=top)).collect();
    vs.sort_by(f64::total_cmp);
    *vs.last_mut().unwrap() = top;
    Rule::step(ts.into_iter().zip(vs).collect()).unwrap()
}

fn random_weights(rng: &mut ChaCha8Rng, n: usize, dictator: bool) -> Vec<f64> {
    loop {
        let mut w: Vec<f64> = (0..n).map(|_| rng.random_range(1..=20) as f64).collect();
        if dictator {
            let rest: f64 = w[1..].iter().sum();
            w[0] = rest + rng.random_range(1..=10) as f64;
            return w;
        }
        let total: f64 = w.iter().sum();
        if w.iter().all(|&x| x < total / 2.0) {
            return w;
        }
    }
}

fn random_games(seed: u64, count: usize, dictator: bool) -> Vec<Game> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(3..=4);
            Game::from_weights(&random_weights(&mut rng, n, dictator)).unwrap()
        })
        .collect()
}

fn c1() -> Outcome {
    let t = Instant::now();
    let game = builtin_ec();
    let est = wta_exact_payoffs(&game, &uniform()).unwrap();
    let elapsed = t.elapsed().as_secs_f64();
    let mut worst: f64 = 0.0;
    for (c, &ev) in EC_CLASSES.iter().enumerate() {
        for i in class_members(&game, ev) {
            worst = worst.max((est.mean[i] - EC_PAYOFFS[c][0]).abs());
        }
    }
    outcome(
        worst <= 1.5e-4 && elapsed < 5.0,
        format!("max |Δ| = {worst:.2e} (tol 1.5e-4), {elapsed:.3} s"),
    )
}

fn c2() -> Outcome {
    let t = Instant::now();
    let eval = Evaluator {
        method: MethodSpec::Mc,
        dist: uniform(),
        samples: 100_000_000,
        seed: 2_020,
        chunks: 64,
        threads: default_threads(),
        resolution: None,
        grid: None,
    };
    let p = ec_class_payoffs(&eval).unwrap();
    let r = class_ratios(&p);
    let elapsed = t.elapsed().as_secs_f64();
    let mut dp: f64 = 0.0;
    let mut dr: f64 = 0.0;
    for c in 0..19 {
        for k in 0..4 {
            dp = dp.max((p[c][k] - EC_PAYOFFS[c][k]).abs());
            dr = dr.max((r[c][k] - EC_RATIOS[c][k]).abs());
        }
    }
    outcome(
        dp < 1e-3 && dr < 4e-3 && elapsed < 300.0,
        format!(
            "10^8 draws: payoffs max |Δ| = {dp:.2e} (tol 1e-3), ratios max |Δ| = {dr:.2e} (tol 4e-3), {elapsed:.0} s on {} thread(s)",
            eval.threads
        ),
    )
}

fn c3() -> Outcome {
    let t = Instant::now();
    let eval = Evaluator {
        method: MethodSpec::Conv,
        dist: uniform(),
        samples: 0,
        seed: 0,
        chunks: 1,
        threads: 1,
        resolution: None,
        grid: None,
    };
    let rep = reproduce_example1(&eval).unwrap();
    let elapsed = t.elapsed().as_secs_f64();
    let bad: Vec<String> = rep
        .failures()
        .iter()
        .map(|c| {
            format!(
                "{} {} {:.4} vs {:.3}",
                c.row, c.column, c.computed, c.published
            )
        })
        .collect();
    outcome(
        bad.is_empty() && elapsed < 10.0,
        format!(
            "{} of {} entries within 1e-3, {elapsed:.3} s{}",
            rep.checks.len() - bad.len(),
            rep.checks.len(),
            if bad.is_empty() {
                String::new()
            } else {
                format!("; off: {}", bad.join(", "))
            }
        ),
    )
}

fn c4() -> Outcome {
    let games = random_games(4, 100, false);
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    let grid = unit_grid(41);
    let thetas = [-0.95, -0.6, -0.2, -0.03, 0.03, 0.2, 0.6, 0.95];
    let (mut covered, mut checks, mut failures) = (0, 0, 0);
    for game in &games {
        let n = game.n();
        let i = rng.random_range(0..n);
        let rules: Vec<Rule> = (0..n)
            .map(|j| {
                if j == i {
                    Rule::Wta
                } else {
                    step_rule(&mut rng)
                }
            })
            .collect();
        let profile = Profile::new(rules).unwrap();
        let h = wvg_core::oracle::default_resolution(game.total_weight());
        let opp = opponent_sum(game, &profile, &uniform(), i, h).unwrap();
        let w = game.weight(i);
        let full = opp.covers(-w, w);
        covered += full as usize;
        for &theta in &thetas {
            checks += 1;
            let v: Vec<f64> = grid
                .iter()
                .map(|&x| interim_payoff(game, i, x, theta, &opp).unwrap())
                .collect();
            let monotone = v.windows(2).all(|p| {
                if theta > 0.0 {
                    p[1] >= p[0] - 1e-12
                } else {
                    p[1] <= p[0] + 1e-12
                }
            });
            let br_ok =
                !full || best_response(game, i, theta, &opp, &grid).unwrap() == [theta.signum()];
            if !(monotone && br_ok) {
                failures += 1;
            }
        }
    }
    outcome(
        failures == 0 && covered > 0,
        format!(
            "{failures} failures in {checks} checks; {covered} of 100 opponent laws with full support"
        ),
    )
}

fn c5() -> Outcome {
    let search = GpSearch::default();
    let t = Instant::now();
    let mut missed = Vec::new();
    let mut seeded = 0;
    for (k, game) in random_games(4, 100, false).iter().enumerate() {
        match find_dominating_gp(game, &uniform(), &Profile::wta(game.n()), &search).unwrap() {
            Some(l) => {
                let w = game.weights();
                let eq: Vec<f64> = {
                    let m = w.iter().map(|x| 1.0 / x).fold(0.0, f64::max);
                    w.iter().map(|x| 1.0 / x / m).collect()
                };
                seeded += (l == eq) as usize;
            }
            None => missed.push(format!("#{k} {:?}", game.weights())),
        }
    }
    let mut false_hits = 0;
    for game in random_games(5, 20, true) {
        if find_dominating_gp(&game, &uniform(), &Profile::wta(game.n()), &search)
            .unwrap()
            .is_some()
        {
            false_hits += 1;
        }
    }
    outcome(
        missed.is_empty() && false_hits == 0,
        format!(
            "found on {} of 100 games ({seeded} by the equalizing seed), {false_hits} of 20 dictator games wrongly dominated, {:.1} s{}",
            100 - missed.len(),
            t.elapsed().as_secs_f64(),
            if missed.is_empty() {
                String::new()
            } else {
                format!("; missed {}", missed.join(", "))
            }
        ),
    )
}

fn c6() -> Outcome {
    let shares: Vec<f64> = (0..=10).map(|k| k as f64 / 10.0).collect();
    let corr: Vec<f64> = shares.iter().map(|&a| mixed_corr(a, &uniform())).collect();
    let decreasing = corr.windows(2).all(|p| p[1] < p[0]);

    let game = builtin_ec();
    let n = game.n();
    let a = [0.0, EC_MIXED_SHARE, 0.5, 1.0];
    let profiles: Vec<Profile> = a
        .iter()
        .map(|&s| Profile::symmetric(Rule::mixed(s).unwrap(), n).unwrap())
        .collect();
    let cfg = McConfig::new(10_000_000, 6, uniform());
    let run = estimate_many(&game, &profiles, &cfg, default_threads()).unwrap();
    let mut bad = Vec::new();
    for k in 0..3 {
        let d = run.diff(k, k + 1);
        for i in 0..n {
            if !(d.mean[i] > 3.0 * d.standard_error[i]) {
                bad.push(format!(
                    "{} a={:.3}/{:.3} gap {:+.1e} ({:.1} SE)",
                    game.groups()[i].name,
                    a[k],
                    a[k + 1],
                    d.mean[i],
                    d.mean[i] / d.standard_error[i]
                ));
            }
        }
    }
    let shown: Vec<&String> = bad.iter().take(4).collect();
    outcome(
        decreasing && bad.is_empty(),
        format!(
            "corr decreasing: {decreasing}; {} of {} adjacent gaps not above 3 SE{}",
            bad.len(),
            3 * n,
            if bad.is_empty() {
                String::new()
            } else {
                format!(
                    " (e.g. {})",
                    shown
                        .iter()
                        .map(|s| s.as_str())
                        .collect::<Vec<_>>()
                        .join("; ")
                )
            }
        ),
    )
}

fn c7() -> Outcome {
    let mut errs = Vec::new();
    for n in [11, 25, 51] {
        let game = Game::from_weights(&vec![1.0; n]).unwrap();
        // the default step grows with the total weight; a fixed fine step
        // keeps the lattice error well below the finite-n gap
        let pi = conv_payoffs(
            &game,
            &Profile::pr(n),
            &uniform(),
            ConvOptions::with_resolution(0.01),
        )
        .unwrap()
        .mean[0];
        let lim = symmetric_limit(&Rule::Pr, &uniform(), &game).unwrap()[0];
        let scaled = (2.0 * std::f64::consts::PI * n as f64).sqrt() * pi;
        errs.push((scaled - lim).abs() / lim);
    }
    let shrinking = errs.windows(2).all(|p| p[1] < p[0]);
    let game = builtin_ec();
    let wta = wta_exact_payoffs(&game, &uniform()).unwrap();
    let pr = conv_payoffs(&game, &Profile::pr(game.n()), &uniform(), fine()).unwrap();
    let ratios: Vec<f64> = wta.mean.iter().zip(&pr.mean).map(|(a, b)| a / b).collect();
    let lo = ratios.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = ratios.iter().copied().fold(0.0, f64::max);
    outcome(
        shrinking && errs[2] < 0.05 && lo >= 0.85 && hi <= 0.91,
        format!(
            "relative errors n=11,25,51: {:.4}, {:.4}, {:.4}; WTA/PR in [{lo:.4}, {hi:.4}]",
            errs[0], errs[1], errs[2]
        ),
    )
}

fn c8() -> Outcome {
    let game = builtin_ec();
    let n = game.n();
    let wta = wta_exact_payoffs(&game, &uniform()).unwrap();
    let pr = conv_payoffs(&game, &Profile::pr(n), &uniform(), fine()).unwrap();
    let cd = conv_payoffs(&game, &Profile::cd(&game, 2.0).unwrap(), &uniform(), fine()).unwrap();
    let mut wrong = 0;
    for i in 0..n {
        let r = cd.mean[i] / pr.mean[i];
        let w = game.weight(i);
        if (w <= 16.0 && r <= 1.0) || (w >= 18.0 && r >= 1.0) {
            wrong += 1;
        }
        if cd.mean[i] <= wta.mean[i] {
            wrong += 1;
        }
    }
    let cross = cd_crossing(2.0, &Rule::Pr, &uniform(), &game).unwrap();
    outcome(
        wrong == 0 && cross.w_star > 16.0 && cross.w_star < 18.0,
        format!("{wrong} ordering violations; w* = {:.3}", cross.w_star),
    )
}

fn c9() -> Outcome {
    let game = builtin_ec();
    let n = game.n();
    let wta = wta_exact_payoffs(&game, &uniform()).unwrap().mean;
    let pr = conv_payoffs(&game, &Profile::pr(n), &uniform(), fine())
        .unwrap()
        .mean;
    let cd = conv_payoffs(&game, &Profile::cd(&game, 2.0).unwrap(), &uniform(), fine())
        .unwrap()
        .mean;
    let vs_pr = lorenz_dominates(&cd, &pr).unwrap();
    let vs_wta = lorenz_dominates(&cd, &wta).unwrap();
    let (g_cd, g_pr) = (gini(&cd).unwrap(), gini(&pr).unwrap());

    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut moyes_fail = 0;
    for _ in 0..50 {
        let m = rng.random_range(5..60);
        let w: Vec<f64> = (0..m).map(|_| rng.random_range(2..=60) as f64).collect();
        let g = Game::from_weights(&w).unwrap();
        let f = cd_limit(2.0, &uniform(), &g).unwrap().limits;
        let lin: Vec<f64> = w
            .iter()
            .map(|x| symmetric_slope(&Rule::Pr, &uniform(), &g) * x)
            .collect();
        let distinct = w.iter().any(|x| *x != w[0]);
        let expect = if distinct {
            LorenzOrder::Dominates
        } else {
            LorenzOrder::Equal
        };
        if lorenz_dominates(&f, &lin).unwrap() != expect {
            moyes_fail += 1;
        }
    }
    outcome(
        vs_pr == LorenzOrder::Dominates
            && vs_wta == LorenzOrder::Dominates
            && g_cd < g_pr
            && moyes_fail == 0,
        format!(
            "CD vs PR: {vs_pr:?}, CD vs WTA: {vs_wta:?}, Gini {g_cd:.4} < {g_pr:.4}; Moyes failures {moyes_fail}/50"
        ),
    )
}

fn c10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut worst_det: f64 = 0.0;
    let mut worst_mc: f64 = 0.0;
    let mut beyond_3se = 0;
    let mut comparisons = 0;
    for k in 0..25 {
        let n = rng.random_range(2..=4);
        let w: Vec<f64> = (0..n).map(|_| rng.random_range(1..=15) as f64).collect();
        let game = Game::from_weights(&w).unwrap();
        let all_wta = k % 5 == 0;
        let rules: Vec<Rule> = (0..n)
            .map(|_| {
                if all_wta {
                    return Rule::Wta;
                }
                match rng.random_range(0..5) {
                    0 => Rule::Wta,
                    1 => Rule::Pr,
                    2 => Rule::mixed(rng.random_range(0.0..1.0)).unwrap(),
                    3 => Rule::gp(rng.random_range(0.2..1.0)).unwrap(),
                    _ => step_rule(&mut rng),
                }
            })
            .collect();
        let profile = Profile::new(rules).unwrap();
        let mut oracles = vec![
            conv_payoffs(&game, &profile, &uniform(), ConvOptions::default())
                .unwrap()
                .mean,
            bruteforce_payoffs(&game, &profile, &uniform(), [0, 0, 4000, 600, 130][n])
                .unwrap()
                .mean,
        ];
        if all_wta {
            oracles.push(wta_exact_payoffs(&game, &uniform()).unwrap().mean);
        }
        for a in 0..oracles.len() {
            for b in a + 1..oracles.len() {
                for i in 0..n {
                    worst_det = worst_det.max((oracles[a][i] - oracles[b][i]).abs());
                }
            }
        }
        let cfg = McConfig::new(10_000_000, 100 + k as u64, uniform());
        let mc = estimate_many(
            &game,
            std::slice::from_ref(&profile),
            &cfg,
            default_threads(),
        )
        .unwrap()
        .payoffs(0);
        for o in &oracles {
            for i in 0..n {
                comparisons += 1;
                let d = (mc.mean[i] - o[i]).abs();
                if d > 3.0 * mc.standard_error[i] {
                    beyond_3se += 1;
                }
                worst_mc = worst_mc.max(d - 3.0 * mc.standard_error[i]);
            }
        }
    }
    outcome(
        worst_det <= 2e-3 && worst_mc <= 2e-3,
        format!(
            "deterministic oracles max gap {worst_det:.2e}; Monte Carlo max excess over 3 SE {:.2e} ({beyond_3se} of {comparisons} comparisons beyond 3 SE)",
            worst_mc.max(0.0)
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, fn() -> Outcome); 10] = [
        (1, "exact winner-take-all payoffs", c1),
        (
            2,
            "Monte Carlo reproduction of both Electoral College tables",
            c2,
        ),
        (3, "three-state example by convolution", c3),
        (4, "interim monotonicity and best responses", c4),
        (5, "dominating scaled-proportional profiles", c5),
        (6, "mixed-rule ordering", c6),
        (7, "convergence to the symmetric limit", c7),
        (8, "district profile crossing", c8),
        (9, "Lorenz dominance of the district profile", c9),
        (10, "oracle cross-validation", c10),
    ];
    let filter: Option<u32> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut unexpected = 0;
    for (id, name, f) in criteria {
        if filter.is_some_and(|only| only != id) {
            continue;
        }
        let t = Instant::now();
        let o = f();
        let known = KNOWN_DEVIATIONS.iter().find(|k| k.0 == id).map(|k| k.1);
        let status = if o.pass { "PASS" } else { "FAIL" };
        let note = match (o.pass, known) {
            (false, Some(why)) => format!(" [known deviation: {why}]"),
            (true, Some(_)) => " [listed as a known deviation but passed]".to_string(),
            _ => String::new(),
        };
        println!(
            "criterion {id:>2} {status}: {name}: {} ({:.1} s){note}",
            o.detail,
            t.elapsed().as_secs_f64()
        );
        if !o.pass && known.is_none() {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        println!("{unexpected} criterion(s) failed unexpectedly");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
