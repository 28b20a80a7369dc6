//! The computations behind each subcommand. Every command turns a
//! [`RunSpec`] into an [`Output`] holding a CSV table and a markdown report.

use std::fmt::Write as _;

use wvg_core::asymptotics::{cd_crossing, cd_limit, corr_factor, symmetric_limit, symmetric_slope};
use wvg_core::montecarlo::McResult;
use wvg_core::oracle::{bruteforce_payoffs, conv_payoffs, wta_exact_payoffs, ConvOptions};
use wvg_core::welfare::{
    gini, lorenz_curve, lorenz_dominates, pareto_compare, pareto_from_diff, LorenzOrder,
    ParetoOutcome, ParetoVerdict,
};
use wvg_core::{Game, MarginDistribution, McConfig, Method, PayoffEstimate, Profile, Rule};

use crate::error::{Error, Result};
use crate::parallel::{self, default_threads};
use crate::reference::*;
use crate::spec::{Command, MethodSpec, OutputFormat, ProfileSpec, ReproduceTarget, RunSpec};

/// Result of a command in both output formats.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub csv: String,
    pub markdown: String,
}

impl Output {
    pub fn render(&self, format: OutputFormat) -> &str {
        match format {
            OutputFormat::Csv => &self.csv,
            OutputFormat::Markdown => &self.markdown,
        }
    }
}

/// How payoffs are evaluated.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluator {
    pub method: MethodSpec,
    pub dist: MarginDistribution,
    pub samples: u64,
    pub seed: u64,
    pub chunks: u64,
    pub threads: usize,
    pub resolution: Option<f64>,
    pub grid: Option<usize>,
}

/// Largest midpoint grid keeping the brute-force sweep near 2·10⁷ points.
pub fn default_grid(n: usize) -> usize {
    let m = int_root(2e7, n);
    m.clamp(2, 1001)
}

fn int_root(x: f64, n: usize) -> usize {
    x.powf(1.0 / n.max(1) as f64).floor() as usize
}

impl Evaluator {
    pub fn from_spec(spec: &RunSpec, default: MethodSpec) -> Result<Self> {
        let dist = spec.dist.build()?;
        let method = spec.method.unwrap_or(if dist.is_iid() {
            default
        } else {
            MethodSpec::Mc
        });
        Ok(Evaluator {
            method,
            dist,
            samples: spec.samples,
            seed: spec.seed,
            chunks: spec.chunks,
            threads: spec.threads.unwrap_or_else(default_threads),
            resolution: spec.resolution,
            grid: spec.grid,
        })
    }

    pub fn mc_config(&self) -> McConfig {
        McConfig::new(self.samples, self.seed, self.dist.clone()).with_chunks(self.chunks)
    }

    fn conv_options(&self) -> ConvOptions {
        ConvOptions {
            resolution: self.resolution,
            ..ConvOptions::default()
        }
    }

    /// Payoffs of one profile.
    pub fn payoffs(&self, game: &Game, profile: &Profile) -> Result<PayoffEstimate> {
        Ok(self
            .payoffs_many(game, std::slice::from_ref(profile))?
            .0
            .remove(0))
    }

    /// Payoffs of several profiles; Monte Carlo runs share their draws and
    /// the merged run is returned for difference estimates.
    pub fn payoffs_many(
        &self,
        game: &Game,
        profiles: &[Profile],
    ) -> Result<(Vec<PayoffEstimate>, Option<McResult>)> {
        if self.method == MethodSpec::Mc {
            let run = parallel::estimate_many(game, profiles, &self.mc_config(), self.threads)?;
            let est = (0..profiles.len()).map(|k| run.payoffs(k)).collect();
            return Ok((est, Some(run)));
        }
        let est = profiles
            .iter()
            .map(|p| self.deterministic(game, p))
            .collect::<Result<_>>()?;
        Ok((est, None))
    }

    fn deterministic(&self, game: &Game, profile: &Profile) -> Result<PayoffEstimate> {
        profile.check_game(game)?;
        match self.method {
            MethodSpec::Mc => unreachable!("handled by payoffs_many"),
            MethodSpec::WtaExact => {
                if !profile.rules().iter().all(|r| r.same_function(&Rule::Wta)) {
                    return Err(wvg_core::Error::usage(
                        "wta-exact only evaluates the winner-take-all profile",
                    )
                    .into());
                }
                Ok(wta_exact_payoffs(game, &self.dist)?)
            }
            MethodSpec::Conv => Ok(conv_payoffs(
                game,
                profile,
                &self.dist,
                self.conv_options(),
            )?),
            MethodSpec::Brute => Ok(bruteforce_payoffs(
                game,
                profile,
                &self.dist,
                self.grid.unwrap_or_else(|| default_grid(game.n())),
            )?),
            MethodSpec::Asymptotic => {
                let limits = asymptotic_limits(game, profile, &self.dist)?;
                let scale = (2.0 * std::f64::consts::PI * game.n() as f64).sqrt();
                Ok(PayoffEstimate::exact(
                    limits.iter().map(|l| l / scale).collect(),
                    // a prediction, not an estimate; reported as exact
                    Method::Convolution,
                ))
            }
        }
    }
}

/// Limits of `√(2πn)·π_i` for symmetric and district profiles.
pub fn asymptotic_limits(
    game: &Game,
    profile: &Profile,
    dist: &MarginDistribution,
) -> Result<Vec<f64>> {
    let first = profile.rule(0);
    if let Rule::Cd { c, .. } = first {
        let same_c = profile
            .rules()
            .iter()
            .all(|r| matches!(r, Rule::Cd { c: c2, .. } if c2 == c));
        if same_c {
            return Ok(cd_limit(*c, dist, game)?.limits);
        }
    } else if profile.is_symmetric() {
        return Ok(symmetric_limit(first, dist, game)?);
    }
    Err(wvg_core::Error::unsupported(
        "asymptotic predictions cover symmetric and district profiles only",
    )
    .into())
}

fn method_label(e: &PayoffEstimate, spec: MethodSpec) -> String {
    if spec == MethodSpec::Asymptotic {
        "asymptotic".into()
    } else {
        e.method.tag().into()
    }
}

struct Csv(csv::Writer<Vec<u8>>);

impl Csv {
    fn new<I: IntoIterator<Item = S>, S: AsRef<[u8]>>(header: I) -> Self {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(header).expect("in-memory write");
        Csv(w)
    }

    fn row<I: IntoIterator<Item = S>, S: AsRef<[u8]>>(&mut self, rec: I) {
        self.0.write_record(rec).expect("in-memory write");
    }

    fn finish(self) -> String {
        String::from_utf8(self.0.into_inner().expect("in-memory flush")).expect("utf-8 fields")
    }
}

fn num(x: f64) -> String {
    format!("{x:.8}")
}

fn profile_specs(spec: &RunSpec, want: usize, what: &str) -> Result<Vec<ProfileSpec>> {
    if spec.profiles.len() != want {
        return Err(Error::invalid(format!(
            "{what} takes {want} profile(s), got {}",
            spec.profiles.len()
        )));
    }
    Ok(spec.profiles.clone())
}

pub fn run(spec: &RunSpec) -> Result<Output> {
    match spec.command {
        Command::Payoff => cmd_payoff(spec),
        Command::Compare => cmd_compare(spec),
        Command::Asymptotic => cmd_asymptotic(spec),
        Command::Lorenz => cmd_lorenz(spec),
        Command::Reproduce => cmd_reproduce(spec),
    }
}

pub fn cmd_payoff(spec: &RunSpec) -> Result<Output> {
    let pspec = profile_specs(spec, 1, "payoff")?.remove(0);
    let game = spec.game.load()?;
    let profile = pspec.build(&game)?;
    let eval = Evaluator::from_spec(spec, MethodSpec::Conv)?;
    let est = eval.payoffs(&game, &profile)?;
    let label = method_label(&est, eval.method);
    let mut csv = Csv::new(["group", "name", "weight", "payoff", "stderr", "method"]);
    let mut md = String::new();
    let _ = writeln!(md, "# Payoffs\n");
    let _ = writeln!(
        md,
        "game `{}`, profile `{pspec}`, distribution `{}`, method `{label}`",
        spec.game, spec.dist
    );
    if eval.method == MethodSpec::Mc {
        let _ = writeln!(
            md,
            "\n{} samples, seed {}, {} chunks",
            eval.samples, eval.seed, eval.chunks
        );
    }
    let _ = writeln!(
        md,
        "\n| group | name | weight | payoff | stderr |\n|---|---|---|---|---|"
    );
    for (i, g) in game.groups().iter().enumerate() {
        csv.row([
            (i + 1).to_string(),
            g.name.clone(),
            g.weight.to_string(),
            num(est.mean[i]),
            num(est.standard_error[i]),
            label.clone(),
        ]);
        let _ = writeln!(
            md,
            "| {} | {} | {} | {:.6} | {:.2e} |",
            i + 1,
            g.name,
            g.weight,
            est.mean[i],
            est.standard_error[i]
        );
    }
    Ok(Output {
        csv: csv.finish(),
        markdown: md,
    })
}

/// Pareto verdict and payoffs of two profiles.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub a: PayoffEstimate,
    pub b: PayoffEstimate,
    pub verdict: ParetoVerdict,
}

pub fn compare_profiles(
    game: &Game,
    a: &Profile,
    b: &Profile,
    eval: &Evaluator,
    z: f64,
) -> Result<Comparison> {
    let (mut est, run) = eval.payoffs_many(game, &[a.clone(), b.clone()])?;
    let b_est = est.pop().expect("two estimates");
    let a_est = est.pop().expect("two estimates");
    let verdict = match run {
        Some(run) => pareto_from_diff(&run.diff(0, 1), z),
        None => pareto_compare(&a_est, &b_est, z)?,
    };
    Ok(Comparison {
        a: a_est,
        b: b_est,
        verdict,
    })
}

fn outcome_text(o: ParetoOutcome, a: &str, b: &str) -> String {
    match o {
        ParetoOutcome::ADominates => format!("`{a}` Pareto-dominates `{b}`"),
        ParetoOutcome::BDominates => format!("`{b}` Pareto-dominates `{a}`"),
        ParetoOutcome::Incomparable => format!("`{a}` and `{b}` are Pareto-incomparable"),
        ParetoOutcome::Indistinguishable => {
            format!("`{a}` and `{b}` are indistinguishable")
        }
    }
}

pub fn cmd_compare(spec: &RunSpec) -> Result<Output> {
    let specs = profile_specs(spec, 2, "compare")?;
    let game = spec.game.load()?;
    let a = specs[0].build(&game)?;
    let b = specs[1].build(&game)?;
    let eval = Evaluator::from_spec(spec, MethodSpec::Conv)?;
    let cmp = compare_profiles(&game, &a, &b, &eval, spec.z)?;
    let (na, nb) = (specs[0].to_string(), specs[1].to_string());
    let mut csv = Csv::new([
        "group",
        "name",
        "weight",
        "payoff_a",
        "payoff_b",
        "ratio",
        "margin",
        "stderr",
        "significant",
    ]);
    let mut md = String::new();
    let _ = writeln!(md, "# Comparison\n");
    let _ = writeln!(
        md,
        "game `{}`, A = `{na}`, B = `{nb}`, distribution `{}`, method `{}`\n",
        spec.game, spec.dist, eval.method
    );
    let _ = writeln!(
        md,
        "verdict: {}\n",
        outcome_text(cmp.verdict.outcome, &na, &nb)
    );
    let _ = writeln!(
        md,
        "| name | weight | A | B | A/B | A−B | stderr |\n|---|---|---|---|---|---|---|"
    );
    for (i, g) in game.groups().iter().enumerate() {
        let ratio = cmp.a.mean[i] / cmp.b.mean[i];
        let v = &cmp.verdict;
        csv.row([
            (i + 1).to_string(),
            g.name.clone(),
            g.weight.to_string(),
            num(cmp.a.mean[i]),
            num(cmp.b.mean[i]),
            num(ratio),
            num(v.margin[i]),
            num(v.standard_error[i]),
            v.significant[i].to_string(),
        ]);
        let _ = writeln!(
            md,
            "| {} | {} | {:.6} | {:.6} | {:.4} | {:+.6} | {:.1e} |",
            g.name, g.weight, cmp.a.mean[i], cmp.b.mean[i], ratio, v.margin[i], v.standard_error[i]
        );
    }
    Ok(Output {
        csv: csv.finish(),
        markdown: md,
    })
}

pub fn cmd_asymptotic(spec: &RunSpec) -> Result<Output> {
    let pspec = match spec.profiles.as_slice() {
        [] => ProfileSpec::Pr,
        [p] => p.clone(),
        _ => return Err(Error::invalid("asymptotic takes at most one rule")),
    };
    let rule = pspec.symmetric_rule().ok_or_else(|| {
        Error::invalid(format!(
            "asymptotic needs a symmetric rule (wta, pr, zero or mixed:<a>), got `{pspec}`"
        ))
    })?;
    let game = spec.game.load()?;
    let eval = Evaluator::from_spec(spec, MethodSpec::Conv)?;
    let dist = &eval.dist;
    let n = game.n();
    let scale = (2.0 * std::f64::consts::PI * n as f64).sqrt();

    let mut md = String::new();
    let _ = writeln!(md, "# Asymptotic payoffs\n");
    let _ = writeln!(
        md,
        "game `{}` (n = {n}, mean squared weight {:.4}), rule `{pspec}`, distribution `{}`\n",
        spec.game,
        game.mean_sq_weight(),
        spec.dist
    );
    let _ = writeln!(md, "- Corr[Θ, φ(Θ)] = {:.6}", corr_factor(&rule, dist));
    let _ = writeln!(md, "- slope A = {:.6}", symmetric_slope(&rule, dist, &game));

    let mut profiles = vec![Profile::symmetric(rule.clone(), n)?];
    let mut limits = vec![symmetric_limit(&rule, dist, &game)?];
    let mut labels = vec![pspec.to_string()];
    if let Some(c) = spec.district {
        let cd = cd_limit(c, dist, &game)?;
        let cross = cd_crossing(c, &rule, dist, &game)?;
        let _ = writeln!(
            md,
            "- district c = {c}: slope B = {:.6}, intercept C = {:.6}",
            cd.slope, cd.intercept
        );
        let _ = writeln!(
            md,
            "- crossing weight w* = {:.4}{}",
            cross.w_star,
            if cross.cd_dominates_all {
                " (district profile ahead at every weight)"
            } else {
                ""
            }
        );
        profiles.push(Profile::cd(&game, c)?);
        limits.push(cd.limits);
        labels.push(format!("cd:{c}"));
    }
    let (est, _) = eval.payoffs_many(&game, &profiles)?;

    let mut csv = Csv::new([
        "profile",
        "group",
        "name",
        "weight",
        "limit",
        "predicted",
        "computed",
        "scaled",
        "rel_error",
    ]);
    let _ = writeln!(
        md,
        "\ncomputed by `{}`\n\n| profile | name | weight | limit | √(2πn)·π | rel. error |\n|---|---|---|---|---|---|",
        eval.method
    );
    for (k, label) in labels.iter().enumerate() {
        for (i, g) in game.groups().iter().enumerate() {
            let lim = limits[k][i];
            let scaled = scale * est[k].mean[i];
            let rel = if lim != 0.0 {
                (scaled - lim) / lim
            } else {
                f64::NAN
            };
            csv.row([
                label.clone(),
                (i + 1).to_string(),
                g.name.clone(),
                g.weight.to_string(),
                num(lim),
                num(lim / scale),
                num(est[k].mean[i]),
                num(scaled),
                num(rel),
            ]);
            let _ = writeln!(
                md,
                "| {label} | {} | {} | {:.5} | {:.5} | {:+.3}% |",
                g.name,
                g.weight,
                lim,
                scaled,
                100.0 * rel
            );
        }
    }
    Ok(Output {
        csv: csv.finish(),
        markdown: md,
    })
}

fn order_text(o: LorenzOrder) -> &'static str {
    match o {
        LorenzOrder::Dominates => "dominates",
        LorenzOrder::Dominated => "dominated",
        LorenzOrder::Crossing => "crossing",
        LorenzOrder::Equal => "equal",
    }
}

pub fn cmd_lorenz(spec: &RunSpec) -> Result<Output> {
    if spec.profiles.is_empty() {
        return Err(Error::invalid("lorenz needs at least one profile"));
    }
    let game = spec.game.load()?;
    let eval = Evaluator::from_spec(spec, MethodSpec::Conv)?;
    let profiles = spec
        .profiles
        .iter()
        .map(|p| p.build(&game))
        .collect::<Result<Vec<_>>>()?;
    let (est, _) = eval.payoffs_many(&game, &profiles)?;
    let labels: Vec<String> = spec.profiles.iter().map(|p| p.to_string()).collect();
    let curves = est
        .iter()
        .map(|e| Ok(lorenz_curve(&e.mean)?))
        .collect::<Result<Vec<_>>>()?;
    let n = game.n();
    let mut header = vec!["k".to_string(), "fraction".to_string()];
    header.extend(labels.iter().cloned());
    let mut csv = Csv::new(header);
    for k in 0..=n {
        let mut rec = vec![k.to_string(), num(k as f64 / n as f64)];
        rec.extend(curves.iter().map(|c| num(c.points[k])));
        csv.row(rec);
    }
    let mut md = String::new();
    let _ = writeln!(md, "# Lorenz comparison\n");
    let _ = writeln!(md, "game `{}`, method `{}`\n", spec.game, eval.method);
    let _ = writeln!(md, "| profile | Gini |\n|---|---|");
    for (l, e) in labels.iter().zip(&est) {
        let _ = writeln!(md, "| {l} | {:.6} |", gini(&e.mean)?);
    }
    let _ = write!(md, "\nrow vs column:\n\n|   |");
    for l in &labels {
        let _ = write!(md, " {l} |");
    }
    let _ = write!(md, "\n|---|");
    for _ in &labels {
        let _ = write!(md, "---|");
    }
    let _ = writeln!(md);
    for (la, ea) in labels.iter().zip(&est) {
        let _ = write!(md, "| {la} |");
        for eb in &est {
            let _ = write!(
                md,
                " {} |",
                order_text(lorenz_dominates(&ea.mean, &eb.mean)?)
            );
        }
        let _ = writeln!(md);
    }
    Ok(Output {
        csv: csv.finish(),
        markdown: md,
    })
}

/// One computed entry next to its published value.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub row: String,
    pub column: String,
    pub computed: f64,
    pub published: f64,
    pub tolerance: f64,
}

impl Check {
    pub fn delta(&self) -> f64 {
        self.computed - self.published
    }

    pub fn within(&self) -> bool {
        self.delta().abs() < self.tolerance
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Reproduction {
    pub title: String,
    pub method: String,
    pub checks: Vec<Check>,
}

impl Reproduction {
    pub fn all_within(&self) -> bool {
        self.checks.iter().all(Check::within)
    }

    pub fn max_abs_delta(&self) -> f64 {
        self.checks
            .iter()
            .map(|c| c.delta().abs())
            .fold(0.0, f64::max)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.within()).collect()
    }

    pub fn to_output(&self) -> Output {
        let mut csv = Csv::new(["row", "column", "computed", "published", "delta", "within"]);
        let mut md = String::new();
        let _ = writeln!(md, "# {}\n", self.title);
        let _ = writeln!(md, "method `{}`\n", self.method);
        let _ = writeln!(
            md,
            "| row | column | computed | published | Δ | |\n|---|---|---|---|---|---|"
        );
        for c in &self.checks {
            csv.row([
                c.row.clone(),
                c.column.clone(),
                num(c.computed),
                num(c.published),
                num(c.delta()),
                c.within().to_string(),
            ]);
            let _ = writeln!(
                md,
                "| {} | {} | {:.4} | {:.4} | {:+.5} | {} |",
                c.row,
                c.column,
                c.computed,
                c.published,
                c.delta(),
                if c.within() { "ok" } else { "DEVIATES" }
            );
        }
        let bad = self.failures().len();
        let _ = writeln!(
            md,
            "\n{} of {} entries within tolerance; largest |Δ| = {:.2e}",
            self.checks.len() - bad,
            self.checks.len(),
            self.max_abs_delta()
        );
        Output {
            csv: csv.finish(),
            markdown: md,
        }
    }
}

/// The three-state table: WTA, PR, popular vote and the equalizing profile.
pub fn reproduce_example1(eval: &Evaluator) -> Result<Reproduction> {
    let game = wvg_core::data::builtin_fl_ny_wy();
    let profiles = [
        ProfileSpec::Wta,
        ProfileSpec::Pr,
        ProfileSpec::GpPopular,
        ProfileSpec::GpEqualizing,
    ]
    .iter()
    .map(|p| p.build(&game))
    .collect::<Result<Vec<_>>>()?;
    let (est, _) = eval.payoffs_many(&game, &profiles)?;
    let pops = game.populations().expect("built-in populations");
    let total: f64 = pops.iter().sum();
    let mut checks = Vec::new();
    for (r, row) in EXAMPLE1_ROWS.iter().enumerate() {
        for (k, col) in EXAMPLE1_COLUMNS.iter().enumerate() {
            let computed = if r < 3 {
                est[k].mean[r]
            } else {
                pops.iter()
                    .zip(&est[k].mean)
                    .map(|(p, m)| p * m)
                    .sum::<f64>()
                    / total
            };
            checks.push(Check {
                row: row.to_string(),
                column: col.to_string(),
                computed,
                published: EXAMPLE1[r][k],
                tolerance: EXAMPLE1_TOLERANCE,
            });
        }
    }
    Ok(Reproduction {
        title: "Three-state example".into(),
        method: eval.method.to_string(),
        checks,
    })
}

/// Class-averaged Electoral College payoffs of WTA, PR, the mixed rule and
/// the district profile.
pub fn ec_class_payoffs(eval: &Evaluator) -> Result<[[f64; 4]; 19]> {
    let game = wvg_core::data::builtin_ec();
    let n = game.n();
    let profiles = [
        Profile::wta(n),
        Profile::pr(n),
        Profile::symmetric(Rule::mixed(EC_MIXED_SHARE)?, n)?,
        Profile::cd(&game, EC_DISTRICT_SEATS)?,
    ];
    let (est, _) = eval.payoffs_many(&game, &profiles)?;
    let mut out = [[0.0; 4]; 19];
    for (c, &ev) in EC_CLASSES.iter().enumerate() {
        let members: Vec<usize> = (0..n).filter(|&i| game.weight(i) == ev as f64).collect();
        if members.len() != EC_CLASS_COUNTS[c] {
            return Err(Error::invalid(format!(
                "class {ev} has {} states",
                members.len()
            )));
        }
        for k in 0..4 {
            out[c][k] = members.iter().map(|&i| est[k].mean[i]).sum::<f64>() / members.len() as f64;
        }
    }
    Ok(out)
}

pub fn class_ratios(p: &[[f64; 4]; 19]) -> [[f64; 4]; 19] {
    let mut out = [[0.0; 4]; 19];
    for (o, r) in out.iter_mut().zip(p) {
        *o = [r[0] / r[1], r[2] / r[1], r[3] / r[1], r[3] / r[0]];
    }
    out
}

fn class_reproduction(
    title: &str,
    method: MethodSpec,
    computed: &[[f64; 4]; 19],
    published: &[[f64; 4]; 19],
    columns: &[&str; 4],
    tolerance: f64,
) -> Reproduction {
    let mut checks = Vec::new();
    for (c, ev) in EC_CLASSES.iter().enumerate() {
        for (k, col) in columns.iter().enumerate() {
            checks.push(Check {
                row: format!("EV {ev}"),
                column: col.to_string(),
                computed: computed[c][k],
                published: published[c][k],
                tolerance,
            });
        }
    }
    Reproduction {
        title: title.into(),
        method: method.to_string(),
        checks,
    }
}

pub fn reproduce_ec_payoffs(eval: &Evaluator) -> Result<Reproduction> {
    let p = ec_class_payoffs(eval)?;
    Ok(class_reproduction(
        "Electoral College payoffs",
        eval.method,
        &p,
        &EC_PAYOFFS,
        &EC_PAYOFF_COLUMNS,
        EC_PAYOFF_TOLERANCE,
    ))
}

pub fn reproduce_ec_ratios(eval: &Evaluator) -> Result<Reproduction> {
    let p = ec_class_payoffs(eval)?;
    Ok(class_reproduction(
        "Electoral College payoff ratios",
        eval.method,
        &class_ratios(&p),
        &EC_RATIOS,
        &EC_RATIO_COLUMNS,
        EC_RATIO_TOLERANCE,
    ))
}

pub fn cmd_reproduce(spec: &RunSpec) -> Result<Output> {
    let target = spec
        .target
        .ok_or_else(|| Error::invalid("reproduce needs a target"))?;
    let rep = match target {
        ReproduceTarget::Example1 => {
            reproduce_example1(&Evaluator::from_spec(spec, MethodSpec::Conv)?)?
        }
        ReproduceTarget::EcPayoffs => {
            reproduce_ec_payoffs(&Evaluator::from_spec(spec, MethodSpec::Mc)?)?
        }
        ReproduceTarget::EcRatios => {
            reproduce_ec_ratios(&Evaluator::from_spec(spec, MethodSpec::Mc)?)?
        }
    };
    Ok(rep.to_output())
}
