//! Textual specifications of games, profiles, distributions and methods,
//! and the run file that bundles them.
//!
//! Profile grammar:
//! `wta | pr | zero | mixed:<a> | cd:<c> | gp:equalizing | gp:popular |
//! gp:<λ1,…,λn> | per-group:<file>`. A per-group file has the header
//! `name,rule` and one rule per group; its rules use the same grammar
//! restricted to single-group forms plus `gp:<λ>` and
//! `step:<t1>=<v1>;<t2>=<v2>…`.

use std::fmt;
use std::fs::File;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use wvg_core::data::{builtin_ec, builtin_fl_ny_wy};
use wvg_core::dist::Marginal;
use wvg_core::welfare::{gp_profile, GpScheme};
use wvg_core::{Game, MarginDistribution, Profile, Rule};

use crate::error::{Error, Result};
use crate::io::load_weights;

fn number(s: &str, what: &str) -> Result<f64> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| Error::invalid(format!("{what}: `{s}` is not a number")))
}

macro_rules! string_serde {
    ($t:ty) => {
        impl Serialize for $t {
            fn serialize<S: serde::Serializer>(
                &self,
                s: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de> Deserialize<'de> for $t {
            fn deserialize<D: serde::Deserializer<'de>>(
                d: D,
            ) -> std::result::Result<Self, D::Error> {
                let s = String::deserialize(d)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

#[derive(Debug, Clone, PartialEq)]
pub enum GameSource {
    Ec,
    FlNyWy,
    File(PathBuf),
}

impl GameSource {
    pub fn load(&self) -> Result<Game> {
        match self {
            GameSource::Ec => Ok(builtin_ec()),
            GameSource::FlNyWy => Ok(builtin_fl_ny_wy()),
            GameSource::File(p) => load_weights(p),
        }
    }
}

impl FromStr for GameSource {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "ec" | "ec-2012-2020" => GameSource::Ec,
            "flnywy" | "fl-ny-wy" => GameSource::FlNyWy,
            "" => return Err(Error::invalid("empty game source")),
            path => GameSource::File(PathBuf::from(path)),
        })
    }
}

impl fmt::Display for GameSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameSource::Ec => f.write_str("ec"),
            GameSource::FlNyWy => f.write_str("flnywy"),
            GameSource::File(p) => write!(f, "{}", p.display()),
        }
    }
}

string_serde!(GameSource);

#[derive(Debug, Clone, PartialEq)]
pub enum ProfileSpec {
    Wta,
    Pr,
    Zero,
    Mixed(f64),
    Cd(f64),
    GpEqualizing,
    GpPopular,
    Gp(Vec<f64>),
    PerGroup(PathBuf),
}

impl ProfileSpec {
    pub fn build(&self, game: &Game) -> Result<Profile> {
        let n = game.n();
        Ok(match self {
            ProfileSpec::Wta => Profile::wta(n),
            ProfileSpec::Pr => Profile::pr(n),
            ProfileSpec::Zero => Profile::zero(n),
            ProfileSpec::Mixed(a) => Profile::symmetric(Rule::mixed(*a)?, n)?,
            ProfileSpec::Cd(c) => Profile::cd(game, *c)?,
            ProfileSpec::GpEqualizing => gp_profile(game, &GpScheme::Equalizing)?,
            ProfileSpec::GpPopular => gp_profile(game, &GpScheme::Popular)?,
            ProfileSpec::Gp(l) => gp_profile(game, &GpScheme::Coefficients(l.clone()))?,
            ProfileSpec::PerGroup(path) => load_profile_table(path, game)?,
        })
    }

    /// The single rule shared by all groups, when the spec names one.
    pub fn symmetric_rule(&self) -> Option<Rule> {
        match self {
            ProfileSpec::Wta => Some(Rule::Wta),
            ProfileSpec::Pr => Some(Rule::Pr),
            ProfileSpec::Zero => Some(Rule::Zero),
            ProfileSpec::Mixed(a) => Some(Rule::Mixed(*a)),
            _ => None,
        }
    }
}

impl FromStr for ProfileSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, arg) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a.trim())),
            None => (s, None),
        };
        let spec = match (head, arg) {
            ("wta", None) => ProfileSpec::Wta,
            ("pr", None) => ProfileSpec::Pr,
            ("zero", None) => ProfileSpec::Zero,
            ("mixed", Some(a)) => ProfileSpec::Mixed(number(a, "mixed rule share")?),
            ("cd", Some(c)) => ProfileSpec::Cd(number(c, "district seats")?),
            ("gp", Some("equalizing")) => ProfileSpec::GpEqualizing,
            ("gp", Some("popular")) => ProfileSpec::GpPopular,
            ("gp", Some(list)) => ProfileSpec::Gp(
                list.split(',')
                    .map(|x| number(x, "gp coefficient"))
                    .collect::<Result<_>>()?,
            ),
            ("per-group", Some(p)) if !p.is_empty() => ProfileSpec::PerGroup(PathBuf::from(p)),
            _ => {
                return Err(Error::invalid(format!(
                    "unknown profile `{s}`; expected wta, pr, zero, mixed:<a>, cd:<c>, \
                     gp:equalizing, gp:popular, gp:<l1,...>, or per-group:<file>"
                )))
            }
        };
        Ok(spec)
    }
}

impl fmt::Display for ProfileSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProfileSpec::Wta => f.write_str("wta"),
            ProfileSpec::Pr => f.write_str("pr"),
            ProfileSpec::Zero => f.write_str("zero"),
            ProfileSpec::Mixed(a) => write!(f, "mixed:{a}"),
            ProfileSpec::Cd(c) => write!(f, "cd:{c}"),
            ProfileSpec::GpEqualizing => f.write_str("gp:equalizing"),
            ProfileSpec::GpPopular => f.write_str("gp:popular"),
            ProfileSpec::Gp(l) => {
                let parts: Vec<String> = l.iter().map(|x| x.to_string()).collect();
                write!(f, "gp:{}", parts.join(","))
            }
            ProfileSpec::PerGroup(p) => write!(f, "per-group:{}", p.display()),
        }
    }
}

string_serde!(ProfileSpec);

/// One rule of a per-group profile file.
pub fn parse_rule(s: &str, weight: f64) -> Result<Rule> {
    let s = s.trim();
    let (head, arg) = match s.split_once(':') {
        Some((h, a)) => (h, Some(a.trim())),
        None => (s, None),
    };
    Ok(match (head, arg) {
        ("wta", None) => Rule::Wta,
        ("pr", None) => Rule::Pr,
        ("zero", None) => Rule::Zero,
        ("mixed", Some(a)) => Rule::mixed(number(a, "mixed rule share")?)?,
        ("cd", Some(c)) => {
            let c = number(c, "district seats")?;
            if !(c > 0.0 && c <= weight) {
                return Err(Error::invalid(format!(
                    "district rule needs 0 < c <= {weight}, got {c}"
                )));
            }
            Rule::cd(c, weight)?
        }
        ("gp", Some(l)) => Rule::gp(number(l, "gp coefficient")?)?,
        ("step", Some(table)) => {
            let steps = table
                .split(';')
                .filter(|p| !p.trim().is_empty())
                .map(|p| {
                    let (t, v) = p
                        .split_once('=')
                        .ok_or_else(|| Error::invalid(format!("step entry `{p}` is not t=v")))?;
                    Ok((number(t, "step threshold")?, number(v, "step value")?))
                })
                .collect::<Result<Vec<_>>>()?;
            Rule::step(steps)?
        }
        _ => return Err(Error::invalid(format!("unknown rule `{s}`"))),
    })
}

/// Reads a `name,rule` table and orders the rules like the game's groups.
pub fn load_profile_table(path: &Path, game: &Game) -> Result<Profile> {
    let source = path.display().to_string();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(file);
    let headers = rdr.headers().map_err(|e| Error::Parse {
        source_name: source.clone(),
        line: 1,
        message: e.to_string(),
    })?;
    if headers
        .iter()
        .map(str::to_ascii_lowercase)
        .collect::<Vec<_>>()
        != ["name", "rule"]
    {
        return Err(Error::Parse {
            source_name: source,
            line: 1,
            message: "expected header `name,rule`".into(),
        });
    }
    let mut rules: Vec<Option<Rule>> = vec![None; game.n()];
    for rec in rdr.records() {
        let rec = rec.map_err(|e| Error::Parse {
            source_name: source.clone(),
            line: e.position().map_or(0, |p| p.line()),
            message: e.to_string(),
        })?;
        let line = rec.position().map_or(0, |p| p.line());
        let name = rec.get(0).unwrap_or("");
        let i = game.index_of(name).ok_or_else(|| {
            Error::invalid(format!("{source}, line {line}: unknown group `{name}`"))
        })?;
        if rules[i].is_some() {
            return Err(Error::invalid(format!(
                "{source}, line {line}: group `{name}` listed twice"
            )));
        }
        let rule = parse_rule(rec.get(1).unwrap_or(""), game.weight(i))
            .map_err(|e| Error::invalid(format!("{source}, line {line}, row `{name}`: {e}")))?;
        rules[i] = Some(rule);
    }
    let rules = rules
        .into_iter()
        .zip(game.groups())
        .map(|(r, g)| {
            r.ok_or_else(|| Error::invalid(format!("{source}: no rule for group `{}`", g.name)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Profile::new(rules)?)
}

#[derive(Debug, Clone, PartialEq)]
pub enum DistSpec {
    Uniform,
    TwoAtom(f64),
    OneFactor(f64),
}

impl DistSpec {
    pub fn build(&self) -> Result<MarginDistribution> {
        Ok(match self {
            DistSpec::Uniform => MarginDistribution::uniform(),
            DistSpec::TwoAtom(m) => MarginDistribution::two_atom(*m)?,
            DistSpec::OneFactor(rho) => MarginDistribution::one_factor(Marginal::Uniform, *rho)?,
        })
    }
}

impl FromStr for DistSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.split_once(':') {
            None if s == "uniform" => Ok(DistSpec::Uniform),
            Some(("two-atom", m)) => Ok(DistSpec::TwoAtom(number(m, "atom")?)),
            Some(("one-factor", r)) => Ok(DistSpec::OneFactor(number(r, "correlation")?)),
            _ => Err(Error::invalid(format!(
                "unknown distribution `{s}`; expected uniform, two-atom:<m> or one-factor:<rho>"
            ))),
        }
    }
}

impl fmt::Display for DistSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DistSpec::Uniform => f.write_str("uniform"),
            DistSpec::TwoAtom(m) => write!(f, "two-atom:{m}"),
            DistSpec::OneFactor(r) => write!(f, "one-factor:{r}"),
        }
    }
}

string_serde!(DistSpec);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum MethodSpec {
    Mc,
    WtaExact,
    Conv,
    Brute,
    Asymptotic,
}

impl fmt::Display for MethodSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MethodSpec::Mc => "mc",
            MethodSpec::WtaExact => "wta-exact",
            MethodSpec::Conv => "conv",
            MethodSpec::Brute => "brute",
            MethodSpec::Asymptotic => "asymptotic",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum ReproduceTarget {
    Example1,
    EcPayoffs,
    EcRatios,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum OutputFormat {
    Csv,
    Markdown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Payoff,
    Compare,
    Asymptotic,
    Lorenz,
    Reproduce,
}

fn default_samples() -> u64 {
    10_000_000
}
fn default_seed() -> u64 {
    20_200_538
}
fn default_chunks() -> u64 {
    64
}
fn default_z() -> f64 {
    3.0
}
fn default_dist() -> DistSpec {
    DistSpec::Uniform
}
fn default_game() -> GameSource {
    GameSource::Ec
}

/// Everything needed to repeat a computation; serializable as JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunSpec {
    pub command: Command,
    #[serde(default = "default_game")]
    pub game: GameSource,
    #[serde(default)]
    pub profiles: Vec<ProfileSpec>,
    #[serde(default = "default_dist")]
    pub dist: DistSpec,
    /// `None` picks the command's default.
    #[serde(default)]
    pub method: Option<MethodSpec>,
    #[serde(default = "default_samples")]
    pub samples: u64,
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default = "default_chunks")]
    pub chunks: u64,
    #[serde(default)]
    pub threads: Option<usize>,
    /// Lattice step of the convolution oracle.
    #[serde(default)]
    pub resolution: Option<f64>,
    /// Grid points per uniform coordinate of the brute-force oracle.
    #[serde(default)]
    pub grid: Option<usize>,
    /// Significance multiplier for Monte Carlo verdicts.
    #[serde(default = "default_z")]
    pub z: f64,
    /// District seats for the asymptotic report.
    #[serde(default)]
    pub district: Option<f64>,
    #[serde(default)]
    pub target: Option<ReproduceTarget>,
    #[serde(default)]
    pub format: Option<OutputFormat>,
    #[serde(default)]
    pub output: Option<PathBuf>,
}

impl RunSpec {
    pub fn new(command: Command) -> Self {
        RunSpec {
            command,
            game: default_game(),
            profiles: Vec::new(),
            dist: default_dist(),
            method: None,
            samples: default_samples(),
            seed: default_seed(),
            chunks: default_chunks(),
            threads: None,
            resolution: None,
            grid: None,
            z: default_z(),
            district: None,
            target: None,
            format: None,
            output: None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("run spec serializes")
    }
}

/// Accepts plain integers and scientific notation such as `1e8`.
pub fn parse_count(s: &str) -> std::result::Result<u64, String> {
    let s = s.trim();
    if let Ok(v) = s.parse::<u64>() {
        return Ok(v);
    }
    let v: f64 = s.parse().map_err(|_| format!("`{s}` is not a count"))?;
    if v.is_finite() && v >= 0.0 && v.fract() == 0.0 && v <= u64::MAX as f64 {
        Ok(v as u64)
    } else {
        Err(format!("`{s}` is not a whole non-negative number"))
    }
}
