//! Monte Carlo estimation of ex ante payoffs `π_i = E[Θ_i · d(Θ)]`.
//!
//! Samples are split into chunks; chunk `c` draws from its own stream
//! `(seed, c)` and produces a [`ChunkTally`]. Tallies are merged in chunk
//! order, so the result depends only on `(seed, chunks, samples)` and not on
//! how chunks are scheduled. Several profiles can share one run: they are
//! evaluated on the same draws, which gives common-random-number differences
//! for free.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::dist::MarginDistribution;
use crate::game::Game;
use crate::rng::{chunk_stream, coin};
use crate::rule::{Profile, Rule};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Mc,
    WtaExact,
    Convolution,
    BruteForce,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Mc => "mc",
            Method::WtaExact => "wta-exact",
            Method::Convolution => "conv",
            Method::BruteForce => "brute",
        }
    }

    pub fn is_exact(self) -> bool {
        self != Method::Mc
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Per-group payoffs with standard errors (zero for deterministic methods).
#[derive(Debug, Clone, PartialEq)]
pub struct PayoffEstimate {
    pub mean: Vec<f64>,
    pub standard_error: Vec<f64>,
    pub samples: u64,
    pub method: Method,
}

impl PayoffEstimate {
    pub fn exact(mean: Vec<f64>, method: Method) -> Self {
        let n = mean.len();
        PayoffEstimate {
            mean,
            standard_error: alloc::vec![0.0; n],
            samples: 0,
            method,
        }
    }

    pub fn len(&self) -> usize {
        self.mean.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mean.is_empty()
    }
}

/// Common-random-number estimate of `π_i(A) − π_i(B)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PayoffDiff {
    pub mean: Vec<f64>,
    pub standard_error: Vec<f64>,
    pub samples: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct McConfig {
    pub samples: u64,
    pub seed: u64,
    pub chunks: u64,
    pub distribution: MarginDistribution,
}

impl McConfig {
    pub fn new(samples: u64, seed: u64, distribution: MarginDistribution) -> Self {
        McConfig {
            samples,
            seed,
            chunks: 64,
            distribution,
        }
    }

    pub fn with_chunks(mut self, chunks: u64) -> Self {
        self.chunks = chunks;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::usage("Monte Carlo needs at least one sample"));
        }
        if self.chunks == 0 {
            return Err(Error::usage("Monte Carlo needs at least one chunk"));
        }
        self.distribution.validate()
    }

    /// `⌈samples / chunks⌉`.
    pub fn chunk_size(&self) -> u64 {
        self.samples.div_ceil(self.chunks)
    }

    /// Samples drawn by chunk `c`: the full chunk size, or whatever remains.
    pub fn chunk_len(&self, c: u64) -> u64 {
        let size = self.chunk_size();
        self.samples
            .saturating_sub(c.saturating_mul(size))
            .min(size)
    }
}

/// Partial sums of one chunk.
#[derive(Debug, Clone, PartialEq)]
pub struct ChunkTally {
    pub samples: u64,
    /// `Σ θ_i d_k`, profile-major.
    pub sum: Vec<f64>,
    /// `Σ θ_i²`.
    pub sum_sq: Vec<f64>,
    /// `Σ θ_i² 1{d_k ≠ d_l}` for every pair `k < l`, pair-major.
    pub disagree_sq: Vec<f64>,
}

impl ChunkTally {
    fn zero(profiles: usize, n: usize) -> Self {
        ChunkTally {
            samples: 0,
            sum: alloc::vec![0.0; profiles * n],
            sum_sq: alloc::vec![0.0; n],
            disagree_sq: alloc::vec![0.0; pair_count(profiles) * n],
        }
    }

    pub fn merge(&mut self, other: &ChunkTally) {
        self.samples += other.samples;
        for (a, b) in self.sum.iter_mut().zip(&other.sum) {
            *a += b;
        }
        for (a, b) in self.sum_sq.iter_mut().zip(&other.sum_sq) {
            *a += b;
        }
        for (a, b) in self.disagree_sq.iter_mut().zip(&other.disagree_sq) {
            *a += b;
        }
    }
}

fn pair_count(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

fn pair_index(k: usize, a: usize, b: usize) -> usize {
    debug_assert!(a < b && b < k);
    // pairs (0,1), (0,2), ..., (0,k-1), (1,2), ...
    a * (2 * k - a - 1) / 2 + (b - a - 1)
}

/// A validated Monte Carlo run over one game, several profiles and one
/// configuration.
#[derive(Debug, Clone)]
pub struct McPlan {
    weights: Vec<f64>,
    profiles: Vec<Vec<Rule>>,
    cfg: McConfig,
}

impl McPlan {
    pub fn new(game: &Game, profiles: &[Profile], cfg: &McConfig) -> Result<Self> {
        cfg.validate()?;
        if profiles.is_empty() {
            return Err(Error::usage("no profile to simulate"));
        }
        for p in profiles {
            p.check_game(game)?;
        }
        Ok(McPlan {
            weights: game.weights(),
            profiles: profiles.iter().map(|p| p.rules().to_vec()).collect(),
            cfg: cfg.clone(),
        })
    }

    pub fn config(&self) -> &McConfig {
        &self.cfg
    }

    pub fn chunks(&self) -> u64 {
        self.cfg.chunks
    }

    /// Runs chunk `c` from its own stream.
    pub fn run_chunk(&self, c: u64) -> ChunkTally {
        let n = self.weights.len();
        let k = self.profiles.len();
        let len = self.cfg.chunk_len(c);
        let mut tally = ChunkTally::zero(k, n);
        if len == 0 {
            return tally;
        }
        let mut rng = chunk_stream(self.cfg.seed, c);
        let mut theta = alloc::vec![0.0; n];
        let mut decisions = alloc::vec![0.0; k];
        for _ in 0..len {
            self.cfg.distribution.sample_into(&mut rng, &mut theta);
            // one tie coin per draw, shared by all profiles
            let mut tie = None;
            for (d, rules) in decisions.iter_mut().zip(&self.profiles) {
                let s: f64 = self
                    .weights
                    .iter()
                    .zip(rules)
                    .zip(&theta)
                    .map(|((w, r), &t)| w * r.eval(t))
                    .sum();
                *d = if s > 0.0 {
                    1.0
                } else if s < 0.0 {
                    -1.0
                } else {
                    *tie.get_or_insert_with(|| coin(&mut rng))
                };
            }
            for (acc, t) in tally.sum_sq.iter_mut().zip(&theta) {
                *acc += t * t;
            }
            for (j, &d) in decisions.iter().enumerate() {
                let row = &mut tally.sum[j * n..(j + 1) * n];
                if d > 0.0 {
                    for (acc, t) in row.iter_mut().zip(&theta) {
                        *acc += t;
                    }
                } else {
                    for (acc, t) in row.iter_mut().zip(&theta) {
                        *acc -= t;
                    }
                }
            }
            for a in 0..k {
                for b in a + 1..k {
                    if decisions[a] != decisions[b] {
                        let p = pair_index(k, a, b);
                        let row = &mut tally.disagree_sq[p * n..(p + 1) * n];
                        for (acc, t) in row.iter_mut().zip(&theta) {
                            *acc += t * t;
                        }
                    }
                }
            }
        }
        tally.samples = len;
        tally
    }

    /// Merges chunk tallies, which must arrive in chunk order `0, 1, ...`.
    pub fn finish(&self, tallies: impl IntoIterator<Item = ChunkTally>) -> Result<McResult> {
        let mut total = ChunkTally::zero(self.profiles.len(), self.weights.len());
        let mut seen = 0u64;
        for t in tallies {
            total.merge(&t);
            seen += 1;
        }
        if seen != self.cfg.chunks || total.samples != self.cfg.samples {
            return Err(Error::usage(format!(
                "expected {} chunks with {} samples, merged {seen} with {}",
                self.cfg.chunks, self.cfg.samples, total.samples
            )));
        }
        Ok(McResult {
            n: self.weights.len(),
            profiles: self.profiles.len(),
            tally: total,
        })
    }

    /// Runs every chunk on the calling thread.
    pub fn run_sequential(&self) -> Result<McResult> {
        self.finish((0..self.cfg.chunks).map(|c| self.run_chunk(c)))
    }
}

/// Merged sums of a run over one or more profiles.
#[derive(Debug, Clone, PartialEq)]
pub struct McResult {
    n: usize,
    profiles: usize,
    tally: ChunkTally,
}

impl McResult {
    pub fn samples(&self) -> u64 {
        self.tally.samples
    }

    pub fn tally(&self) -> &ChunkTally {
        &self.tally
    }

    /// Payoff estimate of profile `k` with the per-sample standard error.
    pub fn payoffs(&self, k: usize) -> PayoffEstimate {
        let n = self.n;
        let m = self.tally.samples as f64;
        let sums = &self.tally.sum[k * n..(k + 1) * n];
        let mean: Vec<f64> = sums.iter().map(|s| s / m).collect();
        let standard_error = mean
            .iter()
            .zip(&self.tally.sum_sq)
            .map(|(mu, sq)| standard_error(sq / m, *mu, m))
            .collect();
        PayoffEstimate {
            mean,
            standard_error,
            samples: self.tally.samples,
            method: Method::Mc,
        }
    }

    /// Common-random-number difference `π(a) − π(b)`.
    pub fn diff(&self, a: usize, b: usize) -> PayoffDiff {
        let n = self.n;
        let m = self.tally.samples as f64;
        let (lo, hi) = (a.min(b), a.max(b));
        let mean: Vec<f64> = (0..n)
            .map(|i| (self.tally.sum[a * n + i] - self.tally.sum[b * n + i]) / m)
            .collect();
        let standard_error = if a == b {
            alloc::vec![0.0; n]
        } else {
            let p = pair_index(self.profiles, lo, hi);
            let dis = &self.tally.disagree_sq[p * n..(p + 1) * n];
            // (θ_i (d_a − d_b))² = 4 θ_i² 1{d_a ≠ d_b}
            mean.iter()
                .zip(dis)
                .map(|(mu, d)| standard_error(4.0 * d / m, *mu, m))
                .collect()
        };
        PayoffDiff {
            mean,
            standard_error,
            samples: self.tally.samples,
        }
    }
}

fn standard_error(second_moment: f64, mean: f64, m: f64) -> f64 {
    if m < 2.0 {
        return 0.0;
    }
    let var = (second_moment - mean * mean).max(0.0) * m / (m - 1.0);
    libm::sqrt(var / m)
}

/// Monte Carlo payoffs of one profile.
pub fn estimate_payoffs(game: &Game, profile: &Profile, cfg: &McConfig) -> Result<PayoffEstimate> {
    let plan = McPlan::new(game, core::slice::from_ref(profile), cfg)?;
    Ok(plan.run_sequential()?.payoffs(0))
}

/// Payoffs of several profiles evaluated on the same draws.
pub fn estimate_many(game: &Game, profiles: &[Profile], cfg: &McConfig) -> Result<McResult> {
    McPlan::new(game, profiles, cfg)?.run_sequential()
}

/// Common-random-number estimate of `π(A) − π(B)`.
pub fn estimate_payoff_diff(
    game: &Game,
    a: &Profile,
    b: &Profile,
    cfg: &McConfig,
) -> Result<PayoffDiff> {
    let plan = McPlan::new(game, &[a.clone(), b.clone()], cfg)?;
    Ok(plan.run_sequential()?.diff(0, 1))
}
