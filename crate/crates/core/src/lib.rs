//! Weighted voting games in which every group chooses how to split its
//! voting weight between two alternatives as a function of its internal
//! vote margin.
//!
//! The crate is `no_std` (it needs `alloc`) and contains the numerical side
//! of the engine:
//!
//! * [`game`], [`rule`] and [`dist`] describe a society of weighted groups,
//!   the weight-allocation rules they may use and the law of the group
//!   margins.
//! * [`montecarlo`] estimates ex ante payoffs `E[Θ_i · d(Θ)]` with
//!   reproducible per-chunk random streams.
//! * [`oracle`] holds the exact and near-exact evaluators: a dynamic program
//!   for winner-take-all, a lattice convolution for arbitrary odd rules, a
//!   brute-force grid, and interim payoffs / best responses.
//! * [`asymptotics`] evaluates the large-`n` limits of payoffs.
//! * [`welfare`] compares payoff vectors by Pareto and Lorenz dominance.
//! * [`data`] ships the built-in Electoral College weight tables.
//!
//! File formats, the command line and thread pools live in the `wvg` crate.
#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod asymptotics;
pub mod data;
pub mod decision;
pub mod dist;
mod error;
pub mod game;
pub mod montecarlo;
pub mod oracle;
pub mod quadrature;
pub mod rng;
pub mod rule;
pub mod welfare;

pub use dist::{DistributionMoments, MarginDistribution};
pub use error::{Error, Result};
pub use game::{Game, GroupSpec};
pub use montecarlo::{McConfig, Method, PayoffEstimate};
pub use rule::{Profile, Rule, StepTable};
