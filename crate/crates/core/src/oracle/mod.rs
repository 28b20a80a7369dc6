//! Deterministic payoff evaluators used as ground truth for Monte Carlo and
//! for the asymptotic predictions.

pub mod brute;
pub mod conv;
pub mod interim;
pub mod lattice;
pub mod wta;

pub use brute::bruteforce_payoffs;
pub use conv::{conv_payoff_of, conv_payoffs, opponent_sum, ConvOptions};
pub use interim::{best_response, interim_payoff, unit_grid};
pub use lattice::{default_resolution, OpponentSumDistribution};
pub use wta::wta_exact_payoffs;
