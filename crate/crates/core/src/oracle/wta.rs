//! Exact winner-take-all payoffs.
//!
//! Under winner-take-all the decision depends only on the signs of the
//! margins, so with integer weights the opponents' weighted sign total
//! `T = Σ_{j≠i} w_j s_j` lives on the integers and its law follows from a
//! subset-sum style dynamic program. Group `i` then earns
//! `E|Θ|·(P{|T| < w_i} + ½·P{|T| = w_i})`, its Banzhaf swing probability
//! scaled by the mean absolute margin.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::dist::MarginDistribution;
use crate::game::Game;
use crate::montecarlo::{Method, PayoffEstimate};
use crate::{Error, Result};

/// Cap on the scaled total weight.
pub const MAX_SCALED_TOTAL: u64 = 1_000_000;

/// Integer weights `w_i·L` for the least common denominator `L` of the
/// weights read as rationals with denominators up to `10⁶`.
pub fn integer_weights(weights: &[f64]) -> Result<(Vec<u64>, u64)> {
    let mut lcd: u64 = 1;
    for &w in weights {
        let q = denominator(w).ok_or_else(|| {
            Error::usage(format!(
                "weight {w} is not a rational with a small denominator"
            ))
        })?;
        lcd = lcm(lcd, q);
        if lcd > MAX_SCALED_TOTAL {
            return Err(Error::usage("weights need too large a common denominator"));
        }
    }
    let scaled: Vec<u64> = weights
        .iter()
        .map(|&w| libm::round(w * lcd as f64) as u64)
        .collect();
    let total: u64 = scaled.iter().sum();
    if total > MAX_SCALED_TOTAL {
        return Err(Error::usage(format!(
            "scaled total weight {total} exceeds {MAX_SCALED_TOTAL}"
        )));
    }
    Ok((scaled, lcd))
}

/// Smallest `q ≤ 10⁶` with `w·q` an integer within `1e-9`, via the
/// continued-fraction convergents of `w`.
fn denominator(w: f64) -> Option<u64> {
    let tol = 1e-9 * w.abs().max(1.0);
    let (mut h0, mut h1) = (0.0f64, 1.0f64);
    let (mut k0, mut k1) = (1.0f64, 0.0f64);
    let mut x = w;
    for _ in 0..64 {
        let a = libm::floor(x);
        let h2 = a * h1 + h0;
        let k2 = a * k1 + k0;
        if k2 > MAX_SCALED_TOTAL as f64 {
            return None;
        }
        if (w - h2 / k2).abs() * k2 <= tol {
            return Some(k2 as u64);
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = x - a;
        if frac == 0.0 {
            return None;
        }
        x = 1.0 / frac;
    }
    None
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Law of `Σ_j w_j s_j` over the given integer weights, where each `s_j` is
/// `0` with probability `p_zero` and `±1` with probability `(1 − p_zero)/2`.
/// Index `k` holds `P{T = k − Σ w_j}`.
pub fn sign_sum_pmf(weights: &[u64], p_zero: f64) -> Vec<f64> {
    let total: u64 = weights.iter().sum();
    let width = (2 * total + 1) as usize;
    let mut cur = alloc::vec![0.0; width];
    let mut next = alloc::vec![0.0; width];
    let centre = total as usize;
    cur[centre] = 1.0;
    let p_side = 0.5 * (1.0 - p_zero);
    let mut reach = 0usize;
    for &w in weights {
        let w = w as usize;
        let lo = centre - reach;
        let hi = centre + reach;
        for x in next[lo - w..=hi + w].iter_mut() {
            *x = 0.0;
        }
        for k in lo..=hi {
            let p = cur[k];
            if p == 0.0 {
                continue;
            }
            next[k - w] += p_side * p;
            next[k + w] += p_side * p;
            if p_zero > 0.0 {
                next[k] += p_zero * p;
            }
        }
        reach += w;
        core::mem::swap(&mut cur, &mut next);
    }
    cur
}

/// Exact payoffs when every group plays winner-take-all under iid margins.
pub fn wta_exact_payoffs(game: &Game, dist: &MarginDistribution) -> Result<PayoffEstimate> {
    let marginal = dist.iid_marginal("the exact winner-take-all oracle")?;
    let (scaled, _) = integer_weights(&game.weights())?;
    let moments = marginal.moments();
    let p_zero = 1.0 - marginal.mass_nonzero();
    let mut cache: BTreeMap<u64, f64> = BTreeMap::new();
    let mut mean = Vec::with_capacity(game.n());
    for (i, &wi) in scaled.iter().enumerate() {
        let swing = match cache.get(&wi) {
            Some(&s) => s,
            None => {
                let others: Vec<u64> = scaled
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &w)| w)
                    .collect();
                let total: u64 = others.iter().sum();
                let pmf = sign_sum_pmf(&others, p_zero);
                let mut s = 0.0;
                for (k, &p) in pmf.iter().enumerate() {
                    let t = (k as i64 - total as i64).unsigned_abs();
                    if t < wi {
                        s += p;
                    } else if t == wi {
                        s += 0.5 * p;
                    }
                }
                cache.insert(wi, s);
                s
            }
        };
        mean.push(moments.mean_abs * swing);
    }
    Ok(PayoffEstimate::exact(mean, Method::WtaExact))
}
