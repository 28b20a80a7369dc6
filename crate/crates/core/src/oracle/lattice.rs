//! Laws of weighted rule outputs `w_j φ_j(Θ_j)` and their sums on a
//! symmetric lattice `{k·h}`.
//!
//! A lattice point `k·h` stands for the cell `[(k − ½)h, (k + ½)h]` and its
//! mass is read as spread uniformly over that cell, so the CDF of a lattice
//! law is piecewise linear. Continuous parts are discretized by integrating
//! them over cells; atoms are split linearly between the two neighbouring
//! points. Both operations commute with `x ↦ −x`, which keeps every law
//! exactly symmetric.

use alloc::format;
use alloc::vec::Vec;

use crate::dist::Marginal;
use crate::rule::Rule;
use crate::{Error, Result};

/// Largest lattice half-width accepted, in cells.
pub const MAX_HALF_WIDTH: i64 = 4_000_000;

/// Uniform mass on `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub lo: f64,
    pub hi: f64,
    pub mass: f64,
}

/// Law of `w·φ(Θ)` for one group: atoms plus uniform segments.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorLaw {
    pub atoms: Vec<(f64, f64)>,
    pub segments: Vec<Segment>,
}

impl FactorLaw {
    pub fn new(rule: &Rule, weight: f64, marginal: &Marginal) -> Self {
        if let Some(atoms) = marginal.atoms() {
            return FactorLaw {
                atoms: atoms
                    .into_iter()
                    .map(|(v, p)| (weight * rule.eval(v), p))
                    .collect(),
                segments: Vec::new(),
            };
        }
        // uniform marginal: density ½ on [-1, 1]
        let mut atoms = Vec::new();
        let mut segments = Vec::new();
        for piece in rule.pieces() {
            let mass = 0.5 * (piece.hi - piece.lo);
            if mass <= 0.0 {
                continue;
            }
            let a = weight * piece.at(piece.lo);
            let b = weight * piece.at(piece.hi);
            if piece.slope == 0.0 || b == a {
                atoms.push((a, mass));
                atoms.push((-a, mass));
            } else {
                segments.push(Segment { lo: a, hi: b, mass });
                segments.push(Segment {
                    lo: -b,
                    hi: -a,
                    mass,
                });
            }
        }
        FactorLaw { atoms, segments }
    }

    /// Largest `|x|` in the support.
    pub fn reach(&self) -> f64 {
        let a = self.atoms.iter().map(|a| a.0.abs()).fold(0.0, f64::max);
        let s = self
            .segments
            .iter()
            .map(|s| s.lo.abs().max(s.hi.abs()))
            .fold(0.0, f64::max);
        a.max(s)
    }

    /// Probability-preserving symmetric discretization with step `h`.
    pub fn discretize(&self, h: f64) -> LatticePmf {
        let half = libm::ceil(self.reach() / h) as i64 + 1;
        let mut p = alloc::vec![0.0; (2 * half + 1) as usize];
        let idx = |k: i64| (k + half) as usize;
        for &(x, mass) in &self.atoms {
            let u = x / h;
            let mut k0 = libm::floor(u);
            let mut frac = u - k0;
            if frac < 1e-9 {
                frac = 0.0;
            } else if frac > 1.0 - 1e-9 {
                k0 += 1.0;
                frac = 0.0;
            }
            let k0 = k0 as i64;
            p[idx(k0)] += mass * (1.0 - frac);
            if frac > 0.0 {
                p[idx(k0 + 1)] += mass * frac;
            }
        }
        for s in &self.segments {
            let density = s.mass / (s.hi - s.lo);
            let k_lo = libm::floor(s.lo / h + 0.5) as i64;
            let k_hi = libm::floor(s.hi / h + 0.5) as i64;
            for k in k_lo..=k_hi {
                let left = ((k as f64 - 0.5) * h).max(s.lo);
                let right = ((k as f64 + 0.5) * h).min(s.hi);
                if right > left {
                    p[idx(k)] += density * (right - left);
                }
            }
        }
        LatticePmf { offset: -half, p }.trimmed()
    }
}

/// A pmf on `{k·h : k = offset, offset + 1, ...}`.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticePmf {
    pub offset: i64,
    pub p: Vec<f64>,
}

impl LatticePmf {
    pub fn point_mass_at_zero() -> Self {
        LatticePmf {
            offset: 0,
            p: alloc::vec![1.0],
        }
    }

    /// Drops exact zeros at both ends.
    fn trimmed(mut self) -> Self {
        let first = self.p.iter().position(|&x| x != 0.0).unwrap_or(0);
        let last = self.p.iter().rposition(|&x| x != 0.0).unwrap_or(0);
        self.p = self.p[first..=last].to_vec();
        self.offset += first as i64;
        self
    }

    pub fn convolve(&self, other: &LatticePmf) -> LatticePmf {
        let mut out = alloc::vec![0.0; self.p.len() + other.p.len() - 1];
        // iterate over the shorter operand in the outer loop
        let (a, b) = if self.p.len() <= other.p.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (i, &x) in a.p.iter().enumerate() {
            if x == 0.0 {
                continue;
            }
            for (o, &y) in out[i..i + b.p.len()].iter_mut().zip(&b.p) {
                *o += x * y;
            }
        }
        LatticePmf {
            offset: self.offset + other.offset,
            p: out,
        }
    }
}

/// Law of `S = Σ_{j≠i} w_j φ_j(Θ_j)` on the lattice `{k·h}`.
#[derive(Debug, Clone, PartialEq)]
pub struct OpponentSumDistribution {
    excluded: usize,
    step: f64,
    offset: i64,
    pmf: Vec<f64>,
    /// `cum[k] = Σ_{j<k} pmf[j]`
    cum: Vec<f64>,
}

impl OpponentSumDistribution {
    pub fn from_lattice(excluded: usize, step: f64, lattice: LatticePmf) -> Self {
        let mut cum = Vec::with_capacity(lattice.p.len() + 1);
        let mut acc = 0.0;
        cum.push(0.0);
        for &x in &lattice.p {
            acc += x;
            cum.push(acc);
        }
        OpponentSumDistribution {
            excluded,
            step,
            offset: lattice.offset,
            pmf: lattice.p,
            cum,
        }
    }

    pub fn excluded(&self) -> usize {
        self.excluded
    }

    /// Lattice step `h`.
    pub fn resolution(&self) -> f64 {
        self.step
    }

    /// `(value, probability)` for every lattice point in the support range.
    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.pmf
            .iter()
            .enumerate()
            .map(move |(j, &p)| ((self.offset + j as i64) as f64 * self.step, p))
    }

    pub fn pmf(&self) -> &[f64] {
        &self.pmf
    }

    pub fn total_mass(&self) -> f64 {
        *self.cum.last().unwrap_or(&0.0)
    }

    pub fn mean(&self) -> f64 {
        self.points().map(|(x, p)| x * p).sum()
    }

    /// Variance of the lattice law, cells read as point masses.
    pub fn variance(&self) -> f64 {
        let m = self.mean();
        self.points().map(|(x, p)| (x - m) * (x - m) * p).sum()
    }

    /// Mass at the lattice point nearest to `x`.
    pub fn mass_near(&self, x: f64) -> f64 {
        let k = libm::round(x / self.step) as i64 - self.offset;
        if k < 0 || k as usize >= self.pmf.len() {
            0.0
        } else {
            self.pmf[k as usize]
        }
    }

    /// `P{S ≤ t}` with every cell's mass spread uniformly over the cell.
    pub fn cdf(&self, t: f64) -> f64 {
        let u = t / self.step + 0.5 - self.offset as f64;
        if u <= 0.0 {
            return 0.0;
        }
        let n = self.pmf.len();
        if u >= n as f64 {
            return self.total_mass();
        }
        let k = libm::floor(u) as usize;
        self.cum[k] + self.pmf[k] * (u - k as f64)
    }

    /// `P{−t < S ≤ t}` for `t ≥ 0`. Mass sitting exactly on `±t` counts one
    /// half, consistently with a fair tie-break.
    pub fn within(&self, t: f64) -> f64 {
        if t <= 0.0 {
            return 0.0;
        }
        self.cdf(t) - self.cdf(-t)
    }

    /// Whether every cell meeting `[lo, hi]` carries positive mass, i.e. the
    /// law has full support on that interval at this resolution.
    pub fn covers(&self, lo: f64, hi: f64) -> bool {
        let k_lo = libm::floor(lo / self.step + 0.5) as i64;
        let k_hi = libm::floor(hi / self.step + 0.5) as i64;
        (k_lo..=k_hi).all(|k| {
            let j = k - self.offset;
            j >= 0 && (j as usize) < self.pmf.len() && self.pmf[j as usize] > 0.0
        })
    }

    /// Maximum of `|pmf(s) − pmf(−s)|` over the lattice.
    pub fn asymmetry(&self) -> f64 {
        let n = self.pmf.len() as i64;
        (0..n)
            .map(|j| {
                let k = self.offset + j;
                let mirror = -k - self.offset;
                let q = if (0..n).contains(&mirror) {
                    self.pmf[mirror as usize]
                } else {
                    0.0
                };
                (self.pmf[j as usize] - q).abs()
            })
            .fold(0.0, f64::max)
    }
}

/// Default lattice step for a game with total weight `total`: about
/// `2·10⁻³·total`, snapped to `1/k` or an integer so that integer weights
/// fall on lattice points.
pub fn default_resolution(total: f64) -> f64 {
    let raw = 2e-3 * total;
    if raw >= 1.0 {
        libm::floor(raw)
    } else {
        1.0 / libm::ceil(1.0 / raw)
    }
}

/// Convolution of the given factors on step `h`.
pub fn convolve_all<'a>(factors: impl IntoIterator<Item = &'a LatticePmf>) -> LatticePmf {
    let mut refs: Vec<&LatticePmf> = factors.into_iter().collect();
    // small factors first keeps the running result short for longer
    refs.sort_by_key(|f| f.p.len());
    let mut acc = LatticePmf::point_mass_at_zero();
    for f in refs {
        acc = acc.convolve(f);
    }
    acc
}

/// Checks a proposed step against the factors it must resolve and against
/// the memory cap.
pub fn check_resolution(h: f64, laws: &[FactorLaw]) -> Result<()> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::usage(format!(
            "resolution must be positive, got {h}"
        )));
    }
    let finest = laws
        .iter()
        .map(FactorLaw::reach)
        .filter(|&r| r > 0.0)
        .fold(f64::INFINITY, f64::min);
    if h > finest {
        return Err(Error::accuracy(format!(
            "lattice step {h} exceeds the smallest nonzero weight margin {finest}"
        )));
    }
    let total: f64 = laws.iter().map(FactorLaw::reach).sum();
    if total / h > MAX_HALF_WIDTH as f64 {
        return Err(Error::usage(format!(
            "lattice step {h} needs more than {MAX_HALF_WIDTH} cells per side"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_resolution_snaps_to_integer_grids() {
        assert_eq!(default_resolution(538.0), 1.0);
        assert_eq!(default_resolution(61.0), 1.0 / 9.0);
        assert_eq!(default_resolution(10_000.0), 20.0);
    }

    #[test]
    fn atoms_split_linearly_and_symmetrically() {
        let law = FactorLaw {
            atoms: alloc::vec![(0.25, 0.5), (-0.25, 0.5)],
            segments: Vec::new(),
        };
        let pmf = law.discretize(1.0);
        assert_eq!(pmf.offset, -1);
        assert_eq!(pmf.p, [0.125, 0.75, 0.125]);
    }

    #[test]
    fn uniform_segments_integrate_over_cells() {
        // 2Θ with Θ uniform: density ¼ on [-2, 2]
        let law = FactorLaw::new(&Rule::Pr, 2.0, &Marginal::Uniform);
        let pmf = law.discretize(1.0);
        assert_eq!(pmf.offset, -2);
        let expect = [0.125, 0.25, 0.25, 0.25, 0.125];
        for (a, b) in pmf.p.iter().zip(expect) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn wta_factor_is_two_atoms() {
        let law = FactorLaw::new(&Rule::Wta, 3.0, &Marginal::Uniform);
        let pmf = law.discretize(1.0);
        assert_eq!(pmf.offset, -3);
        assert_eq!(pmf.p, [0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.5]);
    }

    #[test]
    fn cdf_is_piecewise_linear_and_symmetric() {
        let opp = OpponentSumDistribution::from_lattice(
            0,
            1.0,
            LatticePmf {
                offset: -1,
                p: alloc::vec![0.25, 0.5, 0.25],
            },
        );
        assert_eq!(opp.cdf(-2.0), 0.0);
        assert_eq!(opp.cdf(-1.5), 0.0);
        assert!((opp.cdf(-1.0) - 0.125).abs() < 1e-15);
        assert!((opp.cdf(0.0) - 0.5).abs() < 1e-15);
        assert!((opp.cdf(1.5) - 1.0).abs() < 1e-15);
        assert!((opp.within(1.0) - 0.75).abs() < 1e-15);
        assert_eq!(opp.asymmetry(), 0.0);
        assert!(opp.covers(-1.0, 1.0));
        assert!(!opp.covers(-2.0, 2.0));
    }

    #[test]
    fn resolution_checks() {
        let laws = [
            FactorLaw::new(&Rule::Pr, 3.0, &Marginal::Uniform),
            FactorLaw::new(&Rule::Zero, 3.0, &Marginal::Uniform),
        ];
        assert!(check_resolution(1.0, &laws).is_ok());
        assert!(matches!(
            check_resolution(4.0, &laws),
            Err(Error::Accuracy(_))
        ));
        assert!(matches!(check_resolution(0.0, &laws), Err(Error::Usage(_))));
        assert!(matches!(
            check_resolution(1e-9, &laws),
            Err(Error::Usage(_))
        ));
    }
}
