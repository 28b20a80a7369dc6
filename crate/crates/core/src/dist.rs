//! Laws of the group margins `Θ = (Θ_1, ..., Θ_n)`.

use alloc::format;
use alloc::vec::Vec;

use rand_core::RngCore;

use crate::quadrature::GaussLegendre;
use crate::{Error, Result};

/// Symmetric pmf on `[-1, 1]`, stored as sorted `(value, probability)` atoms.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscretePmf {
    atoms: Vec<(f64, f64)>,
    cdf: Vec<f64>,
}

impl DiscretePmf {
    /// Accepts atoms in any order; repeated values are merged. The result
    /// must be symmetric about 0 and sum to 1 (both within `1e-9`).
    pub fn from_atoms(mut atoms: Vec<(f64, f64)>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::config("empty pmf"));
        }
        for &(v, p) in &atoms {
            if !(-1.0..=1.0).contains(&v) || !(p >= 0.0) || !p.is_finite() {
                return Err(Error::config(format!("invalid atom ({v}, {p})")));
            }
        }
        atoms.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut merged: Vec<(f64, f64)> = Vec::with_capacity(atoms.len());
        for (v, p) in atoms {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += p,
                _ => merged.push((v, p)),
            }
        }
        merged.retain(|a| a.1 > 0.0);
        let total: f64 = merged.iter().map(|a| a.1).sum();
        if (total - 1.0).abs() > 1e-9 {
            return Err(Error::config(format!("pmf sums to {total}, not 1")));
        }
        let k = merged.len();
        for i in 0..k {
            let (v, p) = merged[i];
            let (w, q) = merged[k - 1 - i];
            if (v + w).abs() > 1e-9 || (p - q).abs() > 1e-9 {
                return Err(Error::config("pmf is not symmetric about 0"));
            }
        }
        let mut acc = 0.0;
        let cdf = merged
            .iter()
            .map(|a| {
                acc += a.1;
                acc
            })
            .collect();
        Ok(DiscretePmf { atoms: merged, cdf })
    }

    pub fn atoms(&self) -> &[(f64, f64)] {
        &self.atoms
    }

    fn quantile(&self, u: f64) -> f64 {
        let idx = self.cdf.partition_point(|&c| c <= u);
        self.atoms[idx.min(self.atoms.len() - 1)].0
    }
}

/// Common marginal law of every `Θ_i`; always symmetric on `[-1, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub enum Marginal {
    /// Uniform on `[-1, 1]`.
    Uniform,
    /// `±m` with probability ½ each.
    TwoAtom(f64),
    Discrete(DiscretePmf),
}

impl Marginal {
    pub fn validate(&self) -> Result<()> {
        match self {
            Marginal::TwoAtom(m) if !(*m > 0.0 && *m <= 1.0) => Err(Error::config(format!(
                "two-atom marginal needs m in (0, 1], got {m}"
            ))),
            _ => Ok(()),
        }
    }

    /// Atoms of a purely discrete marginal; `None` for the uniform law.
    pub fn atoms(&self) -> Option<Vec<(f64, f64)>> {
        match self {
            Marginal::Uniform => None,
            Marginal::TwoAtom(m) => Some(alloc::vec![(-m, 0.5), (*m, 0.5)]),
            Marginal::Discrete(p) => Some(p.atoms.clone()),
        }
    }

    pub fn is_continuous(&self) -> bool {
        matches!(self, Marginal::Uniform)
    }

    pub fn moments(&self) -> DistributionMoments {
        match self {
            Marginal::Uniform => DistributionMoments {
                mean_abs: 0.5,
                mean_sq: 1.0 / 3.0,
            },
            Marginal::TwoAtom(m) => DistributionMoments {
                mean_abs: *m,
                mean_sq: m * m,
            },
            Marginal::Discrete(p) => {
                let (mut a, mut s) = (0.0, 0.0);
                for &(v, q) in &p.atoms {
                    a += q * v.abs();
                    s += q * v * v;
                }
                DistributionMoments {
                    mean_abs: a,
                    mean_sq: s,
                }
            }
        }
    }

    /// `P{Θ ≠ 0}`, i.e. `E[sgn(Θ)²]`.
    pub fn mass_nonzero(&self) -> f64 {
        match self {
            Marginal::Discrete(p) => p.atoms.iter().filter(|a| a.0 != 0.0).map(|a| a.1).sum(),
            _ => 1.0,
        }
    }

    /// `E[f(Θ)·1{Θ > 0}]` for `f` smooth between the given breakpoints in
    /// `(0, 1)`. Exact for discrete marginals; Gauss–Legendre of the given
    /// order on every sub-interval for the uniform one.
    pub fn expect_positive(
        &self,
        breakpoints: &[f64],
        gl: &GaussLegendre,
        mut f: impl FnMut(f64) -> f64,
    ) -> f64 {
        match self.atoms() {
            Some(atoms) => atoms
                .iter()
                .filter(|a| a.0 > 0.0)
                .map(|&(v, p)| p * f(v))
                .sum(),
            None => {
                let mut cuts: Vec<f64> = breakpoints
                    .iter()
                    .copied()
                    .filter(|&b| b > 0.0 && b < 1.0)
                    .collect();
                cuts.push(0.0);
                cuts.push(1.0);
                cuts.sort_by(f64::total_cmp);
                cuts.dedup();
                cuts.windows(2)
                    .map(|w| 0.5 * gl.integrate(w[0], w[1], &mut f))
                    .sum()
            }
        }
    }

    /// One draw.
    #[inline]
    pub fn sample(&self, rng: &mut impl RngCore) -> f64 {
        match self {
            Marginal::Uniform => symmetric_unit(rng.next_u64()),
            Marginal::TwoAtom(m) => {
                if rng.next_u64() >> 63 == 1 {
                    *m
                } else {
                    -m
                }
            }
            Marginal::Discrete(p) => p.quantile(open_unit(rng.next_u64())),
        }
    }
}

/// Uniform on the odd multiples of `2⁻⁵²` inside `(-1, 1)`; the grid is
/// symmetric and never contains 0 or ±1.
#[inline]
pub fn symmetric_unit(x: u64) -> f64 {
    let k = (x >> 12) as i64;
    (2 * k + 1 - (1i64 << 52)) as f64 * (1.0 / (1u64 << 52) as f64)
}

/// Uniform on `(0, 1)`.
#[inline]
pub fn open_unit(x: u64) -> f64 {
    ((x >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistributionMoments {
    /// `E|Θ|`
    pub mean_abs: f64,
    /// `E[Θ²]`
    pub mean_sq: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum MarginDistribution {
    /// Independent margins with a common marginal.
    Iid(Marginal),
    /// A common fair sign `S` tilts every margin towards the same side:
    /// `Θ_i = ρ·S·|Z_i| + (1 − ρ)·Z_i` with `Z_i` iid from `marginal`,
    /// clipped to `[-1, 1]`. `ρ = 0` is the iid case.
    OneFactor { marginal: Marginal, rho: f64 },
}

impl MarginDistribution {
    pub fn uniform() -> Self {
        MarginDistribution::Iid(Marginal::Uniform)
    }

    pub fn two_atom(m: f64) -> Result<Self> {
        let d = MarginDistribution::Iid(Marginal::TwoAtom(m));
        d.validate()?;
        Ok(d)
    }

    pub fn discrete(atoms: Vec<(f64, f64)>) -> Result<Self> {
        Ok(MarginDistribution::Iid(Marginal::Discrete(
            DiscretePmf::from_atoms(atoms)?,
        )))
    }

    pub fn one_factor(marginal: Marginal, rho: f64) -> Result<Self> {
        let d = MarginDistribution::OneFactor { marginal, rho };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            MarginDistribution::Iid(m) => m.validate(),
            MarginDistribution::OneFactor { marginal, rho } => {
                if !(0.0..=1.0).contains(rho) {
                    return Err(Error::config(format!(
                        "factor weight must lie in [0, 1], got {rho}"
                    )));
                }
                marginal.validate()
            }
        }
    }

    pub fn is_iid(&self) -> bool {
        matches!(self, MarginDistribution::Iid(_))
    }

    /// The iid marginal, or an `Unsupported` error naming `method`.
    pub fn iid_marginal(&self, method: &str) -> Result<&Marginal> {
        match self {
            MarginDistribution::Iid(m) => Ok(m),
            MarginDistribution::OneFactor { .. } => Err(Error::unsupported(format!(
                "{method} requires independent margins"
            ))),
        }
    }

    /// The law of the latent draws `Z_i`.
    pub fn base_marginal(&self) -> &Marginal {
        match self {
            MarginDistribution::Iid(m) => m,
            MarginDistribution::OneFactor { marginal, .. } => marginal,
        }
    }

    /// Moments of the marginal law of a single `Θ_i`.
    ///
    /// Under the one-factor law `|Θ_i| = |Z_i|` when `sgn Z_i = S` and
    /// `|1 − 2ρ|·|Z_i|` otherwise, each with probability ½.
    pub fn moments(&self) -> DistributionMoments {
        match self {
            MarginDistribution::Iid(m) => m.moments(),
            MarginDistribution::OneFactor { marginal, rho } => {
                let base = marginal.moments();
                let shrink = (1.0 - 2.0 * rho).abs();
                DistributionMoments {
                    mean_abs: 0.5 * base.mean_abs * (1.0 + shrink),
                    mean_sq: 0.5 * base.mean_sq * (1.0 + shrink * shrink),
                }
            }
        }
    }

    /// Maps a factor sign and a latent draw to a margin.
    #[inline]
    pub fn tilt(rho: f64, sign: f64, z: f64) -> f64 {
        (rho * sign * z.abs() + (1.0 - rho) * z).clamp(-1.0, 1.0)
    }

    /// Fills `out` with one joint draw.
    pub fn sample_into(&self, rng: &mut impl RngCore, out: &mut [f64]) {
        match self {
            MarginDistribution::Iid(m) => {
                for x in out.iter_mut() {
                    *x = m.sample(rng);
                }
            }
            MarginDistribution::OneFactor { marginal, rho } => {
                let sign = if rng.next_u64() >> 63 == 1 { 1.0 } else { -1.0 };
                for x in out.iter_mut() {
                    *x = Self::tilt(*rho, sign, marginal.sample(rng));
                }
            }
        }
    }
}

/// One joint draw of `n` margins.
pub fn sample_margins(dist: &MarginDistribution, n: usize, rng: &mut impl RngCore) -> Vec<f64> {
    let mut out = alloc::vec![0.0; n];
    dist.sample_into(rng, &mut out);
    out
}

/// Moments of the marginal law.
pub fn moments(dist: &MarginDistribution) -> DistributionMoments {
    dist.moments()
}
