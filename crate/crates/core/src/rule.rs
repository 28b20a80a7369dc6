//! Weight-allocation rules and profiles.
//!
//! A rule maps a group's vote margin `θ ∈ [-1, 1]` to the margin of weight
//! it casts for alternative `+1`. Every rule here is odd and non-decreasing,
//! so it is fully described by its restriction to `(0, 1]`, which is always
//! piecewise affine (see [`Rule::pieces`]).

use alloc::format;
use alloc::vec::Vec;

use crate::game::Game;
use crate::{Error, Result};

/// `sgn` with `sgn(0) = 0`.
#[inline]
pub fn sgn(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// Odd, non-decreasing step function given by its positive half.
///
/// `φ(θ) = v_k` for the largest threshold `t_k ≤ θ`, and `0` below the first
/// threshold; negative margins are mirrored.
#[derive(Debug, Clone, PartialEq)]
pub struct StepTable {
    steps: Vec<(f64, f64)>,
}

impl StepTable {
    pub fn new(steps: Vec<(f64, f64)>) -> Result<Self> {
        let mut prev_t = 0.0;
        let mut prev_v = 0.0;
        for &(t, v) in &steps {
            if !(t > prev_t && t <= 1.0) {
                return Err(Error::config(format!(
                    "step thresholds must be strictly increasing in (0, 1], got {t}"
                )));
            }
            if !(v >= prev_v && v <= 1.0) {
                return Err(Error::config(format!(
                    "step values must be non-decreasing in [0, 1], got {v}"
                )));
            }
            prev_t = t;
            prev_v = v;
        }
        Ok(StepTable { steps })
    }

    pub fn steps(&self) -> &[(f64, f64)] {
        &self.steps
    }

    fn eval_pos(&self, theta: f64) -> f64 {
        self.steps
            .iter()
            .rev()
            .find(|&&(t, _)| t <= theta)
            .map_or(0.0, |&(_, v)| v)
    }
}

/// One affine piece of a rule on `(lo, hi] ⊆ (0, 1]`: `φ(θ) = intercept + slope·θ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Piece {
    pub lo: f64,
    pub hi: f64,
    pub intercept: f64,
    pub slope: f64,
}

impl Piece {
    #[inline]
    pub fn at(&self, theta: f64) -> f64 {
        self.intercept + self.slope * theta
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Rule {
    /// Winner-take-all: `sgn θ`.
    Wta,
    /// Proportional: `θ`.
    Pr,
    /// `a·sgn θ + (1 − a)·θ`.
    Mixed(f64),
    /// Congressional district rule of a group with weight `weight`: `c` units
    /// go winner-take-all, the rest proportionally.
    Cd {
        c: f64,
        weight: f64,
    },
    /// Scaled proportional: `λ·θ`.
    Gp(f64),
    Step(StepTable),
    Zero,
}

impl Rule {
    pub fn mixed(a: f64) -> Result<Self> {
        let r = Rule::Mixed(a);
        r.validate()?;
        Ok(r)
    }

    pub fn cd(c: f64, weight: f64) -> Result<Self> {
        let r = Rule::Cd { c, weight };
        r.validate()?;
        Ok(r)
    }

    pub fn gp(lambda: f64) -> Result<Self> {
        let r = Rule::Gp(lambda);
        r.validate()?;
        Ok(r)
    }

    pub fn step(steps: Vec<(f64, f64)>) -> Result<Self> {
        Ok(Rule::Step(StepTable::new(steps)?))
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Rule::Mixed(a) if !(0.0..=1.0).contains(a) => Err(Error::config(format!(
                "mixed rule needs a in [0, 1], got {a}"
            ))),
            Rule::Gp(l) if !(0.0..=1.0).contains(l) => Err(Error::config(format!(
                "scaled proportional rule needs λ in [0, 1], got {l}"
            ))),
            Rule::Cd { c, weight } if !(*c > 0.0 && c <= weight) => Err(Error::config(format!(
                "district rule needs c in (0, {weight}], got {c}"
            ))),
            Rule::Step(t) => StepTable::new(t.steps.clone()).map(|_| ()),
            _ => Ok(()),
        }
    }

    /// Weight margin at `θ`. Assumes a valid rule and `θ ∈ [-1, 1]`.
    #[inline]
    pub fn eval(&self, theta: f64) -> f64 {
        match self {
            Rule::Wta => sgn(theta),
            Rule::Pr => theta,
            Rule::Mixed(a) => a * sgn(theta) + (1.0 - a) * theta,
            Rule::Cd { c, weight } => (c * sgn(theta) + (weight - c) * theta) / weight,
            Rule::Gp(l) => l * theta,
            Rule::Step(t) => {
                if theta >= 0.0 {
                    t.eval_pos(theta)
                } else {
                    -t.eval_pos(-theta)
                }
            }
            Rule::Zero => 0.0,
        }
    }

    /// The positive half of the rule as affine pieces covering `(0, 1]`.
    pub fn pieces(&self) -> Vec<Piece> {
        let whole = |intercept: f64, slope: f64| {
            alloc::vec![Piece {
                lo: 0.0,
                hi: 1.0,
                intercept,
                slope
            }]
        };
        match self {
            Rule::Wta => whole(1.0, 0.0),
            Rule::Pr => whole(0.0, 1.0),
            Rule::Mixed(a) => whole(*a, 1.0 - a),
            Rule::Cd { c, weight } => whole(c / weight, (weight - c) / weight),
            Rule::Gp(l) => whole(0.0, *l),
            Rule::Zero => whole(0.0, 0.0),
            Rule::Step(t) => {
                let mut out = Vec::with_capacity(t.steps.len() + 1);
                let mut lo = 0.0;
                let mut level = 0.0;
                for &(th, v) in &t.steps {
                    if th > lo {
                        out.push(Piece {
                            lo,
                            hi: th,
                            intercept: level,
                            slope: 0.0,
                        });
                    }
                    lo = th;
                    level = v;
                }
                if lo < 1.0 {
                    out.push(Piece {
                        lo,
                        hi: 1.0,
                        intercept: level,
                        slope: 0.0,
                    });
                }
                out
            }
        }
    }

    /// Whether the positive half of the rule is a scalar multiple of `θ`.
    pub fn is_linear(&self) -> bool {
        self.canonical_pieces().iter().all(|p| p.intercept == 0.0)
    }

    /// True when both rules are the same function of `θ` (as opposed to the
    /// same representation: `Mixed(0)` equals `Pr`).
    pub fn same_function(&self, other: &Rule) -> bool {
        self.canonical_pieces() == other.canonical_pieces()
    }

    fn canonical_pieces(&self) -> Vec<Piece> {
        let mut out: Vec<Piece> = Vec::new();
        for p in self.pieces() {
            match out.last_mut() {
                Some(q) if q.intercept == p.intercept && q.slope == p.slope => q.hi = p.hi,
                _ => out.push(p),
            }
        }
        out
    }
}

/// Evaluates a rule after checking its parameters and the argument range.
pub fn eval_rule(rule: &Rule, theta: f64) -> Result<f64> {
    rule.validate()?;
    if !(-1.0..=1.0).contains(&theta) {
        return Err(Error::usage(format!("margin {theta} outside [-1, 1]")));
    }
    Ok(rule.eval(theta))
}

/// One rule per group, aligned with [`Game::groups`].
#[derive(Debug, Clone, PartialEq)]
pub struct Profile {
    rules: Vec<Rule>,
}

impl Profile {
    pub fn new(rules: Vec<Rule>) -> Result<Self> {
        if rules.is_empty() {
            return Err(Error::config("empty profile"));
        }
        for r in &rules {
            r.validate()?;
        }
        Ok(Profile { rules })
    }

    /// Every group uses `rule`.
    pub fn symmetric(rule: Rule, n: usize) -> Result<Self> {
        Profile::new(alloc::vec![rule; n])
    }

    pub fn wta(n: usize) -> Self {
        Profile {
            rules: alloc::vec![Rule::Wta; n],
        }
    }

    pub fn pr(n: usize) -> Self {
        Profile {
            rules: alloc::vec![Rule::Pr; n],
        }
    }

    pub fn zero(n: usize) -> Self {
        Profile {
            rules: alloc::vec![Rule::Zero; n],
        }
    }

    /// District profile with `c` units per group allocated winner-take-all;
    /// requires `0 < c ≤ min_i w_i`.
    pub fn cd(game: &Game, c: f64) -> Result<Self> {
        if !(c > 0.0 && c <= game.min_weight()) {
            return Err(Error::config(format!(
                "district profile needs c in (0, {}], got {c}",
                game.min_weight()
            )));
        }
        Profile::new(
            game.weights()
                .into_iter()
                .map(|w| Rule::Cd { c, weight: w })
                .collect(),
        )
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn rule(&self, i: usize) -> &Rule {
        &self.rules[i]
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// All groups use the same function of their margin.
    pub fn is_symmetric(&self) -> bool {
        self.rules.iter().all(|r| r.same_function(&self.rules[0]))
    }

    pub fn check_game(&self, game: &Game) -> Result<()> {
        if self.rules.len() != game.n() {
            return Err(Error::usage(format!(
                "profile has {} rules but the game has {} groups",
                self.rules.len(),
                game.n()
            )));
        }
        Ok(())
    }
}
