//! Groups and the society they form.

use alloc::string::String;
use alloc::vec::Vec;

use crate::{Error, Result};

/// One group of the society: a label, a voting weight and, optionally, the
/// size of its electorate (thousands of persons in the built-in tables).
#[derive(Debug, Clone, PartialEq)]
pub struct GroupSpec {
    pub name: String,
    pub weight: f64,
    pub population: Option<f64>,
}

impl GroupSpec {
    pub fn new(name: impl Into<String>, weight: f64, population: Option<f64>) -> Result<Self> {
        let name = name.into();
        if !(weight.is_finite() && weight > 0.0) {
            return Err(Error::config(alloc::format!(
                "group `{name}`: weight must be positive, got {weight}"
            )));
        }
        if let Some(p) = population {
            if !(p.is_finite() && p > 0.0) {
                return Err(Error::config(alloc::format!(
                    "group `{name}`: population must be positive, got {p}"
                )));
            }
        }
        Ok(GroupSpec {
            name,
            weight,
            population,
        })
    }
}

/// An ordered, non-empty list of groups with unique names.
#[derive(Debug, Clone, PartialEq)]
pub struct Game {
    groups: Vec<GroupSpec>,
}

impl Game {
    pub fn new(groups: Vec<GroupSpec>) -> Result<Self> {
        if groups.is_empty() {
            return Err(Error::config("a game needs at least one group"));
        }
        for (i, g) in groups.iter().enumerate() {
            // Re-validate: fields are public and may have been edited.
            GroupSpec::new(g.name.clone(), g.weight, g.population)?;
            if groups[..i].iter().any(|h| h.name == g.name) {
                return Err(Error::config(alloc::format!(
                    "duplicate group name `{}`",
                    g.name
                )));
            }
        }
        Ok(Game { groups })
    }

    /// Unnamed groups `g1, g2, ...` with the given weights.
    pub fn from_weights(weights: &[f64]) -> Result<Self> {
        let groups = weights
            .iter()
            .enumerate()
            .map(|(i, &w)| GroupSpec::new(alloc::format!("g{}", i + 1), w, None))
            .collect::<Result<Vec<_>>>()?;
        Game::new(groups)
    }

    pub fn groups(&self) -> &[GroupSpec] {
        &self.groups
    }

    pub fn n(&self) -> usize {
        self.groups.len()
    }

    pub fn weights(&self) -> Vec<f64> {
        self.groups.iter().map(|g| g.weight).collect()
    }

    pub fn weight(&self, i: usize) -> f64 {
        self.groups[i].weight
    }

    pub fn total_weight(&self) -> f64 {
        self.groups.iter().map(|g| g.weight).sum()
    }

    pub fn min_weight(&self) -> f64 {
        self.groups
            .iter()
            .map(|g| g.weight)
            .fold(f64::INFINITY, f64::min)
    }

    pub fn max_weight(&self) -> f64 {
        self.groups.iter().map(|g| g.weight).fold(0.0, f64::max)
    }

    /// `(Σ w_i²) / n`, the second moment of the empirical weight distribution.
    pub fn mean_sq_weight(&self) -> f64 {
        self.groups.iter().map(|g| g.weight * g.weight).sum::<f64>() / self.n() as f64
    }

    /// Populations of all groups, or `None` if any group lacks one.
    pub fn populations(&self) -> Option<Vec<f64>> {
        self.groups.iter().map(|g| g.population).collect()
    }

    /// Index of a group holding at least half of the total weight.
    pub fn dictator(&self) -> Option<usize> {
        let half = 0.5 * self.total_weight();
        self.groups.iter().position(|g| g.weight >= half)
    }

    pub fn has_dictator(&self) -> bool {
        self.dictator().is_some()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.groups.iter().position(|g| g.name == name)
    }
}
