//! Information complexity.
//!
//! For each level `n` every size-`n` subset of dimensions splits the stimulus
//! space into `2^n` cells by the values on those dimensions. The subset's
//! uncertainty is the plain average over cells of the category entropy
//! inside each cell; `U(n)` collects these per subset in lexicographic
//! subset order. An aggregator reduces `U(n)` to one number per level and
//! the metric is the sum over levels `0..=dims`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::output::round_half_even;
use crate::structures::{dimension_value, CategoryStructure, Stimulus};

/// `-p log2 p`, with the limit value 0 at `p = 0`.
pub fn entropy_term(p: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::ProbabilityOutOfRange(p));
    }
    Ok(plog(p))
}

#[inline]
fn plog(p: f64) -> f64 {
    if p == 0.0 || p == 1.0 {
        0.0
    } else {
        -p * p.log2()
    }
}

/// Entropy in bits of a cell holding `in_a` category-A stimuli out of `total`.
#[inline]
fn split_entropy(in_a: usize, total: usize) -> f64 {
    let p = in_a as f64 / total as f64;
    plog(p) + plog(1.0 - p)
}

/// Remaining classification uncertainty inside `cell`.
pub fn cell_entropy(s: &CategoryStructure, cell: &[Stimulus]) -> Result<f64> {
    if cell.is_empty() {
        return Err(Error::EmptyCell);
    }
    let mut in_a = 0;
    for &stimulus in cell {
        if usize::from(stimulus) >= s.space_size() {
            return Err(Error::StimulusOutOfRange {
                stimulus,
                dims: s.dims(),
            });
        }
        in_a += usize::from(s.contains(stimulus));
    }
    Ok(split_entropy(in_a, cell.len()))
}

/// Size-`n` subsets of `0..dims` in lexicographic order.
pub fn dimension_subsets(dims: usize, n: usize) -> Vec<Vec<usize>> {
    (0..dims).combinations(n).collect()
}

fn check_level(s: &CategoryStructure, n: usize) -> Result<()> {
    if n > s.dims() {
        Err(Error::LevelOutOfRange { n, dims: s.dims() })
    } else {
        Ok(())
    }
}

/// `U(n)`: one averaged cell entropy per size-`n` dimension subset.
pub fn level_uncertainties(s: &CategoryStructure, n: usize) -> Result<Vec<f64>> {
    check_level(s, n)?;
    let membership = s.membership();
    Ok(dimension_subsets(s.dims(), n)
        .iter()
        .map(|subset| subset_uncertainty(s.dims(), &membership, subset))
        .collect())
}

fn subset_uncertainty(dims: usize, membership: &[bool], subset: &[usize]) -> f64 {
    let cells = 1usize << subset.len();
    let mut total = vec![0usize; cells];
    let mut in_a = vec![0usize; cells];
    for (stimulus, &member) in membership.iter().enumerate() {
        let key = subset.iter().fold(0usize, |key, &dim| {
            key << 1 | usize::from(dimension_value(stimulus as Stimulus, dims, dim))
        });
        total[key] += 1;
        in_a[key] += usize::from(member);
    }
    let sum: f64 = in_a
        .iter()
        .zip(&total)
        .map(|(&a, &t)| split_entropy(a, t))
        .sum();
    sum / cells as f64
}

/// How the per-subset uncertainties of one level are reduced to a number.
#[derive(Debug, Clone, Copy, PartialEq)]
#[non_exhaustive]
pub enum Aggregator {
    Min,
    Mean,
    /// `alpha * u_min(1) + (1 - alpha) * u_min(2)`; only meaningful through
    /// [`weighted_two_level`].
    Weighted(f64),
}

impl Aggregator {
    pub fn new_weighted(alpha: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&alpha) {
            Ok(Self::Weighted(alpha))
        } else {
            Err(Error::WeightOutOfRange(alpha))
        }
    }

    /// Reduces one level's uncertainty vector.
    pub fn reduce(&self, values: &[f64]) -> Result<f64> {
        match self {
            Self::Min => Ok(values.iter().copied().fold(f64::INFINITY, f64::min)),
            Self::Mean => Ok(values.iter().sum::<f64>() / values.len() as f64),
            Self::Weighted(_) => Err(Error::UnsupportedAggregator(self.to_string())),
        }
    }
}

impl fmt::Display for Aggregator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Min => f.write_str("min"),
            Self::Mean => f.write_str("mean"),
            Self::Weighted(alpha) => write!(f, "weighted({alpha})"),
        }
    }
}

impl FromStr for Aggregator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => Ok(Self::Min),
            "mean" => Ok(Self::Mean),
            other => Err(Error::UnsupportedAggregator(other.to_string())),
        }
    }
}

impl Serialize for Aggregator {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `u_G(n) = G(U(n))`.
pub fn level_metric(s: &CategoryStructure, n: usize, g: Aggregator) -> Result<f64> {
    if let Aggregator::Weighted(_) = g {
        return Err(Error::UnsupportedAggregator(g.to_string()));
    }
    g.reduce(&level_uncertainties(s, n)?)
}

/// Per-level uncertainties and their aggregate for one structure.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevelProfile {
    pub dims: usize,
    pub aggregator: Aggregator,
    /// `U(0..=dims)`
    pub u_vectors: Vec<Vec<f64>>,
    /// `u_G(0..=dims)`
    pub u_levels: Vec<f64>,
    /// Sum of `u_levels`.
    pub u_hat: f64,
}

impl LevelProfile {
    /// Sum of the per-level values after each has been rounded half-even to
    /// `places` decimals, i.e. the total a table gets when its printed level
    /// rows are added up.
    pub fn level_rounded_total(&self, places: u32) -> f64 {
        self.u_levels
            .iter()
            .map(|&u| round_half_even(u, places))
            .sum()
    }
}

/// Full level profile and summed metric `û_G`.
pub fn aggregate_metric(s: &CategoryStructure, g: Aggregator) -> Result<LevelProfile> {
    let u_vectors = (0..=s.dims())
        .map(|n| level_uncertainties(s, n))
        .collect::<Result<Vec<_>>>()?;
    let u_levels = u_vectors
        .iter()
        .map(|u| g.reduce(u))
        .collect::<Result<Vec<_>>>()?;
    let u_hat = u_levels.iter().sum();
    Ok(LevelProfile {
        dims: s.dims(),
        aggregator: g,
        u_vectors,
        u_levels,
        u_hat,
    })
}

/// `alpha * u_min(1) + (1 - alpha) * u_min(2)`.
pub fn weighted_two_level(s: &CategoryStructure, alpha: f64) -> Result<f64> {
    let Aggregator::Weighted(alpha) = Aggregator::new_weighted(alpha)? else {
        unreachable!()
    };
    let one = level_metric(s, 1, Aggregator::Min)?;
    let two = level_metric(s, 2, Aggregator::Min)?;
    Ok(alpha * one + (1.0 - alpha) * two)
}
