//! Difficulty orderings and agreement statistics against human error rates.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io::Read;

use serde::Serialize;

use crate::catalog;
use crate::error::{Error, Result};
use crate::structures::CategoryStructure;

/// Default tie tolerance for orders induced by metric values.
pub const METRIC_EPSILON: f64 = 1e-9;

/// Difficulty ordering as a sequence of tie groups, easiest first.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderedPartition<K> {
    pub groups: Vec<Vec<K>>,
    pub epsilon: f64,
}

impl<K: Ord + Clone> OrderedPartition<K> {
    /// Group index of every identifier.
    pub fn positions(&self) -> BTreeMap<K, usize> {
        self.groups
            .iter()
            .enumerate()
            .flat_map(|(i, g)| g.iter().map(move |k| (k.clone(), i)))
            .collect()
    }
}

/// `I < II < {III,IV,V} < VI`
impl<K: fmt::Display> fmt::Display for OrderedPartition<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, group) in self.groups.iter().enumerate() {
            if i > 0 {
                f.write_str(" < ")?;
            }
            if group.len() == 1 {
                write!(f, "{}", group[0])?;
            } else {
                f.write_str("{")?;
                for (j, k) in group.iter().enumerate() {
                    if j > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{k}")?;
                }
                f.write_str("}")?;
            }
        }
        Ok(())
    }
}

/// Sorts ascending and chains neighbours within `epsilon` into one group.
/// Equal values keep their input order.
pub fn induced_order<K: Clone>(values: &[(K, f64)], epsilon: f64) -> Result<OrderedPartition<K>> {
    if epsilon.is_nan() || epsilon < 0.0 {
        return Err(Error::InvalidEpsilon(epsilon));
    }
    let mut sorted: Vec<&(K, f64)> = values.iter().collect();
    sorted.sort_by(|a, b| a.1.total_cmp(&b.1));
    let mut groups: Vec<Vec<K>> = Vec::new();
    let mut last = None;
    for (key, value) in sorted {
        match last {
            Some(prev) if value - prev <= epsilon => {
                groups.last_mut().expect("group opened").push(key.clone())
            }
            _ => groups.push(vec![key.clone()]),
        }
        last = Some(*value);
    }
    Ok(OrderedPartition { groups, epsilon })
}

/// Pairwise comparison of a predicted and an observed ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OrderAgreement {
    pub pairs: usize,
    /// same strict direction, or tied in both
    pub concordant: usize,
    /// opposite strict directions
    pub discordant: usize,
    /// tied in exactly one of the two orderings
    pub tie_disagreements: usize,
    pub exact_match: bool,
}

pub fn compare_orders<K: Ord + Clone>(
    predicted: &OrderedPartition<K>,
    observed: &OrderedPartition<K>,
) -> Result<OrderAgreement> {
    let pred = predicted.positions();
    let obs = observed.positions();
    if !pred.keys().eq(obs.keys()) {
        return Err(Error::IdentifierMismatch);
    }
    let keys: Vec<&K> = pred.keys().collect();
    let (mut concordant, mut discordant, mut ties) = (0, 0, 0);
    for (i, a) in keys.iter().enumerate() {
        for b in &keys[i + 1..] {
            let p = pred[*a].cmp(&pred[*b]);
            let o = obs[*a].cmp(&obs[*b]);
            if p == o {
                concordant += 1;
            } else if p.is_eq() || o.is_eq() {
                ties += 1;
            } else {
                discordant += 1;
            }
        }
    }
    Ok(OrderAgreement {
        pairs: concordant + discordant + ties,
        concordant,
        discordant,
        tie_disagreements: ties,
        exact_match: discordant == 0 && ties == 0,
    })
}

/// Ranks starting at 1, tied values sharing the average of their positions.
pub fn average_ranks(xs: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..xs.len()).collect();
    order.sort_by(|&a, &b| xs[a].total_cmp(&xs[b]));
    let mut ranks = vec![0.0; xs.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && xs[order[end]] == xs[order[start]] {
            end += 1;
        }
        // positions start+1 ..= end
        let rank = (start + end + 1) as f64 / 2.0;
        for &i in &order[start..end] {
            ranks[i] = rank;
        }
        start = end;
    }
    ranks
}

fn check_pair(xs: &[f64], ys: &[f64]) -> Result<()> {
    if xs.len() != ys.len() {
        return Err(Error::LengthMismatch {
            left: xs.len(),
            right: ys.len(),
        });
    }
    if xs.len() < 2 {
        return Err(Error::TooFewObservations(xs.len()));
    }
    Ok(())
}

/// Pearson correlation; `None` when either side has zero variance.
pub fn pearson(xs: &[f64], ys: &[f64]) -> Result<Option<f64>> {
    check_pair(xs, ys)?;
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (x, y) in xs.iter().zip(ys) {
        let (dx, dy) = (x - mx, y - my);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Ok(None);
    }
    Ok(Some((sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0)))
}

/// Spearman rho with average ranks for ties; `None` when a side has no rank
/// variance.
pub fn spearman_rho(xs: &[f64], ys: &[f64]) -> Result<Option<f64>> {
    check_pair(xs, ys)?;
    pearson(&average_ranks(xs), &average_ranks(ys))
}

/// Least-squares line of error rate on metric.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LinearFit {
    pub r: f64,
    pub r_squared: f64,
    pub slope: f64,
    pub intercept: f64,
}

pub fn linear_fit(metric: &[f64], error_rates: &[f64]) -> Result<Option<LinearFit>> {
    let Some(r) = pearson(metric, error_rates)? else {
        return Ok(None);
    };
    let n = metric.len() as f64;
    let mx = metric.iter().sum::<f64>() / n;
    let my = error_rates.iter().sum::<f64>() / n;
    let sxy: f64 = metric
        .iter()
        .zip(error_rates)
        .map(|(x, y)| (x - mx) * (y - my))
        .sum();
    let sxx: f64 = metric.iter().map(|x| (x - mx) * (x - mx)).sum();
    let slope = sxy / sxx;
    Ok(Some(LinearFit {
        r,
        r_squared: r * r,
        slope,
        intercept: my - slope * mx,
    }))
}

/// Squared Pearson correlation; `None` when undefined.
pub fn r_squared(metric: &[f64], error_rates: &[f64]) -> Result<Option<f64>> {
    Ok(linear_fit(metric, error_rates)?.map(|f| f.r_squared))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Observation {
    /// identifier as written in the source
    pub label: String,
    pub structure: CategoryStructure,
    pub error_rate: f64,
}

/// Mean error rates per category structure.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HumanDataset {
    pub label: String,
    pub observations: Vec<Observation>,
}

impl HumanDataset {
    pub fn new(label: impl Into<String>, observations: Vec<Observation>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for (i, o) in observations.iter().enumerate() {
            if !(0.0..=1.0).contains(&o.error_rate) {
                return Err(Error::Data {
                    row: i + 1,
                    message: format!("error rate {} outside [0, 1]", o.error_rate),
                });
            }
            if !seen.insert(&o.structure) {
                return Err(Error::Data {
                    row: i + 1,
                    message: format!("duplicate structure {}", o.structure),
                });
            }
        }
        Ok(Self {
            label: label.into(),
            observations,
        })
    }

    /// Reads `structure,error_rate` CSV. Structures are pipe-separated
    /// bitstrings or catalog ids such as `3[4]-2` or `3[4]-II`. Row numbers
    /// in errors are file line numbers.
    pub fn from_csv(label: impl Into<String>, input: impl Read) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(input);
        let headers = reader.headers().map_err(csv_error)?.clone();
        if headers.iter().collect::<Vec<_>>() != ["structure", "error_rate"] {
            return Err(Error::Data {
                row: 1,
                message: format!(
                    "expected header `structure,error_rate`, found `{}`",
                    headers.iter().collect::<Vec<_>>().join(",")
                ),
            });
        }
        let mut observations = Vec::new();
        let mut lines = Vec::new();
        for record in reader.records() {
            let record = record.map_err(csv_error)?;
            let row = record.position().map_or(0, |p| p.line() as usize);
            let data = |message: String| Error::Data { row, message };
            let label = record[0].to_string();
            let structure = parse_structure_ref(&label).map_err(|e| data(e.to_string()))?;
            let error_rate: f64 = record[1]
                .parse()
                .map_err(|_| data(format!("invalid error rate {:?}", &record[1])))?;
            observations.push(Observation {
                label,
                structure,
                error_rate,
            });
            lines.push(row);
        }
        // report validation failures against file lines
        Self::new(label, observations).map_err(|e| match e {
            Error::Data { row, message } => Error::Data {
                row: lines[row - 1],
                message,
            },
            other => other,
        })
    }

    pub fn error_rates(&self) -> Vec<f64> {
        self.observations.iter().map(|o| o.error_rate).collect()
    }
}

fn csv_error(e: csv::Error) -> Error {
    let row = e.position().map_or(0, |p| p.line() as usize);
    Error::Data {
        row,
        message: e.to_string(),
    }
}

/// A catalog id (`3[4]-2`, `3[4]-II`) or a bitstring set.
pub fn parse_structure_ref(text: &str) -> Result<CategoryStructure> {
    if text.contains('[') {
        catalog::resolve(text).map(|entry| entry.1)
    } else {
        CategoryStructure::parse_inferred(text)
    }
}
