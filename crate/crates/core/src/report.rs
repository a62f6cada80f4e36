//! Builders for the documents behind each command: metric reports, catalog
//! listings, the SHJ and sweep tables, and data fits.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::boolcomp::{boolean_complexity, BoolComplexityResult};
use crate::catalog::{self, SHJ_NAMES};
use crate::error::{Error, Result};
use crate::gist::{structural_manifold, StructuralManifold};
use crate::infocomp::{aggregate_metric, Aggregator, LevelProfile};
use crate::output::{Cell, OutputDocument};
use crate::stats::{
    compare_orders, induced_order, linear_fit, spearman_rho, HumanDataset, OrderedPartition,
};
use crate::structures::{enumerate_classes, CategoryStructure};

/// Every metric for one structure.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricReport {
    pub structure: CategoryStructure,
    pub u_min: LevelProfile,
    pub u_mean: LevelProfile,
    pub boolean: BoolComplexityResult,
    pub manifold: StructuralManifold,
}

pub fn metric_report(s: &CategoryStructure) -> Result<MetricReport> {
    Ok(MetricReport {
        structure: s.clone(),
        u_min: aggregate_metric(s, Aggregator::Min)?,
        u_mean: aggregate_metric(s, Aggregator::Mean)?,
        boolean: boolean_complexity(s),
        manifold: structural_manifold(s),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MetricSelector {
    Umin,
    Umean,
    Boolc,
    Gist,
    All,
}

impl FromStr for MetricSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "umin" => Ok(Self::Umin),
            "umean" => Ok(Self::Umean),
            "boolc" => Ok(Self::Boolc),
            "gist" => Ok(Self::Gist),
            "all" => Ok(Self::All),
            other => Err(Error::UnsupportedAggregator(other.to_string())),
        }
    }
}

impl fmt::Display for MetricSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Umin => "umin",
            Self::Umean => "umean",
            Self::Boolc => "boolc",
            Self::Gist => "gist",
            Self::All => "all",
        })
    }
}

/// Scalar difficulty prediction, larger meaning harder. The manifold
/// magnitude runs the other way, so `gist` yields `-phi_hat`.
pub fn difficulty_score(s: &CategoryStructure, metric: MetricSelector) -> Result<f64> {
    match metric {
        MetricSelector::Umin => Ok(aggregate_metric(s, Aggregator::Min)?.u_hat),
        MetricSelector::Umean => Ok(aggregate_metric(s, Aggregator::Mean)?.u_hat),
        MetricSelector::Boolc => Ok(boolean_complexity(s).literal_count as f64),
        MetricSelector::Gist => Ok(-structural_manifold(s).phi_hat),
        MetricSelector::All => Err(Error::UnsupportedAggregator("all".into())),
    }
}

fn profile_rows(doc: &mut OutputDocument, label: &str, name: &str, profile: &LevelProfile, per_level: bool) {
    if per_level {
        for (n, u) in profile.u_levels.iter().enumerate() {
            doc.push_row(vec![label.into(), format!("{name}({n})").into(), (*u).into()]);
        }
    }
    doc.push_row(vec![label.into(), format!("û_{name}").into(), profile.u_hat.into()]);
}

/// Long-format metric listing: one `(structure, metric, value)` row each.
pub fn metric_document(
    s: &CategoryStructure,
    metric: MetricSelector,
    per_level: bool,
) -> Result<OutputDocument> {
    use MetricSelector::*;
    let mut doc = OutputDocument::new("metric", &["structure", "metric", "value"]);
    let label = s.to_string();
    if matches!(metric, Umin | All) {
        let p = aggregate_metric(s, Aggregator::Min)?;
        profile_rows(&mut doc, &label, "min", &p, per_level);
    }
    if matches!(metric, Umean | All) {
        let p = aggregate_metric(s, Aggregator::Mean)?;
        profile_rows(&mut doc, &label, "mean", &p, per_level);
    }
    if matches!(metric, Boolc | All) {
        let b = boolean_complexity(s);
        doc.push_row(vec![label.as_str().into(), "boolc".into(), b.literal_count.into()]);
        doc.push_row(vec![label.as_str().into(), "formula".into(), b.formula_text.into()]);
    }
    if matches!(metric, Gist | All) {
        let m = structural_manifold(s);
        doc.push_row(vec![label.as_str().into(), "manifold".into(), m.to_string().into()]);
        doc.push_row(vec![label.as_str().into(), "phi_hat".into(), m.phi_hat.into()]);
    }
    Ok(doc)
}

/// One row per class of `dims[p]` in enumeration order.
pub fn enumerate_document(dims: usize, p: usize, totals: Totals) -> Result<OutputDocument> {
    let mut doc = OutputDocument::new(
        format!("{dims}[{p}]"),
        &["id", "structure", "u_min", "u_mean", "boolc", "phi_hat"],
    );
    for (i, s) in enumerate_classes(dims, p)?.iter().enumerate() {
        let r = metric_report(s)?;
        doc.push_row(vec![
            format!("{dims}[{p}]-{}", i + 1).into(),
            s.to_string().into(),
            totals.total(&r.u_min).into(),
            totals.total(&r.u_mean).into(),
            r.boolean.literal_count.into(),
            r.manifold.phi_hat.into(),
        ]);
    }
    Ok(doc)
}

/// How table totals are formed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Totals {
    /// sum of full-precision levels
    #[default]
    Exact,
    /// sum of the levels after rounding each to this many decimals
    LevelRounded(u32),
}

impl Totals {
    pub fn total(&self, profile: &LevelProfile) -> f64 {
        match self {
            Totals::Exact => profile.u_hat,
            Totals::LevelRounded(places) => profile.level_rounded_total(*places),
        }
    }
}

/// Per-level SHJ table for one aggregator: a row per `u_G(n)`, a total row,
/// and the order each row induces over the six types.
pub fn shj_table(g: Aggregator, totals: Totals, epsilon: f64) -> Result<OutputDocument> {
    let name = match g {
        Aggregator::Min => "min",
        Aggregator::Mean => "mean",
        other => return Err(Error::UnsupportedAggregator(other.to_string())),
    };
    let mut columns = vec!["level"];
    columns.extend(SHJ_NAMES);
    columns.push("order");
    let mut doc = OutputDocument::new(format!("shj-{name}"), &columns);
    let profiles = catalog::shj_types()
        .iter()
        .map(|s| aggregate_metric(s, g))
        .collect::<Result<Vec<_>>>()?;
    let order_of = |values: Vec<f64>| -> Result<OrderedPartition<&'static str>> {
        let keyed: Vec<_> = SHJ_NAMES.iter().copied().zip(values).collect();
        induced_order(&keyed, epsilon)
    };
    for n in 0..=3 {
        let values: Vec<f64> = profiles.iter().map(|p| p.u_levels[n]).collect();
        let mut row = vec![Cell::from(format!("u_{name}({n})"))];
        row.extend(values.iter().map(|&v| Cell::from(v)));
        row.push(order_of(values)?.to_string().into());
        doc.push_row(row);
    }
    let totals: Vec<f64> = profiles.iter().map(|p| totals.total(p)).collect();
    let order = order_of(totals.clone())?.to_string();
    let mut row = vec![Cell::from(format!("û_{name}"))];
    row.extend(totals.iter().map(|&v| Cell::from(v)));
    row.push(order.clone().into());
    doc.push_row(row);
    doc.push_note("order", order);
    Ok(doc)
}

/// The D[P] sweep in printed row order.
pub fn sweep_table(totals: Totals) -> Result<OutputDocument> {
    let mut doc = OutputDocument::new(
        "sweep",
        &["block", "row", "id", "alias", "structure", "u_min", "u_mean"],
    );
    for row in catalog::table_rows() {
        let s = &row.structure;
        let min = aggregate_metric(s, Aggregator::Min)?;
        let mean = aggregate_metric(s, Aggregator::Mean)?;
        doc.push_row(vec![
            row.block().into(),
            row.row.into(),
            catalog::class_id(s)?.to_string().into(),
            row.alias.clone().unwrap_or_else(|| "-".into()).into(),
            s.to_string().into(),
            totals.total(&min).into(),
            totals.total(&mean).into(),
        ]);
    }
    Ok(doc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FitStatistic {
    R2,
    Spearman,
    Order,
}

impl FromStr for FitStatistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "r2" => Ok(Self::R2),
            "spearman" => Ok(Self::Spearman),
            "order" => Ok(Self::Order),
            other => Err(Error::UnsupportedAggregator(other.to_string())),
        }
    }
}

/// Agreement between a metric and a dataset as `(statistic, value)` rows.
/// Human orders use a zero tie tolerance; `epsilon` applies to the metric.
pub fn fit_document(
    data: &HumanDataset,
    metric: MetricSelector,
    statistic: FitStatistic,
    epsilon: f64,
) -> Result<OutputDocument> {
    let scores = data
        .observations
        .iter()
        .map(|o| difficulty_score(&o.structure, metric))
        .collect::<Result<Vec<_>>>()?;
    let errors = data.error_rates();
    let mut doc = OutputDocument::new(format!("fit {metric}"), &["statistic", "value"]);
    doc.push_row(vec!["n".into(), errors.len().into()]);
    match statistic {
        FitStatistic::R2 => {
            let fit = linear_fit(&scores, &errors)?;
            doc.push_row(vec!["r".into(), fit.map(|f| f.r).into()]);
            doc.push_row(vec!["r2".into(), fit.map(|f| f.r_squared).into()]);
            doc.push_row(vec!["slope".into(), fit.map(|f| f.slope).into()]);
            doc.push_row(vec!["intercept".into(), fit.map(|f| f.intercept).into()]);
        }
        FitStatistic::Spearman => {
            doc.push_row(vec!["rho".into(), spearman_rho(&scores, &errors)?.into()]);
        }
        FitStatistic::Order => {
            let labels: Vec<String> = data.observations.iter().map(|o| o.label.clone()).collect();
            let keyed = |values: &[f64]| -> Vec<(String, f64)> {
                labels.iter().cloned().zip(values.iter().copied()).collect()
            };
            let predicted = induced_order(&keyed(&scores), epsilon)?;
            let observed = induced_order(&keyed(&errors), 0.0)?;
            let agreement = compare_orders(&predicted, &observed)?;
            doc.push_row(vec!["pairs".into(), agreement.pairs.into()]);
            doc.push_row(vec!["concordant".into(), agreement.concordant.into()]);
            doc.push_row(vec!["discordant".into(), agreement.discordant.into()]);
            doc.push_row(vec!["tie_disagreements".into(), agreement.tie_disagreements.into()]);
            doc.push_row(vec!["exact_match".into(), agreement.exact_match.to_string().into()]);
            doc.push_note("predicted", predicted.to_string());
            doc.push_note("observed", observed.to_string());
        }
    }
    Ok(doc)
}
