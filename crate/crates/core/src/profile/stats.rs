//! Descriptive statistics for score vectors: five-number summaries with
//! histograms, and tie-aware Spearman rank correlation between measures.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    /// Bin boundaries; `edges.len() == counts.len() + 1`.
    pub edges: Vec<f64>,
    pub counts: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistributionSummary {
    pub count: u64,
    pub min: f64,
    pub max: f64,
    pub mean: f64,
    pub median: f64,
    pub q1: f64,
    pub q3: f64,
    /// Population standard deviation.
    pub stddev: f64,
    pub histogram: Histogram,
}

const MAX_BINS: usize = 100;

/// Quantile with linear interpolation between order statistics (the
/// convention most statistics packages default to). `sorted` must be
/// ascending and non-empty.
fn quantile(sorted: &[f64], p: f64) -> f64 {
    let h = (sorted.len() - 1) as f64 * p;
    let lo = h.floor() as usize;
    let hi = h.ceil() as usize;
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}

/// Summarize a sample. Returns `None` when the sample is empty or contains
/// a non-finite value. Bin count follows the Freedman-Diaconis rule,
/// falling back to the square-root rule when the IQR is zero, capped at
/// 100 bins either way.
pub fn summarize(values: &[f64]) -> Option<DistributionSummary> {
    if values.is_empty() || values.iter().any(|v| !v.is_finite()) {
        return None;
    }
    let mut sorted = values.to_vec();
    sorted.sort_unstable_by(|a, b| a.total_cmp(b));
    let n = sorted.len();
    let min = sorted[0];
    let max = sorted[n - 1];
    let mean = sorted.iter().sum::<f64>() / n as f64;
    let var = sorted.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n as f64;
    let q1 = quantile(&sorted, 0.25);
    let median = quantile(&sorted, 0.5);
    let q3 = quantile(&sorted, 0.75);

    let iqr = q3 - q1;
    let span = max - min;
    let bins = if span <= 0.0 {
        1
    } else if iqr > 0.0 {
        let width = 2.0 * iqr / (n as f64).cbrt();
        (span / width).ceil().max(1.0).min(MAX_BINS as f64) as usize
    } else {
        (n as f64).sqrt().ceil().max(1.0).min(MAX_BINS as f64) as usize
    };
    let width = if span > 0.0 { span / bins as f64 } else { 1.0 };
    let mut edges = Vec::with_capacity(bins + 1);
    for i in 0..=bins {
        edges.push(min + width * i as f64);
    }
    let mut counts = vec![0u64; bins];
    for &v in &sorted {
        let idx = (((v - min) / width) as usize).min(bins - 1);
        counts[idx] += 1;
    }

    Some(DistributionSummary {
        count: n as u64,
        min,
        max,
        mean,
        median,
        q1,
        q3,
        stddev: var.sqrt(),
        histogram: Histogram { edges, counts },
    })
}

/// Ranks with ties averaged, 1-based.
fn ranks(values: &[f64]) -> Vec<f64> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_unstable_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut out = vec![0.0; values.len()];
    let mut i = 0;
    while i < idx.len() {
        let mut j = i;
        while j + 1 < idx.len() && values[idx[j + 1]] == values[idx[i]] {
            j += 1;
        }
        let avg = (i + j) as f64 / 2.0 + 1.0;
        for &k in &idx[i..=j] {
            out[k] = avg;
        }
        i = j + 1;
    }
    out
}

fn pearson(x: &[f64], y: &[f64]) -> Option<f64> {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    let mut sxy = 0.0;
    for (&a, &b) in x.iter().zip(y) {
        sxx += (a - mx) * (a - mx);
        syy += (b - my) * (b - my);
        sxy += (a - mx) * (b - my);
    }
    if sxx <= 0.0 || syy <= 0.0 {
        return None;
    }
    Some(sxy / (sxx * syy).sqrt())
}

/// Spearman rank correlation of two equally long samples; `None` when
/// either sample is constant (its ranks carry no information).
pub fn spearman(a: &[f64], b: &[f64]) -> Option<f64> {
    pearson(&ranks(a), &ranks(b))
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SpearmanMatrix {
    pub names: Vec<String>,
    /// Row-major; `entries[i][j]` pairs `names[i]` with `names[j]`. The
    /// diagonal is always `Some(1.0)`; off-diagonal entries are `None`
    /// when one of the samples is constant.
    pub entries: Vec<Vec<Option<f64>>>,
}

pub fn spearman_matrix(named: &[(String, Vec<f64>)]) -> Result<SpearmanMatrix> {
    if named.len() < 2 {
        return Err(Error::bad_param("need at least two measures to correlate"));
    }
    let len = named[0].1.len();
    if len < 3 {
        return Err(Error::bad_param("need at least three observations"));
    }
    if named.iter().any(|(_, v)| v.len() != len) {
        return Err(Error::bad_param("measures have different lengths"));
    }
    let rank_vecs: Vec<Vec<f64>> = named.iter().map(|(_, v)| ranks(v)).collect();
    let k = named.len();
    let mut entries = vec![vec![None; k]; k];
    for i in 0..k {
        entries[i][i] = Some(1.0);
        for j in (i + 1)..k {
            let r = pearson(&rank_vecs[i], &rank_vecs[j]);
            entries[i][j] = r;
            entries[j][i] = r;
        }
    }
    Ok(SpearmanMatrix {
        names: named.iter().map(|(n, _)| n.clone()).collect(),
        entries,
    })
}
