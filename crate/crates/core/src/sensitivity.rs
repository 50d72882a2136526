//! How much each indicator moves when within-journal citations are
//! removed, how fast the recursion settles, and with/without trendlines.

use std::fmt;

use crate::error::{Branch, Error, Result};
use crate::influence::{
    influence_weights, raw_citation_counts, self_citation_diagnostics, IterationMode, IterationTrace, WeightVector,
};
use crate::matrix::{strip_self_citations, CitationMatrix, JournalSet};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Indicator {
    /// Influence weights; the stripped branch is renormalized on its own margins.
    InfluenceWeight(IterationMode),
    /// Citations received (row margin).
    RawCited,
    /// Citations received over references given.
    CitedCitingRatio,
}

impl Indicator {
    pub fn name(&self) -> &'static str {
        match self {
            Indicator::InfluenceWeight(_) => "influence_weight",
            Indicator::RawCited => "raw_cited",
            Indicator::CitedCitingRatio => "cited_citing_ratio",
        }
    }

    fn evaluate(&self, m: &CitationMatrix) -> Result<Vec<f64>> {
        match *self {
            Indicator::InfluenceWeight(mode) => Ok(influence_weights(m, true, mode)?.values().to_vec()),
            Indicator::RawCited => Ok(raw_citation_counts(m).0.values().to_vec()),
            Indicator::CitedCitingRatio => {
                let diag = self_citation_diagnostics(m);
                diag.entries
                    .iter()
                    .enumerate()
                    .map(|(i, e)| {
                        e.cited_citing_ratio_with.ok_or_else(|| Error::UndefinedRatio {
                            journal: m.journals().label(i).to_owned(),
                            quantity: "cited/citing ratio",
                        })
                    })
                    .collect()
            }
        }
    }
}

impl fmt::Display for Indicator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Per-journal indicator values with and without self-citations.
#[derive(Debug, Clone, PartialEq)]
pub struct SensitivityReport {
    pub indicator: Indicator,
    journals: JournalSet,
    pub with: Vec<f64>,
    pub without: Vec<f64>,
    /// `100 * (without - with) / with`; `None` when `with` is not positive.
    pub pct_change: Vec<Option<f64>>,
}

impl SensitivityReport {
    pub fn journals(&self) -> &JournalSet {
        &self.journals
    }

    pub fn max_abs_pct_change(&self) -> Option<f64> {
        self.pct_change.iter().flatten().map(|p| p.abs()).reduce(f64::max)
    }

    pub fn mean_abs_pct_change(&self) -> Option<f64> {
        let defined: Vec<f64> = self.pct_change.iter().flatten().map(|p| p.abs()).collect();
        (!defined.is_empty()).then(|| defined.iter().sum::<f64>() / defined.len() as f64)
    }
}

pub fn pct_change(with: f64, without: f64) -> Option<f64> {
    (with > 0.0).then(|| 100.0 * (without - with) / with)
}

pub fn self_citation_sensitivity(m: &CitationMatrix, indicator: Indicator) -> Result<SensitivityReport> {
    let with = indicator
        .evaluate(m)
        .map_err(|e| e.in_branch(Branch::WithSelfCitations))?;
    let without = indicator
        .evaluate(&strip_self_citations(m))
        .map_err(|e| e.in_branch(Branch::WithoutSelfCitations))?;
    let pct_change = with.iter().zip(&without).map(|(&a, &b)| pct_change(a, b)).collect();
    Ok(SensitivityReport {
        indicator,
        journals: m.journals().clone(),
        with,
        without,
        pct_change,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayRatio {
    /// Later cycle of the pair: the ratio is `delta(cycle) / delta(cycle - 1)`.
    pub cycle: usize,
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceProfile {
    /// L1 delta per cycle, starting at cycle 1.
    pub deltas: Vec<f64>,
    pub decay_ratios: Vec<DecayRatio>,
    /// Every ratio whose earlier cycle is 3 or later is strictly below one.
    pub geometric: bool,
}

impl ConvergenceProfile {
    /// The last recorded decay ratio, an estimate of the asymptotic rate.
    pub fn asymptotic_ratio(&self) -> Option<f64> {
        self.decay_ratios.last().map(|r| r.ratio)
    }
}

pub fn convergence_profile(trace: &IterationTrace) -> Result<ConvergenceProfile> {
    let deltas = trace.deltas();
    if deltas.len() < 3 {
        return Err(Error::TraceTooShort(deltas.len()));
    }
    let decay_ratios: Vec<DecayRatio> = deltas
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > 0.0)
        .map(|(i, w)| DecayRatio {
            cycle: i + 2,
            ratio: w[1] / w[0],
        })
        .collect();
    // cycles 1 and 2 are transient from the arbitrary start vector
    let geometric = decay_ratios.iter().filter(|r| r.cycle >= 4).all(|r| r.ratio < 1.0);
    Ok(ConvergenceProfile {
        deltas,
        decay_ratios,
        geometric,
    })
}

/// Unweighted least-squares line `y = slope * x + intercept`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
    /// Pearson correlation; `None` when `y` is constant.
    pub pearson_r: Option<f64>,
    pub n_points: usize,
}

pub fn linear_fit(x: &WeightVector, y: &WeightVector) -> Result<LinearFit> {
    if x.journals() != y.journals() {
        return Err(Error::JournalMismatch);
    }
    linear_fit_values(x.values(), y.values())
}

pub fn linear_fit_values(x: &[f64], y: &[f64]) -> Result<LinearFit> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            expected: x.len(),
            found: y.len(),
        });
    }
    let n = x.len();
    if n < 2 {
        return Err(Error::TooFewPoints(n));
    }
    let mean_x = x.iter().sum::<f64>() / n as f64;
    let mean_y = y.iter().sum::<f64>() / n as f64;
    let (mut sxx, mut syy, mut sxy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        let dx = a - mean_x;
        let dy = b - mean_y;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if sxx == 0.0 {
        return Err(Error::ConstantRegressor);
    }
    let slope = sxy / sxx;
    let pearson_r = (syy > 0.0).then(|| (sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0));
    Ok(LinearFit {
        slope,
        intercept: mean_y - slope * mean_x,
        pearson_r,
        n_points: n,
    })
}
