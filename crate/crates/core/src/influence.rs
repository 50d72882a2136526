//! Journal indicators: Pinski-Narin normalization, influence weights by
//! power iteration, power-weakness ratios, raw counts, impact ratios and
//! per-journal self-citation diagnostics.

use crate::error::{Error, Result};
use crate::matrix::{margins, strip_self_citations, transpose, CitationMatrix, JournalSet, SquareMatrix};

/// L1 tolerance used when no iteration mode is given.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
/// Cycle cap used when no iteration mode is given.
pub const DEFAULT_MAX_ITER: usize = 100;
/// Cycle count of the published biochemistry example.
pub const PAPER_CYCLES: usize = 7;

/// A labelled square matrix that can be iterated.
pub trait LabeledSquare {
    fn journals(&self) -> &JournalSet;
    fn matrix(&self) -> &SquareMatrix;
}

impl LabeledSquare for CitationMatrix {
    fn journals(&self) -> &JournalSet {
        CitationMatrix::journals(self)
    }

    fn matrix(&self) -> &SquareMatrix {
        self.counts()
    }
}

/// Citation matrix with row `i` divided by journal `i`'s reference total,
/// `M[i][j] = Z[i][j] / R_i`. Row `i` then sums to `C_i / R_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedMatrix {
    journals: JournalSet,
    values: SquareMatrix,
}

impl NormalizedMatrix {
    pub fn values(&self) -> &SquareMatrix {
        &self.values
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.values.get(row, col)
    }

    pub fn row_sums(&self) -> Vec<f64> {
        self.values.row_sums()
    }
}

impl LabeledSquare for NormalizedMatrix {
    fn journals(&self) -> &JournalSet {
        &self.journals
    }

    fn matrix(&self) -> &SquareMatrix {
        &self.values
    }
}

pub fn pinski_narin_normalize(m: &CitationMatrix) -> Result<NormalizedMatrix> {
    let references = margins(m).citing_totals;
    if let Some(i) = references.iter().position(|&r| r <= 0.0) {
        return Err(Error::ZeroReferences {
            journal: m.journals().label(i).to_owned(),
        });
    }
    let n = m.dim();
    let mut values = SquareMatrix::zeros(n);
    for (i, &r) in references.iter().enumerate() {
        for j in 0..n {
            values.set(i, j, m.get(i, j) / r);
        }
    }
    Ok(NormalizedMatrix {
        journals: m.journals().clone(),
        values,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    Raw,
    /// Values sum to one.
    Stochastic,
}

/// Per-journal indicator values.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    journals: JournalSet,
    values: Vec<f64>,
    normalization: Normalization,
}

impl WeightVector {
    /// Raw (unnormalized) values; each must be finite and `>= 0`.
    pub fn raw(journals: JournalSet, values: Vec<f64>) -> Result<Self> {
        if values.len() != journals.len() {
            return Err(Error::LengthMismatch {
                expected: journals.len(),
                found: values.len(),
            });
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::InvalidCell {
                line: 1,
                field: i + 1,
                value: values[i].to_string(),
            });
        }
        Ok(WeightVector {
            journals,
            values,
            normalization: Normalization::Raw,
        })
    }

    /// Rescales non-negative `values` to sum to one.
    pub fn stochastic(journals: JournalSet, values: Vec<f64>) -> Result<Self> {
        let mut v = Self::raw(journals, values)?;
        let total: f64 = v.values.iter().sum();
        if total <= 0.0 {
            return Err(Error::VanishingIterate { cycle: 0 });
        }
        v.values.iter_mut().for_each(|x| *x /= total);
        v.normalization = Normalization::Stochastic;
        Ok(v)
    }

    pub fn journals(&self) -> &JournalSet {
        &self.journals
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, label: &str) -> Option<f64> {
        self.journals.position(label).map(|i| self.values[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, f64)> {
        self.journals.iter().zip(self.values.iter().copied())
    }
}

/// How many multiply-and-renormalize cycles to run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IterationMode {
    /// Exactly this many cycles (>= 1).
    Fixed(usize),
    /// Stop once the L1 change between successive stochastic vectors is
    /// `<= epsilon`, or after `max_iter` cycles.
    Tolerance { epsilon: f64, max_iter: usize },
}

impl Default for IterationMode {
    fn default() -> Self {
        IterationMode::Tolerance {
            epsilon: DEFAULT_TOLERANCE,
            max_iter: DEFAULT_MAX_ITER,
        }
    }
}

impl IterationMode {
    pub fn validate(&self) -> Result<()> {
        match *self {
            IterationMode::Fixed(0) => Err(Error::InvalidMode("cycle count must be at least 1".into())),
            IterationMode::Tolerance { epsilon, .. } if !(epsilon > 0.0 && epsilon.is_finite()) => Err(
                Error::InvalidMode(format!("tolerance must be a positive number, got {epsilon}")),
            ),
            IterationMode::Tolerance { max_iter: 0, .. } => {
                Err(Error::InvalidMode("max_iter must be at least 1".into()))
            }
            _ => Ok(()),
        }
    }

    fn tolerance(&self) -> f64 {
        match *self {
            IterationMode::Fixed(_) => DEFAULT_TOLERANCE,
            IterationMode::Tolerance { epsilon, .. } => epsilon,
        }
    }
}

/// One multiply-and-renormalize cycle.
#[derive(Debug, Clone, PartialEq)]
pub struct IterationStep {
    /// 1-based cycle number.
    pub cycle: usize,
    /// Matrix times the previous stochastic vector (times all-ones at cycle 1).
    pub raw: Vec<f64>,
    pub stochastic: Vec<f64>,
    /// L1 distance to the previous stochastic vector; cycle 1 compares
    /// against the uniform start vector.
    pub delta: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IterationTrace {
    journals: JournalSet,
    pub steps: Vec<IterationStep>,
    /// Final delta is within `tolerance`.
    pub converged: bool,
    pub tolerance: f64,
}

impl IterationTrace {
    pub fn journals(&self) -> &JournalSet {
        &self.journals
    }

    pub fn iterations_used(&self) -> usize {
        self.steps.len()
    }

    pub fn final_delta(&self) -> f64 {
        self.steps.last().map_or(0.0, |s| s.delta)
    }

    pub fn deltas(&self) -> Vec<f64> {
        self.steps.iter().map(|s| s.delta).collect()
    }

    pub fn final_weights(&self) -> WeightVector {
        let last = self.steps.last().expect("trace has at least one cycle");
        WeightVector {
            journals: self.journals.clone(),
            values: last.stochastic.clone(),
            normalization: Normalization::Stochastic,
        }
    }

    /// Pre-normalization vector of cycle `cycle` (1-based) as a raw vector.
    pub fn raw_at(&self, cycle: usize) -> Option<WeightVector> {
        self.steps.get(cycle.checked_sub(1)?).map(|s| WeightVector {
            journals: self.journals.clone(),
            values: s.raw.clone(),
            normalization: Normalization::Raw,
        })
    }
}

/// Power iteration from the all-ones vector, renormalizing to sum one after
/// every product. Never loops unboundedly: tolerance mode stops at
/// `max_iter` with `converged = false`.
pub fn power_iterate<M: LabeledSquare + ?Sized>(m: &M, mode: IterationMode) -> Result<IterationTrace> {
    mode.validate()?;
    let matrix = m.matrix();
    let journals = m.journals();
    let n = matrix.dim();
    let tolerance = mode.tolerance();
    let max_cycles = match mode {
        IterationMode::Fixed(k) => k,
        IterationMode::Tolerance { max_iter, .. } => max_iter,
    };

    let mut input = vec![1.0; n];
    let mut previous = vec![1.0 / n as f64; n];
    let mut steps = Vec::with_capacity(max_cycles.min(1024));

    for cycle in 1..=max_cycles {
        let raw = matrix.mul_vec(&input);
        if let Some(i) = raw.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteIterate {
                journal: journals.label(i).to_owned(),
                cycle,
            });
        }
        let total: f64 = raw.iter().sum();
        if total <= 0.0 {
            return Err(Error::VanishingIterate { cycle });
        }
        let stochastic: Vec<f64> = raw.iter().map(|v| v / total).collect();
        let delta = stochastic
            .iter()
            .zip(&previous)
            .map(|(a, b)| (a - b).abs())
            .sum::<f64>();
        previous.clone_from(&stochastic);
        input.clone_from(&stochastic);
        steps.push(IterationStep {
            cycle,
            raw,
            stochastic,
            delta,
        });
        if matches!(mode, IterationMode::Tolerance { .. }) && delta <= tolerance {
            break;
        }
    }

    let converged = steps.last().is_some_and(|s| s.delta <= tolerance);
    Ok(IterationTrace {
        journals: journals.clone(),
        steps,
        converged,
        tolerance,
    })
}

/// Full iteration trace of the influence-weight computation. Without
/// self-citations the diagonal is removed before normalizing, so the
/// reference totals are those of the stripped matrix.
pub fn influence_trace(m: &CitationMatrix, self_citations: bool, mode: IterationMode) -> Result<IterationTrace> {
    let normalized = if self_citations {
        pinski_narin_normalize(m)?
    } else {
        pinski_narin_normalize(&strip_self_citations(m))?
    };
    power_iterate(&normalized, mode)
}

/// Influence weights: the final stochastic vector of the iterated normalized
/// matrix. In tolerance mode a run that exhausts `max_iter` is an error.
pub fn influence_weights(m: &CitationMatrix, self_citations: bool, mode: IterationMode) -> Result<WeightVector> {
    let trace = influence_trace(m, self_citations, mode)?;
    if matches!(mode, IterationMode::Tolerance { .. }) && !trace.converged {
        return Err(Error::NotConverged {
            cycles: trace.iterations_used(),
            delta: trace.final_delta(),
            tolerance: trace.tolerance,
        });
    }
    Ok(trace.final_weights())
}

/// Power `p(k)`, weakness `q(k)` and their ratio `r(k) = p(k) / q(k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerWeakness {
    pub power: WeightVector,
    pub weakness: WeightVector,
    pub ratio: WeightVector,
}

/// Power-weakness ratio after `k` cycles. `p` iterates the raw matrix and
/// `q` its transpose, both on the same renormalization schedule.
pub fn power_weakness_ratio(m: &CitationMatrix, k: usize) -> Result<PowerWeakness> {
    let mode = IterationMode::Fixed(k);
    let power = power_iterate(m, mode)?.final_weights();
    let weakness = power_iterate(&transpose(m), mode)?.final_weights();
    let mut ratio = Vec::with_capacity(m.dim());
    for (i, (p, q)) in power.values.iter().zip(&weakness.values).enumerate() {
        if *q <= 0.0 {
            return Err(Error::ZeroWeakness {
                journal: m.journals().label(i).to_owned(),
            });
        }
        ratio.push(p / q);
    }
    Ok(PowerWeakness {
        ratio: WeightVector::raw(m.journals().clone(), ratio)?,
        power,
        weakness,
    })
}

/// Citations received and references given per journal.
pub fn raw_citation_counts(m: &CitationMatrix) -> (WeightVector, WeightVector) {
    let totals = margins(m);
    let journals = m.journals();
    (
        WeightVector {
            journals: journals.clone(),
            values: totals.cited_totals,
            normalization: Normalization::Raw,
        },
        WeightVector {
            journals: journals.clone(),
            values: totals.citing_totals,
            normalization: Normalization::Raw,
        },
    )
}

/// Citations per publication, `C_i / P_i`.
pub fn impact_ratio(citations: &WeightVector, publications: &WeightVector) -> Result<WeightVector> {
    if citations.journals != publications.journals {
        return Err(Error::JournalMismatch);
    }
    let mut values = Vec::with_capacity(citations.len());
    for ((journal, c), p) in citations.iter().zip(&publications.values) {
        if *p <= 0.0 {
            return Err(Error::NonPositivePublications {
                journal: journal.to_owned(),
                value: *p,
            });
        }
        values.push(c / p);
    }
    WeightVector::raw(citations.journals.clone(), values)
}

/// Self-citation breakdown for one journal. Ratios with a zero
/// denominator are `None`.
#[derive(Debug, Clone, PartialEq)]
pub struct JournalDiagnostics {
    /// `S`: within-journal citations.
    pub self_citations: f64,
    /// `d`: citations received from other journals.
    pub cited_by_others: f64,
    /// `g`: references given to other journals.
    pub citing_others: f64,
    /// `S / (S + d)`
    pub self_cited_rate: Option<f64>,
    /// `S / (S + g)`
    pub self_citing_rate: Option<f64>,
    /// `(S + d) / (S + g)`
    pub cited_citing_ratio_with: Option<f64>,
    /// `d / g`
    pub cited_citing_ratio_without: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SelfCitationDiagnostics {
    journals: JournalSet,
    pub entries: Vec<JournalDiagnostics>,
    pub grand_total: f64,
}

impl SelfCitationDiagnostics {
    pub fn journals(&self) -> &JournalSet {
        &self.journals
    }

    /// Citations among the remaining journals, excluding every cell in
    /// journal `index`'s row or column.
    pub fn others_block(&self, index: usize) -> f64 {
        let e = &self.entries[index];
        self.grand_total - e.self_citations - e.cited_by_others - e.citing_others
    }
}

fn ratio(num: f64, den: f64) -> Option<f64> {
    (den > 0.0).then(|| num / den)
}

pub fn self_citation_diagnostics(m: &CitationMatrix) -> SelfCitationDiagnostics {
    let totals = margins(m);
    let entries = (0..m.dim())
        .map(|i| {
            let s = m.get(i, i);
            let cited = totals.cited_totals[i];
            let citing = totals.citing_totals[i];
            let d = cited - s;
            let g = citing - s;
            JournalDiagnostics {
                self_citations: s,
                cited_by_others: d,
                citing_others: g,
                self_cited_rate: ratio(s, cited),
                self_citing_rate: ratio(s, citing),
                cited_citing_ratio_with: ratio(cited, citing),
                cited_citing_ratio_without: ratio(d, g),
            }
        })
        .collect();
    SelfCitationDiagnostics {
        journals: m.journals().clone(),
        entries,
        grand_total: totals.grand_total,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture::price_1981;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn normalizes_by_reference_total_of_row_journal() {
        let m = price_1981();
        let nm = pinski_narin_normalize(&m).unwrap();
        assert_eq!(nm.get(0, 0), 9384.0 / 22036.0);
        assert_eq!(nm.get(1, 0), 2406.0 / 24403.0);
        assert!(close(nm.get(0, 0), 0.426, 5e-4));
        assert!(close(nm.get(1, 0), 0.099, 5e-4));
    }

    #[test]
    fn uniform_matrix_normalizes_to_halves() {
        let m = CitationMatrix::from_rows(&[vec![2.0, 2.0], vec![2.0, 2.0]]).unwrap();
        let nm = pinski_narin_normalize(&m).unwrap();
        assert_eq!(nm.values().to_rows(), vec![vec![0.5, 0.5], vec![0.5, 0.5]]);
        assert_eq!(nm.row_sums(), vec![1.0, 1.0]);
    }

    #[test]
    fn isolated_journal_cannot_be_normalized() {
        let m = CitationMatrix::with_labels(
            ["a", "b", "lonely"],
            &[vec![1.0, 2.0, 0.0], vec![3.0, 4.0, 0.0], vec![0.0, 0.0, 0.0]],
        )
        .unwrap();
        assert_eq!(
            pinski_narin_normalize(&m).unwrap_err(),
            Error::ZeroReferences {
                journal: "lonely".into()
            }
        );
    }

    #[test]
    fn first_cycle_is_row_sums() {
        let nm = pinski_narin_normalize(&price_1981()).unwrap();
        let trace = power_iterate(&nm, IterationMode::Fixed(1)).unwrap();
        assert_eq!(trace.steps[0].raw, nm.values().mul_vec(&[1.0; 8]));
        let expected = [1.252, 0.654, 1.318, 0.824, 1.357, 0.851, 1.303, 0.859];
        for (got, want) in trace.steps[0].raw.iter().zip(expected) {
            assert!(close(*got, want, 5e-4), "{got} vs {want}");
        }
    }

    #[test]
    fn uniform_matrix_is_fixed_after_one_cycle() {
        let m = CitationMatrix::from_rows(&[vec![3.0; 3], vec![3.0; 3], vec![3.0; 3]]).unwrap();
        let trace = power_iterate(&m, IterationMode::Fixed(2)).unwrap();
        for step in &trace.steps {
            for v in &step.stochastic {
                assert!(close(*v, 1.0 / 3.0, 1e-15));
            }
        }
        assert_eq!(trace.steps[1].delta, 0.0);
        assert!(trace.converged);
    }

    #[test]
    fn tolerance_mode_stops_and_reports() {
        let nm = pinski_narin_normalize(&price_1981()).unwrap();
        let trace = power_iterate(&nm, IterationMode::default()).unwrap();
        assert!(trace.converged);
        assert!(trace.final_delta() <= DEFAULT_TOLERANCE);
        assert!(trace.iterations_used() < DEFAULT_MAX_ITER);

        let capped = power_iterate(
            &nm,
            IterationMode::Tolerance {
                epsilon: 1e-15,
                max_iter: 5,
            },
        )
        .unwrap();
        assert_eq!(capped.iterations_used(), 5);
        assert!(!capped.converged);
        assert!(matches!(
            influence_weights(
                &price_1981(),
                true,
                IterationMode::Tolerance {
                    epsilon: 1e-15,
                    max_iter: 5
                }
            ),
            Err(Error::NotConverged { cycles: 5, .. })
        ));
    }

    #[test]
    fn invalid_modes_are_rejected() {
        let m = price_1981();
        for mode in [
            IterationMode::Fixed(0),
            IterationMode::Tolerance {
                epsilon: 0.0,
                max_iter: 10,
            },
            IterationMode::Tolerance {
                epsilon: f64::NAN,
                max_iter: 10,
            },
        ] {
            assert!(matches!(power_iterate(&m, mode), Err(Error::InvalidMode(_))));
        }
    }

    #[test]
    fn nilpotent_matrix_vanishes() {
        let m = CitationMatrix::from_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        assert_eq!(
            power_iterate(&m, IterationMode::default()).unwrap_err(),
            Error::VanishingIterate { cycle: 2 }
        );
    }

    #[test]
    fn symmetric_pair_without_self_citations() {
        let m = CitationMatrix::from_rows(&[vec![0.0, 5.0], vec![5.0, 0.0]]).unwrap();
        let w = influence_weights(&m, false, IterationMode::default()).unwrap();
        assert_eq!(w.values(), [0.5, 0.5]);
        assert_eq!(w.normalization(), Normalization::Stochastic);
    }

    #[test]
    fn pwr_of_symmetric_matrix_is_one() {
        let m = CitationMatrix::from_rows(&[vec![4.0, 1.0, 2.0], vec![1.0, 0.0, 7.0], vec![2.0, 7.0, 3.0]]).unwrap();
        for k in 1..6 {
            let pw = power_weakness_ratio(&m, k).unwrap();
            for r in pw.ratio.values() {
                assert_eq!(*r, 1.0);
            }
        }
    }

    #[test]
    fn pwr_first_cycle_is_margin_ratio() {
        let m = price_1981();
        let pw = power_weakness_ratio(&m, 1).unwrap();
        assert!(close(pw.ratio.values()[0], 27596.0 / 22036.0, 1e-14));
        assert!(close(pw.power.values()[0], 27596.0 / 103720.0, 1e-15));
        assert!(close(pw.weakness.values()[0], 22036.0 / 103720.0, 1e-15));
    }

    #[test]
    fn pwr_zero_weakness_names_journal() {
        // journal b is cited but cites nobody
        let m = CitationMatrix::with_labels(["a", "b"], &[vec![1.0, 0.0], vec![1.0, 0.0]]).unwrap();
        assert_eq!(
            power_weakness_ratio(&m, 1).unwrap_err(),
            Error::ZeroWeakness { journal: "b".into() }
        );
    }

    #[test]
    fn raw_counts() {
        let (cited, citing) = raw_citation_counts(&price_1981());
        assert_eq!(cited.values()[0], 27596.0);
        assert_eq!(citing.values()[0], 22036.0);
        let (cited, _) = raw_citation_counts(&strip_self_citations(&price_1981()));
        assert_eq!(cited.values()[0], 18212.0);
        let zero = CitationMatrix::from_rows(&[vec![0.0; 2], vec![0.0; 2]]).unwrap();
        let (cited, citing) = raw_citation_counts(&zero);
        assert_eq!(cited.values(), [0.0, 0.0]);
        assert_eq!(citing.values(), [0.0, 0.0]);
    }

    #[test]
    fn impact_ratio_cases() {
        let js = JournalSet::new(["a"]).unwrap();
        let c = WeightVector::raw(js.clone(), vec![100.0]).unwrap();
        let p = WeightVector::raw(js.clone(), vec![50.0]).unwrap();
        assert_eq!(impact_ratio(&c, &p).unwrap().values(), [2.0]);

        let c0 = WeightVector::raw(js.clone(), vec![0.0]).unwrap();
        let p7 = WeightVector::raw(js.clone(), vec![7.0]).unwrap();
        assert_eq!(impact_ratio(&c0, &p7).unwrap().values(), [0.0]);

        let p0 = WeightVector::raw(js.clone(), vec![0.0]).unwrap();
        assert!(matches!(
            impact_ratio(&c, &p0),
            Err(Error::NonPositivePublications { .. })
        ));

        let other = WeightVector::raw(JournalSet::new(["b"]).unwrap(), vec![1.0]).unwrap();
        assert_eq!(impact_ratio(&c, &other).unwrap_err(), Error::JournalMismatch);
    }

    #[test]
    fn self_citations_inflate_impact_linearly() {
        // 35% more citations at fixed publications: 35% higher impact
        let js = JournalSet::new(["a", "b"]).unwrap();
        let p = WeightVector::raw(js.clone(), vec![40.0, 13.0]).unwrap();
        let c = WeightVector::raw(js.clone(), vec![100.0, 77.0]).unwrap();
        let inflated = WeightVector::raw(js, c.values().iter().map(|v| v * 1.35).collect()).unwrap();
        let before = impact_ratio(&c, &p).unwrap();
        let after = impact_ratio(&inflated, &p).unwrap();
        for (a, b) in after.values().iter().zip(before.values()) {
            assert!(((a / b) - 1.35).abs() <= 1e-14);
        }
    }

    #[test]
    fn diagnostics_for_price_journal_of_biological_chemistry() {
        let d = self_citation_diagnostics(&price_1981());
        let jbc = &d.entries[0];
        assert_eq!(jbc.self_citations, 9384.0);
        assert_eq!(jbc.cited_by_others, 18212.0);
        assert_eq!(jbc.citing_others, 12652.0);
        assert!(close(jbc.self_cited_rate.unwrap(), 0.340, 5e-4));
        assert!(close(jbc.self_citing_rate.unwrap(), 0.426, 5e-4));
        assert!(close(jbc.cited_citing_ratio_with.unwrap(), 1.252, 5e-4));
        assert!(close(jbc.cited_citing_ratio_without.unwrap(), 1.439, 5e-4));
        assert_eq!(d.grand_total, 103720.0);
        assert_eq!(d.others_block(0), 103720.0 - 9384.0 - 18212.0 - 12652.0);
    }

    #[test]
    fn diagnostics_flag_zero_denominators() {
        let m = CitationMatrix::from_rows(&[vec![5.0, 1.0], vec![0.0, 0.0]]).unwrap();
        let d = self_citation_diagnostics(&m);
        // journal 1 cites only itself: g = 0
        assert_eq!(d.entries[0].citing_others, 0.0);
        assert_eq!(d.entries[0].cited_citing_ratio_without, None);
        // journal 2 is never cited and never cites itself
        assert_eq!(d.entries[1].self_cited_rate, None);
        assert_eq!(d.entries[1].self_citing_rate, Some(0.0));
        let empty = CitationMatrix::from_rows(&[vec![0.0; 2], vec![0.0; 2]]).unwrap();
        let d = self_citation_diagnostics(&empty);
        assert!(d
            .entries
            .iter()
            .all(|e| e.self_cited_rate.is_none() && e.cited_citing_ratio_with.is_none()));
    }
}
