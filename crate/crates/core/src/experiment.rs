//! Seeded experiment harness: spectral expansion of zig-zag products and of
//! powers of reduced zig-zag products over many random labellings, with the
//! matching closed-form bounds.
//!
//! Protocol per run: one random `M`-regular edge multiset `G` on `[N]` and
//! one random `D`-regular multiset `H` on `[M]` are drawn from the master
//! seed. Each trial draws a fresh two-way labelling of `G` and builds the
//! product; `H` keeps a fixed identity-order labelling, since the component
//! labelling does not affect the product's transition matrix. Trials own
//! disjoint RNG streams, so they can run concurrently while aggregation by
//! trial index keeps output bytes identical.

use std::io::Write;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::products::{reduced_zigzag, zigzag};
use crate::randgen::{canonical_labelling, config_model, random_labelling, SeededRng};
use crate::spectral::{bound_f, bound_f_prime, lambda, transition_matrix, TransitionMatrixOf};
use crate::tolerance::Tolerances;

/// Stream id carrying the edge multiset of `G`.
pub const STREAM_G_MULTISET: u64 = 0;
/// Stream id carrying the edge multiset of `H`.
pub const STREAM_H_MULTISET: u64 = 1;
/// Trial `i` labels `G` from stream `STREAM_TRIAL_BASE + i`.
pub const STREAM_TRIAL_BASE: u64 = 2;

/// Parameters of one experiment run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExperimentParams {
    /// Vertices of the outer graph `G`.
    pub n: usize,
    /// Degree of `G`; also the vertex count of `H`.
    pub m: usize,
    /// Degree of `H`.
    pub d: usize,
    pub trials: usize,
    pub master_seed: u64,
}

/// The three desk-scale parameter sets used throughout the experiments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Case {
    I,
    II,
    III,
}

impl Case {
    /// `(n, m, d)` for the case.
    pub fn dims(self) -> (usize, usize, usize) {
        match self {
            Case::I => (50, 40, 30),
            Case::II => (30, 20, 10),
            Case::III => (10, 5, 3),
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "i" | "1" => Some(Case::I),
            "ii" | "2" => Some(Case::II),
            "iii" | "3" => Some(Case::III),
            _ => None,
        }
    }
}

/// Per-run aggregate: trial expansions with their mean, maximum, and the
/// theorem bound they must respect.
#[derive(Debug, Clone)]
pub struct ExperimentReport {
    pub params: ExperimentParams,
    pub lambda_g: f64,
    pub lambda_h: f64,
    pub per_trial: Vec<f64>,
    pub ave_lambda: f64,
    pub max_lambda: f64,
    pub bound: f64,
    /// Power index for reduced-power experiments; `None` for plain zig-zag.
    pub k: Option<usize>,
}

impl ExperimentReport {
    fn aggregate(
        params: ExperimentParams,
        lambda_g: f64,
        lambda_h: f64,
        per_trial: Vec<f64>,
        bound: f64,
        k: Option<usize>,
    ) -> Self {
        let ave_lambda = per_trial.iter().sum::<f64>() / per_trial.len() as f64;
        let max_lambda = per_trial.iter().cloned().fold(f64::MIN, f64::max);
        Self {
            params,
            lambda_g,
            lambda_h,
            per_trial,
            ave_lambda,
            max_lambda,
            bound,
            k,
        }
    }

    /// Checks the structural invariants: the mean matches per-trial values,
    /// and no trial exceeds the bound beyond `slack`.
    pub fn check(&self, slack: f64) -> Result<()> {
        let ave = self.per_trial.iter().sum::<f64>() / self.per_trial.len() as f64;
        if (ave - self.ave_lambda).abs() > 1e-12 {
            return Err(Error::InvalidArgument(format!(
                "ave mismatch: {} vs {}",
                ave, self.ave_lambda
            )));
        }
        if self.max_lambda > self.bound + slack {
            return Err(Error::InvalidArgument(format!(
                "max lambda {} exceeds bound {} (+{:e})",
                self.max_lambda, self.bound, slack
            )));
        }
        Ok(())
    }
}

fn validate_params(p: &ExperimentParams) -> Result<()> {
    if p.n == 0 || p.m == 0 || p.d == 0 {
        return Err(Error::InvalidArgument(
            "experiment needs n, m, d all >= 1".into(),
        ));
    }
    if p.trials == 0 {
        return Err(Error::InvalidArgument(
            "experiment needs trials >= 1".into(),
        ));
    }
    Ok(())
}

struct RunInputs {
    g_edges: crate::graph::EdgeMultiset,
    h: crate::graph::LabelledDigraph,
    lambda_g: f64,
    lambda_h: f64,
}

fn prepare(p: &ExperimentParams, tols: &Tolerances) -> Result<RunInputs> {
    validate_params(p)?;
    let g_edges = config_model(
        p.n,
        p.m,
        &mut SeededRng::new(p.master_seed, STREAM_G_MULTISET),
    );
    let h_edges = config_model(
        p.m,
        p.d,
        &mut SeededRng::new(p.master_seed, STREAM_H_MULTISET),
    );
    let h = canonical_labelling(&h_edges, p.d)?;
    // The expansion of G depends on its edge multiset only; any labelling do.
    let g0 = canonical_labelling(&g_edges, p.m)?;
    let lambda_g = lambda(&transition_matrix::<f64>(&g0), tols)?;
    let lambda_h = lambda(&transition_matrix::<f64>(&h), tols)?;
    Ok(RunInputs {
        g_edges,
        h,
        lambda_g,
        lambda_h,
    })
}

/// Zig-zag experiment: over `trials` random labellings of `G`, the spectral
/// expansion of the product of `G` with `(H, H)`, against the closed-form
/// bound from the component expansions.
pub fn run_zigzag(params: &ExperimentParams, tols: &Tolerances) -> Result<ExperimentReport> {
    let inputs = prepare(params, tols)?;
    let per_trial: Vec<f64> = (0..params.trials)
        .into_par_iter()
        .map(|i| -> Result<f64> {
            let mut rng = SeededRng::new(params.master_seed, STREAM_TRIAL_BASE + i as u64);
            let gi = random_labelling(&inputs.g_edges, params.m, &mut rng)?;
            let z = zigzag(&gi, &inputs.h, &inputs.h)?;
            lambda(&transition_matrix::<f64>(&z), tols)
        })
        .collect::<Result<_>>()?;
    let bound = bound_f(inputs.lambda_g, inputs.lambda_h, inputs.lambda_h)?;
    Ok(ExperimentReport::aggregate(
        *params,
        inputs.lambda_g,
        inputs.lambda_h,
        per_trial,
        bound,
        None,
    ))
}

/// Reduced-power experiment: one report per `k = 1..=k_max`, with the
/// expansion of the `k`-th matrix power of the reduced product per trial and
/// the bound `f'(lambda_G, lambda_H)^(k-1)`.
pub fn run_reduced_power(
    params: &ExperimentParams,
    k_max: usize,
    tols: &Tolerances,
) -> Result<Vec<ExperimentReport>> {
    if k_max == 0 {
        return Err(Error::InvalidArgument("k_max must be >= 1".into()));
    }
    let inputs = prepare(params, tols)?;
    // rows[i][k-1] = lambda((G z' H)^k) for trial i.
    let rows: Vec<Vec<f64>> = (0..params.trials)
        .into_par_iter()
        .map(|i| -> Result<Vec<f64>> {
            let mut rng = SeededRng::new(params.master_seed, STREAM_TRIAL_BASE + i as u64);
            let gi = random_labelling(&inputs.g_edges, params.m, &mut rng)?;
            let zp = reduced_zigzag(&gi, &inputs.h)?;
            let base = transition_matrix::<f64>(&zp);
            let mut row = Vec::with_capacity(k_max);
            let mut pk = base.matrix().clone();
            for k in 1..=k_max {
                if k > 1 {
                    pk = &pk * base.matrix();
                }
                let tm = TransitionMatrixOf::from_matrix_unchecked(pk.clone());
                row.push(lambda(&tm, tols)?);
            }
            Ok(row)
        })
        .collect::<Result<_>>()?;

    let fp = bound_f_prime(inputs.lambda_g, inputs.lambda_h)?;
    let reports = (1..=k_max)
        .map(|k| {
            let per_trial: Vec<f64> = rows.iter().map(|r| r[k - 1]).collect();
            ExperimentReport::aggregate(
                *params,
                inputs.lambda_g,
                inputs.lambda_h,
                per_trial,
                fp.powi(k as i32 - 1),
                Some(k),
            )
        })
        .collect();
    Ok(reports)
}

/// One-row CSV for a zig-zag experiment: component expansions, trial mean
/// and maximum, and the bound, at 7 decimals.
pub fn write_zigzag_csv<W: Write>(report: &ExperimentReport, w: &mut W) -> std::io::Result<()> {
    writeln!(w, "lambda_g,lambda_h,ave_lambda,max_lambda,f")?;
    writeln!(
        w,
        "{:.7},{:.7},{:.7},{:.7},{:.7}",
        report.lambda_g, report.lambda_h, report.ave_lambda, report.max_lambda, report.bound
    )
}

/// Per-power CSV for a reduced-power experiment, one row per `k`.
pub fn write_reduced_power_csv<W: Write>(
    reports: &[ExperimentReport],
    w: &mut W,
) -> std::io::Result<()> {
    writeln!(w, "k,ave_lambda,max_lambda,bound")?;
    for r in reports {
        writeln!(
            w,
            "{},{:.7},{:.7},{:.7}",
            r.k.expect("reduced-power report carries k"),
            r.ave_lambda,
            r.max_lambda,
            r.bound
        )?;
    }
    Ok(())
}
