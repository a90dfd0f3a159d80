//! Randomized unit-disk-graph sweep.
//!
//! Every `(n, r, trial)` cell draws one graph from a seed derived with
//! [`trial_seed`] and runs every configured algorithm on that same graph, so
//! sizes are paired. Records are sorted by `(n, r, trial, algorithm)` before
//! they are returned, whatever order the worker threads finished in.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;
use std::io::{self, Write};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::baselines::{das_cds, greedy_ds, wu_li_cds};
use crate::cds::edc_cds;
use crate::edc::{edc_ds_basic, edc_ds_improved, DsAlgorithm};
use crate::graph::{
    connected_components, generate_udg, is_cds_per_component, is_dominating_set, mix64, Graph,
};
use crate::{Error, Result};

#[derive(
    Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, clap::ValueEnum,
)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    EdcDs,
    EdcDsImproved,
    EdcCds,
    GreedyDs,
    WuLi,
    GreedyCds,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::EdcDs,
        Algorithm::EdcDsImproved,
        Algorithm::EdcCds,
        Algorithm::GreedyDs,
        Algorithm::WuLi,
        Algorithm::GreedyCds,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::EdcDs => "edc-ds",
            Algorithm::EdcDsImproved => "edc-ds-improved",
            Algorithm::EdcCds => "edc-cds",
            Algorithm::GreedyDs => "greedy-ds",
            Algorithm::WuLi => "wu-li",
            Algorithm::GreedyCds => "greedy-cds",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|a| a.name() == name)
    }

    /// Whether the output is meant to be connected in every component.
    pub fn is_connected_family(self) -> bool {
        matches!(self, Algorithm::EdcCds | Algorithm::WuLi | Algorithm::GreedyCds)
    }
}

/// Output of one algorithm on one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub set: Vec<crate::NodeId>,
    /// EDC selection iterations (of the DS stage for `edc-cds`); 0 for baselines.
    pub iterations: usize,
}

/// Runs `algorithm` on `g`. `cds_input` picks the DS feeding `edc-cds`.
pub fn run_algorithm(algorithm: Algorithm, g: &Graph, cds_input: DsAlgorithm) -> Outcome {
    match algorithm {
        Algorithm::EdcDs => {
            let r = edc_ds_basic(g);
            Outcome {
                set: r.dominators,
                iterations: r.iterations,
            }
        }
        Algorithm::EdcDsImproved => {
            let r = edc_ds_improved(g);
            Outcome {
                set: r.dominators,
                iterations: r.iterations,
            }
        }
        Algorithm::EdcCds => {
            let ds = cds_input.run(g);
            let cds = edc_cds(g, &ds.dominators).expect("EDC dominating sets are valid");
            Outcome {
                set: cds.cds,
                iterations: ds.iterations,
            }
        }
        Algorithm::GreedyDs => Outcome {
            set: greedy_ds(g),
            iterations: 0,
        },
        Algorithm::WuLi => Outcome {
            set: wu_li_cds(g),
            iterations: 0,
        },
        Algorithm::GreedyCds => Outcome {
            set: das_cds(g),
            iterations: 0,
        },
    }
}

/// DS algorithms must dominate; CDS algorithms must form a CDS per component.
pub fn is_valid_output(algorithm: Algorithm, g: &Graph, set: &[crate::NodeId]) -> bool {
    if algorithm.is_connected_family() {
        is_cds_per_component(g, set)
    } else {
        is_dominating_set(g, set)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct BenchConfig {
    pub n_values: Vec<usize>,
    pub radii: Vec<f64>,
    pub area_side: f64,
    pub trials: usize,
    pub base_seed: u64,
    pub algorithms: Vec<Algorithm>,
    /// Dominating set handed to the `edc-cds` pipeline.
    pub cds_input: CdsInput,
    /// Measure wall-clock time per run. Off by default: timings are the only
    /// non-reproducible column and are written as 0 when disabled.
    pub timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum CdsInput {
    Basic,
    Improved,
}

impl From<CdsInput> for DsAlgorithm {
    fn from(input: CdsInput) -> Self {
        match input {
            CdsInput::Basic => DsAlgorithm::Basic,
            CdsInput::Improved => DsAlgorithm::Improved,
        }
    }
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            n_values: (10..=100).step_by(10).collect(),
            radii: vec![25.0, 50.0],
            area_side: 100.0,
            trials: 200,
            base_seed: 0,
            algorithms: Algorithm::ALL.to_vec(),
            cds_input: CdsInput::Improved,
            timing: false,
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        if self.trials == 0 {
            return bad("trials must be at least 1".into());
        }
        if self.n_values.is_empty() {
            return bad("n_values must not be empty".into());
        }
        if self.radii.is_empty() {
            return bad("radii must not be empty".into());
        }
        if let Some(r) = self.radii.iter().find(|r| !(**r > 0.0 && r.is_finite())) {
            return bad(format!("radius must be positive, got {r}"));
        }
        if !(self.area_side > 0.0 && self.area_side.is_finite()) {
            return bad(format!("area side must be positive, got {}", self.area_side));
        }
        if self.algorithms.is_empty() {
            return bad("algorithms must not be empty".into());
        }
        let distinct: HashSet<_> = self.algorithms.iter().collect();
        if distinct.len() != self.algorithms.len() {
            return bad("algorithms must not repeat".into());
        }
        let mut radii = HashSet::new();
        if !self.radii.iter().all(|r| radii.insert(r.to_bits())) {
            return bad("radii must not repeat".into());
        }
        let mut ns = HashSet::new();
        if !self.n_values.iter().all(|n| ns.insert(*n)) {
            return bad("n_values must not repeat".into());
        }
        Ok(())
    }

    /// Parses the TOML form, e.g.
    ///
    /// ```toml
    /// n_values = [10, 20, 30]
    /// radii = [25.0, 50.0]
    /// trials = 50
    /// base_seed = 7
    /// algorithms = ["edc-ds", "edc-cds"]
    /// ```
    ///
    /// Missing keys keep their defaults.
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }
}

/// Seed of trial `trial` in cell `(n, r)`:
/// `base ^ mix64(mix64(mix64(n) ^ r.to_bits()) ^ trial)`.
pub fn trial_seed(base_seed: u64, n: usize, radius: f64, trial: usize) -> u64 {
    base_seed ^ mix64(mix64(mix64(n as u64) ^ radius.to_bits()) ^ trial as u64)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialRecord {
    pub n: usize,
    pub r: f64,
    pub trial: usize,
    pub seed: u64,
    pub algorithm: Algorithm,
    pub size: usize,
    pub valid: bool,
    pub connected: bool,
    pub components: usize,
    pub iterations: usize,
    pub runtime_us: u64,
}

pub const TRIAL_CSV_HEADER: &str =
    "n,r,trial,seed,algo,size,valid,connected,components,iterations,runtime_us";
pub const SUMMARY_CSV_HEADER: &str = "r,algo,n,mean_size,sd_size,mean_ratio,connected_frac";
pub const COMPARISON_CSV_HEADER: &str = "r,n,algo,baseline,mean_diff,wins,ties,losses";

fn run_cell(config: &BenchConfig, n: usize, r: f64, trial: usize) -> Result<Vec<TrialRecord>> {
    let seed = trial_seed(config.base_seed, n, r, trial);
    let geo = generate_udg(n, r, config.area_side, seed)?;
    let g = geo.graph();
    let components = connected_components(g).len();
    let cds_input = config.cds_input.into();
    let mut records = Vec::with_capacity(config.algorithms.len());
    for &algorithm in &config.algorithms {
        let started = config.timing.then(Instant::now);
        let outcome = run_algorithm(algorithm, g, cds_input);
        let runtime_us = started.map_or(0, |t| t.elapsed().as_micros() as u64);
        records.push(TrialRecord {
            n,
            r,
            trial,
            seed,
            algorithm,
            size: outcome.set.len(),
            valid: is_valid_output(algorithm, g, &outcome.set),
            connected: components <= 1,
            components,
            iterations: outcome.iterations,
            runtime_us,
        });
    }
    Ok(records)
}

/// Runs the whole sweep on the rayon pool.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<TrialRecord>> {
    config.validate()?;
    let mut cells = Vec::new();
    for &n in &config.n_values {
        for &r in &config.radii {
            for trial in 0..config.trials {
                cells.push((n, r, trial));
            }
        }
    }
    let mut seeds = HashSet::with_capacity(cells.len());
    for &(n, r, trial) in &cells {
        if !seeds.insert(trial_seed(config.base_seed, n, r, trial)) {
            return Err(Error::InvalidParameter(format!(
                "seed collision at n={n} r={r} trial={trial}"
            )));
        }
    }
    let nested: Vec<Vec<TrialRecord>> = cells
        .par_iter()
        .map(|&(n, r, trial)| run_cell(config, n, r, trial))
        .collect::<Result<_>>()?;
    let mut records: Vec<TrialRecord> = nested.into_iter().flatten().collect();
    records.sort_by(|a, b| {
        a.n.cmp(&b.n)
            .then(a.r.total_cmp(&b.r))
            .then(a.trial.cmp(&b.trial))
            .then(a.algorithm.cmp(&b.algorithm))
    });
    Ok(records)
}

pub fn write_trial_csv<W: Write>(out: &mut W, records: &[TrialRecord]) -> io::Result<()> {
    writeln!(out, "{TRIAL_CSV_HEADER}")?;
    for rec in records {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            rec.n,
            rec.r,
            rec.trial,
            rec.seed,
            rec.algorithm.name(),
            rec.size,
            rec.valid,
            rec.connected,
            rec.components,
            rec.iterations,
            rec.runtime_us
        )?;
    }
    Ok(())
}

/// Aggregate of one `(r, algorithm, n)` cell.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SummaryRow {
    pub r: f64,
    pub algorithm: Algorithm,
    pub n: usize,
    pub trials: usize,
    pub mean_size: f64,
    /// Sample standard deviation, 0 for a single trial.
    pub sd_size: f64,
    pub mean_ratio: f64,
    pub connected_frac: f64,
}

/// Means and spreads per `(r, algorithm, n)`, sorted in that order so each
/// `(r, algorithm)` pair forms one contiguous series over `n`.
pub fn summarize(records: &[TrialRecord]) -> Result<Vec<SummaryRow>> {
    if records.is_empty() {
        return Err(Error::InvalidParameter("nothing to summarize".into()));
    }
    // radii are positive, so their bit patterns sort numerically
    let mut cells: BTreeMap<(u64, Algorithm, usize), Vec<&TrialRecord>> = BTreeMap::new();
    for rec in records {
        cells
            .entry((rec.r.to_bits(), rec.algorithm, rec.n))
            .or_default()
            .push(rec);
    }
    Ok(cells
        .into_iter()
        .map(|((r, algorithm, n), recs)| {
            let count = recs.len() as f64;
            let mean_size = recs.iter().map(|r| r.size as f64).sum::<f64>() / count;
            let sd_size = if recs.len() > 1 {
                let ss: f64 = recs.iter().map(|r| (r.size as f64 - mean_size).powi(2)).sum();
                (ss / (count - 1.0)).sqrt()
            } else {
                0.0
            };
            let mean_ratio = if n == 0 {
                0.0
            } else {
                recs.iter().map(|r| r.size as f64 / n as f64).sum::<f64>() / count
            };
            let connected_frac = recs.iter().filter(|r| r.connected).count() as f64 / count;
            SummaryRow {
                r: f64::from_bits(r),
                algorithm,
                n,
                trials: recs.len(),
                mean_size,
                sd_size,
                mean_ratio,
                connected_frac,
            }
        })
        .collect())
}

pub fn write_summary_csv<W: Write>(out: &mut W, rows: &[SummaryRow]) -> io::Result<()> {
    writeln!(out, "{SUMMARY_CSV_HEADER}")?;
    for row in rows {
        writeln!(
            out,
            "{},{},{},{:.6},{:.6},{:.6},{:.6}",
            row.r,
            row.algorithm.name(),
            row.n,
            row.mean_size,
            row.sd_size,
            row.mean_ratio,
            row.connected_frac
        )?;
    }
    Ok(())
}

/// Paired size difference `algorithm - baseline` over identical graphs.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Comparison {
    pub r: f64,
    pub n: usize,
    pub algorithm: Algorithm,
    pub baseline: Algorithm,
    pub mean_diff: f64,
    /// Trials where `algorithm` produced the strictly smaller set.
    pub wins: usize,
    pub ties: usize,
    pub losses: usize,
}

/// EDC variant against the stand-in of its family.
pub const COMPARED_PAIRS: [(Algorithm, Algorithm); 3] = [
    (Algorithm::EdcDsImproved, Algorithm::GreedyDs),
    (Algorithm::EdcCds, Algorithm::WuLi),
    (Algorithm::EdcCds, Algorithm::GreedyCds),
];

/// Paired comparisons for every pair of [`COMPARED_PAIRS`] present in the records.
pub fn compare(records: &[TrialRecord]) -> Vec<Comparison> {
    let mut sizes: BTreeMap<(u64, usize), BTreeMap<usize, BTreeMap<Algorithm, usize>>> = BTreeMap::new();
    for rec in records {
        sizes
            .entry((rec.r.to_bits(), rec.n))
            .or_default()
            .entry(rec.trial)
            .or_default()
            .insert(rec.algorithm, rec.size);
    }
    let mut out = Vec::new();
    for ((r, n), trials) in &sizes {
        for (algorithm, baseline) in COMPARED_PAIRS {
            let pairs: Vec<(usize, usize)> = trials
                .values()
                .filter_map(|t| Some((*t.get(&algorithm)?, *t.get(&baseline)?)))
                .collect();
            if pairs.is_empty() {
                continue;
            }
            let mean_diff = pairs.iter().map(|&(a, b)| a as f64 - b as f64).sum::<f64>() / pairs.len() as f64;
            out.push(Comparison {
                r: f64::from_bits(*r),
                n: *n,
                algorithm,
                baseline,
                mean_diff,
                wins: pairs.iter().filter(|(a, b)| a < b).count(),
                ties: pairs.iter().filter(|(a, b)| a == b).count(),
                losses: pairs.iter().filter(|(a, b)| a > b).count(),
            });
        }
    }
    out
}

pub fn write_comparison_csv<W: Write>(out: &mut W, rows: &[Comparison]) -> io::Result<()> {
    writeln!(out, "{COMPARISON_CSV_HEADER}")?;
    for c in rows {
        writeln!(
            out,
            "{},{},{},{},{:.6},{},{},{}",
            c.r,
            c.n,
            c.algorithm.name(),
            c.baseline.name(),
            c.mean_diff,
            c.wins,
            c.ties,
            c.losses
        )?;
    }
    Ok(())
}

/// Renders records as trial CSV text.
pub fn trial_csv(records: &[TrialRecord]) -> String {
    let mut buf = Vec::new();
    write_trial_csv(&mut buf, records).expect("writing to memory");
    String::from_utf8(buf).expect("CSV is ASCII")
}

/// Renders summary rows as CSV text.
pub fn summary_csv(rows: &[SummaryRow]) -> String {
    let mut buf = Vec::new();
    write_summary_csv(&mut buf, rows).expect("writing to memory");
    String::from_utf8(buf).expect("CSV is ASCII")
}

/// One-line human summary of validity, for logging.
pub fn validity_report(records: &[TrialRecord]) -> String {
    let mut by_algo: BTreeMap<Algorithm, (usize, usize)> = BTreeMap::new();
    for rec in records {
        let e = by_algo.entry(rec.algorithm).or_default();
        e.0 += rec.valid as usize;
        e.1 += 1;
    }
    let mut s = String::new();
    for (a, (ok, total)) in by_algo {
        let _ = write!(s, "{}={ok}/{total} ", a.name());
    }
    s.trim_end().to_string()
}
