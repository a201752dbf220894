//! Scaling harness: generate, order, solve, optionally check against the
//! oracle, and record timings plus machine-independent operation counters.

use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::{cocomparability_from_poset, random_intervals, random_poset, rng_from_seed, IntervalParams};
use crate::graph::{Graph, VertexOrdering};
use crate::ldfs::ldfs_plus_with_stats;
use crate::oracle::max_matching_reference;
use crate::rmm::rmm;

pub const CSV_HEADER: &str = "n,m,kind,seed,phase,nanos,unlinks,prepends";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BenchKind {
    /// Incomparability graphs of `random_poset(n, p)`, ordered by LDFS+.
    Poset,
    /// `random_intervals` with span `n`, solved on the I-ordering directly.
    Interval,
}

impl fmt::Display for BenchKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BenchKind::Poset => "poset",
            BenchKind::Interval => "interval",
        })
    }
}

impl FromStr for BenchKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "poset" => Ok(BenchKind::Poset),
            "interval" => Ok(BenchKind::Interval),
            _ => Err(Error::InvalidParameter(format!("unknown bench kind {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Phase {
    LdfsPlus,
    Rmm,
    Total,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub n: usize,
    pub m: usize,
    pub kind: BenchKind,
    pub seed: u64,
    pub phase: Phase,
    pub nanos: u64,
    pub unlinks: u64,
    pub prepends: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub kind: BenchKind,
    /// Relation probability for the poset family.
    pub p: f64,
    /// Maximum interval length for the interval family.
    pub max_length: f64,
    pub seed: u64,
    pub repetitions: usize,
    /// Sizes up to this are checked against the blossom oracle.
    pub oracle_threshold: usize,
    /// Shuffle σ before solving; used to exercise the mismatch path.
    pub corrupt_sigma: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            sizes: vec![1000, 2000, 4000, 8000],
            kind: BenchKind::Poset,
            p: 0.5,
            max_length: 4.0,
            seed: 1,
            repetitions: 3,
            oracle_threshold: 2000,
            corrupt_sigma: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchReport {
    pub records: Vec<BenchRecord>,
    /// `(n_prev, n, ratio)` of the fastest rmm repetition at consecutive sizes.
    pub doubling_ratios: Vec<(usize, usize, f64)>,
}

impl BenchReport {
    /// Largest `(visits + unlinks) / (n + m)` over all rmm records.
    pub fn max_operation_factor(&self) -> f64 {
        self.records
            .iter()
            .filter(|r| r.phase == Phase::Rmm)
            .map(|r| (r.unlinks + r.n as u64) as f64 / (r.n + r.m).max(1) as f64)
            .fold(0.0, f64::max)
    }

    pub fn ratio_table(&self) -> String {
        let mut out = String::from("n_prev\tn\trmm_ratio\n");
        for (a, b, r) in &self.doubling_ratios {
            out.push_str(&format!("{a}\t{b}\t{r:.3}\n"));
        }
        out
    }
}

fn instance(cfg: &BenchConfig, n: usize) -> Result<(Graph, VertexOrdering)> {
    match cfg.kind {
        BenchKind::Poset => Ok(cocomparability_from_poset(&random_poset(n, cfg.p, cfg.seed)?)),
        BenchKind::Interval => {
            let inst = random_intervals(n, IntervalParams::sparse(n, cfg.max_length), cfg.seed)?;
            Ok((inst.graph, inst.ordering))
        }
    }
}

fn nanos(start: Instant) -> u64 {
    start.elapsed().as_nanos().try_into().unwrap_or(u64::MAX)
}

/// Runs the benchmark and writes one CSV row per phase and repetition to
/// `csv_out`, header first. Fails with [`Error::Verification`] as soon as
/// a checked instance disagrees with the oracle.
pub fn run_bench<W: Write>(cfg: &BenchConfig, csv_out: W) -> Result<BenchReport> {
    if cfg.sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter("bench sizes must be strictly ascending".into()));
    }
    if cfg.repetitions == 0 {
        return Err(Error::InvalidParameter("at least one repetition is required".into()));
    }
    let mut writer = csv::WriterBuilder::new().has_headers(false).from_writer(csv_out);
    writer.write_record(CSV_HEADER.split(','))?;
    let mut records = Vec::new();
    let mut fastest = Vec::new();
    for &n in &cfg.sizes {
        let (g, base) = instance(cfg, n)?;
        log::info!("bench n={n} m={} kind={}", g.m(), cfg.kind);
        let mut best = u64::MAX;
        for _ in 0..cfg.repetitions {
            let record = |phase, nanos, unlinks, prepends| BenchRecord {
                n,
                m: g.m(),
                kind: cfg.kind,
                seed: cfg.seed,
                phase,
                nanos,
                unlinks,
                prepends,
            };
            let mut rows = Vec::new();
            let t0 = Instant::now();
            let (mut sigma, prepends) = match cfg.kind {
                BenchKind::Poset => {
                    let (sigma, stats) = ldfs_plus_with_stats(&g, &base);
                    rows.push(record(Phase::LdfsPlus, nanos(t0), 0, stats.prepends));
                    (sigma, stats.prepends)
                }
                // The interval order is already an LDFS umbrella-free ordering.
                BenchKind::Interval => (base.clone(), 0),
            };
            if cfg.corrupt_sigma {
                let mut order = sigma.as_slice().to_vec();
                order.shuffle(&mut rng_from_seed(cfg.seed));
                sigma = VertexOrdering::new(order)?;
            }
            let t1 = Instant::now();
            let out = rmm(&g, &sigma);
            let rmm_nanos = nanos(t1);
            let total = nanos(t0);
            best = best.min(rmm_nanos);
            rows.push(record(Phase::Rmm, rmm_nanos, out.stats.unlinks, 0));
            rows.push(record(Phase::Total, total, out.stats.unlinks, prepends));
            if n <= cfg.oracle_threshold {
                let want = max_matching_reference(&g).len();
                if out.matching.len() != want {
                    return Err(Error::Verification(format!(
                        "oracle mismatch at n={n}: rmm found {}, maximum is {want}",
                        out.matching.len()
                    )));
                }
            }
            for row in rows {
                writer.serialize(&row)?;
                records.push(row);
            }
        }
        fastest.push((n, best));
    }
    writer.flush()?;
    let doubling_ratios = fastest
        .windows(2)
        .map(|w| (w[0].0, w[1].0, w[1].1 as f64 / w[0].1.max(1) as f64))
        .collect();
    Ok(BenchReport { records, doubling_ratios })
}
