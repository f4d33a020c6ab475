//! Benchmark harness: runs query/target pairs with and without symmetry
//! breaking and reports per-run stats plus derived reduction ratios as CSV.
//!
//! For every pair the harness runs both modes `repetitions` times. Counters
//! must agree across repetitions, and on pairs where both modes completed
//! the match counts must satisfy `no_sbc = sbc * |Aut(query)|` exactly; a
//! violation is an error, not a warning. Independent pairs may be spread
//! over a worker pool, results are merged in input order either way.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Duration;

use crate::engine::{count_matches, SearchConfig};
use crate::error::{Error, Result};
use crate::graph::LabeledMultigraph;
use crate::symmetry::compute_automorphism_matrix;
use crate::synth::{generate_ba_multigraph, make_topology_query, SynthConfig, TopologyKind};

#[derive(Debug, Clone)]
pub struct BenchPair {
    pub query_name: String,
    pub target_name: String,
    /// "path" / "star" / "clique" for generated queries, "-" for files.
    pub topology: String,
    pub query: LabeledMultigraph,
    pub target: LabeledMultigraph,
}

#[derive(Debug, Clone)]
pub struct BenchOptions {
    pub repetitions: usize,
    pub threads: usize,
    pub timeout: Option<Duration>,
    pub max_candidate_pairs: Option<u64>,
    /// Report elapsed_ms as zero for byte-reproducible output.
    pub zero_time: bool,
}

impl Default for BenchOptions {
    fn default() -> Self {
        BenchOptions {
            repetitions: 1,
            threads: 1,
            timeout: None,
            max_candidate_pairs: None,
            zero_time: false,
        }
    }
}

/// One stats row: a single run of one pair in one mode.
#[derive(Debug, Clone)]
pub struct BenchRow {
    pub query: String,
    pub target: String,
    pub topology: String,
    pub k: usize,
    pub aut_count: u64,
    pub sbc: bool,
    pub matches: u64,
    pub candidate_pairs: u64,
    pub elapsed_ms: u64,
    pub completed: bool,
}

/// Derived per-pair ratios (no-SBC over SBC). Empty when a side is
/// incomplete or a denominator is zero.
#[derive(Debug, Clone)]
pub struct RatioRow {
    pub query: String,
    pub target: String,
    pub topology: String,
    pub k: usize,
    pub aut_count: u64,
    pub match_ratio: Option<u64>,
    pub pair_ratio: Option<f64>,
    pub time_ratio: Option<f64>,
}

#[derive(Debug)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub ratios: Vec<RatioRow>,
}

pub const STATS_HEADER: &str = "query,target,topology,k,aut_count,sbc,matches,candidate_pairs,elapsed_ms,completed";
pub const RATIOS_HEADER: &str = "query,target,topology,k,aut_count,match_ratio,pair_ratio,time_ratio";

impl BenchReport {
    pub fn stats_csv(&self) -> String {
        let mut out = String::from(STATS_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{}\n",
                r.query, r.target, r.topology, r.k, r.aut_count, r.sbc, r.matches, r.candidate_pairs,
                r.elapsed_ms, r.completed
            ));
        }
        out
    }

    pub fn ratios_csv(&self) -> String {
        let mut out = String::from(RATIOS_HEADER);
        out.push('\n');
        for r in &self.ratios {
            let fmt_u = |v: &Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
            let fmt_f = |v: &Option<f64>| v.map(|x| format!("{x:.3}")).unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                r.query,
                r.target,
                r.topology,
                r.k,
                r.aut_count,
                fmt_u(&r.match_ratio),
                fmt_f(&r.pair_ratio),
                fmt_f(&r.time_ratio),
            ));
        }
        out
    }
}

struct PairOutcome {
    rows: Vec<BenchRow>,
    ratio: RatioRow,
}

fn run_pair(pair: &BenchPair, opts: &BenchOptions) -> Result<PairOutcome> {
    let k = pair.query.node_count();
    let aut_count = compute_automorphism_matrix(&pair.query)?.len() as u64;
    let mut rows = Vec::new();
    // (matches, pairs, median elapsed_ms, completed) per mode
    let mut summary = [(0u64, 0u64, 0u64, true); 2];
    for (slot, sbc) in [(0, true), (1, false)] {
        let cfg = SearchConfig {
            sbc_enabled: sbc,
            timeout: opts.timeout,
            max_candidate_pairs: opts.max_candidate_pairs,
            ..SearchConfig::default()
        };
        let mut elapsed = Vec::with_capacity(opts.repetitions);
        let mut first: Option<(u64, u64, bool)> = None;
        for _ in 0..opts.repetitions.max(1) {
            let report = count_matches(&pair.query, &pair.target, &cfg)?;
            let key = (report.matches, report.candidate_pairs, report.completed);
            match first {
                None => first = Some(key),
                Some(prev) => {
                    if prev != key && prev.2 && key.2 {
                        return Err(Error::InvalidConfig(
                            "counters differ between repetitions of a completed run".into(),
                        ));
                    }
                }
            }
            elapsed.push(report.elapsed.as_millis() as u64);
            rows.push(BenchRow {
                query: pair.query_name.clone(),
                target: pair.target_name.clone(),
                topology: pair.topology.clone(),
                k,
                aut_count,
                sbc,
                matches: report.matches,
                candidate_pairs: report.candidate_pairs,
                elapsed_ms: if opts.zero_time { 0 } else { report.elapsed.as_millis() as u64 },
                completed: report.completed,
            });
        }
        elapsed.sort_unstable();
        let (matches, pairs, completed) = first.unwrap();
        summary[slot] = (matches, pairs, elapsed[elapsed.len() / 2], completed);
    }

    let (sbc_matches, sbc_pairs, sbc_ms, sbc_done) = summary[0];
    let (raw_matches, raw_pairs, raw_ms, raw_done) = summary[1];
    let both_done = sbc_done && raw_done;
    if both_done && raw_matches != sbc_matches * aut_count {
        return Err(Error::QuotientViolation {
            no_sbc: raw_matches,
            sbc: sbc_matches,
            aut: aut_count,
        });
    }
    if raw_pairs < sbc_pairs {
        return Err(Error::InvalidConfig(format!(
            "candidate pairs decreased without symmetry breaking: {raw_pairs} < {sbc_pairs}"
        )));
    }
    let ratio = RatioRow {
        query: pair.query_name.clone(),
        target: pair.target_name.clone(),
        topology: pair.topology.clone(),
        k,
        aut_count,
        match_ratio: (both_done && sbc_matches > 0).then(|| raw_matches / sbc_matches),
        pair_ratio: (sbc_pairs > 0).then(|| raw_pairs as f64 / sbc_pairs as f64),
        time_ratio: (both_done && sbc_ms > 0 && !opts.zero_time).then(|| raw_ms as f64 / sbc_ms as f64),
    };
    Ok(PairOutcome { rows, ratio })
}

/// Runs every pair in both modes and collects stats and ratio rows in input
/// order.
pub fn run_bench(pairs: &[BenchPair], opts: &BenchOptions) -> Result<BenchReport> {
    if opts.repetitions < 1 {
        return Err(Error::InvalidConfig("repetitions must be >= 1".into()));
    }
    let threads = opts.threads.max(1).min(pairs.len().max(1));
    let outcomes: Vec<Option<Result<PairOutcome>>> = if threads <= 1 {
        pairs.iter().map(|p| Some(run_pair(p, opts))).collect()
    } else {
        let slots: Vec<Mutex<Option<Result<PairOutcome>>>> =
            (0..pairs.len()).map(|_| Mutex::new(None)).collect();
        let next = AtomicUsize::new(0);
        std::thread::scope(|scope| {
            for _ in 0..threads {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= pairs.len() {
                        break;
                    }
                    let outcome = run_pair(&pairs[i], opts);
                    *slots[i].lock().unwrap() = Some(outcome);
                });
            }
        });
        slots.into_iter().map(|s| s.into_inner().unwrap()).collect()
    };

    let mut rows = Vec::new();
    let mut ratios = Vec::new();
    for outcome in outcomes {
        let outcome = outcome.expect("every pair slot is filled")?;
        rows.extend(outcome.rows);
        ratios.push(outcome.ratio);
    }
    Ok(BenchReport { rows, ratios })
}

/// A generation grid in the spirit of the symmetry experiments: unlabeled
/// preferential-attachment targets crossed with canonical topology queries.
#[derive(Debug, Clone)]
pub struct GridSpec {
    pub n: usize,
    pub densities: Vec<usize>,
    pub seeds: Vec<u64>,
    pub topologies: Vec<TopologyKind>,
    pub ks: Vec<usize>,
    /// Strip node labels from targets and queries (edges keep one shared
    /// label). When false, targets keep the single generated label.
    pub unlabeled: bool,
}

/// Materializes the grid as bench pairs: every (density, seed) target is
/// paired with every (topology, k) query.
pub fn grid_pairs(spec: &GridSpec) -> Result<Vec<BenchPair>> {
    let mut queries = Vec::new();
    for &kind in &spec.topologies {
        for &k in &spec.ks {
            let node_label = if spec.unlabeled { None } else { Some("1") };
            let query = make_topology_query(kind, k, node_label, "1")?;
            queries.push((kind, k, query));
        }
    }
    let mut pairs = Vec::new();
    for &d in &spec.densities {
        for &seed in &spec.seeds {
            let cfg = SynthConfig { n: spec.n, d, sigma: 1, nm: 1, gamma: 1, em: 1, seed };
            let mut target = generate_ba_multigraph(&cfg)?;
            if spec.unlabeled {
                target.clear_node_labels();
            }
            let target_name = format!("ba-n{}-d{}-s{}", spec.n, d, seed);
            for (kind, k, query) in &queries {
                pairs.push(BenchPair {
                    query_name: format!("{}-k{}", kind.name(), k),
                    target_name: target_name.clone(),
                    topology: kind.name().to_string(),
                    query: query.clone(),
                    target: target.clone(),
                });
            }
        }
    }
    Ok(pairs)
}
