//! Evaluating a whole knot table and summarizing the recursion sizes.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::laurent::LaurentPoly2;
use crate::skein::{homfly, homfly_memoized, EvalStats, HomflyCache, SkeinError};
use crate::table::{KnotTable, TableEntry};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BenchOptions {
    pub memo: bool,
    pub canonical_cache: bool,
    /// Worker threads; 0 or 1 runs on the calling thread.
    pub threads: usize,
}

impl Default for BenchOptions {
    fn default() -> Self {
        BenchOptions {
            memo: true,
            canonical_cache: false,
            threads: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub name: String,
    pub word: String,
    pub letters: usize,
    pub nodes_total: u64,
    pub nodes_peak: u64,
    pub max_depth: u32,
    pub cache_hits: u64,
    pub elapsed_ms: f64,
    pub polynomial: LaurentPoly2,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchFailure {
    pub name: String,
    pub error: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub entries: Vec<BenchRow>,
    pub failures: Vec<BenchFailure>,
    pub growth_metric: f64,
    pub total_elapsed_ms: f64,
}

/// Geometric mean over entries of `nodes_total^(1/letters)`. Entries with
/// no letters contribute a factor of 1; an empty table gives 1.
pub fn growth_metric(rows: impl IntoIterator<Item = (u64, usize)>) -> f64 {
    let mut sum = 0.0;
    let mut count = 0usize;
    for (nodes, letters) in rows {
        if letters > 0 {
            sum += (nodes as f64).ln() / letters as f64;
        }
        count += 1;
    }
    if count == 0 {
        1.0
    } else {
        (sum / count as f64).exp()
    }
}

fn run_entry(entry: &TableEntry, opts: BenchOptions) -> Result<BenchRow, BenchFailure> {
    let result: Result<(LaurentPoly2, EvalStats), SkeinError> = if opts.memo {
        let mut cache = if opts.canonical_cache {
            HomflyCache::canonicalizing()
        } else {
            HomflyCache::new()
        };
        homfly_memoized(&entry.word, &mut cache)
    } else {
        homfly(&entry.word)
    };
    match result {
        Ok((polynomial, stats)) => Ok(BenchRow {
            name: entry.name.clone(),
            word: entry.word.to_string(),
            letters: entry.word.len(),
            nodes_total: stats.nodes_total,
            nodes_peak: stats.nodes_peak,
            max_depth: stats.max_depth,
            cache_hits: stats.cache_hits,
            elapsed_ms: stats.elapsed_ms,
            polynomial,
        }),
        Err(e) => Err(BenchFailure {
            name: entry.name.clone(),
            error: e.to_string(),
        }),
    }
}

fn assemble(results: Vec<Result<BenchRow, BenchFailure>>, started: Instant) -> BenchReport {
    let mut entries = Vec::new();
    let mut failures = Vec::new();
    for r in results {
        match r {
            Ok(row) => entries.push(row),
            Err(f) => failures.push(f),
        }
    }
    let growth_metric = growth_metric(entries.iter().map(|r| (r.nodes_total, r.letters)));
    BenchReport {
        entries,
        failures,
        growth_metric,
        total_elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
    }
}

/// Every entry on the calling thread, each with a fresh cache.
pub fn run_bench_sequential(table: &KnotTable, opts: BenchOptions) -> BenchReport {
    let started = Instant::now();
    let results = table.entries.iter().map(|e| run_entry(e, opts)).collect();
    assemble(results, started)
}

/// Entries spread over a pool of `opts.threads` workers. Row order follows
/// the table either way.
#[cfg(feature = "parallel")]
pub fn run_bench_parallel(table: &KnotTable, opts: BenchOptions) -> BenchReport {
    use rayon::prelude::*;

    let started = Instant::now();
    let work = || {
        table
            .entries
            .par_iter()
            .map(|e| run_entry(e, opts))
            .collect::<Vec<_>>()
    };
    let results = match rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads)
        .build()
    {
        Ok(pool) => pool.install(work),
        Err(_) => work(),
    };
    assemble(results, started)
}

pub fn run_bench(table: &KnotTable, opts: BenchOptions) -> BenchReport {
    #[cfg(feature = "parallel")]
    if opts.threads > 1 {
        return run_bench_parallel(table, opts);
    }
    run_bench_sequential(table, opts)
}

impl BenchReport {
    /// Tab-separated table, one row per entry, then failures and totals.
    pub fn to_text(&self) -> String {
        let mut out =
            String::from("name\tletters\tnodes_total\tnodes_peak\telapsed_ms\tpolynomial\n");
        for r in &self.entries {
            out += &format!(
                "{}\t{}\t{}\t{}\t{:.3}\t{}\n",
                r.name, r.letters, r.nodes_total, r.nodes_peak, r.elapsed_ms, r.polynomial
            );
        }
        for f in &self.failures {
            out += &format!("FAILED\t{}\t{}\n", f.name, f.error);
        }
        out += &format!("growth_metric\t{:.4}\n", self.growth_metric);
        out += &format!("total_elapsed_ms\t{:.3}\n", self.total_elapsed_ms);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::parse_table;

    #[test]
    fn metric_edge_cases() {
        assert_eq!(growth_metric(std::iter::empty()), 1.0);
        assert_eq!(growth_metric([(1, 0)]), 1.0);
        assert!((growth_metric([(9, 2)]) - 3.0).abs() < 1e-12);
        assert!((growth_metric([(9, 2), (1, 0)]) - 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn small_table() {
        let t = parse_table("3_1\t[2; 1,1,1]\n4_1\t[3; 1,-2,1,-2]\n").unwrap();
        let r = run_bench(&t, BenchOptions::default());
        assert!(r.failures.is_empty());
        assert_eq!(r.entries.len(), 2);
        assert_eq!(
            r.entries[0].polynomial.to_string(),
            "-l^-4 - 2*l^-2 + l^-2*m^2"
        );
        assert!(r.to_text().contains("growth_metric\t"));
    }

    #[test]
    fn thread_counts_agree() {
        let t = parse_table("a\t[2; 1,1,1,1,1]\nb\t[3; 1,1,-2,1,-2,-2]\nc\t[3; 1,-2]\n").unwrap();
        let one = run_bench(&t, BenchOptions::default());
        let four = run_bench(
            &t,
            BenchOptions {
                threads: 4,
                ..Default::default()
            },
        );
        let names = |r: &BenchReport| r.entries.iter().map(|e| e.name.clone()).collect::<Vec<_>>();
        assert_eq!(names(&one), names(&four));
        for (a, b) in one.entries.iter().zip(&four.entries) {
            assert_eq!(a.polynomial, b.polynomial);
            assert_eq!(a.nodes_total, b.nodes_total);
        }
    }
}
