//! The benchmark result schema: one CSV row per (graph, algorithm) run.

use crate::error::{Error, Result};

const HEADER: &str = "n,p,seed,algorithm,colours,lower_bound,optimal,millis";

/// One benchmark run on one random graph.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkRecord {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
    pub algorithm: String,
    pub colours: usize,
    pub lower_bound: usize,
    pub optimal: bool,
    /// wall-clock spend; zero when runs are budgeted by iterations instead
    pub millis: u64,
}

/// Render records as CSV, sorted by (n, p, seed, algorithm) so identical
/// batches serialise identically regardless of completion order.
pub fn write_benchmark_csv(records: &[BenchmarkRecord]) -> String {
    let mut sorted: Vec<&BenchmarkRecord> = records.iter().collect();
    sorted.sort_by(|a, b| {
        a.n.cmp(&b.n)
            .then_with(|| a.p.total_cmp(&b.p))
            .then_with(|| a.seed.cmp(&b.seed))
            .then_with(|| a.algorithm.cmp(&b.algorithm))
    });
    let mut out = String::from(HEADER);
    out.push('\n');
    for r in sorted {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.n, r.p, r.seed, r.algorithm, r.colours, r.lower_bound, r.optimal, r.millis
        ));
    }
    out
}

/// Parse CSV produced by [`write_benchmark_csv`].
pub fn read_benchmark_csv(text: &str) -> Result<Vec<BenchmarkRecord>> {
    let fail = |line: usize, message: String| Error::Parse {
        format: "csv",
        line,
        message,
    };
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header.trim_end() == HEADER => {}
        Some((_, header)) => {
            return Err(fail(1, format!("unexpected header {header:?}")));
        }
        None => return Err(fail(0, "empty input".to_string())),
    }
    let mut records = Vec::new();
    for (index, line) in lines {
        let number = index + 1;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 8 {
            return Err(fail(
                number,
                format!("expected 8 fields, found {}", fields.len()),
            ));
        }
        let parse_num = |i: usize, what: &str| -> Result<u64> {
            fields[i]
                .parse()
                .map_err(|_| fail(number, format!("{what} {:?} is not an integer", fields[i])))
        };
        let p: f64 = fields[1].parse().map_err(|_| {
            fail(
                number,
                format!("probability {:?} is not a number", fields[1]),
            )
        })?;
        if !(0.0..=1.0).contains(&p) {
            return Err(fail(number, format!("probability {p} outside [0, 1]")));
        }
        let optimal = match fields[6] {
            "true" => true,
            "false" => false,
            other => return Err(fail(number, format!("optimal flag {other:?}"))),
        };
        records.push(BenchmarkRecord {
            n: parse_num(0, "n")? as usize,
            p,
            seed: parse_num(2, "seed")?,
            algorithm: fields[3].to_string(),
            colours: parse_num(4, "colours")? as usize,
            lower_bound: parse_num(5, "lower bound")? as usize,
            optimal,
            millis: parse_num(7, "millis")?,
        });
    }
    Ok(records)
}
