use std::fmt::Write as _;
use std::time::{Duration, Instant};

use diagquartic::{FieldContext, SolutionCount};
use serde::Serialize;

use crate::args::{Common, Method};
use crate::commands::{run_method, Target};
use crate::report::Report;
use crate::{field_context, CliError, CliResult};

const DEFAULT_FIELDS: [(u64, u32); 3] = [(5, 1), (13, 1), (7, 2)];
const MIN_SAMPLE: Duration = Duration::from_millis(20);

#[derive(Serialize)]
pub struct BenchRow {
    q: u64,
    n: usize,
    method: &'static str,
    count: SolutionCount,
    micros: f64,
}

#[derive(Serialize)]
pub struct BenchReport {
    c: u64,
    rows: Vec<BenchRow>,
    /// Every method returned the same count for every `(q, n)`.
    consistent: bool,
}

fn parse_field(spec: &str) -> CliResult<(u64, u32)> {
    let bad = || CliError::Usage(format!("cannot parse field size {spec:?}; use p or p^m"));
    match spec.split_once('^') {
        Some((p, m)) => Ok((p.trim().parse().map_err(|_| bad())?, m.trim().parse().map_err(|_| bad())?)),
        None => Ok((spec.trim().parse().map_err(|_| bad())?, 1)),
    }
}

fn time(ctx: &FieldContext, n: usize, method: Method) -> Option<(SolutionCount, Duration)> {
    let target = Target::N(diagquartic::Element::ONE);
    let first = run_method(ctx, target, n, method).ok()?;
    let start = Instant::now();
    let mut reps = 1u32;
    std::hint::black_box(run_method(ctx, target, n, method).ok()?);
    while start.elapsed() < MIN_SAMPLE {
        std::hint::black_box(run_method(ctx, target, n, method).ok()?);
        reps += 1;
    }
    Some((first, start.elapsed() / reps))
}

pub fn run(common: &Common, nmax: usize, fields: Option<&[String]>) -> CliResult<BenchReport> {
    let sizes = match (fields, common.p) {
        (Some(list), _) => list.iter().map(|s| parse_field(s)).collect::<CliResult<Vec<_>>>()?,
        (None, Some(p)) => vec![(p, common.m)],
        (None, None) => DEFAULT_FIELDS.to_vec(),
    };
    let mut rows = Vec::new();
    let mut consistent = true;
    for (p, m) in sizes {
        let ctx = field_context(p, m, &Common { modulus: None, generator: None, ..common.clone() })?;
        for n in 1..=nmax {
            let mut seen: Option<SolutionCount> = None;
            for method in Method::CONCRETE {
                if let Some((count, per_call)) = time(&ctx, n, method) {
                    if let Some(prev) = &seen {
                        consistent &= *prev == count;
                    }
                    seen.get_or_insert_with(|| count.clone());
                    rows.push(BenchRow {
                        q: ctx.q(),
                        n,
                        method: method.name(),
                        count,
                        micros: per_call.as_secs_f64() * 1e6,
                    });
                }
            }
        }
    }
    Ok(BenchReport { c: 1, rows, consistent })
}

impl Report for BenchReport {
    fn text(&self) -> String {
        let mut out = format!("c = {}\n{:>5} {:>3} {:<10} {:>14} {:>24}\n", self.c, "q", "n", "method", "time (us)", "count");
        for r in &self.rows {
            let _ = writeln!(out, "{:>5} {:>3} {:<10} {:>14.2} {:>24}", r.q, r.n, r.method, r.micros, r.count);
        }
        if !self.consistent {
            out.push_str("METHODS DISAGREE\n");
        }
        out
    }

    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self
            .rows
            .iter()
            .map(|r| vec![r.q.to_string(), r.n.to_string(), r.method.to_string(), r.count.to_string(), format!("{:.3}", r.micros)])
            .collect();
        (vec!["q", "n", "method", "count", "micros"], rows)
    }

    fn passed(&self) -> bool {
        self.consistent
    }
}
