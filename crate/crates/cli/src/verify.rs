use std::fmt::Write as _;
use std::time::Instant;

use diagquartic::counting::{count_M, count_N, count_small, count_via_cyclotomy, ones, oracle_distribution};
use diagquartic::cyclotomy::{
    cyclo_diag_quartic, cyclo_dim_enum, cyclo_dim_reduced, cyclotomic_number_quartic, EnumeratedPairs,
    QuarticDecomposition,
};
use diagquartic::expsums::{orthogonality_residual, quartic_gauss_sum, reconstruct_N, verify_myerson, GaussSumTable};
use diagquartic::genfunc::recurrence_check;
use diagquartic::{Error, FieldContext, SolutionCount};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::args::Common;
use crate::report::Report;
use crate::{configured_context, field_context, CliResult};

/// The fields checked when no `--p` is given.
pub const DEFAULT_FIELDS: [(u64, u32); 14] = [
    (5, 1),
    (3, 2),
    (13, 1),
    (17, 1),
    (5, 2),
    (29, 1),
    (37, 1),
    (41, 1),
    (7, 2),
    (7, 1),
    (11, 1),
    (19, 1),
    (23, 1),
    (3, 3),
];

#[derive(Serialize, Clone, Debug)]
pub struct Check {
    q: u64,
    name: &'static str,
    status: &'static str,
    mismatches: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_residual: Option<f64>,
    detail: String,
    seconds: f64,
}

#[derive(Serialize, Clone, Debug)]
pub struct ExpsumDetail {
    q: u64,
    /// `T_{g^l}` as `[re, im]`, `l = 0..3`.
    t: Vec<[f64; 2]>,
    polynomial: Vec<i64>,
    residuals: Vec<f64>,
    /// Largest `|unrounded - exact|` over the reconstructed counts.
    reconstruction_max_diff: f64,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pass: bool,
    checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    expsums: Vec<ExpsumDetail>,
}

#[derive(Default)]
struct Outcome {
    mismatches: usize,
    residual: Option<f64>,
    detail: String,
}

impl Outcome {
    fn counted(mismatches: usize, total: usize, what: &str) -> Self {
        Outcome {
            mismatches,
            residual: None,
            detail: format!("{total} {what}"),
        }
    }
}

fn check(q: u64, name: &'static str, f: impl FnOnce() -> Result<Outcome, Error>) -> Check {
    let start = Instant::now();
    let (status, mismatches, max_residual, detail) = match f() {
        Ok(o) => (if o.mismatches == 0 { "pass" } else { "fail" }, o.mismatches, o.residual, o.detail),
        Err(e) => ("fail", 0, None, e.to_string()),
    };
    Check {
        q,
        name,
        status,
        mismatches,
        max_residual,
        detail,
        seconds: start.elapsed().as_secs_f64(),
    }
}

fn quartic_checks(ctx: &FieldContext, nmax: usize, out: &mut Vec<Check>) {
    let q = ctx.q();
    out.push(check(q, "cyclotomic-closed", || {
        let dec = ctx.decomposition()?;
        let pairs = EnumeratedPairs::build(&ctx.field, &ctx.gen, 4)?;
        let (mut bad, mut total) = (0, 0);
        for i in 0..4 {
            for j in 0..4 {
                bad += usize::from(cyclotomic_number_quartic(i, j, &dec, q)? != pairs.get(i, j) as i128);
                total += 1;
            }
            for n in 2..=4 {
                let enumerated = cyclo_dim_enum(&ctx.field, &ctx.gen, 4, &vec![i; n])?;
                bad += usize::from(cyclo_diag_quartic(n, i, &dec, q)? != enumerated as i128);
                total += 1;
            }
        }
        Ok(Outcome::counted(bad, total, "pair and diagonal values"))
    }));
    out.push(check(q, "small-paths", || {
        let (mut bad, mut total) = (0, 0);
        for n in 1..=nmax.min(4) {
            let dist = oracle_distribution(&ctx.field, &ones(n), 4)?;
            for c in ctx.field.nonzero_elements() {
                let want = &dist[c.value() as usize];
                bad += usize::from(&count_small(ctx, c, n)?.0 != want);
                bad += usize::from(&count_via_cyclotomy(ctx, c, n)?.0 != want);
                total += 2;
            }
        }
        Ok(Outcome::counted(bad, total, "closed and cyclotomic counts"))
    }));
    if nmax >= 5 {
        out.push(check(q, "recurrence", || {
            let mut bad = 0;
            for c in ctx.field.nonzero_elements() {
                bad += usize::from(!recurrence_check(ctx, c, nmax)?.holds);
            }
            Ok(Outcome::counted(bad, (q - 1) as usize, "right-hand sides"))
        }));
    }
}

fn expsum_checks(ctx: &FieldContext, nmax: usize, seed: u64, out: &mut Vec<Check>) -> Option<ExpsumDetail> {
    let q = ctx.q();
    let qf = q as f64;
    out.push(check(q, "orthogonality", || {
        let r = orthogonality_residual(&ctx.field);
        Ok(Outcome {
            mismatches: usize::from(r >= 1e-9 * qf),
            residual: Some(r),
            detail: "max |sum psi(xy) - q[y=0]|".into(),
        })
    }));
    let table = match GaussSumTable::build(ctx) {
        Ok(t) => t,
        Err(e) => {
            out.push(check(q, "gauss-sums", || Err(e)));
            return None;
        }
    };
    out.push(check(q, "gauss-class-constancy", || {
        let mut rng = StdRng::seed_from_u64(seed ^ q);
        let (mut bad, mut worst) = (0, 0.0f64);
        for _ in 0..50 {
            let u = ctx.element(rng.gen_range(1..q))?;
            let d = (quartic_gauss_sum(&ctx.field, u) - table.t_of(u)?).norm();
            worst = worst.max(d);
            bad += usize::from(d >= 1e-9 * qf);
        }
        Ok(Outcome {
            mismatches: bad,
            residual: Some(worst),
            detail: "50 sampled u".into(),
        })
    }));
    let mut detail = ExpsumDetail {
        q,
        t: table.ts().iter().map(|t| [t.re, t.im]).collect(),
        polynomial: Vec::new(),
        residuals: Vec::new(),
        reconstruction_max_diff: 0.0,
    };
    out.push(check(q, "gauss-quartic", || {
        let report = verify_myerson(&table, &ctx.decomposition()?, q)?;
        detail.polynomial = report.polynomial.clone();
        detail.residuals = report.residuals.to_vec();
        Ok(Outcome {
            mismatches: 0,
            residual: report.residuals.iter().copied().reduce(f64::max),
            detail: format!("tolerance {:.1e}", report.tolerance),
        })
    }));
    out.push(check(q, "reconstruction", || {
        let (mut bad, mut total, mut worst) = (0, 0, 0.0f64);
        for n in 1..=nmax.min(6) {
            let dist = oracle_distribution(&ctx.field, &ones(n), 4)?;
            for c in ctx.field.nonzero_elements() {
                let want = &dist[c.value() as usize];
                let raw = qf.powi(n as i32 - 1) + table.r(&ctx.field, n, c).re / qf;
                let exact = SolutionCount::from(want.clone()).to_u64().map_or(f64::NAN, |v| v as f64);
                worst = worst.max((raw - exact).abs());
                bad += usize::from(&reconstruct_N(n, c, &table, &ctx.field)?.0 != want);
                total += 1;
            }
        }
        detail.reconstruction_max_diff = worst;
        Ok(Outcome {
            mismatches: bad,
            residual: Some(worst),
            detail: format!("{total} counts"),
        })
    }));
    Some(detail)
}

fn field_checks(ctx: &FieldContext, nmax: usize, expsums: bool, seed: u64) -> (Vec<Check>, Option<ExpsumDetail>) {
    let q = ctx.q();
    let mut out = Vec::new();
    out.push(check(q, "oracle-equivalence", || {
        let (mut bad, mut total) = (0, 0);
        for n in 1..=nmax {
            let dist = oracle_distribution(&ctx.field, &ones(n), 4)?;
            for c in ctx.field.elements() {
                bad += usize::from(count_N(ctx, c, n)?.0 != dist[c.value() as usize]);
                total += 1;
            }
        }
        Ok(Outcome::counted(bad, total, "counts"))
    }));
    out.push(check(q, "class-invariance", || {
        let mut rng = StdRng::seed_from_u64(seed.wrapping_add(q));
        let (mut bad, mut total) = (0, 0);
        for _ in 0..10 {
            let c = ctx.element(rng.gen_range(1..q))?;
            let rep = ctx.gen.power(&ctx.field, ctx.gen.index_of(&ctx.field, c)? % 4);
            for n in 1..=nmax {
                bad += usize::from(count_N(ctx, c, n)? != count_N(ctx, rep, n)?);
                total += 1;
            }
        }
        Ok(Outcome::counted(bad, total, "sampled (c, n)"))
    }));
    out.push(check(q, "reduction", || {
        let k = if q % 4 == 1 { 4 } else { 2 };
        let pairs = EnumeratedPairs::build(&ctx.field, &ctx.gen, k)?;
        let (mut bad, mut total) = (0, 0);
        for n in 2..=4usize {
            for code in 0..(k as usize).pow(n as u32) {
                let idx: Vec<i64> = (0..n).map(|r| ((code / (k as usize).pow(r as u32)) % k as usize) as i64).collect();
                let enumerated = cyclo_dim_enum(&ctx.field, &ctx.gen, k, &idx)?;
                bad += usize::from(cyclo_dim_reduced(&pairs, &idx)? != enumerated as i128);
                total += 1;
            }
        }
        Ok(Outcome::counted(bad, total, &format!("index tuples, k = {k}")))
    }));
    out.push(check(q, "twisted", || {
        let (mut bad, mut total) = (0, 0);
        for y in ctx.field.nonzero_elements().filter(|&y| !ctx.is_quartic(y)) {
            for n in 2..=nmax {
                let mut coeffs = ones(n);
                coeffs[n - 1] = y;
                let dist = oracle_distribution(&ctx.field, &coeffs, 4)?;
                bad += usize::from(count_M(ctx, y, n)?.0 != dist[0]);
                total += 1;
            }
        }
        Ok(Outcome::counted(bad, total, "twisted counts"))
    }));
    let mut detail = None;
    if ctx.dec.is_some() {
        quartic_checks(ctx, nmax, &mut out);
        if expsums {
            detail = expsum_checks(ctx, nmax, seed, &mut out);
        }
    }
    (out, detail)
}

pub fn run(common: &Common, nmax: usize, expsums: bool, perturb_t: i64) -> CliResult<VerifyReport> {
    if nmax == 0 {
        return Err(crate::CliError::Usage("--nmax must be at least 1".into()));
    }
    let mut contexts = Vec::new();
    if common.p.is_some() {
        contexts.push(configured_context(common)?);
    } else {
        for (p, m) in DEFAULT_FIELDS {
            contexts.push(field_context(p, m, &Common { modulus: None, generator: None, ..common.clone() })?);
        }
    }
    if perturb_t != 0 {
        for ctx in &mut contexts {
            if let Some(dec) = ctx.dec {
                ctx.dec = Some(QuarticDecomposition {
                    s: dec.s,
                    t: dec.t + perturb_t,
                });
            }
        }
    }
    let results: Vec<(Vec<Check>, Option<ExpsumDetail>)> = std::thread::scope(|scope| {
        let handles: Vec<_> = contexts
            .iter()
            .map(|ctx| scope.spawn(move || field_checks(ctx, nmax, expsums, common.seed)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("verification worker panicked")).collect()
    });
    let mut checks = Vec::new();
    let mut details = Vec::new();
    for (c, d) in results {
        checks.extend(c);
        details.extend(d);
    }
    Ok(VerifyReport {
        pass: checks.iter().all(|c| c.status == "pass"),
        checks,
        expsums: details,
    })
}

impl Report for VerifyReport {
    fn text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let residual = c.max_residual.map(|r| format!(", max residual {r:.2e}")).unwrap_or_default();
            let _ = writeln!(
                out,
                "q = {:>3}  {:<22} {}  ({}{residual}; {:.3}s)",
                c.q,
                c.name,
                c.status.to_uppercase(),
                c.detail,
                c.seconds
            );
        }
        for d in &self.expsums {
            let ts: Vec<String> = d.t.iter().map(|[re, im]| format!("{re:.6}{im:+.6}i")).collect();
            let _ = writeln!(out, "q = {:>3}  T = [{}]", d.q, ts.join(", "));
        }
        let failed = self.checks.iter().filter(|c| c.status != "pass").count();
        if failed == 0 {
            let _ = writeln!(out, "PASS: {} checks", self.checks.len());
        } else {
            let _ = writeln!(out, "FAIL: {failed} of {} checks", self.checks.len());
        }
        out
    }

    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self
            .checks
            .iter()
            .map(|c| {
                vec![
                    c.q.to_string(),
                    c.name.to_string(),
                    c.status.to_string(),
                    c.mismatches.to_string(),
                    c.max_residual.map(|r| r.to_string()).unwrap_or_default(),
                    c.detail.clone(),
                    format!("{:.6}", c.seconds),
                ]
            })
            .collect();
        (vec!["q", "check", "status", "mismatches", "max_residual", "detail", "seconds"], rows)
    }

    fn passed(&self) -> bool {
        self.pass
    }
}
