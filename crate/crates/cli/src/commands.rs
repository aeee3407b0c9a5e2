use std::fmt::Write as _;

use diagquartic::counting::{
    count_M, count_N, count_small, count_via_cyclotomy, ones, oracle_count, sum_of_squares_count,
};
use diagquartic::cyclotomy::{cyclotomic_number_quartic, EnumeratedPairs};
use diagquartic::expsums::{reconstruct_N, GaussSumTable};
use diagquartic::genfunc::{gf_M, gf_N, RationalGF};
use diagquartic::{Element, FieldContext, SolutionCount};
use serde::Serialize;

use crate::args::{CountArgs, Method};
use crate::report::Report;
use crate::{element, CliError, CliResult};

fn parity(ctx: &FieldContext) -> Option<&'static str> {
    ctx.dec.map(|_| if ctx.q() % 8 == 1 { "even" } else { "odd" })
}

#[derive(Serialize)]
pub struct FieldReport {
    q: u64,
    p: u64,
    m: u32,
    modulus: Vec<u64>,
    g: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    s: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    t: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    f_parity: Option<&'static str>,
}

pub fn field(ctx: &FieldContext) -> CliResult<FieldReport> {
    Ok(FieldReport {
        q: ctx.q(),
        p: ctx.field.p(),
        m: ctx.field.m(),
        modulus: ctx.field.modulus().to_vec(),
        g: ctx.gen.generator().value(),
        s: ctx.dec.map(|d| d.s),
        t: ctx.dec.map(|d| d.t),
        f_parity: parity(ctx),
    })
}

impl Report for FieldReport {
    fn text(&self) -> String {
        let mut out = format!(
            "q = {} = {}^{}\nmodulus (x^0..x^m) = {:?}\ngenerator g = {}\n",
            self.q, self.p, self.m, self.modulus, self.g
        );
        if let (Some(s), Some(t), Some(f)) = (self.s, self.t, self.f_parity) {
            let _ = writeln!(out, "s = {s}, t = {t}, f = (q-1)/4 is {f}");
        }
        out
    }

    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let opt = |v: Option<i64>| v.map(|x| x.to_string()).unwrap_or_default();
        (
            vec!["q", "p", "m", "g", "s", "t", "f_parity"],
            vec![vec![
                self.q.to_string(),
                self.p.to_string(),
                self.m.to_string(),
                self.g.to_string(),
                opt(self.s),
                opt(self.t),
                self.f_parity.unwrap_or("").to_string(),
            ]],
        )
    }
}

#[derive(Serialize)]
pub struct CyclotomicEntry {
    i: u64,
    j: u64,
    closed: Option<i128>,
    enumerated: u64,
}

#[derive(Serialize)]
pub struct CyclotomicReport {
    q: u64,
    g: u64,
    k: u64,
    s: Option<i64>,
    t: Option<i64>,
    f_parity: Option<&'static str>,
    entries: Vec<CyclotomicEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

pub fn cyclotomic(ctx: &FieldContext, k: u64) -> CliResult<CyclotomicReport> {
    let pairs = EnumeratedPairs::build(&ctx.field, &ctx.gen, k)?;
    let mut entries = Vec::new();
    let mut error = None;
    for i in 0..k {
        for j in 0..k {
            let closed = match (k, ctx.dec) {
                (4, Some(dec)) => match cyclotomic_number_quartic(i as i64, j as i64, &dec, ctx.q()) {
                    Ok(v) => Some(v),
                    Err(e) => {
                        error.get_or_insert(e.to_string());
                        None
                    }
                },
                _ => None,
            };
            entries.push(CyclotomicEntry {
                i,
                j,
                closed,
                enumerated: pairs.get(i as i64, j as i64),
            });
        }
    }
    Ok(CyclotomicReport {
        q: ctx.q(),
        g: ctx.gen.generator().value(),
        k,
        s: ctx.dec.map(|d| d.s),
        t: ctx.dec.map(|d| d.t),
        f_parity: parity(ctx),
        entries,
        error,
    })
}

impl Report for CyclotomicReport {
    fn text(&self) -> String {
        let mut out = format!("q = {}, g = {}, k = {}", self.q, self.g, self.k);
        if let (Some(s), Some(t)) = (self.s, self.t) {
            let _ = write!(out, ", s = {s}, t = {t}");
        }
        out.push('\n');
        for e in &self.entries {
            let closed = e.closed.map(|v| v.to_string()).unwrap_or_else(|| "-".into());
            let _ = writeln!(out, "({}, {})  closed {closed:>6}  enumerated {:>6}", e.i, e.j, e.enumerated);
        }
        if let Some(err) = &self.error {
            let _ = writeln!(out, "closed form failed: {err}");
        }
        out
    }

    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self
            .entries
            .iter()
            .map(|e| {
                vec![
                    e.i.to_string(),
                    e.j.to_string(),
                    e.closed.map(|v| v.to_string()).unwrap_or_default(),
                    e.enumerated.to_string(),
                ]
            })
            .collect();
        (vec!["i", "j", "closed", "enumerated"], rows)
    }

    fn passed(&self) -> bool {
        self.error.is_none()
            && self
                .entries
                .iter()
                .all(|e| e.closed.map_or(true, |c| c == e.enumerated as i128))
    }
}

fn rhs_missing() -> CliError {
    CliError::Usage("one of --c or --y is required".into())
}

/// What is being counted.
#[derive(Clone, Copy, Debug)]
pub enum Target {
    /// `N_n(c)`
    N(Element),
    /// `M_n(y)`
    M(Element),
}

/// One method on one target. `Err` carries the reason a method does not
/// apply or failed.
pub fn run_method(ctx: &FieldContext, target: Target, n: usize, method: Method) -> Result<SolutionCount, String> {
    let e = |err: diagquartic::Error| err.to_string();
    match (target, method) {
        (Target::N(c), Method::Auto) => count_N(ctx, c, n).map_err(e),
        (Target::N(c), Method::Oracle) => oracle_count(&ctx.field, &ones(n), c, 4).map_err(e),
        (Target::N(c), Method::Closed) => {
            if ctx.dec.is_none() {
                sum_of_squares_count(&ctx.field, c, n).map_err(e)
            } else {
                count_small(ctx, c, n).map_err(e)
            }
        }
        (Target::N(c), Method::Cyclotomy) => count_via_cyclotomy(ctx, c, n).map_err(e),
        (Target::N(c), Method::Series) => series_coefficient(&gf_N(ctx, c).map_err(e)?, n),
        (Target::N(c), Method::Expsum) => {
            let table = GaussSumTable::build(ctx).map_err(e)?;
            reconstruct_N(n, c, &table, &ctx.field).map_err(e)
        }
        (Target::M(y), Method::Auto | Method::Closed) => count_M(ctx, y, n).map_err(e),
        (Target::M(y), Method::Oracle) => {
            if n == 0 {
                return Err("n must be at least 1".into());
            }
            let mut coeffs = ones(n);
            coeffs[n - 1] = y;
            oracle_count(&ctx.field, &coeffs, Element::ZERO, 4).map_err(e)
        }
        (Target::M(y), Method::Series) => {
            if n < 2 {
                return Err("twisted counts need n >= 2".into());
            }
            series_coefficient(&gf_M(ctx, y).map_err(e)?, n - 1)
        }
        (Target::M(_), Method::Cyclotomy | Method::Expsum) => Err("not available for the twisted form".into()),
    }
}

fn series_coefficient(gf: &RationalGF, index: usize) -> Result<SolutionCount, String> {
    if index == 0 {
        return Err("n must be at least 1".into());
    }
    let coeffs = gf.series(index).map_err(|e| e.to_string())?;
    SolutionCount::from_signed(coeffs[index - 1].clone(), "series coefficient").map_err(|e| e.to_string())
}

#[derive(Serialize)]
pub struct MethodResult {
    method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    count: Option<SolutionCount>,
    #[serde(skip_serializing_if = "Option::is_none")]
    skipped: Option<String>,
}

#[derive(Serialize)]
pub struct CountReport {
    q: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    c: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    y: Option<u64>,
    n: usize,
    method: &'static str,
    count: Option<SolutionCount>,
    #[serde(skip_serializing_if = "Option::is_none")]
    results: Option<Vec<MethodResult>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
}

pub fn count(ctx: &FieldContext, args: &CountArgs) -> CliResult<CountReport> {
    let (target, c, y) = match (args.c, args.y) {
        (_, Some(y)) => (Target::M(element(ctx, y)?), None, Some(y)),
        (Some(c), None) => (Target::N(element(ctx, c)?), Some(c), None),
        (None, None) => return Err(rhs_missing()),
    };
    let mut report = CountReport {
        q: ctx.q(),
        c,
        y,
        n: args.n,
        method: args.method.name(),
        count: None,
        results: None,
        agree: None,
    };
    if !args.all_methods {
        let count = run_method(ctx, target, args.n, args.method).map_err(CliError::Usage)?;
        report.count = Some(count);
        return Ok(report);
    }
    let mut results = Vec::new();
    for method in Method::CONCRETE {
        let outcome = run_method(ctx, target, args.n, method);
        results.push(match outcome {
            Ok(count) => MethodResult {
                method: method.name(),
                count: Some(count),
                skipped: None,
            },
            Err(reason) => MethodResult {
                method: method.name(),
                count: None,
                skipped: Some(reason),
            },
        });
    }
    let counts: Vec<&SolutionCount> = results.iter().filter_map(|r| r.count.as_ref()).collect();
    let agree = !counts.is_empty() && counts.windows(2).all(|w| w[0] == w[1]);
    report.method = "all";
    report.count = if agree { counts.first().map(|c| (*c).clone()) } else { None };
    report.agree = Some(agree);
    report.results = Some(results);
    Ok(report)
}

impl Report for CountReport {
    fn text(&self) -> String {
        let what = match (self.c, self.y) {
            (Some(c), _) => format!("N_{}({c})", self.n),
            (_, Some(y)) => format!("M_{}({y})", self.n),
            _ => unreachable!(),
        };
        let mut out = String::new();
        match &self.results {
            None => {
                let _ = writeln!(out, "q = {}: {what} = {} [{}]", self.q, self.count.as_ref().unwrap(), self.method);
            }
            Some(results) => {
                let _ = writeln!(out, "q = {}: {what}", self.q);
                for r in results {
                    match (&r.count, &r.skipped) {
                        (Some(c), _) => {
                            let _ = writeln!(out, "  {:<10} {c}", r.method);
                        }
                        (_, Some(why)) => {
                            let _ = writeln!(out, "  {:<10} skipped: {why}", r.method);
                        }
                        _ => {}
                    }
                }
                let verdict = if self.agree == Some(true) { "all methods agree" } else { "METHODS DISAGREE" };
                let _ = writeln!(out, "{verdict}");
            }
        }
        out
    }

    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let target = self.c.or(self.y).unwrap_or_default().to_string();
        let kind = if self.c.is_some() { "N" } else { "M" };
        let rows = match &self.results {
            None => vec![vec![
                self.q.to_string(),
                kind.into(),
                target,
                self.n.to_string(),
                self.method.into(),
                self.count.as_ref().map(|c| c.to_string()).unwrap_or_default(),
            ]],
            Some(results) => results
                .iter()
                .map(|r| {
                    vec![
                        self.q.to_string(),
                        kind.into(),
                        target.clone(),
                        self.n.to_string(),
                        r.method.into(),
                        r.count.as_ref().map(|c| c.to_string()).unwrap_or_default(),
                    ]
                })
                .collect(),
        };
        (vec!["q", "form", "rhs", "n", "method", "count"], rows)
    }

    fn passed(&self) -> bool {
        self.agree != Some(false)
    }
}

#[derive(Serialize)]
pub struct SeriesReport {
    q: u64,
    /// `"N"` for `Σ N_n(c)xⁿ`, `"M"` for `Σ M_{n+1}(y)xⁿ`.
    form: &'static str,
    c_or_y: u64,
    parts: RationalGF,
    coefficients: Vec<String>,
}

pub fn series(ctx: &FieldContext, c: Option<u64>, y: Option<u64>, terms: usize) -> CliResult<SeriesReport> {
    let (form, value, gf) = match (c, y) {
        (_, Some(y)) => ("M", y, gf_M(ctx, element(ctx, y)?)?),
        (Some(c), None) => ("N", c, gf_N(ctx, element(ctx, c)?)?),
        (None, None) => return Err(rhs_missing()),
    };
    let coefficients = gf.series(terms)?.iter().map(|v| v.to_string()).collect();
    Ok(SeriesReport {
        q: ctx.q(),
        form,
        c_or_y: value,
        parts: gf,
        coefficients,
    })
}

impl Report for SeriesReport {
    fn text(&self) -> String {
        let (lhs, offset) = if self.form == "N" {
            (format!("sum_n N_n({}) x^n", self.c_or_y), 0)
        } else {
            (format!("sum_n M_(n+1)({}) x^n", self.c_or_y), 1)
        };
        let mut out = format!("q = {}\n{lhs} = {}\n", self.q, self.parts);
        for (i, c) in self.coefficients.iter().enumerate() {
            let _ = writeln!(out, "  n = {:>2}: {c}", i + 1 + offset);
        }
        out
    }

    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self
            .coefficients
            .iter()
            .enumerate()
            .map(|(i, c)| vec![self.form.to_string(), self.c_or_y.to_string(), (i + 1).to_string(), c.clone()])
            .collect();
        (vec!["form", "c_or_y", "power", "coefficient"], rows)
    }
}
