//! Rational generating functions `Σ N_n(c)xⁿ` and `Σ M_{n+1}(y)xⁿ`.
//!
//! Each function is kept as a sum of rational parts, one `x/(1 - qx)`
//! main part and one correction whose denominator has degree 4
//! (`q ≡ 1 mod 4`) or 2 (`q ≡ 3 mod 4`). Coefficients are exact.

mod tables;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::context::FieldContext;
use crate::counting::oracle_distribution;
use crate::cyclotomy::{f_is_even, QuarticDecomposition};
use crate::error::{Error, Result};
use crate::field::Element;
use crate::forms::Form;

pub use tables::{B1, B2, DEN_F_EVEN, DEN_F_ODD, ZERO_NUM_F_EVEN, ZERO_NUM_F_ODD};

/// `numerator / denominator`, both ascending in `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPart {
    pub numerator: Vec<BigInt>,
    pub denominator: Vec<BigInt>,
}

/// The sum of its parts.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RationalGF {
    pub parts: Vec<RationalPart>,
}

fn ints(v: &[i128]) -> Vec<BigInt> {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

impl RationalPart {
    pub fn new(numerator: Vec<BigInt>, denominator: Vec<BigInt>) -> Result<Self> {
        let part = RationalPart {
            numerator,
            denominator,
        };
        part.check()?;
        Ok(part)
    }

    pub fn from_ints(numerator: &[i128], denominator: &[i128]) -> Result<Self> {
        Self::new(ints(numerator), ints(denominator))
    }

    fn check(&self) -> Result<()> {
        if self.denominator.first().map_or(true, |d| !d.is_one()) {
            return Err(Error::BadDenominator);
        }
        Ok(())
    }

    /// Coefficients of `x⁰ … x^{len-1}`.
    pub fn expand(&self, len: usize) -> Result<Vec<BigInt>> {
        self.check()?;
        let mut out: Vec<BigInt> = Vec::with_capacity(len);
        for k in 0..len {
            let mut a = self.numerator.get(k).cloned().unwrap_or_default();
            for (i, d) in self.denominator.iter().enumerate().skip(1).take(k) {
                if !d.is_zero() {
                    a -= d * &out[k - i];
                }
            }
            out.push(a);
        }
        Ok(out)
    }
}

impl RationalGF {
    /// Coefficients `c₁ … c_count`.
    pub fn series(&self, count: usize) -> Result<Vec<BigInt>> {
        let mut total = vec![BigInt::zero(); count + 1];
        for part in &self.parts {
            for (acc, c) in total.iter_mut().zip(part.expand(count + 1)?) {
                *acc += c;
            }
        }
        total.remove(0);
        Ok(total)
    }
}

/// Free-function form of [`RationalGF::series`].
pub fn series(gf: &RationalGF, count: usize) -> Result<Vec<BigInt>> {
    gf.series(count)
}

struct Poly<'a>(&'a [BigInt]);

impl fmt::Display for Poly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if !mag.is_one() || k == 0 {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Display for RationalPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", Poly(&self.numerator), Poly(&self.denominator))
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{part}")?;
        }
        Ok(())
    }
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(|c| c.to_string()).collect()
}

impl Serialize for RationalPart {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RationalPart", 2)?;
        st.serialize_field("num", &strings(&self.numerator))?;
        st.serialize_field("den", &strings(&self.denominator))?;
        st.end()
    }
}

impl Serialize for RationalGF {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

fn eval_all(forms: &[Form], q: u64, dec: &QuarticDecomposition) -> Vec<i128> {
    forms.iter().map(|f| f.eval(q as i128, dec.s as i128, dec.t as i128)).collect()
}

/// Degree-4 denominator for `q ≡ 1 (mod 4)`.
pub fn quartic_denominator(q: u64, dec: &QuarticDecomposition) -> Vec<i128> {
    let forms = if f_is_even(q) { &DEN_F_EVEN } else { &DEN_F_ODD };
    eval_all(forms, q, dec)
}

/// `(B(x) coefficients of x, x², x³)` for class `class`, taking `B₁` when
/// `q ≡ 1 (mod 8)` and `B₂` otherwise.
fn b_row(q: u64, dec: &QuarticDecomposition, class: u64) -> [i128; 3] {
    let table = if f_is_even(q) { &B1 } else { &B2 };
    let v = eval_all(&table[class as usize % 4], q, dec);
    [v[0], v[1], v[2]]
}

fn geometric(q: u64, scale: i128) -> RationalPart {
    RationalPart {
        numerator: ints(&[0, scale]),
        denominator: ints(&[1, -(q as i128)]),
    }
}

/// Generating function of `N_n(c)`, `n ≥ 1`.
#[allow(non_snake_case)]
pub fn gf_N(ctx: &FieldContext, c: Element) -> Result<RationalGF> {
    ctx.field.element(c.value())?;
    let q = ctx.q();
    let qi = q as i128;
    let main = geometric(q, 1);
    let correction = match ctx.dec {
        None => {
            let num: [i128; 3] = if c.is_zero() {
                [0, 0, 1 - qi]
            } else if ctx.field.is_square(c) {
                [0, 1, 1]
            } else {
                [0, -1, 1]
            };
            RationalPart::from_ints(&num, &[1, 0, qi])?
        }
        Some(dec) => {
            let den = quartic_denominator(q, &dec);
            let num = if c.is_zero() {
                let forms = if f_is_even(q) { &ZERO_NUM_F_EVEN } else { &ZERO_NUM_F_ODD };
                eval_all(forms, q, &dec)
            } else {
                let b = b_row(q, &dec, ctx.quartic_class(c)?);
                let (s, tail) = (dec.s as i128, den[4] / qi);
                vec![0, b[0], b[1], b[2] + 6 * s, tail]
            };
            RationalPart::from_ints(&num, &den)?
        }
    };
    Ok(RationalGF {
        parts: vec![main, correction],
    })
}

/// Generating function `Σ_{n≥1} M_{n+1}(y)xⁿ` for non-quartic `y`.
#[allow(non_snake_case)]
pub fn gf_M(ctx: &FieldContext, y: Element) -> Result<RationalGF> {
    ctx.field.element(y.value())?;
    if y.is_zero() || ctx.is_quartic(y) {
        return Err(Error::QuarticY(y.value()));
    }
    let q = ctx.q();
    let qi = q as i128;
    let main = geometric(q, qi);
    let correction = match ctx.dec {
        None => RationalPart::from_ints(&[0, qi - 1], &[1, 0, qi])?,
        Some(dec) => {
            let den = quartic_denominator(q, &dec);
            let (b, lead) = if f_is_even(q) {
                (b_row(q, &dec, ctx.quartic_class(y)?), 3)
            } else {
                let minus_y = ctx.field.neg(y);
                (b_row(q, &dec, ctx.quartic_class(minus_y)?), -1)
            };
            let num: Vec<i128> = [0, b[0], lead + b[1], b[2]].iter().map(|v| (qi - 1) * v).collect();
            RationalPart::from_ints(&num, &den)?
        }
    };
    Ok(RationalGF {
        parts: vec![main, correction],
    })
}

/// `(r₁, r₂, r₃, r₄)` with `D(n) = Σ rᵢ·D(n-i)` for `D(n) = N_n(c) - q^{n-1}`,
/// i.e. the negated tail of the degree-4 denominator.
pub fn recurrence_coefficients(q: u64, dec: &QuarticDecomposition) -> [i128; 4] {
    let den = quartic_denominator(q, dec);
    [-den[1], -den[2], -den[3], -den[4]]
}

/// `x⁴·den(1/x)`, ascending: the monic quartic whose roots are the
/// order-4 Gauss sums.
pub fn myerson_polynomial(q: u64, dec: &QuarticDecomposition) -> Vec<i128> {
    let mut den = quartic_denominator(q, dec);
    den.reverse();
    den
}

/// Outcome of [`recurrence_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecurrenceReport {
    pub coefficients: [i64; 4],
    /// `(n, D(n) - Σ rᵢ·D(n-i))` for each checked `n`.
    pub residuals: Vec<(usize, String)>,
    pub holds: bool,
}

/// Checks the order-4 recurrence of `D(n) = N_n(c) - q^{n-1}` on oracle
/// values for `5 ≤ n ≤ nmax`.
pub fn recurrence_check(ctx: &FieldContext, c: Element, nmax: usize) -> Result<RecurrenceReport> {
    let dec = ctx.decomposition()?;
    if c.is_zero() {
        return Err(Error::ZeroRhs);
    }
    if nmax < 5 {
        return Err(Error::BadArity {
            n: nmax,
            min: 5,
            max: usize::MAX,
        });
    }
    let q = ctx.q();
    let r = recurrence_coefficients(q, &dec);
    let qb = BigInt::from(q);
    let mut d = vec![BigInt::zero()];
    for n in 1..=nmax {
        let dist = oracle_distribution(&ctx.field, &vec![Element::ONE; n], 4)?;
        let count = BigInt::from(dist[c.value() as usize].clone());
        d.push(count - qb.pow(n as u32 - 1));
    }
    let mut residuals = Vec::new();
    for n in 5..=nmax {
        let predicted: BigInt = (1..=4).map(|i| &d[n - i] * BigInt::from(r[i - 1])).sum();
        residuals.push((n, &d[n] - predicted));
    }
    let holds = residuals.iter().all(|(_, r)| r.is_zero());
    Ok(RecurrenceReport {
        coefficients: r.map(|v| v as i64),
        residuals: residuals.into_iter().map(|(n, r)| (n, r.to_string())).collect(),
        holds,
    })
}
