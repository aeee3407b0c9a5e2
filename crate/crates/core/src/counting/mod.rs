//! Solution counts of diagonal equations.
//!
//! `N_n(c)` is the number of `(x₁, …, xₙ) ∈ F_qⁿ` with `x₁⁴ + ⋯ + xₙ⁴ = c`,
//! and `M_n(y)` counts zeros of `x₁⁴ + ⋯ + x_{n-1}⁴ + y·xₙ⁴`.
//!
//! The oracle here knows nothing about cyclotomy: it convolves the
//! histogram of `x ↦ a·x^e` over the additive group. Every closed form
//! elsewhere is tested against it.

mod closed;

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::context::FieldContext;
use crate::cyclotomy::{binomial, cyclo_dim_reduced, QuarticPairs};
use crate::error::{Error, Result};
use crate::field::{Element, Field};
use crate::genfunc::{gf_M, gf_N};

pub use closed::{count_small, sum_of_squares_count, v, EpsilonTable, EPSILON};

/// Upper bound on `n·q²` for [`oracle_distribution`].
pub const ORACLE_BOUND: f64 = 1e10;
/// Upper bound on `qⁿ` for [`enumerate_count`].
pub const ENUMERATION_BOUND: f64 = 1e7;

/// A nonnegative count of any size. Serializes as a decimal string.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SolutionCount(pub BigUint);

impl SolutionCount {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    /// Fails with `Inconsistent` if `v` is negative.
    pub fn from_signed(v: BigInt, what: &str) -> Result<Self> {
        match v.to_biguint() {
            Some(u) => Ok(SolutionCount(u)),
            None => Err(Error::Inconsistent(format!("{what} came out negative: {v}"))),
        }
    }
}

impl From<BigUint> for SolutionCount {
    fn from(v: BigUint) -> Self {
        SolutionCount(v)
    }
}

impl From<u64> for SolutionCount {
    fn from(v: u64) -> Self {
        SolutionCount(BigUint::from(v))
    }
}

impl PartialEq<u64> for SolutionCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl fmt::Display for SolutionCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for SolutionCount {
    type Err = num_bigint::ParseBigIntError;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        BigUint::from_str(s).map(SolutionCount)
    }
}

impl Serialize for SolutionCount {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for SolutionCount {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Histogram of `x ↦ x^e` over `F_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerResidueProfile {
    pub e: u64,
    /// `gcd(e, q - 1)`
    pub d: u64,
    /// `w[c] = #{x : x^e = c}`, indexed by encoding.
    pub w: Vec<u64>,
}

impl PowerResidueProfile {
    pub fn count(&self, c: Element) -> u64 {
        self.w[c.value() as usize]
    }

    /// Encodings with nonzero weight, paired with the weight.
    pub fn support(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.w
            .iter()
            .enumerate()
            .filter(|(_, &w)| w > 0)
            .map(|(c, &w)| (c as u64, w))
    }
}

/// Enumerates `x^e` for every `x`, then checks the result against the rule
/// `w(c) = d` iff `c^{(q-1)/d} = 1`.
pub fn power_profile(field: &Field, e: u64) -> PowerResidueProfile {
    assert!(e >= 1, "exponent must be positive");
    let q = field.q();
    let mut w = vec![0u64; q as usize];
    for x in field.elements() {
        w[field.pow(x, e).value() as usize] += 1;
    }
    let d = e.gcd(&(q - 1));
    for c in field.nonzero_elements() {
        let expected = if field.pow(c, (q - 1) / d) == Element::ONE { d } else { 0 };
        assert_eq!(w[c.value() as usize], expected, "power histogram disagrees with residue rule at {c}");
    }
    assert_eq!(w[0], 1);
    PowerResidueProfile { e, d, w }
}

fn check_coeffs(coeffs: &[Element]) -> Result<()> {
    if coeffs.is_empty() {
        return Err(Error::BadArity {
            n: 0,
            min: 1,
            max: usize::MAX,
        });
    }
    if coeffs.iter().any(|a| a.is_zero()) {
        return Err(Error::ZeroCoefficient);
    }
    Ok(())
}

/// Counts of `a₁x₁^e + ⋯ + aₙxₙ^e = c` for every `c` at once, indexed by
/// the encoding of `c`.
pub fn oracle_distribution(field: &Field, coeffs: &[Element], e: u64) -> Result<Vec<BigUint>> {
    check_coeffs(coeffs)?;
    let q = field.q();
    let cost = coeffs.len() as f64 * (q as f64) * (q as f64);
    if cost > ORACLE_BOUND {
        return Err(Error::TooLarge {
            cost,
            bound: ORACLE_BOUND,
        });
    }
    let profile = power_profile(field, e);
    let support: Vec<(u64, u64)> = profile.support().collect();
    let mut dist = vec![BigUint::zero(); q as usize];
    dist[0] = BigUint::from(1u32);
    for &a in coeffs {
        let scaled: Vec<(Element, u64)> = support
            .iter()
            .map(|&(v, w)| (field.mul(a, Element::raw(v)), w))
            .collect();
        let mut next = vec![BigUint::zero(); q as usize];
        for (y, count) in dist.iter().enumerate() {
            if count.is_zero() {
                continue;
            }
            let y = Element::raw(y as u64);
            for &(z, w) in &scaled {
                next[field.add(y, z).value() as usize] += count * w;
            }
        }
        dist = next;
    }
    Ok(dist)
}

/// Number of zeros of `a₁x₁^e + ⋯ + aₙxₙ^e - c`.
pub fn oracle_count(field: &Field, coeffs: &[Element], c: Element, e: u64) -> Result<SolutionCount> {
    field.element(c.value())?;
    let mut dist = oracle_distribution(field, coeffs, e)?;
    Ok(SolutionCount(std::mem::take(&mut dist[c.value() as usize])))
}

/// Literal walk over all `qⁿ` tuples. Only for cross-checking the oracle.
pub fn enumerate_count(field: &Field, coeffs: &[Element], c: Element, e: u64) -> Result<SolutionCount> {
    check_coeffs(coeffs)?;
    let q = field.q();
    let n = coeffs.len();
    let cost = (q as f64).powi(n as i32);
    if cost > ENUMERATION_BOUND {
        return Err(Error::TooLarge {
            cost,
            bound: ENUMERATION_BOUND,
        });
    }
    let powers: Vec<Element> = field.elements().map(|x| field.pow(x, e)).collect();
    let mut digits = vec![0usize; n];
    let mut hits = 0u64;
    loop {
        let mut sum = Element::ZERO;
        for (a, &x) in coeffs.iter().zip(&digits) {
            sum = field.add(sum, field.mul(*a, powers[x]));
        }
        if sum == c {
            hits += 1;
        }
        let mut r = 0;
        loop {
            if r == n {
                return Ok(hits.into());
            }
            digits[r] += 1;
            if digits[r] < q as usize {
                break;
            }
            digits[r] = 0;
            r += 1;
        }
    }
}

fn nonzero_c(c: Element) -> Result<()> {
    if c.is_zero() {
        Err(Error::ZeroRhs)
    } else {
        Ok(())
    }
}

fn arity(n: usize, min: usize, max: usize) -> Result<()> {
    if n < min || n > max {
        Err(Error::BadArity { n, min, max })
    } else {
        Ok(())
    }
}

/// `N_n(c)` from the diagonal numbers `[4-i, …, 4-i]₄` via the reduction
/// formulas over the closed-form pair table, where `i = ind_g(c) mod 4`.
///
/// Tuples with exactly `j` nonzero coordinates contribute
/// `C(n, j)·4ʲ·[4-i, …, 4-i]₄` (j entries).
pub fn count_via_cyclotomy(ctx: &FieldContext, c: Element, n: usize) -> Result<SolutionCount> {
    nonzero_c(c)?;
    arity(n, 1, 4)?;
    let dec = ctx.decomposition()?;
    let i = ctx.quartic_class(c)? as i64;
    let pairs = QuarticPairs { q: ctx.q(), dec };
    let idx = (4 - i).rem_euclid(4);
    let mut total = BigInt::zero();
    for j in 1..=n {
        let diag = cyclo_dim_reduced(&pairs, &vec![idx; j])?;
        let primed = BigInt::from(diag) * BigInt::from(4u32).pow(j as u32);
        total += primed * BigInt::from(binomial(n as u64, j as u64));
    }
    SolutionCount::from_signed(total, "cyclotomic count")
}

/// `N_n(c)` for any `c` and any odd `q`.
///
/// For `q ≡ 3 (mod 4)` fourth powers and squares coincide and the classical
/// sum-of-squares formula applies; otherwise the count is read off the
/// rational generating function.
#[allow(non_snake_case)]
pub fn count_N(ctx: &FieldContext, c: Element, n: usize) -> Result<SolutionCount> {
    arity(n, 1, usize::MAX)?;
    ctx.field.element(c.value())?;
    if ctx.q() % 4 == 3 {
        return sum_of_squares_count(&ctx.field, c, n);
    }
    let coeffs = gf_N(ctx, c)?.series(n)?;
    SolutionCount::from_signed(coeffs[n - 1].clone(), "series coefficient")
}

/// `M_n(y)` for non-quartic `y`, via
/// `M_n(y) = N_{n-1}(0) + (q-1)·N_{n-1}(y')` where `y' = (-1)^{(q-1)/4}·y`
/// for `q ≡ 1 (mod 4)` and `y' = -y` for `q ≡ 3 (mod 4)`.
///
/// The value is also read off the twisted generating function; a mismatch
/// is reported as `Inconsistent`.
#[allow(non_snake_case)]
pub fn count_M(ctx: &FieldContext, y: Element, n: usize) -> Result<SolutionCount> {
    arity(n, 2, usize::MAX)?;
    ctx.field.element(y.value())?;
    if ctx.is_quartic(y) || y.is_zero() {
        return Err(Error::QuarticY(y.value()));
    }
    let field = &ctx.field;
    let q = ctx.q();
    let shifted = if q % 4 == 3 || ((q - 1) / 4) % 2 == 1 {
        field.neg(y)
    } else {
        y
    };
    let zero_part = count_N(ctx, Element::ZERO, n - 1)?;
    let twist = count_N(ctx, shifted, n - 1)?;
    let m = SolutionCount(zero_part.0 + twist.0 * BigUint::from(q - 1));
    let series = gf_M(ctx, y)?.series(n - 1)?;
    let from_series = SolutionCount::from_signed(series[n - 2].clone(), "twisted series coefficient")?;
    if from_series != m {
        return Err(Error::Inconsistent(format!(
            "M_{n}({y}): relation gives {m}, series gives {from_series}"
        )));
    }
    Ok(m)
}

/// The all-ones coefficient vector of length `n`.
pub fn ones(n: usize) -> Vec<Element> {
    vec![Element::ONE; n]
}

#[cfg(test)]
mod tests;
