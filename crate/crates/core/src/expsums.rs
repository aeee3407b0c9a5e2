//! Additive characters and order-4 Gauss-type sums, in floating point.
//!
//! `ψ(x) = exp(2πi·Tr(x)/p)`, `T_u = Σ_v ψ(u·v⁴)`, and for `c ≠ 0`
//! `N_n(c) = q^{n-1} + (1/q)·Σ_l T_{g^l}ⁿ·λ_l(c)` with
//! `λ_l(c) = Σ_{x ∈ C_l} ψ(-x·c)`. Nothing exact depends on this module;
//! it cross-checks the exact paths.

use std::f64::consts::TAU;

use num_bigint::BigUint;
use num_complex::Complex64;
use serde::Serialize;

use crate::context::FieldContext;
use crate::counting::SolutionCount;
use crate::cyclotomy::QuarticDecomposition;
use crate::error::{Error, Result};
use crate::field::{Element, Field};
use crate::genfunc::myerson_polynomial;

pub type ComplexApprox = Complex64;

/// Largest `n` accepted by [`reconstruct_N`].
pub const MAX_RECONSTRUCT_N: usize = 60;

fn roots_of_unity(p: u64) -> Vec<Complex64> {
    (0..p).map(|k| Complex64::from_polar(1.0, TAU * k as f64 / p as f64)).collect()
}

/// `exp(2πi·Tr(x)/p)`.
pub fn additive_character(field: &Field, x: Element) -> ComplexApprox {
    Complex64::from_polar(1.0, TAU * field.trace(x) as f64 / field.p() as f64)
}

/// `T_u` by direct summation over `v`.
pub fn quartic_gauss_sum(field: &Field, u: Element) -> ComplexApprox {
    field
        .elements()
        .map(|v| additive_character(field, field.mul(u, field.pow(v, 4))))
        .sum()
}

/// Largest `|Σ_x ψ(x·y) - q·[y = 0]|` over all `y`.
pub fn orthogonality_residual(field: &Field) -> f64 {
    let roots = roots_of_unity(field.p());
    let psi: Vec<Complex64> = field.elements().map(|x| roots[field.trace(x) as usize]).collect();
    let q = field.q() as f64;
    field
        .elements()
        .map(|y| {
            let sum: Complex64 = field.elements().map(|x| psi[field.mul(x, y).value() as usize]).sum();
            let want = if y.is_zero() { q } else { 0.0 };
            (sum - want).norm()
        })
        .fold(0.0, f64::max)
}

/// `ψ` on every element, the class label `ind_g(x) mod 4` of every nonzero
/// element, and the four sums `T_{g^l}`.
#[derive(Clone, Debug)]
pub struct GaussSumTable {
    q: u64,
    psi: Vec<Complex64>,
    class: Vec<u8>,
    t: [Complex64; 4],
}

impl GaussSumTable {
    /// Requires `q ≡ 1 (mod 4)`.
    pub fn build(ctx: &FieldContext) -> Result<Self> {
        ctx.decomposition()?;
        let field = &ctx.field;
        let q = field.q();
        let roots = roots_of_unity(field.p());
        let psi: Vec<Complex64> = field.elements().map(|x| roots[field.trace(x) as usize]).collect();
        let mut class = vec![u8::MAX; q as usize];
        for (i, x) in ctx.gen.powers(field).enumerate() {
            class[x.value() as usize] = (i % 4) as u8;
        }
        let fourth: Vec<Element> = field.elements().map(|v| field.pow(v, 4)).collect();
        let mut t = [Complex64::new(0.0, 0.0); 4];
        for (l, slot) in t.iter_mut().enumerate() {
            let u = ctx.gen.power(field, l as u64);
            *slot = fourth.iter().map(|&w| psi[field.mul(u, w).value() as usize]).sum();
        }
        Ok(GaussSumTable { q, psi, class, t })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn psi(&self, x: Element) -> ComplexApprox {
        self.psi[x.value() as usize]
    }

    /// `T_{g^l}`.
    pub fn t(&self, l: usize) -> ComplexApprox {
        self.t[l % 4]
    }

    pub fn ts(&self) -> [ComplexApprox; 4] {
        self.t
    }

    /// `T_u` read from the table via the class of `u`.
    pub fn t_of(&self, u: Element) -> Result<ComplexApprox> {
        match self.class[u.value() as usize] {
            u8::MAX => Err(Error::ZeroHasNoIndex),
            l => Ok(self.t[l as usize]),
        }
    }

    /// `λ_l(c) = Σ_{x ∈ C_l} ψ(-x·c)`.
    pub fn lambda(&self, field: &Field, l: usize, c: Element) -> ComplexApprox {
        let minus_c = field.neg(c);
        self.class
            .iter()
            .enumerate()
            .filter(|(_, &k)| k as usize == l % 4)
            .map(|(x, _)| self.psi[field.mul(Element::raw(x as u64), minus_c).value() as usize])
            .sum()
    }

    /// `R(n, c) = Σ_l T_{g^l}ⁿ·λ_l(c)`.
    pub fn r(&self, field: &Field, n: usize, c: Element) -> ComplexApprox {
        (0..4).map(|l| self.t[l].powu(n as u32) * self.lambda(field, l, c)).sum()
    }
}

/// Free-function form of [`GaussSumTable::lambda`].
pub fn lambda_sum(table: &GaussSumTable, field: &Field, l: usize, c: Element) -> ComplexApprox {
    table.lambda(field, l, c)
}

/// Residuals `|P(T_{g^l})|` of the monic quartic whose reversal is the
/// generating-function denominator.
#[derive(Clone, Debug, Serialize)]
pub struct MyersonReport {
    pub polynomial: Vec<i64>,
    pub residuals: [f64; 4],
    pub tolerance: f64,
}

/// Fails with `ResidualTooLarge` if any residual exceeds `1e-6·q²`.
pub fn verify_myerson(table: &GaussSumTable, dec: &QuarticDecomposition, q: u64) -> Result<MyersonReport> {
    if q % 4 != 1 {
        return Err(Error::WrongResidueClass {
            q,
            residue: 1,
            modulus: 4,
        });
    }
    let poly = myerson_polynomial(q, dec);
    let mut residuals = [0.0; 4];
    for (l, r) in residuals.iter_mut().enumerate() {
        let x = table.t(l);
        *r = poly.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * x + c as f64).norm();
    }
    let tolerance = 1e-6 * (q as f64).powi(2);
    if let Some(&worst) = residuals.iter().find(|&&r| r > tolerance || !r.is_finite()) {
        return Err(Error::ResidualTooLarge {
            residual: worst,
            tolerance,
        });
    }
    Ok(MyersonReport {
        polynomial: poly.iter().map(|&c| c as i64).collect(),
        residuals,
        tolerance,
    })
}

/// Rounds `q^{n-1} + R(n, c)/q`; the unrounded value must lie within
/// `1e-3·max(1, q^{n/2-1})` of an integer.
#[allow(non_snake_case)]
pub fn reconstruct_N(n: usize, c: Element, table: &GaussSumTable, field: &Field) -> Result<SolutionCount> {
    if c.is_zero() {
        return Err(Error::ZeroRhs);
    }
    if n == 0 || n > MAX_RECONSTRUCT_N {
        return Err(Error::BadArity {
            n,
            min: 1,
            max: MAX_RECONSTRUCT_N,
        });
    }
    let q = table.q as f64;
    let value = Complex64::new(q.powi(n as i32 - 1), 0.0) + table.r(field, n, c) / q;
    let rounded = value.re.round();
    let distance = (value - rounded).norm();
    let tolerance = 1e-3 * q.powf(n as f64 / 2.0 - 1.0).max(1.0);
    if distance >= tolerance || rounded < 0.0 {
        return Err(Error::NotNearInteger {
            value: value.re,
            distance,
            tolerance,
        });
    }
    // Above 2^53 an f64 no longer pins down an integer.
    if rounded >= 9.0e15 {
        return Err(Error::NotNearInteger {
            value: value.re,
            distance: f64::INFINITY,
            tolerance,
        });
    }
    Ok(SolutionCount(BigUint::from(rounded as u64)))
}
