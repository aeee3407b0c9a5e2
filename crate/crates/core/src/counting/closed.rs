//! Closed forms for `N_n(c)`: the ε tables for `n ≤ 4`, `q ≡ 1 (mod 4)`, and
//! the sum-of-squares formula that covers `q ≡ 3 (mod 4)`.

use num_bigint::BigInt;

use super::{arity, nonzero_c, SolutionCount};
use crate::context::FieldContext;
use crate::cyclotomy::f_is_even;
use crate::error::Result;
use crate::field::{Element, Field};
use crate::forms::{form, Form};

/// Four-case correction tables, one row per ε, one column per
/// `ind_g(c) mod 4`. Rows 0, 2, 4 are the `q ≡ 1 (mod 8)` tables for
/// `n = 2, 3, 4`; rows 1, 3, 5 the `q ≡ 5 (mod 8)` ones.
#[derive(Clone, Copy, Debug)]
pub struct EpsilonTable {
    pub rows: [[Form; 4]; 6],
}

pub const EPSILON: EpsilonTable = EpsilonTable {
    rows: [
        // ε₁
        [
            form![(-6, 0, 1, 0)],
            form![(2, 0, 1, 0), (8, 0, 0, 1)],
            form![(2, 0, 1, 0)],
            form![(2, 0, 1, 0), (-8, 0, 0, 1)],
        ],
        // ε₂
        [
            form![(2, 0, 1, 0)],
            form![(2, 0, 1, 0), (-8, 0, 0, 1)],
            form![(-6, 0, 1, 0)],
            form![(2, 0, 1, 0), (8, 0, 0, 1)],
        ],
        // ε₃
        [
            form![(17, 1, 0, 0), (4, 0, 2, 0)],
            form![(-7, 1, 0, 0), (-8, 0, 1, 1)],
            form![(-7, 1, 0, 0), (16, 0, 0, 2)],
            form![(-7, 1, 0, 0), (8, 0, 1, 1)],
        ],
        // ε₄
        [
            form![(-3, 1, 0, 0), (-4, 0, 2, 0)],
            form![(5, 1, 0, 0), (8, 0, 1, 1)],
            form![(-3, 1, 0, 0), (-16, 0, 0, 2)],
            form![(5, 1, 0, 0), (-8, 0, 1, 1)],
        ],
        // ε₅
        [
            form![(-60, 1, 1, 0)],
            form![(20, 1, 1, 0), (48, 1, 0, 1)],
            form![(20, 1, 1, 0)],
            form![(20, 1, 1, 0), (-48, 1, 0, 1)],
        ],
        // ε₆
        [
            form![(-28, 1, 1, 0)],
            form![(4, 1, 1, 0), (16, 1, 0, 1)],
            form![(20, 1, 1, 0)],
            form![(4, 1, 1, 0), (-16, 1, 0, 1)],
        ],
    ],
};

/// Main terms of `N_n(c)` for `n = 2, 3, 4`, same row layout as [`EPSILON`].
pub const MAIN_TERMS: [Form; 6] = [
    form![(1, 1, 0, 0), (-3, 0, 0, 0)],
    form![(1, 1, 0, 0), (1, 0, 0, 0)],
    form![(1, 2, 0, 0), (6, 0, 1, 0)],
    form![(1, 2, 0, 0), (6, 0, 1, 0)],
    form![(1, 3, 0, 0), (-4, 0, 2, 0), (-17, 1, 0, 0)],
    form![(1, 3, 0, 0), (-4, 0, 2, 0), (7, 1, 0, 0)],
];

impl EpsilonTable {
    /// `ε_which` (1-based) at class `class`.
    pub fn form(&self, which: usize, class: u64) -> Form {
        self.rows[which - 1][class as usize % 4]
    }

    /// Row index for `n ∈ {2, 3, 4}` and the residue of `q` mod 8.
    pub fn row_for(n: usize, q: u64) -> usize {
        2 * (n - 2) + usize::from(!f_is_even(q))
    }
}

/// `v(0) = q - 1`, `v(c) = -1` otherwise.
pub fn v(q: u64, c: Element) -> i64 {
    if c.is_zero() {
        q as i64 - 1
    } else {
        -1
    }
}

/// `N_n(c)` for `n ≤ 4`, `c ≠ 0`, `q ≡ 1 (mod 4)` from the ε tables.
pub fn count_small(ctx: &FieldContext, c: Element, n: usize) -> Result<SolutionCount> {
    let dec = ctx.decomposition()?;
    nonzero_c(c)?;
    arity(n, 1, 4)?;
    let class = ctx.quartic_class(c)?;
    if n == 1 {
        return Ok(SolutionCount::from(if class == 0 { 4u64 } else { 0 }));
    }
    let q = ctx.q();
    let row = EpsilonTable::row_for(n, q);
    let (qi, s, t) = (q as i128, dec.s as i128, dec.t as i128);
    let value = MAIN_TERMS[row].eval(qi, s, t) + EPSILON.rows[row][class as usize].eval(qi, s, t);
    SolutionCount::from_signed(BigInt::from(value), "closed-form count")
}

/// Number of solutions of `x₁² + ⋯ + xₙ² = c` over `F_q`, any odd `q`:
/// `q^{n-1} + v(c)·q^{(n-2)/2}·η((-1)^{n/2})` for even `n` and
/// `q^{n-1} + q^{(n-1)/2}·η((-1)^{(n-1)/2}·c)` for odd `n`.
pub fn sum_of_squares_count(field: &Field, c: Element, n: usize) -> Result<SolutionCount> {
    arity(n, 1, usize::MAX)?;
    field.element(c.value())?;
    let q = field.q();
    let qb = BigInt::from(q);
    let minus_one = field.neg(Element::ONE);
    let main = qb.pow(n as u32 - 1);
    let correction = if n % 2 == 0 {
        let sign = if (n / 2) % 2 == 0 { Element::ONE } else { minus_one };
        qb.pow((n as u32 - 2) / 2) * v(q, c) * field.quadratic_character(sign)
    } else {
        let arg = if ((n - 1) / 2) % 2 == 0 { c } else { field.neg(c) };
        qb.pow((n as u32 - 1) / 2) * field.quadratic_character(arg)
    };
    SolutionCount::from_signed(main + correction, "sum-of-squares count")
}
