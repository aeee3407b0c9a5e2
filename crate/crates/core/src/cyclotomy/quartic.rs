//! Closed forms for order-4 cyclotomic numbers and the diagonal
//! dimension-n numbers `[i, …, i]₄` for n = 2, 3, 4.

use super::decomposition::{f_is_even, QuarticDecomposition};
use crate::error::{Error, Result};
use crate::forms::{term, Form, Term};

const fn lin(c: i64, s: i64, t: i64) -> [Term; 4] {
    [term(1, 1, 0, 0), term(s, 0, 1, 0), term(t, 0, 0, 1), term(c, 0, 0, 0)]
}

macro_rules! linear_form {
    ($c:expr, $s:expr, $t:expr) => {{
        const TERMS: [Term; 4] = lin($c, $s, $t);
        Form(&TERMS)
    }};
}

/// The five distinct order-4 values A..E, numerators over 16, for `f` even.
pub const PAIR_FORMS_F_EVEN: [Form; 5] = [
    linear_form!(-11, -6, 0), // A
    linear_form!(-3, 2, 8),   // B
    linear_form!(-3, 2, 0),   // C
    linear_form!(-3, 2, -8),  // D
    linear_form!(1, -2, 0),   // E
];

/// Same for `f` odd.
pub const PAIR_FORMS_F_ODD: [Form; 5] = [
    linear_form!(-7, 2, 0),  // A
    linear_form!(1, 2, -8),  // B
    linear_form!(1, -6, 0),  // C
    linear_form!(1, 2, 8),   // D
    linear_form!(-3, -2, 0), // E
];

/// Which of A..E is `(i, j)₄`, indexed `[i][j]`.
pub const PAIR_LAYOUT_F_EVEN: [[usize; 4]; 4] = [
    [0, 1, 2, 3],
    [1, 3, 4, 4],
    [2, 4, 2, 4],
    [3, 4, 4, 1],
];

pub const PAIR_LAYOUT_F_ODD: [[usize; 4]; 4] = [
    [0, 1, 2, 3],
    [4, 4, 3, 1],
    [0, 4, 0, 4],
    [4, 3, 1, 4],
];

fn divide(what: impl Into<String>, numerator: i128, divisor: i128) -> Result<i128> {
    if numerator % divisor != 0 {
        return Err(Error::NonIntegral {
            what: what.into(),
            numerator,
            divisor,
        });
    }
    Ok(numerator / divisor)
}

fn require_quartic_class(q: u64) -> Result<()> {
    if q % 4 != 1 {
        return Err(Error::WrongResidueClass {
            q,
            residue: 1,
            modulus: 4,
        });
    }
    Ok(())
}

/// The form giving `16·(i, j)₄`.
pub fn pair_form(i: i64, j: i64, q: u64) -> Form {
    let (i, j) = (i.rem_euclid(4) as usize, j.rem_euclid(4) as usize);
    if f_is_even(q) {
        PAIR_FORMS_F_EVEN[PAIR_LAYOUT_F_EVEN[i][j]]
    } else {
        PAIR_FORMS_F_ODD[PAIR_LAYOUT_F_ODD[i][j]]
    }
}

/// Order-4 cyclotomic number `(i, j)₄` from the A–E table.
pub fn cyclotomic_number_quartic(i: i64, j: i64, dec: &QuarticDecomposition, q: u64) -> Result<i128> {
    require_quartic_class(q)?;
    let num = pair_form(i, j, q).eval(q as i128, dec.s as i128, dec.t as i128);
    divide(format!("({i},{j})_4"), num, 16)
}

const DIAG2_1MOD8: [&[Term]; 4] = [
    &[term(1, 1, 0, 0), term(-6, 0, 1, 0), term(-11, 0, 0, 0)],
    &[term(1, 1, 0, 0), term(2, 0, 1, 0), term(-8, 0, 0, 1), term(-3, 0, 0, 0)],
    &[term(1, 1, 0, 0), term(2, 0, 1, 0), term(-3, 0, 0, 0)],
    &[term(1, 1, 0, 0), term(2, 0, 1, 0), term(8, 0, 0, 1), term(-3, 0, 0, 0)],
];

const DIAG2_5MOD8: [&[Term]; 4] = [
    &[term(1, 1, 0, 0), term(2, 0, 1, 0), term(-7, 0, 0, 0)],
    &[term(1, 1, 0, 0), term(2, 0, 1, 0), term(8, 0, 0, 1), term(1, 0, 0, 0)],
    &[term(1, 1, 0, 0), term(-6, 0, 1, 0), term(1, 0, 0, 0)],
    &[term(1, 1, 0, 0), term(2, 0, 1, 0), term(-8, 0, 0, 1), term(1, 0, 0, 0)],
];

const DIAG3_1MOD8: [&[Term]; 4] = [
    &[term(1, 2, 0, 0), term(14, 1, 0, 0), term(4, 0, 2, 0), term(24, 0, 1, 0), term(21, 0, 0, 0)],
    &[term(1, 2, 0, 0), term(-10, 1, 0, 0), term(8, 0, 1, 1), term(24, 0, 0, 1), term(9, 0, 0, 0)],
    &[term(1, 2, 0, 0), term(-6, 1, 0, 0), term(-4, 0, 2, 0), term(9, 0, 0, 0)],
    &[term(1, 2, 0, 0), term(-10, 1, 0, 0), term(-8, 0, 1, 1), term(-24, 0, 0, 1), term(9, 0, 0, 0)],
];

const DIAG3_5MOD8: [&[Term]; 4] = [
    &[term(1, 2, 0, 0), term(-6, 1, 0, 0), term(-4, 0, 2, 0), term(9, 0, 0, 0)],
    &[term(1, 2, 0, 0), term(2, 1, 0, 0), term(-8, 0, 1, 1), term(-24, 0, 0, 1), term(-3, 0, 0, 0)],
    &[term(1, 2, 0, 0), term(-6, 1, 0, 0), term(-16, 0, 0, 2), term(24, 0, 1, 0), term(-3, 0, 0, 0)],
    &[term(1, 2, 0, 0), term(2, 1, 0, 0), term(8, 0, 1, 1), term(24, 0, 0, 1), term(-3, 0, 0, 0)],
];

const DIAG4_1MOD8: [&[Term]; 4] = [
    &[
        term(1, 3, 0, 0),
        term(-4, 2, 0, 0),
        term(-79, 1, 0, 0),
        term(-60, 1, 1, 0),
        term(-20, 0, 2, 0),
        term(-60, 0, 1, 0),
        term(-34, 0, 0, 0),
    ],
    &[
        term(1, 3, 0, 0),
        term(-4, 2, 0, 0),
        term(20, 1, 1, 0),
        term(-48, 1, 0, 1),
        term(13, 1, 0, 0),
        term(-32, 0, 1, 1),
        term(-12, 0, 1, 0),
        term(16, 0, 0, 2),
        term(-48, 0, 0, 1),
        term(-18, 0, 0, 0),
    ],
    &[
        term(1, 3, 0, 0),
        term(-4, 2, 0, 0),
        term(20, 1, 1, 0),
        term(13, 1, 0, 0),
        term(-12, 0, 1, 0),
        term(-48, 0, 0, 2),
        term(-18, 0, 0, 0),
    ],
    &[
        term(1, 3, 0, 0),
        term(-4, 2, 0, 0),
        term(20, 1, 1, 0),
        term(48, 1, 0, 1),
        term(13, 1, 0, 0),
        term(32, 0, 1, 1),
        term(-12, 0, 1, 0),
        term(16, 0, 0, 2),
        term(48, 0, 0, 1),
        term(-18, 0, 0, 0),
    ],
];

const DIAG4_5MOD8: [&[Term]; 4] = [
    &[
        term(1, 3, 0, 0),
        term(-4, 2, 0, 0),
        term(-28, 1, 1, 0),
        term(25, 1, 0, 0),
        term(12, 0, 2, 0),
        term(-12, 0, 1, 0),
        term(-10, 0, 0, 0),
    ],
    &[
        term(1, 3, 0, 0),
        term(-4, 2, 0, 0),
        term(4, 1, 1, 0),
        term(-16, 1, 0, 1),
        term(-11, 1, 0, 0),
        term(32, 0, 1, 1),
        term(-12, 0, 1, 0),
        term(16, 0, 0, 2),
        term(48, 0, 0, 1),
        term(6, 0, 0, 0),
    ],
    &[
        term(1, 3, 0, 0),
        term(-4, 2, 0, 0),
        term(20, 1, 1, 0),
        term(21, 1, 0, 0),
        term(-60, 0, 1, 0),
        term(80, 0, 0, 2),
        term(6, 0, 0, 0),
    ],
    &[
        term(1, 3, 0, 0),
        term(-4, 2, 0, 0),
        term(4, 1, 1, 0),
        term(16, 1, 0, 1),
        term(-11, 1, 0, 0),
        term(-32, 0, 1, 1),
        term(-12, 0, 1, 0),
        term(16, 0, 0, 2),
        term(-48, 0, 0, 1),
        term(6, 0, 0, 0),
    ],
];

/// Numerator form and divisor of `[i, …, i]₄` with `n` entries.
pub fn diagonal_form(n: usize, i: i64, q: u64) -> Result<(Form, i128)> {
    let i = i.rem_euclid(4) as usize;
    let one_mod_8 = q % 8 == 1;
    let (table, divisor) = match (n, one_mod_8) {
        (2, true) => (&DIAG2_1MOD8, 16),
        (2, false) => (&DIAG2_5MOD8, 16),
        (3, true) => (&DIAG3_1MOD8, 64),
        (3, false) => (&DIAG3_5MOD8, 64),
        (4, true) => (&DIAG4_1MOD8, 256),
        (4, false) => (&DIAG4_5MOD8, 256),
        _ => return Err(Error::BadArity { n, min: 2, max: 4 }),
    };
    Ok((Form(table[i]), divisor))
}

/// `[i, …, i]₄` (n copies, n ∈ {2, 3, 4}) in closed form.
pub fn cyclo_diag_quartic(n: usize, i: i64, dec: &QuarticDecomposition, q: u64) -> Result<i128> {
    require_quartic_class(q)?;
    let (form, divisor) = diagonal_form(n, i, q)?;
    let num = form.eval(q as i128, dec.s as i128, dec.t as i128);
    divide(format!("[{i}; {n}]_4"), num, divisor)
}
