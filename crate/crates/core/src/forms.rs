//! Integer polynomials in `q`, `s`, `t`.
//!
//! Every closed-form table in the crate (order-4 cyclotomic numbers, the
//! diagonal dimension-n values, the ε corrections, the generating-function
//! numerators) is stored as data in this form so it can be printed and
//! checked line by line.

use std::fmt;

/// `coeff · q^q_pow · s^s_pow · t^t_pow`
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: i64,
    pub q_pow: u8,
    pub s_pow: u8,
    pub t_pow: u8,
}

pub const fn term(coeff: i64, q_pow: u8, s_pow: u8, t_pow: u8) -> Term {
    Term {
        coeff,
        q_pow,
        s_pow,
        t_pow,
    }
}

/// `form![(coeff, q_pow, s_pow, t_pow), ...]` as a `const`-friendly [`Form`].
macro_rules! form {
    ($(($c:expr, $qp:expr, $sp:expr, $tp:expr)),* $(,)?) => {{
        const TERMS: &[$crate::forms::Term] = &[$($crate::forms::term($c, $qp, $sp, $tp)),*];
        $crate::forms::Form(TERMS)
    }};
}
pub(crate) use form;

/// A polynomial in `q, s, t` given as a sum of terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Form(pub &'static [Term]);

impl Form {
    pub const ZERO: Form = Form(&[]);

    pub fn eval(&self, q: i128, s: i128, t: i128) -> i128 {
        self.0
            .iter()
            .map(|tm| {
                tm.coeff as i128
                    * q.pow(tm.q_pow as u32)
                    * s.pow(tm.s_pow as u32)
                    * t.pow(tm.t_pow as u32)
            })
            .sum()
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|tm| tm.coeff == 0) {
            return write!(f, "0");
        }
        for (idx, tm) in self.0.iter().filter(|tm| tm.coeff != 0).enumerate() {
            let mag = tm.coeff.unsigned_abs();
            let has_var = tm.q_pow + tm.s_pow + tm.t_pow > 0;
            match (idx, tm.coeff < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mag != 1 || !has_var {
                write!(f, "{mag}")?;
            }
            for (name, pow) in [("q", tm.q_pow), ("s", tm.s_pow), ("t", tm.t_pow)] {
                match pow {
                    0 => {}
                    1 => write!(f, "{name}")?,
                    k => write!(f, "{name}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: Form = Form(&[term(1, 2, 0, 0), term(-8, 0, 1, 1), term(-24, 0, 0, 1), term(9, 0, 0, 0)]);

    #[test]
    fn eval_and_display() {
        assert_eq!(SAMPLE.eval(13, -3, -1), 169 - 24 + 24 + 9);
        assert_eq!(SAMPLE.to_string(), "q^2 - 8st - 24t + 9");
        assert_eq!(Form::ZERO.eval(5, 1, 1), 0);
        const NEG_S: [Term; 1] = [term(-1, 0, 1, 0)];
        assert_eq!(Form(&NEG_S).to_string(), "-s");
    }
}
