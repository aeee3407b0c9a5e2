use num_integer::Roots;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, GeneratorData};

/// The normalized pair `(s, t)` with `q = s² + 4t²` that pins down the
/// order-4 cyclotomic numbers for a given generator.
///
/// For `p ≡ 1 (mod 4)`: `s ≡ 1 (mod 4)`, `p ∤ s`, and
/// `2t ≡ s·g^{3(q-1)/4} (mod p)`. For `p ≡ 3 (mod 4)`: `s = (-p)^{m/2}`, `t = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuarticDecomposition {
    pub s: i64,
    pub t: i64,
}

impl QuarticDecomposition {
    /// Computes the decomposition for `field` relative to `gen`.
    pub fn compute(field: &Field, gen: &GeneratorData) -> Result<Self> {
        let (p, q) = (field.p(), field.q());
        if q % 4 != 1 {
            return Err(Error::WrongResidueClass {
                q,
                residue: 1,
                modulus: 4,
            });
        }
        let qi = q as i64;
        if p % 4 == 3 {
            // q ≡ 1 (mod 4) forces m even here.
            let s = (-(p as i64)).pow(field.m() / 2);
            debug_assert_eq!(s * s, qi);
            return Ok(QuarticDecomposition { s, t: 0 });
        }

        let zeta_elem = gen.power(field, 3 * (q - 1) / 4);
        let zeta = field.prime_subfield_residue(zeta_elem)? as i64;
        let pi = p as i64;
        let bound = q.sqrt() as i64;
        let mut found = Vec::new();
        for s in -bound..=bound {
            if s.rem_euclid(4) != 1 || s % pi == 0 {
                continue;
            }
            let rest = qi - s * s;
            if rest < 0 || rest % 4 != 0 {
                continue;
            }
            let tt = (rest / 4) as u64;
            let t = tt.sqrt() as i64;
            if (t * t) as u64 != tt {
                continue;
            }
            for cand in [t, -t] {
                if (2 * cand - s * zeta).rem_euclid(pi) == 0 && !found.contains(&(s, cand)) {
                    found.push((s, cand));
                }
            }
        }
        match found.as_slice() {
            [(s, t)] => Ok(QuarticDecomposition { s: *s, t: *t }),
            _ => Err(Error::Decomposition {
                q,
                candidates: found.len(),
            }),
        }
    }

    pub fn is_valid_for(&self, q: u64) -> bool {
        self.s * self.s + 4 * self.t * self.t == q as i64 && self.s.rem_euclid(4) == 1
    }
}

/// `f = (q-1)/4` is even exactly when `q ≡ 1 (mod 8)`.
pub fn f_is_even(q: u64) -> bool {
    q % 8 == 1
}
