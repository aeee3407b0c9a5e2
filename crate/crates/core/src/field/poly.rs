//! Dense polynomials over the prime field F_p, coefficients ascending.
//!
//! Only what modulus selection needs: reduction, multiplication modulo a
//! polynomial, and gcd.

pub(crate) fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Remainder of `a` modulo `b` (b nonzero after trimming).
pub(crate) fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    while r.len() > db {
        let top = r.len() - 1;
        let factor = mul_mod(r[top], lead_inv, p);
        if factor != 0 {
            for (i, &bc) in b.iter().enumerate() {
                let idx = top - db + i;
                r[idx] = (r[idx] + p - mul_mod(factor, bc, p)) % p;
            }
        }
        r.pop();
        trim(&mut r);
    }
    r
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ac) in a.iter().enumerate() {
        if ac == 0 {
            continue;
        }
        for (j, &bc) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(ac, bc, p)) % p;
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn mul_rem(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    rem(&mul(a, b, p), modulus, p)
}

/// `base^exp mod modulus`.
pub(crate) fn pow_rem(base: &[u64], mut exp: u64, modulus: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = rem(base, modulus, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_rem(&acc, &b, modulus, p);
        }
        b = mul_rem(&b, &b, modulus, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

/// Whether a monic polynomial of degree `m >= 1` is irreducible over F_p.
///
/// A degree-m polynomial is irreducible iff it shares no factor with
/// `x^(p^i) - x` for `1 <= i <= m/2`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let m = f.len() - 1;
    if m == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    let mut frob = x.clone();
    for _ in 1..=m / 2 {
        frob = pow_rem(&frob, p, f, p);
        let mut diff = frob.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(&mut diff);
        if diff.is_empty() {
            return false;
        }
        if gcd(f, &diff, p).len() > 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducible_quadratics_over_f3() {
        // x^2 + 1 and x^2 + x + 2, x^2 + 2x + 2 are the monic irreducibles.
        let mut found = Vec::new();
        for c0 in 0..3 {
            for c1 in 0..3 {
                if is_irreducible(&[c0, c1, 1], 3) {
                    found.push((c0, c1));
                }
            }
        }
        assert_eq!(found, vec![(1, 0), (2, 1), (2, 2)]);
    }

    #[test]
    fn reducible_cubic_detected() {
        // (x + 1)(x^2 + 1) = x^3 + x^2 + x + 1 over F_3
        assert!(!is_irreducible(&[1, 1, 1, 1], 3));
        // x^3 + 2x + 1 is irreducible over F_3
        assert!(is_irreducible(&[1, 2, 0, 1], 3));
    }

    #[test]
    fn gcd_and_rem() {
        let r = rem(&[1, 0, 0, 1], &[1, 1], 3); // x^3 + 1 at x = -1 -> 0
        assert!(r.is_empty());
        assert_eq!(gcd(&[2, 0, 1], &[1, 1], 3), vec![1, 1]); // x^2 - 1 and x + 1
    }
}
