use std::collections::HashMap;

use num_integer::Integer;

use super::{Element, Field};
use crate::error::{Error, Result};

/// Fields with `q` at or below this size get full exp/log tables; larger
/// fields use baby-step giant-step.
pub const TABLE_THRESHOLD: u64 = 1 << 16;

/// Distinct prime factors of `n`, ascending.
pub fn factorize(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[derive(Clone, Debug)]
enum DiscreteLog {
    Table { exp: Vec<u64>, log: Vec<u32> },
    BabyGiant {
        step: u64,
        baby: HashMap<u64, u64>,
        /// g^{-step}
        giant: Element,
    },
}

/// A primitive element of `F_q^*` with the data needed to take indices.
#[derive(Clone, Debug)]
pub struct GeneratorData {
    g: Element,
    order_primes: Vec<u64>,
    log: DiscreteLog,
}

fn has_full_order(field: &Field, x: Element, primes: &[u64]) -> bool {
    let n = field.q() - 1;
    !x.is_zero() && primes.iter().all(|&l| field.pow(x, n / l) != Element::ONE)
}

impl GeneratorData {
    /// The generator with the smallest canonical encoding.
    pub fn find(field: &Field) -> Self {
        let primes = factorize(field.q() - 1);
        let g = field
            .nonzero_elements()
            .find(|&x| has_full_order(field, x, &primes))
            .expect("F_q^* is cyclic");
        Self::build(field, g, primes)
    }

    /// Uses a caller-chosen generator after checking its order is `q - 1`.
    pub fn with_generator(field: &Field, g: Element) -> Result<Self> {
        field.element(g.value())?;
        let primes = factorize(field.q() - 1);
        if !has_full_order(field, g, &primes) {
            return Err(Error::NotAGenerator(g.value()));
        }
        Ok(Self::build(field, g, primes))
    }

    fn build(field: &Field, g: Element, order_primes: Vec<u64>) -> Self {
        let n = field.q() - 1;
        let log = if field.q() <= TABLE_THRESHOLD {
            let mut exp = Vec::with_capacity(n as usize);
            let mut log = vec![u32::MAX; field.q() as usize];
            let mut x = Element::ONE;
            for e in 0..n {
                exp.push(x.value());
                log[x.value() as usize] = e as u32;
                x = field.mul(x, g);
            }
            DiscreteLog::Table { exp, log }
        } else {
            let step = (n as f64).sqrt().ceil() as u64;
            let mut baby = HashMap::with_capacity(step as usize);
            let mut x = Element::ONE;
            for j in 0..step {
                baby.entry(x.value()).or_insert(j);
                x = field.mul(x, g);
            }
            let giant = field.inv(field.pow(g, step)).expect("g is nonzero");
            DiscreteLog::BabyGiant { step, baby, giant }
        };
        GeneratorData {
            g,
            order_primes,
            log,
        }
    }

    pub fn generator(&self) -> Element {
        self.g
    }

    /// Distinct primes dividing `q - 1`; witnesses that `g` has full order.
    pub fn order_primes(&self) -> &[u64] {
        &self.order_primes
    }

    pub fn has_table(&self) -> bool {
        matches!(self.log, DiscreteLog::Table { .. })
    }

    /// `g^e`, for any `e` (reduced mod `q - 1`).
    pub fn power(&self, field: &Field, e: u64) -> Element {
        match &self.log {
            DiscreteLog::Table { exp, .. } => Element(exp[(e % exp.len() as u64) as usize]),
            DiscreteLog::BabyGiant { .. } => field.pow(self.g, e % (field.q() - 1)),
        }
    }

    /// `g^e` for a signed exponent.
    pub fn power_signed(&self, field: &Field, e: i64) -> Element {
        self.power(field, e.rem_euclid((field.q() - 1) as i64) as u64)
    }

    /// Discrete logarithm `ind_g(x)` in `[0, q - 2]`.
    pub fn index_of(&self, field: &Field, x: Element) -> Result<u64> {
        field.element(x.value())?;
        if x.is_zero() {
            return Err(Error::ZeroHasNoIndex);
        }
        match &self.log {
            DiscreteLog::Table { log, .. } => Ok(log[x.value() as usize] as u64),
            DiscreteLog::BabyGiant { step, baby, giant } => {
                let mut y = x;
                for i in 0..=*step {
                    if let Some(&j) = baby.get(&y.value()) {
                        return Ok((i * step + j) % (field.q() - 1));
                    }
                    y = field.mul(y, *giant);
                }
                unreachable!("every nonzero element is a power of the generator")
            }
        }
    }

    /// Powers `g^0, g^1, …, g^{q-2}` in order.
    pub fn powers<'a>(&'a self, field: &'a Field) -> impl Iterator<Item = Element> + 'a {
        let mut x = Element::ONE;
        (0..field.q() - 1).map(move |e| match &self.log {
            DiscreteLog::Table { exp, .. } => Element(exp[e as usize]),
            DiscreteLog::BabyGiant { .. } => {
                let out = x;
                x = field.mul(x, self.g);
                out
            }
        })
    }

    /// Every generator of `F_q^*`: the powers `g^e` with `gcd(e, q - 1) = 1`.
    pub fn all_generators(&self, field: &Field) -> Vec<Element> {
        let n = field.q() - 1;
        let mut out: Vec<Element> = (1..n)
            .filter(|e| e.gcd(&n) == 1)
            .map(|e| self.power(field, e))
            .collect();
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_order(field: &Field, x: Element) -> u64 {
        let mut y = x;
        let mut k = 1;
        while y != Element::ONE {
            y = field.mul(y, x);
            k += 1;
        }
        k
    }

    #[test]
    fn smallest_generators() {
        for (p, expect) in [(5u64, 2u64), (13, 2), (7, 3)] {
            let f = Field::new(p, 1).unwrap();
            let expected = f
                .nonzero_elements()
                .find(|&x| brute_order(&f, x) == p - 1)
                .unwrap();
            assert_eq!(expected.value(), expect);
            assert_eq!(GeneratorData::find(&f).generator().value(), expect);
        }
    }

    #[test]
    fn index_examples() {
        let f5 = Field::new(5, 1).unwrap();
        let g5 = GeneratorData::find(&f5);
        assert_eq!(g5.index_of(&f5, Element::ONE), Ok(0));
        assert_eq!(g5.index_of(&f5, Element(3)), Ok(3));
        assert_eq!(g5.index_of(&f5, Element::ZERO), Err(Error::ZeroHasNoIndex));
        let f13 = Field::new(13, 1).unwrap();
        let g13 = GeneratorData::find(&f13);
        assert_eq!(g13.index_of(&f13, Element(5)), Ok(9));
    }

    #[test]
    fn generator_enumerates_group_once() {
        for (p, m) in [(3, 2), (5, 2), (7, 2), (3, 3)] {
            let f = Field::new(p, m).unwrap();
            let g = GeneratorData::find(&f);
            let mut seen: Vec<u64> = g.powers(&f).map(Element::value).collect();
            seen.sort();
            assert_eq!(seen, (1..f.q()).collect::<Vec<_>>());
            assert_eq!(f.pow(g.generator(), f.q() - 1), Element::ONE);
        }
    }

    #[test]
    fn index_inverts_power_both_backends() {
        // 65537 uses the table; 65539 is above the threshold.
        for p in [65537u64, 65539] {
            let f = Field::new(p, 1).unwrap();
            let g = GeneratorData::find(&f);
            assert_eq!(g.has_table(), p <= TABLE_THRESHOLD);
            for e in (0..2 * (p - 1)).step_by(977).chain([0, p - 2, p - 1, 2 * p - 3]) {
                let x = f.pow(g.generator(), e);
                assert_eq!(g.index_of(&f, x).unwrap(), e % (p - 1));
            }
        }
    }

    #[test]
    fn rejects_non_generator() {
        let f13 = Field::new(13, 1).unwrap();
        assert_eq!(
            GeneratorData::with_generator(&f13, Element(3)).unwrap_err(),
            Error::NotAGenerator(3)
        );
        let all = GeneratorData::find(&f13).all_generators(&f13);
        let vals: Vec<u64> = all.iter().map(|e| e.value()).collect();
        assert_eq!(vals, vec![2, 6, 7, 11]);
    }
}
