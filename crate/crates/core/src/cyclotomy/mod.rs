//! Cyclotomic classes and cyclotomic numbers.
//!
//! With `q - 1 = k·f` and a generator `g`, the class `C_i` is
//! `{g^{i + k·u} : 0 ≤ u < f}`. The cyclotomic number `(i, j)_k` counts
//! `x ∈ C_i` with `x + 1 ∈ C_j`; the dimension-n number `[i₁, …, iₙ]_k`
//! counts ways of writing `1` as `x₁ + ⋯ + xₙ` with `x_r ∈ C_{i_r}`.
//!
//! Two routes are provided for every quantity: direct enumeration over the
//! field, and the reduction formulas that express dimension 2, 3 and 4
//! numbers through `(i, j)_k`. For `k = 4` the pair numbers (and the
//! diagonal `[i, …, i]₄`) also have closed forms in `(q, s, t)`.

pub mod decomposition;
pub mod quartic;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{Element, Field, GeneratorData};

pub use decomposition::{f_is_even, QuarticDecomposition};
pub use quartic::{cyclo_diag_quartic, cyclotomic_number_quartic};

/// Upper bound on `fⁿ` for [`cyclo_dim_enum`].
pub const ENUMERATION_BOUND: f64 = 1e8;

/// `k` with `k·f = q - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclotomicIndex {
    pub k: u64,
    pub f: u64,
}

impl CyclotomicIndex {
    pub fn new(q: u64, k: u64) -> Result<Self> {
        if k == 0 || (q - 1) % k != 0 {
            return Err(Error::BadOrder {
                k,
                q_minus_1: q - 1,
            });
        }
        Ok(CyclotomicIndex { k, f: (q - 1) / k })
    }

    pub fn f_is_even(&self) -> bool {
        self.f % 2 == 0
    }

    /// `kf/2 mod k`; `g^{kf/2} = -1`.
    pub fn half_turn(&self) -> i64 {
        ((self.k * self.f / 2) % self.k) as i64
    }
}

/// Number of solutions mod `r` of `a₁x₁ + ⋯ + aₙxₙ ≡ b`: `d·r^{n-1}` when
/// `d = gcd(a₁, …, aₙ, r)` divides `b`, else zero.
pub fn linear_congruence_count(a: &[i64], b: i64, r: u64) -> Result<BigUint> {
    if r < 2 {
        return Err(Error::BadCongruenceModulus);
    }
    if a.is_empty() || a.iter().any(|&x| x == 0) {
        return Err(Error::ZeroCoefficient);
    }
    let d = a.iter().fold(r as i64, |acc, &x| acc.gcd(&x));
    if b % d != 0 {
        return Ok(BigUint::zero());
    }
    Ok(BigUint::from(d as u64) * BigUint::from(r).pow(a.len() as u32 - 1))
}

/// Solutions of `a₁x₁ + ⋯ + aₙxₙ ≡ b (mod kf)` with every `x_r` restricted
/// to `[0, kf/d)`: `(kf/d)^{n-1}`.
pub fn restricted_congruence_count(a: &[i64], b: i64, k: u64, f: u64) -> Result<BigUint> {
    if a.is_empty() || a.iter().any(|&x| x == 0) {
        return Err(Error::ZeroCoefficient);
    }
    let kf = (k * f) as i64;
    let d = a.iter().fold(kf, |acc, &x| acc.gcd(&x));
    if b % d != 0 {
        return Err(Error::NotDivisible { d, b });
    }
    Ok(BigUint::from((kf / d) as u64).pow(a.len() as u32 - 1))
}

/// Class label `ind_g(x) mod k` for every nonzero element.
#[derive(Clone, Debug)]
pub struct ClassTable {
    index: CyclotomicIndex,
    labels: Vec<u32>,
}

impl ClassTable {
    pub fn build(field: &Field, gen: &GeneratorData, k: u64) -> Result<Self> {
        let index = CyclotomicIndex::new(field.q(), k)?;
        let mut labels = vec![u32::MAX; field.q() as usize];
        for (e, x) in gen.powers(field).enumerate() {
            labels[x.value() as usize] = (e as u64 % k) as u32;
        }
        Ok(ClassTable { index, labels })
    }

    pub fn index(&self) -> CyclotomicIndex {
        self.index
    }

    pub fn class_of(&self, x: Element) -> Option<u64> {
        match self.labels[x.value() as usize] {
            u32::MAX => None,
            l => Some(l as u64),
        }
    }

    pub fn members(&self, i: i64) -> Vec<Element> {
        let i = i.rem_euclid(self.index.k as i64) as u32;
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == i)
            .map(|(x, _)| Element::raw(x as u64))
            .collect()
    }
}

/// `(i, j)_k` straight from the definition: pairs `(u₁, u₂) ∈ [0, f)²` with
/// `1 + g^{k·u₁ + i} = g^{k·u₂ + j}`.
pub fn cyclotomic_number_enum(field: &Field, gen: &GeneratorData, k: u64, i: i64, j: i64) -> Result<u64> {
    let idx = CyclotomicIndex::new(field.q(), k)?;
    let n = (field.q() - 1) as i64;
    let mut count = 0;
    for u1 in 0..idx.f as i64 {
        let y = field.add(Element::ONE, gen.power_signed(field, k as i64 * u1 + i));
        if y.is_zero() {
            continue;
        }
        let e = gen.index_of(field, y)? as i64;
        // u₂ is unique when it exists: e ≡ k·u₂ + j (mod q - 1)
        if (e - j).rem_euclid(n) % k as i64 == 0 {
            count += 1;
        }
    }
    Ok(count)
}

/// `[i₁, …, iₙ]_k` by exhaustive enumeration of `(u₁, …, uₙ) ∈ [0, f)ⁿ`.
///
/// The last coordinate is determined by the others, so the loop runs over
/// `f^{n-1}` tuples; the guard is on `fⁿ`.
pub fn cyclo_dim_enum(field: &Field, gen: &GeneratorData, k: u64, indices: &[i64]) -> Result<u64> {
    let idx = CyclotomicIndex::new(field.q(), k)?;
    let n = indices.len();
    if n == 0 {
        return Err(Error::BadArity { n, min: 1, max: usize::MAX });
    }
    let cost = (idx.f as f64).powi(n as i32);
    if cost > ENUMERATION_BOUND {
        return Err(Error::TooLarge {
            cost,
            bound: ENUMERATION_BOUND,
        });
    }
    let table = ClassTable::build(field, gen, k)?;
    let classes: Vec<Vec<Element>> = indices[..n - 1].iter().map(|&i| table.members(i)).collect();
    let last = indices[n - 1].rem_euclid(k as i64) as u64;

    let f = idx.f as usize;
    let mut odometer = vec![0usize; n - 1];
    let mut count = 0u64;
    loop {
        let partial = odometer
            .iter()
            .zip(&classes)
            .fold(Element::ZERO, |acc, (&u, cls)| field.add(acc, cls[u]));
        let rest = field.sub(Element::ONE, partial);
        if table.class_of(rest) == Some(last) {
            count += 1;
        }
        // advance
        let mut pos = 0;
        loop {
            if pos == odometer.len() {
                return Ok(count);
            }
            odometer[pos] += 1;
            if odometer[pos] < f {
                break;
            }
            odometer[pos] = 0;
            pos += 1;
        }
    }
}

/// A source of cyclotomic numbers `(i, j)_k` of a fixed order.
pub trait PairNumbers {
    fn index(&self) -> CyclotomicIndex;
    fn pair(&self, i: i64, j: i64) -> Result<i128>;
}

/// All `k²` numbers `(i, j)_k`, tabulated in one pass over the field.
#[derive(Clone, Debug)]
pub struct EnumeratedPairs {
    index: CyclotomicIndex,
    values: Vec<u64>,
}

impl EnumeratedPairs {
    pub fn build(field: &Field, gen: &GeneratorData, k: u64) -> Result<Self> {
        Self::from_classes(field, &ClassTable::build(field, gen, k)?)
    }

    pub fn from_classes(field: &Field, table: &ClassTable) -> Result<Self> {
        let index = table.index();
        let k = index.k as usize;
        let mut values = vec![0u64; k * k];
        for x in field.nonzero_elements() {
            let y = field.add(x, Element::ONE);
            if let (Some(i), Some(j)) = (table.class_of(x), table.class_of(y)) {
                values[i as usize * k + j as usize] += 1;
            }
        }
        Ok(EnumeratedPairs { index, values })
    }

    pub fn get(&self, i: i64, j: i64) -> u64 {
        let k = self.index.k as i64;
        self.values[(i.rem_euclid(k) * k + j.rem_euclid(k)) as usize]
    }
}

impl PairNumbers for EnumeratedPairs {
    fn index(&self) -> CyclotomicIndex {
        self.index
    }

    fn pair(&self, i: i64, j: i64) -> Result<i128> {
        Ok(self.get(i, j) as i128)
    }
}

/// Order-4 pair numbers from the closed-form table.
#[derive(Clone, Copy, Debug)]
pub struct QuarticPairs {
    pub q: u64,
    pub dec: QuarticDecomposition,
}

impl PairNumbers for QuarticPairs {
    fn index(&self) -> CyclotomicIndex {
        CyclotomicIndex {
            k: 4,
            f: (self.q - 1) / 4,
        }
    }

    fn pair(&self, i: i64, j: i64) -> Result<i128> {
        cyclotomic_number_quartic(i, j, &self.dec, self.q)
    }
}

fn congruent(a: i64, b: i64, k: u64) -> bool {
    (a - b).rem_euclid(k as i64) == 0
}

/// `[i₁, i₂]_k = (i₂ - i₁, -i₁)_k`.
pub fn cyclo_dim2(src: &impl PairNumbers, i1: i64, i2: i64) -> Result<i128> {
    src.pair(i2 - i1, -i1)
}

/// `[i₁, i₂, i₃]_k = α + Σ_v (v - i₃, -i₃)_k (i₂ - i₁, v - i₁)_k`, where
/// `α = f` if `i₁ ≡ i₂ + kf/2` and `i₃ ≡ 0 (mod k)`, else 0.
pub fn cyclo_dim3(src: &impl PairNumbers, i1: i64, i2: i64, i3: i64) -> Result<i128> {
    let idx = src.index();
    let alpha = if congruent(i1, i2 + idx.half_turn(), idx.k) && congruent(i3, 0, idx.k) {
        idx.f as i128
    } else {
        0
    };
    let mut sum = alpha;
    for v in 0..idx.k as i64 {
        sum += src.pair(v - i3, -i3)? * src.pair(i2 - i1, v - i1)?;
    }
    Ok(sum)
}

/// `[i₁, i₂, i₃, i₄]_k = γ + Σ_{v₁,v₂} (v₂ - v₁, -v₁)_k (i₂ - i₁, v₁ - i₁)_k (i₄ - i₃, v₂ - i₃)_k`.
///
/// γ collects the tuples where one of the halves sums to zero: it adds
/// `f·(i₂ - i₁, -i₁)_k` when `i₄ - i₃ ≡ kf/2` and `f·(i₄ - i₃, -i₃)_k` when
/// `i₂ - i₁ ≡ kf/2 (mod k)`.
pub fn cyclo_dim4(src: &impl PairNumbers, i1: i64, i2: i64, i3: i64, i4: i64) -> Result<i128> {
    let idx = src.index();
    let f = idx.f as i128;
    let half = idx.half_turn();
    let mut gamma = 0;
    if congruent(i4 - i3, half, idx.k) {
        gamma += src.pair(i2 - i1, -i1)? * f;
    }
    if congruent(i2 - i1, half, idx.k) {
        gamma += src.pair(i4 - i3, -i3)? * f;
    }
    let k = idx.k as i64;
    let mut sum = gamma;
    for v1 in 0..k {
        let left = src.pair(i2 - i1, v1 - i1)?;
        if left == 0 {
            continue;
        }
        for v2 in 0..k {
            sum += src.pair(v2 - v1, -v1)? * left * src.pair(i4 - i3, v2 - i3)?;
        }
    }
    Ok(sum)
}

/// Dispatches to the reduction formula for 1 ≤ n ≤ 4 indices.
pub fn cyclo_dim_reduced(src: &impl PairNumbers, indices: &[i64]) -> Result<i128> {
    match *indices {
        [i] => Ok(congruent(i, 0, src.index().k) as i128),
        [a, b] => cyclo_dim2(src, a, b),
        [a, b, c] => cyclo_dim3(src, a, b, c),
        [a, b, c, d] => cyclo_dim4(src, a, b, c, d),
        _ => Err(Error::BadArity {
            n: indices.len(),
            min: 1,
            max: 4,
        }),
    }
}

/// Total of all `(i, j)_k`; always `q - 2`.
pub fn pair_total(src: &impl PairNumbers) -> Result<i128> {
    let k = src.index().k as i64;
    let mut total = 0;
    for i in 0..k {
        for j in 0..k {
            total += src.pair(i, j)?;
        }
    }
    Ok(total)
}

pub(crate) fn binomial(n: u64, r: u64) -> BigUint {
    (0..r).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(p: u64, m: u32) -> (Field, GeneratorData) {
        let f = Field::new(p, m).unwrap();
        let g = GeneratorData::find(&f);
        (f, g)
    }

    fn brute_congruence(a: &[i64], b: i64, r: i64) -> u64 {
        let n = a.len() as u32;
        (0..r.pow(n))
            .filter(|code| {
                let mut c = *code;
                let mut acc = 0;
                for &ai in a {
                    acc += ai * (c % r);
                    c /= r;
                }
                (acc - b).rem_euclid(r) == 0
            })
            .count() as u64
    }

    #[test]
    fn congruence_examples() {
        assert_eq!(linear_congruence_count(&[2], 2, 4).unwrap(), BigUint::from(2u32));
        assert_eq!(linear_congruence_count(&[2], 1, 4).unwrap(), BigUint::zero());
        assert_eq!(brute_congruence(&[3, 6], 3, 12), 36);
        assert_eq!(linear_congruence_count(&[3, 6], 3, 12).unwrap(), BigUint::from(36u32));
        assert_eq!(linear_congruence_count(&[0, 1], 3, 12), Err(Error::ZeroCoefficient));
        assert_eq!(linear_congruence_count(&[1], 3, 1), Err(Error::BadCongruenceModulus));
    }

    #[test]
    fn congruence_matches_brute_force() {
        for (a, b, r) in [(vec![4, 6], 2, 8), (vec![5, 10, 15], 5, 10), (vec![3], 0, 9), (vec![2, 4], 3, 6)] {
            let expect = brute_congruence(&a, b, r);
            assert_eq!(linear_congruence_count(&a, b, r as u64).unwrap(), BigUint::from(expect), "{a:?} {b} {r}");
        }
    }

    #[test]
    fn restricted_examples() {
        // x ≡ 2 (mod 3) has the single solution 2 in [0, 2].
        assert_eq!(restricted_congruence_count(&[4], 8, 4, 3).unwrap(), BigUint::one());
        assert_eq!(
            restricted_congruence_count(&[4], 2, 4, 3),
            Err(Error::NotDivisible { d: 4, b: 2 })
        );
        let brute = (0..3).flat_map(|x| (0..3).map(move |y| (x, y))).filter(|(x, y)| (4 * x + 4 * y - 4) % 12 == 0).count();
        assert_eq!(brute, 3);
        assert_eq!(restricted_congruence_count(&[4, 4], 4, 4, 3).unwrap(), BigUint::from(3u32));
    }

    #[test]
    fn classes_partition_group() {
        let (f, g) = setup(13, 1);
        let t = ClassTable::build(&f, &g, 4).unwrap();
        let c0: Vec<u64> = t.members(0).iter().map(|e| e.value()).collect();
        assert_eq!(c0, vec![1, 3, 9]);
        let c1: Vec<u64> = t.members(1).iter().map(|e| e.value()).collect();
        assert_eq!(c1, vec![2, 5, 6]);
        assert_eq!(t.class_of(Element::ZERO), None);
        assert!(matches!(ClassTable::build(&f, &g, 5), Err(Error::BadOrder { k: 5, .. })));
    }

    #[test]
    fn enumeration_examples() {
        let (f13, g13) = setup(13, 1);
        assert_eq!(cyclotomic_number_enum(&f13, &g13, 4, 0, 0), Ok(0));
        let (f5, g5) = setup(5, 1);
        assert_eq!(cyclotomic_number_enum(&f5, &g5, 4, 0, 0), Ok(0));
        let (f17, g17) = setup(17, 1);
        assert_eq!(cyclotomic_number_enum(&f17, &g17, 4, 1, 2), Ok(1));
        assert_eq!(cyclotomic_number_enum(&f17, &g17, 3, 0, 0), Err(Error::BadOrder { k: 3, q_minus_1: 16 }));
    }

    #[test]
    fn dimension_enumeration_examples() {
        let (f13, g13) = setup(13, 1);
        assert_eq!(cyclo_dim_enum(&f13, &g13, 4, &[0]), Ok(1));
        for i in 1..4 {
            assert_eq!(cyclo_dim_enum(&f13, &g13, 4, &[i]), Ok(0));
        }
        assert_eq!(cyclo_dim_enum(&f13, &g13, 4, &[0, 0]), Ok(0));
        assert_eq!(cyclo_dim_enum(&f13, &g13, 4, &[1, 1, 1]), Ok(3));
        assert_eq!(cyclo_dim_enum(&f13, &g13, 4, &[0, 0, 0, 0]), Ok(12));
        let (f5, g5) = setup(5, 1);
        assert_eq!(cyclo_dim_enum(&f5, &g5, 4, &[0, 0, 0]), Ok(0));
        assert_eq!(cyclo_dim_enum(&f5, &g5, 4, &[0, 0, 0, 0]), Ok(0));
        let (f, g) = setup(101, 1);
        assert!(matches!(cyclo_dim_enum(&f, &g, 4, &[0; 6]), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn dim3_literal_triples_q13() {
        // C₁ = {2, 5, 6}: ordered triples summing to 1 mod 13.
        let c1 = [2u64, 5, 6];
        let mut n = 0;
        for a in c1 {
            for b in c1 {
                for c in c1 {
                    n += ((a + b + c) % 13 == 1) as u64;
                }
            }
        }
        assert_eq!(n, 3);
    }

    #[test]
    fn enumerated_pairs_match_definition() {
        for (p, m, k) in [(13, 1, 4), (17, 1, 4), (9, 1, 2), (5, 2, 4), (5, 2, 6), (7, 2, 8)] {
            let (p, m) = if p == 9 { (3, 2) } else { (p, m) };
            let (f, g) = setup(p, m);
            let table = EnumeratedPairs::build(&f, &g, k).unwrap();
            for i in 0..k as i64 {
                for j in 0..k as i64 {
                    assert_eq!(table.get(i, j), cyclotomic_number_enum(&f, &g, k, i, j).unwrap());
                }
            }
            assert_eq!(pair_total(&table).unwrap(), f.q() as i128 - 2);
        }
    }

    #[test]
    fn reductions_small() {
        let (f, g) = setup(13, 1);
        let src = EnumeratedPairs::build(&f, &g, 4).unwrap();
        assert_eq!(cyclo_dim2(&src, 0, 0).unwrap(), src.get(0, 0) as i128);
        assert_eq!(cyclo_dim2(&src, 1, 1).unwrap(), 0);
        assert_eq!(cyclo_dim3(&src, 1, 1, 1).unwrap(), 3);
        assert_eq!(
            cyclo_dim3(&src, 0, 1, 2).unwrap(),
            cyclo_dim_enum(&f, &g, 4, &[0, 1, 2]).unwrap() as i128
        );
        let (f17, g17) = setup(17, 1);
        let src17 = EnumeratedPairs::build(&f17, &g17, 4).unwrap();
        assert_eq!(cyclo_dim2(&src17, 2, 2).unwrap(), 1);
        assert_eq!(
            cyclo_dim4(&src17, 1, 1, 1, 1).unwrap(),
            cyclo_dim_enum(&f17, &g17, 4, &[1, 1, 1, 1]).unwrap() as i128
        );
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(8, 0), BigUint::one());
        assert_eq!(binomial(8, 8), BigUint::one());
    }
}
