use crate::cyclotomy::QuarticDecomposition;
use crate::error::{Error, Result};
use crate::field::{Element, Field, GeneratorData};

/// A field together with its chosen generator and, when `q ≡ 1 (mod 4)`,
/// the matching `(s, t)`.
#[derive(Clone, Debug)]
pub struct FieldContext {
    pub field: Field,
    pub gen: GeneratorData,
    pub dec: Option<QuarticDecomposition>,
}

impl FieldContext {
    /// Default modulus and smallest generator.
    pub fn new(p: u64, m: u32) -> Result<Self> {
        let field = Field::new(p, m)?;
        let gen = GeneratorData::find(&field);
        Self::from_parts(field, gen)
    }

    pub fn from_parts(field: Field, gen: GeneratorData) -> Result<Self> {
        let dec = if field.q() % 4 == 1 {
            Some(QuarticDecomposition::compute(&field, &gen)?)
        } else {
            None
        };
        Ok(FieldContext { field, gen, dec })
    }

    /// Same field, different generator.
    pub fn with_generator(&self, g: Element) -> Result<Self> {
        let gen = GeneratorData::with_generator(&self.field, g)?;
        Self::from_parts(self.field.clone(), gen)
    }

    #[inline]
    pub fn q(&self) -> u64 {
        self.field.q()
    }

    /// `(s, t)`; errors unless `q ≡ 1 (mod 4)`.
    pub fn decomposition(&self) -> Result<QuarticDecomposition> {
        self.dec.ok_or(Error::WrongResidueClass {
            q: self.q(),
            residue: 1,
            modulus: 4,
        })
    }

    /// `ind_g(c) mod 4`.
    pub fn quartic_class(&self, c: Element) -> Result<u64> {
        Ok(self.gen.index_of(&self.field, c)? % 4)
    }

    /// Whether `y` is a nonzero fourth power.
    pub fn is_quartic(&self, y: Element) -> bool {
        !y.is_zero() && self.field.pow(y, (self.q() - 1) / num_integer::gcd(4, self.q() - 1)) == Element::ONE
    }

    pub fn element(&self, value: u64) -> Result<Element> {
        self.field.element(value)
    }
}
