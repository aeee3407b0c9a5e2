pub mod context;
pub mod counting;
pub mod cyclotomy;
pub mod error;
pub mod expsums;
pub mod field;
pub mod forms;
pub mod genfunc;

pub use context::FieldContext;
pub use counting::SolutionCount;
pub use error::{Error, Result};
pub use field::{Element, Field, GeneratorData};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/fields.md")]
    mod fields {}
    #[doc = include_str!("../../../book/src/cyclotomy.md")]
    mod cyclotomy {}
    #[doc = include_str!("../../../book/src/counting.md")]
    mod counting {}
    #[doc = include_str!("../../../book/src/genfunc.md")]
    mod genfunc {}
    #[doc = include_str!("../../../book/src/expsums.md")]
    mod expsums {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
