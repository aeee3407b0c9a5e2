//! Coefficient data for the `q ≡ 1 (mod 4)` generating functions.

use crate::forms::{form, Form};

/// `B₁(c, x)` for `q ≡ 1 (mod 8)`: row `ind_g(c) mod 4`, coefficients of
/// `x, x², x³`.
pub const B1: [[Form; 3]; 4] = [
    [form![(3, 0, 0, 0)], form![(-6, 0, 1, 0), (-3, 0, 0, 0)], form![(-1, 1, 0, 0), (4, 0, 2, 0)]],
    [form![(-1, 0, 0, 0)], form![(2, 0, 1, 0), (8, 0, 0, 1), (-3, 0, 0, 0)], form![(-1, 1, 0, 0), (-8, 0, 1, 1)]],
    [form![(-1, 0, 0, 0)], form![(2, 0, 1, 0), (-3, 0, 0, 0)], form![(-1, 1, 0, 0), (16, 0, 0, 2)]],
    [form![(-1, 0, 0, 0)], form![(2, 0, 1, 0), (-8, 0, 0, 1), (-3, 0, 0, 0)], form![(-1, 1, 0, 0), (8, 0, 1, 1)]],
];

/// `B₂(c, x)` for `q ≡ 5 (mod 8)`, same layout as [`B1`].
pub const B2: [[Form; 3]; 4] = [
    [form![(3, 0, 0, 0)], form![(2, 0, 1, 0), (1, 0, 0, 0)], form![(3, 1, 0, 0), (-4, 0, 2, 0)]],
    [form![(-1, 0, 0, 0)], form![(2, 0, 1, 0), (-8, 0, 0, 1), (1, 0, 0, 0)], form![(3, 1, 0, 0), (8, 0, 1, 1)]],
    [form![(-1, 0, 0, 0)], form![(-6, 0, 1, 0), (1, 0, 0, 0)], form![(-5, 1, 0, 0), (-16, 0, 0, 2)]],
    [form![(-1, 0, 0, 0)], form![(2, 0, 1, 0), (8, 0, 0, 1), (1, 0, 0, 0)], form![(3, 1, 0, 0), (-8, 0, 1, 1)]],
];

/// `1 - 6qx² + 8qsx³ + (q² - 4qs²)x⁴`
pub const DEN_F_EVEN: [Form; 5] = [
    form![(1, 0, 0, 0)],
    Form::ZERO,
    form![(-6, 1, 0, 0)],
    form![(8, 1, 1, 0)],
    form![(1, 2, 0, 0), (-4, 1, 2, 0)],
];

/// `1 + 2qx² + 8qsx³ + (9q² - 4qs²)x⁴`
pub const DEN_F_ODD: [Form; 5] = [
    form![(1, 0, 0, 0)],
    Form::ZERO,
    form![(2, 1, 0, 0)],
    form![(8, 1, 1, 0)],
    form![(9, 2, 0, 0), (-4, 1, 2, 0)],
];

/// Correction numerator at `c = 0`, `q ≡ 1 (mod 8)`:
/// `(q - 1)x²(3 - 6sx - (q - 4s²)x²)`.
pub const ZERO_NUM_F_EVEN: [Form; 5] = [
    Form::ZERO,
    Form::ZERO,
    form![(3, 1, 0, 0), (-3, 0, 0, 0)],
    form![(-6, 1, 1, 0), (6, 0, 1, 0)],
    form![(-1, 2, 0, 0), (4, 1, 2, 0), (1, 1, 0, 0), (-4, 0, 2, 0)],
];

/// Correction numerator at `c = 0`, `q ≡ 5 (mod 8)`:
/// `-(q - 1)x²(1 + 6sx + (9q - 4s²)x²)`.
pub const ZERO_NUM_F_ODD: [Form; 5] = [
    Form::ZERO,
    Form::ZERO,
    form![(-1, 1, 0, 0), (1, 0, 0, 0)],
    form![(-6, 1, 1, 0), (6, 0, 1, 0)],
    form![(-9, 2, 0, 0), (4, 1, 2, 0), (9, 1, 0, 0), (-4, 0, 2, 0)],
];
