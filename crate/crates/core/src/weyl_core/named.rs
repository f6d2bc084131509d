//! The six low-degree monomials and a few other frequently used elements.

use super::{Sign, SkewPoly};

/// `i = g_+^0 / 2`.
pub fn i() -> SkewPoly {
    SkewPoly::g(Sign::Plus, 0, 0, 1).scale(&super::rat(1, 2))
}

/// `i a†a = g_+^tau / 2`.
pub fn n() -> SkewPoly {
    SkewPoly::g(Sign::Plus, 1, 1, 1).scale(&super::rat(1, 2))
}

/// `i(a + a†)`.
pub fn gp1() -> SkewPoly {
    SkewPoly::g(Sign::Plus, 1, 0, 1)
}

/// `a - a†`.
pub fn gm1() -> SkewPoly {
    SkewPoly::g(Sign::Minus, 1, 0, 1)
}

/// `i(a² + a†²)`.
pub fn gp2() -> SkewPoly {
    SkewPoly::g(Sign::Plus, 2, 0, 1)
}

/// `a² - a†²`.
pub fn gm2() -> SkewPoly {
    SkewPoly::g(Sign::Minus, 2, 0, 1)
}

/// `[i, i a†a, g_+^{ι₁}, g_-^{ι₁}, g_+^{2ι₁}, g_-^{2ι₁}]`.
pub fn schrodinger_basis() -> Vec<SkewPoly> {
    vec![i(), n(), gp1(), gm1(), gp2(), gm2()]
}

pub const SCHRODINGER_LABELS: [&str; 6] = ["i", "ia†a", "g+(1,0)", "g-(1,0)", "g+(2,0)", "g-(2,0)"];

/// One upper-triangular entry `[basis[row], basis[col]] = value` of the Schrödinger
/// monomial commutator table, indexed into [`schrodinger_basis`].
#[derive(Debug, Clone)]
pub struct TableEntry {
    pub row: usize,
    pub col: usize,
    pub value: SkewPoly,
}

/// The 15 commutators among the six monomials, zero entries included.
pub fn table1() -> Vec<TableEntry> {
    let r = |k: i64| super::rat(k, 1);
    let zero = SkewPoly::zero;
    let values = [
        // i with everything
        (0, 1, zero()),
        (0, 2, zero()),
        (0, 3, zero()),
        (0, 4, zero()),
        (0, 5, zero()),
        // i a†a
        (1, 2, gm1()),
        (1, 3, gp1().scale(&r(-1))),
        (1, 4, gm2().scale(&r(2))),
        (1, 5, gp2().scale(&r(-2))),
        // displacements
        (2, 3, i().scale(&r(-2))),
        (2, 4, gm1().scale(&r(2))),
        (2, 5, gp1().scale(&r(-2))),
        (3, 4, gp1().scale(&r(2))),
        (3, 5, gm1().scale(&r(2))),
        // -8i(a†a + 1/2)
        (4, 5, n().scale(&r(-8)).add(&i().scale(&r(-4)))),
    ];
    values.into_iter().map(|(row, col, value)| TableEntry { row, col, value }).collect()
}
