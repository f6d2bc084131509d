use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::linalg::{self, Matrix, Vector};
use crate::weyl_core::{Rational, SkewKey, SkewPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
struct Row {
    /// Reduced vector with pivot coefficient one.
    vec: SkewPoly,
    /// `vec` expressed in the stored basis.
    combo: Vector,
}

/// Exact finite-dimensional subspace of the skew-hermitian Weyl algebra.
///
/// `basis` keeps the elements in insertion order; the echelon rows are kept
/// fully reduced so that membership and coordinates are one pass each.
#[derive(Debug, Clone, Default)]
pub struct LieSpan {
    basis: Vec<SkewPoly>,
    rows: BTreeMap<SkewKey, Row>,
}

impl LieSpan {
    pub fn new() -> Self {
        LieSpan::default()
    }

    /// Linear span (not the Lie closure) of `elements`.
    pub fn spanned_by<'a, I: IntoIterator<Item = &'a SkewPoly>>(elements: I) -> Self {
        let mut s = LieSpan::new();
        for e in elements {
            s.insert(e.clone());
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SkewPoly] {
        &self.basis
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.basis.iter().filter_map(|b| b.degree()).max()
    }

    /// Reduces `x` against the echelon rows; returns the residual and the
    /// multiples of each row that were removed.
    fn reduce(&self, x: &SkewPoly) -> (SkewPoly, Vec<(SkewKey, Rational)>) {
        let mut r = x.clone();
        let mut used = Vec::new();
        for (pivot, row) in &self.rows {
            let c = r.coeff(*pivot);
            if !c.is_zero() {
                r.axpy(&-c.clone(), &row.vec);
                used.push((*pivot, c));
            }
        }
        (r, used)
    }

    pub fn contains(&self, x: &SkewPoly) -> bool {
        self.reduce(x).0.is_zero()
    }

    /// Adds `x` to the basis if it is independent; returns whether it was added.
    pub fn insert(&mut self, x: SkewPoly) -> bool {
        let (residual, used) = self.reduce(&x);
        let Some(pivot) = residual.leading_key() else {
            return false;
        };
        let k = self.basis.len();
        self.basis.push(x);
        for row in self.rows.values_mut() {
            row.combo.push(Rational::zero());
        }
        let lc = residual.coeff(pivot).recip();
        let mut combo = vec![Rational::zero(); k + 1];
        combo[k] = Rational::one();
        for (p, c) in &used {
            for (dst, src) in combo.iter_mut().zip(&self.rows[p].combo) {
                *dst -= c * src;
            }
        }
        let new = Row {
            vec: residual.scale(&lc),
            combo: combo.into_iter().map(|c| c * &lc).collect(),
        };
        for row in self.rows.values_mut() {
            let c = row.vec.coeff(pivot);
            if c.is_zero() {
                continue;
            }
            row.vec.axpy(&-c.clone(), &new.vec);
            for (dst, src) in row.combo.iter_mut().zip(&new.combo) {
                *dst -= &c * src;
            }
        }
        self.rows.insert(pivot, new);
        true
    }

    /// Coordinates of `x` in `basis()`, or `None` if `x` is outside the span.
    pub fn coordinates(&self, x: &SkewPoly) -> Option<Vector> {
        let (r, used) = self.reduce(x);
        if !r.is_zero() {
            return None;
        }
        let mut out = vec![Rational::zero(); self.dim()];
        for (p, c) in used {
            for (dst, src) in out.iter_mut().zip(&self.rows[&p].combo) {
                *dst += &c * src;
            }
        }
        Some(out)
    }

    /// `sum_k c_k basis_k`.
    pub fn combine(&self, coords: &[Rational]) -> SkewPoly {
        let mut out = SkewPoly::zero();
        for (c, b) in coords.iter().zip(&self.basis) {
            out.axpy(c, b);
        }
        out
    }

    /// Reduced echelon rows ordered by pivot: a canonical form of the subspace.
    pub fn canonical_rows(&self) -> Vec<SkewPoly> {
        self.rows.values().map(|r| r.vec.clone()).collect()
    }

    pub fn same_subspace(&self, other: &LieSpan) -> bool {
        self.dim() == other.dim() && self.rows.keys().eq(other.rows.keys()) && self.canonical_rows() == other.canonical_rows()
    }

    pub fn contains_span(&self, other: &LieSpan) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    /// First pair `(i, j)` whose bracket leaves the span, if any.
    pub fn closure_defect(&self) -> Option<(usize, usize)> {
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                if !self.contains(&self.basis[i].bracket(&self.basis[j])) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_closed(&self) -> bool {
        self.closure_defect().is_none()
    }

    /// Matrix of `ad_x` restricted to the span, columns indexed by `basis()`.
    /// `None` if `[x, b]` leaves the span for some basis element.
    pub fn ad_matrix(&self, x: &SkewPoly) -> Option<Matrix> {
        let cols: Option<Vec<Vector>> = self.basis.iter().map(|b| self.coordinates(&x.bracket(b))).collect();
        Some(linalg::transpose(&cols?))
    }

    /// Subspace spanned by `basis()`-coordinates `vectors`.
    pub fn subspace(&self, vectors: &[Vector]) -> LieSpan {
        let mut s = LieSpan::new();
        for v in vectors {
            s.insert(self.combine(v));
        }
        s
    }
}

impl PartialEq for LieSpan {
    fn eq(&self, other: &Self) -> bool {
        self.same_subspace(other)
    }
}

impl Eq for LieSpan {}
