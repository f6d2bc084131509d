use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::algebra::StructureConstants;
use super::catalog::{CatalogEntry, CatalogName};
use super::Fingerprint;
use crate::linalg::{self, Matrix, Vector};
use crate::weyl_core::Rational;

/// How an identification was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Fingerprint equal to that of a fixed catalog algebra.
    Fingerprint,
    /// Explicit basis `{y_0..y_{n-2}, x}` with `[x, y_j] = y_{j-1}`.
    NilpotentBasis,
    /// Derived algebra carries a filiform basis and the fingerprint matches `Ltilde_n`.
    DerivedFiliform,
    /// Abelian derived algebra with a rational diagonalizable action.
    DiagonalAction,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Identification {
    Known { entry: CatalogEntry, method: Method },
    Unrecognized(Fingerprint),
}

impl Identification {
    pub fn entry(&self) -> Option<&CatalogEntry> {
        match self {
            Identification::Known { entry, .. } => Some(entry),
            Identification::Unrecognized(_) => None,
        }
    }

    pub fn label(&self) -> Option<String> {
        self.entry().map(|e| e.label())
    }
}

/// Coordinates of `{y_0..y_{n-2}}` and `x` with `[x, y_j] = y_{j-1}`, `[x, y_0] = 0`
/// and the `y_j` pairwise commuting.
#[derive(Debug, Clone, PartialEq)]
pub struct FiliformCoords {
    pub ys: Vec<Vector>,
    pub x: Vector,
}

impl FiliformCoords {
    pub fn verify(&self, s: &StructureConstants) -> bool {
        let zero = |v: &Vector| v.iter().all(|c| c.is_zero());
        let mut all = self.ys.clone();
        all.push(self.x.clone());
        if linalg::rank(&all) != s.dim() {
            return false;
        }
        if !zero(&s.bracket(&self.x, &self.ys[0])) {
            return false;
        }
        for j in 1..self.ys.len() {
            if s.bracket(&self.x, &self.ys[j]) != self.ys[j - 1] {
                return false;
            }
        }
        for j in 0..self.ys.len() {
            for k in j + 1..self.ys.len() {
                if !zero(&s.bracket(&self.ys[j], &self.ys[k])) {
                    return false;
                }
            }
        }
        true
    }
}

fn in_span(rows: &[Vector], v: &[Rational]) -> bool {
    rows.is_empty() && v.iter().all(|c| c.is_zero()) || linalg::solve_combination(rows, v).is_some()
}

fn combination(rows: &[Vector], coeffs: &[Rational]) -> Vector {
    let mut out = vec![Rational::zero(); rows.first().map_or(0, |r| r.len())];
    for (r, c) in rows.iter().zip(coeffs) {
        for (o, v) in out.iter_mut().zip(r) {
            *o += c * v;
        }
    }
    out
}

/// Elements `x` commuting with all of `rows`.
fn centralizer(s: &StructureConstants, rows: &[Vector]) -> Matrix {
    let stacked: Matrix = rows.iter().flat_map(|v| s.ad(v)).collect();
    linalg::kernel(&stacked, s.dim())
}

/// Candidates outside `avoid`: unit vectors, then sums and differences of two.
fn candidates(n: usize, avoid: &[Vector]) -> Vec<Vector> {
    let unit = |i: usize| {
        let mut v = vec![Rational::zero(); n];
        v[i] = Rational::one();
        v
    };
    let mut out: Vec<Vector> = (0..n).map(unit).collect();
    for i in 0..n {
        for j in i + 1..n {
            for sign in [1, -1] {
                let mut v = unit(i);
                v[j] = Rational::from_integer(sign.into());
                out.push(v);
            }
        }
    }
    out.retain(|v| !in_span(avoid, v));
    out
}

/// Builds the filiform basis along the lower central series: `y_0` spans
/// `n_{n-2}`, and `y_j` is found in `n_{n-2-j}` with `[x, y_j] = y_{j-1}`.
/// The last `y` is taken from the centralizer of `n_1` so that all `y` commute.
pub fn filiform_basis(s: &StructureConstants) -> Option<FiliformCoords> {
    let n = s.dim();
    if n < 3 {
        return None;
    }
    let lcs = s.lower_central_series();
    let dims: Vec<usize> = lcs.iter().map(|m| m.len()).collect();
    let expected: Vec<usize> = std::iter::once(n).chain((0..=n - 2).rev()).collect();
    if dims != expected {
        return None;
    }
    let n1 = &lcs[1];
    if !s.bracket_space(n1, n1).is_empty() {
        return None;
    }
    let top = if n > 3 { centralizer(s, n1) } else { lcs[0].clone() };
    'next: for x in candidates(n, n1) {
        let mut ys = vec![lcs[n - 2][0].clone()];
        for j in 1..=n - 2 {
            let space = if j == n - 2 { &top } else { &lcs[n - 2 - j] };
            let images: Vec<Vector> = space.iter().map(|b| s.bracket(&x, b)).collect();
            let Some(c) = linalg::solve_combination(&images, &ys[j - 1]) else {
                continue 'next;
            };
            ys.push(combination(space, &c));
        }
        let out = FiliformCoords { ys, x };
        if out.verify(s) {
            return Some(out);
        }
    }
    None
}

/// `r(j)` parameters when the derived algebra is abelian and a single element acts on
/// it diagonalizably with distinct nonzero rational eigenvalues of one sign.
pub fn diagonal_params(s: &StructureConstants) -> Option<Vec<i64>> {
    let derived = s.derived_series();
    let d = derived.get(1)?.clone();
    if d.is_empty() || !s.bracket_space(&d, &d).is_empty() {
        return None;
    }
    let mut basis = d.clone();
    let mut complement = Vec::new();
    for i in 0..s.dim() {
        let e = s.unit(i);
        if !in_span(&basis, &e) {
            basis.push(e.clone());
            complement.push(e);
        }
    }
    if complement.len() > 2 {
        return None;
    }
    // action of each complement vector on d, in d coordinates (column k = image of d_k)
    let actions: Vec<Matrix> = complement
        .iter()
        .map(|c| {
            let cols: Option<Vec<Vector>> = d.iter().map(|dk| linalg::solve_combination(&d, &s.bracket(c, dk))).collect();
            cols.map(|cols| linalg::transpose(&cols))
        })
        .collect::<Option<_>>()?;
    let a = actions.iter().find(|m| m.iter().flatten().any(|v| !v.is_zero()))?.clone();
    let (pr, pc) = (0..a.len())
        .flat_map(|r| (0..a.len()).map(move |c| (r, c)))
        .find(|&(r, c)| !a[r][c].is_zero())?;
    for m in &actions {
        let lambda = &m[pr][pc] / &a[pr][pc];
        let proportional = m.iter().zip(&a).all(|(mr, ar)| mr.iter().zip(ar).all(|(x, y)| *x == &lambda * y));
        if !proportional {
            return None;
        }
    }
    let mut eig = linalg::rational_roots(&linalg::charpoly(&a))?;
    eig.dedup();
    if eig.len() != d.len() || eig.iter().any(|e| e.is_zero()) {
        return None;
    }
    if !(eig.iter().all(|e| e.is_positive()) || eig.iter().all(|e| e.is_negative())) {
        return None;
    }
    let mut j = normalize(&eig);
    j.sort();
    if complement.len() == 2 {
        j.insert(0, 0);
    }
    Some(j)
}

/// Coprime positive integers proportional to `|v|`.
fn normalize(v: &[Rational]) -> Vec<i64> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x.abs() * Rational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.iter().map(|x| i64::try_from(x / &g).unwrap_or(i64::MAX)).collect()
}

pub fn identify_abstract(s: &StructureConstants) -> Identification {
    let fp = Fingerprint::of(s);
    if fp.is_abelian() {
        return Identification::Known {
            entry: CatalogEntry::abelian(fp.dim),
            method: Method::Fingerprint,
        };
    }
    for name in CatalogName::CONCRETE {
        let entry = CatalogEntry::concrete(name);
        if entry.fingerprint() == fp {
            return Identification::Known {
                entry,
                method: Method::Fingerprint,
            };
        }
    }
    if fp.nilpotent {
        if filiform_basis(s).is_some() {
            return Identification::Known {
                entry: CatalogEntry::filiform(fp.dim - 1),
                method: Method::NilpotentBasis,
            };
        }
        return Identification::Unrecognized(fp);
    }
    if !fp.solvable {
        return Identification::Unrecognized(fp);
    }
    let derived = &s.derived_series()[1];
    if let Some(ds) = s.restrict(derived) {
        if ds.dim() + 1 == fp.dim && filiform_basis(&ds).is_some() {
            let entry = CatalogEntry::filiform_extension(ds.dim() - 1);
            if entry.fingerprint() == fp {
                return Identification::Known {
                    entry,
                    method: Method::DerivedFiliform,
                };
            }
        }
    }
    if let Some(j) = diagonal_params(s) {
        let entry = CatalogEntry::diagonal(j);
        if entry.fingerprint() == fp {
            return Identification::Known {
                entry,
                method: Method::DiagonalAction,
            };
        }
    }
    Identification::Unrecognized(fp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_families_identify_as_themselves() {
        for n in 3..7 {
            let e = CatalogEntry::filiform(n);
            assert_eq!(identify_abstract(&e.algebra()).entry(), Some(&e));
            let b = filiform_basis(&e.algebra()).unwrap();
            assert_eq!(b.ys.len(), n);
        }
        for n in 3..6 {
            let e = CatalogEntry::filiform_extension(n);
            assert_eq!(identify_abstract(&e.algebra()).entry(), Some(&e));
        }
        for j in [vec![1, 2], vec![0, 1, 3], vec![2, 3, 5]] {
            let e = CatalogEntry::diagonal(j);
            assert_eq!(identify_abstract(&e.algebra()).entry(), Some(&e));
        }
    }

    #[test]
    fn rescaled_diagonal_action() {
        // [e0, e1] = 2 e1, [e0, e2] = 4 e2 is r(1, 2)
        let s = StructureConstants::abelian(3).with_bracket(0, 1, 1, 2).with_bracket(0, 2, 2, 4);
        assert_eq!(diagonal_params(&s), Some(vec![1, 2]));
    }

    #[test]
    fn mixed_signs_unrecognized() {
        // [e0, e1] = e1, [e0, e2] = -2 e2
        let s = StructureConstants::abelian(3).with_bracket(0, 1, 1, 1).with_bracket(0, 2, 2, -2);
        assert!(matches!(identify_abstract(&s), Identification::Unrecognized(_)));
    }

    #[test]
    fn concrete_entries_identify_by_fingerprint() {
        for name in CatalogName::CONCRETE {
            let e = CatalogEntry::concrete(name);
            assert_eq!(
                identify_abstract(&e.algebra()),
                Identification::Known {
                    entry: e,
                    method: Method::Fingerprint
                }
            );
        }
    }
}
