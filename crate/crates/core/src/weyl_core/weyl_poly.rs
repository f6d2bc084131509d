use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::index::MultiIndex;
use super::{GaussianRational, Rational};

/// Normal-ordered polynomial `sum c_{alpha,beta} (a†)^alpha a^beta` with
/// Gaussian-rational coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct WeylPoly {
    terms: BTreeMap<MultiIndex, GaussianRational>,
}

/// `j! C(r,j) C(s,j)` for `j = 0..=min(r,s)`: the coefficients that move
/// `a^r` past `(a†)^s`.
pub(crate) fn reorder_coefficients(r: u32, s: u32) -> Vec<BigInt> {
    let m = r.min(s);
    let mut out = Vec::with_capacity(m as usize + 1);
    let mut c = BigInt::one();
    out.push(c.clone());
    for j in 0..m {
        c = c * BigInt::from((r - j) as u64 * (s - j) as u64) / BigInt::from(j + 1);
        out.push(c.clone());
    }
    out
}

impl WeylPoly {
    pub fn zero() -> Self {
        WeylPoly::default()
    }

    pub fn one() -> Self {
        WeylPoly::term(MultiIndex::ZERO, GaussianRational::one())
    }

    /// `c (a†)^alpha a^beta`.
    pub fn term(index: MultiIndex, c: GaussianRational) -> Self {
        let mut p = WeylPoly::zero();
        p.add_term(index, c);
        p
    }

    pub fn a() -> Self {
        WeylPoly::term(MultiIndex::new(0, 1), GaussianRational::one())
    }

    pub fn adag() -> Self {
        WeylPoly::term(MultiIndex::new(1, 0), GaussianRational::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (MultiIndex, GaussianRational)>>(it: I) -> Self {
        let mut p = WeylPoly::zero();
        for (k, c) in it {
            p.add_term(k, c);
        }
        p
    }

    pub fn add_term(&mut self, index: MultiIndex, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&index) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&index);
                }
            }
            None => {
                self.terms.insert(index, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, index: MultiIndex) -> GaussianRational {
        self.terms.get(&index).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `None` encodes the degree of the zero polynomial (minus infinity).
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.degree()).max()
    }

    /// Terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> WeylPoly {
        WeylPoly {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.degree() == d)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> WeylPoly {
        if c.is_zero() {
            return WeylPoly::zero();
        }
        WeylPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn scale_real(&self, c: &Rational) -> WeylPoly {
        self.scale(&GaussianRational::new(c.clone(), Rational::zero()))
    }

    pub fn add(&self, other: &WeylPoly) -> WeylPoly {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &WeylPoly) -> WeylPoly {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, -c.clone());
        }
        out
    }

    /// Normal-ordered product.
    pub fn mul(&self, other: &WeylPoly) -> WeylPoly {
        let mut acc: BTreeMap<MultiIndex, GaussianRational> = BTreeMap::new();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let c = c1 * c2;
                let coeffs = reorder_coefficients(k1.beta, k2.alpha);
                for (j, w) in coeffs.iter().enumerate() {
                    let j = j as u32;
                    let idx = MultiIndex::new(k1.alpha + k2.alpha - j, k1.beta + k2.beta - j);
                    let wq = Rational::from_integer(w.clone());
                    let term = GaussianRational::new(&c.re * &wq, &c.im * &wq);
                    accumulate(&mut acc, idx, term);
                }
            }
        }
        WeylPoly::from_map(acc)
    }

    /// `[p, q] = pq - qp`, computed without the cancelling `j = 0` terms.
    pub fn commutator(&self, other: &WeylPoly) -> WeylPoly {
        let mut acc: BTreeMap<MultiIndex, GaussianRational> = BTreeMap::new();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let c = c1 * c2;
                let fwd = reorder_coefficients(k1.beta, k2.alpha);
                let bwd = reorder_coefficients(k2.beta, k1.alpha);
                let top = fwd.len().max(bwd.len());
                for j in 1..top {
                    let mut w = BigInt::zero();
                    if let Some(f) = fwd.get(j) {
                        w += f;
                    }
                    if let Some(b) = bwd.get(j) {
                        w -= b;
                    }
                    if w.is_zero() {
                        continue;
                    }
                    let j = j as u32;
                    let idx = MultiIndex::new(k1.alpha + k2.alpha - j, k1.beta + k2.beta - j);
                    let wq = Rational::from_integer(w);
                    let term = GaussianRational::new(&c.re * &wq, &c.im * &wq);
                    accumulate(&mut acc, idx, term);
                }
            }
        }
        WeylPoly::from_map(acc)
    }

    /// Hermitian conjugate: reverses products and conjugates coefficients.
    pub fn dagger(&self) -> WeylPoly {
        WeylPoly {
            terms: self.terms.iter().map(|(k, c)| (k.dagger(), c.conj())).collect(),
        }
    }

    fn from_map(acc: BTreeMap<MultiIndex, GaussianRational>) -> WeylPoly {
        WeylPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

fn accumulate(acc: &mut BTreeMap<MultiIndex, GaussianRational>, k: MultiIndex, c: GaussianRational) {
    match acc.get_mut(&k) {
        Some(v) => *v = &*v + &c,
        None => {
            acc.insert(k, c);
        }
    }
}

fn fmt_gauss(c: &GaussianRational) -> String {
    match (c.re.is_zero(), c.im.is_zero()) {
        (_, true) => format!("{}", c.re),
        (true, false) => format!("{}i", c.im),
        _ => format!("({} + {}i)", c.re, c.im),
    }
}

impl fmt::Display for WeylPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(k, c)| {
                let mono = match (k.alpha, k.beta) {
                    (0, 0) => String::from("1"),
                    (a, b) => {
                        let mut s = String::new();
                        if a > 0 {
                            s.push_str(&if a == 1 { "a†".into() } else { format!("a†^{a}") });
                        }
                        if b > 0 {
                            s.push_str(&if b == 1 { "a".into() } else { format!("a^{b}") });
                        }
                        s
                    }
                };
                format!("{}*{}", fmt_gauss(c), mono)
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
