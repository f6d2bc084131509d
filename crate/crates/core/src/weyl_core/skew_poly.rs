use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::index::{MultiIndex, Sign, SkewKey, Subspace};
use super::weyl_poly::WeylPoly;
use super::{GaussianRational, Rational};
use crate::error::Error;

/// Real-rational combination of the skew-hermitian monomials
///
/// * `g_+^gamma = i((a†)^beta a^alpha + (a†)^alpha a^beta)`
/// * `g_-^gamma = (a†)^beta a^alpha - (a†)^alpha a^beta`
///
/// for well-ordered `gamma = (alpha, beta)`. Keys `(-, (k,k))` never occur.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SkewPoly {
    terms: BTreeMap<SkewKey, Rational>,
}

/// `c g_sigma^gamma`; zero for `sigma = -` on a diagonal index.
pub fn monomial(sigma: Sign, gamma: MultiIndex, c: Rational) -> Result<SkewPoly, Error> {
    if !gamma.is_well_ordered() {
        return Err(Error::NotWellOrdered {
            alpha: gamma.alpha,
            beta: gamma.beta,
        });
    }
    let mut p = SkewPoly::zero();
    p.add_term(SkewKey::new(sigma, gamma), c);
    Ok(p)
}

impl SkewPoly {
    pub fn zero() -> Self {
        SkewPoly::default()
    }

    /// Panicking shorthand for `monomial` with an integer coefficient.
    pub fn g(sigma: Sign, alpha: u32, beta: u32, c: i64) -> SkewPoly {
        monomial(sigma, MultiIndex::new(alpha, beta), Rational::from_integer(c.into()))
            .expect("well-ordered index")
    }

    pub fn from_terms<I: IntoIterator<Item = (SkewKey, Rational)>>(it: I) -> Result<Self, Error> {
        let mut p = SkewPoly::zero();
        for (k, c) in it {
            if !k.gamma.is_well_ordered() {
                return Err(Error::NotWellOrdered {
                    alpha: k.gamma.alpha,
                    beta: k.gamma.beta,
                });
            }
            p.add_term(k, c);
        }
        Ok(p)
    }

    /// Adds `c g_key`. Keys must be well-ordered; vanishing monomials are dropped.
    pub(crate) fn add_term(&mut self, key: SkewKey, c: Rational) {
        debug_assert!(key.gamma.is_well_ordered());
        if c.is_zero() || (key.sign == Sign::Minus && key.gamma.alpha == key.gamma.beta) {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&SkewKey, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: SkewKey) -> Rational {
        self.terms.get(&key).cloned().unwrap_or_else(Rational::zero)
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

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.degree()).max()
    }

    /// Largest key in the `(degree, alpha, beta, sign)` order.
    pub fn leading_key(&self) -> Option<SkewKey> {
        self.terms.keys().next_back().copied()
    }

    /// The single `(key, coefficient)` if this is a nonzero multiple of one monomial.
    pub fn as_monomial(&self) -> Option<(SkewKey, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(k, c)| (*k, c))
        } else {
            None
        }
    }

    pub fn scale(&self, c: &Rational) -> SkewPoly {
        if c.is_zero() {
            return SkewPoly::zero();
        }
        SkewPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn add(&self, other: &SkewPoly) -> SkewPoly {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SkewPoly) -> SkewPoly {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, -c.clone());
        }
        out
    }

    /// Adds `c * other` in place.
    pub fn axpy(&mut self, c: &Rational, other: &SkewPoly) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(*k, v * c);
        }
    }

    pub fn project(&self, block: Subspace) -> SkewPoly {
        SkewPoly {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.subspace() == block)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    pub fn to_weyl(&self) -> WeylPoly {
        let mut out = WeylPoly::zero();
        for (k, c) in &self.terms {
            let MultiIndex { alpha, beta } = k.gamma;
            let zero = Rational::zero();
            if alpha == beta {
                // g_+^{(k,k)} = 2i (a†)^k a^k
                let v = c * Rational::from_integer(2.into());
                out.add_term(k.gamma, GaussianRational::new(zero, v));
                continue;
            }
            let low = MultiIndex::new(beta, alpha); // (a†)^beta a^alpha
            let high = k.gamma; // (a†)^alpha a^beta
            match k.sign {
                Sign::Plus => {
                    out.add_term(low, GaussianRational::new(zero.clone(), c.clone()));
                    out.add_term(high, GaussianRational::new(zero, c.clone()));
                }
                Sign::Minus => {
                    out.add_term(low, GaussianRational::new(c.clone(), zero.clone()));
                    out.add_term(high, GaussianRational::new(-c.clone(), zero));
                }
            }
        }
        out
    }

    /// Inverse of `to_weyl`; fails on input with `p† != -p`.
    pub fn from_weyl(p: &WeylPoly) -> Result<SkewPoly, Error> {
        let mut out = SkewPoly::zero();
        for (idx, c) in p.terms() {
            let partner = p.coeff(idx.dagger());
            if partner != -c.conj() {
                return Err(Error::NotSkewHermitian {
                    alpha: idx.alpha,
                    beta: idx.beta,
                    coeff: format!("{} + {}i", c.re, c.im),
                });
            }
            if !idx.is_well_ordered() {
                continue;
            }
            if idx.alpha == idx.beta {
                out.add_term(SkewKey::new(Sign::Plus, *idx), &c.im / Rational::from_integer(2.into()));
            } else {
                // coefficient of (a†)^alpha a^beta is i r_+ - r_-
                out.add_term(SkewKey::new(Sign::Plus, *idx), c.im.clone());
                out.add_term(SkewKey::new(Sign::Minus, *idx), -c.re.clone());
            }
        }
        Ok(out)
    }

    /// Exact commutator; the result is again skew-hermitian.
    pub fn bracket(&self, other: &SkewPoly) -> SkewPoly {
        let w = self.to_weyl().commutator(&other.to_weyl());
        SkewPoly::from_weyl(&w).expect("commutator of skew-hermitian elements is skew-hermitian")
    }

    /// Rescales so the leading coefficient is one.
    pub fn normalized(&self) -> SkewPoly {
        match self.terms.values().next_back() {
            Some(c) if !c.is_one() => self.scale(&c.recip()),
            _ => self.clone(),
        }
    }

    pub fn max_abs_coeff(&self) -> Rational {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

impl fmt::Display for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(k, c)| {
                if c.is_one() {
                    format!("{k}")
                } else {
                    format!("{c}*{k}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
