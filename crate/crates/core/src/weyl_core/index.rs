use std::cmp::Ordering;
use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Serialize};

/// Index `(alpha, beta)` of the canonical monomial `(a†)^alpha a^beta`.
///
/// The derived ordering is the lexicographic one: `alpha` first, then `beta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiIndex {
    pub alpha: u32,
    pub beta: u32,
}

impl MultiIndex {
    pub const ZERO: MultiIndex = MultiIndex { alpha: 0, beta: 0 };
    /// `tau = (1, 1)`, the number-operator index.
    pub const TAU: MultiIndex = MultiIndex { alpha: 1, beta: 1 };
    pub const IOTA1: MultiIndex = MultiIndex { alpha: 1, beta: 0 };
    pub const IOTA2: MultiIndex = MultiIndex { alpha: 0, beta: 1 };

    pub const fn new(alpha: u32, beta: u32) -> Self {
        MultiIndex { alpha, beta }
    }

    pub fn degree(self) -> u32 {
        self.alpha + self.beta
    }

    pub fn is_well_ordered(self) -> bool {
        self.alpha >= self.beta
    }

    pub fn dagger(self) -> Self {
        MultiIndex::new(self.beta, self.alpha)
    }

    /// Elementwise product `gamma ∘ gamma'`.
    pub fn hadamard(self, other: Self) -> Self {
        MultiIndex::new(self.alpha * other.alpha, self.beta * other.beta)
    }

    pub fn scaled(self, k: u32) -> Self {
        MultiIndex::new(self.alpha * k, self.beta * k)
    }
}

impl std::ops::Add for MultiIndex {
    type Output = MultiIndex;
    fn add(self, rhs: Self) -> Self {
        MultiIndex::new(self.alpha + rhs.alpha, self.beta + rhs.beta)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.alpha, self.beta)
    }
}

/// `chi(gamma) = alpha - beta`.
pub fn chi(gamma: MultiIndex) -> i64 {
    gamma.alpha as i64 - gamma.beta as i64
}

/// Returns `gamma` if `gamma >= gamma†`, otherwise `gamma†`.
pub fn theta(gamma: MultiIndex) -> MultiIndex {
    if gamma >= gamma.dagger() {
        gamma
    } else {
        gamma.dagger()
    }
}

/// `+` iff `gamma >= gamma†`.
pub fn esign(gamma: MultiIndex) -> Sign {
    if gamma >= gamma.dagger() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// Key of a skew-hermitian monomial `g_sigma^gamma` with well-ordered `gamma`.
///
/// Ordered by `(degree, alpha, beta, sign)`; this is the column order used
/// by every echelon form in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewKey {
    pub sign: Sign,
    pub gamma: MultiIndex,
}

impl SkewKey {
    pub fn new(sign: Sign, gamma: MultiIndex) -> Self {
        SkewKey { sign, gamma }
    }

    pub fn degree(self) -> u32 {
        self.gamma.degree()
    }

    pub fn subspace(self) -> Subspace {
        Subspace::of(self.gamma)
    }
}

impl Ord for SkewKey {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), self.gamma, self.sign).cmp(&(other.degree(), other.gamma, other.sign))
    }
}

impl PartialOrd for SkewKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SkewKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}{}", self.sign.symbol(), self.gamma)
    }
}

/// The five blocks of the monomial decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Subspace {
    /// `i` and `i a†a`.
    A0,
    /// Displacements, index `(1,0)`.
    A1,
    /// Squeezings, index `(2,0)`.
    A2,
    /// `(k,k)` with `k >= 2`.
    Aeq,
    /// `alpha > beta`, `alpha + beta >= 3`.
    Aperp,
}

impl Subspace {
    pub const ALL: [Subspace; 5] = [
        Subspace::A0,
        Subspace::A1,
        Subspace::A2,
        Subspace::Aeq,
        Subspace::Aperp,
    ];

    /// Block containing a well-ordered index.
    pub fn of(gamma: MultiIndex) -> Subspace {
        let MultiIndex { alpha, beta } = gamma;
        if alpha == beta {
            if alpha <= 1 {
                Subspace::A0
            } else {
                Subspace::Aeq
            }
        } else if (alpha, beta) == (1, 0) {
            Subspace::A1
        } else if (alpha, beta) == (2, 0) {
            Subspace::A2
        } else {
            Subspace::Aperp
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_maps() {
        assert_eq!(chi(MultiIndex::new(3, 1)), 2);
        assert_eq!(theta(MultiIndex::new(1, 4)), MultiIndex::new(4, 1));
        assert_eq!(esign(MultiIndex::new(1, 4)), Sign::Minus);
        assert_eq!(esign(MultiIndex::new(2, 2)), Sign::Plus);
        let g = MultiIndex::new(2, 1);
        let h = MultiIndex::new(3, 0);
        assert_eq!(chi(g.hadamard(h)), 6);
        assert_eq!(chi(h.hadamard(g)), 6);
    }

    #[test]
    fn total_order() {
        assert!(MultiIndex::new(3, 0) > MultiIndex::new(2, 5));
        assert!(MultiIndex::new(2, 1) > MultiIndex::new(2, 0));
    }

    #[test]
    fn subspace_partition() {
        assert_eq!(Subspace::of(MultiIndex::new(0, 0)), Subspace::A0);
        assert_eq!(Subspace::of(MultiIndex::new(1, 1)), Subspace::A0);
        assert_eq!(Subspace::of(MultiIndex::new(1, 0)), Subspace::A1);
        assert_eq!(Subspace::of(MultiIndex::new(2, 0)), Subspace::A2);
        assert_eq!(Subspace::of(MultiIndex::new(3, 3)), Subspace::Aeq);
        assert_eq!(Subspace::of(MultiIndex::new(2, 1)), Subspace::Aperp);
        assert_eq!(Subspace::of(MultiIndex::new(3, 0)), Subspace::Aperp);
    }

    #[test]
    fn sign_algebra() {
        assert_eq!(Sign::Minus * Sign::Minus, Sign::Plus);
        assert_eq!(-Sign::Plus, Sign::Minus);
    }
}
