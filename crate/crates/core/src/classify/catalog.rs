use std::fmt;

use serde::{Deserialize, Serialize};

use super::algebra::StructureConstants;
use super::Fingerprint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CatalogName {
    /// Abelian, parameter `n`.
    Abelian,
    Aff1,
    Aff1PlusR,
    H1,
    Sl2,
    Sl2PlusR,
    Wh1,
    Wh2,
    Schrodinger,
    /// Filiform `L_n`, parameter `n` (dimension `n + 1`).
    L,
    /// `R ⋉ L_n`, parameter `n` (dimension `n + 2`).
    LTilde,
    /// `r(j_1, ..., j_n)`, parameters `j_k`.
    R,
}

impl CatalogName {
    /// The eight glossary algebras with fixed structure.
    pub const CONCRETE: [CatalogName; 8] = [
        CatalogName::Aff1,
        CatalogName::Aff1PlusR,
        CatalogName::H1,
        CatalogName::Sl2,
        CatalogName::Sl2PlusR,
        CatalogName::Wh1,
        CatalogName::Wh2,
        CatalogName::Schrodinger,
    ];
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: CatalogName,
    pub params: Vec<i64>,
}

impl CatalogEntry {
    pub fn concrete(name: CatalogName) -> Self {
        CatalogEntry { name, params: Vec::new() }
    }

    pub fn abelian(n: usize) -> Self {
        CatalogEntry {
            name: CatalogName::Abelian,
            params: vec![n as i64],
        }
    }

    pub fn filiform(n: usize) -> Self {
        CatalogEntry {
            name: CatalogName::L,
            params: vec![n as i64],
        }
    }

    pub fn filiform_extension(n: usize) -> Self {
        CatalogEntry {
            name: CatalogName::LTilde,
            params: vec![n as i64],
        }
    }

    pub fn diagonal(j: Vec<i64>) -> Self {
        CatalogEntry {
            name: CatalogName::R,
            params: j,
        }
    }

    pub fn is_abelian(&self) -> bool {
        self.name == CatalogName::Abelian
    }

    /// Reference structure constants.
    pub fn algebra(&self) -> StructureConstants {
        let p = |i: usize| self.params[i] as usize;
        match self.name {
            CatalogName::Abelian => StructureConstants::abelian(p(0)),
            CatalogName::Aff1 => StructureConstants::from_brackets(2, &[(0, 1, &[(1, 1)])]),
            CatalogName::Aff1PlusR => StructureConstants::from_brackets(3, &[(0, 1, &[(1, 1)])]),
            CatalogName::H1 => StructureConstants::from_brackets(3, &[(0, 1, &[(2, 1)])]),
            // h, x, y
            CatalogName::Sl2 => StructureConstants::from_brackets(3, SL2),
            CatalogName::Sl2PlusR => StructureConstants::from_brackets(4, SL2),
            // e1, e2, e3, e4
            CatalogName::Wh1 => StructureConstants::from_brackets(4, &[(1, 2, &[(0, 1)]), (1, 3, &[(1, 1)]), (2, 3, &[(2, -1)])]),
            // h, q, p, z
            CatalogName::Wh2 => StructureConstants::from_brackets(4, &[(0, 1, &[(2, -1)]), (0, 2, &[(1, 1)]), (1, 2, &[(3, 1)])]),
            // h, x, y, q, p, z
            CatalogName::Schrodinger => StructureConstants::from_brackets(
                6,
                &[
                    (0, 1, &[(1, 2)]),
                    (0, 2, &[(2, -2)]),
                    (1, 2, &[(0, 1)]),
                    (0, 3, &[(3, 1)]),
                    (0, 4, &[(4, -1)]),
                    (1, 4, &[(3, 1)]),
                    (2, 3, &[(4, 1)]),
                    (3, 4, &[(5, 1)]),
                ],
            ),
            CatalogName::L => filiform(p(0)),
            CatalogName::LTilde => filiform_extension(p(0)),
            CatalogName::R => diagonal(&self.params),
        }
    }

    pub fn fingerprint(&self) -> Fingerprint {
        Fingerprint::of(&self.algebra())
    }

    /// Stable text label, e.g. `wh1`, `L_4`, `r(0,1,2)`, `R^2`.
    pub fn label(&self) -> String {
        self.to_string()
    }
}

const SL2: &[(usize, usize, &[(usize, i64)])] = &[(0, 1, &[(1, 2)]), (0, 2, &[(2, -2)]), (1, 2, &[(0, 1)])];

/// `[e_1, e_j] = e_{j+1}`, `j = 2..n`, on `e_1..e_{n+1}` (stored at indices `0..=n`).
fn filiform(n: usize) -> StructureConstants {
    let mut s = StructureConstants::abelian(n + 1);
    for j in 2..=n {
        s = s.with_bracket(0, j - 1, j, 1);
    }
    s
}

/// Basis `e_0..e_{n+1}`: `[e_0, e_1] = e_1`, `[e_0, e_j] = -(n + 1 - j) e_j`,
/// `[e_1, e_j] = e_{j+1}`.
fn filiform_extension(n: usize) -> StructureConstants {
    let mut s = StructureConstants::abelian(n + 2).with_bracket(0, 1, 1, 1);
    for j in 2..=n + 1 {
        let w = (n + 1 - j) as i64;
        if w != 0 {
            s = s.with_bracket(0, j, j, -w);
        }
        if j <= n {
            s = s.with_bracket(1, j, j + 1, 1);
        }
    }
    s
}

/// Basis `e_0..e_n`: `[e_0, e_k] = -j_k e_k`.
fn diagonal(j: &[i64]) -> StructureConstants {
    let mut s = StructureConstants::abelian(j.len() + 1);
    for (k, &jk) in j.iter().enumerate() {
        if jk != 0 {
            s = s.with_bracket(0, k + 1, k + 1, -jk);
        }
    }
    s
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.name {
            CatalogName::Abelian => write!(f, "R^{}", self.params[0]),
            CatalogName::Aff1 => write!(f, "aff(1)"),
            CatalogName::Aff1PlusR => write!(f, "aff(1)⊕R"),
            CatalogName::H1 => write!(f, "h1"),
            CatalogName::Sl2 => write!(f, "sl2"),
            CatalogName::Sl2PlusR => write!(f, "sl2⊕R"),
            CatalogName::Wh1 => write!(f, "wh1"),
            CatalogName::Wh2 => write!(f, "wh2"),
            CatalogName::Schrodinger => write!(f, "Schrodinger"),
            CatalogName::L => write!(f, "L_{}", self.params[0]),
            CatalogName::LTilde => write!(f, "Ltilde_{}", self.params[0]),
            CatalogName::R => {
                let j: Vec<String> = self.params.iter().map(|v| v.to_string()).collect();
                write!(f, "r({})", j.join(","))
            }
        }
    }
}
