//! Structural invariants of finite subalgebras and identification against a
//! catalog of named algebras.
//!
//! Everything is computed from exact structure constants in the basis stored by
//! a [`LieSpan`]. Identification never solves the nonlinear isomorphism
//! equations; it matches fingerprints, or for the parametric families builds the
//! structure that defines them, and reports which of these it used.

mod algebra;
mod catalog;
mod identify;

use serde::{Deserialize, Serialize};

pub use algebra::StructureConstants;
pub use catalog::{CatalogEntry, CatalogName};
pub use identify::{diagonal_params, filiform_basis, identify_abstract, FiliformCoords, Identification, Method};

use crate::error::Error;
use crate::lie_engine::{closure_budgeted, Budget, LieSpan};
use crate::linalg::{self, Matrix};
use crate::weyl_core::json::{skew_to_json, PolyJson};
use crate::weyl_core::SkewPoly;

/// Isomorphism invariants used for catalog matching.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub derived_dims: Vec<usize>,
    pub lcs_dims: Vec<usize>,
    pub center_dim: usize,
    pub solvable: bool,
    pub nilpotent: bool,
    pub killing_rank: usize,
    pub killing_signature: (usize, usize, usize),
}

impl Fingerprint {
    pub fn of(s: &StructureConstants) -> Self {
        let derived_dims: Vec<usize> = s.derived_series().iter().map(|m| m.len()).collect();
        let lcs_dims: Vec<usize> = s.lower_central_series().iter().map(|m| m.len()).collect();
        let gram = s.killing_gram();
        let sig = linalg::signature(&gram);
        Fingerprint {
            dim: s.dim(),
            solvable: derived_dims.last() == Some(&0),
            nilpotent: lcs_dims.last() == Some(&0),
            derived_dims,
            lcs_dims,
            center_dim: s.center().len(),
            killing_rank: linalg::rank(&gram),
            killing_signature: sig,
        }
    }

    pub fn is_abelian(&self) -> bool {
        self.derived_dims.get(1).is_none_or(|&d| d == 0)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct KillingForm {
    pub gram: Matrix,
    pub rank: usize,
    pub signature: (usize, usize, usize),
}

fn constants(b: &LieSpan) -> Result<StructureConstants, Error> {
    StructureConstants::from_span(b)
}

fn spans(b: &LieSpan, series: Vec<Matrix>) -> Vec<LieSpan> {
    series.iter().map(|m| b.subspace(m)).collect()
}

/// `D^0 = b`, `D^{l+1} = [D^l, D^l]` until the dimension repeats.
pub fn derived_series(b: &LieSpan) -> Result<Vec<LieSpan>, Error> {
    Ok(spans(b, constants(b)?.derived_series()))
}

/// `n_0 = b`, `n_{j+1} = [b, n_j]` until the dimension repeats.
pub fn lower_central_series(b: &LieSpan) -> Result<Vec<LieSpan>, Error> {
    Ok(spans(b, constants(b)?.lower_central_series()))
}

pub fn center(b: &LieSpan) -> Result<LieSpan, Error> {
    Ok(b.subspace(&constants(b)?.center()))
}

/// `B(x, y) = tr(ad_x ad_y)` in the stored basis of `b`.
pub fn killing_form(b: &LieSpan) -> Result<KillingForm, Error> {
    let gram = constants(b)?.killing_gram();
    Ok(KillingForm {
        rank: linalg::rank(&gram),
        signature: linalg::signature(&gram),
        gram,
    })
}

pub fn fingerprint(b: &LieSpan) -> Result<Fingerprint, Error> {
    Ok(Fingerprint::of(&constants(b)?))
}

pub fn identify(b: &LieSpan) -> Result<Identification, Error> {
    Ok(identify_abstract(&constants(b)?))
}

/// Realized basis `{y_0..y_{n-2}, x}` of a non-abelian nilpotent subalgebra.
#[derive(Debug, Clone)]
pub struct NilpotentBasis {
    pub ys: Vec<SkewPoly>,
    pub x: SkewPoly,
}

impl NilpotentBasis {
    /// Exact check of `[y_j, y_k] = 0`, `[x, y_j] = y_{j-1}`, `[x, y_0] = 0` and that
    /// the elements span `b`.
    pub fn verify(&self, b: &LieSpan) -> bool {
        let mut all = self.ys.clone();
        all.push(self.x.clone());
        if !LieSpan::spanned_by(&all).same_subspace(b) || all.len() != b.dim() {
            return false;
        }
        let commuting = self
            .ys
            .iter()
            .enumerate()
            .all(|(j, y)| self.ys[j + 1..].iter().all(|z| y.bracket(z).is_zero()));
        let ladder = (1..self.ys.len()).all(|j| self.x.bracket(&self.ys[j]) == self.ys[j - 1]);
        commuting && ladder && self.x.bracket(&self.ys[0]).is_zero()
    }
}

/// `None` when `b` is abelian or not nilpotent.
pub fn nilpotent_basis(b: &LieSpan) -> Result<Option<NilpotentBasis>, Error> {
    let s = constants(b)?;
    Ok(filiform_basis(&s).map(|c| NilpotentBasis {
        ys: c.ys.iter().map(|v| b.combine(v)).collect(),
        x: b.combine(&c.x),
    }))
}

/// Whether the two elements generate all of `b`.
pub fn nullity_witness(b: &LieSpan, pair: [&SkewPoly; 2]) -> Result<bool, Error> {
    for p in pair {
        if !b.contains(p) {
            return Err(Error::NotInSpan(p.to_string()));
        }
    }
    let budget = Budget {
        max_dim: b.dim().max(1),
        max_degree: b.max_degree().unwrap_or(0),
    };
    Ok(closure_budgeted(&[pair[0].clone(), pair[1].clone()], budget)
        .span()
        .is_some_and(|s| s.same_subspace(b)))
}

#[derive(Debug, Clone, Serialize)]
pub struct KillingJson {
    /// Rows of exact rationals as strings.
    pub gram: Vec<Vec<String>>,
    pub rank: usize,
    pub signature: (usize, usize, usize),
}

/// Classification output; field names are stable.
#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub dim: usize,
    pub basis: Vec<PolyJson>,
    pub fingerprint: Fingerprint,
    pub killing: KillingJson,
    /// Catalog label, `null` when unrecognized.
    pub catalog: Option<String>,
    pub catalog_entry: Option<CatalogEntry>,
    /// `fingerprint`, `nilpotent_basis`, `derived_filiform`, `diagonal_action` or `unrecognized`.
    pub method: String,
    pub nilpotent_basis: Option<Vec<PolyJson>>,
}

pub fn classification_report(b: &LieSpan) -> Result<ClassificationReport, Error> {
    let s = constants(b)?;
    let fp = Fingerprint::of(&s);
    let k = killing_form(b)?;
    let id = identify_abstract(&s);
    let (entry, method) = match &id {
        Identification::Known { entry, method } => (
            Some(entry.clone()),
            serde_json::to_value(method)
                .ok()
                .and_then(|v| v.as_str().map(str::to_string))
                .unwrap_or_default(),
        ),
        Identification::Unrecognized(_) => (None, "unrecognized".to_string()),
    };
    let nb = nilpotent_basis(b)?.map(|n| {
        let mut v: Vec<PolyJson> = n.ys.iter().map(skew_to_json).collect();
        v.push(skew_to_json(&n.x));
        v
    });
    Ok(ClassificationReport {
        dim: b.dim(),
        basis: b.basis().iter().map(skew_to_json).collect(),
        fingerprint: fp,
        killing: KillingJson {
            gram: k.gram.iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect(),
            rank: k.rank,
            signature: k.signature,
        },
        catalog: entry.as_ref().map(|e| e.label()),
        catalog_entry: entry,
        method,
        nilpotent_basis: nb,
    })
}
