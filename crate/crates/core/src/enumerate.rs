//! Enumeration of all subalgebras generated by subsets of a basis.
//!
//! [`enumerate_subalgebras`] is recursive: grow a closed set by one basis element
//! at a time, skip elements already in the span, stop as soon as the whole algebra
//! is reached, and do not descend from a span that was already found.
//! [`brute_force_spans`] closes every non-empty subset independently and is used
//! as the oracle.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{identify, CatalogEntry, Identification};
use crate::error::Error;
use crate::lie_engine::{closure_budgeted, Budget, ClosureOutcome, LieSpan};
use crate::weyl_core::json::{skew_to_json, PolyJson};
use crate::weyl_core::{named, SkewPoly};

#[derive(Debug, Clone)]
pub struct RealizationRecord {
    /// Indices into the input basis.
    pub generating_subset: Vec<usize>,
    pub span: LieSpan,
    pub catalog: Identification,
}

#[derive(Debug, Clone, Serialize)]
pub struct RecordJson {
    pub generating_subset: Vec<usize>,
    pub dim: usize,
    pub basis: Vec<PolyJson>,
    pub catalog: Option<String>,
}

impl RealizationRecord {
    pub fn to_json(&self) -> RecordJson {
        RecordJson {
            generating_subset: self.generating_subset.clone(),
            dim: self.span.dim(),
            basis: self.span.basis().iter().map(skew_to_json).collect(),
            catalog: self.catalog.label(),
        }
    }
}

struct Run<'a> {
    basis: &'a [SkewPoly],
    full: LieSpan,
    seen: HashSet<Vec<SkewPoly>>,
    found: Vec<(Vec<usize>, LieSpan)>,
}

impl Run<'_> {
    fn add(&mut self, subset: Vec<usize>, span: LieSpan) -> bool {
        if self.seen.insert(span.canonical_rows()) {
            self.found.push((subset, span));
            true
        } else {
            false
        }
    }

    /// Closes `s ∪ a`, adding at each round the brackets `S × A` and
    /// `A × A` that leave the current span.
    fn close(&self, s: &[SkewPoly], a: &[SkewPoly]) -> LieSpan {
        let mut span = LieSpan::spanned_by(s.iter().chain(a));
        if span.same_subspace(&self.full) {
            return self.full.clone();
        }
        let mut old: Vec<SkewPoly> = s.to_vec();
        let mut new: Vec<SkewPoly> = a.to_vec();
        loop {
            let mut h = Vec::new();
            for x in &old {
                for y in &new {
                    h.push(x.bracket(y));
                }
            }
            for (j, x) in new.iter().enumerate() {
                for y in &new[j + 1..] {
                    h.push(x.bracket(y));
                }
            }
            let mut added = Vec::new();
            for b in h {
                if span.insert(b.clone()) {
                    added.push(b);
                }
            }
            if added.is_empty() {
                return span;
            }
            if span.same_subspace(&self.full) {
                return self.full.clone();
            }
            old.append(&mut new);
            new = added;
        }
    }

    /// Every subalgebra generated by `s` together with basis elements `>= k`.
    fn grow(&mut self, s: &LieSpan, subset: &[usize], k: usize) {
        let n = self.basis.len();
        if k >= n {
            return;
        }
        let mut with_k = s.clone();
        with_k.insert(self.basis[k].clone());
        if with_k.same_subspace(&self.full) {
            return;
        }
        if s.contains(&self.basis[k]) {
            self.grow(s, subset, k + 1);
            return;
        }
        for l in k..n {
            let t = self.close(s.basis(), std::slice::from_ref(&self.basis[l]));
            let mut sub = subset.to_vec();
            sub.push(l);
            if self.add(sub.clone(), t.clone()) {
                self.grow(&t, &sub, l + 1);
            }
        }
    }
}

fn check_basis(basis: &[SkewPoly], budget: Budget) -> Result<LieSpan, Error> {
    let mut span = LieSpan::new();
    for (index, b) in basis.iter().enumerate() {
        if !span.insert(b.clone()) {
            return Err(Error::LinearlyDependent { index });
        }
    }
    match closure_budgeted(basis, budget) {
        ClosureOutcome::Finite(s) => Ok(s),
        ClosureOutcome::Infinite(w) => Err(Error::NotFinite(w.detail)),
        ClosureOutcome::Inconclusive(r) => Err(Error::NotFinite(r.reason)),
    }
}

fn sort_records(found: Vec<(Vec<usize>, LieSpan)>) -> Result<Vec<RealizationRecord>, Error> {
    let mut out: Vec<RealizationRecord> = found
        .into_par_iter()
        .map(|(generating_subset, span)| {
            let catalog = identify(&span)?;
            Ok(RealizationRecord {
                generating_subset,
                span,
                catalog,
            })
        })
        .collect::<Result<_, Error>>()?;
    out.sort_by(|a, b| {
        (a.span.dim(), a.generating_subset.len(), &a.generating_subset).cmp(&(
            b.span.dim(),
            b.generating_subset.len(),
            &b.generating_subset,
        ))
    });
    Ok(out)
}

/// Every distinct span generated by a non-empty subset of `basis`, each classified.
pub fn enumerate_subalgebras(basis: &[SkewPoly]) -> Result<Vec<RealizationRecord>, Error> {
    enumerate_with_budget(basis, Budget::default())
}

pub fn enumerate_with_budget(basis: &[SkewPoly], budget: Budget) -> Result<Vec<RealizationRecord>, Error> {
    let full = check_basis(basis, budget)?;
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    let mut run = Run {
        basis,
        full: full.clone(),
        seen: HashSet::new(),
        found: Vec::new(),
    };
    for (j, b) in basis.iter().enumerate() {
        run.add(vec![j], LieSpan::spanned_by([b]));
    }
    run.add((0..basis.len()).collect(), full);
    for j in 0..basis.len() - 1 {
        let s = LieSpan::spanned_by([&basis[j]]);
        run.grow(&s, &[j], j + 1);
    }
    sort_records(run.found)
}

/// Closure of each of the `2^n - 1` non-empty subsets, deduplicated; the
/// generating subset kept for a span is the first in mask order.
pub fn brute_force_spans(basis: &[SkewPoly], budget: Budget) -> Result<Vec<(Vec<usize>, LieSpan)>, Error> {
    check_basis(basis, budget)?;
    let n = basis.len();
    let closed: Vec<(Vec<usize>, LieSpan)> = (1u64..(1u64 << n))
        .into_par_iter()
        .map(|mask| {
            let subset: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let gens: Vec<SkewPoly> = subset.iter().map(|&i| basis[i].clone()).collect();
            match closure_budgeted(&gens, budget) {
                ClosureOutcome::Finite(s) => Ok((subset, s)),
                _ => Err(Error::NotFinite(format!("subset {subset:?}"))),
            }
        })
        .collect::<Result<_, Error>>()?;
    let mut seen = HashSet::new();
    Ok(closed.into_iter().filter(|(_, s)| seen.insert(s.canonical_rows())).collect())
}

/// Canonical keys of a list of spans, for set comparison.
pub fn span_set<'a, I: IntoIterator<Item = &'a LieSpan>>(spans: I) -> HashSet<Vec<SkewPoly>> {
    spans.into_iter().map(|s| s.canonical_rows()).collect()
}

/// Realization counts of the non-abelian glossary classes on the six low-degree monomials.
pub const GLOSSARY_MULTIPLICITIES: [(&str, usize); 8] = [
    ("aff(1)", 2),
    ("aff(1)⊕R", 2),
    ("h1", 1),
    ("sl2", 1),
    ("sl2⊕R", 1),
    ("wh1", 2),
    ("wh2", 1),
    ("Schrodinger", 1),
];

#[derive(Debug, Clone, Serialize)]
pub struct GlossaryRow {
    pub name: String,
    pub dim: usize,
    pub count: usize,
    /// Generating subsets as labels of the basis elements.
    pub subsets: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GlossaryReport {
    pub total: usize,
    /// `(dim, count)` pairs in increasing dimension.
    pub dims: Vec<(usize, usize)>,
    pub rows: Vec<GlossaryRow>,
    pub records: Vec<RecordJson>,
}

impl GlossaryReport {
    /// Mismatches against [`GLOSSARY_MULTIPLICITIES`]; empty when they agree.
    pub fn mismatches(&self) -> Vec<String> {
        let mut out = Vec::new();
        let non_abelian: BTreeMap<&str, usize> = self
            .rows
            .iter()
            .filter(|r| !r.name.starts_with("R^"))
            .map(|r| (r.name.as_str(), r.count))
            .collect();
        for (name, want) in GLOSSARY_MULTIPLICITIES {
            let got = non_abelian.get(name).copied().unwrap_or(0);
            if got != want {
                out.push(format!("{name}: {got} realizations, expected {want}"));
            }
        }
        for name in non_abelian.keys() {
            if !GLOSSARY_MULTIPLICITIES.iter().any(|(n, _)| n == name) {
                out.push(format!("unexpected class {name}"));
            }
        }
        out
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::from("| algebra | dim | realizations | generating subsets |\n|---|---|---|---|\n");
        for r in &self.rows {
            let subsets: Vec<String> = r.subsets.iter().map(|g| format!("{{{}}}", g.join(", "))).collect();
            s.push_str(&format!("| {} | {} | {} | {} |\n", r.name, r.dim, r.count, subsets.join("; ")));
        }
        s
    }
}

/// Groups records by catalog label (unrecognized ones under `?`).
pub fn group_records(records: &[RealizationRecord], labels: &[&str]) -> Vec<GlossaryRow> {
    let mut groups: BTreeMap<(usize, Option<CatalogEntry>), Vec<&RealizationRecord>> = BTreeMap::new();
    for r in records {
        groups
            .entry((r.span.dim(), r.catalog.entry().cloned()))
            .or_default()
            .push(r);
    }
    groups
        .into_iter()
        .map(|((dim, entry), rs)| GlossaryRow {
            name: entry.map_or_else(|| "?".to_string(), |e| e.label()),
            dim,
            count: rs.len(),
            subsets: rs
                .iter()
                .map(|r| {
                    r.generating_subset
                        .iter()
                        .map(|&i| labels.get(i).map_or_else(|| format!("b{i}"), |l| l.to_string()))
                        .collect()
                })
                .collect(),
        })
        .collect()
}

/// Enumeration over the six low-degree monomials, grouped by catalog class.
pub fn glossary_report() -> Result<GlossaryReport, Error> {
    let records = enumerate_subalgebras(&named::schrodinger_basis())?;
    let mut dims: BTreeMap<usize, usize> = BTreeMap::new();
    for r in &records {
        *dims.entry(r.span.dim()).or_default() += 1;
    }
    Ok(GlossaryReport {
        total: records.len(),
        dims: dims.into_iter().collect(),
        rows: group_records(&records, &named::SCHRODINGER_LABELS),
        records: records.iter().map(|r| r.to_json()).collect(),
    })
}
