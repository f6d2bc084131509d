use serde::{Deserialize, Serialize};

use super::chain::CommutatorChain;
use super::span::LieSpan;
use crate::igusa::IgusaCertificate;
use crate::weyl_core::SkewPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_dim: usize,
    pub max_degree: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_dim: 64,
            max_degree: 24,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum InfinityRule {
    PerpWithFreeHam,
    MixedEqAndQuad,
    MonomialGlossaryViolation,
    IgusaCertificate,
    ChainDegreeGrowth,
}

impl InfinityRule {
    pub fn name(self) -> &'static str {
        match self {
            InfinityRule::PerpWithFreeHam => "PerpWithFreeHam",
            InfinityRule::MixedEqAndQuad => "MixedEqAndQuad",
            InfinityRule::MonomialGlossaryViolation => "MonomialGlossaryViolation",
            InfinityRule::IgusaCertificate => "IgusaCertificate",
            InfinityRule::ChainDegreeGrowth => "ChainDegreeGrowth",
        }
    }
}

#[derive(Debug, Clone)]
pub struct InfinitenessWitness {
    pub rule: InfinityRule,
    pub detail: String,
    /// Degree-growth chain, when one was found; always present for `ChainDegreeGrowth`.
    pub chain: Option<CommutatorChain>,
    pub igusa: Option<IgusaCertificate>,
}

impl InfinitenessWitness {
    /// Re-checks the attached evidence exactly.
    pub fn verify(&self) -> bool {
        let chain_ok = self.chain.as_ref().is_none_or(|c| c.verify());
        let igusa_ok = self.igusa.as_ref().is_none_or(|c| c.recheck());
        let present = match self.rule {
            InfinityRule::ChainDegreeGrowth => self.chain.is_some(),
            InfinityRule::IgusaCertificate => self.igusa.is_some(),
            _ => true,
        };
        chain_ok && igusa_ok && present
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BudgetReport {
    pub max_degree_reached: u32,
    pub dim_reached: usize,
    pub reason: String,
}

#[derive(Debug, Clone)]
pub enum ClosureOutcome {
    Finite(LieSpan),
    Infinite(InfinitenessWitness),
    Inconclusive(BudgetReport),
}

impl ClosureOutcome {
    pub fn is_finite(&self) -> bool {
        matches!(self, ClosureOutcome::Finite(_))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ClosureOutcome::Infinite(_))
    }

    pub fn span(&self) -> Option<&LieSpan> {
        match self {
            ClosureOutcome::Finite(s) => Some(s),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<&InfinitenessWitness> {
        match self {
            ClosureOutcome::Infinite(w) => Some(w),
            _ => None,
        }
    }
}

/// Level-by-level closure: `v_0 = span(gens)`, then brackets of every basis
/// element with the elements added in the previous level. Stops with
/// `Inconclusive` as soon as the budget is exceeded.
pub fn closure_budgeted(gens: &[SkewPoly], budget: Budget) -> ClosureOutcome {
    let mut span = LieSpan::new();
    let mut max_deg = 0;
    let over = |span: &LieSpan, max_deg: u32| span.dim() > budget.max_dim || max_deg > budget.max_degree;
    for g in gens {
        if span.insert(g.clone()) {
            max_deg = max_deg.max(g.degree().unwrap_or(0));
        }
    }
    if over(&span, max_deg) {
        return inconclusive(&span, max_deg, "generators exceed budget");
    }
    let mut level_start = 0;
    while level_start < span.dim() {
        let level_end = span.dim();
        let mut candidates: Vec<SkewPoly> = Vec::new();
        for j in level_start..level_end {
            for i in 0..j {
                let b = span.basis()[i].bracket(&span.basis()[j]);
                if !b.is_zero() && !span.contains(&b) {
                    candidates.push(b);
                }
            }
        }
        candidates.sort_by_key(|c| c.leading_key());
        for c in candidates {
            let d = c.degree().unwrap_or(0);
            if span.insert(c) {
                max_deg = max_deg.max(d);
                if over(&span, max_deg) {
                    return inconclusive(&span, max_deg, "budget exceeded while closing");
                }
            }
        }
        level_start = level_end;
    }
    debug_assert!(span.is_closed());
    if let Some((i, j)) = span.closure_defect() {
        return inconclusive(&span, max_deg, &format!("closure check failed at pair ({i},{j})"));
    }
    ClosureOutcome::Finite(span)
}

fn inconclusive(span: &LieSpan, max_deg: u32, reason: &str) -> ClosureOutcome {
    ClosureOutcome::Inconclusive(BudgetReport {
        max_degree_reached: max_deg,
        dim_reached: span.dim(),
        reason: reason.to_string(),
    })
}
