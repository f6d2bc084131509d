use serde::Serialize;

use super::chain::ChainJson;
use super::closure::ClosureOutcome;
use crate::igusa::CertificateJson;
use crate::weyl_core::json::{skew_to_json, PolyJson};

/// Stable JSON shape of a closure result.
///
/// * `outcome`: `"finite"`, `"infinite"` or `"inconclusive"`
/// * `dim`: closed dimension, or the dimension reached before the budget ran out; `null` when infinite
/// * `basis`: closed basis (finite only)
/// * `witness`: evidence (infinite only)
/// * `rule`: name of the rule that fired, or the budget reason
#[derive(Debug, Clone, Serialize)]
pub struct ClosureReport {
    pub outcome: &'static str,
    pub dim: Option<usize>,
    pub basis: Vec<PolyJson>,
    pub witness: Option<WitnessJson>,
    pub rule: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessJson {
    pub rule: String,
    pub detail: String,
    pub chain: Option<ChainJson>,
    pub igusa: Option<CertificateJson>,
}

impl ClosureOutcome {
    pub fn report(&self) -> ClosureReport {
        match self {
            ClosureOutcome::Finite(span) => ClosureReport {
                outcome: "finite",
                dim: Some(span.dim()),
                basis: span.basis().iter().map(skew_to_json).collect(),
                witness: None,
                rule: None,
            },
            ClosureOutcome::Infinite(w) => ClosureReport {
                outcome: "infinite",
                dim: None,
                basis: Vec::new(),
                witness: Some(WitnessJson {
                    rule: w.rule.name().to_string(),
                    detail: w.detail.clone(),
                    chain: w.chain.as_ref().map(|c| c.to_json()),
                    igusa: w.igusa.as_ref().map(|c| c.to_json()),
                }),
                rule: Some(w.rule.name().to_string()),
            },
            ClosureOutcome::Inconclusive(b) => ClosureReport {
                outcome: "inconclusive",
                dim: Some(b.dim_reached),
                basis: Vec::new(),
                witness: None,
                rule: Some(b.reason.clone()),
            },
        }
    }
}
