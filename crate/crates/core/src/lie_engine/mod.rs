//! Lie closures, finiteness decisions and commutator-chain witnesses.

mod chain;
mod closure;
mod decide;
mod report;
mod span;

pub use chain::{chain_prefix, chain_witness, search_chain, AuxPolicy, ChainJson, CommutatorChain};
pub use closure::{closure_budgeted, Budget, BudgetReport, ClosureOutcome, InfinitenessWitness, InfinityRule};
pub use decide::{
    centralizer_in, decide_monomial_set, decide_with_free_hamiltonian, is_free_hamiltonian, lie_closure, CHAIN_MIN_INCREASES,
    CHAIN_STEPS,
};
pub use report::{ClosureReport, WitnessJson};
pub use span::LieSpan;

use crate::weyl_core::SkewPoly;

/// `[x, y]`.
pub fn bracket(x: &SkewPoly, y: &SkewPoly) -> SkewPoly {
    x.bracket(y)
}
