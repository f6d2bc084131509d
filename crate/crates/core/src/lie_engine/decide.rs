use num_traits::Zero;

use super::chain::search_chain;
use super::closure::{closure_budgeted, Budget, ClosureOutcome, InfinitenessWitness, InfinityRule};
use super::span::LieSpan;
use crate::error::Error;
use crate::igusa;
use crate::linalg;
use crate::weyl_core::{MultiIndex, Sign, SkewKey, SkewPoly, Subspace};

/// Steps and required strict increases for chain witnesses.
pub const CHAIN_STEPS: usize = 8;
pub const CHAIN_MIN_INCREASES: usize = 3;

/// Whether `x = i(w a†a + c)` for some rational `w != 0` and `c`.
pub fn is_free_hamiltonian(x: &SkewPoly) -> bool {
    let tau = SkewKey::new(Sign::Plus, MultiIndex::TAU);
    let one = SkewKey::new(Sign::Plus, MultiIndex::ZERO);
    !x.coeff(tau).is_zero() && x.terms().all(|(k, _)| *k == tau || *k == one)
}

fn support(gens: &[SkewPoly], blocks: &[Subspace]) -> bool {
    gens.iter()
        .any(|g| g.terms().any(|(k, _)| blocks.contains(&k.subspace())))
}

fn infinite(gens: &[SkewPoly], rule: InfinityRule, detail: String) -> ClosureOutcome {
    let chain = search_chain(gens, CHAIN_STEPS, CHAIN_MIN_INCREASES);
    ClosureOutcome::Infinite(InfinitenessWitness {
        rule,
        detail,
        chain,
        igusa: None,
    })
}

/// Exact decision for generator sets made of single monomials.
pub fn decide_monomial_set(gens: &[SkewPoly], budget: Budget) -> Result<ClosureOutcome, Error> {
    let mut keys = Vec::new();
    for (index, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let (k, _) = g.as_monomial().ok_or_else(|| Error::NotMonomial {
            index,
            poly: g.to_string(),
        })?;
        if !keys.contains(&k) {
            keys.push(k);
        }
    }
    let count = |b: Subspace| keys.iter().filter(|k| k.subspace() == b).count();
    let (eq, perp) = (count(Subspace::Aeq), count(Subspace::Aperp));
    let low = count(Subspace::A1) + count(Subspace::A2);
    let verdict = if perp > 0 {
        if perp == 1 && keys.iter().all(|k| k.subspace() == Subspace::Aperp || k.gamma == MultiIndex::ZERO) {
            Ok(())
        } else {
            Err(format!(
                "a monomial in Aperp may only appear alone or with i ({} in Aperp, {} others)",
                perp,
                keys.len() - perp
            ))
        }
    } else if eq > 0 && low > 0 {
        Err("Kerr-type monomials together with displacements or squeezings".to_string())
    } else {
        Ok(())
    };
    match verdict {
        Ok(()) => Ok(closure_budgeted(gens, budget)),
        Err(why) => Ok(infinite(gens, InfinityRule::MonomialGlossaryViolation, why)),
    }
}

/// Exact decision when some generator is a free Hamiltonian `i(w a†a + c)`.
pub fn decide_with_free_hamiltonian(gens: &[SkewPoly], budget: Budget) -> Result<ClosureOutcome, Error> {
    if !gens.iter().any(is_free_hamiltonian) {
        return Err(Error::NoFreeHamiltonian);
    }
    if support(gens, &[Subspace::Aperp]) {
        return Ok(infinite(
            gens,
            InfinityRule::PerpWithFreeHam,
            "free Hamiltonian together with support in Aperp".to_string(),
        ));
    }
    if support(gens, &[Subspace::Aeq]) && support(gens, &[Subspace::A1, Subspace::A2]) {
        return Ok(infinite(
            gens,
            InfinityRule::MixedEqAndQuad,
            "free Hamiltonian with support in both Aeq and A1+A2".to_string(),
        ));
    }
    Ok(closure_budgeted(gens, budget))
}

/// Full pipeline: exact decisions first, then sufficient conditions for
/// infiniteness, then the budgeted closure.
pub fn lie_closure(gens: &[SkewPoly], budget: Budget) -> ClosureOutcome {
    let nonzero: Vec<SkewPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return ClosureOutcome::Finite(LieSpan::new());
    }
    if nonzero.iter().all(|g| g.as_monomial().is_some()) {
        if let Ok(out) = decide_monomial_set(&nonzero, budget) {
            return out;
        }
    }
    if let Ok(out) = decide_with_free_hamiltonian(&nonzero, budget) {
        return out;
    }
    for (i, x) in nonzero.iter().enumerate() {
        for y in &nonzero[i + 1..] {
            if let Ok(cert) = igusa::identity_check(x, y) {
                if cert.is_infinite() {
                    let chain = search_chain(&[x.clone(), y.clone()], CHAIN_STEPS, CHAIN_MIN_INCREASES);
                    return ClosureOutcome::Infinite(InfinitenessWitness {
                        rule: InfinityRule::IgusaCertificate,
                        detail: "leading coefficients satisfy a0*b0 != 0 and delta != 0".to_string(),
                        chain,
                        igusa: Some(cert),
                    });
                }
            }
        }
    }
    if let Some(chain) = search_chain(&nonzero, CHAIN_STEPS, CHAIN_MIN_INCREASES) {
        return ClosureOutcome::Infinite(InfinitenessWitness {
            rule: InfinityRule::ChainDegreeGrowth,
            detail: format!("{} strict degree increases", chain.steps()),
            chain: Some(chain),
            igusa: None,
        });
    }
    closure_budgeted(&nonzero, budget)
}

/// Kernel of `ad_x` on `ambient`.
pub fn centralizer_in(x: &SkewPoly, ambient: &LieSpan) -> LieSpan {
    let images: Vec<SkewPoly> = ambient.basis().iter().map(|b| x.bracket(b)).collect();
    // coordinates of the images over the monomials they touch
    let mut keys: Vec<SkewKey> = images.iter().flat_map(|p| p.terms().map(|(k, _)| *k)).collect();
    keys.sort();
    keys.dedup();
    let m: linalg::Matrix = keys
        .iter()
        .map(|k| images.iter().map(|p| p.coeff(*k)).collect())
        .collect();
    let kernel = linalg::kernel(&m, ambient.dim());
    ambient.subspace(&kernel)
}
