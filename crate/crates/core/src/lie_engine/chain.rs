use serde::Serialize;

use crate::weyl_core::json::{skew_to_json, PolyJson};
use crate::weyl_core::SkewPoly;

/// How the auxiliary element `s^(l)` is chosen at step `l`.
#[derive(Debug, Clone)]
pub enum AuxPolicy {
    Fixed(SkewPoly),
    /// Cycles through the list.
    Alternate(Vec<SkewPoly>),
    /// First element of the pool whose bracket strictly raises the degree.
    Greedy(Vec<SkewPoly>),
}

/// `u^(l+1) = [u^(l), s^(l)]` with the degrees of every element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutatorChain {
    pub elements: Vec<SkewPoly>,
    pub aux: Vec<SkewPoly>,
}

impl CommutatorChain {
    pub fn degrees(&self) -> Vec<Option<u32>> {
        self.elements.iter().map(|u| u.degree()).collect()
    }

    pub fn steps(&self) -> usize {
        self.aux.len()
    }

    /// Recomputes every bracket and checks strict degree growth.
    pub fn verify(&self) -> bool {
        if self.elements.len() != self.aux.len() + 1 {
            return false;
        }
        self.aux.iter().enumerate().all(|(l, s)| {
            let next = self.elements[l].bracket(s);
            next == self.elements[l + 1] && next.degree() > self.elements[l].degree() && self.elements[l].degree().is_some()
        })
    }

    pub fn to_json(&self) -> ChainJson {
        ChainJson {
            degrees: self.elements.iter().map(|u| u.degree().map(i64::from).unwrap_or(-1)).collect(),
            elements: self.elements.iter().map(skew_to_json).collect(),
            aux: self.aux.iter().map(skew_to_json).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainJson {
    /// `-1` stands for the zero element.
    pub degrees: Vec<i64>,
    pub elements: Vec<PolyJson>,
    pub aux: Vec<PolyJson>,
}

/// Builds the chain while the degree strictly increases, for at most `steps` steps.
pub fn chain_prefix(seed: &SkewPoly, policy: &AuxPolicy, steps: usize) -> CommutatorChain {
    let mut chain = CommutatorChain {
        elements: vec![seed.clone()],
        aux: Vec::new(),
    };
    for l in 0..steps {
        let u = chain.elements.last().unwrap();
        let Some(d) = u.degree() else { break };
        let step = match policy {
            AuxPolicy::Fixed(s) => Some((s.clone(), u.bracket(s))),
            AuxPolicy::Alternate(list) if !list.is_empty() => {
                let s = &list[l % list.len()];
                Some((s.clone(), u.bracket(s)))
            }
            AuxPolicy::Alternate(_) => None,
            AuxPolicy::Greedy(pool) => pool.iter().find_map(|s| {
                let v = u.bracket(s);
                (v.degree() > Some(d)).then(|| (s.clone(), v))
            }),
        };
        match step {
            Some((s, v)) if v.degree() > Some(d) => {
                chain.aux.push(s);
                chain.elements.push(v);
            }
            _ => break,
        }
    }
    chain
}

/// The chain `u^(0..=k)` if every one of the `k` steps strictly raises the degree.
pub fn chain_witness(seed: &SkewPoly, policy: &AuxPolicy, steps: usize) -> Option<CommutatorChain> {
    let chain = chain_prefix(seed, policy, steps);
    (chain.steps() == steps).then_some(chain)
}

/// Tries every generator (and every nonzero bracket of two generators) as seed,
/// with a greedy auxiliary pool made of the same elements. Returns the first chain
/// with at least `min_increases` strict degree increases, grown to at most `steps`.
pub fn search_chain(gens: &[SkewPoly], steps: usize, min_increases: usize) -> Option<CommutatorChain> {
    let mut pool: Vec<SkewPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let b = gens[i].bracket(&gens[j]);
            if !b.is_zero() && !pool.contains(&b) {
                pool.push(b);
            }
        }
    }
    let policy = AuxPolicy::Greedy(pool.clone());
    pool.iter()
        .map(|seed| chain_prefix(seed, &policy, steps))
        .find(|c| c.steps() >= min_increases)
}
