#![allow(dead_code)]

use proptest::prelude::*;
use weyl_lie::weyl_core::{rat, MultiIndex, SkewKey};
use weyl_lie::{GaussianRational, Rational, Sign, SkewPoly, WeylPoly};

pub fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (prop_oneof![-6i64..=-1, 1i64..=6], 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

/// Well-ordered index of degree at most `max_degree`.
pub fn index(max_degree: u32) -> impl Strategy<Value = MultiIndex> {
    (0..=max_degree).prop_flat_map(|d| (0..=d / 2).prop_map(move |beta| MultiIndex::new(d - beta, beta)))
}

pub fn key(max_degree: u32) -> impl Strategy<Value = SkewKey> {
    (index(max_degree), any::<bool>()).prop_map(|(gamma, plus)| {
        let sign = if plus || gamma.alpha == gamma.beta { Sign::Plus } else { Sign::Minus };
        SkewKey::new(sign, gamma)
    })
}

pub fn skew(max_degree: u32, max_terms: usize) -> impl Strategy<Value = SkewPoly> {
    prop::collection::vec((key(max_degree), nonzero_rational()), 1..=max_terms)
        .prop_map(|terms| SkewPoly::from_terms(terms).expect("well-ordered keys"))
}

pub fn monomial(max_degree: u32) -> impl Strategy<Value = SkewPoly> {
    (key(max_degree), nonzero_rational()).prop_map(|(k, c)| SkewPoly::from_terms([(k, c)]).expect("well-ordered key"))
}

pub fn weyl(max_degree: u32, max_terms: usize) -> impl Strategy<Value = WeylPoly> {
    let term = ((0..=max_degree), (0..=max_degree), rational(), rational())
        .prop_filter("degree bound", move |(a, b, _, _)| a + b <= max_degree)
        .prop_map(|(a, b, re, im)| (MultiIndex::new(a, b), GaussianRational::new(re, im)));
    prop::collection::vec(term, 1..=max_terms).prop_map(WeylPoly::from_terms)
}
