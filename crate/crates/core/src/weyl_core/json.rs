//! Bit-exact JSON encoding of polynomials. Coefficients are fraction strings.

use serde::{Deserialize, Serialize};

use super::{GaussianRational, MultiIndex, Rational, Sign, SkewKey, SkewPoly, WeylPoly};
use crate::error::Error;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SkewTerm {
    pub sigma: Sign,
    pub alpha: u32,
    pub beta: u32,
    pub coeff: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct WeylTerm {
    pub alpha: u32,
    pub beta: u32,
    pub re: String,
    pub im: String,
}

/// Either wire form; `weyl` input must be skew-hermitian to become a `SkewPoly`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum PolyJson {
    Skew { skew: Vec<SkewTerm> },
    Weyl { weyl: Vec<WeylTerm> },
}

pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    if s.contains('.') || s.contains('e') || s.contains('E') {
        return Err(Error::Parse(format!("coefficient {s:?} is not a fraction")));
    }
    s.parse::<Rational>()
        .map_err(|_| Error::Parse(format!("coefficient {s:?} is not a fraction")))
}

pub fn skew_to_json(p: &SkewPoly) -> PolyJson {
    PolyJson::Skew {
        skew: p
            .terms()
            .map(|(k, c)| SkewTerm {
                sigma: k.sign,
                alpha: k.gamma.alpha,
                beta: k.gamma.beta,
                coeff: c.to_string(),
            })
            .collect(),
    }
}

pub fn weyl_to_json(p: &WeylPoly) -> PolyJson {
    PolyJson::Weyl {
        weyl: p
            .terms()
            .map(|(k, c)| WeylTerm {
                alpha: k.alpha,
                beta: k.beta,
                re: c.re.to_string(),
                im: c.im.to_string(),
            })
            .collect(),
    }
}

impl PolyJson {
    pub fn to_weyl(&self) -> Result<WeylPoly, Error> {
        match self {
            PolyJson::Skew { .. } => Ok(self.to_skew()?.to_weyl()),
            PolyJson::Weyl { weyl } => {
                let mut p = WeylPoly::zero();
                for t in weyl {
                    let c = GaussianRational::new(parse_rational(&t.re)?, parse_rational(&t.im)?);
                    p.add_term(MultiIndex::new(t.alpha, t.beta), c);
                }
                Ok(p)
            }
        }
    }

    pub fn to_skew(&self) -> Result<SkewPoly, Error> {
        match self {
            PolyJson::Skew { skew } => {
                let mut terms = Vec::with_capacity(skew.len());
                for t in skew {
                    let key = SkewKey::new(t.sigma, MultiIndex::new(t.alpha, t.beta));
                    terms.push((key, parse_rational(&t.coeff)?));
                }
                SkewPoly::from_terms(terms)
            }
            PolyJson::Weyl { .. } => SkewPoly::from_weyl(&self.to_weyl()?),
        }
    }
}
