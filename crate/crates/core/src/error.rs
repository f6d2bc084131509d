use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("multi-index ({alpha},{beta}) is not well-ordered (need alpha >= beta)")]
    NotWellOrdered { alpha: u32, beta: u32 },
    #[error("not skew-hermitian: coefficient {coeff} of (a†)^{alpha} a^{beta} does not match minus the conjugate of its partner")]
    NotSkewHermitian { alpha: u32, beta: u32, coeff: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("generator {index} is not a single monomial: {poly}")]
    NotMonomial { index: usize, poly: String },
    #[error("no generator is a free Hamiltonian i(w a†a + c); use lie_closure instead")]
    NoFreeHamiltonian,
    #[error("span is not closed under the bracket: {0}")]
    NotClosed(String),
    #[error("element is not in the span: {0}")]
    NotInSpan(String),
    #[error("closure of the basis is not finite within budget: {0}")]
    NotFinite(String),
    #[error("basis element {index} is a linear combination of the earlier ones")]
    LinearlyDependent { index: usize },
    #[error("degree {degree} is too low; both elements need degree > 2")]
    DegreeTooLow { degree: i64 },
    #[error("zero polynomial has no leading coefficients")]
    ZeroPolynomial,
    #[error("Fock dimension {dim} must exceed the degree {degree}")]
    FockTooSmall { dim: usize, degree: u32 },
    #[error("factor integration blew up at step {index} (t = {time})")]
    BlowUp { index: usize, time: f64 },
    #[error("unitarity drift {drift:e} at t = {time}; use a smaller step or a larger Fock dimension")]
    UnitarityDrift { drift: f64, time: f64 },
    #[error("invalid controls: {0}")]
    InvalidControls(String),
}
