use thiserror::Error;

use crate::lattice::Weight;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    InvalidPrime(i64),

    #[error("({a},{b};{c}) is not a character: c must have the parity of a+b")]
    ParityViolation { a: i64, b: i64, c: i64 },

    #[error("weight {0} lies outside the closures of the alcoves C0..C3")]
    OutsideAlcoveRegion(Weight),

    #[error("no weight in the closure of C{target} lies above {weight}")]
    TargetBelowSource { weight: Weight, target: usize },

    #[error("weight {0} is not dominant and p-restricted")]
    UnsupportedWeight(Weight),

    #[error("simple constituent F{weight} has multiplicity {multiplicity} < 0")]
    NegativeMultiplicity { weight: Weight, multiplicity: i64 },

    #[error("exponents {0:?} cannot be paired into two sums that agree modulo p-1")]
    NotSymplecticallyBalanced([i64; 4]),

    #[error("(k, l) = ({k}, {ell}) is not a cohomological weight (need k >= l >= 3)")]
    InvalidModularWeight { k: i64, ell: i64 },

    #[error("exponents {0:?} do not satisfy 0 = i0 <= i1 < i2 <= i3")]
    ExponentsNotOrdered([i64; 4]),

    #[error("type mu = {0} is not generic; use the direct route")]
    DegenerateType(Weight),

    #[error("(k, l, p) = ({k}, {ell}, {p}) violates k > l > 3, k + l < p + 1")]
    GenericityViolated { k: i64, ell: i64, p: i64 },

    #[error("(k, l, p) = ({k}, {ell}, {p}) violates k >= l >= 3, k + l - 3 < p - 1")]
    WeightOutOfRange { k: i64, ell: i64, p: i64 },

    #[error("prediction routes disagree: {0}")]
    RouteDisagreement(String),
}

impl Error {
    /// Stable machine-readable code, used in CLI error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidPrime(_) => "invalid_prime",
            Error::ParityViolation { .. } => "parity_violation",
            Error::OutsideAlcoveRegion(_) => "outside_alcove_region",
            Error::TargetBelowSource { .. } => "target_below_source",
            Error::UnsupportedWeight(_) => "unsupported_weight",
            Error::NegativeMultiplicity { .. } => "negative_multiplicity",
            Error::NotSymplecticallyBalanced(_) => "not_symplectically_balanced",
            Error::InvalidModularWeight { .. } => "invalid_modular_weight",
            Error::ExponentsNotOrdered(_) => "exponents_not_ordered",
            Error::DegenerateType(_) => "degenerate_type_use_direct_route",
            Error::GenericityViolated { .. } => "genericity_violated",
            Error::WeightOutOfRange { .. } => "weight_out_of_range",
            Error::RouteDisagreement(_) => "route_disagreement",
        }
    }

    /// True for errors that indicate a defect in the engine rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::RouteDisagreement(_) | Error::NegativeMultiplicity { .. }
        )
    }
}
