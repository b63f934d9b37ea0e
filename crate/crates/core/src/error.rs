use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter lies outside the domain of the requested operation.
    #[error("{op}: {detail}")]
    Domain { op: &'static str, detail: String },

    #[error("quadrature exact through degree {exact} but integrand has degree {needed}")]
    QuadratureTooSmall { needed: usize, exact: usize },

    /// No sign change in a cascade bracket. The input is not oscillating
    /// (or has roots too close together to separate in binary64).
    #[error("no sign change for derivative order {order} on [{left}, {right}]")]
    BracketFailure { order: usize, left: f64, right: f64 },

    #[error("zero {zero} lies outside [{a}, {b}]")]
    ZeroOutsideInterval { zero: f64, a: f64, b: f64 },

    #[error("orthogonality lost between degrees {m} and {n}: relative residual {residual:e}")]
    LossOfOrthogonality { m: usize, n: usize, residual: f64 },

    #[error("expected |P(a)| = max |P| = 1, found |P(a)| = {at_a}, max = {sup}")]
    NotNormalized { at_a: f64, sup: f64 },

    #[error("interval half-width K = {k} is smaller than M = {m}")]
    IntervalTooSmall { k: f64, m: f64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(op: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain {
        op,
        detail: detail.into(),
    }
}
