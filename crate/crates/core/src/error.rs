use thiserror::Error;

/// Errors raised by the bound evaluators, geometry predicates and verifiers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument fell outside the range where the quantity is defined.
    #[error("{name} = {value} is outside the valid range {range}")]
    Domain {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    /// A point was required to lie in a specific open domain.
    #[error("point {re}{im:+}i is not in {domain}")]
    NotInDomain {
        re: f64,
        im: f64,
        domain: &'static str,
    },

    #[error("quadrature did not converge within depth {max_depth} on [{lo}, {hi}]")]
    Quadrature { max_depth: u32, lo: f64, hi: f64 },

    #[error("integration path passes within {distance:e} of the pole (guard {guard:e})")]
    PoleProximity { distance: f64, guard: f64 },

    #[error("minimizer failed: {0}")]
    Minimizer(String),

    #[error("degenerate geometry: {0}")]
    Degenerate(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("unsupported domain: {0}")]
    UnsupportedDomain(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_open_unit(name: &'static str, value: f64) -> Result<()> {
    if value > 0.0 && value < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain {
            name,
            value,
            range: "(0, 1)",
        })
    }
}
