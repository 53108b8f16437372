use thiserror::Error;

/// A single rejected row from a tabular input.
#[derive(Debug, Clone, PartialEq)]
pub struct RowError {
    /// 1-based line number in the source, header included.
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for RowError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    /// A numeric input outside the domain of a formula.
    #[error("{quantity} must be {requirement}, got {value}")]
    Domain {
        quantity: &'static str,
        requirement: &'static str,
        value: f64,
    },

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("driver {driver} has no multiplier for rating {rating}")]
    UndefinedRating { driver: String, rating: String },

    #[error("unknown driver {driver} for the {table} table")]
    UnknownDriver { driver: String, table: String },

    #[error("driver {driver} is not rated")]
    MissingDriver { driver: String },

    #[error("configuration error at line {line}: {message}")]
    Config { line: usize, message: String },

    #[error("degenerate fit: {0}")]
    DegenerateFit(String),

    #[error("unknown model `{0}`")]
    UnknownModel(String),

    #[error("invalid corpus:\n{}", format_rows(.0))]
    Rows(Vec<RowError>),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn format_rows(rows: &[RowError]) -> String {
    rows.iter()
        .map(|r| format!("  {r}"))
        .collect::<Vec<_>>()
        .join("\n")
}

pub type Result<T> = std::result::Result<T, Error>;

/// Checks that `value` is finite and strictly positive.
pub(crate) fn require_positive(quantity: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::Domain {
            quantity,
            requirement: "finite and > 0",
            value,
        })
    }
}

/// Checks that `value` is finite and not negative.
pub(crate) fn require_non_negative(quantity: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value >= 0.0 {
        Ok(value)
    } else {
        Err(Error::Domain {
            quantity,
            requirement: "finite and >= 0",
            value,
        })
    }
}
