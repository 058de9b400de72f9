use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] solconn::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    /// AUTO mode on a hard base whose instance is too large to enumerate.
    #[error("{0}")]
    Refused(String),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    /// 3 for budget failures and refusals, 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        use solconn::Error as E;
        match self {
            CliError::Refused(_) => 3,
            CliError::Lib(
                E::BudgetExceeded(_)
                | E::WrongClass(_)
                | E::TooLarge(_)
                | E::NotRealizable(_)
                | E::Unsupported(_),
            ) => 3,
            _ => 2,
        }
    }

    /// Stable machine-readable name for JSON error reports.
    pub fn code(&self) -> &'static str {
        use solconn::Error as E;
        match self {
            CliError::Io { .. } => "io",
            CliError::Usage(_) => "usage",
            CliError::Refused(_) => "refused",
            CliError::Lib(e) => match e {
                E::LengthMismatch { .. } => "length_mismatch",
                E::BadCharacter { .. } => "bad_character",
                E::ArityMismatch { .. } => "arity_mismatch",
                E::DegreeBoundTooSmall(_) => "degree_bound_too_small",
                E::BadThreshold { .. } => "bad_threshold",
                E::ArityOverflow { .. } => "arity_overflow",
                E::BudgetExceeded(_) => "budget_exceeded",
                E::SyntaxError { .. } => "syntax_error",
                E::UnknownFunction(_) => "unknown_function",
                E::ForwardReference(_) => "forward_reference",
                E::MissingOutput => "missing_output",
                E::DuplicateName(_) => "duplicate_name",
                E::MissingVariable(_) => "missing_variable",
                E::HeaderMismatch(_) => "header_mismatch",
                E::LiteralOutOfRange { .. } => "literal_out_of_range",
                E::EmptyClause => "empty_clause",
                E::NotASolution(_) => "not_a_solution",
                E::TooLarge(_) => "too_large",
                E::SizeOverflow { .. } => "size_overflow",
                E::WrongClass(_) => "wrong_class",
                E::NonAffineBaseFunction(_) => "non_affine_base_function",
                E::NotOneReproducing => "not_one_reproducing",
                E::NotRealizable(_) => "not_realizable",
                E::KTooLarge(_) => "k_too_large",
                E::Unsupported(_) => "unsupported",
                E::Invalid(_) => "invalid",
            },
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
