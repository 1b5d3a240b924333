use thiserror::Error;

/// Errors produced anywhere in the calculator.
///
/// Every variant carries enough location information (a byte offset or a
/// field path) for a user to find the offending input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid {path}: {msg}")]
    Validation { path: String, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    pub fn validation(path: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Validation {
            path: path.into(),
            msg: msg.into(),
        }
    }

    /// Prefix the location with an outer field name, e.g. `sr_discs[2]` becomes
    /// `d1.sr_discs[2]`.
    pub fn within(self, outer: &str) -> Self {
        match self {
            Error::Validation { path, msg } => Error::Validation {
                path: if path.is_empty() {
                    outer.to_string()
                } else {
                    format!("{outer}.{path}")
                },
                msg,
            },
            Error::Parse { pos, msg } => Error::Parse {
                pos,
                msg: format!("{outer}: {msg}"),
            },
        }
    }

    /// Process exit code for the command line: 1 for parse errors, 2 for
    /// validation errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } => 1,
            Error::Validation { .. } => 2,
        }
    }
}
