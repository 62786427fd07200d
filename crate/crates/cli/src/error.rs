use std::fmt;

use wsapprox::Error;

/// Process exit codes. Stable: scripts and the acceptance suite rely on them.
pub const OK: u8 = 0;
pub const NOT_COVERED: u8 = 1;
pub const USAGE: u8 = 2;
pub const BAD_INPUT: u8 = 3;
pub const MAXIMIZATION: u8 = 4;
pub const ENUMERATION_LIMIT: u8 = 5;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: USAGE, message: message.into() }
    }

    pub fn input(message: impl Into<String>) -> Self {
        CliError { code: BAD_INPUT, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ContractViolation(_) => USAGE,
            Error::MaximizationUnsupported => MAXIMIZATION,
            Error::EnumerationLimit { .. } => ENUMERATION_LIMIT,
            Error::InvalidRational(_)
            | Error::DimensionMismatch { .. }
            | Error::InvalidInstance(_)
            | Error::Unreachable { .. }
            | Error::Disconnected => BAD_INPUT,
        };
        CliError { code, message: e.to_string() }
    }
}

pub type CliResult<T> = Result<T, CliError>;
