use std::fmt;

use rescale_core::Error;

/// Exit code for malformed input.
pub const EXIT_SCHEMA: i32 = 2;
/// Exit code for a mathematical failure reported by the library.
pub const EXIT_MATH: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Schema(String),
    Math(Error),
}

impl CliError {
    pub fn schema(msg: impl Into<String>) -> Self {
        CliError::Schema(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Schema(_) => EXIT_SCHEMA,
            CliError::Math(_) => EXIT_MATH,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Schema(_) => "SchemaError",
            CliError::Math(e) => e.kind(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidInput(msg) => CliError::Schema(msg),
            other => CliError::Math(other),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Schema(msg) => write!(f, "{msg}"),
            CliError::Math(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invalid_input_is_a_schema_error() {
        let e = CliError::from(Error::InvalidInput("bad".into()));
        assert_eq!((e.exit_code(), e.kind()), (EXIT_SCHEMA, "SchemaError"));
        let e = CliError::from(Error::NonIntegralRank { degree: 2, value: "1/2".into() });
        assert_eq!((e.exit_code(), e.kind()), (EXIT_MATH, "NonIntegralRank"));
    }
}
