use thiserror::Error;

/// CLI failure categories, each tied to a documented exit code:
/// 1 for unreadable/malformed input and verification failures, 2 for graph
/// validation and flag misuse, 3 for arithmetic overflow.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Overflow(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Failure(_) => 1,
            CliError::Validation(_) | CliError::Usage(_) => 2,
            CliError::Overflow(_) => 3,
        }
    }
}

impl From<splice_indices::Error> for CliError {
    fn from(err: splice_indices::Error) -> CliError {
        match err {
            splice_indices::Error::Overflow { .. } => CliError::Overflow(err.to_string()),
            _ => CliError::Validation(err.to_string()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_follow_the_contract() {
        assert_eq!(CliError::Parse("x".into()).exit_code(), 1);
        assert_eq!(CliError::Failure("x".into()).exit_code(), 1);
        assert_eq!(CliError::Validation("x".into()).exit_code(), 2);
        assert_eq!(CliError::Usage("x".into()).exit_code(), 2);
        assert_eq!(CliError::Overflow("x".into()).exit_code(), 3);
    }

    #[test]
    fn core_errors_map_to_validation_or_overflow() {
        let validation: CliError = splice_indices::Error::SelfLoop { vertex: 3 }.into();
        assert_eq!(validation.exit_code(), 2);
        assert!(validation.to_string().contains("self-loop"));
        let overflow: CliError = splice_indices::Error::Overflow { index: "szeged" }.into();
        assert_eq!(overflow.exit_code(), 3);
    }
}
