//! CLI errors carrying their process exit code.
//!
//! Exit codes: 2 = malformed input, 3 = feasibility guard violation,
//! 4 = witness construction precondition failure.

pub const EXIT_INPUT: u8 = 2;
pub const EXIT_GUARD: u8 = 3;
pub const EXIT_WITNESS: u8 = 4;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> CliError {
        CliError { code: EXIT_INPUT, message: message.into() }
    }

    pub fn guard(message: impl Into<String>) -> CliError {
        CliError { code: EXIT_GUARD, message: message.into() }
    }

    pub fn witness(message: impl Into<String>) -> CliError {
        CliError { code: EXIT_WITNESS, message: message.into() }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.message)
    }
}
