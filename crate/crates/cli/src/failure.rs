use std::fmt;

use star_routing::{Error, Violation};

/// Every way a command can fail, with its stable exit code.
#[derive(Debug)]
pub enum Failure {
    /// Unreadable or malformed input: exit 2.
    Parse(anyhow::Error),
    /// Solver, budget, parameter or output errors: exit 3.
    Solver(anyhow::Error),
    /// The walk is not feasible: exit 4.
    Infeasible(Violation),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Solver(_) => 3,
            Failure::Infeasible(_) => 4,
        }
    }

    /// Library errors on input are parse failures, everything else is a
    /// solver failure.
    pub fn from_input(err: Error) -> Self {
        Failure::Parse(err.into())
    }

    pub fn from_solver(err: Error) -> Self {
        Failure::Solver(err.into())
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Parse(e) => write!(f, "{e:#}"),
            Failure::Solver(e) => write!(f, "{e:#}"),
            Failure::Infeasible(v) => write!(f, "infeasible walk: {v}"),
        }
    }
}
