use std::time::Duration;

use serde::Serialize;

use crate::edmonds::MatroidVerdict;
use crate::error::Error;

use super::format::LoadError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Success,
    /// A bound was exceeded or a coloring is infeasible.
    Violation,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrorReport {
    /// `usage`, `io`, `parse`, `validation`, `bound`, `infeasible` or `invariant`.
    pub code: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub state: Option<String>,
}

impl ErrorReport {
    pub fn new(code: &'static str, message: impl Into<String>) -> Self {
        Self {
            code,
            field: None,
            message: message.into(),
            state: None,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.code {
            "usage" | "io" => 1,
            "bound" | "infeasible" => 2,
            "parse" | "validation" => 3,
            _ => 4,
        }
    }
}

impl From<&Error> for ErrorReport {
    fn from(e: &Error) -> Self {
        let code = match e {
            Error::Input(_) | Error::OutOfRange { .. } | Error::Unsupported(_) => "validation",
            Error::BoundExceeded { .. } => "bound",
            Error::Contract(_) | Error::Invariant { .. } => "invariant",
        };
        let state = match e {
            Error::Invariant { state, .. } => Some(state.clone()),
            _ => None,
        };
        Self {
            code,
            field: None,
            message: e.to_string(),
            state,
        }
    }
}

impl From<&LoadError> for ErrorReport {
    fn from(e: &LoadError) -> Self {
        match e {
            LoadError::Validation { field, message } => Self {
                code: "validation",
                field: Some(field.clone()),
                message: message.clone(),
                state: None,
            },
            other => Self::new(other.code(), other.to_string()),
        }
    }
}

/// One run of one CLI command. Wall time is kept out of the JSON so that
/// reports are reproducible byte for byte.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: &'static str,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub colors_used: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub palette: Option<usize>,
    /// `1 + Σ (χ(M_i) - 1)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matroids: Option<Vec<MatroidVerdict>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_calls: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iterations: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorReport>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl RunReport {
    pub fn new(command: &'static str) -> Self {
        Self {
            command,
            status: Status::Success,
            colors_used: None,
            palette: None,
            bound: None,
            chi: None,
            matroids: None,
            oracle_calls: None,
            iterations: None,
            coloring: None,
            details: None,
            error: None,
            wall_time: Duration::ZERO,
        }
    }

    pub fn failed(command: &'static str, error: ErrorReport) -> Self {
        let mut r = Self::new(command);
        r.status = if error.exit_code() == 2 {
            Status::Violation
        } else {
            Status::Error
        };
        r.error = Some(error);
        r
    }

    pub fn violation(&mut self, message: impl Into<String>) {
        self.status = Status::Violation;
        self.error = Some(ErrorReport::new("infeasible", message));
    }

    pub fn exit_code(&self) -> i32 {
        match (&self.status, &self.error) {
            (Status::Success, _) => 0,
            (_, Some(e)) => e.exit_code(),
            (Status::Violation, None) => 2,
            (Status::Error, None) => 4,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// One or two lines for humans.
    pub fn summary(&self) -> String {
        let mut parts = vec![format!("{}: {:?}", self.command, self.status).to_lowercase()];
        if let Some(c) = self.colors_used {
            let mut s = format!("{c} colors");
            if let Some(b) = self.bound {
                s += &format!(" (bound {b})");
            }
            parts.push(s);
        }
        if let Some(chi) = &self.chi {
            parts.push(format!("chi {chi:?}"));
        }
        if let Some(i) = self.iterations {
            parts.push(format!("{i} iterations"));
        }
        if let Some(o) = self.oracle_calls {
            parts.push(format!("{o} oracle calls"));
        }
        parts.push(format!("{:.1?}", self.wall_time));
        let mut s = parts.join(", ");
        if let Some(e) = &self.error {
            s += &format!("\n{} error: ", e.code);
            if let Some(f) = &e.field {
                s += &format!("{f}: ");
            }
            s += &e.message;
        }
        s
    }
}
