//! Workbench around `pearl-core`: JSON input documents, built-in fixtures,
//! report rendering and the command pipelines behind the `pearl-blowup` CLI.
//!
//! ```
//! use pearl_blowup::{builtin_example, run_report, Command};
//!
//! let workspace = builtin_example("clifford-cp2").unwrap();
//! let report = run_report(&workspace, Command::Blowup, "example clifford-cp2", false).unwrap();
//! assert!(report.admissibility.as_ref().unwrap().admissible);
//! assert_eq!(report.pearl[0].verdict, "wide");
//! ```

pub mod document;
pub mod fixtures;
pub mod pipeline;
pub mod report;

pub use document::{parse_spec, Document, Workspace};
pub use fixtures::builtin_example;
pub use pipeline::{run_report, Command};
pub use report::Report;

use std::fmt;

#[derive(Debug)]
pub enum WorkbenchError {
    /// The document is not syntactically usable (malformed JSON, unknown
    /// fields, unreadable rationals). Exit code 2.
    Parse(String),
    /// No built-in example of that name. Exit code 2.
    UnknownExample(String),
    /// The document parsed but the data is inconsistent; one diagnostic per
    /// item. Exit code 1.
    Validation(Vec<String>),
    /// A computation refused the input (non-complex counts, inadmissible
    /// collections, missing sections). Exit code 1.
    Pipeline(String),
}

impl WorkbenchError {
    pub fn exit_code(&self) -> i32 {
        match self {
            WorkbenchError::Parse(_) | WorkbenchError::UnknownExample(_) => 2,
            WorkbenchError::Validation(_) | WorkbenchError::Pipeline(_) => 1,
        }
    }
}

impl fmt::Display for WorkbenchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WorkbenchError::Parse(msg) => write!(f, "parse error: {}", msg),
            WorkbenchError::UnknownExample(name) => {
                write!(
                    f,
                    "unknown example '{}'; available: {}",
                    name,
                    fixtures::builtin_names().join(", ")
                )
            }
            WorkbenchError::Validation(items) => {
                writeln!(f, "validation failed:")?;
                for item in items {
                    writeln!(f, "  - {}", item)?;
                }
                Ok(())
            }
            WorkbenchError::Pipeline(msg) => write!(f, "{}", msg),
        }
    }
}

impl std::error::Error for WorkbenchError {}
