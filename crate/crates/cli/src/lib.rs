//! Library side of the `mathieu` command: function evaluation with CSV and
//! JSON output, regeneration of the published tables, and verification
//! against the embedded reference values.

pub mod error;
pub mod eval;
pub mod format;
pub mod reference;
pub mod tables;
pub mod verify;

pub use error::{CliError, Result};
pub use eval::{evaluate, Function, Request};
pub use format::{Report, Value};
pub use tables::TableId;
