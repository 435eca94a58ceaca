//! IO, file formats and command implementations on top of `stiefel-core`.
//!
//! Every command produces a serializable document with a `schema` tag; the
//! binary prints it as JSON or as a plain-text table.

pub mod dump;
pub mod error;
pub mod registry;
pub mod render;
pub mod table;

pub use error::{CliError, ExitCode};

use serde::Serialize;

/// A command result tagged with its schema name.
#[derive(Debug, Clone, Serialize)]
pub struct Document<T> {
    pub schema: &'static str,
    #[serde(flatten)]
    pub body: T,
}

impl<T: Serialize> Document<T> {
    pub fn new(schema: &'static str, body: T) -> Self {
        Document { schema, body }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }
}

pub mod schema {
    pub const RING: &str = "stiefel-charrank/ring/v1";
    pub const SQ: &str = "stiefel-charrank/sq/v1";
    pub const BOUND: &str = "stiefel-charrank/charrank-bound/v1";
    pub const THEOREM_TABLE: &str = "stiefel-charrank/theorem-table/v1";
    pub const COROLLARY: &str = "stiefel-charrank/corollary/v1";
}

/// Environment variable read for the default branch guard.
pub const GUARD_ENV: &str = "STIEFEL_BRANCH_GUARD";
