//! Front end for `srt-core`: analyses of one `(G, n, m)`, verification suites
//! over a grid, and summary tables.

pub mod analyze;
pub mod checks;
pub mod config;
pub mod error;
pub mod report;
pub mod table;
pub mod verify;

pub use analyze::cmd_analyze;
pub use config::Config;
pub use error::CliError;
pub use report::{CheckResult, ReductionReport, VerifyReport, SCHEMA_VERSION};
pub use table::{cmd_table, parse_range, TableRow};
pub use verify::{cmd_verify, Grid, Suite};

use serde::Serialize;

/// Pretty JSON with object keys in sorted order (`serde_json::Map` is a `BTreeMap`).
pub fn to_sorted_json<T: Serialize>(value: &T) -> String {
    let tree = serde_json::to_value(value).expect("report types serialize");
    serde_json::to_string_pretty(&tree).expect("values serialize")
}
