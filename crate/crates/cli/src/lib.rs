//! Batch driver for the actegory coherence checker: plan documents in,
//! reports out.

pub mod error;
pub mod plan;
pub mod report;
pub mod run;

pub use error::CliError;
pub use plan::{parse_spec, CheckPlan, Format, Suite};
pub use report::{emit_report, parse_report, RunReport};
pub use run::{run_checks, Mode};
