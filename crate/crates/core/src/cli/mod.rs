//! Batch front end: experiment files in, exact reports out.

mod experiment;
mod report;
mod run;
mod suite;

pub use experiment::{window_from_json, Command, Experiment, Params, Target, FORMAT_VERSION};
pub use report::{check_expectations, input_digest, ExactCheck, Report, Status};
pub use run::{run_experiment, RunOptions, DEFAULT_RESTRICTION_TRIALS};
pub use suite::{experiment_files, report_path, run_file, run_suite, validate, Outcome, SuiteEntry, SuiteSummary};
