//! Experiments are plain JSON. Parse one from a string, run it and print
//! the report that `lca run` would produce.

use lincell::cli::{run_experiment, Experiment, RunOptions};

const EXPERIMENT: &str = r#"{
  "format": 1,
  "name": "laplace on S3 with two generators",
  "group": {"type": "symmetric", "n": 3},
  "automaton": {"builtin": "laplace"},
  "command": "kernel-witness",
  "expect": {"witness": true}
}"#;

fn main() -> lincell::error::Result<()> {
    for e in Experiment::parse_all(EXPERIMENT)? {
        let report = run_experiment(&e, &RunOptions::default())?;
        print!("{}", report.to_text());
        print!("{}", report.to_json_string());
    }
    Ok(())
}
