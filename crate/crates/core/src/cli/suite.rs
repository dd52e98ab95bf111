use std::fs;
use std::path::{Path, PathBuf};

use super::experiment::Experiment;
use super::report::Report;
use super::run::{run_experiment, RunOptions};
use crate::error::{Error, Result};

const REPORT_SUFFIX: &str = ".report.json";

#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Ran(Report),
    /// Parse, dispatch or I/O failure, kept per file or experiment.
    Error(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteEntry {
    pub file: PathBuf,
    pub name: Option<String>,
    pub outcome: Outcome,
    pub report_path: Option<PathBuf>,
}

impl SuiteEntry {
    pub fn passed(&self) -> bool {
        matches!(&self.outcome, Outcome::Ran(r) if r.passed())
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SuiteSummary {
    pub entries: Vec<SuiteEntry>,
}

impl SuiteSummary {
    pub fn total(&self) -> usize {
        self.entries.len()
    }

    pub fn passed(&self) -> usize {
        self.entries.iter().filter(|e| e.passed()).count()
    }

    pub fn errors(&self) -> usize {
        self.entries
            .iter()
            .filter(|e| matches!(e.outcome, Outcome::Error(_)))
            .count()
    }

    pub fn failed(&self) -> usize {
        self.total() - self.passed() - self.errors()
    }

    pub fn success(&self) -> bool {
        self.passed() == self.total()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let label = match &e.name {
                Some(n) => format!("{} :: {n}", e.file.display()),
                None => e.file.display().to_string(),
            };
            let line = match &e.outcome {
                Outcome::Ran(r) if r.passed() => format!("PASS  {label}"),
                Outcome::Ran(_) => format!("FAIL  {label}"),
                Outcome::Error(msg) => format!("ERROR {label}: {msg}"),
            };
            out.push_str(&line);
            out.push('\n');
        }
        out.push_str(&format!(
            "{} experiments: {} passed, {} failed, {} errors\n",
            self.total(),
            self.passed(),
            self.failed(),
            self.errors()
        ));
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "total": self.total(),
            "passed": self.passed(),
            "failed": self.failed(),
            "errors": self.errors(),
            "entries": self.entries.iter().map(|e| serde_json::json!({
                "file": e.file.display().to_string(),
                "name": e.name,
                "status": match &e.outcome {
                    Outcome::Ran(r) if r.passed() => "pass",
                    Outcome::Ran(_) => "fail",
                    Outcome::Error(_) => "error",
                },
                "error": match &e.outcome {
                    Outcome::Error(m) => serde_json::Value::String(m.clone()),
                    Outcome::Ran(_) => serde_json::Value::Null,
                },
                "report": e.report_path.as_ref().map(|p| p.display().to_string()),
            })).collect::<Vec<_>>(),
        })
    }
}

fn sanitize(name: &str) -> String {
    name.chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '_' })
        .collect()
}

/// Where the report for experiment `index` of `count` in `file` goes.
pub fn report_path(file: &Path, out: Option<&Path>, index: usize, count: usize, name: &str) -> PathBuf {
    let stem = file
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "experiment".into());
    let fname = if count == 1 {
        format!("{stem}{REPORT_SUFFIX}")
    } else {
        format!("{stem}.{index:03}-{}{REPORT_SUFFIX}", sanitize(name))
    };
    let dir = out
        .map(Path::to_path_buf)
        .or_else(|| file.parent().map(Path::to_path_buf))
        .unwrap_or_default();
    dir.join(fname)
}

/// Experiment files in a directory: `*.json`, sorted, excluding reports.
pub fn experiment_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            let name = p.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
            p.is_file() && name.ends_with(".json") && !name.ends_with(REPORT_SUFFIX)
        })
        .collect();
    files.sort();
    Ok(files)
}

/// Runs every experiment in `file`, writing one report each.
pub fn run_file(file: &Path, out: Option<&Path>, opts: &RunOptions) -> Vec<SuiteEntry> {
    let parsed = fs::read_to_string(file)
        .map_err(Error::from)
        .and_then(|text| Experiment::parse_all(&text));
    let experiments = match parsed {
        Ok(es) => es,
        Err(e) => {
            return vec![SuiteEntry {
                file: file.to_path_buf(),
                name: None,
                outcome: Outcome::Error(e.to_string()),
                report_path: None,
            }]
        }
    };
    let count = experiments.len();
    experiments
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let mut entry = SuiteEntry {
                file: file.to_path_buf(),
                name: Some(e.name.clone()),
                outcome: Outcome::Error(String::new()),
                report_path: None,
            };
            match run_experiment(e, opts) {
                Ok(report) => {
                    let path = report_path(file, out, i, count, &e.name);
                    match write_report(&path, &report) {
                        Ok(()) => {
                            entry.report_path = Some(path);
                            entry.outcome = Outcome::Ran(report);
                        }
                        Err(err) => entry.outcome = Outcome::Error(err.to_string()),
                    }
                }
                Err(err) => entry.outcome = Outcome::Error(err.to_string()),
            }
            entry
        })
        .collect()
}

fn write_report(path: &Path, report: &Report) -> Result<()> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            fs::create_dir_all(dir)?;
        }
    }
    fs::write(path, report.to_json_string())?;
    Ok(())
}

/// Runs a directory of experiment files, or a single multi-experiment file.
/// Failures are recorded per file; the suite never stops early.
pub fn run_suite(path: &Path, out: Option<&Path>, opts: &RunOptions) -> Result<SuiteSummary> {
    let files = if path.is_dir() {
        experiment_files(path)?
    } else if path.is_file() {
        vec![path.to_path_buf()]
    } else {
        return Err(Error::Io(format!("{}: no such file or directory", path.display())));
    };
    Ok(SuiteSummary {
        entries: files.iter().flat_map(|f| run_file(f, out, opts)).collect(),
    })
}

/// Parses and validates a file without running it.
pub fn validate(path: &Path) -> Result<Vec<Experiment>> {
    let text = fs::read_to_string(path)?;
    Experiment::parse_all(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_names() {
        let f = Path::new("dir/exp.json");
        assert_eq!(report_path(f, None, 0, 1, "x"), PathBuf::from("dir/exp.report.json"));
        assert_eq!(
            report_path(f, Some(Path::new("out")), 2, 5, "a b/c"),
            PathBuf::from("out/exp.002-a_b_c.report.json")
        );
    }

    #[test]
    fn empty_summary_succeeds() {
        let s = SuiteSummary::default();
        assert!(s.success());
        assert!(s.to_text().contains("0 experiments"));
    }
}
