//! Experiment files: parsing and validation.

use std::fmt;
use std::str::FromStr;

use serde_json::Value;

use crate::analysis::Window;
use crate::automaton::LinearCA;
use crate::config_space::Configuration;
use crate::error::{Error, Result};
use crate::groups::{GroupElement, GroupSpec};

pub const FORMAT_VERSION: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Decide,
    KernelWitness,
    Preinjectivity,
    PreimageTelescope,
    PreimageWindow,
    CheckRestriction,
}

impl Command {
    pub const ALL: [Command; 6] = [
        Command::Decide,
        Command::KernelWitness,
        Command::Preinjectivity,
        Command::PreimageTelescope,
        Command::PreimageWindow,
        Command::CheckRestriction,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Command::Decide => "decide",
            Command::KernelWitness => "kernel-witness",
            Command::Preinjectivity => "preinjectivity",
            Command::PreimageTelescope => "preimage-telescope",
            Command::PreimageWindow => "preimage-window",
            Command::CheckRestriction => "check-restriction",
        }
    }

    fn allowed_params(self) -> &'static [&'static str] {
        match self {
            Command::Decide => &["subgroup", "budget"],
            Command::KernelWitness => &["subgroup", "budget"],
            Command::Preinjectivity => &["window", "max_radius"],
            Command::PreimageTelescope => &["target"],
            Command::PreimageWindow => &["target", "inner", "outer"],
            Command::CheckRestriction => &["subgroup", "trials"],
        }
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Command::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Command::ALL.iter().map(|c| c.as_str()).collect();
                Error::Parse(format!("unknown command {s:?}; expected one of {}", names.join(", ")))
            })
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Target configuration for the preimage commands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Given(Configuration),
    /// `points` random nonzero values inside the ball of `radius`, entries
    /// `p/q` with `|p|, q <= bound`, drawn from the experiment seed.
    Random { points: usize, radius: u32, bound: i64 },
}

/// One validated experiment.
#[derive(Clone, Debug, PartialEq)]
pub struct Experiment {
    pub name: String,
    pub group: GroupSpec,
    pub automaton: LinearCA,
    pub command: Command,
    pub params: Params,
    pub seed: u64,
    /// Expected payload fields, compared after the run.
    pub expect: serde_json::Map<String, Value>,
    /// The experiment as written, used for the input digest.
    pub source: Value,
}

/// Command parameters after validation.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Params {
    pub subgroup: Option<Vec<GroupElement>>,
    pub budget: Option<usize>,
    pub window: Option<Window>,
    pub max_radius: Option<u32>,
    pub target: Option<Target>,
    pub inner: Option<Window>,
    pub outer: Option<Window>,
    pub trials: Option<usize>,
}

fn at(path: &str, e: Error) -> Error {
    match e {
        Error::Parse(m) => Error::Parse(format!("{path}: {m}")),
        other => Error::Parse(format!("{path}: {other}")),
    }
}

fn field<'a>(obj: &'a Value, key: &str, path: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| Error::Parse(format!("{path}: missing field \"{key}\"")))
}

fn uint(v: &Value, path: &str) -> Result<u64> {
    v.as_u64()
        .ok_or_else(|| Error::Parse(format!("{path}: expected a nonnegative integer, found {v}")))
}

fn elements(group: &GroupSpec, v: &Value, path: &str) -> Result<Vec<GroupElement>> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("{path}: expected an array of elements")))?
        .iter()
        .enumerate()
        .map(|(i, e)| group.element_from_json(e).map_err(|err| at(&format!("{path}[{i}]"), err)))
        .collect()
}

/// `{"ball": r}`, `{"interval": [lo, hi]}`, `{"word_ball": r, "generators": [..]}`
/// or `{"elements": [..]}`.
pub fn window_from_json(group: &GroupSpec, v: &Value, path: &str) -> Result<Window> {
    let w = if let Some(r) = v.get("ball") {
        Window::ball(group, uint(r, &format!("{path}.ball"))? as u32)
    } else if let Some(iv) = v.get("interval") {
        let bounds: Vec<i64> = iv
            .as_array()
            .map(|a| a.iter().filter_map(Value::as_i64).collect())
            .unwrap_or_default();
        let [lo, hi] = bounds[..] else {
            return Err(Error::Parse(format!("{path}.interval: expected [lo, hi]")));
        };
        Window::interval(group, lo, hi)
    } else if let Some(r) = v.get("word_ball") {
        let gens = elements(group, field(v, "generators", path)?, &format!("{path}.generators"))?;
        Window::word_ball(group, &gens, uint(r, &format!("{path}.word_ball"))? as u32)
    } else if let Some(es) = v.get("elements") {
        Window::new(group, elements(group, es, &format!("{path}.elements"))?)
    } else {
        return Err(Error::Parse(format!(
            "{path}: window needs one of \"ball\", \"interval\", \"word_ball\", \"elements\""
        )));
    };
    w.map_err(|e| at(path, e))
}

fn target_from_json(group: &GroupSpec, v: &Value, path: &str) -> Result<Target> {
    if let Some(r) = v.get("random") {
        let p = format!("{path}.random");
        let get = |k: &str, default: u64| -> Result<u64> {
            r.get(k).map_or(Ok(default), |x| uint(x, &format!("{p}.{k}")))
        };
        return Ok(Target::Random {
            points: get("points", 5)? as usize,
            radius: get("radius", 2)? as u32,
            bound: get("bound", 10)?.max(1) as i64,
        });
    }
    Configuration::from_json(group, v)
        .map(Target::Given)
        .map_err(|e| at(path, e))
}

fn automaton_from_json(group: &GroupSpec, v: &Value) -> Result<LinearCA> {
    let path = "automaton";
    let Some(builtin) = v.get("builtin") else {
        return LinearCA::from_json(v, Some(group)).map_err(|e| at(path, e));
    };
    let dim = match v.get("dim") {
        Some(d) => uint(d, "automaton.dim")? as usize,
        None => 1,
    };
    let t = match builtin.as_str() {
        Some("laplace") => {
            let gens = match v.get("generators") {
                Some(g) => elements(group, g, "automaton.generators")?,
                None => group.standard_generators(),
            };
            LinearCA::laplace(group, &gens, dim)
        }
        Some("shift_difference") => {
            let g0 = group
                .element_from_json(field(v, "g0", path)?)
                .map_err(|e| at("automaton.g0", e))?;
            LinearCA::shift_difference(group, &g0, dim)
        }
        _ => {
            return Err(Error::Parse(format!(
                "automaton.builtin: expected \"laplace\" or \"shift_difference\", found {builtin}"
            )))
        }
    };
    t.map_err(|e| at(path, e))
}

impl Experiment {
    /// Validates a single experiment object.
    pub fn from_json(v: &Value) -> Result<Self> {
        if !v.is_object() {
            return Err(Error::Parse("experiment must be a JSON object".into()));
        }
        let format = uint(field(v, "format", "experiment")?, "format")?;
        if format != FORMAT_VERSION {
            return Err(Error::Parse(format!(
                "format: unsupported version {format}, expected {FORMAT_VERSION}"
            )));
        }
        let name = field(v, "name", "experiment")?
            .as_str()
            .ok_or_else(|| Error::Parse("name: expected a string".into()))?
            .to_string();
        let group = GroupSpec::from_json(field(v, "group", "experiment")?).map_err(|e| at("group", e))?;
        let automaton = automaton_from_json(&group, field(v, "automaton", "experiment")?)?;
        let command: Command = field(v, "command", "experiment")?
            .as_str()
            .ok_or_else(|| Error::Parse("command: expected a string".into()))?
            .parse()
            .map_err(|e| at("command", e))?;
        let seed = match v.get("seed") {
            Some(s) => uint(s, "seed")?,
            None => 0,
        };
        let expect = match v.get("expect") {
            None => serde_json::Map::new(),
            Some(Value::Object(m)) => m.clone(),
            Some(_) => return Err(Error::Parse("expect: expected an object".into())),
        };
        let empty = Value::Object(Default::default());
        let raw = v.get("params").unwrap_or(&empty);
        let params = parse_params(command, &group, raw)?;
        let e = Experiment {
            name,
            group,
            automaton,
            command,
            params,
            seed,
            expect,
            source: v.clone(),
        };
        e.check_requirements()?;
        Ok(e)
    }

    /// Parses a file holding one experiment or `{"experiments": [..]}`.
    /// Syntax errors report line and column.
    pub fn parse_all(text: &str) -> Result<Vec<Experiment>> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        match v.get("experiments") {
            Some(Value::Array(items)) => items
                .iter()
                .enumerate()
                .map(|(i, item)| Experiment::from_json(item).map_err(|e| at(&format!("experiments[{i}]"), e)))
                .collect(),
            Some(_) => Err(Error::Parse("experiments: expected an array".into())),
            None => Ok(vec![Experiment::from_json(&v)?]),
        }
    }

    fn check_requirements(&self) -> Result<()> {
        let p = &self.params;
        let need = |ok: bool, what: &str| {
            if ok {
                Ok(())
            } else {
                Err(Error::Parse(format!("params: {} needs {what}", self.command)))
            }
        };
        match self.command {
            Command::Preinjectivity => need(
                p.window.is_some() != p.max_radius.is_some(),
                "exactly one of \"window\" and \"max_radius\"",
            ),
            Command::PreimageTelescope => {
                need(p.target.is_some(), "\"target\"")?;
                need(self.automaton.shift_generator().is_some(), "a shift-difference automaton")
            }
            Command::PreimageWindow => need(
                p.target.is_some() && p.inner.is_some() && p.outer.is_some(),
                "\"target\", \"inner\" and \"outer\"",
            ),
            Command::CheckRestriction => {
                need(self.group.is_finite(), "a finite group")?;
                need(p.subgroup.is_some(), "\"subgroup\"")
            }
            Command::Decide | Command::KernelWitness => Ok(()),
        }
    }
}

fn parse_params(command: Command, group: &GroupSpec, raw: &Value) -> Result<Params> {
    let obj = raw
        .as_object()
        .ok_or_else(|| Error::Parse("params: expected an object".into()))?;
    let allowed = command.allowed_params();
    if let Some(k) = obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(Error::Parse(format!(
            "params.{k}: not a parameter of {command} (allowed: {})",
            allowed.join(", ")
        )));
    }
    let mut p = Params::default();
    for (k, v) in obj {
        let path = format!("params.{k}");
        match k.as_str() {
            "subgroup" => p.subgroup = Some(elements(group, v, &path)?),
            "budget" => p.budget = Some(uint(v, &path)? as usize),
            "window" => p.window = Some(window_from_json(group, v, &path)?),
            "max_radius" => p.max_radius = Some(uint(v, &path)? as u32),
            "target" => p.target = Some(target_from_json(group, v, &path)?),
            "inner" => p.inner = Some(window_from_json(group, v, &path)?),
            "outer" => p.outer = Some(window_from_json(group, v, &path)?),
            "trials" => p.trials = Some(uint(v, &path)? as usize),
            _ => unreachable!("filtered above"),
        }
    }
    Ok(p)
}
