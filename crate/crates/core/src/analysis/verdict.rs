use std::fmt;

use serde_json::{json, Value};

use super::Window;
use crate::config_space::Configuration;
use crate::groups::{GroupElement, SubgroupClosure};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Rank of the automaton on the whole finite group.
    FiniteRank,
    /// Rank on a finite subgroup containing the memory set.
    RestrictionTransfer,
    /// Evidence from finite windows of an infinite group.
    Window,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::FiniteRank => "finite-rank",
            Method::RestrictionTransfer => "restriction-transfer",
            Method::Window => "window",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Decision record. `None` means unknown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub injective: Option<bool>,
    pub surjective: Option<bool>,
    pub method: Method,
    pub witness: Option<Configuration>,
    pub window: Option<Window>,
    pub notes: String,
}

fn truth(v: Option<bool>) -> Value {
    match v {
        Some(b) => Value::Bool(b),
        None => Value::String("unknown".into()),
    }
}

impl Verdict {
    pub fn to_json(&self) -> Value {
        json!({
            "injective": truth(self.injective),
            "surjective": truth(self.surjective),
            "method": self.method.as_str(),
            "witness": self.witness.as_ref().map_or(Value::Null, Configuration::to_json),
            "window": self.window.as_ref().map_or(Value::Null, Window::to_json),
            "notes": self.notes,
        })
    }
}

/// Outcome of [`decide_via_restriction`](super::decide_via_restriction).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Decided {
        verdict: Verdict,
        /// The finite subgroup generated by the memory set.
        subgroup: Vec<GroupElement>,
    },
    /// No finite subgroup was found; only window evidence is possible.
    Inconclusive { closure: SubgroupClosure },
}

impl Decision {
    pub fn verdict(&self) -> Option<&Verdict> {
        match self {
            Decision::Decided { verdict, .. } => Some(verdict),
            Decision::Inconclusive { .. } => None,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Decision::Decided { verdict, .. } => verdict.to_json(),
            Decision::Inconclusive { closure } => json!({
                "injective": "unknown",
                "surjective": "unknown",
                "method": Method::RestrictionTransfer.as_str(),
                "witness": null,
                "window": null,
                "notes": format!(
                    "inconclusive: {}; use preinjectivity or preimage-window evidence",
                    closure.describe()
                ),
            }),
        }
    }
}
