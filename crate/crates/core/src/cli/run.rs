use std::time::Instant;

use serde_json::{json, Map, Value};

use super::experiment::{Command, Experiment, Target, FORMAT_VERSION};
use super::report::{check_expectations, input_digest, ExactCheck, Report, Status};
use crate::analysis::{
    certify, decide_bijectivity_finite, decide_via_restriction, kernel_witness_global,
    preimage_telescope, preimage_window, preinjectivity_search, preinjectivity_window,
    product_decomposition_check, verify, Decision, Verdict, Window,
};
use crate::automaton::LinearCA;
use crate::config_space::Configuration;
use crate::error::{Error, Result};
use crate::groups::{subgroup_closure, GroupElement, SubgroupClosure, DEFAULT_CLOSURE_BUDGET};
use crate::random;

pub const DEFAULT_RESTRICTION_TRIALS: usize = 20;

/// Overrides taken from the command line.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RunOptions {
    pub seed: Option<u64>,
    pub budget: Option<usize>,
    /// Record wall-clock duration in the report (breaks byte-identity).
    pub timing: bool,
}

struct Outcome {
    payload: Map<String, Value>,
    check: ExactCheck,
}

fn check_of(ok: bool) -> ExactCheck {
    if ok {
        ExactCheck::Pass
    } else {
        ExactCheck::Fail
    }
}

fn elements_json(t: &LinearCA, es: &[GroupElement]) -> Value {
    Value::Array(es.iter().map(|g| t.group().element_to_json(g)).collect())
}

fn certify_kernel(t: &LinearCA, w: &Configuration) -> Result<bool> {
    Ok(!w.is_zero() && certify(t, w, &Configuration::zero(t.group(), t.dim())?)?)
}

fn verdict_check(t: &LinearCA, v: &Verdict) -> Result<ExactCheck> {
    match &v.witness {
        Some(w) => Ok(check_of(certify_kernel(t, w)?)),
        None => Ok(ExactCheck::NotApplicable),
    }
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        other => Map::from_iter([("value".to_string(), other)]),
    }
}

fn finite_subgroup(t: &LinearCA, given: &Option<Vec<GroupElement>>, budget: usize) -> Result<Vec<GroupElement>> {
    if let Some(h) = given {
        return Ok(h.clone());
    }
    match subgroup_closure(t.group(), &t.memory_set(), budget)? {
        SubgroupClosure::Finite(h) => Ok(h),
        other => Err(Error::InvalidSpec(format!(
            "no finite subgroup to work in: {}",
            other.describe()
        ))),
    }
}

fn realize_target(e: &Experiment, seed: u64) -> Result<Configuration> {
    let d = e.automaton.dim();
    match e.params.target.as_ref().expect("validated") {
        Target::Given(y) => {
            if y.dim() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: y.dim(),
                });
            }
            Ok(y.clone())
        }
        Target::Random { points, radius, bound } => {
            let mut rng = random::seeded(seed);
            let ball = Window::ball(&e.group, *radius)?;
            let chosen = random::subset(&mut rng, ball.elements(), *points);
            Configuration::finitely_supported(
                &e.group,
                d,
                chosen
                    .into_iter()
                    .map(|g| (g, random::nonzero_vector(&mut rng, d, *bound))),
            )
        }
    }
}

fn dispatch(e: &Experiment, seed: u64, budget: usize) -> Result<Outcome> {
    let t = &e.automaton;
    let p = &e.params;
    match e.command {
        Command::Decide => {
            if let Some(h) = &p.subgroup {
                let v = decide_bijectivity_finite(t, h)?;
                let mut payload = object(v.to_json());
                payload.insert("subgroup".into(), elements_json(t, h));
                return Ok(Outcome {
                    check: verdict_check(t, &v)?,
                    payload,
                });
            }
            let decision = decide_via_restriction(t, budget)?;
            let mut payload = object(decision.to_json());
            let check = match &decision {
                Decision::Decided { verdict, subgroup } => {
                    payload.insert("subgroup".into(), elements_json(t, subgroup));
                    verdict_check(t, verdict)?
                }
                Decision::Inconclusive { .. } => ExactCheck::NotApplicable,
            };
            Ok(Outcome { payload, check })
        }
        Command::KernelWitness => {
            let h = finite_subgroup(t, &p.subgroup, budget)?;
            let w = kernel_witness_global(t, &h)?;
            let ok = certify_kernel(t, &w)?;
            Ok(Outcome {
                payload: object(json!({
                    "witness": w.to_json(),
                    "subgroup": elements_json(t, &h),
                })),
                check: check_of(ok),
            })
        }
        Command::Preinjectivity => {
            let (window, witness, radii) = match (&p.window, p.max_radius) {
                (Some(w), _) => (Some(w.clone()), preinjectivity_window(t, w)?, None),
                (None, Some(r)) => {
                    let s = preinjectivity_search(t, r)?;
                    match s.witness {
                        Some((w, x)) => (Some(w), Some(x), Some(s.radii_tried)),
                        None => (None, None, Some(s.radii_tried)),
                    }
                }
                (None, None) => unreachable!("validated"),
            };
            let check = match &witness {
                Some(x) => check_of(certify_kernel(t, x)?),
                None => ExactCheck::NotApplicable,
            };
            let mut payload = object(json!({
                "found": witness.is_some(),
                "witness": witness.as_ref().map_or(Value::Null, Configuration::to_json),
                "window": window.as_ref().map_or(Value::Null, Window::describe_json),
            }));
            if let Some(r) = radii {
                payload.insert("radii_tried".into(), json!(r));
            }
            Ok(Outcome { payload, check })
        }
        Command::PreimageTelescope => {
            let y = realize_target(e, seed)?;
            let tp = preimage_telescope(t, &y)?;
            let v = verify(t, &tp.preimage, &y, tp.window.elements())?;
            let global = !tp.finitely_supported || certify(t, &tp.preimage, &y)?;
            let mut payload = object(tp.to_json());
            payload.insert("target".into(), y.to_json());
            payload.insert("verification".into(), v.to_json(t));
            Ok(Outcome {
                payload,
                check: check_of(v.passed() && global),
            })
        }
        Command::PreimageWindow => {
            let y = realize_target(e, seed)?;
            let inner = p.inner.as_ref().expect("validated");
            let outer = p.outer.as_ref().expect("validated");
            let x = preimage_window(t, &y, inner, outer)?;
            let mut payload = object(json!({
                "found": x.is_some(),
                "target": y.to_json(),
                "preimage": x.as_ref().map_or(Value::Null, Configuration::to_json),
                "inner": inner.describe_json(),
                "outer_size": outer.len(),
            }));
            let check = match &x {
                Some(x) => {
                    let v = verify(t, x, &y, inner.elements())?;
                    payload.insert("verification".into(), v.to_json(t));
                    check_of(v.passed())
                }
                None => ExactCheck::NotApplicable,
            };
            Ok(Outcome { payload, check })
        }
        Command::CheckRestriction => {
            let h = p.subgroup.as_ref().expect("validated");
            let all = e.group.enumerate()?;
            let full = decide_bijectivity_finite(t, &all)?;
            let sub = decide_bijectivity_finite(t, h)?;
            let trials = p.trials.unwrap_or(DEFAULT_RESTRICTION_TRIALS);
            let decomposition = product_decomposition_check(t, h, &all, trials, seed)?;
            let agree = full.injective == sub.injective && full.surjective == sub.surjective;
            let witnesses_ok = verdict_check(t, &full)? != ExactCheck::Fail
                && verdict_check(t, &sub)? != ExactCheck::Fail;
            Ok(Outcome {
                payload: object(json!({
                    "agree": agree,
                    "decomposition": decomposition,
                    "trials": trials,
                    "injective": full.injective,
                    "full": full.to_json(),
                    "restricted": sub.to_json(),
                    "subgroup": elements_json(t, h),
                })),
                check: check_of(agree && decomposition && witnesses_ok),
            })
        }
    }
}

/// Runs one experiment. Deterministic in (experiment, seed) unless timing is
/// requested.
pub fn run_experiment(e: &Experiment, opts: &RunOptions) -> Result<Report> {
    let seed = opts.seed.unwrap_or(e.seed);
    let budget = opts
        .budget
        .or(e.params.budget)
        .unwrap_or(DEFAULT_CLOSURE_BUDGET);
    let start = Instant::now();
    let outcome = dispatch(e, seed, budget)?;
    let elapsed = start.elapsed();
    let payload = Value::Object(outcome.payload);
    let expect_mismatches = check_expectations(&e.expect, &payload);
    let status = if outcome.check != ExactCheck::Fail && expect_mismatches.is_empty() {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(Report {
        format: FORMAT_VERSION,
        name: e.name.clone(),
        command: e.command.as_str().into(),
        group: e.group.to_json(),
        seed,
        status,
        exact_check: outcome.check,
        expect_mismatches,
        payload,
        version: env!("CARGO_PKG_VERSION").into(),
        input_digest: input_digest(&e.source),
        duration_us: opts.timing.then(|| elapsed.as_micros() as u64),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn run(v: Value) -> Report {
        run_experiment(&Experiment::from_json(&v).unwrap(), &RunOptions::default()).unwrap()
    }

    #[test]
    fn decide_laplace_on_cyclic_six() {
        let r = run(json!({
            "format": 1, "name": "lap6",
            "group": {"type": "cyclic", "n": 6},
            "automaton": {"builtin": "laplace", "generators": [1, 5]},
            "command": "decide",
            "expect": {"injective": false, "surjective": false, "witness": true},
        }));
        assert!(r.passed(), "{}", r.to_text());
        assert_eq!(r.exact_check, ExactCheck::Pass);
        assert_eq!(r.payload["method"], "finite-rank");
    }

    #[test]
    fn telescope_delta() {
        let r = run(json!({
            "format": 1, "name": "delta",
            "group": {"type": "free_abelian", "d": 1},
            "automaton": {"builtin": "shift_difference", "g0": [1]},
            "command": "preimage-telescope",
            "params": {"target": {"dim": 1, "deviations": [{"at": [0], "value": ["1"]}]}},
            "expect": {"finitely_supported": false},
        }));
        assert!(r.passed(), "{}", r.to_text());
        assert_eq!(r.exact_check, ExactCheck::Pass);
    }

    #[test]
    fn failed_expectation_fails_report() {
        let r = run(json!({
            "format": 1, "name": "wrong",
            "group": {"type": "cyclic", "n": 3},
            "automaton": {"builtin": "laplace", "generators": [1]},
            "command": "decide",
            "expect": {"injective": true},
        }));
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.expect_mismatches.len(), 1);
    }

    #[test]
    fn deterministic_and_seeded() {
        let v = json!({
            "format": 1, "name": "rnd",
            "group": {"type": "free", "k": 2},
            "automaton": {"builtin": "shift_difference", "g0": [1]},
            "command": "preimage-telescope",
            "params": {"target": {"random": {"points": 6, "radius": 2}}},
            "seed": 11,
        });
        let e = Experiment::from_json(&v).unwrap();
        let a = run_experiment(&e, &RunOptions::default()).unwrap();
        let b = run_experiment(&e, &RunOptions::default()).unwrap();
        assert_eq!(a.to_json_string(), b.to_json_string());
        let c = run_experiment(&e, &RunOptions { seed: Some(12), ..Default::default() }).unwrap();
        assert_eq!(c.seed, 12);
        assert_ne!(a.payload["target"], c.payload["target"]);
        assert!(a.passed() && c.passed());
    }

    #[test]
    fn inconclusive_and_other_commands() {
        let r = run(json!({
            "format": 1, "name": "z2",
            "group": {"type": "free_abelian", "d": 2},
            "automaton": {"builtin": "laplace"},
            "command": "decide",
            "expect": {"injective": "unknown"},
        }));
        assert!(r.passed());
        assert_eq!(r.exact_check, ExactCheck::NotApplicable);

        let r = run(json!({
            "format": 1, "name": "restr",
            "group": {"type": "cyclic", "n": 12},
            "automaton": {"builtin": "laplace", "generators": [4]},
            "command": "check-restriction",
            "params": {"subgroup": [0, 4, 8], "trials": 5},
            "expect": {"agree": true, "decomposition": true, "injective": false},
        }));
        assert!(r.passed(), "{}", r.to_text());

        let r = run(json!({
            "format": 1, "name": "pre",
            "group": {"type": "free_abelian", "d": 1},
            "automaton": {"builtin": "laplace"},
            "command": "preinjectivity",
            "params": {"max_radius": 4},
            "expect": {"found": false},
        }));
        assert!(r.passed());
        assert_eq!(r.payload["radii_tried"], json!([1, 2, 3, 4]));

        let r = run(json!({
            "format": 1, "name": "kw",
            "group": {"type": "symmetric", "n": 3},
            "automaton": {"builtin": "laplace", "generators": [[1, 0, 2]], "dim": 2},
            "command": "kernel-witness",
        }));
        assert_eq!(r.exact_check, ExactCheck::Pass);

        let r = run(json!({
            "format": 1, "name": "win",
            "group": {"type": "free_abelian", "d": 2},
            "automaton": {"builtin": "laplace"},
            "command": "preimage-window",
            "params": {"target": {"random": {"points": 3, "radius": 1}}, "inner": {"ball": 2}, "outer": {"ball": 3}},
            "expect": {"found": true},
        }));
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn dispatch_errors_surface() {
        let e = Experiment::from_json(&json!({
            "format": 1, "name": "kw",
            "group": {"type": "cyclic", "n": 5},
            "automaton": {"builtin": "shift_difference", "g0": 0},
            "command": "decide",
        }));
        let Err(Error::Parse(msg)) = e else { panic!() };
        assert!(msg.starts_with("automaton:"), "{msg}");
    }
}
