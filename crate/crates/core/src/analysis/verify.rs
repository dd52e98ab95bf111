use serde_json::{json, Value};

use crate::automaton::LinearCA;
use crate::config_space::Configuration;
use crate::error::{Error, Result};
use crate::exact_arith::Vector;
use crate::groups::GroupElement;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub at: GroupElement,
    pub expected: Vector,
    pub actual: Vector,
}

/// Result of checking `τ(x) = y` pointwise on a window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn to_json(&self, t: &LinearCA) -> Value {
        json!({
            "passed": self.passed(),
            "checked": self.checked,
            "mismatches": self.mismatches.iter().map(|m| json!({
                "at": t.group().element_to_json(&m.at),
                "expected": m.expected.to_json(),
                "actual": m.actual.to_json(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Compares `τ(x)(g)` with `y(g)` at every `g` in `window`.
///
/// This certifies `τ(x) = y` everywhere only when the window covers
/// `supp(τ(x)) ∪ supp(y)` and both sides have the same base.
pub fn verify(
    t: &LinearCA,
    x: &Configuration,
    y: &Configuration,
    window: &[GroupElement],
) -> Result<Verification> {
    if y.group() != t.group() {
        return Err(Error::GroupMismatch {
            left: t.group().to_string(),
            right: y.group().to_string(),
        });
    }
    let mut mismatches = Vec::new();
    for g in window {
        let actual = t.apply_at(x, g)?;
        let expected = y.eval(g)?;
        if actual != expected {
            mismatches.push(Mismatch {
                at: g.clone(),
                expected,
                actual,
            });
        }
    }
    Ok(Verification {
        checked: window.len(),
        mismatches,
    })
}

/// A window on which [`verify`] is a global certificate for `τ(x) = y`,
/// provided the bases already agree.
pub fn covering_window(t: &LinearCA, x: &Configuration, y: &Configuration) -> Vec<GroupElement> {
    let mut pts = t.image_support_bound(x);
    pts.extend(y.support());
    if pts.is_empty() {
        pts.insert(t.group().identity());
    }
    pts.into_iter().collect()
}

/// Exact global check of `τ(x) = y`: compares bases, then verifies on the
/// covering window.
pub fn certify(t: &LinearCA, x: &Configuration, y: &Configuration) -> Result<bool> {
    let image_base = t.total_coefficient().mul_vec(x.base())?;
    if &image_base != y.base() {
        return Ok(false);
    }
    Ok(verify(t, x, y, &covering_window(t, x, y))?.passed())
}
