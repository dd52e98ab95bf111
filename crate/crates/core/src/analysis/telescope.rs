//! Explicit preimages for `τ(x)(g) = x(g·g0) − x(g)` when `g0` has infinite
//! order.
//!
//! Writing `g = r·g0^n` along a transversal `R`, the preimage of `y` is the
//! running sum along each coset, anchored at `x(r) = 0`:
//!
//! ```text
//! x(r·g0^n) =  Σ_{i=0}^{n-1}  y(r·g0^i)       n > 0
//! x(r·g0^n) = −Σ_{i=n}^{-1}   y(r·g0^i)       n < 0
//! ```
//!
//! The negative branch carries a minus sign; without it `x(g·g0) − x(g)`
//! does not reproduce `y` at negative exponents.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::verify::{covering_window, verify};
use super::Window;
use crate::automaton::LinearCA;
use crate::config_space::Configuration;
use crate::error::{Error, Result};
use crate::exact_arith::Vector;
use crate::groups::{CanonicalTransversal, CosetOracle, GroupElement};

/// Extra exponents kept past the last support point when a coset's
/// preimage does not return to zero.
pub const TAIL_MARGIN: i64 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TelescopedPreimage {
    /// Exact when `finitely_supported`; otherwise the exact preimage
    /// truncated to the exponent ranges behind `window`.
    pub preimage: Configuration,
    /// Points on which `τ(preimage) = y` has been verified. When
    /// `finitely_supported` it covers `supp(τ(x)) ∪ supp(y)`, making the check
    /// global.
    pub window: Window,
    /// True when the running sums vanish on both tails of every coset.
    pub finitely_supported: bool,
}

impl TelescopedPreimage {
    pub fn to_json(&self) -> Value {
        json!({
            "preimage": self.preimage.to_json(),
            "window": self.window.to_json(),
            "finitely_supported": self.finitely_supported,
            "certificate": if self.finitely_supported { "global" } else { "window" },
        })
    }
}

/// Preimage of a finitely supported `y` under a shift-difference automaton,
/// using the canonical transversal.
pub fn preimage_telescope(t: &LinearCA, y: &Configuration) -> Result<TelescopedPreimage> {
    let g0 = t.shift_generator().ok_or(Error::NotShiftDifference)?;
    let oracle = CanonicalTransversal::new(t.group(), &g0)?;
    preimage_telescope_with(t, y, &oracle)
}

/// As [`preimage_telescope`], with a caller-supplied coset transversal.
pub fn preimage_telescope_with(
    t: &LinearCA,
    y: &Configuration,
    oracle: &dyn CosetOracle,
) -> Result<TelescopedPreimage> {
    let g0 = t.shift_generator().ok_or(Error::NotShiftDifference)?;
    if oracle.group() != t.group() || *oracle.generator() != g0 {
        return Err(Error::NotShiftDifference);
    }
    if y.group() != t.group() {
        return Err(Error::GroupMismatch {
            left: t.group().to_string(),
            right: y.group().to_string(),
        });
    }
    if y.dim() != t.dim() {
        return Err(Error::DimensionMismatch {
            expected: t.dim(),
            found: y.dim(),
        });
    }
    if !y.base().is_zero() {
        return Err(Error::NonzeroBase);
    }

    let mut cosets: BTreeMap<GroupElement, BTreeMap<i64, Vector>> = BTreeMap::new();
    for (g, v) in y.deviations() {
        let (r, n) = oracle.decompose(g)?;
        cosets.entry(r).or_default().insert(n, v.clone());
    }

    let d = t.dim();
    let group = t.group();
    let mut values = Vec::new();
    let mut spans = Vec::new();
    let mut finitely_supported = true;
    for (r, ys) in &cosets {
        let lo = (*ys.keys().next().expect("nonempty coset")).min(0);
        let hi = (*ys.keys().next_back().expect("nonempty coset")).max(0);
        let y_at = |n: i64| ys.get(&n).cloned().unwrap_or_else(|| Vector::zeros(d));

        // running sums, forwards from 0 and backwards from -1
        let mut along: BTreeMap<i64, Vector> = BTreeMap::new();
        let mut acc = Vector::zeros(d);
        along.insert(0, acc.clone());
        for n in 1..=hi + 1 {
            acc = acc.add(&y_at(n - 1));
            along.insert(n, acc.clone());
        }
        let right_tail = acc;
        let mut acc = Vector::zeros(d);
        for n in (lo..0).rev() {
            acc = acc.sub(&y_at(n));
            along.insert(n, acc.clone());
        }
        let left_tail = acc;

        let closed = right_tail.is_zero() && left_tail.is_zero();
        finitely_supported &= closed;
        let (from, to) = if closed {
            (lo, hi + 1)
        } else {
            (lo - TAIL_MARGIN, hi + 1 + TAIL_MARGIN)
        };
        for n in from..=to {
            let v = if n > hi + 1 {
                right_tail.clone()
            } else if n < lo {
                left_tail.clone()
            } else {
                along[&n].clone()
            };
            values.push((group.op(r, &group.pow(&g0, n)), v));
        }
        spans.push((r.clone(), from, to));
    }
    let preimage = Configuration::finitely_supported(group, d, values)?;

    let window = if finitely_supported {
        Window::new(group, covering_window(t, &preimage, y))?
    } else {
        // τ(x)(r·g0^n) reads exponents n and n+1, both kept for n in [from, to)
        Window::new(
            group,
            spans.iter().flat_map(|(r, from, to)| {
                let g0 = &g0;
                (*from..*to).map(move |n| group.op(r, &group.pow(g0, n)))
            }),
        )?
    };
    assert!(
        verify(t, &preimage, y, window.elements())?.passed(),
        "telescoped preimage failed exact check"
    );
    Ok(TelescopedPreimage {
        preimage,
        window,
        finitely_supported,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::Scalar;
    use crate::groups::GroupSpec;
    use GroupElement::*;

    fn z(x: i64) -> GroupElement {
        IntVector(vec![x])
    }

    fn one(x: i64) -> Vector {
        Vector::from_ints(&[x])
    }

    #[test]
    fn zero_target() {
        let z1 = GroupSpec::FreeAbelian(1);
        let sd = LinearCA::shift_difference(&z1, &z(1), 1).unwrap();
        let p = preimage_telescope(&sd, &Configuration::zero(&z1, 1).unwrap()).unwrap();
        assert!(p.preimage.is_zero());
        assert!(p.finitely_supported);
    }

    #[test]
    fn delta_has_eventually_constant_preimage() {
        let z1 = GroupSpec::FreeAbelian(1);
        let sd = LinearCA::shift_difference(&z1, &z(1), 1).unwrap();
        let y = Configuration::finitely_supported(&z1, 1, [(z(0), one(1))]).unwrap();
        let p = preimage_telescope(&sd, &y).unwrap();
        assert!(!p.finitely_supported);
        assert_eq!(p.preimage.eval(&z(0)).unwrap(), one(0));
        assert_eq!(p.preimage.eval(&z(1)).unwrap(), one(1));
        assert_eq!(p.preimage.support(), (1..=1 + TAIL_MARGIN).map(z).collect::<Vec<_>>());
        assert!(p.window.contains(&z(0)));
        assert!(verify(&sd, &p.preimage, &y, p.window.elements()).unwrap().passed());
    }

    #[test]
    fn balanced_target_has_finite_preimage() {
        let z1 = GroupSpec::FreeAbelian(1);
        let sd = LinearCA::shift_difference(&z1, &z(1), 1).unwrap();
        let y = Configuration::finitely_supported(&z1, 1, [(z(0), one(1)), (z(1), one(-1))]).unwrap();
        let p = preimage_telescope(&sd, &y).unwrap();
        assert!(p.finitely_supported);
        assert_eq!(
            p.preimage,
            Configuration::finitely_supported(&z1, 1, [(z(1), one(1))]).unwrap()
        );
        let w = Window::interval(&z1, -2, 3).unwrap();
        assert!(verify(&sd, &p.preimage, &y, w.elements()).unwrap().passed());
    }

    #[test]
    fn negative_exponents_use_signed_sums() {
        let z1 = GroupSpec::FreeAbelian(1);
        let sd = LinearCA::shift_difference(&z1, &z(1), 1).unwrap();
        let y = Configuration::finitely_supported(&z1, 1, [(z(-3), one(2)), (z(-1), one(-2))]).unwrap();
        let p = preimage_telescope(&sd, &y).unwrap();
        assert!(p.finitely_supported);
        // x(-1) = y(-1)·(−1) = 2, x(-2) = −(y(-2)+y(-1)) = 2, x(-3) = 0
        assert_eq!(p.preimage.eval(&z(-1)).unwrap(), one(2));
        assert_eq!(p.preimage.eval(&z(-2)).unwrap(), one(2));
        assert_eq!(p.preimage.support(), vec![z(-2), z(-1)]);
    }

    #[test]
    fn multiple_cosets_and_vectors() {
        let z2 = GroupSpec::FreeAbelian(2);
        let g0 = IntVector(vec![0, -3]);
        let sd = LinearCA::shift_difference(&z2, &g0, 2).unwrap();
        let y = Configuration::finitely_supported(
            &z2,
            2,
            [
                (IntVector(vec![1, 1]), Vector(vec![Scalar::ratio(1, 2), Scalar::from_int(0)])),
                (IntVector(vec![1, 7]), Vector::from_ints(&[3, -1])),
                (IntVector(vec![-4, -5]), Vector::from_ints(&[0, 5])),
            ],
        )
        .unwrap();
        let p = preimage_telescope(&sd, &y).unwrap();
        assert!(verify(&sd, &p.preimage, &y, p.window.elements()).unwrap().passed());
        for g in y.support() {
            assert!(p.window.contains(&g));
        }
    }

    #[test]
    fn rejects_non_shift_difference_and_nonzero_base() {
        let z1 = GroupSpec::FreeAbelian(1);
        let lap = LinearCA::laplace(&z1, &[z(1)], 1).unwrap();
        let y = Configuration::zero(&z1, 1).unwrap();
        assert_eq!(preimage_telescope(&lap, &y), Err(Error::NotShiftDifference));
        let sd = LinearCA::shift_difference(&z1, &z(1), 1).unwrap();
        let c = Configuration::constant(&z1, one(1)).unwrap();
        assert_eq!(preimage_telescope(&sd, &c), Err(Error::NonzeroBase));
        let z2 = GroupSpec::FreeAbelian(2);
        let diag = LinearCA::shift_difference(&z2, &IntVector(vec![1, 1]), 1).unwrap();
        assert!(matches!(
            preimage_telescope(&diag, &Configuration::zero(&z2, 1).unwrap()),
            Err(Error::UnsupportedGenerator { .. })
        ));
    }
}
