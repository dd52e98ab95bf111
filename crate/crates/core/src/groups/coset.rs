//! Left-coset transversals for infinite cyclic subgroups `⟨g0⟩`.
//!
//! Every `g` is written uniquely as `r·g0^n` with `r` drawn from a fixed set of
//! representatives. [`CanonicalTransversal`] covers the shapes with an easy
//! closed form; other groups can plug in their own [`CosetOracle`].

use super::{GroupElement, GroupSpec};
use crate::error::{Error, Result};

/// A transversal of the left cosets of `⟨g0⟩`.
pub trait CosetOracle {
    fn group(&self) -> &GroupSpec;

    fn generator(&self) -> &GroupElement;

    /// `(r, n)` with `r·g0^n = g`; `r` must depend only on the coset `g⟨g0⟩`.
    fn decompose(&self, g: &GroupElement) -> Result<(GroupElement, i64)>;
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Shape {
    /// `g0 = step·e_axis` in ℤ^d.
    Axis { axis: usize, step: i64 },
    /// `g0 = a_letter^exp` in a free group, `letter > 0`.
    LetterPower { letter: i32, exp: i64 },
}

/// Closed-form transversal for `k·e_j` in `FreeAbelian(d)` and `a_j^m` in `Free(k)`.
#[derive(Clone, Debug)]
pub struct CanonicalTransversal {
    spec: GroupSpec,
    g0: GroupElement,
    shape: Shape,
}

impl CanonicalTransversal {
    pub fn new(spec: &GroupSpec, g0: &GroupElement) -> Result<Self> {
        spec.check(g0)?;
        let unsupported = || Error::UnsupportedGenerator {
            group: spec.to_string(),
            g0: g0.to_string(),
        };
        let shape = match (spec, g0) {
            (GroupSpec::FreeAbelian(_), GroupElement::IntVector(v)) => {
                let mut nonzero = v.iter().enumerate().filter(|(_, x)| **x != 0);
                match (nonzero.next(), nonzero.next()) {
                    (Some((axis, &step)), None) => Shape::Axis { axis, step },
                    _ => return Err(unsupported()),
                }
            }
            (GroupSpec::Free(_), GroupElement::ReducedWord(w)) => match w.first() {
                Some(&first) if w.iter().all(|&x| x == first) => Shape::LetterPower {
                    letter: first.abs(),
                    exp: first.signum() as i64 * w.len() as i64,
                },
                _ => return Err(unsupported()),
            },
            _ => return Err(unsupported()),
        };
        Ok(CanonicalTransversal {
            spec: spec.clone(),
            g0: g0.clone(),
            shape,
        })
    }
}

impl CosetOracle for CanonicalTransversal {
    fn group(&self) -> &GroupSpec {
        &self.spec
    }

    fn generator(&self) -> &GroupElement {
        &self.g0
    }

    fn decompose(&self, g: &GroupElement) -> Result<(GroupElement, i64)> {
        self.spec.check(g)?;
        match (&self.shape, g) {
            (Shape::Axis { axis, step }, GroupElement::IntVector(v)) => {
                let mut r = v.clone();
                r[*axis] = v[*axis].rem_euclid(step.abs());
                let n = (v[*axis] - r[*axis]) / step;
                Ok((GroupElement::IntVector(r), n))
            }
            (Shape::LetterPower { letter, exp }, GroupElement::ReducedWord(w)) => {
                // strip the maximal trailing power of a_letter
                let tail = w.iter().rev().take_while(|x| x.abs() == *letter).count();
                let t: i64 = w[w.len() - tail..].iter().map(|x| x.signum() as i64).sum();
                let rem = t.rem_euclid(exp.abs());
                let n = (t - rem) / exp;
                let mut r = w[..w.len() - tail].to_vec();
                r.extend(std::iter::repeat(*letter).take(rem as usize));
                Ok((GroupElement::ReducedWord(r), n))
            }
            _ => unreachable!("membership checked"),
        }
    }
}

/// Convenience wrapper: decomposes `g = r·g0^n` with the canonical transversal.
pub fn coset_decompose(
    spec: &GroupSpec,
    g0: &GroupElement,
    g: &GroupElement,
) -> Result<(GroupElement, i64)> {
    CanonicalTransversal::new(spec, g0)?.decompose(g)
}
