//! Finite-window linear systems: nonzero finitely supported kernel elements
//! (failures of pre-injectivity) and windowed preimages.

use std::collections::BTreeSet;

use super::verify::verify;
use super::Window;
use crate::automaton::LinearCA;
use crate::config_space::Configuration;
use crate::error::{Error, Result};
use crate::exact_arith::{kernel_basis, solve, Matrix, Vector};
use crate::groups::GroupElement;

fn check_window(t: &LinearCA, w: &Window) -> Result<()> {
    if w.group() != t.group() {
        return Err(Error::GroupMismatch {
            left: t.group().to_string(),
            right: w.group().to_string(),
        });
    }
    Ok(())
}

/// Matrix of `x ↦ (τ(x)(g))_{g ∈ rows}` for `x` supported on `cols`.
fn window_matrix(t: &LinearCA, rows: &[GroupElement], cols: &Window) -> Matrix {
    let d = t.dim();
    let mut out = Matrix::zeros(rows.len() * d, cols.len() * d);
    for (i, g) in rows.iter().enumerate() {
        for (m, a) in t.coefficients() {
            let Some(j) = cols.index_of(&t.group().op(g, m)) else {
                continue;
            };
            for r in 0..d {
                for c in 0..d {
                    let cell = &mut out[(i * d + r, j * d + c)];
                    *cell = &*cell + &a[(r, c)];
                }
            }
        }
    }
    out
}

fn configuration_from(t: &LinearCA, support: &Window, v: &Vector) -> Result<Configuration> {
    let d = t.dim();
    Configuration::finitely_supported(
        t.group(),
        d,
        support
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), Vector(v.0[i * d..(i + 1) * d].to_vec()))),
    )
}

/// Some nonzero `x` with `supp(x) ⊆ E` and `τ(x) = 0`, if one exists.
///
/// `None` is not a proof of pre-injectivity; it only rules out kernel
/// elements supported in this window.
pub fn preinjectivity_window(t: &LinearCA, window: &Window) -> Result<Option<Configuration>> {
    check_window(t, window)?;
    // τ(x) is supported in E·M⁻¹, so constraints there capture τ(x) = 0 exactly
    let inverses: Vec<GroupElement> = t.memory_set().iter().map(|m| t.group().inv(m)).collect();
    let rows: Vec<GroupElement> = window
        .iter()
        .flat_map(|e| inverses.iter().map(move |mi| (e, mi)))
        .map(|(e, mi)| t.group().op(e, mi))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let m = window_matrix(t, &rows, window);
    let Some(v) = kernel_basis(&m).into_iter().next() else {
        return Ok(None);
    };
    let x = configuration_from(t, window, &v)?;
    assert!(!x.is_zero() && t.apply(&x)?.is_zero(), "window kernel witness failed exact check");
    Ok(Some(x))
}

/// Outcome of searching growing balls for a finitely supported kernel element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreinjectivitySearch {
    pub radii_tried: Vec<u32>,
    pub witness: Option<(Window, Configuration)>,
}

/// Tries balls of radius `1, 2, ..., max_radius`, stopping at the first
/// witness.
pub fn preinjectivity_search(t: &LinearCA, max_radius: u32) -> Result<PreinjectivitySearch> {
    let mut radii_tried = Vec::new();
    for r in 1..=max_radius {
        radii_tried.push(r);
        let w = Window::ball(t.group(), r)?;
        if let Some(x) = preinjectivity_window(t, &w)? {
            return Ok(PreinjectivitySearch {
                radii_tried,
                witness: Some((w, x)),
            });
        }
    }
    Ok(PreinjectivitySearch {
        radii_tried,
        witness: None,
    })
}

/// Some `x` supported in `outer` with `τ(x)(g) = y(g)` for every `g ∈ inner`,
/// or `None` when that finite system is inconsistent.
///
/// Requires `inner·M ⊆ outer`, so every constraint reads only unknowns that
/// live in `outer`.
pub fn preimage_window(
    t: &LinearCA,
    y: &Configuration,
    inner: &Window,
    outer: &Window,
) -> Result<Option<Configuration>> {
    check_window(t, inner)?;
    check_window(t, outer)?;
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
    for g in inner.iter() {
        for m in t.memory_set() {
            let read = t.group().op(g, &m);
            if !outer.contains(&read) {
                return Err(Error::WindowContainment(read.to_string()));
            }
        }
    }
    let m = window_matrix(t, inner.elements(), outer);
    let b: Vector = inner.iter().flat_map(|g| y.value_at(g).0).collect();
    let Some(v) = solve(&m, &b)? else {
        return Ok(None);
    };
    let x = configuration_from(t, outer, &v)?;
    assert!(
        verify(t, &x, y, inner.elements())?.passed(),
        "window preimage failed exact check"
    );
    Ok(Some(x))
}
