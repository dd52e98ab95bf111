//! Decisions over finite subgroups containing the memory set.
//!
//! If `M ⊆ H` with `H` finite, `V^G` splits into copies of `V^H`, one per
//! left coset, on each of which `τ` acts as a conjugate of `τ_H`. So `τ` is
//! injective (surjective) iff the `|H|·d` square matrix of `τ_H` has full
//! rank, and the two properties coincide.

use super::verdict::{Decision, Method, Verdict};
use crate::automaton::LinearCA;
use crate::config_space::Configuration;
use crate::error::{Error, Result};
use crate::exact_arith::{kernel_basis, rank, Matrix, Vector};
use crate::groups::{subgroup_closure, GroupElement, Subgroup, SubgroupClosure};

fn subgroup_for(t: &LinearCA, h: &[GroupElement]) -> Result<Subgroup> {
    let sub = Subgroup::new(t.group(), h)?;
    if let Some(key) = t.memory_set().into_iter().find(|m| !sub.contains(m)) {
        return Err(Error::MemoryOutsideSubgroup { key: key.to_string() });
    }
    Ok(sub)
}

fn assemble(t: &LinearCA, sub: &Subgroup) -> Matrix {
    let d = t.dim();
    let n = sub.len();
    let mut out = Matrix::zeros(n * d, n * d);
    for (i, h) in sub.elements().iter().enumerate() {
        for (m, a) in t.coefficients() {
            // block (h, h·m) receives A_m
            let j = sub
                .index_of(&t.group().op(h, m))
                .expect("subgroup is closed");
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

/// The `|H|·d` square matrix of `τ_H`, basis ordered by (element of `H` in
/// canonical order, coordinate). Block `(g, h)` is `A_{g⁻¹h}`.
pub fn matrix_of(t: &LinearCA, h: &[GroupElement]) -> Result<Matrix> {
    Ok(assemble(t, &subgroup_for(t, h)?))
}

fn witness_from(t: &LinearCA, sub: &Subgroup, v: &Vector) -> Result<Configuration> {
    let d = t.dim();
    let x = Configuration::finitely_supported(
        t.group(),
        d,
        sub.elements()
            .iter()
            .enumerate()
            .map(|(i, h)| (h.clone(), Vector(v.0[i * d..(i + 1) * d].to_vec()))),
    )?;
    assert!(t.apply(&x)?.is_zero(), "kernel witness failed exact check");
    Ok(x)
}

/// A nonzero configuration supported on `H` with `τ(x) = 0`.
pub fn kernel_witness_global(t: &LinearCA, h: &[GroupElement]) -> Result<Configuration> {
    let sub = subgroup_for(t, h)?;
    let ker = kernel_basis(&assemble(t, &sub));
    let v = ker.first().ok_or(Error::TrivialKernel)?;
    witness_from(t, &sub, v)
}

/// Decides injectivity and surjectivity of `τ` (over all of `G`) from the
/// rank of `τ_H`.
pub fn decide_bijectivity_finite(t: &LinearCA, h: &[GroupElement]) -> Result<Verdict> {
    let sub = subgroup_for(t, h)?;
    let m = assemble(t, &sub);
    let n = m.rows();
    let r = rank(&m);
    if r == n {
        return Ok(Verdict {
            injective: Some(true),
            surjective: Some(true),
            method: Method::FiniteRank,
            witness: None,
            window: None,
            notes: format!("rank {r} of {n}: bijective"),
        });
    }
    let ker = kernel_basis(&m);
    let witness = witness_from(t, &sub, &ker[0])?;
    Ok(Verdict {
        injective: Some(false),
        surjective: Some(false),
        method: Method::FiniteRank,
        witness: Some(witness),
        window: None,
        notes: format!("rank {r} of {n}: kernel dimension {}", n - r),
    })
}

/// Closes the memory set and, when the generated subgroup is finite, decides
/// through it. Otherwise reports the closure outcome without a verdict.
pub fn decide_via_restriction(t: &LinearCA, budget: usize) -> Result<Decision> {
    let closure = subgroup_closure(t.group(), &t.memory_set(), budget)?;
    let SubgroupClosure::Finite(h) = closure else {
        return Ok(Decision::Inconclusive { closure });
    };
    let mut verdict = decide_bijectivity_finite(t, &h)?;
    let whole = t.group().order() == Some(h.len() as u128);
    if !whole {
        verdict.method = Method::RestrictionTransfer;
    }
    verdict.notes = format!(
        "memory set generates a subgroup of order {}; {}",
        h.len(),
        verdict.notes
    );
    Ok(Decision::Decided { verdict, subgroup: h })
}
