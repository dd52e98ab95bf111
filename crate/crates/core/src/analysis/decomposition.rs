//! Mechanical check of the coset product decomposition `τ = ∏_c τ_c`.
//!
//! For a coset `gH`, `ψ_g(x)(h) = x(g·h)` identifies `V^{gH}` with `V^H`,
//! and `ψ_g(τ(x)) = τ_H(ψ_g(x))` whenever `M ⊆ H`.

use std::collections::BTreeSet;

use crate::automaton::LinearCA;
use crate::config_space::Configuration;
use crate::error::{Error, Result};
use crate::groups::{GroupElement, GroupSpec, Subgroup};
use crate::random;

/// A global map `V^G → V^G` on finitely supported configurations.
pub trait GlobalMap {
    fn group(&self) -> &GroupSpec;
    fn dim(&self) -> usize;
    fn apply(&self, x: &Configuration) -> Result<Configuration>;
}

impl GlobalMap for LinearCA {
    fn group(&self) -> &GroupSpec {
        LinearCA::group(self)
    }

    fn dim(&self) -> usize {
        LinearCA::dim(self)
    }

    fn apply(&self, x: &Configuration) -> Result<Configuration> {
        LinearCA::apply(self, x)
    }
}

/// Left coset representatives of `H` in `G`, first element of each coset in
/// the order of `g_all`.
pub fn coset_representatives(
    group: &GroupSpec,
    h: &Subgroup,
    g_all: &[GroupElement],
) -> Vec<GroupElement> {
    let mut covered = BTreeSet::new();
    let mut reps = Vec::new();
    for g in g_all {
        if covered.contains(g) {
            continue;
        }
        covered.extend(h.elements().iter().map(|k| group.op(g, k)));
        reps.push(g.clone());
    }
    reps
}

/// Checks on `trials` random configurations over the finite group `G` that
/// `τ` agrees, coset by coset under `ψ_g`, with `τ_H`.
pub fn product_decomposition_check(
    t: &LinearCA,
    h: &[GroupElement],
    g_all: &[GroupElement],
    trials: usize,
    seed: u64,
) -> Result<bool> {
    product_decomposition_check_with(t, t, h, g_all, trials, seed)
}

/// As [`product_decomposition_check`], comparing an arbitrary `global` map
/// against the restriction of `local`.
pub fn product_decomposition_check_with(
    global: &dyn GlobalMap,
    local: &LinearCA,
    h: &[GroupElement],
    g_all: &[GroupElement],
    trials: usize,
    seed: u64,
) -> Result<bool> {
    let group = local.group();
    if global.group() != group {
        return Err(Error::GroupMismatch {
            left: group.to_string(),
            right: global.group().to_string(),
        });
    }
    if global.dim() != local.dim() {
        return Err(Error::DimensionMismatch {
            expected: local.dim(),
            found: global.dim(),
        });
    }
    let listed: BTreeSet<&GroupElement> = g_all.iter().collect();
    if group.enumerate()?.iter().collect::<BTreeSet<_>>() != listed {
        return Err(Error::InvalidSpec(format!(
            "element list does not enumerate {group}"
        )));
    }
    let sub = Subgroup::new(group, h)?;
    let t_h = local.restrict(&sub)?;
    let h_spec = t_h.group().clone();
    let reps = coset_representatives(group, &sub, g_all);
    let d = local.dim();

    let mut rng = random::seeded(seed);
    for _ in 0..trials {
        let x = random::configuration_on(&mut rng, group, d, g_all, 20)?;
        let y = global.apply(&x)?;
        for g in &reps {
            let pull = |c: &Configuration| -> Result<Configuration> {
                Configuration::finitely_supported(
                    &h_spec,
                    d,
                    sub.elements().iter().map(|k| (k.clone(), c.value_at(&group.op(g, k)))),
                )
            };
            let lhs = pull(&y)?;
            let rhs = t_h.apply(&pull(&x)?)?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{Matrix, Scalar};
    use GroupElement::*;

    fn residues(xs: &[u64]) -> Vec<GroupElement> {
        xs.iter().map(|&x| Residue(x)).collect()
    }

    /// `τ` everywhere except on `coset`, where `corrupt` is used instead.
    struct CorruptOnCoset {
        honest: LinearCA,
        corrupt: LinearCA,
        coset: Vec<GroupElement>,
    }

    impl GlobalMap for CorruptOnCoset {
        fn group(&self) -> &GroupSpec {
            self.honest.group()
        }

        fn dim(&self) -> usize {
            self.honest.dim()
        }

        fn apply(&self, x: &Configuration) -> Result<Configuration> {
            let mut y = self.honest.apply(x)?;
            for g in &self.coset {
                y.set_value(g, &self.corrupt.apply_at(x, g)?)?;
            }
            Ok(y)
        }
    }

    #[test]
    fn whole_group_is_trivially_consistent() {
        let s3 = GroupSpec::Symmetric(3);
        let all = s3.enumerate().unwrap();
        let t = random::linear_ca(&mut random::seeded(3), &s3, 2, &all[..3], 5).unwrap();
        assert!(product_decomposition_check(&t, &all, &all, 10, 1).unwrap());
    }

    #[test]
    fn cyclic_twelve_laplace() {
        let c12 = GroupSpec::Cyclic(12);
        let all = c12.enumerate().unwrap();
        let lap = LinearCA::laplace(&c12, &[Residue(4)], 1).unwrap();
        let h = residues(&[0, 4, 8]);
        assert_eq!(coset_representatives(&c12, &Subgroup::new(&c12, &h).unwrap(), &all), residues(&[0, 1, 2, 3]));
        assert!(product_decomposition_check(&lap, &h, &all, 50, 0).unwrap());
    }

    #[test]
    fn corruption_on_one_coset_is_detected() {
        let c12 = GroupSpec::Cyclic(12);
        let all = c12.enumerate().unwrap();
        let h = residues(&[0, 4, 8]);
        let lap = LinearCA::laplace(&c12, &[Residue(4)], 1).unwrap();
        let corrupt = LinearCA::new(
            &c12,
            1,
            [
                (Residue(0), Matrix::from_ints(&[&[1]])),
                (Residue(4), Matrix::scalar(1, Scalar::ratio(-1, 2))),
            ],
        )
        .unwrap();
        let double = CorruptOnCoset {
            honest: lap.clone(),
            corrupt,
            coset: residues(&[2, 6, 10]),
        };
        assert!(!product_decomposition_check_with(&double, &lap, &h, &all, 5, 0).unwrap());
    }

    #[test]
    fn preconditions() {
        let c12 = GroupSpec::Cyclic(12);
        let all = c12.enumerate().unwrap();
        let sd = LinearCA::shift_difference(&c12, &Residue(1), 1).unwrap();
        assert!(matches!(
            product_decomposition_check(&sd, &residues(&[0, 4, 8]), &all, 1, 0),
            Err(Error::MemoryOutsideSubgroup { .. })
        ));
        assert!(matches!(
            product_decomposition_check(&sd, &all, &all[..6], 1, 0),
            Err(Error::InvalidSpec(_))
        ));
        let z1 = GroupSpec::FreeAbelian(1);
        let t = LinearCA::identity(&z1, 1).unwrap();
        assert!(product_decomposition_check(&t, &[IntVector(vec![0])], &[IntVector(vec![0])], 1, 0).is_err());
    }
}
