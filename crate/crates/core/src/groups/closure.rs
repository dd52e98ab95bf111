use std::collections::{HashSet, VecDeque};

use super::{GroupElement, GroupSpec};
use crate::error::Result;

/// Default cap on the number of elements a closure may visit.
pub const DEFAULT_CLOSURE_BUDGET: usize = 1_000_000;

/// Outcome of closing a finite set under the group operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubgroupClosure {
    /// The generated subgroup, canonically sorted.
    Finite(Vec<GroupElement>),
    /// The generated subgroup is provably infinite.
    Infinite,
    /// Breadth-first closure gave up after visiting this many elements.
    BudgetExceeded(usize),
}

impl SubgroupClosure {
    pub fn is_finite(&self) -> bool {
        matches!(self, SubgroupClosure::Finite(_))
    }

    pub fn describe(&self) -> String {
        match self {
            SubgroupClosure::Finite(h) => format!("finite subgroup of order {}", h.len()),
            SubgroupClosure::Infinite => "generated subgroup is infinite".into(),
            SubgroupClosure::BudgetExceeded(n) => {
                format!("closure budget exceeded after {n} elements")
            }
        }
    }
}

/// The subgroup generated by `gens`.
///
/// Torsion-free families (and products containing one) are tested exactly
/// before any enumeration: a non-identity element there has infinite order.
pub fn subgroup_closure(
    spec: &GroupSpec,
    gens: &[GroupElement],
    budget: usize,
) -> Result<SubgroupClosure> {
    for g in gens {
        spec.check(g)?;
    }
    if provably_infinite(spec, gens) {
        return Ok(SubgroupClosure::Infinite);
    }

    let id = spec.identity();
    let mut steps: Vec<GroupElement> = Vec::new();
    for g in gens {
        if *g == id {
            continue;
        }
        for s in [g.clone(), spec.inv(g)] {
            if !steps.contains(&s) {
                steps.push(s);
            }
        }
    }

    let mut seen: HashSet<GroupElement> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for s in &steps {
            let y = spec.op(&x, s);
            if seen.insert(y.clone()) {
                if seen.len() > budget {
                    return Ok(SubgroupClosure::BudgetExceeded(seen.len()));
                }
                queue.push_back(y);
            }
        }
    }
    let mut elements: Vec<_> = seen.into_iter().collect();
    elements.sort();
    Ok(SubgroupClosure::Finite(elements))
}

fn provably_infinite(spec: &GroupSpec, gens: &[GroupElement]) -> bool {
    match spec {
        GroupSpec::FreeAbelian(_) | GroupSpec::Free(_) => gens.iter().any(|g| !spec.is_identity(g)),
        GroupSpec::Product(fs) => fs.iter().enumerate().any(|(i, f)| {
            let projected: Vec<GroupElement> = gens
                .iter()
                .map(|g| match g {
                    GroupElement::Tuple(t) => t[i].clone(),
                    _ => unreachable!("membership checked"),
                })
                .collect();
            provably_infinite(f, &projected)
        }),
        GroupSpec::Cyclic(_) | GroupSpec::Symmetric(_) | GroupSpec::Subgroup(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use GroupElement::*;

    #[test]
    fn symmetric_three_generated_by_transposition_and_cycle() {
        let s3 = GroupSpec::Symmetric(3);
        let gens = [Permutation(vec![1, 0, 2]), Permutation(vec![1, 2, 0])];
        let SubgroupClosure::Finite(h) = subgroup_closure(&s3, &gens, 100).unwrap() else {
            panic!("expected finite closure");
        };
        assert_eq!(h.len(), 6);
        assert_eq!(h, s3.enumerate().unwrap());
    }

    #[test]
    fn torsion_free_detection() {
        let z2 = GroupSpec::FreeAbelian(2);
        assert_eq!(
            subgroup_closure(&z2, &[IntVector(vec![2, 3])], 10).unwrap(),
            SubgroupClosure::Infinite
        );
        assert_eq!(
            subgroup_closure(&z2, &[IntVector(vec![0, 0])], 10).unwrap(),
            SubgroupClosure::Finite(vec![IntVector(vec![0, 0])])
        );
        let f2 = GroupSpec::Free(2);
        assert_eq!(
            subgroup_closure(&f2, &[ReducedWord(vec![])], 10).unwrap(),
            SubgroupClosure::Finite(vec![ReducedWord(vec![])])
        );
        let mixed = GroupSpec::Product(vec![GroupSpec::Cyclic(4), GroupSpec::Free(1)]);
        let g = Tuple(vec![Residue(1), ReducedWord(vec![1])]);
        assert_eq!(subgroup_closure(&mixed, &[g], 10).unwrap(), SubgroupClosure::Infinite);
    }

    #[test]
    fn cyclic_subgroup() {
        let c12 = GroupSpec::Cyclic(12);
        assert_eq!(
            subgroup_closure(&c12, &[Residue(4)], 100).unwrap(),
            SubgroupClosure::Finite(vec![Residue(0), Residue(4), Residue(8)])
        );
        assert_eq!(
            subgroup_closure(&c12, &[], 100).unwrap(),
            SubgroupClosure::Finite(vec![Residue(0)])
        );
    }

    #[test]
    fn budget_is_a_value() {
        let c = GroupSpec::Cyclic(1000);
        assert_eq!(
            subgroup_closure(&c, &[Residue(1)], 10).unwrap(),
            SubgroupClosure::BudgetExceeded(11)
        );
    }

    #[test]
    fn foreign_generator_rejected() {
        assert!(subgroup_closure(&GroupSpec::Cyclic(3), &[Residue(3)], 10).is_err());
    }

    #[test]
    fn closure_is_idempotent() {
        let s4 = GroupSpec::Symmetric(4);
        let gens = [Permutation(vec![1, 0, 2, 3]), Permutation(vec![0, 1, 3, 2])];
        let SubgroupClosure::Finite(h) = subgroup_closure(&s4, &gens, 1000).unwrap() else {
            panic!()
        };
        assert_eq!(h.len(), 4);
        assert_eq!(
            subgroup_closure(&s4, &h, 1000).unwrap(),
            SubgroupClosure::Finite(h.clone())
        );
    }
}
