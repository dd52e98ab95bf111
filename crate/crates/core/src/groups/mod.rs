//! Concrete group families with exact element arithmetic.
//!
//! Cyclic, symmetric and finite product groups realize locally finite
//! groups; free abelian and free groups realize groups with elements of
//! infinite order.

mod closure;
mod coset;
mod element;
mod spec;

pub use closure::{subgroup_closure, SubgroupClosure, DEFAULT_CLOSURE_BUDGET};
pub use coset::{coset_decompose, CanonicalTransversal, CosetOracle};
pub use element::GroupElement;
pub use spec::{GroupSpec, Subgroup, MAX_ENUMERATION};

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;
    use GroupElement::*;

    #[test]
    fn multiply_examples() {
        assert_eq!(GroupSpec::Cyclic(6).multiply(&Residue(4), &Residue(5)).unwrap(), Residue(3));
        let f2 = GroupSpec::Free(2);
        assert_eq!(
            f2.multiply(&ReducedWord(vec![1]), &ReducedWord(vec![-1])).unwrap(),
            ReducedWord(vec![])
        );
        // right factor first: (0 1)·(0 1 2) sends 0 -> 1 -> 0, 1 -> 2 -> 2, 2 -> 0 -> 1
        let s3 = GroupSpec::Symmetric(3);
        assert_eq!(
            s3.multiply(&Permutation(vec![1, 0, 2]), &Permutation(vec![1, 2, 0])).unwrap(),
            Permutation(vec![0, 2, 1])
        );
        assert!(GroupSpec::Cyclic(6).multiply(&Residue(1), &IntVector(vec![1])).is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(GroupSpec::Cyclic(6).inverse(&Residue(4)).unwrap(), Residue(2));
        assert_eq!(GroupSpec::Free(2).inverse(&ReducedWord(vec![1, -2])).unwrap(), ReducedWord(vec![2, -1]));
        assert_eq!(
            GroupSpec::FreeAbelian(2).inverse(&IntVector(vec![3, -1])).unwrap(),
            IntVector(vec![-3, 1])
        );
        assert!(GroupSpec::Free(1).inverse(&ReducedWord(vec![2])).is_err());
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            GroupSpec::Cyclic(3).enumerate().unwrap(),
            vec![Residue(0), Residue(1), Residue(2)]
        );
        let s3 = GroupSpec::Symmetric(3).enumerate().unwrap();
        assert_eq!(s3.len(), 6);
        assert_eq!(s3[0], Permutation(vec![0, 1, 2]));
        assert!(s3.windows(2).all(|w| w[0] < w[1]));
        let v4 = GroupSpec::Product(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(2)]);
        let els = v4.enumerate().unwrap();
        assert_eq!(els.len(), 4);
        assert_eq!(els[0], v4.identity());
        assert!(GroupSpec::FreeAbelian(1).enumerate().is_err());
        assert!(GroupSpec::Symmetric(12).enumerate().is_err());
    }

    #[test]
    fn membership() {
        assert!(!GroupSpec::Symmetric(3).contains(&Permutation(vec![0, 0, 1])));
        assert!(!GroupSpec::Free(2).contains(&ReducedWord(vec![1, -1])));
        assert!(!GroupSpec::Free(2).contains(&ReducedWord(vec![0])));
        assert!(!GroupSpec::FreeAbelian(2).contains(&IntVector(vec![1])));
        assert!(GroupSpec::Cyclic(5).contains(&Residue(4)));
        assert!(!GroupSpec::Cyclic(5).contains(&Residue(5)));
    }

    #[test]
    fn cyclic_orders_divide_group_order() {
        for n in 1..=24u64 {
            let c = GroupSpec::Cyclic(n);
            for g in c.enumerate().unwrap() {
                let mut k = 1;
                let mut x = g.clone();
                while !c.is_identity(&x) {
                    x = c.op(&x, &g);
                    k += 1;
                }
                assert_eq!(n % k, 0, "order of {g} in Z/{n}");
            }
        }
    }

    #[test]
    fn subgroup_spec() {
        let c12 = GroupSpec::Cyclic(12);
        let h = Subgroup::new(&c12, &[Residue(8), Residue(0), Residue(4)]).unwrap();
        assert_eq!(h.elements(), &[Residue(0), Residue(4), Residue(8)]);
        assert_eq!(h.index_of(&Residue(8)), Some(2));
        assert!(!h.is_whole_group());
        assert!(Subgroup::new(&c12, &[Residue(0), Residue(4)]).is_err());
        assert!(Subgroup::new(&c12, &[Residue(4), Residue(8)]).is_err());
        let spec = h.into_spec();
        assert_eq!(spec.order(), Some(3));
        assert!(spec.multiply(&Residue(4), &Residue(1)).is_err());
        assert_eq!(spec.multiply(&Residue(4), &Residue(8)).unwrap(), Residue(0));
    }

    #[test]
    fn json_codecs() {
        let spec = GroupSpec::from_json(&json!({
            "type": "product",
            "factors": [{"type": "cyclic", "n": 6}, {"type": "free", "k": 2}]
        }))
        .unwrap();
        let g = spec.element_from_json(&json!([5, [1, -2]])).unwrap();
        assert_eq!(g, Tuple(vec![Residue(5), ReducedWord(vec![1, -2])]));
        assert_eq!(spec.element_to_json(&g), json!([5, [1, -2]]));
        assert_eq!(GroupSpec::from_json(&spec.to_json()).unwrap(), spec);
        assert!(spec.element_from_json(&json!([6, []])).is_err());
        assert!(GroupSpec::from_json(&json!({"type": "cyclic", "n": 0})).is_err());
        assert!(GroupSpec::from_json(&json!({"type": "product", "factors": [{"type": "free", "k": 1}]})).is_err());
        assert!(GroupSpec::from_json(&json!({"type": "torus"})).is_err());

        let sub = GroupSpec::from_json(&json!({
            "type": "subgroup", "ambient": {"type": "cyclic", "n": 12}, "elements": [0, 4, 8]
        }))
        .unwrap();
        assert_eq!(GroupSpec::from_json(&sub.to_json()).unwrap(), sub);
    }
}
