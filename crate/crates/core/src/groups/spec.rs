use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use super::GroupElement;
use crate::error::{Error, Result};

/// Largest group this crate will enumerate element by element.
pub const MAX_ENUMERATION: u64 = 1_000_000;

const MAX_SYMMETRIC_DEGREE: usize = 64;
const MAX_RANK: usize = 64;

/// A concrete group family.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    /// ℤ/nℤ.
    Cyclic(u64),
    /// Sym(n) acting on `{0, .., n-1}`.
    Symmetric(usize),
    /// ℤ^d.
    FreeAbelian(usize),
    /// Free group on `k` generators.
    Free(usize),
    /// Direct product with at least two factors.
    Product(Vec<GroupSpec>),
    /// A finite subgroup of another group, given by its elements.
    Subgroup(Arc<Subgroup>),
}

/// A finite subgroup `H` of an ambient group, elements in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    ambient: GroupSpec,
    elements: Vec<GroupElement>,
}

impl Subgroup {
    /// Checks membership and closure, then sorts canonically.
    pub fn new(ambient: &GroupSpec, elements: &[GroupElement]) -> Result<Self> {
        for g in elements {
            ambient.check(g)?;
        }
        let mut elements = elements.to_vec();
        elements.sort();
        elements.dedup();
        if elements.binary_search(&ambient.identity()).is_err() {
            return Err(Error::NotSubgroup("identity missing".into()));
        }
        // A finite nonempty subset closed under multiplication is a subgroup.
        for a in &elements {
            for b in &elements {
                let ab = ambient.op(a, b);
                if elements.binary_search(&ab).is_err() {
                    return Err(Error::NotSubgroup(format!("{a}·{b} = {ab} is missing")));
                }
            }
        }
        Ok(Subgroup {
            ambient: ambient.clone(),
            elements,
        })
    }

    pub fn ambient(&self) -> &GroupSpec {
        &self.ambient
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    /// Position of `g` in the canonical element list.
    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.elements.binary_search(g).ok()
    }

    /// True when the subgroup is the whole (finite) ambient group.
    pub fn is_whole_group(&self) -> bool {
        self.ambient.order() == Some(self.elements.len() as u128)
    }

    pub fn into_spec(self) -> GroupSpec {
        GroupSpec::Subgroup(Arc::new(self))
    }
}

impl GroupSpec {
    pub fn product(factors: Vec<GroupSpec>) -> Self {
        GroupSpec::Product(factors)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            GroupSpec::Cyclic(0) => Err(Error::InvalidSpec("cyclic order must be >= 1".into())),
            GroupSpec::Symmetric(n) if *n == 0 || *n > MAX_SYMMETRIC_DEGREE => Err(
                Error::InvalidSpec(format!("symmetric degree must be in 1..={MAX_SYMMETRIC_DEGREE}")),
            ),
            GroupSpec::FreeAbelian(d) if *d == 0 || *d > MAX_RANK => Err(Error::InvalidSpec(
                format!("free abelian rank must be in 1..={MAX_RANK}"),
            )),
            GroupSpec::Free(k) if *k == 0 || *k > MAX_RANK => {
                Err(Error::InvalidSpec(format!("free rank must be in 1..={MAX_RANK}")))
            }
            GroupSpec::Product(fs) if fs.len() < 2 => {
                Err(Error::InvalidSpec("product needs at least two factors".into()))
            }
            GroupSpec::Product(fs) => fs.iter().try_for_each(GroupSpec::validate),
            _ => Ok(()),
        }
    }

    pub fn identity(&self) -> GroupElement {
        match self {
            GroupSpec::Cyclic(_) => GroupElement::Residue(0),
            GroupSpec::Symmetric(n) => GroupElement::Permutation((0..*n).collect()),
            GroupSpec::FreeAbelian(d) => GroupElement::IntVector(vec![0; *d]),
            GroupSpec::Free(_) => GroupElement::ReducedWord(Vec::new()),
            GroupSpec::Product(fs) => GroupElement::Tuple(fs.iter().map(GroupSpec::identity).collect()),
            GroupSpec::Subgroup(h) => h.ambient.identity(),
        }
    }

    pub fn is_identity(&self, g: &GroupElement) -> bool {
        *g == self.identity()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        match (self, g) {
            (GroupSpec::Cyclic(n), GroupElement::Residue(v)) => v < n,
            (GroupSpec::Symmetric(n), GroupElement::Permutation(p)) => {
                if p.len() != *n {
                    return false;
                }
                let mut seen = vec![false; *n];
                p.iter().all(|&i| i < *n && !std::mem::replace(&mut seen[i], true))
            }
            (GroupSpec::FreeAbelian(d), GroupElement::IntVector(v)) => v.len() == *d,
            (GroupSpec::Free(k), GroupElement::ReducedWord(w)) => {
                w.iter().all(|&a| a != 0 && a.unsigned_abs() as usize <= *k)
                    && w.windows(2).all(|p| p[0] != -p[1])
            }
            (GroupSpec::Product(fs), GroupElement::Tuple(t)) => {
                fs.len() == t.len() && fs.iter().zip(t).all(|(f, x)| f.contains(x))
            }
            (GroupSpec::Subgroup(h), g) => h.contains(g),
            _ => false,
        }
    }

    pub fn check(&self, g: &GroupElement) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::FamilyMismatch {
                group: self.to_string(),
                element: g.to_string(),
            })
        }
    }

    /// `g·h`; both operands must belong to this group.
    pub fn multiply(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.op(g, h))
    }

    pub fn inverse(&self, g: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        Ok(self.inv(g))
    }

    /// `g^n` for any signed `n`.
    pub fn power(&self, g: &GroupElement, n: i64) -> Result<GroupElement> {
        self.check(g)?;
        Ok(self.pow(g, n))
    }

    /// Unchecked group law. Callers guarantee membership.
    pub(crate) fn op(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        use GroupElement::*;
        match (self, g, h) {
            (GroupSpec::Cyclic(n), Residue(a), Residue(b)) => {
                Residue(((*a as u128 + *b as u128) % *n as u128) as u64)
            }
            // right factor applied first
            (GroupSpec::Symmetric(_), Permutation(p), Permutation(q)) => {
                Permutation(q.iter().map(|&i| p[i]).collect())
            }
            (GroupSpec::FreeAbelian(_), IntVector(a), IntVector(b)) => {
                IntVector(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            (GroupSpec::Free(_), ReducedWord(a), ReducedWord(b)) => {
                let mut out = a.clone();
                for &letter in b {
                    if out.last() == Some(&-letter) {
                        out.pop();
                    } else {
                        out.push(letter);
                    }
                }
                ReducedWord(out)
            }
            (GroupSpec::Product(fs), Tuple(a), Tuple(b)) => {
                Tuple(fs.iter().zip(a.iter().zip(b)).map(|(f, (x, y))| f.op(x, y)).collect())
            }
            (GroupSpec::Subgroup(s), a, b) => s.ambient.op(a, b),
            _ => unreachable!("group law applied to foreign elements"),
        }
    }

    pub(crate) fn inv(&self, g: &GroupElement) -> GroupElement {
        use GroupElement::*;
        match (self, g) {
            (GroupSpec::Cyclic(n), Residue(a)) => Residue((n - a) % n),
            (GroupSpec::Symmetric(_), Permutation(p)) => {
                let mut q = vec![0; p.len()];
                for (i, &pi) in p.iter().enumerate() {
                    q[pi] = i;
                }
                Permutation(q)
            }
            (GroupSpec::FreeAbelian(_), IntVector(v)) => IntVector(v.iter().map(|x| -x).collect()),
            (GroupSpec::Free(_), ReducedWord(w)) => ReducedWord(w.iter().rev().map(|a| -a).collect()),
            (GroupSpec::Product(fs), Tuple(t)) => {
                Tuple(fs.iter().zip(t).map(|(f, x)| f.inv(x)).collect())
            }
            (GroupSpec::Subgroup(s), a) => s.ambient.inv(a),
            _ => unreachable!("inverse applied to a foreign element"),
        }
    }

    pub(crate) fn pow(&self, g: &GroupElement, n: i64) -> GroupElement {
        let mut base = if n < 0 { self.inv(g) } else { g.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.op(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.op(&base, &base);
            }
        }
        acc
    }

    /// Group order, `None` when infinite. Saturates at `u128::MAX`.
    pub fn order(&self) -> Option<u128> {
        match self {
            GroupSpec::Cyclic(n) => Some(*n as u128),
            GroupSpec::Symmetric(n) => {
                Some((1..=*n as u128).fold(1u128, |acc, k| acc.saturating_mul(k)))
            }
            GroupSpec::FreeAbelian(_) | GroupSpec::Free(_) => None,
            GroupSpec::Product(fs) => fs
                .iter()
                .try_fold(1u128, |acc, f| f.order().map(|o| acc.saturating_mul(o))),
            GroupSpec::Subgroup(h) => Some(h.len() as u128),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    /// Every element exactly once, in canonical order (identity first).
    pub fn enumerate(&self) -> Result<Vec<GroupElement>> {
        let order = self
            .order()
            .ok_or_else(|| Error::InfiniteGroup(self.to_string()))?;
        if order > MAX_ENUMERATION as u128 {
            return Err(Error::ResourceLimit {
                group: self.to_string(),
                limit: MAX_ENUMERATION,
            });
        }
        Ok(match self {
            GroupSpec::Cyclic(n) => (0..*n).map(GroupElement::Residue).collect(),
            GroupSpec::Symmetric(n) => permutations(*n),
            GroupSpec::Product(fs) => {
                let parts = fs.iter().map(GroupSpec::enumerate).collect::<Result<Vec<_>>>()?;
                cartesian(&parts)
            }
            GroupSpec::Subgroup(h) => h.elements.clone(),
            GroupSpec::FreeAbelian(_) | GroupSpec::Free(_) => unreachable!(),
        })
    }

    /// The generating set used for word-metric balls.
    pub fn standard_generators(&self) -> Vec<GroupElement> {
        use GroupElement::*;
        match self {
            GroupSpec::Cyclic(1) => Vec::new(),
            GroupSpec::Cyclic(_) => vec![Residue(1)],
            GroupSpec::Symmetric(n) => (0..n.saturating_sub(1))
                .map(|i| {
                    let mut p: Vec<usize> = (0..*n).collect();
                    p.swap(i, i + 1);
                    Permutation(p)
                })
                .collect(),
            GroupSpec::FreeAbelian(d) => (0..*d)
                .map(|j| {
                    let mut v = vec![0; *d];
                    v[j] = 1;
                    IntVector(v)
                })
                .collect(),
            GroupSpec::Free(k) => (1..=*k as i32).map(|j| ReducedWord(vec![j])).collect(),
            GroupSpec::Product(fs) => {
                let ids: Vec<_> = fs.iter().map(GroupSpec::identity).collect();
                fs.iter()
                    .enumerate()
                    .flat_map(|(i, f)| {
                        let ids = ids.clone();
                        f.standard_generators().into_iter().map(move |g| {
                            let mut t = ids.clone();
                            t[i] = g;
                            Tuple(t)
                        })
                    })
                    .collect()
            }
            GroupSpec::Subgroup(h) => {
                let id = self.identity();
                h.elements.iter().filter(|g| **g != id).cloned().collect()
            }
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            GroupSpec::Cyclic(n) => json!({"type": "cyclic", "n": n}),
            GroupSpec::Symmetric(n) => json!({"type": "symmetric", "n": n}),
            GroupSpec::FreeAbelian(d) => json!({"type": "free_abelian", "d": d}),
            GroupSpec::Free(k) => json!({"type": "free", "k": k}),
            GroupSpec::Product(fs) => {
                json!({"type": "product", "factors": fs.iter().map(GroupSpec::to_json).collect::<Vec<_>>()})
            }
            GroupSpec::Subgroup(h) => json!({
                "type": "subgroup",
                "ambient": h.ambient.to_json(),
                "elements": h.elements.iter().map(|g| h.ambient.element_to_json(g)).collect::<Vec<_>>(),
            }),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let ty = v
            .get("type")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse(format!("group spec needs a \"type\" field: {v}")))?;
        let count = |key: &str| -> Result<u64> {
            v.get(key)
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Parse(format!("{ty} group needs a nonnegative integer \"{key}\"")))
        };
        let spec = match ty {
            "cyclic" => GroupSpec::Cyclic(count("n")?),
            "symmetric" => GroupSpec::Symmetric(count("n")? as usize),
            "free_abelian" => GroupSpec::FreeAbelian(count("d")? as usize),
            "free" => GroupSpec::Free(count("k")? as usize),
            "product" => {
                let factors = v
                    .get("factors")
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::Parse("product group needs a \"factors\" array".into()))?;
                GroupSpec::Product(factors.iter().map(GroupSpec::from_json).collect::<Result<_>>()?)
            }
            "subgroup" => {
                let ambient = GroupSpec::from_json(
                    v.get("ambient")
                        .ok_or_else(|| Error::Parse("subgroup needs \"ambient\"".into()))?,
                )?;
                let elements = v
                    .get("elements")
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::Parse("subgroup needs an \"elements\" array".into()))?
                    .iter()
                    .map(|e| ambient.element_from_json(e))
                    .collect::<Result<Vec<_>>>()?;
                Subgroup::new(&ambient, &elements)?.into_spec()
            }
            other => return Err(Error::Parse(format!("unknown group type {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn element_to_json(&self, g: &GroupElement) -> Value {
        match g {
            GroupElement::Residue(v) => json!(v),
            GroupElement::Permutation(p) => json!(p),
            GroupElement::IntVector(v) => json!(v),
            GroupElement::ReducedWord(w) => json!(w),
            GroupElement::Tuple(t) => match self {
                GroupSpec::Product(fs) => {
                    Value::Array(fs.iter().zip(t).map(|(f, x)| f.element_to_json(x)).collect())
                }
                GroupSpec::Subgroup(h) => h.ambient.element_to_json(g),
                _ => Value::Array(t.iter().map(|x| self.element_to_json(x)).collect()),
            },
        }
    }

    /// Decodes an element; the encoding depends on the family.
    pub fn element_from_json(&self, v: &Value) -> Result<GroupElement> {
        let bad = || Error::Parse(format!("{v} is not an element of {self}"));
        let ints = || -> Result<Vec<i64>> {
            v.as_array()
                .ok_or_else(bad)?
                .iter()
                .map(|x| x.as_i64().ok_or_else(bad))
                .collect()
        };
        let g = match self {
            GroupSpec::Cyclic(_) => GroupElement::Residue(v.as_u64().ok_or_else(bad)?),
            GroupSpec::Symmetric(_) => GroupElement::Permutation(
                ints()?
                    .into_iter()
                    .map(|x| usize::try_from(x).map_err(|_| bad()))
                    .collect::<Result<_>>()?,
            ),
            GroupSpec::FreeAbelian(_) => GroupElement::IntVector(ints()?),
            GroupSpec::Free(_) => GroupElement::ReducedWord(
                ints()?
                    .into_iter()
                    .map(|x| i32::try_from(x).map_err(|_| bad()))
                    .collect::<Result<_>>()?,
            ),
            GroupSpec::Product(fs) => {
                let parts = v.as_array().ok_or_else(bad)?;
                if parts.len() != fs.len() {
                    return Err(bad());
                }
                GroupElement::Tuple(
                    fs.iter()
                        .zip(parts)
                        .map(|(f, p)| f.element_from_json(p))
                        .collect::<Result<_>>()?,
                )
            }
            GroupSpec::Subgroup(h) => h.ambient.element_from_json(v)?,
        };
        self.check(&g)?;
        Ok(g)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic({n})"),
            GroupSpec::Symmetric(n) => write!(f, "symmetric({n})"),
            GroupSpec::FreeAbelian(d) => write!(f, "free_abelian({d})"),
            GroupSpec::Free(k) => write!(f, "free({k})"),
            GroupSpec::Product(fs) => {
                f.write_str("product(")?;
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")
            }
            GroupSpec::Subgroup(h) => write!(f, "subgroup of {} with {} elements", h.ambient, h.len()),
        }
    }
}

fn permutations(n: usize) -> Vec<GroupElement> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![GroupElement::Permutation(p.clone())];
    // next permutation in lexicographic order
    loop {
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(GroupElement::Permutation(p.clone()));
    }
}

fn cartesian(parts: &[Vec<GroupElement>]) -> Vec<GroupElement> {
    let mut out = vec![Vec::new()];
    for part in parts {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<GroupElement>| {
                part.iter().map(move |x| {
                    let mut t = prefix.clone();
                    t.push(x.clone());
                    t
                })
            })
            .collect();
    }
    out.into_iter().map(GroupElement::Tuple).collect()
}
