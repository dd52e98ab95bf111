//! Configurations `x: G → K^d` of the form "constant base plus a finitely
//! supported deviation".
//!
//! This class contains the constant configurations and the finitely
//! supported ones, and every linear cellular automaton maps it into itself.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact_arith::{Scalar, Vector};
use crate::groups::{GroupElement, GroupSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    group: GroupSpec,
    dim: usize,
    base: Vector,
    /// Never holds a zero vector.
    deviations: BTreeMap<GroupElement, Vector>,
}

impl Configuration {
    /// The constant configuration `x(g) = base`.
    pub fn constant(group: &GroupSpec, base: Vector) -> Result<Self> {
        if base.is_empty() {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        Ok(Configuration {
            group: group.clone(),
            dim: base.len(),
            base,
            deviations: BTreeMap::new(),
        })
    }

    pub fn zero(group: &GroupSpec, dim: usize) -> Result<Self> {
        Self::constant(group, Vector::zeros(dim))
    }

    /// `base + deviations`; duplicate keys are rejected, zero deviations dropped.
    pub fn new<I>(group: &GroupSpec, base: Vector, deviations: I) -> Result<Self>
    where
        I: IntoIterator<Item = (GroupElement, Vector)>,
    {
        let mut x = Self::constant(group, base)?;
        for (g, v) in deviations {
            group.check(&g)?;
            x.check_dim(&v)?;
            if x.deviations.contains_key(&g) {
                return Err(Error::Duplicate(g.to_string()));
            }
            if !v.is_zero() {
                x.deviations.insert(g, v);
            }
        }
        Ok(x)
    }

    /// Finitely supported configuration with the given values.
    pub fn finitely_supported<I>(group: &GroupSpec, dim: usize, values: I) -> Result<Self>
    where
        I: IntoIterator<Item = (GroupElement, Vector)>,
    {
        Self::new(group, Vector::zeros(dim), values)
    }

    fn check_dim(&self, v: &Vector) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn base(&self) -> &Vector {
        &self.base
    }

    pub fn deviations(&self) -> impl Iterator<Item = (&GroupElement, &Vector)> {
        self.deviations.iter()
    }

    pub fn deviation(&self, g: &GroupElement) -> Option<&Vector> {
        self.deviations.get(g)
    }

    /// `x(g)`.
    pub fn eval(&self, g: &GroupElement) -> Result<Vector> {
        self.group.check(g)?;
        Ok(self.value_at(g))
    }

    pub(crate) fn value_at(&self, g: &GroupElement) -> Vector {
        match self.deviations.get(g) {
            Some(d) => self.base.add(d),
            None => self.base.clone(),
        }
    }

    /// Sets `x(g) = value`, keeping the normal form.
    pub fn set_value(&mut self, g: &GroupElement, value: &Vector) -> Result<()> {
        self.group.check(g)?;
        self.check_dim(value)?;
        let d = value.sub(&self.base);
        if d.is_zero() {
            self.deviations.remove(g);
        } else {
            self.deviations.insert(g.clone(), d);
        }
        Ok(())
    }

    /// Adds `delta` to the deviation at `g`.
    pub fn add_at(&mut self, g: &GroupElement, delta: &Vector) -> Result<()> {
        self.group.check(g)?;
        self.check_dim(delta)?;
        let d = match self.deviations.remove(g) {
            Some(d) => d.add(delta),
            None => delta.clone(),
        };
        if !d.is_zero() {
            self.deviations.insert(g.clone(), d);
        }
        Ok(())
    }

    /// The deviation keys in canonical order.
    pub fn support(&self) -> Vec<GroupElement> {
        self.deviations.keys().cloned().collect()
    }

    pub fn is_finitely_supported(&self) -> bool {
        self.base.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero() && self.deviations.is_empty()
    }

    /// The translate `g·x`, with `(g·x)(h) = x(g⁻¹h)`.
    pub fn translate(&self, g: &GroupElement) -> Result<Self> {
        self.group.check(g)?;
        Ok(Configuration {
            group: self.group.clone(),
            dim: self.dim,
            base: self.base.clone(),
            deviations: self
                .deviations
                .iter()
                .map(|(k, v)| (self.group.op(g, k), v.clone()))
                .collect(),
        })
    }

    fn check_compatible(&self, other: &Configuration) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch {
                left: self.group.to_string(),
                right: other.group.to_string(),
            });
        }
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    /// True iff `x` and `y` agree at every point of `window`.
    pub fn equal_on(&self, other: &Configuration, window: &[GroupElement]) -> Result<bool> {
        self.check_compatible(other)?;
        for g in window {
            self.group.check(g)?;
            if self.value_at(g) != other.value_at(g) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `a·x + b·y`.
    pub fn linear_combination(a: &Scalar, x: &Self, b: &Scalar, y: &Self) -> Result<Self> {
        x.check_compatible(y)?;
        let mut out = Configuration::constant(&x.group, x.base.scale(a).add(&y.base.scale(b)))?;
        for (g, d) in &x.deviations {
            out.add_at(g, &d.scale(a))?;
        }
        for (g, d) in &y.deviations {
            out.add_at(g, &d.scale(b))?;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dim": self.dim,
            "base": self.base.to_json(),
            "deviations": self.deviations.iter().map(|(g, v)| json!({
                "at": self.group.element_to_json(g),
                "value": v.to_json(),
            })).collect::<Vec<_>>(),
        })
    }

    /// Decodes a configuration over `group`. `"base"` defaults to zero and
    /// `"deviations"` to empty.
    pub fn from_json(group: &GroupSpec, v: &Value) -> Result<Self> {
        let dim = v
            .get("dim")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("configuration needs a positive \"dim\"".into()))?
            as usize;
        let base = match v.get("base") {
            Some(b) => Vector::from_json(b)?,
            None => Vector::zeros(dim),
        };
        if base.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: base.len(),
            });
        }
        let mut devs = Vec::new();
        if let Some(list) = v.get("deviations") {
            let list = list
                .as_array()
                .ok_or_else(|| Error::Parse("\"deviations\" must be an array".into()))?;
            for item in list {
                let at = item
                    .get("at")
                    .ok_or_else(|| Error::Parse("deviation needs \"at\"".into()))?;
                let value = item
                    .get("value")
                    .ok_or_else(|| Error::Parse("deviation needs \"value\"".into()))?;
                devs.push((group.element_from_json(at)?, Vector::from_json(value)?));
            }
        }
        Configuration::new(group, base, devs)
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base)?;
        if !self.deviations.is_empty() {
            f.write_str(" + {")?;
            for (i, (g, v)) in self.deviations.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{g} ↦ {v}")?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use GroupElement::*;

    fn z(x: i64) -> GroupElement {
        IntVector(vec![x])
    }

    fn s(xs: &[i64]) -> Vector {
        Vector::from_ints(xs)
    }

    #[test]
    fn eval_examples() {
        let z1 = GroupSpec::FreeAbelian(1);
        let one = Configuration::constant(&z1, s(&[1])).unwrap();
        assert_eq!(one.eval(&z(-40)).unwrap(), s(&[1]));
        let delta = Configuration::finitely_supported(&z1, 1, [(z(0), s(&[1]))]).unwrap();
        assert_eq!(delta.eval(&z(0)).unwrap(), s(&[1]));
        assert_eq!(delta.eval(&z(7)).unwrap(), s(&[0]));
        let x = Configuration::new(&z1, s(&[2]), [(z(5), s(&[3]))]).unwrap();
        assert_eq!(x.eval(&z(5)).unwrap(), s(&[5]));
        assert!(x.eval(&Residue(0)).is_err());
    }

    #[test]
    fn translate_examples() {
        let z1 = GroupSpec::FreeAbelian(1);
        let x = Configuration::finitely_supported(&z1, 1, [(z(0), s(&[1]))]).unwrap();
        assert_eq!(x.translate(&z(0)).unwrap(), x);
        assert_eq!(x.translate(&z(3)).unwrap().support(), vec![z(3)]);
        // (g·x)(h) = x(g⁻¹h)
        let gx = x.translate(&z(3)).unwrap();
        for h in -5..5 {
            assert_eq!(gx.eval(&z(h)).unwrap(), x.eval(&z(h - 3)).unwrap());
        }
    }

    #[test]
    fn support_normalization() {
        let z1 = GroupSpec::FreeAbelian(1);
        assert!(Configuration::constant(&z1, s(&[4])).unwrap().support().is_empty());
        let x = Configuration::finitely_supported(&z1, 1, [(z(4), s(&[-1])), (z(0), s(&[1]))]).unwrap();
        assert_eq!(x.support(), vec![z(0), z(4)]);
        let mut y = Configuration::zero(&z1, 1).unwrap();
        y.add_at(&z(2), &s(&[3])).unwrap();
        y.add_at(&z(2), &s(&[-3])).unwrap();
        assert!(y.support().is_empty());
        assert!(Configuration::finitely_supported(&z1, 1, [(z(1), s(&[0]))]).unwrap().is_zero());
        assert!(Configuration::finitely_supported(&z1, 1, [(z(1), s(&[1])), (z(1), s(&[2]))]).is_err());
    }

    #[test]
    fn equal_on_examples() {
        let z1 = GroupSpec::FreeAbelian(1);
        let zero = Configuration::zero(&z1, 1).unwrap();
        let d0 = Configuration::finitely_supported(&z1, 1, [(z(0), s(&[1]))]).unwrap();
        let d5 = Configuration::finitely_supported(&z1, 1, [(z(5), s(&[1]))]).unwrap();
        assert!(d0.equal_on(&d0, &[z(0), z(9)]).unwrap());
        assert!(!zero.equal_on(&d0, &[z(0)]).unwrap());
        assert!(zero.equal_on(&d5, &[z(0), z(1)]).unwrap());
        let other_dim = Configuration::zero(&z1, 2).unwrap();
        assert!(zero.equal_on(&other_dim, &[]).is_err());
    }

    #[test]
    fn set_value_keeps_normal_form() {
        let c = GroupSpec::Cyclic(4);
        let mut x = Configuration::constant(&c, s(&[1, 2])).unwrap();
        x.set_value(&Residue(3), &s(&[1, 5])).unwrap();
        assert_eq!(x.deviation(&Residue(3)), Some(&s(&[0, 3])));
        x.set_value(&Residue(3), &s(&[1, 2])).unwrap();
        assert!(x.support().is_empty());
        assert!(x.set_value(&Residue(3), &s(&[1])).is_err());
    }

    #[test]
    fn json_round_trip() {
        let f2 = GroupSpec::Free(2);
        let x = Configuration::new(
            &f2,
            Vector(vec![Scalar::ratio(1, 2)]),
            [(ReducedWord(vec![1, -2]), Vector(vec![Scalar::ratio(-3, 4)]))],
        )
        .unwrap();
        let back = Configuration::from_json(&f2, &x.to_json()).unwrap();
        assert_eq!(back, x);
        assert_eq!(
            x.to_json(),
            json!({"dim": 1, "base": ["1/2"], "deviations": [{"at": [1, -2], "value": ["-3/4"]}]})
        );
        assert!(Configuration::from_json(&f2, &json!({"dim": 2, "base": ["1"]})).is_err());
    }
}
