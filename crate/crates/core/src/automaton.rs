//! Linear cellular automata `τ(x)(g) = Σ_{m ∈ M} A_m · x(g·m)` over a group.
//!
//! A linear local rule `μ: V^M → V` is exactly a family of `d×d` matrices
//! indexed by the memory set, so this representation loses nothing.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Value};

use crate::config_space::Configuration;
use crate::error::{Error, Result};
use crate::exact_arith::{Matrix, Scalar, Vector};
use crate::groups::{GroupElement, GroupSpec, Subgroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCA {
    group: GroupSpec,
    dim: usize,
    coefficients: BTreeMap<GroupElement, Matrix>,
}

impl LinearCA {
    pub fn new<I>(group: &GroupSpec, dim: usize, coefficients: I) -> Result<Self>
    where
        I: IntoIterator<Item = (GroupElement, Matrix)>,
    {
        if dim == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        let mut map = BTreeMap::new();
        for (m, a) in coefficients {
            group.check(&m)?;
            if a.rows() != dim || a.cols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: if a.rows() != dim { a.rows() } else { a.cols() },
                });
            }
            if map.insert(m.clone(), a).is_some() {
                return Err(Error::Duplicate(m.to_string()));
            }
        }
        Ok(LinearCA {
            group: group.clone(),
            dim,
            coefficients: map,
        })
    }

    pub fn identity(group: &GroupSpec, dim: usize) -> Result<Self> {
        Self::new(group, dim, [(group.identity(), Matrix::identity(dim))])
    }

    /// The zero map, with empty memory set.
    pub fn zero(group: &GroupSpec, dim: usize) -> Result<Self> {
        Self::new(group, dim, [])
    }

    /// The Laplace operator `x(g) − (1/|S|) Σ_{s∈S} x(g·s)` acting
    /// componentwise on `K^d`.
    pub fn laplace(group: &GroupSpec, generators: &[GroupElement], dim: usize) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let mut seen = BTreeSet::new();
        for s in generators {
            group.check(s)?;
            if !seen.insert(s) {
                return Err(Error::Duplicate(s.to_string()));
            }
        }
        let weight = Scalar::ratio(1, generators.len() as i64);
        let id = group.identity();
        let mut centre = Scalar::from_int(1);
        let mut coeffs = Vec::with_capacity(generators.len() + 1);
        for s in generators {
            if *s == id {
                centre = &centre - &weight;
            } else {
                coeffs.push((s.clone(), Matrix::scalar(dim, -&weight)));
            }
        }
        coeffs.push((id, Matrix::scalar(dim, centre)));
        Self::new(group, dim, coeffs)
    }

    /// `τ(x)(g) = x(g·g0) − x(g)`.
    pub fn shift_difference(group: &GroupSpec, g0: &GroupElement, dim: usize) -> Result<Self> {
        group.check(g0)?;
        if group.is_identity(g0) {
            return Err(Error::IdentityShift);
        }
        Self::new(
            group,
            dim,
            [
                (group.identity(), Matrix::scalar(dim, Scalar::from_int(-1))),
                (g0.clone(), Matrix::identity(dim)),
            ],
        )
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn memory_set(&self) -> Vec<GroupElement> {
        self.coefficients.keys().cloned().collect()
    }

    pub fn coefficient(&self, m: &GroupElement) -> Option<&Matrix> {
        self.coefficients.get(m)
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (&GroupElement, &Matrix)> {
        self.coefficients.iter()
    }

    /// `Σ_m A_m`, the action on constant configurations.
    pub fn total_coefficient(&self) -> Matrix {
        self.coefficients
            .values()
            .fold(Matrix::zeros(self.dim, self.dim), |acc, a| {
                acc.add(a).expect("coefficient shapes checked")
            })
    }

    /// `g0` when this is exactly the shift-difference automaton `{1 ↦ −I, g0 ↦ I}`.
    pub fn shift_generator(&self) -> Option<GroupElement> {
        if self.coefficients.len() != 2 {
            return None;
        }
        let id = self.group.identity();
        let minus = Matrix::scalar(self.dim, Scalar::from_int(-1));
        let plus = Matrix::identity(self.dim);
        if self.coefficients.get(&id) != Some(&minus) {
            return None;
        }
        self.coefficients
            .iter()
            .find(|(m, a)| **m != id && **a == plus)
            .map(|(m, _)| m.clone())
    }

    fn check_config(&self, x: &Configuration) -> Result<()> {
        if x.group() != &self.group {
            return Err(Error::GroupMismatch {
                left: self.group.to_string(),
                right: x.group().to_string(),
            });
        }
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.dim(),
            });
        }
        Ok(())
    }

    fn check_peer(&self, other: &LinearCA) -> Result<()> {
        if other.group != self.group {
            return Err(Error::GroupMismatch {
                left: self.group.to_string(),
                right: other.group.to_string(),
            });
        }
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    pub(crate) fn value_at(&self, x: &Configuration, g: &GroupElement) -> Vector {
        let mut acc = Vector::zeros(self.dim);
        for (m, a) in &self.coefficients {
            let v = x.value_at(&self.group.op(g, m));
            if !v.is_zero() {
                acc.add_assign(&a.mul_vec(&v).expect("dimension checked"));
            }
        }
        acc
    }

    /// `τ(x)(g)`.
    pub fn apply_at(&self, x: &Configuration, g: &GroupElement) -> Result<Vector> {
        self.check_config(x)?;
        self.group.check(g)?;
        Ok(self.value_at(x, g))
    }

    /// Points where `τ(x)` may deviate from its base: `supp(x)·M⁻¹`.
    pub fn image_support_bound(&self, x: &Configuration) -> BTreeSet<GroupElement> {
        let inverses: Vec<GroupElement> = self.coefficients.keys().map(|m| self.group.inv(m)).collect();
        x.deviations()
            .flat_map(|(k, _)| inverses.iter().map(move |mi| self.group.op(k, mi)))
            .collect()
    }

    /// `τ(x)`, computed exactly.
    pub fn apply(&self, x: &Configuration) -> Result<Configuration> {
        self.check_config(x)?;
        let base = self.total_coefficient().mul_vec(x.base())?;
        let mut out = Configuration::constant(&self.group, base.clone())?;
        for g in self.image_support_bound(x) {
            let d = self.value_at(x, &g).sub(&base);
            if !d.is_zero() {
                out.add_at(&g, &d)?;
            }
        }
        Ok(out)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearCA) -> Result<LinearCA> {
        self.check_peer(inner)?;
        let mut out: BTreeMap<GroupElement, Matrix> = BTreeMap::new();
        for (m, a) in &self.coefficients {
            for (m2, b) in &inner.coefficients {
                let k = self.group.op(m, m2);
                let ab = a.mul(b)?;
                let entry = out.entry(k).or_insert_with(|| Matrix::zeros(self.dim, self.dim));
                *entry = entry.add(&ab)?;
            }
        }
        Ok(LinearCA {
            group: self.group.clone(),
            dim: self.dim,
            coefficients: out,
        })
    }

    /// `c·τ`.
    pub fn scale(&self, c: &Scalar) -> LinearCA {
        LinearCA {
            group: self.group.clone(),
            dim: self.dim,
            coefficients: self.coefficients.iter().map(|(m, a)| (m.clone(), a.scale(c))).collect(),
        }
    }

    /// The product map `τ^k` on `(V^k)^G`, acting as `τ` on each of the `k`
    /// coordinate blocks. Coefficients become block diagonal.
    pub fn direct_power(&self, k: usize) -> Result<LinearCA> {
        if k == 0 {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        let d = self.dim;
        let coefficients = self
            .coefficients
            .iter()
            .map(|(m, a)| {
                let mut big = Matrix::zeros(d * k, d * k);
                for b in 0..k {
                    for r in 0..d {
                        for c in 0..d {
                            big[(b * d + r, b * d + c)] = a[(r, c)].clone();
                        }
                    }
                }
                (m.clone(), big)
            })
            .collect();
        Ok(LinearCA {
            group: self.group.clone(),
            dim: d * k,
            coefficients,
        })
    }

    /// Drops zero coefficients; the global map is unchanged.
    pub fn minimize_memory(&self) -> LinearCA {
        LinearCA {
            group: self.group.clone(),
            dim: self.dim,
            coefficients: self
                .coefficients
                .iter()
                .filter(|(_, a)| !a.is_zero())
                .map(|(m, a)| (m.clone(), a.clone()))
                .collect(),
        }
    }

    /// The restriction `τ_H` to a finite subgroup containing the memory set,
    /// as an automaton over `H` itself with the same local rule.
    pub fn restrict(&self, h: &Subgroup) -> Result<LinearCA> {
        if h.ambient() != &self.group {
            return Err(Error::GroupMismatch {
                left: self.group.to_string(),
                right: h.ambient().to_string(),
            });
        }
        if let Some(key) = self.coefficients.keys().find(|m| !h.contains(m)) {
            return Err(Error::MemoryOutsideSubgroup { key: key.to_string() });
        }
        if h.is_whole_group() {
            return Ok(self.clone());
        }
        Ok(LinearCA {
            group: h.clone().into_spec(),
            dim: self.dim,
            coefficients: self.coefficients.clone(),
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "group": self.group.to_json(),
            "dim": self.dim,
            "coefficients": self.coefficients.iter().map(|(m, a)| json!({
                "at": self.group.element_to_json(m),
                "matrix": a.to_json(),
            })).collect::<Vec<_>>(),
        })
    }

    /// Decodes `{"group", "dim", "coefficients"}`; `"group"` may be omitted
    /// when `default_group` is given.
    pub fn from_json(v: &Value, default_group: Option<&GroupSpec>) -> Result<Self> {
        let group = match (v.get("group"), default_group) {
            (Some(g), _) => GroupSpec::from_json(g)?,
            (None, Some(g)) => g.clone(),
            (None, None) => return Err(Error::Parse("automaton needs a \"group\"".into())),
        };
        if let Some(expected) = default_group {
            if &group != expected {
                return Err(Error::GroupMismatch {
                    left: expected.to_string(),
                    right: group.to_string(),
                });
            }
        }
        let dim = v
            .get("dim")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("automaton needs a positive \"dim\"".into()))? as usize;
        let list = v
            .get("coefficients")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("automaton needs a \"coefficients\" array".into()))?;
        let coeffs = list
            .iter()
            .map(|item| {
                let at = item
                    .get("at")
                    .ok_or_else(|| Error::Parse("coefficient needs \"at\"".into()))?;
                let m = item
                    .get("matrix")
                    .ok_or_else(|| Error::Parse("coefficient needs \"matrix\"".into()))?;
                Ok((group.element_from_json(at)?, Matrix::from_json(m, Some(dim))?))
            })
            .collect::<Result<Vec<_>>>()?;
        LinearCA::new(&group, dim, coeffs)
    }
}
