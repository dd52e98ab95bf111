use std::collections::{BTreeSet, HashSet, VecDeque};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::groups::{GroupElement, GroupSpec, MAX_ENUMERATION};

/// How a window was generated, kept for reproducibility.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WindowRecipe {
    Explicit,
    /// Ball in the word metric of the family's standard generators
    /// (ℓ∞ balls for free abelian groups, max over product factors).
    Ball { radius: u32 },
    /// `[lo..=hi]` in ℤ.
    Interval { lo: i64, hi: i64 },
    /// Ball in the word metric of an explicit generating set.
    WordBall { radius: u32, generators: Vec<GroupElement> },
}

/// A finite, duplicate-free, canonically ordered set of group elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    group: GroupSpec,
    elements: Vec<GroupElement>,
    recipe: WindowRecipe,
}

impl Window {
    pub fn new(group: &GroupSpec, elements: impl IntoIterator<Item = GroupElement>) -> Result<Self> {
        let set: BTreeSet<GroupElement> = elements.into_iter().collect();
        for g in &set {
            group.check(g)?;
        }
        Ok(Window {
            group: group.clone(),
            elements: set.into_iter().collect(),
            recipe: WindowRecipe::Explicit,
        })
    }

    /// `[lo..=hi]` in `FreeAbelian(1)`.
    pub fn interval(group: &GroupSpec, lo: i64, hi: i64) -> Result<Self> {
        if *group != GroupSpec::FreeAbelian(1) {
            return Err(Error::InvalidSpec(format!("intervals need free_abelian(1), not {group}")));
        }
        let mut w = Window::new(group, (lo..=hi).map(|n| GroupElement::IntVector(vec![n])))?;
        w.recipe = WindowRecipe::Interval { lo, hi };
        Ok(w)
    }

    /// The radius-`r` ball around the identity.
    pub fn ball(group: &GroupSpec, radius: u32) -> Result<Self> {
        let elements = ball_elements(group, radius)?;
        Ok(Window {
            group: group.clone(),
            elements,
            recipe: WindowRecipe::Ball { radius },
        })
    }

    /// Radius-`r` ball for the word metric of `generators` (inverses included).
    pub fn word_ball(group: &GroupSpec, generators: &[GroupElement], radius: u32) -> Result<Self> {
        for g in generators {
            group.check(g)?;
        }
        let mut w = Window::new(group, bfs_ball(group, generators, radius)?)?;
        w.recipe = WindowRecipe::WordBall {
            radius,
            generators: generators.to_vec(),
        };
        Ok(w)
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn recipe(&self) -> &WindowRecipe {
        &self.recipe
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

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.elements.binary_search(g).ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, GroupElement> {
        self.elements.iter()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.elements.iter().map(|g| self.group.element_to_json(g)).collect())
    }

    /// Recipe plus elements, for reports.
    pub fn describe_json(&self) -> Value {
        let recipe = match &self.recipe {
            WindowRecipe::Explicit => json!({"kind": "explicit"}),
            WindowRecipe::Ball { radius } => json!({"kind": "ball", "radius": radius}),
            WindowRecipe::Interval { lo, hi } => json!({"kind": "interval", "lo": lo, "hi": hi}),
            WindowRecipe::WordBall { radius, generators } => json!({
                "kind": "word_ball",
                "radius": radius,
                "generators": generators.iter().map(|g| self.group.element_to_json(g)).collect::<Vec<_>>(),
            }),
        };
        json!({"recipe": recipe, "elements": self.to_json()})
    }
}

impl AsRef<[GroupElement]> for Window {
    fn as_ref(&self) -> &[GroupElement] {
        &self.elements
    }
}

fn ball_elements(group: &GroupSpec, radius: u32) -> Result<Vec<GroupElement>> {
    match group {
        GroupSpec::FreeAbelian(d) => {
            let r = radius as i64;
            let side = (2 * radius as u128 + 1).checked_pow(*d as u32);
            if side.map_or(true, |n| n > MAX_ENUMERATION as u128) {
                return Err(Error::ResourceLimit {
                    group: group.to_string(),
                    limit: MAX_ENUMERATION,
                });
            }
            let mut out = vec![Vec::new()];
            for _ in 0..*d {
                out = out
                    .into_iter()
                    .flat_map(|p: Vec<i64>| {
                        (-r..=r).map(move |x| {
                            let mut q = p.clone();
                            q.push(x);
                            q
                        })
                    })
                    .collect();
            }
            Ok(out.into_iter().map(GroupElement::IntVector).collect())
        }
        GroupSpec::Product(fs) => {
            let parts = fs
                .iter()
                .map(|f| ball_elements(f, radius))
                .collect::<Result<Vec<_>>>()?;
            let total = parts.iter().try_fold(1u128, |acc, p| acc.checked_mul(p.len() as u128));
            if total.map_or(true, |n| n > MAX_ENUMERATION as u128) {
                return Err(Error::ResourceLimit {
                    group: group.to_string(),
                    limit: MAX_ENUMERATION,
                });
            }
            let mut out = vec![Vec::new()];
            for part in &parts {
                out = out
                    .into_iter()
                    .flat_map(|p: Vec<GroupElement>| {
                        part.iter().map(move |x| {
                            let mut q = p.clone();
                            q.push(x.clone());
                            q
                        })
                    })
                    .collect();
            }
            let mut els: Vec<_> = out.into_iter().map(GroupElement::Tuple).collect();
            els.sort();
            Ok(els)
        }
        _ => {
            let mut els: Vec<_> = bfs_ball(group, &group.standard_generators(), radius)?
                .into_iter()
                .collect();
            els.sort();
            Ok(els)
        }
    }
}

fn bfs_ball(group: &GroupSpec, generators: &[GroupElement], radius: u32) -> Result<HashSet<GroupElement>> {
    let mut steps = Vec::new();
    for g in generators {
        for s in [g.clone(), group.inv(g)] {
            if !steps.contains(&s) {
                steps.push(s);
            }
        }
    }
    let id = group.identity();
    let mut seen = HashSet::from([id.clone()]);
    let mut frontier = VecDeque::from([(id, 0u32)]);
    while let Some((x, dist)) = frontier.pop_front() {
        if dist == radius {
            continue;
        }
        for s in &steps {
            let y = group.op(&x, s);
            if seen.insert(y.clone()) {
                if seen.len() as u64 > MAX_ENUMERATION {
                    return Err(Error::ResourceLimit {
                        group: group.to_string(),
                        limit: MAX_ENUMERATION,
                    });
                }
                frontier.push_back((y, dist + 1));
            }
        }
    }
    Ok(seen)
}
