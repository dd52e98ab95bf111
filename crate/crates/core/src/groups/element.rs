use std::cmp::Ordering;
use std::fmt;

/// An element of one of the supported group families.
///
/// Elements are always stored in canonical form, so derived equality and
/// hashing coincide with equality in the group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupElement {
    /// Element of ℤ/nℤ, `0 <= value < n`.
    Residue(u64),
    /// One-line notation: position `i` holds the image of `i`.
    Permutation(Vec<usize>),
    /// Element of ℤ^d.
    IntVector(Vec<i64>),
    /// Freely reduced word; `j` is the generator `a_j`, `-j` its inverse.
    ReducedWord(Vec<i32>),
    Tuple(Vec<GroupElement>),
}

impl GroupElement {
    fn family_rank(&self) -> u8 {
        match self {
            GroupElement::Residue(_) => 0,
            GroupElement::Permutation(_) => 1,
            GroupElement::IntVector(_) => 2,
            GroupElement::ReducedWord(_) => 3,
            GroupElement::Tuple(_) => 4,
        }
    }
}

/// Canonical element order: residues by value, permutations and integer
/// vectors lexicographically, reduced words by length then lexicographically,
/// tuples lexicographically by component.
impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        use GroupElement::*;
        match (self, other) {
            (Residue(a), Residue(b)) => a.cmp(b),
            (Permutation(a), Permutation(b)) => a.cmp(b),
            (IntVector(a), IntVector(b)) => a.cmp(b),
            (ReducedWord(a), ReducedWord(b)) => a.len().cmp(&b.len()).then_with(|| a.cmp(b)),
            (Tuple(a), Tuple(b)) => a.cmp(b),
            _ => self.family_rank().cmp(&other.family_rank()),
        }
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    f.write_str("[")?;
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str("]")
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Residue(v) => write!(f, "{v}"),
            GroupElement::Permutation(p) => write_list(f, p),
            GroupElement::IntVector(v) => write_list(f, v),
            GroupElement::ReducedWord(w) if w.is_empty() => f.write_str("ε"),
            GroupElement::ReducedWord(w) => write_list(f, w),
            GroupElement::Tuple(t) => {
                f.write_str("(")?;
                for (i, x) in t.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")
            }
        }
    }
}
