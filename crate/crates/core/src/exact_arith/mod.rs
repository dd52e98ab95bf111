//! Exact field arithmetic over ℚ and ℚ(i), and the dense linear algebra the
//! decision procedures are built on: rank, solve and null-space bases.

mod bareiss;
mod matrix;
mod scalar;

pub use matrix::{Matrix, Vector};
pub use scalar::Scalar;

use num_traits::Zero;

use crate::error::{Error, Result};
use bareiss::{echelon, Echelon};

/// Exact rank over the field.
pub fn rank(m: &Matrix) -> usize {
    echelon(m).pivots.len()
}

/// Some `x` with `m·x = b`, or `None` when the system is inconsistent.
///
/// Free variables of an underdetermined system are set to zero, where free
/// means "not a pivot column" in left-to-right elimination order.
pub fn solve(m: &Matrix, b: &Vector) -> Result<Option<Vector>> {
    if b.len() != m.rows() {
        return Err(Error::DimensionMismatch {
            expected: m.rows(),
            found: b.len(),
        });
    }
    let ech = echelon(&m.augment(b)?);
    let n = m.cols();
    if ech.pivots.last() == Some(&n) {
        return Ok(None);
    }
    let rhs: Vec<Scalar> = ech.rows.iter().map(|row| row[n].clone()).collect();
    Ok(Some(back_substitute(&ech, n, &rhs, &vec![Scalar::zero(); n])))
}

/// A basis of the null space; empty iff `rank(m) == m.cols()`.
///
/// The basis vector for free column `f` has a 1 at `f` and 0 at every other
/// free column.
pub fn kernel_basis(m: &Matrix) -> Vec<Vector> {
    let n = m.cols();
    let ech = echelon(m);
    let zero_rhs = vec![Scalar::zero(); ech.pivots.len()];
    free_columns(&ech.pivots, n)
        .map(|f| {
            let mut seed = vec![Scalar::zero(); n];
            seed[f] = Scalar::from_int(1);
            back_substitute(&ech, n, &zero_rhs, &seed)
        })
        .collect()
}

fn free_columns(pivots: &[usize], n: usize) -> impl Iterator<Item = usize> + '_ {
    (0..n).filter(move |c| !pivots.contains(c))
}

/// Solves the echelon system for the pivot variables with the free variables
/// fixed to `seed` (pivot positions of `seed` are ignored).
fn back_substitute(ech: &Echelon, n: usize, rhs: &[Scalar], seed: &[Scalar]) -> Vector {
    let mut x = seed.to_vec();
    for (i, &pc) in ech.pivots.iter().enumerate().rev() {
        let row = &ech.rows[i];
        let mut acc = rhs[i].clone();
        for j in pc + 1..n {
            if !row[j].is_zero() && !x[j].is_zero() {
                acc = &acc - &(&row[j] * &x[j]);
            }
        }
        x[pc] = &acc / &row[pc];
    }
    Vector(x)
}
