//! Fraction-free (Bareiss) row echelon reduction.
//!
//! Each row is first scaled by the lcm of its denominators, which leaves the
//! row space unchanged and moves the problem into an integral domain: ℤ for
//! rational input, the Gaussian integers ℤ[i] otherwise. Elimination then runs
//! with exact divisions by the previous pivot, so intermediate entries stay
//! minors of the scaled input.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Matrix, Scalar};

pub(crate) trait Domain: Clone {
    fn nil() -> Self;
    fn unit() -> Self;
    fn is_nil(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    /// `self / other` where the division is known to be exact.
    fn exact_div(&self, other: &Self) -> Self;
    fn to_scalar(&self) -> Scalar;
}

impl Domain for BigInt {
    fn nil() -> Self {
        Zero::zero()
    }

    fn unit() -> Self {
        One::one()
    }

    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn exact_div(&self, other: &Self) -> Self {
        if other.is_one() {
            return self.clone();
        }
        let (q, r) = self.div_rem(other);
        debug_assert!(r.is_zero(), "inexact Bareiss division");
        q
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::from_bigint(self.clone())
    }
}

/// Gaussian integer `re + im·i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl Domain for GaussInt {
    fn nil() -> Self {
        GaussInt {
            re: BigInt::zero(),
            im: BigInt::zero(),
        }
    }

    fn unit() -> Self {
        GaussInt {
            re: BigInt::one(),
            im: BigInt::zero(),
        }
    }

    fn is_nil(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn mul(&self, o: &Self) -> Self {
        GaussInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn sub(&self, o: &Self) -> Self {
        GaussInt {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    fn exact_div(&self, o: &Self) -> Self {
        // a / b = a·conj(b) / |b|²
        let norm = &o.re * &o.re + &o.im * &o.im;
        let conj = GaussInt {
            re: o.re.clone(),
            im: -&o.im,
        };
        let p = self.mul(&conj);
        let (re, r1) = p.re.div_rem(&norm);
        let (im, r2) = p.im.div_rem(&norm);
        debug_assert!(r1.is_zero() && r2.is_zero(), "inexact Gaussian division");
        GaussInt { re, im }
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::complex(
            BigRational::from_integer(self.re.clone()),
            BigRational::from_integer(self.im.clone()),
        )
    }
}

/// Row echelon form with the pivot column of each nonzero row.
#[derive(Debug, Clone)]
pub(crate) struct Echelon {
    /// The first `pivots.len()` rows are the nonzero rows of the echelon form.
    pub rows: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
}

pub(crate) fn echelon(m: &Matrix) -> Echelon {
    if m.entries().iter().all(Scalar::is_real) {
        let rows = integer_rows(m, |s, scale| {
            let q = s.re() * BigRational::from_integer(scale.clone());
            debug_assert!(q.is_integer());
            q.to_integer()
        });
        run(rows, m.cols())
    } else {
        let rows = integer_rows(m, |s, scale| {
            let k = BigRational::from_integer(scale.clone());
            GaussInt {
                re: (s.re() * &k).to_integer(),
                im: (s.im() * &k).to_integer(),
            }
        });
        run(rows, m.cols())
    }
}

fn integer_rows<D>(m: &Matrix, convert: impl Fn(&Scalar, &BigInt) -> D) -> Vec<Vec<D>> {
    (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let scale = row
                .iter()
                .fold(BigInt::one(), |acc, s| acc.lcm(&s.denominator_lcm()));
            row.iter().map(|s| convert(s, &scale)).collect()
        })
        .collect()
}

fn run<D: Domain>(mut a: Vec<Vec<D>>, cols: usize) -> Echelon {
    let n_rows = a.len();
    let mut pivots = Vec::new();
    let mut prev = D::unit();
    let mut r = 0;
    for c in 0..cols {
        if r == n_rows {
            break;
        }
        let Some(p) = (r..n_rows).find(|&i| !a[i][c].is_nil()) else {
            continue;
        };
        a.swap(r, p);
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[c];
        for row in bottom.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..cols {
                let t = pivot.mul(&row[j]).sub(&lead.mul(&pivot_row[j]));
                row[j] = t.exact_div(&prev);
            }
            row[c] = D::nil();
        }
        prev = pivot.clone();
        pivots.push(c);
        r += 1;
    }
    Echelon {
        rows: a
            .into_iter()
            .map(|row| row.iter().map(D::to_scalar).collect())
            .collect(),
        pivots,
    }
}
