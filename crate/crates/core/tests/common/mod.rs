//! Independent reference implementations used by the integration and
//! acceptance tests. Nothing here calls into the library's elimination code.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use malachite_base::num::basic::traits::Zero;
use malachite_nz::integer::Integer;
use malachite_q::Rational;
use rand::Rng;

use lincell::automaton::LinearCA;
use lincell::config_space::Configuration;
use lincell::exact_arith::{Matrix, Scalar, Vector};
use lincell::groups::{GroupElement, GroupSpec};

/// Gaussian rational `re + im·i` over malachite's rationals, a big-number
/// implementation unrelated to the one the library uses.
#[derive(Clone, Debug, PartialEq)]
struct Cq {
    re: Rational,
    im: Rational,
}

fn to_malachite(q: &BigRational) -> Rational {
    let n = Integer::from_str(&q.numer().to_string()).unwrap();
    let d = Integer::from_str(&q.denom().to_string()).unwrap();
    Rational::from_integers(n, d)
}

impl Cq {
    fn from_scalar(s: &Scalar) -> Cq {
        Cq { re: to_malachite(&s.re()), im: to_malachite(&s.im()) }
    }

    fn is_zero(&self) -> bool {
        self.re == Rational::ZERO && self.im == Rational::ZERO
    }

    fn sub(&self, o: &Cq) -> Cq {
        Cq { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    fn mul(&self, o: &Cq) -> Cq {
        Cq {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn div(&self, o: &Cq) -> Cq {
        let n = &o.re * &o.re + &o.im * &o.im;
        let conj = Cq { re: &o.re / &n, im: -(&o.im / &n) };
        self.mul(&conj)
    }
}

/// Textbook elimination over fractions: take the first nonzero entry of the
/// column as pivot, subtract multiples of the pivot row from the rows below.
fn eliminate<T: Clone>(
    mut a: Vec<Vec<T>>,
    cols: usize,
    is_zero: impl Fn(&T) -> bool,
    factor: impl Fn(&T, &T) -> T,
    sub_mul: impl Fn(&T, &T, &T) -> T,
) -> usize {
    let rows = a.len();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !is_zero(&a[i][c])) else {
            continue;
        };
        a.swap(r, p);
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in bottom.iter_mut() {
            if is_zero(&row[c]) {
                continue;
            }
            let f = factor(&row[c], &pivot_row[c]);
            for j in c..cols {
                row[j] = sub_mul(&row[j], &f, &pivot_row[j]);
            }
        }
        r += 1;
    }
    r
}

/// Rank by naive fraction Gaussian elimination.
pub fn naive_rank(m: &Matrix) -> usize {
    let cols = m.cols();
    if m.entries().iter().all(Scalar::is_real) {
        let a: Vec<Vec<Rational>> = (0..m.rows())
            .map(|i| m.row(i).iter().map(|s| to_malachite(&s.re())).collect())
            .collect();
        eliminate(a, cols, |x| *x == Rational::ZERO, |x, p| x / p, |x, f, p| x - f * p)
    } else {
        let a: Vec<Vec<Cq>> = (0..m.rows())
            .map(|i| m.row(i).iter().map(Cq::from_scalar).collect())
            .collect();
        eliminate(a, cols, Cq::is_zero, |x, p| x.div(p), |x, f, p| x.sub(&f.mul(p)))
    }
}

/// `p/q` with `|p| <= bound`, `1 <= q <= bound`.
pub fn big_rational<R: Rng>(rng: &mut R, bound: i64) -> Scalar {
    Scalar::rational(BigRational::new(
        BigInt::from(rng.gen_range(-bound..=bound)),
        BigInt::from(rng.gen_range(1..=bound)),
    ))
}

/// How a random test matrix is built. Every entry stays within the bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    /// Independent `p/q` entries.
    Dense,
    /// Dense rows, then rows replaced by copies (up to sign) of others or by zero.
    RepeatedRows,
    /// As `RepeatedRows`, transposed.
    RepeatedCols,
    /// Integer product `B·C` of inner dimension `k < min(rows, cols)`, with
    /// `|B| <= 30`, `|C| <= 1000`, so entries stay below `10^6`.
    LowRankProduct,
}

fn repeated_rows<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> Vec<Vec<Scalar>> {
    let mut out: Vec<Vec<Scalar>> = (0..rows)
        .map(|_| (0..cols).map(|_| big_rational(rng, bound)).collect())
        .collect();
    let copies = rng.gen_range(1..=rows.max(1));
    for _ in 0..copies {
        let i = rng.gen_range(0..rows);
        let j = rng.gen_range(0..rows);
        out[i] = match rng.gen_range(0..3) {
            0 => vec![Scalar::from_int(0); cols],
            1 => out[j].iter().map(|x| -x).collect(),
            _ => out[j].clone(),
        };
    }
    out
}

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64, shape: Shape) -> Matrix {
    let entries: Vec<Vec<Scalar>> = match shape {
        Shape::Dense => (0..rows)
            .map(|_| (0..cols).map(|_| big_rational(rng, bound)).collect())
            .collect(),
        Shape::RepeatedRows => repeated_rows(rng, rows, cols, bound),
        Shape::RepeatedCols => {
            let t = repeated_rows(rng, cols, rows, bound);
            (0..rows).map(|i| (0..cols).map(|j| t[j][i].clone()).collect()).collect()
        }
        Shape::LowRankProduct => {
            let k = rng.gen_range(0..rows.min(cols).max(1));
            let b: Vec<Vec<i64>> = (0..rows).map(|_| (0..k).map(|_| rng.gen_range(-30..=30)).collect()).collect();
            let c: Vec<Vec<i64>> = (0..k).map(|_| (0..cols).map(|_| rng.gen_range(-1000..=1000)).collect()).collect();
            (0..rows)
                .map(|i| {
                    (0..cols)
                        .map(|j| Scalar::from_int((0..k).map(|l| b[i][l] * c[l][j]).sum()))
                        .collect()
                })
                .collect()
        }
    };
    Matrix::from_rows(entries).unwrap_or_else(|_| Matrix::zeros(rows, cols))
}

/// `τ(x)(g) = Σ_m A_m x(g·m)` evaluated by brute force over an explicit
/// element list, using only the public group product.
pub fn apply_dense(
    t: &LinearCA,
    values: &BTreeMap<GroupElement, Vector>,
    g_all: &[GroupElement],
) -> BTreeMap<GroupElement, Vector> {
    let g = t.group();
    g_all
        .iter()
        .map(|h| {
            let mut acc = Vector::zeros(t.dim());
            for (m, a) in t.coefficients() {
                let at = g.multiply(h, m).unwrap();
                acc.add_assign(&a.mul_vec(&values[&at]).unwrap());
            }
            (h.clone(), acc)
        })
        .collect()
}

/// The preimage formula with the same sign on both branches:
/// `x(r·g0^n) = Σ_{i=0}^{n-1} y(r·g0^i)` for `n > 0` and
/// `x(r·g0^n) = Σ_{i=0}^{-n-1} y(r·g0^{n+i})` for `n < 0`.
pub fn literal_telescope_z(y: &BTreeMap<i64, Scalar>, lo: i64, hi: i64) -> BTreeMap<i64, Scalar> {
    let at = |i: i64| y.get(&i).cloned().unwrap_or_else(|| Scalar::from_int(0));
    (lo..=hi)
        .map(|n| {
            let v = if n > 0 {
                (0..n).map(at).sum()
            } else if n < 0 {
                (0..-n).map(|i| at(n + i)).sum()
            } else {
                Scalar::from_int(0)
            };
            (n, v)
        })
        .collect()
}

pub fn z(n: i64) -> GroupElement {
    GroupElement::IntVector(vec![n])
}

pub fn constant(group: &GroupSpec, d: usize, c: &Scalar) -> Configuration {
    Configuration::constant(group, Vector(vec![c.clone(); d])).unwrap()
}
