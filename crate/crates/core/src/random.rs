//! Seeded generators for random scalars, matrices, configurations and
//! automata. Everything is driven by an explicit 64-bit seed.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::automaton::LinearCA;
use crate::config_space::Configuration;
use crate::error::Result;
use crate::exact_arith::{Matrix, Scalar, Vector};
use crate::groups::{GroupElement, GroupSpec};

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| <= bound` and `1 <= q <= bound`.
pub fn rational<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Scalar {
    let bound = bound.max(1);
    Scalar::ratio(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

/// Like [`rational`], but exactly zero with probability `zero_prob`.
pub fn sparse_rational<R: Rng + ?Sized>(rng: &mut R, bound: i64, zero_prob: f64) -> Scalar {
    if rng.gen_bool(zero_prob) {
        Scalar::from_int(0)
    } else {
        rational(rng, bound)
    }
}

pub fn vector<R: Rng + ?Sized>(rng: &mut R, len: usize, bound: i64, zero_prob: f64) -> Vector {
    (0..len).map(|_| sparse_rational(rng, bound, zero_prob)).collect()
}

pub fn nonzero_vector<R: Rng + ?Sized>(rng: &mut R, len: usize, bound: i64) -> Vector {
    loop {
        let v = vector(rng, len, bound, 0.3);
        if !v.is_zero() {
            return v;
        }
    }
}

pub fn matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize, bound: i64, zero_prob: f64) -> Matrix {
    Matrix::new(
        rows,
        cols,
        (0..rows * cols).map(|_| sparse_rational(rng, bound, zero_prob)).collect(),
    )
    .expect("shape is consistent")
}

/// A finitely supported configuration with random values on `points`.
pub fn configuration_on<R: Rng + ?Sized>(
    rng: &mut R,
    group: &GroupSpec,
    dim: usize,
    points: &[GroupElement],
    bound: i64,
) -> Result<Configuration> {
    Configuration::finitely_supported(
        group,
        dim,
        points.iter().map(|g| (g.clone(), vector(rng, dim, bound, 0.2))),
    )
}

/// A linear automaton with random `dim×dim` coefficients on `memory`.
pub fn linear_ca<R: Rng + ?Sized>(
    rng: &mut R,
    group: &GroupSpec,
    dim: usize,
    memory: &[GroupElement],
    bound: i64,
) -> Result<LinearCA> {
    LinearCA::new(
        group,
        dim,
        memory.iter().map(|m| (m.clone(), matrix(rng, dim, dim, bound, 0.4))),
    )
}

/// `count` distinct elements drawn from `pool` (all of it when shorter).
pub fn subset<R: Rng + ?Sized>(rng: &mut R, pool: &[GroupElement], count: usize) -> Vec<GroupElement> {
    rand::seq::index::sample(rng, pool.len(), count.min(pool.len()))
        .into_iter()
        .map(|i| pool[i].clone())
        .collect()
}
