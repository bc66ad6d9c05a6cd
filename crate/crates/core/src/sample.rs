//! Seeded sampling of small exact scalars and structured matrices.
//!
//! Entries are drawn with numerators uniform in `[-3, 3]` and denominators
//! in `{1, 2}`, which keeps big-integer growth modest through long formula
//! chains.

use num_bigint::BigInt;
use rand::Rng;

use crate::matrix::Matrix;
use crate::scalar::{DualGaussian, GaussianRational, Rational, Scalar};

type G = GaussianRational;

pub fn small_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let numer = rng.random_range(-3i64..=3);
    let denom = if rng.random_bool(0.5) { 1 } else { 2 };
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub trait ScalarSampler: Scalar {
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self;
}

impl ScalarSampler for GaussianRational {
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let re = small_rational(rng);
        let im = if rng.random_bool(0.5) {
            small_rational(rng)
        } else {
            Rational::default()
        };
        G::new(re, im)
    }
}

impl ScalarSampler for DualGaussian {
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        DualGaussian::new(G::sample(rng), G::sample(rng))
    }
}

pub fn random_matrix<S: ScalarSampler, R: Rng + ?Sized>(
    rng: &mut R,
    rows: usize,
    cols: usize,
) -> Matrix<S> {
    Matrix::from_fn(rows, cols, |_, _| S::sample(rng))
}

/// Rejection-samples an invertible `n × n` field matrix.
pub fn random_invertible<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Matrix<G> {
    loop {
        let m: Matrix<G> = random_matrix(rng, n, n);
        if m.rank() == n {
            return m;
        }
    }
}

/// `F·G` with `F` of size `rows × rank`; the result has rank at most `rank`.
pub fn random_low_rank<R: Rng + ?Sized>(
    rng: &mut R,
    rows: usize,
    cols: usize,
    rank: usize,
) -> Matrix<G> {
    if rank == 0 {
        return Matrix::zeros(rows, cols);
    }
    &random_matrix::<G, _>(rng, rows, rank) * &random_matrix(rng, rank, cols)
}

/// `P·diag(C, 0)·P⁻¹` with `C` an invertible `rank × rank` block: a
/// matrix of index at most one, hence group (and core) invertible.
pub fn random_index_one<R: Rng + ?Sized>(rng: &mut R, n: usize, rank: usize) -> Matrix<G> {
    let p = random_invertible(rng, n);
    let p_inv = p.invert().expect("sampled invertible");
    let mut d = Matrix::zeros(n, n);
    if rank > 0 {
        let c = random_invertible(rng, rank);
        for i in 0..rank {
            for j in 0..rank {
                d.set(i, j, c.get(i, j).clone());
            }
        }
    }
    &(&p * &d) * &p_inv
}

/// A matrix whose entries all lie in the radical `(ε)`.
pub fn random_radical<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> Matrix<DualGaussian> {
    Matrix::<DualGaussian>::eps(&random_matrix(rng, rows, cols))
}

/// Cayley transform `(I − S)(I + S)⁻¹` of a random skew-Hermitian `S`: a
/// unitary matrix with Gaussian-rational entries.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Matrix<G> {
    let k: Matrix<G> = random_matrix(rng, n, n);
    let s = &k - &k.adjoint();
    let inv = s.one_plus().invert().expect("I + S is invertible for skew-Hermitian S");
    &s.one_minus() * &inv
}
