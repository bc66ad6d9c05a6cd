//! Dense exact matrices over a [`Scalar`] ring.

mod factor;
mod solve;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

pub use factor::FullRankFactorization;
pub use solve::{inconsistency_certificate, ExactSolve, Side};

use crate::error::{Error, Result};
use crate::scalar::{DualGaussian, GaussianRational, Scalar};

/// Row-major `rows × cols` matrix. Equality is entrywise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn new(rows: usize, cols: usize, data: Vec<S>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::dims(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds a matrix from equally long rows.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::dims("ragged rows"));
        }
        Self::new(n, m, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from integer rows; panics on ragged input.
    pub fn from_ints(rows: &[&[i64]]) -> Self
    where
        S: From<i64>,
    {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| S::from(x)).collect())
                .collect(),
        )
        .expect("ragged integer rows")
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| S::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    /// The matrix unit `E_ij` (zero-based indices).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        Self::from_fn(n, n, |r, c| if (r, c) == (i, j) { S::one() } else { S::zero() })
    }

    pub fn diag(entries: Vec<S>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (k, e) in entries.into_iter().enumerate() {
            m.data[k * n + k] = e;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: S) {
        self.data[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn map<T: Scalar>(&self, f: impl FnMut(&S) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.adjoint()
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|x| s.clone() * x)
    }

    /// Checked product.
    pub fn mat_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::dims(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            let row = self.row(i);
            for j in 0..rhs.cols {
                let mut acc = S::zero();
                for (k, a) in row.iter().enumerate() {
                    let b = rhs.get(k, j);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc + &(a.clone() * b);
                }
                out.push(acc);
            }
        }
        Ok(Matrix {
            rows: self.rows,
            cols: rhs.cols,
            data: out,
        })
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.zip(rhs, "add", |a, b| a.clone() + b)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.zip(rhs, "subtract", |a, b| a.clone() - b)
    }

    fn zip(&self, rhs: &Self, op: &str, f: impl Fn(&S, &S) -> S) -> Result<Self> {
        if self.shape() != rhs.shape() {
            return Err(Error::dims(format!(
                "cannot {op} {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    /// `I − self` for a square matrix.
    pub fn one_minus(&self) -> Self {
        &Self::identity(self.rows) - self
    }

    /// `I + self` for a square matrix.
    pub fn one_plus(&self) -> Self {
        &Self::identity(self.rows) + self
    }

    /// `self²`
    pub fn square(&self) -> Self {
        self * self
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(self.rows), |acc, _| &acc * self)
    }
}

impl<S: ExactSolve> Matrix<S> {
    /// Two-sided inverse of a square matrix.
    pub fn invert(&self) -> Result<Self> {
        S::invert(self)
    }

    /// Solves `self·X = b` ([`Side::Right`]) or `X·self = b` ([`Side::Left`]).
    pub fn solve(&self, b: &Self, side: Side) -> Result<Self> {
        solve::solve_linear(self, b, side)
    }
}

impl Matrix<DualGaussian> {
    /// Embeds a field matrix with zero `ε` part.
    pub fn lift(m: &Matrix<GaussianRational>) -> Self {
        m.map(|x| DualGaussian::lift(x.clone()))
    }

    /// `ε·m`
    pub fn eps(m: &Matrix<GaussianRational>) -> Self {
        m.map(|x| DualGaussian::eps(x.clone()))
    }

    pub fn const_part(&self) -> Matrix<GaussianRational> {
        self.map(|x| x.const_part().clone())
    }

    pub fn eps_part(&self) -> Matrix<GaussianRational> {
        self.map(|x| x.eps_part().clone())
    }

    /// Every entry lies in the radical `(ε)`.
    pub fn is_radical(&self) -> bool {
        self.data.iter().all(DualGaussian::is_radical)
    }
}

/// Free-standing checked product.
pub fn mat_mul<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Result<Matrix<S>> {
    a.mat_mul(b)
}

/// Free-standing conjugate transpose.
pub fn adjoint<S: Scalar>(a: &Matrix<S>) -> Matrix<S> {
    a.adjoint()
}

// Operator forms panic on shape mismatch. Formula code validates shapes at
// its entry points and then uses these.
impl<'a, S: Scalar> Mul<&'a Matrix<S>> for &'a Matrix<S> {
    type Output = Matrix<S>;
    fn mul(self, rhs: &Matrix<S>) -> Matrix<S> {
        self.mat_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a, S: Scalar> Add<&'a Matrix<S>> for &'a Matrix<S> {
    type Output = Matrix<S>;
    fn add(self, rhs: &Matrix<S>) -> Matrix<S> {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a, S: Scalar> Sub<&'a Matrix<S>> for &'a Matrix<S> {
    type Output = Matrix<S>;
    fn sub(self, rhs: &Matrix<S>) -> Matrix<S> {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<S: Scalar> Mul for Matrix<S> {
    type Output = Matrix<S>;
    fn mul(self, rhs: Matrix<S>) -> Matrix<S> {
        &self * &rhs
    }
}

impl<S: Scalar> Add for Matrix<S> {
    type Output = Matrix<S>;
    fn add(self, rhs: Matrix<S>) -> Matrix<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for Matrix<S> {
    type Output = Matrix<S>;
    fn sub(self, rhs: Matrix<S>) -> Matrix<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Neg for &Matrix<S> {
    type Output = Matrix<S>;
    fn neg(self) -> Matrix<S> {
        self.map(|x| -x.clone())
    }
}

impl<S: Scalar> Neg for Matrix<S> {
    type Output = Matrix<S>;
    fn neg(self) -> Matrix<S> {
        -&self
    }
}

impl<S: fmt::Display> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (k, x) in self.data[i * self.cols..(i + 1) * self.cols].iter().enumerate() {
                if k > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} [", self.rows, self.cols)?;
        for (i, row) in self.data.chunks(self.cols.max(1)).enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{row:?}")?;
        }
        f.write_str("]")
    }
}

/// Parses a matrix from rows of scalar strings; used heavily in tests.
pub fn parse_rows<S: Scalar>(rows: &[&[&str]]) -> Result<Matrix<S>> {
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|s| s.parse::<S>()).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(parsed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::{random_matrix, ScalarSampler};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type M = Matrix<GaussianRational>;
    type D = Matrix<DualGaussian>;

    #[test]
    fn product_examples() {
        let a = M::from_ints(&[&[1, 2], &[3, 4]]);
        assert_eq!(&M::identity(2) * &a, a);
        let p = M::from_ints(&[&[1, 1], &[0, 0]]) * M::from_ints(&[&[1, 0], &[0, 0]]);
        assert_eq!(p, M::from_ints(&[&[1, 0], &[0, 0]]));
        assert!((&M::unit(2, 0, 1) * &M::unit(2, 0, 0)).is_zero());
        assert!(matches!(
            M::zeros(2, 3).mat_mul(&M::zeros(2, 3)),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn adjoint_examples() {
        let a: M = parse_rows(&[&["i"]]).unwrap();
        assert_eq!(a.adjoint(), parse_rows(&[&["-i"]]).unwrap());
        assert_eq!(M::identity(3).adjoint(), M::identity(3));
        let d: D = parse_rows(&[&["1", "(1)e"], &["0", "0"]]).unwrap();
        assert_eq!(
            d.adjoint(),
            parse_rows(&[&["1", "0"], &["(1)e", "0"]]).unwrap()
        );
    }

    #[test]
    fn constructors_validate() {
        assert!(M::new(2, 2, vec![GaussianRational::zero(); 3]).is_err());
        assert!(M::from_rows(vec![vec![1.into()], vec![]]).is_err());
    }

    fn compatible_pair<S: ScalarSampler + Scalar>(seed: u64) -> (Matrix<S>, Matrix<S>) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = 1 + (seed % 4) as usize;
        let k = 1 + (seed / 4 % 4) as usize;
        let m = 1 + (seed / 16 % 4) as usize;
        (random_matrix(&mut rng, n, k), random_matrix(&mut rng, k, m))
    }

    proptest! {
        #[test]
        fn adjoint_reverses_products(seed in any::<u64>()) {
            let (a, b) = compatible_pair::<GaussianRational>(seed);
            prop_assert_eq!((&a * &b).adjoint(), &b.adjoint() * &a.adjoint());
            prop_assert_eq!(a.adjoint().adjoint(), a);
            let (a, b) = compatible_pair::<DualGaussian>(seed);
            prop_assert_eq!((&a * &b).adjoint(), &b.adjoint() * &a.adjoint());
        }
    }
}
