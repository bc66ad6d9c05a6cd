use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::Matrix;
use crate::error::{Error, Result};
use crate::scalar::{DualGaussian, GaussianRational, Scalar};

type G = GaussianRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// `A·X = B`
    Right,
    /// `X·A = B`
    Left,
}

/// Rings in which square inversion and linear solvability are decidable.
pub trait ExactSolve: Scalar {
    fn invert(m: &Matrix<Self>) -> Result<Matrix<Self>>;

    /// Some `X` with `a·X = b`.
    fn solve_right(a: &Matrix<Self>, b: &Matrix<Self>) -> Result<Matrix<Self>>;
}

pub(crate) fn solve_linear<S: ExactSolve>(
    a: &Matrix<S>,
    b: &Matrix<S>,
    side: Side,
) -> Result<Matrix<S>> {
    match side {
        Side::Right => {
            if a.rows != b.rows {
                return Err(Error::dims(format!(
                    "A·X = B with A {}x{} and B {}x{}",
                    a.rows, a.cols, b.rows, b.cols
                )));
            }
            S::solve_right(a, b)
        }
        Side::Left => {
            if a.cols != b.cols {
                return Err(Error::dims(format!(
                    "X·A = B with A {}x{} and B {}x{}",
                    a.rows, a.cols, b.rows, b.cols
                )));
            }
            // X·A = B  ⇔  Aᵀ·Xᵀ = Bᵀ (both rings are commutative).
            Ok(S::solve_right(&a.transpose(), &b.transpose())?.transpose())
        }
    }
}

/// Gauss-Jordan reduction of `[A | B | I]` over the field, pivoting only in
/// the `A` block on the first non-zero entry.
struct Reduced {
    aug: Vec<Vec<G>>,
    a_cols: usize,
    b_cols: usize,
    pivots: Vec<usize>,
}

impl Reduced {
    fn new(a: &Matrix<G>, b: &Matrix<G>) -> Self {
        let (n, m, p) = (a.rows, a.cols, b.cols);
        let mut aug: Vec<Vec<G>> = (0..n)
            .map(|i| {
                let mut row = Vec::with_capacity(m + p + n);
                row.extend_from_slice(a.row(i));
                row.extend_from_slice(b.row(i));
                row.extend((0..n).map(|k| if k == i { G::one() } else { G::zero() }));
                row
            })
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m {
            if r == n {
                break;
            }
            let Some(p_row) = (r..n).find(|&i| !aug[i][c].is_zero()) else {
                continue;
            };
            aug.swap(r, p_row);
            let inv = aug[r][c].inverse().expect("non-zero field pivot");
            for x in aug[r].iter_mut() {
                *x = x.clone() * &inv;
            }
            let pivot_row = aug[r].clone();
            for (i, row) in aug.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let factor = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x = x.clone() - &(factor.clone() * y);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Reduced {
            aug,
            a_cols: m,
            b_cols: p,
            pivots,
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// First row whose `A` block vanished but whose `B` block did not.
    fn inconsistent_row(&self) -> Option<usize> {
        let (m, p) = (self.a_cols, self.b_cols);
        (self.rank()..self.aug.len()).find(|&i| self.aug[i][m..m + p].iter().any(|x| !x.is_zero()))
    }

    fn solution(&self) -> Matrix<G> {
        let (m, p) = (self.a_cols, self.b_cols);
        let mut x = Matrix::zeros(m, p);
        for (r, &c) in self.pivots.iter().enumerate() {
            for k in 0..p {
                x.set(c, k, self.aug[r][m + k].clone());
            }
        }
        x
    }

    fn combination(&self, row: usize) -> Vec<G> {
        self.aug[row][self.a_cols + self.b_cols..].to_vec()
    }

    /// Reduced row-echelon form of the `A` block.
    fn echelon(&self) -> Matrix<G> {
        let m = self.a_cols;
        Matrix::from_fn(self.aug.len(), m, |i, j| self.aug[i][j].clone())
    }
}

pub(crate) fn rref(a: &Matrix<G>) -> (Matrix<G>, Vec<usize>) {
    let red = Reduced::new(a, &Matrix::zeros(a.rows, 0));
    (red.echelon(), red.pivots)
}

fn field_solve(a: &Matrix<G>, b: &Matrix<G>) -> Result<Matrix<G>> {
    let red = Reduced::new(a, b);
    match red.inconsistent_row() {
        Some(row) => Err(Error::NoSolution { row }),
        None => Ok(red.solution()),
    }
}

fn field_invert(a: &Matrix<G>) -> Result<Matrix<G>> {
    if !a.is_square() {
        return Err(Error::dims(format!("cannot invert a {}x{} matrix", a.rows, a.cols)));
    }
    let n = a.rows;
    let red = Reduced::new(a, &Matrix::identity(n));
    if red.rank() < n {
        let stage = (0..n)
            .find(|c| !red.pivots.contains(c))
            .expect("rank deficiency leaves a non-pivot column");
        return Err(Error::NotInvertible { stage });
    }
    Ok(red.solution())
}

/// For an inconsistent field system `A·X = B`, a row vector `y` with
/// `y·A = 0` and `y·B ≠ 0`. `None` when the system is solvable.
pub fn inconsistency_certificate(a: &Matrix<G>, b: &Matrix<G>) -> Option<Matrix<G>> {
    let red = Reduced::new(a, b);
    let row = red.inconsistent_row()?;
    Some(Matrix::new(1, a.rows, red.combination(row)).expect("combination length"))
}

impl ExactSolve for GaussianRational {
    fn invert(m: &Matrix<Self>) -> Result<Matrix<Self>> {
        field_invert(m)
    }

    fn solve_right(a: &Matrix<Self>, b: &Matrix<Self>) -> Result<Matrix<Self>> {
        field_solve(a, b)
    }
}

/// The field system equivalent to `(A₀ + A₁ε)(X₀ + X₁ε) = B₀ + B₁ε`:
/// `[[A₀, 0], [A₁, A₀]]·[X₀; X₁] = [B₀; B₁]`.
pub(crate) fn dual_block_system(
    a: &Matrix<DualGaussian>,
    b: &Matrix<DualGaussian>,
) -> (Matrix<G>, Matrix<G>) {
    let (n, m) = a.shape();
    let (a0, a1) = (a.const_part(), a.eps_part());
    let block = Matrix::from_fn(2 * n, 2 * m, |i, j| match (i < n, j < m) {
        (true, true) => a0.get(i, j).clone(),
        (true, false) => G::zero(),
        (false, true) => a1.get(i - n, j).clone(),
        (false, false) => a0.get(i - n, j - m).clone(),
    });
    let (b0, b1) = (b.const_part(), b.eps_part());
    let rhs = Matrix::from_fn(2 * n, b.cols, |i, k| {
        if i < n {
            b0.get(i, k).clone()
        } else {
            b1.get(i - n, k).clone()
        }
    });
    (block, rhs)
}

impl ExactSolve for DualGaussian {
    fn invert(m: &Matrix<Self>) -> Result<Matrix<Self>> {
        // (A + Bε)⁻¹ = A⁻¹ − A⁻¹BA⁻¹ε
        let a_inv = field_invert(&m.const_part())?;
        let eps = -(&(&a_inv * &m.eps_part()) * &a_inv);
        Ok(Matrix::from_fn(m.rows, m.cols, |i, j| {
            DualGaussian::new(a_inv.get(i, j).clone(), eps.get(i, j).clone())
        }))
    }

    fn solve_right(a: &Matrix<Self>, b: &Matrix<Self>) -> Result<Matrix<Self>> {
        // Solving the two coupled field systems jointly is required: a
        // particular X₀ of A₀X₀ = B₀ need not admit an X₁.
        let (block, rhs) = dual_block_system(a, b);
        let x = field_solve(&block, &rhs)?;
        let m = a.cols;
        Ok(Matrix::from_fn(m, b.cols, |i, k| {
            DualGaussian::new(x.get(i, k).clone(), x.get(m + i, k).clone())
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::parse_rows;
    use crate::sample::random_matrix;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    type M = Matrix<G>;
    type D = Matrix<DualGaussian>;

    #[test]
    fn invert_examples() {
        let a = M::from_ints(&[&[1, 1], &[0, 1]]);
        assert_eq!(a.invert().unwrap(), M::from_ints(&[&[1, -1], &[0, 1]]));
        assert_eq!(
            M::from_ints(&[&[1, 1], &[1, 1]]).invert(),
            Err(Error::NotInvertible { stage: 1 })
        );
        assert_eq!(M::zeros(2, 2).invert(), Err(Error::NotInvertible { stage: 0 }));
        assert!(matches!(M::zeros(2, 3).invert(), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn invert_dual_unipotent() {
        let m: D = parse_rows(&[&["1", "(1)e"], &["0", "1"]]).unwrap();
        let inv = m.invert().unwrap();
        assert_eq!(inv, parse_rows(&[&["1", "(-1)e"], &["0", "1"]]).unwrap());
        assert!((&m * &inv).is_identity());
        assert!((&inv * &m).is_identity());
        let singular: D = parse_rows(&[&["1", "0"], &["0", "(1)e"]]).unwrap();
        assert_eq!(singular.invert(), Err(Error::NotInvertible { stage: 1 }));
    }

    #[test]
    fn solve_examples() {
        let m = M::from_ints(&[&[1, 2], &[3, 4]]);
        assert_eq!(M::identity(2).solve(&m, Side::Right).unwrap(), m);

        let a: D = parse_rows(&[&["1", "0"], &["0", "0"]]).unwrap();
        let b: D = parse_rows(&[&["1", "0"], &["0", "(1)e"]]).unwrap();
        assert!(matches!(a.solve(&b, Side::Right), Err(Error::NoSolution { .. })));

        let a = M::from_ints(&[&[1, 1], &[0, 0]]);
        let a2 = a.square();
        let x = a2.solve(&a, Side::Right).unwrap();
        assert_eq!(&a2 * &x, a);
        let y = a2.solve(&a, Side::Left).unwrap();
        assert_eq!(&y * &a2, a);
    }

    #[test]
    fn dual_solve_needs_joint_system() {
        // Solving A₀X₀ = B₀ first yields X₀ = [1, 0]ᵀ, for which the
        // ε-equation A₀X₁ = B₁ − A₁X₀ is inconsistent; X₀ = [0, 1]ᵀ works.
        let a: D = parse_rows(&[&["1", "1"], &["(1)e", "0"]]).unwrap();
        let b: D = parse_rows(&[&["1"], &["0"]]).unwrap();
        let x = a.solve(&b, Side::Right).unwrap();
        assert_eq!(&a * &x, b);
    }

    #[test]
    fn rectangular_systems() {
        let a = M::from_ints(&[&[1, 0, 1], &[0, 1, 1]]);
        let b = M::from_ints(&[&[2], &[3]]);
        let x = a.solve(&b, Side::Right).unwrap();
        assert_eq!(&a * &x, b);
        assert!(matches!(
            a.solve(&M::zeros(3, 1), Side::Right),
            Err(Error::DimensionMismatch(_))
        ));
    }

    fn sample_system(seed: u64) -> (M, M) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(1..=4);
        let m = rng.random_range(1..=4);
        let p = rng.random_range(1..=3);
        let r = rng.random_range(0..=n.min(m));
        let f: M = random_matrix(&mut rng, n, r);
        let g: M = random_matrix(&mut rng, r, m);
        let a = if r == 0 { M::zeros(n, m) } else { &f * &g };
        let b = if rng.random_bool(0.5) {
            let x: M = random_matrix(&mut rng, m, p);
            &a * &x
        } else {
            random_matrix(&mut rng, n, p)
        };
        (a, b)
    }

    proptest! {
        #[test]
        fn solve_residual_or_certificate(seed in any::<u64>()) {
            let (a, b) = sample_system(seed);
            match a.solve(&b, Side::Right) {
                Ok(x) => prop_assert_eq!(&a * &x, b),
                Err(Error::NoSolution { .. }) => {
                    let y = inconsistency_certificate(&a, &b).unwrap();
                    prop_assert!((&y * &a).is_zero());
                    prop_assert!(!(&y * &b).is_zero());
                }
                Err(e) => prop_assert!(false, "{e}"),
            }
        }

        #[test]
        fn dual_solve_is_exact(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = rng.random_range(1..=3);
            let m = rng.random_range(1..=3);
            let a: D = random_matrix(&mut rng, n, m);
            let b = if rng.random_bool(0.5) {
                let x: D = random_matrix(&mut rng, m, 2);
                &a * &x
            } else {
                random_matrix(&mut rng, n, 2)
            };
            match a.solve(&b, Side::Right) {
                Ok(x) => prop_assert_eq!(&a * &x, b.clone()),
                Err(Error::NoSolution { .. }) => {
                    let (block, rhs) = dual_block_system(&a, &b);
                    let y = inconsistency_certificate(&block, &rhs).unwrap();
                    prop_assert!((&y * &block).is_zero());
                }
                Err(e) => prop_assert!(false, "{e}"),
            }
            match a.solve(&b.transpose(), Side::Left) {
                Ok(_) | Err(Error::DimensionMismatch(_)) | Err(Error::NoSolution { .. }) => {}
                Err(e) => prop_assert!(false, "{e}"),
            }
        }

        #[test]
        fn invert_iff_full_rank(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = rng.random_range(1..=4);
            let a: M = if rng.random_bool(0.5) {
                random_matrix(&mut rng, n, n)
            } else {
                let f: M = random_matrix(&mut rng, n, 1);
                let g: M = random_matrix(&mut rng, 1, n);
                &f * &g
            };
            match a.invert() {
                Ok(inv) => {
                    prop_assert_eq!(a.rank(), n);
                    prop_assert!((&a * &inv).is_identity());
                    prop_assert!((&inv * &a).is_identity());
                }
                Err(_) => prop_assert!(a.rank() < n),
            }
            let d = Matrix::<DualGaussian>::lift(&a);
            let eps: M = random_matrix(&mut rng, n, n);
            let d = &d + &Matrix::<DualGaussian>::eps(&eps);
            match d.invert() {
                Ok(inv) => {
                    prop_assert_eq!(d.const_part().rank(), n);
                    prop_assert!((&d * &inv).is_identity());
                    prop_assert!((&inv * &d).is_identity());
                }
                Err(_) => prop_assert!(d.const_part().rank() < n),
            }
        }
    }
}
