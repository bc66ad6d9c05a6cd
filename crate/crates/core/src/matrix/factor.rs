use super::solve::rref;
use super::Matrix;
use crate::error::{Error, Result};
use crate::scalar::GaussianRational;

type G = GaussianRational;

/// `A = F·G` with `F` of full column rank and `G` of full row rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullRankFactorization {
    pub f: Matrix<G>,
    pub g: Matrix<G>,
    pub rank: usize,
}

impl Matrix<G> {
    /// Row-echelon rank.
    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    /// `F` = pivot columns of `A`, `G` = non-zero rows of the reduced
    /// row-echelon form of `A`.
    pub fn full_rank_factorize(&self) -> Result<FullRankFactorization> {
        let (echelon, pivots) = rref(self);
        let rank = pivots.len();
        if rank == 0 {
            return Err(Error::ZeroMatrix);
        }
        let f = Matrix::from_fn(self.rows(), rank, |i, k| self.get(i, pivots[k]).clone());
        let g = Matrix::from_fn(rank, self.cols(), |k, j| echelon.get(k, j).clone());
        Ok(FullRankFactorization { f, g, rank })
    }

    /// Reduced row-echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix<G>, Vec<usize>) {
        rref(self)
    }
}
