//! Independent ground truth.
//!
//! Existence is decided by exact linear solvability: `a` is group
//! invertible iff `a²x = a` and `ya² = a` are solvable (then
//! `a# = yax`), `{1,3}`-invertible iff `x*a*a = a` is solvable and
//! `{1,4}`-invertible iff `aa*y* = a` is. Core invertibility is group plus
//! `{1,3}` (`a^⊕ = a#·a·a^(1,3)`), dual core is group plus `{1,4}`.
//!
//! Over the field a second family of routes uses full-rank factorizations
//! and is disjoint from the one in [`crate::inverses`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::inverses::{group_witnesses, verify, InverseKind};
use crate::matrix::{ExactSolve, Matrix, Side};
use crate::scalar::GaussianRational;

type G = GaussianRational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExistenceReport<S> {
    pub group_exists: bool,
    pub one_three_exists: bool,
    pub one_four_exists: bool,
    pub core_exists: bool,
    pub dual_core_exists: bool,
    /// `(x, y)` with `a²x = a`, `ya² = a`.
    #[serde(skip)]
    pub group_witnesses: Option<(Matrix<S>, Matrix<S>)>,
    /// `x` with `x*a*a = a`.
    #[serde(skip)]
    pub one_three: Option<Matrix<S>>,
    /// `y` with `aa*y* = a`.
    #[serde(skip)]
    pub one_four: Option<Matrix<S>>,
}

fn solvable<S>(r: Result<Matrix<S>>) -> Result<Option<Matrix<S>>> {
    match r {
        Ok(x) => Ok(Some(x)),
        Err(Error::NoSolution { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Some `{1,3}`-inverse via `x*·(a*a) = a`.
pub fn one_three_witness<S: ExactSolve>(a: &Matrix<S>) -> Result<Option<Matrix<S>>> {
    let gram = &a.adjoint() * a;
    Ok(solvable(gram.solve(a, Side::Left))?.map(|y| y.adjoint()))
}

/// Some `{1,4}`-inverse via `(aa*)·y* = a`.
pub fn one_four_witness<S: ExactSolve>(a: &Matrix<S>) -> Result<Option<Matrix<S>>> {
    let gram = a * &a.adjoint();
    Ok(solvable(gram.solve(a, Side::Right))?.map(|z| z.adjoint()))
}

/// `x*a*a = a`
pub fn satisfies_adjoint_left_cancellation<S: crate::Scalar>(a: &Matrix<S>, x: &Matrix<S>) -> bool {
    &(&x.adjoint() * &a.adjoint()) * a == *a
}

/// `aa*y* = a`
pub fn satisfies_adjoint_right_cancellation<S: crate::Scalar>(a: &Matrix<S>, y: &Matrix<S>) -> bool {
    &(a * &a.adjoint()) * &y.adjoint() == *a
}

pub fn oracle_existence<S: ExactSolve>(a: &Matrix<S>) -> Result<ExistenceReport<S>> {
    let group = match group_witnesses(a) {
        Ok(w) => Some(w),
        Err(Error::NotGroupInvertible { .. }) => None,
        Err(e) => return Err(e),
    };
    let one_three = one_three_witness(a)?;
    let one_four = one_four_witness(a)?;
    let group_exists = group.is_some();
    Ok(ExistenceReport {
        group_exists,
        one_three_exists: one_three.is_some(),
        one_four_exists: one_four.is_some(),
        core_exists: group_exists && one_three.is_some(),
        dual_core_exists: group_exists && one_four.is_some(),
        group_witnesses: group,
        one_three,
        one_four,
    })
}

fn checked<S: ExactSolve>(kind: InverseKind, a: &Matrix<S>, x: Matrix<S>) -> Result<Matrix<S>> {
    if verify(kind, a, &x)?.valid {
        Ok(x)
    } else {
        Err(Error::contract(format!("oracle {kind} inverse fails its equations")))
    }
}

/// `a# = y·a·x` from the linear-system witnesses.
pub fn oracle_group<S: ExactSolve>(a: &Matrix<S>) -> Result<Option<Matrix<S>>> {
    let report = oracle_existence(a)?;
    report
        .group_witnesses
        .map(|(x, y)| checked(InverseKind::Group, a, &(&y * a) * &x))
        .transpose()
}

/// `a^⊕ = a#·a·a^(1,3)`, or `None` when the oracle finds no core inverse.
pub fn oracle_core<S: ExactSolve>(a: &Matrix<S>) -> Result<Option<Matrix<S>>> {
    let report = oracle_existence(a)?;
    let (Some((x, y)), Some(x13)) = (report.group_witnesses, report.one_three) else {
        return Ok(None);
    };
    let group = &(&y * a) * &x;
    checked(InverseKind::Core, a, &(&group * a) * &x13).map(Some)
}

/// `a_⊕ = a^(1,4)·a·a#`, or `None`.
pub fn oracle_dual_core<S: ExactSolve>(a: &Matrix<S>) -> Result<Option<Matrix<S>>> {
    let report = oracle_existence(a)?;
    let (Some((x, y)), Some(y14)) = (report.group_witnesses, report.one_four) else {
        return Ok(None);
    };
    let group = &(&y * a) * &x;
    checked(InverseKind::DualCore, a, &(&y14 * a) * &group).map(Some)
}

/// Moore-Penrose inverse from a factorization of `a*`: with `a* = F'G'`,
/// `a = FG` for `F = G'*`, `G = F'*`, and `a† = G*(GG*)⁻¹(F*F)⁻¹F*`.
pub fn oracle_mp_frf(a: &Matrix<G>) -> Matrix<G> {
    let Ok(frf) = a.adjoint().full_rank_factorize() else {
        return Matrix::zeros(a.cols(), a.rows());
    };
    let f = frf.g.adjoint();
    let g = frf.f.adjoint();
    let (fa, ga) = (f.adjoint(), g.adjoint());
    let row_gram = (&g * &ga).invert().expect("G has full row rank");
    let col_gram = (&fa * &f).invert().expect("F has full column rank");
    &(&(&ga * &row_gram) * &col_gram) * &fa
}

/// Group inverse `F(GF)⁻²G`; `None` when `GF` is singular.
pub fn group_frf(a: &Matrix<G>) -> Option<Matrix<G>> {
    let Ok(frf) = a.full_rank_factorize() else {
        return Some(Matrix::zeros(a.rows(), a.cols()));
    };
    let gf_inv = (&frf.g * &frf.f).invert().ok()?;
    Some(&(&(&frf.f * &gf_inv) * &gf_inv) * &frf.g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inverses::{core_inverse, dual_core_inverse, group_inverse, mp_inverse};
    use crate::matrix::parse_rows;
    use crate::sample::{random_index_one, random_low_rank, random_matrix};
    use crate::scalar::DualGaussian;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    type M = Matrix<G>;

    #[test]
    fn existence_examples() {
        let a: Matrix<DualGaussian> = parse_rows(&[&["1", "0"], &["0", "(1)e"]]).unwrap();
        let r = oracle_existence(&a).unwrap();
        assert!(!r.group_exists);
        assert!(!r.core_exists);

        let r = oracle_existence(&M::identity(3)).unwrap();
        assert!(r.group_exists && r.one_three_exists && r.one_four_exists);
        assert!(r.core_exists && r.dual_core_exists);

        let ones = M::from_ints(&[&[1, 1], &[1, 1]]);
        let r = oracle_existence(&ones).unwrap();
        assert!(r.core_exists && r.dual_core_exists);
        let (x, y) = r.group_witnesses.unwrap();
        assert_eq!(&ones.square() * &x, ones);
        assert_eq!(&y * &ones.square(), ones);
        assert!(satisfies_adjoint_left_cancellation(&ones, &r.one_three.unwrap()));
        assert!(satisfies_adjoint_right_cancellation(&ones, &r.one_four.unwrap()));
    }

    #[test]
    fn core_examples() {
        let a = M::from_ints(&[&[1, 1], &[0, 0]]);
        assert_eq!(oracle_core(&a).unwrap().unwrap(), M::from_ints(&[&[1, 0], &[0, 0]]));
        assert_eq!(oracle_core(&M::zeros(2, 2)).unwrap().unwrap(), M::zeros(2, 2));
        assert_eq!(oracle_core(&M::from_ints(&[&[0, 1], &[0, 0]])).unwrap(), None);
    }

    #[test]
    fn frf_examples() {
        let a = M::from_ints(&[&[1, 1], &[0, 0]]);
        let expected: M = parse_rows(&[&["1/2", "0"], &["1/2", "0"]]).unwrap();
        assert_eq!(oracle_mp_frf(&a), expected);
        assert_eq!(oracle_mp_frf(&M::identity(2)), M::identity(2));
        let two: M = parse_rows(&[&["2"]]).unwrap();
        assert_eq!(oracle_mp_frf(&two), parse_rows(&[&["1/2"]]).unwrap());

        let ones = M::from_ints(&[&[1, 1], &[1, 1]]);
        let quarter: M = parse_rows(&[&["1/4", "1/4"], &["1/4", "1/4"]]).unwrap();
        assert_eq!(group_frf(&ones).unwrap(), quarter);
        assert_eq!(group_frf(&M::from_ints(&[&[0, 1], &[0, 0]])), None);
        assert_eq!(group_frf(&M::identity(3)).unwrap(), M::identity(3));
    }

    fn sample_square(seed: u64) -> M {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(1..=4);
        let r = rng.random_range(0..=n);
        match rng.random_range(0..3) {
            0 => random_matrix(&mut rng, n, n),
            1 => random_low_rank(&mut rng, n, n, r),
            _ => random_index_one(&mut rng, n, r),
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn routes_agree(seed in any::<u64>()) {
            let a = sample_square(seed);
            prop_assert_eq!(oracle_core(&a).unwrap(), core_inverse(&a).ok());
            prop_assert_eq!(oracle_dual_core(&a).unwrap(), dual_core_inverse(&a).ok());
            prop_assert_eq!(group_frf(&a), group_inverse(&a).ok());
            prop_assert_eq!(oracle_group(&a).unwrap(), group_inverse(&a).ok());
            prop_assert_eq!(oracle_mp_frf(&a), mp_inverse(&a));
        }

        #[test]
        fn witnesses_resubstitute(seed in any::<u64>()) {
            let a = sample_square(seed);
            let r = oracle_existence(&a).unwrap();
            prop_assert_eq!(r.core_exists, r.group_exists && r.one_three_exists);
            if let Some((x, y)) = &r.group_witnesses {
                prop_assert_eq!(&a.square() * x, a.clone());
                prop_assert_eq!(y * &a.square(), a.clone());
            }
            // every field matrix is {1,3}- and {1,4}-invertible
            prop_assert!(satisfies_adjoint_left_cancellation(&a, r.one_three.as_ref().unwrap()));
            prop_assert!(satisfies_adjoint_right_cancellation(&a, r.one_four.as_ref().unwrap()));
        }
    }
}
