//! Perturbing a core invertible matrix by a radical matrix over the dual
//! Gaussian numbers.

use core_inverse::radical::{perturbed_inverse, RadicalPerturbation, Variant};
use core_inverse::{DualGaussian, GaussianRational, Matrix};

type D = Matrix<DualGaussian>;

fn main() {
    let a = D::lift(&Matrix::<GaussianRational>::from_ints(&[&[1, 0], &[0, 0]]));
    for (i, j) in [(0, 1), (1, 0), (1, 1)] {
        let jm = D::eps(&Matrix::<GaussianRational>::unit(2, i, j));
        for variant in [Variant::Core, Variant::Dual] {
            let p = RadicalPerturbation::from_pair(&a, &jm, variant).unwrap();
            let out = perturbed_inverse(&p).unwrap();
            print!("j = εE[{i}{j}] {variant:?}: ε = {} ", p.epsilon);
            match &out.result {
                Some(r) => println!("→ inverse {} (oracle and third route agree)", r.inverse),
                None => println!(
                    "→ none; oracle: group {} core {} dual core {}",
                    out.existence.group_exists, out.existence.core_exists, out.existence.dual_core_exists
                ),
            }
        }
    }
}
