//! Dual core inverse of a perturbed sum, compared with the adjoint of the
//! core construction on `(φ*, η*)`.

use core_inverse::sum::{build_context, sum_core_inverse, sum_dual_core_inverse};
use core_inverse::{GaussianRational, InverseKind, Matrix};

type M = Matrix<GaussianRational>;

fn main() {
    let phi: M = core_inverse::matrix::parse_rows(&[&["1", "i"], &["0", "0"]]).unwrap();
    let eta: M = core_inverse::matrix::parse_rows(&[&["0", "1/2"], &["1", "0"]]).unwrap();
    let ctx = build_context(&phi, &eta, InverseKind::DualCore).unwrap();
    println!("φ = {phi}\nη = {eta}\nf = {}", ctx.f);
    let out = sum_dual_core_inverse(&ctx).unwrap();
    for w in &out.witness {
        println!("{:?} = {}", w.factor, w.value);
    }
    let dual = out.inverse().expect("exists for this pair");
    println!("f_⊕ = {dual}");

    let mirror = build_context(&phi.adjoint(), &eta.adjoint(), InverseKind::Core).unwrap();
    let core = sum_core_inverse(&mirror).unwrap();
    let via_adjoint = core.inverse().unwrap().adjoint();
    println!("adjoint of (f*)^⊕ = {via_adjoint}");
    assert_eq!(dual, &via_adjoint);
}
