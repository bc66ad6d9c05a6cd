//! Group, {1,2,4}, {1,2,3} and Moore-Penrose inverses of a perturbed sum,
//! including rectangular `φ`.

use core_inverse::inverses::mp_inverse;
use core_inverse::sum::{build_context, sum_tau_inverse, SumContext};
use core_inverse::{GaussianRational, InverseKind, Matrix};

type M = Matrix<GaussianRational>;

fn main() {
    let phi = M::from_ints(&[&[1, 0, 0], &[0, 0, 0]]);
    let eta = M::from_ints(&[&[0, 0, 1], &[0, 1, 0]]);
    for tau in [InverseKind::OneTwoFour, InverseKind::OneTwoThree, InverseKind::MoorePenrose] {
        let ctx = build_context(&phi, &eta, tau).unwrap();
        let out = sum_tau_inverse(&ctx).unwrap();
        let r = out.result.as_ref().unwrap();
        println!("{tau}: f = {}, result = {}, certificate valid = {}", ctx.f, r.inverse, r.certificate.valid);
        for (factor, inv) in &r.closed_forms {
            println!("  closed form for {factor:?}: {inv}");
        }
    }
    let ctx = build_context(&phi, &eta, InverseKind::MoorePenrose).unwrap();
    println!("mp_inverse(f) = {}", mp_inverse(&ctx.f));

    // a {1,2,3}-inverse of φ other than φ†
    let mp = mp_inverse(&phi);
    let z = M::from_ints(&[&[0, 1], &[2, 0], &[1, 1]]);
    let other = &mp + &(&(&(&mp * &phi).one_minus() * &z) * &(&phi * &mp));
    let ctx = SumContext::with_inverse(&phi, &eta, InverseKind::OneTwoThree, &other).unwrap();
    let out = sum_tau_inverse(&ctx).unwrap();
    println!("from φ^(1,2,3) = {other}: {}", out.inverse().unwrap());

    let square = M::from_ints(&[&[1, 1], &[0, 0]]);
    let ctx = build_context(&square, &M::unit(2, 1, 1), InverseKind::Group).unwrap();
    let out = sum_tau_inverse(&ctx).unwrap();
    println!("group: f = {}, f# = {:?}", ctx.f, out.inverse());
}
