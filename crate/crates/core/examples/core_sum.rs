//! Core inverse of a perturbed sum `f = φ + η − ε`, with the factors
//! that decide existence and the identities behind them.

use core_inverse::sum::{build_context, product_core_inverse, sum_core_inverse};
use core_inverse::{GaussianRational, InverseKind, Matrix};

type M = Matrix<GaussianRational>;

fn show(phi: &M, eta: &M) {
    println!("φ = {phi}, η = {eta}");
    let ctx = match build_context(phi, eta, InverseKind::Core) {
        Ok(ctx) => ctx,
        Err(e) => {
            println!("  rejected: {e}\n");
            return;
        }
    };
    println!("  ε = {}, f = {}", ctx.epsilon, ctx.f);
    let out = sum_core_inverse(&ctx).unwrap();
    for w in &out.witness {
        println!("  {:?}: value {}, invertible {}", w.factor, w.value, w.inverse.is_some());
    }
    let holding = out.identities.iter().filter(|c| c.holds).count();
    println!("  identities: {holding}/{} hold", out.identities.len());
    match &out.result {
        Some(r) => {
            println!("  f^⊕ = {}", r.inverse);
            for (factor, inv) in &r.closed_forms {
                println!("  closed form for {factor:?}: {inv}");
            }
            if let Ok(pc) = product_core_inverse(&ctx) {
                println!("  (ff₀)^⊕ = {}, q = {}", pc.core, pc.q);
            }
        }
        None => println!("  no core inverse; failing {:?}", out.failing()),
    }
    println!();
}

fn main() {
    show(&M::identity(2), &M::unit(2, 0, 1));
    show(&M::from_ints(&[&[1, 0], &[0, 0]]), &M::from_ints(&[&[0, 1], &[1, 0]]));
    // (λ + a)² + bc = 0 makes f square-zero
    show(&M::from_ints(&[&[1, 0], &[0, 0]]), &M::from_ints(&[&[0, 1], &[-1, 0]]));
    show(&M::identity(2), &-M::identity(2));
}
