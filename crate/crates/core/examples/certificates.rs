//! Checking candidates against defining equations, and the Hermitian
//! projection route to the core inverse.

use core_inverse::inverses::{core_inverse, core_via_projection, verify};
use core_inverse::{GaussianRational, InverseKind, Matrix};

type M = Matrix<GaussianRational>;

fn main() {
    let a = M::from_ints(&[&[1, 1], &[0, 0]]);
    let good = core_inverse(&a).unwrap();
    let bad = M::from_ints(&[&[1, 0], &[1, 0]]);

    for (label, x) in [("core inverse", &good), ("Moore-Penrose-like guess", &bad)] {
        let cert = verify(InverseKind::Core, &a, x).unwrap();
        println!("{label} {x}: valid = {}", cert.valid);
        for eq in &cert.equations {
            println!("  {:>8}: {}", eq.id, eq.holds);
        }
        println!("  json: {}", serde_json::to_string(&cert).unwrap());
    }

    // p Hermitian, pa = 0, a + p invertible ⇒ a^⊕ = (a + p)⁻¹a(a + p)⁻¹
    let p = M::from_ints(&[&[0, 0], &[0, 1]]);
    println!("via projection p = {p}: {}", core_via_projection(&a, &p).unwrap());
    match core_via_projection(&a, &M::from_ints(&[&[0, 1], &[0, 0]])) {
        Ok(x) => println!("unexpected {x}"),
        Err(e) => println!("non-Hermitian p: {e}"),
    }
}
