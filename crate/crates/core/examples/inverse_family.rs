//! Every inverse species of a few small matrices, with the oracle's
//! independent answer next to it.

use core_inverse::inverses::inverse_of;
use core_inverse::oracle::{oracle_core, oracle_mp_frf};
use core_inverse::{InverseKind, Matrix, GaussianRational};

type M = Matrix<GaussianRational>;

fn main() {
    let samples = [
        ("idempotent", M::from_ints(&[&[1, 1], &[0, 0]])),
        ("rank one", M::from_ints(&[&[1, 1], &[1, 1]])),
        ("nilpotent", M::from_ints(&[&[0, 1], &[0, 0]])),
        ("rectangular", M::from_ints(&[&[1, 2, 0], &[0, 0, 1]])),
    ];
    for (name, a) in &samples {
        println!("{name}: a = {a}, rank {}", a.rank());
        for kind in InverseKind::ALL {
            match inverse_of(a, kind) {
                Ok(x) => println!("  {kind:>14}: {x}"),
                Err(e) => println!("  {kind:>14}: {e}"),
            }
        }
        println!("  oracle mp:      {}", oracle_mp_frf(a));
        if a.is_square() {
            match oracle_core(a).unwrap() {
                Some(x) => println!("  oracle core:    {x}"),
                None => println!("  oracle core:    none"),
            }
        }
    }
}
