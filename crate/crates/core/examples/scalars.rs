//! The two scalar rings: Gaussian rationals and dual Gaussian numbers.

use core_inverse::{DualGaussian, GaussianRational, Scalar};

fn main() {
    let z: GaussianRational = "3/4-1/2i".parse().unwrap();
    let w: GaussianRational = "-3+i".parse().unwrap();
    println!("z = {z}, w = {w}");
    println!("z·w = {}", z.clone() * &w);
    println!("z* = {}, |z|² = {}", z.conj(), z.norm_sqr());
    println!("1/z = {}", z.inverse().unwrap());

    // ε² = 0 and ε* = ε
    let e: DualGaussian = "(1)e".parse().unwrap();
    println!("ε·ε = {}", e.clone() * &e);
    let u: DualGaussian = "2+(i)e".parse().unwrap();
    let inv = u.inverse().unwrap();
    println!("u = {u}, u⁻¹ = {inv}, u·u⁻¹ = {}", u.clone() * &inv);
    println!("u* = {}", u.conj());

    // a unit exactly when the constant part is nonzero
    for s in ["3", "(2)e", "1/2i+(5)e"] {
        let x: DualGaussian = s.parse().unwrap();
        println!("{x:>12}: unit = {}, radical = {}", x.is_unit(), x.is_radical());
    }
}
