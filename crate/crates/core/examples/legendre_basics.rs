//! Legendre symbols and the scalar arithmetic everything else builds on.
//!
//! ```bash
//! cargo run --release -p legendre-products --example legendre_basics
//! ```

use legendre_products::{
    is_biquadratic_residue, is_prime, least_abs_residue, least_residue, legendre, mod_pow,
    rational_residue, OddPrime, SignValue,
};

fn main() {
    let p = OddPrime::new(23).unwrap();

    println!("quadratic residues mod {p}:");
    let residues: Vec<u64> = (1..p.value())
        .filter(|&a| legendre(a as i64, p) == SignValue::PLUS)
        .collect();
    println!("  {residues:?}");

    // the symbol is computed by the binary reciprocity algorithm;
    // Euler's criterion a^((p-1)/2) is the independent check
    for a in [-3i64, 2, 5, 46] {
        let sym = legendre(a, p);
        let euler = mod_pow(a, (p.value() - 1) / 2, p);
        println!("  ({a}/{p}) = {sym}   [a^((p-1)/2) mod p = {euler}]");
    }

    // supplementary laws at a glance
    println!("\nsupplementary laws:");
    for q in [5u64, 7, 11, 13, 17, 19, 23] {
        let p = OddPrime::new(q).unwrap();
        println!(
            "  p = {q:2}: (-1/p) = {}, (2/p) = {}   (p mod 8 = {})",
            legendre(-1, p),
            legendre(2, p),
            q % 8
        );
    }

    // residue normalizations and modular quotients
    let p = OddPrime::new(7).unwrap();
    println!("\nresidues mod 7:");
    println!("  {{10}}_7 = {}", least_residue(10, p));
    println!("  least |residue| of 4 = {}", least_abs_residue(4, p));
    let w = rational_residue(-3, 12, p).unwrap();
    println!("  -3/12 resolves to w = {} (12*{} = {} = -3 mod 7)", w.resolved, w.resolved, 12 * w.resolved);

    // fourth powers mod p = 1 (mod 4)
    let p = OddPrime::new(17).unwrap();
    println!("\nbiquadratic residues mod 17:");
    for a in [1i64, 2, 4, 16] {
        println!("  {a}: {}", is_biquadratic_residue(a, p).unwrap());
    }

    // the deterministic primality test behind OddPrime
    println!("\nis_prime: 561 (Carmichael) -> {}, 2^61-1 -> {}", is_prime(561), is_prime((1 << 61) - 1));
}
