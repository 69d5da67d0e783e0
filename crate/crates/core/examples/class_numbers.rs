//! Imaginary-quadratic class numbers by reduced-form enumeration, and the
//! Mordell bridge between h(-p) and the nonresidue count below p/2.
//!
//! ```bash
//! cargo run --release -p legendre-products --example class_numbers
//! ```

use legendre_products::{
    class_number, h_neg_4p, h_neg_p, legendre_product_interval, mordell_parity, primes_in_range,
    reduced_forms, Discriminant, Fraction, OddPrime, SignValue,
};

fn main() {
    println!("reduced primitive forms (A,B,C) with B^2-4AC = D:");
    for d in [-3i64, -20, -23, -52, -68] {
        let disc = Discriminant::new(d).unwrap();
        let forms = reduced_forms(disc);
        println!("  D = {d:4}: h = {}  {forms:?}", forms.len());
    }

    // h(-p) is odd for p = 3 (mod 4), and (h(-p)+1)/2 mod 2 equals the
    // parity of the nonresidue count in (0, p/2)
    println!("\nMordell parity for p = 3 (mod 4):");
    for q in [7u64, 11, 23, 31, 43, 47] {
        let p = OddPrime::new(q).unwrap();
        let h = h_neg_p(p).unwrap();
        let parity = mordell_parity(p).unwrap();
        let half = legendre_product_interval(
            Fraction::new(0, 1).unwrap(),
            Fraction::new(1, 2).unwrap(),
            p,
        )
        .unwrap();
        println!(
            "  p = {q:2}: h(-p) = {h}, (h+1)/2 mod 2 = {}, nonresidue parity = {parity}, prod(0,p/2) = {half}",
            (h + 1) / 2 % 2
        );
        assert_eq!(parity, (h + 1) / 2 % 2);
        let expect = if parity == 0 { SignValue::PLUS } else { SignValue::MINUS };
        assert_eq!(half, expect);
    }

    // for p = 1 (mod 4) the relevant discriminant is -4p, and h(-4p) mod 4
    // is pinned by p mod 8
    println!("\nh(-4p) for p = 1 (mod 4):");
    for q in primes_in_range(5, 120).into_iter().filter(|q| q % 4 == 1) {
        let p = OddPrime::new(q).unwrap();
        let h4 = h_neg_4p(p).unwrap();
        println!("  p = {q:3} (mod 8 = {}): h(-4p) = {h4:2} (mod 4 = {})", q % 8, h4 % 4);
        assert_eq!(h4 % 4, if q % 8 == 1 { 0 } else { 2 });
    }

    // class numbers are exhaustive counts, so large-ish inputs are fine too
    let d = Discriminant::new(-99_991 * 4).unwrap();
    println!("\nh(-4*99991) = {}", class_number(d));
}
