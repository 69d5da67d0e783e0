//! Products of a form over the triangle 0 < i < j < p/2 and the square
//! i, j in [1,(p-1)/2]: Legendre-symbol products (naive vs grouped path)
//! and value products mod p.
//!
//! ```bash
//! cargo run --release -p legendre-products --example region_products
//! ```

use legendre_products::{
    product_linear_square, product_linear_square_fast, product_square, product_triangle,
    product_triangle_grouped, value_product_square, value_product_triangle, LinearForm, OddPrime,
    QuadraticForm,
};

fn main() {
    let p = OddPrime::new(101).unwrap();

    // the naive O(p^2) walk is the oracle; the grouped path collects the
    // pairs on each ray j = i*x (mod p) and reads the pair-count parity off
    // a Gauss-lemma style count
    println!("triangle products at p = {p}:");
    for (a, b, c) in [(1, 0, 1), (1, 1, 1), (2, 5, 2), (1, -1, -1)] {
        let f = QuadraticForm::new(a, b, c).unwrap();
        let naive = product_triangle(&f, p);
        let grouped = product_triangle_grouped(&f, p).unwrap();
        assert_eq!(naive, grouped);
        println!(
            "  f = {a}i^2{b:+}ij{c:+}j^2: value {} with {} skipped terms",
            naive.value, naive.terms_skipped
        );
    }

    // a factored form and its expansion give the same product
    let factored = QuadraticForm::from_factors(2, 1, 1, 2).unwrap(); // (2i+j)(i+2j)
    let expanded = QuadraticForm::new(2, 5, 2).unwrap();
    assert_eq!(factored, expanded);
    println!(
        "\n(2i+j)(i+2j) expands to 2i^2+5ij+2j^2; square product at p = {p}: {}",
        product_square(&expanded, p).value
    );

    // linear forms s*i + eps*j over the square; the fast path reduces each
    // row to a prefix-product window
    println!("\nlinear products at p = {p}:");
    for (s, eps) in [(1, 1), (1, -1), (2, 1), (4, -1)] {
        let l = LinearForm::new(s, eps).unwrap();
        let naive = product_linear_square(&l, p);
        let fast = product_linear_square_fast(&l, p);
        assert_eq!(naive, fast);
        println!(
            "  {s}i{eps:+}j: value {} with {} skipped terms",
            naive.value, naive.terms_skipped
        );
    }

    // value products: multiply the residues themselves, not their symbols.
    // The i^2+j^2 triangle value is always +-1 mod p, with a closed sign:
    println!("\nvalue products of i^2+j^2 over the triangle:");
    let f = QuadraticForm::new(1, 0, 1).unwrap();
    for q in [13u64, 17, 19, 23, 29] {
        let p = OddPrime::new(q).unwrap();
        let v = value_product_triangle(&f, p);
        let e = if q % 4 == 1 { (q - 5) / 8 } else { (q + 1) / 8 };
        let closed = if e % 2 == 0 { 1 } else { q - 1 };
        println!("  p = {q:2}: product = {v:2} = (-1)^{e} mod p  [closed form {closed}]");
        assert_eq!(v, closed);
    }

    // the i^2-ij-j^2 value over the square follows a mod-20 case split
    // built on 5^((p-1)/4)
    println!("\nvalue products of i^2-ij-j^2 over the square:");
    let f = QuadraticForm::new(1, -1, -1).unwrap();
    for q in [13u64, 17, 29, 37, 41] {
        let p = OddPrime::new(q).unwrap();
        println!("  p = {q:2} (mod 20 = {:2}): {}", q % 20, value_product_square(&f, p));
    }
}
