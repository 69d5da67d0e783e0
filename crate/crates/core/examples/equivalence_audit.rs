//! Equivalence audits: is a form's region product a function of
//! (p mod M, F_p(0,1,k) mod 16)? The audit partitions a prime range by that
//! key and reports any class containing two primes with different products.
//!
//! Includes the one known non-periodic family (k = 3), where the product is
//! instead pinned by whether 2 is a biquadratic residue.
//!
//! ```bash
//! cargo run --release -p legendre-products --example equivalence_audit
//! ```

use legendre_products::{
    equivalence_audit, is_biquadratic_residue, primes_in_range, product_triangle_grouped,
    OddPrime, QuadraticForm, Region, SignValue,
};

fn main() {
    // i^2+ij+j^2: triangle product determined by (p mod 288, F mod 16)
    let f = QuadraticForm::new(1, 1, 1).unwrap();
    let r = equivalence_audit(&f, Region::Triangle, None, 3000).unwrap();
    println!("{}: {} ({} primes, {} mixed classes)", r.theorem, r.status, r.checked, r.failures.len());
    assert!(r.passed());

    // i^2+j^2 over the square is outright periodic: modulus 8 suffices
    let f = QuadraticForm::new(1, 0, 1).unwrap();
    let r = equivalence_audit(&f, Region::Square, Some(8), 2000).unwrap();
    println!("{}: {} ({} primes)", r.theorem, r.status, r.checked);
    assert!(r.passed());

    // a modulus that is too small mixes classes and the audit says so
    let f = QuadraticForm::new(1, -1, -1).unwrap();
    let r = equivalence_audit(&f, Region::Square, Some(8), 2000).unwrap();
    println!("{}: {} ({} mixed classes)", r.theorem, r.status, r.failures.len());
    for fl in r.failures.iter().take(3) {
        println!("  p = {}: {} vs {} [{}]", fl.p, fl.computed, fl.claimed, fl.params["class"]);
    }

    // the k = 3 family, f = i^2+4ij+j^2: at the default modulus the classes
    // keyed by F mod 16 still separate the products (a coarse modulus like
    // 24 does not: try `legprod audit --form 1,4,1 --modulus 24 --prime-hi 3000`)
    let f = QuadraticForm::new(1, 4, 1).unwrap();
    let r = equivalence_audit(&f, Region::Triangle, None, 3000).unwrap();
    println!("{}: {} ({} primes)", r.theorem, r.status, r.checked);
    assert!(r.passed());

    // ...but within p = 17 (mod 24) the product is not periodic in p: it is
    // +1 exactly when 2 is a fourth power mod p
    println!("\nk = 3 family within p = 17 (mod 24):");
    let mut shown = 0;
    for q in primes_in_range(5, 2000) {
        if q % 24 != 17 {
            continue;
        }
        let p = OddPrime::new(q).unwrap();
        let prod = product_triangle_grouped(&f, p).unwrap().value;
        let biq = is_biquadratic_residue(2, p).unwrap();
        assert_eq!(prod == SignValue::PLUS, biq);
        if shown < 10 {
            println!("  p = {q:4}: product {prod}, 2 biquadratic: {biq}");
            shown += 1;
        }
    }
}
