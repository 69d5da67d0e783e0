//! Complete character sums F_p(a_1,...,a_r), the shift parameters that tie a
//! form's region product to F_p(0,1,k) mod 16, transformation identities,
//! and partial sums/products over rational subintervals.
//!
//! ```bash
//! cargo run --release -p legendre-products --example char_sums
//! ```

use legendre_products::{
    char_sum, f_transform_check, interval_sum, legendre_product_interval, shift_param_k,
    shift_param_kprime, Fraction, OddPrime, ProperInterval, QuadraticForm, ShiftList,
};

fn main() {
    let p = OddPrime::new(97).unwrap();

    println!("complete sums F_p(a_1,...,a_r) at p = {p}:");
    for shifts in [vec![0i64], vec![0, 1], vec![0, 1, 2], vec![0, 1, 5]] {
        let sl = ShiftList::new(shifts).unwrap();
        println!("  F_p({sl}) = {}", char_sum(&sl, p).unwrap());
    }

    // every region product of a quadratic form is governed by one residue:
    // F_p(0,1,k) mod 16 with k = -disc/(4 c sigma) (triangle) or b^2/(4ac)
    // (square)
    println!("\nshift parameters:");
    for (a, b, c) in [(1, 1, 1), (1, 0, 1), (1, -1, -1)] {
        let f = QuadraticForm::new(a, b, c).unwrap();
        let k = shift_param_k(&f, p).unwrap();
        let kp = shift_param_kprime(&f, p).unwrap();
        let fk = char_sum(&ShiftList::new(vec![0, 1, k as i64]).unwrap(), p).unwrap();
        println!(
            "  f = ({a},{b},{c}): k = {k}, k' = {kp}, F_p(0,1,k) = {fk} (= {} mod 16)",
            fk.rem_euclid(16)
        );
    }

    // the three transformation identities for F_p(0,1,m), checked numerically
    println!("\ntransformation checks at p = {p}:");
    for m in [2i64, 3, 10, 45] {
        let t = f_transform_check(m, 1, p).unwrap();
        println!(
            "  m = {m:2}: reflection {}, square shift {}, Jacobsthal bridge {}",
            t.reflection, t.square_shift, t.jacobsthal_bridge
        );
        assert!(t.all());
    }

    // partial sums S_r^n over ((r-1)p/n, rp/n) always total zero
    let p = OddPrime::new(43).unwrap();
    println!("\ninterval sums S_r^4 at p = {p}:");
    let mut total = 0;
    for r in 1..=4 {
        let s = interval_sum(ProperInterval::new(r, 4).unwrap(), p).unwrap();
        total += s;
        println!("  S_{r}^4 = {s}");
    }
    assert_eq!(total, 0);

    // and interval products of Legendre symbols over fractions of p
    println!("\ninterval products at p = {p}:");
    for (lo, hi) in [("0", "1/4"), ("1/4", "1/2"), ("0", "1/2"), ("1/3", "1/2")] {
        let v = legendre_product_interval(lo.parse::<Fraction>().unwrap(), hi.parse().unwrap(), p)
            .unwrap();
        println!("  product over ({lo}, {hi}) of p: {v}");
    }
}
