//! Gauss sets E_p(s), their nonresidue counts, and the lattice counts
//! M_p(j), L_p(j) whose parities drive the triangle products.
//!
//! ```bash
//! cargo run --release -p legendre-products --example gauss_lemma
//! ```

use legendre_products::{
    gauss_set, l_set_size, legendre, m_set_size, nonresidue_count_gauss, OddPrime, SignValue,
};

fn main() {
    let p = OddPrime::new(23).unwrap();

    println!("E_{p}(s) = {{ i < p/2 : {{is}}_p > p/2 }} and Gauss's lemma (s/p) = (-1)^|E|:");
    for s in 2..=8i64 {
        let e = gauss_set(s, p).unwrap();
        let parity = if e.len() % 2 == 0 { "+1" } else { "-1" };
        println!(
            "  s = {s}: E = {:?}  (-1)^|E| = {parity}, (s/p) = {}",
            e,
            legendre(s, p)
        );
    }

    // E_p(s) and E_p(-s) partition [1, (p-1)/2]
    let mut union = gauss_set(4, p).unwrap();
    union.extend(gauss_set(-4, p).unwrap());
    union.sort_unstable();
    println!("\nE(4) and E(-4) partition [1,{}]: {:?}", p.half(), union);

    // #N_p(s) counts the nonresidues inside E_p(s)
    println!("\nnonresidue counts #N_p(s) for p = {p}:");
    for s in 2..=6i64 {
        println!("  #N_p({s}) = {}", nonresidue_count_gauss(s, p).unwrap());
    }

    // the triangle-count parities: |M_p(j)| tracks ((j-1)/p) up to p mod 8,
    // |L_p(j)| always has the parity of (p^2-1)/8
    let p = OddPrime::new(19).unwrap();
    let eps: i64 = if matches!(p.value() % 8, 1 | 3) { 1 } else { -1 };
    println!("\nlattice counts for p = {p} (p mod 8 = {}, sign {eps}):", p.value() % 8);
    println!("  j  |M|  eps*(-1)^|M|  ((j-1)/p)   |L| mod 2  (p^2-1)/8 mod 2");
    for j in 2..=10 {
        let m = m_set_size(j, p).unwrap();
        let l = l_set_size(j, p).unwrap();
        let lhs = eps * if m % 2 == 0 { 1 } else { -1 };
        let sym = legendre(j as i64 - 1, p);
        let sym_i = if sym == SignValue::PLUS { 1 } else { -1 };
        assert_eq!(lhs, sym_i);
        println!(
            "  {j:2}  {m:2}      {lhs:+}          {sym}          {}          {}",
            l % 2,
            (p.value() * p.value() - 1) / 8 % 2
        );
    }
}
