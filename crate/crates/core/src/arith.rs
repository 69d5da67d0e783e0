//! Validated primes and scalar modular arithmetic.
//!
//! Everything downstream (region products, character sums, class-number
//! relations) reduces to the operations here: Legendre symbols, residue
//! normalizations, modular inverses and powers. All modular multiplication
//! goes through a 128-bit intermediate, so any prime below 2^62 is safe.

use crate::error::{Error, Result};

/// Largest supported modulus: intermediate products of two residues below
/// 2^62 fit in u128 with room to spare.
pub const MAX_PRIME: u64 = 1 << 62;

/// A validated odd prime p > 3, the modulus for all residue work.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OddPrime(u64);

impl OddPrime {
    pub fn new(p: u64) -> Result<Self> {
        if p <= 3 {
            return Err(Error::PrimeTooSmall(p));
        }
        if p >= MAX_PRIME {
            return Err(Error::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(OddPrime(p))
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.0
    }

    /// (p-1)/2, the number of residues in (0, p/2).
    #[inline]
    pub fn half(self) -> u64 {
        (self.0 - 1) / 2
    }
}

impl std::fmt::Display for OddPrime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Value of a Legendre symbol: -1, 0 or +1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignValue(i8);

impl SignValue {
    pub const MINUS: SignValue = SignValue(-1);
    pub const ZERO: SignValue = SignValue(0);
    pub const PLUS: SignValue = SignValue(1);

    pub fn new(v: i8) -> Option<Self> {
        matches!(v, -1..=1).then_some(SignValue(v))
    }

    #[inline]
    pub fn as_i8(self) -> i8 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl std::ops::Mul for SignValue {
    type Output = SignValue;
    fn mul(self, rhs: SignValue) -> SignValue {
        SignValue(self.0 * rhs.0)
    }
}

impl std::fmt::Display for SignValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.0 {
            1 => write!(f, "+1"),
            -1 => write!(f, "-1"),
            _ => write!(f, "0"),
        }
    }
}

/// The least positive residue w of a modular quotient v/u, i.e. the unique
/// w in [1, p-1] with w*u = v (mod p).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalResidue {
    pub numerator: i64,
    pub denominator: i64,
    pub resolved: u64,
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

#[inline]
pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b; // both < p < 2^62, no overflow
    if s >= p {
        s - p
    } else {
        s
    }
}

fn pow_mod_u64(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin primality test.
///
/// The witness set {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37} is known to be
/// exact for every n below 3.3 * 10^24, which covers the full u64 range.
/// Returns false for n < 2.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The least residue {x}_p, i.e. the representative of x mod p in [0, p-1].
pub fn least_residue(x: i64, p: OddPrime) -> u64 {
    x.rem_euclid(p.value() as i64) as u64
}

pub(crate) fn least_residue_i128(x: i128, p: u64) -> u64 {
    x.rem_euclid(p as i128) as u64
}

/// The smallest residue in absolute value, in (-p/2, p/2).
pub fn least_abs_residue(x: i64, p: OddPrime) -> i64 {
    let r = least_residue(x, p);
    if 2 * r > p.value() {
        r as i64 - p.value() as i64
    } else {
        r as i64
    }
}

/// b^e mod p by square-and-multiply.
pub fn mod_pow(b: i64, e: u64, p: OddPrime) -> u64 {
    pow_mod_u64(least_residue(b, p), e, p.value())
}

/// Inverse of a mod p. Assumes p does not divide a.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod_u64(a, p - 2, p)
}

/// Jacobi symbol (a/n) for odd n > 0, by the binary algorithm.
/// O(log^2 n); no modular exponentiation.
pub(crate) fn jacobi(a: u64, n: u64) -> i8 {
    debug_assert!(n % 2 == 1 && n > 0);
    let mut a = a % n;
    let mut n = n;
    let mut t = 1i8;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}

/// Legendre symbol (a/p): +1 for a nonzero quadratic residue, -1 for a
/// nonresidue, 0 when p | a. Computed by the binary Jacobi algorithm;
/// Euler's criterion a^((p-1)/2) is kept as the test oracle.
pub fn legendre(a: i64, p: OddPrime) -> SignValue {
    SignValue(jacobi(least_residue(a, p), p.value()))
}

/// Resolve v/u to the least positive w with w*u = v (mod p).
///
/// Rejects p | u, and also p | v: the resolved value is required to lie in
/// [1, p-1], and a zero numerator would force w = p, silently breaking any
/// Legendre-symbol argument built from it.
pub fn rational_residue(v: i64, u: i64, p: OddPrime) -> Result<RationalResidue> {
    let pv = p.value();
    let ur = least_residue(u, p);
    if ur == 0 {
        return Err(Error::DenominatorDivisible { p: pv, u });
    }
    let vr = least_residue(v, p);
    if vr == 0 {
        return Err(Error::NumeratorDivisible { p: pv, v });
    }
    let w = mul_mod(vr, inv_mod(ur, pv), pv);
    debug_assert!((1..pv).contains(&w));
    Ok(RationalResidue {
        numerator: v,
        denominator: u,
        resolved: w,
    })
}

/// Whether a is a fourth power mod p, for p = 1 (mod 4) and p not dividing a.
/// Uses the criterion a^((p-1)/4) = 1 (mod p).
pub fn is_biquadratic_residue(a: i64, p: OddPrime) -> Result<bool> {
    if p.value() % 4 != 1 {
        return Err(Error::WrongResidueClass {
            p: p.value(),
            want: 1,
            got: (p.value() % 4) as u8,
        });
    }
    if least_residue(a, p) == 0 {
        return Err(Error::SDivisible { p: p.value(), s: a });
    }
    Ok(mod_pow(a, (p.value() - 1) / 4, p) == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: u64) -> OddPrime {
        OddPrime::new(v).unwrap()
    }

    #[test]
    fn odd_prime_validation() {
        assert_eq!(OddPrime::new(2), Err(Error::PrimeTooSmall(2)));
        assert_eq!(OddPrime::new(3), Err(Error::PrimeTooSmall(3)));
        assert_eq!(OddPrime::new(9), Err(Error::NotPrime(9)));
        assert!(OddPrime::new(5).is_ok());
        assert!(OddPrime::new(MAX_PRIME + 1).is_err());
        // largest prime below 2^62 per standard tables
        assert!(OddPrime::new(4611686018427387847).is_ok());
    }

    #[test]
    fn is_prime_small() {
        assert!(is_prime(2));
        assert!(!is_prime(9));
        assert!(is_prime(97));
        assert!(!is_prime(0));
        assert!(!is_prime(1));
        let small: Vec<u64> = (2..100).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            small,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]
        );
    }

    #[test]
    fn is_prime_matches_trial_division() {
        for n in 2..5000u64 {
            let trial = (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
            assert_eq!(is_prime(n), trial, "n = {n}");
        }
    }

    #[test]
    fn is_prime_large_known() {
        assert!(is_prime(u64::MAX - 58)); // 2^64 - 59 is prime
        assert!(!is_prime(u64::MAX));
    }

    #[test]
    fn pseudoprimes_rejected() {
        // Carmichael numbers and strong pseudoprimes to small bases
        for n in [561u64, 1105, 1729, 2465, 2821, 6601, 25326001, 3215031751] {
            assert!(!is_prime(n), "n = {n}");
        }
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(1, p(7)), SignValue::PLUS);
        assert_eq!(legendre(1, p(101)), SignValue::PLUS);
        assert_eq!(legendre(14, p(7)), SignValue::ZERO);
        assert_eq!(legendre(3, p(7)), SignValue::MINUS); // 3^3 = 27 = -1 (mod 7)
        assert_eq!(legendre(2, p(7)), SignValue::PLUS); // squares mod 7: {1,2,4}
    }

    #[test]
    fn least_residue_examples() {
        assert_eq!(least_residue(10, p(7)), 3);
        assert_eq!(least_residue(-1, p(7)), 6);
        assert_eq!(least_residue(7, p(7)), 0);
    }

    #[test]
    fn least_abs_residue_examples() {
        assert_eq!(least_abs_residue(10, p(7)), 3);
        assert_eq!(least_abs_residue(4, p(7)), -3);
        assert_eq!(least_abs_residue(0, p(7)), 0);
    }

    #[test]
    fn mod_pow_examples() {
        assert_eq!(mod_pow(5, 0, p(7)), 1);
        assert_eq!(mod_pow(2, 4, p(17)), 16);
        assert_eq!(mod_pow(3, 3, p(7)), 6);
    }

    #[test]
    fn rational_residue_examples() {
        assert_eq!(rational_residue(1, 4, p(7)).unwrap().resolved, 2); // 4*2 = 8 = 1
        assert_eq!(rational_residue(3, 1, p(7)).unwrap().resolved, 3);
        // exhaustive oracle: 12w = -3 (mod 7) <=> 5w = 4, w = 5
        assert_eq!(rational_residue(-3, 12, p(7)).unwrap().resolved, 5);
        assert_eq!(
            rational_residue(1, 14, p(7)),
            Err(Error::DenominatorDivisible { p: 7, u: 14 })
        );
        assert_eq!(
            rational_residue(-7, 3, p(7)),
            Err(Error::NumeratorDivisible { p: 7, v: -7 })
        );
    }

    #[test]
    fn rational_residue_exhaustive() {
        // w*u = v (mod p) and 1 <= w <= p-1, for every p <= 100 and v,u in [1,p-1]
        for q in (5..=100).filter(|&n| is_prime(n)) {
            let pr = p(q);
            for u in 1..q as i64 {
                for v in 1..q as i64 {
                    let w = rational_residue(v, u, pr).unwrap().resolved;
                    assert!((1..q).contains(&w));
                    assert_eq!(mul_mod(w, u as u64, q), v as u64);
                }
            }
        }
    }

    #[test]
    fn biquadratic_examples() {
        assert_eq!(is_biquadratic_residue(1, p(13)), Ok(true));
        assert_eq!(is_biquadratic_residue(2, p(17)), Ok(false)); // 2^4 = 16 = -1 (mod 17)
        assert_eq!(is_biquadratic_residue(16, p(17)), Ok(true));
        assert!(matches!(
            is_biquadratic_residue(2, p(7)),
            Err(Error::WrongResidueClass { .. })
        ));
        assert!(is_biquadratic_residue(17, p(17)).is_err());
    }

    #[test]
    fn biquadratic_matches_brute_force() {
        for q in (5..200).filter(|&n| is_prime(n) && n % 4 == 1) {
            let pr = p(q);
            let fourth_powers: std::collections::HashSet<u64> =
                (1..q).map(|x| pow_mod_u64(x, 4, q)).collect();
            for a in 1..q as i64 {
                assert_eq!(
                    is_biquadratic_residue(a, pr).unwrap(),
                    fourth_powers.contains(&(a as u64)),
                    "p = {q}, a = {a}"
                );
            }
        }
    }

    #[test]
    fn euler_criterion_consistency() {
        // legendre(a,p) = a^((p-1)/2) (mod p) for all a in [1, p-1], p <= 500
        for q in (5..=500).filter(|&n| is_prime(n)) {
            let pr = p(q);
            for a in 1..q as i64 {
                let euler = mod_pow(a, (q - 1) / 2, pr);
                let sym = legendre(a, pr).as_i8();
                let euler_sign = if euler == 1 { 1 } else { -1 };
                assert_eq!(sym, euler_sign, "p = {q}, a = {a}");
            }
        }
    }

    #[test]
    fn multiplicativity_exhaustive() {
        for q in (5..=200).filter(|&n| is_prime(n)) {
            let pr = p(q);
            for a in 0..q as i64 {
                for b in 0..q as i64 {
                    assert_eq!(
                        legendre(a * b, pr),
                        legendre(a, pr) * legendre(b, pr),
                        "p = {q}, a = {a}, b = {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn periodicity_exhaustive() {
        for q in (5..=200).filter(|&n| is_prime(n)) {
            let pr = p(q);
            for a in -(q as i64)..=q as i64 {
                assert_eq!(legendre(a, pr), legendre(a + q as i64, pr), "p = {q}, a = {a}");
            }
        }
    }

    #[test]
    fn supplementary_laws() {
        for q in (5..=10_000).filter(|&n| is_prime(n)) {
            let pr = p(q);
            assert_eq!(legendre(-1, pr) == SignValue::PLUS, q % 4 == 1, "p = {q}");
            assert_eq!(
                legendre(2, pr) == SignValue::PLUS,
                q % 8 == 1 || q % 8 == 7,
                "p = {q}"
            );
        }
    }

    proptest! {
        #[test]
        fn periodicity(q in prop::sample::select(
            (5u64..=200).filter(|&n| is_prime(n)).collect::<Vec<_>>()),
            a in -200i64..=200)
        {
            let pr = p(q);
            prop_assert_eq!(legendre(a, pr), legendre(a + q as i64, pr));
        }

        #[test]
        fn legendre_of_square_nonzero(q in prop::sample::select(
            (5u64..=500).filter(|&n| is_prime(n)).collect::<Vec<_>>()),
            a in 1i64..=500)
        {
            let pr = p(q);
            prop_assume!(a % q as i64 != 0);
            prop_assert_eq!(legendre(a * a, pr), SignValue::PLUS);
        }
    }
}
