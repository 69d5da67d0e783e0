//! Class numbers h(D) of imaginary quadratic orders by exhaustive
//! reduced-form enumeration, plus the Mordell nonresidue-parity bridge.
//!
//! Enumeration is the whole point here: it is an independent combinatorial
//! oracle with no analytic convergence questions, which is what a
//! verification sweep wants on the "claimed" side of class-number identities.

use crate::arith::{jacobi, OddPrime};
use crate::error::{Error, Result};

/// A negative discriminant D = 0 or 1 (mod 4).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Discriminant(i64);

impl Discriminant {
    pub fn new(d: i64) -> Result<Self> {
        if d >= 0 || !matches!(d.rem_euclid(4), 0 | 1) {
            return Err(Error::BadDiscriminant(d));
        }
        Ok(Discriminant(d))
    }

    pub fn value(self) -> i64 {
        self.0
    }
}

/// All reduced primitive positive-definite forms (A, B, C) of discriminant D:
/// B^2 - 4AC = D, |B| <= A <= C, gcd(A,B,C) = 1, and B >= 0 whenever
/// |B| = A or A = C. Every reduced form satisfies A <= sqrt(|D|/3).
pub fn reduced_forms(d: Discriminant) -> Vec<(i64, i64, i64)> {
    let disc = d.0;
    let mut forms = Vec::new();
    let mut a = 1i64;
    while 3 * a * a <= -disc {
        for b in -a..=a {
            let num = b * b - disc;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a {
                continue;
            }
            if (b.abs() == a || a == c) && b < 0 {
                continue;
            }
            if gcd(gcd(a, b.abs()), c) != 1 {
                continue;
            }
            forms.push((a, b, c));
        }
        a += 1;
    }
    forms
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// h(D): the number of reduced primitive positive-definite forms of
/// discriminant D.
pub fn class_number(d: Discriminant) -> u64 {
    reduced_forms(d).len() as u64
}

/// h(-p) for p = 3 (mod 4).
pub fn h_neg_p(p: OddPrime) -> Result<u64> {
    if p.value() % 4 != 3 {
        return Err(Error::WrongResidueClass {
            p: p.value(),
            want: 3,
            got: (p.value() % 4) as u8,
        });
    }
    Ok(class_number(Discriminant::new(-(p.value() as i64))?))
}

/// h(-4p) for p = 1 (mod 4).
pub fn h_neg_4p(p: OddPrime) -> Result<u64> {
    if p.value() % 4 != 1 {
        return Err(Error::WrongResidueClass {
            p: p.value(),
            want: 1,
            got: (p.value() % 4) as u8,
        });
    }
    Ok(class_number(Discriminant::new(-4 * p.value() as i64)?))
}

/// Parity of the number of quadratic nonresidues in (0, p/2), for
/// p = 3 (mod 4). Equals (h(-p)+1)/2 mod 2.
pub fn mordell_parity(p: OddPrime) -> Result<u64> {
    if p.value() % 4 != 3 {
        return Err(Error::WrongResidueClass {
            p: p.value(),
            want: 3,
            got: (p.value() % 4) as u8,
        });
    }
    let pv = p.value();
    let count = (1..=p.half()).filter(|&k| jacobi(k, pv) == -1).count() as u64;
    Ok(count % 2)
}
