//! Precomputed Legendre character table for one prime, with prefix products.
//!
//! Sweeps evaluate thousands of symbols per prime; a table turns each symbol
//! into an array lookup and each interval sum/product into O(1) work after an
//! O(p) build. Intended for desk-scale primes; memory is 2p bytes.

use crate::arith::{mul_mod, OddPrime};

pub struct ChiTable {
    p: u64,
    chi: Vec<i8>,
    /// pre[t] = product of chi(a) for a in [1, t]; pre[0] = 1.
    pre: Vec<i8>,
}

impl ChiTable {
    pub fn new(p: OddPrime) -> Self {
        let pv = p.value();
        let n = pv as usize;
        let mut chi = vec![-1i8; n];
        chi[0] = 0;
        for x in 1..=p.half() {
            chi[mul_mod(x, x, pv) as usize] = 1;
        }
        let mut pre = vec![1i8; n];
        for a in 1..n {
            pre[a] = pre[a - 1] * chi[a];
        }
        ChiTable { p: pv, chi, pre }
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    /// chi of a residue already reduced into [0, p-1].
    #[inline]
    pub fn chi(&self, r: u64) -> i8 {
        self.chi[r as usize]
    }

    #[inline]
    pub fn chi_i64(&self, x: i64) -> i8 {
        self.chi[x.rem_euclid(self.p as i64) as usize]
    }

    /// Product of chi over the integers in [lo, hi] (endpoints clamped to [1, p-1]).
    fn range_product(&self, lo: u64, hi: u64) -> i8 {
        let lo = lo.max(1);
        let hi = hi.min(self.p - 1);
        if lo > hi {
            return 1;
        }
        self.pre[hi as usize] * self.pre[(lo - 1) as usize]
    }

    /// Sum of chi over the integers in [lo, hi].
    fn range_sum(&self, lo: u64, hi: u64) -> i64 {
        let lo = lo.max(1);
        let hi = hi.min(self.p - 1);
        let mut s = 0i64;
        for a in lo..=hi {
            s += self.chi[a as usize] as i64;
        }
        s
    }

    /// Integers strictly between num_lo*p/den_lo and num_hi*p/den_hi.
    fn open_scaled_bounds(&self, num_lo: u64, den_lo: u64, num_hi: u64, den_hi: u64) -> (u64, u64) {
        let p = self.p as u128;
        let lo = (num_lo as u128 * p / den_lo as u128 + 1) as u64;
        let hi = ((num_hi as u128 * p - 1) / den_hi as u128) as u64;
        (lo, hi)
    }

    /// Product of chi over integers a with num_lo*p/den_lo < a < num_hi*p/den_hi.
    pub fn product_open_scaled(&self, num_lo: u64, den_lo: u64, num_hi: u64, den_hi: u64) -> i8 {
        let (lo, hi) = self.open_scaled_bounds(num_lo, den_lo, num_hi, den_hi);
        self.range_product(lo, hi)
    }

    /// Sum of chi over integers a with num_lo*p/den_lo < a < num_hi*p/den_hi.
    pub fn sum_open_scaled(&self, num_lo: u64, den_lo: u64, num_hi: u64, den_hi: u64) -> i64 {
        let (lo, hi) = self.open_scaled_bounds(num_lo, den_lo, num_hi, den_hi);
        self.range_sum(lo, hi)
    }

    /// The interval sum S_r^n = sum of chi(a) over (r-1)p/n < a < rp/n.
    pub fn s_interval(&self, r: u64, n: u64) -> i64 {
        self.sum_open_scaled(r - 1, n, r, n)
    }

    /// Product and zero-count of chi over the cyclic residue window
    /// {start, start+1, ..., start+len-1} (mod p). Zeros are skipped in the
    /// product and counted separately.
    pub(crate) fn cyclic_window(&self, start: u64, len: u64) -> (i8, u64) {
        debug_assert!(len < self.p);
        if len == 0 {
            return (1, 0);
        }
        let start = start % self.p;
        let end = start + len; // exclusive, may wrap
        if end <= self.p {
            let zeros = u64::from(start == 0);
            (self.range_product(start, end - 1), zeros)
        } else {
            // wraps: [start, p-1] then [0, end-p-1]
            let first = self.range_product(start, self.p - 1);
            let second = self.range_product(0, end - self.p - 1);
            (first * second, 1) // the wrapped window always contains 0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{legendre, OddPrime};

    #[test]
    fn table_matches_legendre() {
        for q in [5u64, 7, 11, 97, 101] {
            let p = OddPrime::new(q).unwrap();
            let t = ChiTable::new(p);
            for a in 0..q {
                assert_eq!(t.chi(a), legendre(a as i64, p).as_i8(), "p={q} a={a}");
            }
        }
    }

    #[test]
    fn window_matches_direct() {
        let p = OddPrime::new(23).unwrap();
        let t = ChiTable::new(p);
        for start in 0..23u64 {
            for len in 0..23u64 {
                let mut prod = 1i8;
                let mut zeros = 0u64;
                for k in 0..len {
                    let r = (start + k) % 23;
                    if r == 0 {
                        zeros += 1;
                    } else {
                        prod *= t.chi(r);
                    }
                }
                assert_eq!(t.cyclic_window(start, len), (prod, zeros), "start={start} len={len}");
            }
        }
    }

    #[test]
    fn scaled_bounds_match_direct() {
        let p = OddPrime::new(101).unwrap();
        let t = ChiTable::new(p);
        // S_r^n against a float-free direct filter
        for n in 1..12u64 {
            for r in 1..=n {
                let direct: i64 = (1..101u64)
                    .filter(|&a| a * n > (r - 1) * 101 && a * n < r * 101)
                    .map(|a| t.chi(a) as i64)
                    .sum();
                assert_eq!(t.s_interval(r, n), direct, "r={r} n={n}");
            }
        }
    }
}
