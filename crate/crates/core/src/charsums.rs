//! Complete character sums F_p(a_1,...,a_r), the shift parameters that link
//! region products to them, transformation identities between the sums, and
//! partial sums/products over rational subintervals of (0, p).

use crate::arith::{inv_mod, jacobi, least_residue, least_residue_i128, mul_mod, OddPrime, SignValue};
use crate::chi::ChiTable;
use crate::error::{Error, Result};
use crate::regions::QuadraticForm;

/// Shifts a_1,...,a_r of a complete character sum. Must be nonempty;
/// pairwise incongruence mod p is checked where a prime is supplied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftList(Vec<i64>);

impl ShiftList {
    pub fn new(shifts: Vec<i64>) -> Result<Self> {
        if shifts.is_empty() {
            return Err(Error::EmptyShiftList);
        }
        Ok(ShiftList(shifts))
    }

    pub fn shifts(&self) -> &[i64] {
        &self.0
    }

    /// Residues of the shifts mod p, erroring on a congruent pair.
    fn reduced_distinct(&self, p: OddPrime) -> Result<Vec<u64>> {
        let mut seen = std::collections::HashMap::new();
        let mut out = Vec::with_capacity(self.0.len());
        for &a in &self.0 {
            let r = least_residue(a, p);
            if let Some(&prev) = seen.get(&r) {
                return Err(Error::DuplicateShift { a: prev, b: a, p: p.value() });
            }
            seen.insert(r, a);
            out.push(r);
        }
        Ok(out)
    }
}

impl std::fmt::Display for ShiftList {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// F_p(a_1,...,a_r) = sum over y = 1..p of ((y+a_1)...(y+a_r)/p).
/// The term y = p carries the residue class y = 0.
pub fn char_sum(shifts: &ShiftList, p: OddPrime) -> Result<i64> {
    let reduced = shifts.reduced_distinct(p)?;
    Ok(char_sum_reduced(&reduced, p.value(), None))
}

/// Same sum, shifts already reduced, duplicates permitted (the product
/// formula is still well defined with repeated factors). Used by the sweep
/// engine, where a degenerate shift parameter must still yield a class key.
pub(crate) fn char_sum_reduced(shifts: &[u64], p: u64, table: Option<&ChiTable>) -> i64 {
    let mut total = 0i64;
    for y in 1..=p {
        let mut v = 1u64;
        for &a in shifts {
            let t = if y + a >= p { y + a - p } else { y + a };
            v = mul_mod(v, t, p);
        }
        total += match table {
            Some(t) => t.chi(v) as i64,
            None => jacobi(v, p) as i64,
        };
    }
    total
}

/// Shift parameter for triangle products: k = -disc / (4 c sigma) mod p.
/// Requires p not dividing c*sigma.
pub fn shift_param_k(f: &QuadraticForm, p: OddPrime) -> Result<u64> {
    let pv = p.value();
    let c = least_residue_i128(f.c() as i128, pv);
    let sigma = least_residue_i128(f.sigma(), pv);
    if c == 0 || sigma == 0 {
        return Err(Error::BadFormModulus { p: pv, what: "c*sigma" });
    }
    let den = mul_mod(mul_mod(4 % pv, c, pv), sigma, pv);
    let num = least_residue_i128(-f.disc(), pv);
    Ok(mul_mod(num, inv_mod(den, pv), pv))
}

/// Shift parameter for square products: k' = b^2 / (4ac) mod p.
/// Requires p not dividing a*c.
pub fn shift_param_kprime(f: &QuadraticForm, p: OddPrime) -> Result<u64> {
    let pv = p.value();
    let a = least_residue_i128(f.a() as i128, pv);
    let c = least_residue_i128(f.c() as i128, pv);
    if a == 0 || c == 0 {
        return Err(Error::BadFormModulus { p: pv, what: "a*c" });
    }
    let den = mul_mod(mul_mod(4 % pv, a, pv), c, pv);
    let b = least_residue_i128(f.b() as i128, pv);
    Ok(mul_mod(mul_mod(b, b, pv), inv_mod(den, pv), pv))
}

/// Outcome of the three transformation checks for F_p(0,1,m).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TransformCheck {
    /// F_p(0,1,m) = (m/p) F_p(0,1,1/m) = (-1/p) F_p(0,1,1-m)
    pub reflection: bool,
    /// F_p(0,1,m^2) = (m/p) F_p(0,1,(m+1)^2/4m)
    pub square_shift: bool,
    /// sum_{y=0}^{p-1} ((y^2+n)/p)((y^2+nm)/p) = -1 + (n/p) F_p(0,1,m)
    pub jacobsthal_bridge: bool,
}

impl TransformCheck {
    pub fn all(&self) -> bool {
        self.reflection && self.square_shift && self.jacobsthal_bridge
    }
}

/// Check the three F_p(0,1,m) transformation identities numerically.
///
/// Degenerate cases m = 0, 1, -1 (mod p), where a transformed shift collides
/// with 0 or 1, are reported as an error rather than asserted. Requires
/// p not dividing n for the third identity.
pub fn f_transform_check(m: i64, n: i64, p: OddPrime) -> Result<TransformCheck> {
    let pv = p.value();
    let mr = least_residue(m, p);
    if mr == 0 || mr == 1 || mr == pv - 1 {
        return Err(Error::DegenerateShift { m, p: pv });
    }
    let nr = least_residue(n, p);
    if nr == 0 {
        return Err(Error::SDivisible { p: pv, s: n });
    }
    let table = ChiTable::new(p);
    let chi = |r: u64| table.chi(r) as i64;
    let f = |k: u64| char_sum_reduced(&[0, 1, k], pv, Some(&table));

    let fm = f(mr);
    let inv_m = inv_mod(mr, pv);
    let one_minus_m = (1 + pv - mr) % pv;
    let reflection = fm == chi(mr) * f(inv_m) && fm == chi(pv - 1) * f(one_minus_m);

    let m_sq = mul_mod(mr, mr, pv);
    let arg = mul_mod(
        mul_mod((mr + 1) % pv, (mr + 1) % pv, pv),
        inv_mod(mul_mod(4 % pv, mr, pv), pv),
        pv,
    );
    let square_shift = f(m_sq) == chi(mr) * f(arg);

    let nm = mul_mod(nr, mr, pv);
    let mut lhs = 0i64;
    for y in 0..pv {
        let y2 = mul_mod(y, y, pv);
        let t1 = (y2 + nr) % pv;
        let t2 = (y2 + nm) % pv;
        lhs += chi(t1) * chi(t2);
    }
    let jacobsthal_bridge = lhs == -1 + chi(nr) * fm;

    Ok(TransformCheck { reflection, square_shift, jacobsthal_bridge })
}

/// Index (r, n) of the open interval ((r-1)p/n, rp/n).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProperInterval {
    r: u64,
    n: u64,
}

impl ProperInterval {
    pub fn new(r: u64, n: u64) -> Result<Self> {
        if r < 1 || r > n {
            return Err(Error::BadIntervalIndex { r, n });
        }
        Ok(ProperInterval { r, n })
    }

    pub fn r(&self) -> u64 {
        self.r
    }
    pub fn n(&self) -> u64 {
        self.n
    }
}

/// S_r^n = sum of (a/p) over integers a in ((r-1)p/n, rp/n). Requires n < p.
pub fn interval_sum(iv: ProperInterval, p: OddPrime) -> Result<i64> {
    let pv = p.value();
    if iv.n >= pv {
        return Err(Error::BadSubdivision { n: iv.n, p: pv });
    }
    let lo = (iv.r - 1) as u128 * pv as u128 / iv.n as u128 + 1;
    let hi = (iv.r as u128 * pv as u128 - 1) / iv.n as u128;
    let mut total = 0i64;
    for a in lo as u64..=hi as u64 {
        total += jacobi(a % pv, pv) as i64;
    }
    Ok(total)
}

/// A fraction num/den in [0, 1], an endpoint of a subinterval of (0, p).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fraction {
    num: u64,
    den: u64,
}

impl Fraction {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 || num > den {
            return Err(Error::BadFraction { num, den });
        }
        Ok(Fraction { num, den })
    }

    pub fn num(&self) -> u64 {
        self.num
    }
    pub fn den(&self) -> u64 {
        self.den
    }

    fn less_than(&self, other: &Fraction) -> bool {
        (self.num as u128) * (other.den as u128) < (other.num as u128) * (self.den as u128)
    }
}

impl std::fmt::Display for Fraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl std::str::FromStr for Fraction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = Error::BadFraction { num: 0, den: 0 };
        if let Some((n, d)) = s.split_once('/') {
            let num = n.trim().parse().map_err(|_| bad.clone())?;
            let den = d.trim().parse().map_err(|_| bad.clone())?;
            Fraction::new(num, den)
        } else {
            let num: u64 = s.trim().parse().map_err(|_| bad)?;
            Fraction::new(num, 1)
        }
    }
}

/// Product of (a/p) over the integers a in (lo*p, hi*p), for fractions
/// 0 <= lo < hi <= 1 of p. The empty product is +1; no integer in the range
/// is divisible by p, so the result is never 0.
pub fn legendre_product_interval(lo: Fraction, hi: Fraction, p: OddPrime) -> Result<SignValue> {
    if !lo.less_than(&hi) {
        return Err(Error::EmptyInterval);
    }
    let pv = p.value();
    let start = lo.num as u128 * pv as u128 / lo.den as u128 + 1;
    let end = (hi.num as u128 * pv as u128 - 1) / hi.den as u128;
    let mut sign = 1i8;
    for a in start as u64..=end as u64 {
        sign *= jacobi(a, pv);
    }
    Ok(SignValue::new(sign).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::is_prime;
    use proptest::prelude::*;

    fn p(v: u64) -> OddPrime {
        OddPrime::new(v).unwrap()
    }

    fn sl(v: &[i64]) -> ShiftList {
        ShiftList::new(v.to_vec()).unwrap()
    }

    fn qf(a: i64, b: i64, c: i64) -> QuadraticForm {
        QuadraticForm::new(a, b, c).unwrap()
    }

    #[test]
    fn char_sum_examples() {
        assert_eq!(char_sum(&sl(&[0]), p(7)).unwrap(), 0);
        assert_eq!(char_sum(&sl(&[0]), p(97)).unwrap(), 0);
        assert_eq!(char_sum(&sl(&[0, 1, 2]), p(5)).unwrap(), 2);
        assert_eq!(char_sum(&sl(&[0, 1, 2]), p(7)).unwrap(), 0);
        assert_eq!(char_sum(&sl(&[0, 1]), p(5)).unwrap(), -1);
        assert!(matches!(
            char_sum(&sl(&[0, 5]), p(5)),
            Err(Error::DuplicateShift { .. })
        ));
    }

    #[test]
    fn two_shift_sum_is_minus_one() {
        // complete sum of ((y)(y+a)/p) is -1 for any a not divisible by p
        for q in (5..=200u64).filter(|&n| is_prime(n)) {
            let pr = p(q);
            for a in 1..q.min(20) {
                assert_eq!(char_sum(&sl(&[0, a as i64]), pr).unwrap(), -1, "p={q} a={a}");
            }
        }
    }

    #[test]
    fn shift_param_examples() {
        assert_eq!(shift_param_k(&qf(1, 1, 1), p(7)).unwrap(), 2);
        assert_eq!(shift_param_k(&qf(1, 0, 1), p(5)).unwrap(), 3);
        assert!(matches!(
            shift_param_k(&qf(1, 1, -2), p(7)), // sigma = 0
            Err(Error::BadFormModulus { .. })
        ));
        assert_eq!(shift_param_kprime(&qf(1, 1, 1), p(7)).unwrap(), 2);
        assert_eq!(shift_param_kprime(&qf(1, 0, 1), p(7)).unwrap(), 0);
        assert_eq!(shift_param_kprime(&qf(1, -1, -1), p(11)).unwrap(), 8);
    }

    #[test]
    fn transform_examples() {
        let t = f_transform_check(2, 1, p(7)).unwrap();
        assert!(t.all());
        let t = f_transform_check(4, 1, p(11)).unwrap();
        assert!(t.all());
        assert!(matches!(
            f_transform_check(8, 1, p(7)),
            Err(Error::DegenerateShift { .. })
        ));
        assert!(matches!(
            f_transform_check(-1, 1, p(7)),
            Err(Error::DegenerateShift { .. })
        ));
    }

    #[test]
    fn transform_small_exhaustive() {
        for q in (5..=100u64).filter(|&n| is_prime(n)) {
            let pr = p(q);
            let nr = (2..q).find(|&x| jacobi(x, q) == -1).unwrap() as i64;
            for m in 2..q as i64 - 1 {
                for n in [1, nr] {
                    let t = f_transform_check(m, n, pr).unwrap();
                    assert!(t.all(), "p={q} m={m} n={n} -> {t:?}");
                }
            }
        }
    }

    #[test]
    fn interval_sum_examples() {
        assert_eq!(interval_sum(ProperInterval::new(1, 4).unwrap(), p(11)).unwrap(), 0);
        assert_eq!(interval_sum(ProperInterval::new(1, 2).unwrap(), p(7)).unwrap(), 1);
        assert_eq!(interval_sum(ProperInterval::new(1, 1).unwrap(), p(13)).unwrap(), 0);
        assert!(ProperInterval::new(3, 2).is_err());
        assert!(interval_sum(ProperInterval::new(2, 7).unwrap(), p(7)).is_err());
    }

    #[test]
    fn interval_sums_cover_complete_sum() {
        // S_1^n + ... + S_n^n = 0 for n < p
        for q in (5..=300u64).filter(|&n| is_prime(n)) {
            let pr = p(q);
            for n in 1..=12u64.min(q - 1) {
                let total: i64 = (1..=n)
                    .map(|r| interval_sum(ProperInterval::new(r, n).unwrap(), pr).unwrap())
                    .sum();
                assert_eq!(total, 0, "p={q} n={n}");
            }
        }
    }

    #[test]
    fn product_interval_examples() {
        let f = |n, d| Fraction::new(n, d).unwrap();
        assert_eq!(
            legendre_product_interval(f(0, 1), f(1, 2), p(7)).unwrap(),
            SignValue::MINUS
        );
        assert_eq!(
            legendre_product_interval(f(1, 4), f(1, 2), p(5)).unwrap(),
            SignValue::MINUS
        );
        assert_eq!(
            legendre_product_interval(f(0, 1), f(1, 8), p(11)).unwrap(),
            SignValue::PLUS
        );
        assert!(legendre_product_interval(f(1, 2), f(1, 2), p(7)).is_err());
    }

    #[test]
    fn fraction_parsing() {
        assert_eq!("1/4".parse::<Fraction>().unwrap(), Fraction::new(1, 4).unwrap());
        assert_eq!("0".parse::<Fraction>().unwrap(), Fraction::new(0, 1).unwrap());
        assert_eq!("1".parse::<Fraction>().unwrap(), Fraction::new(1, 1).unwrap());
        assert!("5/4".parse::<Fraction>().is_err());
        assert!("x".parse::<Fraction>().is_err());
    }

    fn small_primes() -> Vec<u64> {
        (5u64..=500).filter(|&n| is_prime(n)).collect()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        // substituting y -> y - t permutes a complete residue system
        #[test]
        fn shift_invariance(
            q in prop::sample::select(small_primes()),
            base in proptest::collection::vec(-50i64..=50, 1..=3),
            t in -100i64..=100)
        {
            let pr = p(q);
            let distinct = {
                let mut rs: Vec<u64> = base.iter().map(|&a| least_residue(a, pr)).collect();
                rs.sort_unstable();
                rs.dedup();
                rs.len() == base.len()
            };
            prop_assume!(distinct);
            let shifted: Vec<i64> = base.iter().map(|&a| a + t).collect();
            prop_assert_eq!(
                char_sum(&ShiftList::new(base).unwrap(), pr).unwrap(),
                char_sum(&ShiftList::new(shifted).unwrap(), pr).unwrap()
            );
        }

        // scaling all shifts by c multiplies the sum by (c/p)^r
        #[test]
        fn scaling_covariance(
            q in prop::sample::select(small_primes()),
            base in proptest::collection::vec(-50i64..=50, 1..=3),
            c in 1i64..=100)
        {
            let pr = p(q);
            prop_assume!(c % q as i64 != 0);
            let distinct = {
                let mut rs: Vec<u64> = base.iter().map(|&a| least_residue(a, pr)).collect();
                rs.sort_unstable();
                rs.dedup();
                rs.len() == base.len()
            };
            prop_assume!(distinct);
            let scaled: Vec<i64> = base.iter().map(|&a| a * c).collect();
            let r = base.len() as u32;
            let factor = (jacobi(least_residue(c, pr), q) as i64).pow(r);
            prop_assert_eq!(
                char_sum(&ShiftList::new(scaled).unwrap(), pr).unwrap(),
                factor * char_sum(&ShiftList::new(base).unwrap(), pr).unwrap()
            );
        }
    }
}
