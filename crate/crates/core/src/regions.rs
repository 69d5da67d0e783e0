//! Counting sets and products of forms over lattice regions.
//!
//! Two regions recur everywhere: the triangle 0 < i < j < p/2 and the square
//! i, j in [1, (p-1)/2]. Products of Legendre symbols over these regions are
//! computed two ways: a direct O(p^2) enumeration (the oracle) and a grouped
//! path that collects the pairs on each modular ray j = i*x (mod p), whose
//! pair count reduces to a Gauss-lemma style count. Both must agree; sweeps
//! use the grouped path.

use crate::arith::{add_mod, jacobi, least_residue, mul_mod, OddPrime, SignValue};
use crate::chi::ChiTable;
use crate::error::{Error, Result};

/// Binary quadratic form f(i,j) = a*i^2 + b*ij + c*j^2.
///
/// Coefficients are used exactly as given; forms are never reduced or
/// normalized, because the identities being checked are coefficient-specific.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadraticForm {
    a: i64,
    b: i64,
    c: i64,
}

impl QuadraticForm {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        if a == 0 && b == 0 && c == 0 {
            return Err(Error::ZeroForm);
        }
        Ok(QuadraticForm { a, b, c })
    }

    /// The expanded product (m*i + n*j)(u*i + v*j).
    pub fn from_factors(m: i64, n: i64, u: i64, v: i64) -> Result<Self> {
        let a = i64::try_from(m as i128 * u as i128).map_err(|_| Error::CoefficientOverflow)?;
        let b = i64::try_from(m as i128 * v as i128 + n as i128 * u as i128)
            .map_err(|_| Error::CoefficientOverflow)?;
        let c = i64::try_from(n as i128 * v as i128).map_err(|_| Error::CoefficientOverflow)?;
        Self::new(a, b, c)
    }

    pub fn a(&self) -> i64 {
        self.a
    }
    pub fn b(&self) -> i64 {
        self.b
    }
    pub fn c(&self) -> i64 {
        self.c
    }

    /// Discriminant b^2 - 4ac.
    pub fn disc(&self) -> i128 {
        self.b as i128 * self.b as i128 - 4 * self.a as i128 * self.c as i128
    }

    /// sigma = a + b + c = f(1,1).
    pub fn sigma(&self) -> i128 {
        self.a as i128 + self.b as i128 + self.c as i128
    }

    /// Coefficients reduced mod p.
    pub(crate) fn reduced(&self, p: OddPrime) -> (u64, u64, u64) {
        (
            least_residue(self.a, p),
            least_residue(self.b, p),
            least_residue(self.c, p),
        )
    }
}

impl std::fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{},{},{}", self.a, self.b, self.c)
    }
}

/// Linear form s*i + eps*j with eps = +1 or -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinearForm {
    s: i64,
    eps: i64,
}

impl LinearForm {
    pub fn new(s: i64, eps: i64) -> Result<Self> {
        if eps != 1 && eps != -1 {
            return Err(Error::BadEps(eps));
        }
        Ok(LinearForm { s, eps })
    }

    pub fn s(&self) -> i64 {
        self.s
    }
    pub fn eps(&self) -> i64 {
        self.eps
    }
}

/// Which lattice region a product runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    /// 0 < i < j < p/2
    Triangle,
    /// i, j in [1, (p-1)/2]
    Square,
}

impl std::fmt::Display for Region {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Region::Triangle => write!(f, "triangle"),
            Region::Square => write!(f, "square"),
        }
    }
}

/// Outcome of a region product: the sign, plus how many lattice points were
/// skipped because p divided the form value (so an empty product is
/// distinguishable in reports).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegionProductResult {
    pub value: SignValue,
    pub terms_skipped: u64,
}

fn check_j(j: u64, p: OddPrime) -> Result<()> {
    if j < 2 || j > p.value() - 1 {
        return Err(Error::JOutOfRange { j, p: p.value() });
    }
    Ok(())
}

/// |{ i in [1,(p-1)/2] : i < {ij}_p < p/2 }|.
pub fn m_set_size(j: u64, p: OddPrime) -> Result<u64> {
    check_j(j, p)?;
    let pv = p.value();
    let step = j % pv;
    let mut r = 0u64;
    let mut count = 0u64;
    for i in 1..=p.half() {
        r = add_mod(r, step, pv);
        if r > i && 2 * r < pv {
            count += 1;
        }
    }
    Ok(count)
}

/// |{ i in [1,(p-1)/2] : {i(j-1)}_p < p/2 < {ij}_p }|.
pub fn l_set_size(j: u64, p: OddPrime) -> Result<u64> {
    check_j(j, p)?;
    let pv = p.value();
    let step_a = (j - 1) % pv;
    let step_b = j % pv;
    let (mut ra, mut rb) = (0u64, 0u64);
    let mut count = 0u64;
    for _ in 1..=p.half() {
        ra = add_mod(ra, step_a, pv);
        rb = add_mod(rb, step_b, pv);
        if 2 * ra < pv && 2 * rb > pv {
            count += 1;
        }
    }
    Ok(count)
}

/// The Gauss set E_p(s) = { i : 0 < i < p/2, {is}_p > p/2 }, computed from
/// the definition (never from interval prose).
pub fn gauss_set(s: i64, p: OddPrime) -> Result<Vec<u64>> {
    let pv = p.value();
    let step = least_residue(s, p);
    if step == 0 {
        return Err(Error::SDivisible { p: pv, s });
    }
    let mut r = 0u64;
    let mut set = Vec::new();
    for i in 1..=p.half() {
        r = add_mod(r, step, pv);
        if 2 * r > pv {
            set.push(i);
        }
    }
    Ok(set)
}

/// #N_p(s): the number of quadratic nonresidues in E_p(s).
pub fn nonresidue_count_gauss(s: i64, p: OddPrime) -> Result<u64> {
    let set = gauss_set(s, p)?;
    let pv = p.value();
    Ok(set.iter().filter(|&&x| jacobi(x, pv) == -1).count() as u64)
}

const TABLE_LIMIT: u64 = 1 << 24;

enum Chi<'a> {
    Table(ChiTable),
    Borrowed(&'a ChiTable),
    Direct(u64),
}

impl Chi<'_> {
    fn for_prime(p: OddPrime) -> Self {
        if p.value() <= TABLE_LIMIT {
            Chi::Table(ChiTable::new(p))
        } else {
            Chi::Direct(p.value())
        }
    }

    #[inline]
    fn chi(&self, r: u64) -> i8 {
        match self {
            Chi::Table(t) => t.chi(r),
            Chi::Borrowed(t) => t.chi(r),
            Chi::Direct(p) => jacobi(r, *p),
        }
    }
}

fn eval_form(ar: u64, br: u64, cr: u64, i: u64, j: u64, pv: u64) -> u64 {
    let t1 = mul_mod(ar, mul_mod(i, i, pv), pv);
    let t2 = mul_mod(br, mul_mod(i, j, pv), pv);
    let t3 = mul_mod(cr, mul_mod(j, j, pv), pv);
    add_mod(add_mod(t1, t2, pv), t3, pv)
}

fn product_region_with(f: &QuadraticForm, p: OddPrime, region: Region, chi: &Chi) -> RegionProductResult {
    let pv = p.value();
    let (ar, br, cr) = f.reduced(p);
    let h = p.half();
    let mut sign = 1i8;
    let mut skipped = 0u64;
    let mut visit = |i: u64, j: u64| {
        let v = eval_form(ar, br, cr, i, j, pv);
        if v == 0 {
            skipped += 1;
        } else {
            sign *= chi.chi(v);
        }
    };
    match region {
        Region::Triangle => {
            for j in 2..=h {
                for i in 1..j {
                    visit(i, j);
                }
            }
        }
        Region::Square => {
            for i in 1..=h {
                for j in 1..=h {
                    visit(i, j);
                }
            }
        }
    }
    RegionProductResult {
        value: SignValue::new(sign).unwrap(),
        terms_skipped: skipped,
    }
}

/// Product of (f(i,j)/p) over 0 < i < j < p/2, skipping p | f(i,j).
/// Direct O(p^2) enumeration; the oracle for the grouped path.
pub fn product_triangle(f: &QuadraticForm, p: OddPrime) -> RegionProductResult {
    product_region_with(f, p, Region::Triangle, &Chi::for_prime(p))
}

/// Product of (f(i,j)/p) over i, j in [1,(p-1)/2], skipping p | f(i,j).
pub fn product_square(f: &QuadraticForm, p: OddPrime) -> RegionProductResult {
    product_region_with(f, p, Region::Square, &Chi::for_prime(p))
}

/// Grouped evaluation of [`product_triangle`].
///
/// Pairs with j = i*x (mod p) all contribute (f(1,x)/p), and the number of
/// such pairs in the triangle is |M_p(x)|, whose parity is (((x-1)/p)) up to
/// the fixed sign of the residue class of p mod 8. One O(p) pass over x
/// replaces the O(p^2) pair walk; zero rays (p | f(1,x)) fall back to the
/// exact |M_p(x)| count.
pub fn product_triangle_grouped(f: &QuadraticForm, p: OddPrime) -> Result<RegionProductResult> {
    product_grouped(f, p, Region::Triangle, None)
}

/// Grouped evaluation of [`product_square`]: the pair count on the ray x is
/// (p-1)/2 - |E_p(x)|, so the parity comes from Gauss's lemma.
pub fn product_square_grouped(f: &QuadraticForm, p: OddPrime) -> Result<RegionProductResult> {
    product_grouped(f, p, Region::Square, None)
}

pub(crate) fn product_grouped(
    f: &QuadraticForm,
    p: OddPrime,
    region: Region,
    table: Option<&ChiTable>,
) -> Result<RegionProductResult> {
    let pv = p.value();
    let h = p.half();
    let (ar, br, cr) = f.reduced(p);
    if ar == 0 && br == 0 && cr == 0 {
        // every value vanishes mod p; the product is empty
        let total = match region {
            Region::Triangle => h * (h - 1) / 2,
            Region::Square => h * h,
        };
        return Ok(RegionProductResult {
            value: SignValue::PLUS,
            terms_skipped: total,
        });
    }
    let chi = match table {
        Some(t) => Chi::Borrowed(t),
        None => Chi::for_prime(p),
    };
    // sign contributed by a ray with (f(1,x)/p) = -1
    let mut sign = 1i8;
    let mut skipped = 0u64;
    let eps8 = if matches!(pv % 8, 1 | 3) { 1i8 } else { -1i8 };
    let xs = match region {
        Region::Triangle => 2..pv,
        Region::Square => 1..pv,
    };
    for x in xs {
        let fx = eval_form(ar, br, cr, 1, x, pv);
        if fx == 0 {
            skipped += match region {
                Region::Triangle => m_set_size(x, p)?,
                Region::Square => h - gauss_count(x, p),
            };
        } else if chi.chi(fx) == -1 {
            sign *= match region {
                // (-1)^{|M_p(x)|} = eps8 * ((x-1)/p)
                Region::Triangle => eps8 * chi.chi(x - 1),
                // (-1)^{(p-1)/2 - |E_p(x)|} = ((-x)/p)
                Region::Square => chi.chi(pv - x),
            };
        }
    }
    Ok(RegionProductResult {
        value: SignValue::new(sign).unwrap(),
        terms_skipped: skipped,
    })
}

/// |E_p(s)| for s already reduced into [1, p-1].
fn gauss_count(s: u64, p: OddPrime) -> u64 {
    let pv = p.value();
    let mut r = 0u64;
    let mut count = 0u64;
    for _ in 1..=p.half() {
        r = add_mod(r, s, pv);
        if 2 * r > pv {
            count += 1;
        }
    }
    count
}

/// Product of ((s*i + eps*j)/p) over the square, skipping p | s*i + eps*j.
/// Direct O(p^2) enumeration.
pub fn product_linear_square(l: &LinearForm, p: OddPrime) -> RegionProductResult {
    let pv = p.value();
    let chi = Chi::for_prime(p);
    let sr = least_residue(l.s, p);
    let h = p.half();
    let mut sign = 1i8;
    let mut skipped = 0u64;
    for i in 1..=h {
        let base = mul_mod(sr, i, pv);
        for j in 1..=h {
            let v = if l.eps == 1 {
                add_mod(base, j, pv)
            } else {
                add_mod(base, pv - j, pv)
            };
            if v == 0 {
                skipped += 1;
            } else {
                sign *= chi.chi(v);
            }
        }
    }
    RegionProductResult {
        value: SignValue::new(sign).unwrap(),
        terms_skipped: skipped,
    }
}

/// Row-interval evaluation of [`product_linear_square`]: for fixed i the
/// values s*i + eps*j run over a contiguous residue window of length (p-1)/2,
/// so each row is two prefix-product lookups. O(p) after the table build.
pub fn product_linear_square_fast(l: &LinearForm, p: OddPrime) -> RegionProductResult {
    let table = ChiTable::new(p);
    product_linear_square_with(l, p, &table)
}

pub(crate) fn product_linear_square_with(
    l: &LinearForm,
    p: OddPrime,
    table: &ChiTable,
) -> RegionProductResult {
    let pv = p.value();
    let sr = least_residue(l.s, p);
    let h = p.half();
    let mut sign = 1i8;
    let mut skipped = 0u64;
    for i in 1..=h {
        let base = mul_mod(sr, i, pv);
        let start = if l.eps == 1 {
            add_mod(base, 1, pv)
        } else {
            add_mod(base, pv - h, pv)
        };
        let (s, z) = table.cyclic_window(start, h);
        sign *= s;
        skipped += z;
    }
    RegionProductResult {
        value: SignValue::new(sign).unwrap(),
        terms_skipped: skipped,
    }
}

/// Product of the values f(i,j) mod p over the triangle, skipping p | f(i,j).
pub fn value_product_triangle(f: &QuadraticForm, p: OddPrime) -> u64 {
    value_product(f, p, Region::Triangle)
}

/// Product of the values f(i,j) mod p over the square, skipping p | f(i,j).
pub fn value_product_square(f: &QuadraticForm, p: OddPrime) -> u64 {
    value_product(f, p, Region::Square)
}

fn value_product(f: &QuadraticForm, p: OddPrime, region: Region) -> u64 {
    let pv = p.value();
    let (ar, br, cr) = f.reduced(p);
    let h = p.half();
    let mut acc = 1u64;
    let mut visit = |i: u64, j: u64| {
        let v = eval_form(ar, br, cr, i, j, pv);
        if v != 0 {
            acc = mul_mod(acc, v, pv);
        }
    };
    match region {
        Region::Triangle => {
            for j in 2..=h {
                for i in 1..j {
                    visit(i, j);
                }
            }
        }
        Region::Square => {
            for i in 1..=h {
                for j in 1..=h {
                    visit(i, j);
                }
            }
        }
    }
    acc
}

/// |{ i in [1,(p-1)/2] : {ij}_p < {ij}_p + i < p/2 }| (upper-left triangle count).
pub fn count_upper_left(j: u64, p: OddPrime) -> Result<u64> {
    check_j(j, p)?;
    let pv = p.value();
    let step = j % pv;
    let mut r = 0u64;
    let mut count = 0u64;
    for i in 1..=p.half() {
        r = add_mod(r, step, pv);
        if r < r + i && 2 * (r + i) < pv {
            count += 1;
        }
    }
    Ok(count)
}

/// |{ i in [1,(p-1)/2] : 2i < {ij}_p }| (upper-right of (0,p/2) x (0,p) count).
pub fn count_double(j: u64, p: OddPrime) -> Result<u64> {
    check_j(j, p)?;
    let pv = p.value();
    let step = j % pv;
    let mut r = 0u64;
    let mut count = 0u64;
    for i in 1..=p.half() {
        r = add_mod(r, step, pv);
        if 2 * i < r {
            count += 1;
        }
    }
    Ok(count)
}
