//! Scalar helpers: exact rationals, complex doubles, and the small
//! combinatorial quantities (factorials, binomials, powers) that the
//! trace formulas need exactly.
//!
//! Exact rationals never round. Conversions to floating point are
//! explicit ([`rat_to_f64`], [`rat_to_c64`]); nothing in this crate
//! promotes implicitly.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar used by all tensor builders and trace sums.
pub type Rat = BigRational;

/// `n` as an exact rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `num/den` as an exact rational. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Binomial coefficient `C(n, t)` for big `n`.
pub fn binomial(n: &BigInt, t: usize) -> BigInt {
    let mut num = BigInt::one();
    for i in 0..t {
        num *= n - BigInt::from(i);
    }
    num / factorial(t)
}

/// `base^exp` over big integers, `exp >= 0`.
pub fn bigint_pow(base: &BigInt, exp: usize) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// `base^exp` over rationals, allowing negative exponents.
pub fn rat_pow(base: &Rat, exp: i64) -> Rat {
    if exp >= 0 {
        let mut acc = Rat::one();
        for _ in 0..exp {
            acc *= base;
        }
        acc
    } else {
        Rat::one() / rat_pow(base, -exp)
    }
}

/// Lossy conversion of an exact rational to `f64`.
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Fall back to a quotient of truncated parts for huge values.
        let n = r.numer().to_f64().unwrap_or(f64::MAX);
        let d = r.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

/// Lossy conversion of an exact rational to a complex double.
pub fn rat_to_c64(r: &Rat) -> Complex64 {
    Complex64::new(rat_to_f64(r), 0.0)
}

/// Formats a rational as `p/q` (or just `p` when integral).
pub fn rat_display(r: &Rat) -> alloc::string::String {
    use alloc::format;
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p/q` or a plain integer as an exact rational.
pub fn rat_parse(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rat::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(Rat::from_integer(n))
    }
}

/// Max-norm of a rational vector.
pub fn rat_max_abs(v: &[Rat]) -> Rat {
    let mut best = Rat::zero();
    for x in v {
        let a = x.abs();
        if a > best {
            best = a;
        }
    }
    best
}

/// Max-norm of a complex vector.
pub fn c64_max_abs(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Componentwise `x^[p]` (entrywise power) of a complex vector.
pub fn c64_entrywise_pow(v: &[Complex64], p: u32) -> Vec<Complex64> {
    v.iter().map(|z| z.powu(p)).collect()
}
