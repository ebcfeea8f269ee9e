//! Univariate polynomials with exact rational coefficients, plus a
//! Durand-Kerner root finder on the complex doubles side.
//!
//! Coefficients are stored low-to-high with a nonzero leading
//! coefficient (the zero polynomial is the empty vector). Exactness is
//! load-bearing: square-free decomposition over the rationals turns
//! multiple roots into simple roots of exactly known multiplicity, so
//! the iterative root finder only ever sees well-conditioned inputs.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::scalar::{rat_to_c64, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    /// Builds from low-to-high coefficients, trimming leading zeros.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    /// The monomial `c x^d`.
    pub fn monomial(c: Rat, d: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); d + 1];
        coeffs[d] = c;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_c(&self, x: Complex64) -> Complex64 {
        let mut acc = Complex64::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + rat_to_c64(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rat::from_integer(i.into()))
            .collect();
        Self::new(coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero);
                let b = other.coeffs.get(i).cloned().unwrap_or_else(Rat::zero);
                a + b
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division: `self = q * div + r` with deg r < deg div.
    pub fn div_rem(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "division by the zero polynomial");
        let dd = div.degree().unwrap();
        let lead = div.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![Rat::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let f = &rem[i] / lead;
            if f.is_zero() {
                continue;
            }
            for (j, c) in div.coeffs.iter().enumerate() {
                let pos = i - dd + j;
                rem[pos] -= &f * c;
            }
            q[i - dd] = f;
        }
        (Self::new(q), Self::new(rem))
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn div_exact(&self, div: &Self) -> Self {
        let (q, r) = self.div_rem(div);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor (1 for coprime inputs).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Divides out the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let inv = Rat::one() / l;
                self.scale(&inv)
            }
        }
    }

    /// Yun square-free decomposition: returns `(g_i, i)` with
    /// `self = lc * prod g_i^i`, each `g_i` monic and square-free.
    pub fn square_free_factors(&self) -> Vec<(Self, usize)> {
        let p = self.monic();
        let Some(deg) = p.degree() else {
            return Vec::new();
        };
        if deg == 0 {
            return Vec::new();
        }
        let dp = p.derivative();
        let a0 = p.gcd(&dp);
        let mut b = p.div_exact(&a0);
        let mut d = dp.div_exact(&a0).sub(&b.derivative());
        let mut out = Vec::new();
        let mut i = 1;
        while b.degree() != Some(0) {
            let ai = b.gcd(&d);
            if ai.degree() != Some(0) {
                out.push((ai.clone(), i));
            }
            b = b.div_exact(&ai);
            let c = d.div_exact(&ai);
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }
}

/// Durand-Kerner on a complex-coefficient polynomial given low-to-high.
/// Deterministic spiral seeds on the Cauchy-bound circle; stops when
/// every residual is at most `tol * (1 + |coeff| sum)`. `None` when the
/// iteration fails to settle within `max_iter`.
pub fn durand_kerner(
    coeffs: &[Complex64],
    max_iter: usize,
    tol: f64,
) -> Option<Vec<Complex64>> {
    let mut c = coeffs.to_vec();
    while c.last().is_some_and(|z| z.norm() == 0.0) {
        c.pop();
    }
    let deg = c.len().checked_sub(1)?;
    if deg == 0 {
        return Some(Vec::new());
    }
    let lead = *c.last().unwrap();
    for z in c.iter_mut() {
        *z /= lead;
    }
    let scale: f64 = 1.0 + c.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let eval = |x: Complex64| -> Complex64 {
        let mut acc = Complex64::zero();
        for z in c.iter().rev() {
            acc = acc * x + z;
        }
        acc
    };
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..deg)
        .map(|j| Complex64::new(scale, 0.0) * seed.powu(j as u32 + 1))
        .collect();
    for _ in 0..max_iter {
        let mut moved = 0.0f64;
        for j in 0..deg {
            let mut denom = Complex64::one();
            for i in 0..deg {
                if i != j {
                    denom *= roots[j] - roots[i];
                }
            }
            if denom.norm() == 0.0 {
                // coincident iterates: nudge deterministically
                roots[j] += Complex64::new(1e-6, 1e-6);
                continue;
            }
            let delta = eval(roots[j]) / denom;
            roots[j] -= delta;
            moved = moved.max(delta.norm());
        }
        if moved <= 1e-15 * scale {
            break;
        }
    }
    let bound = tol * (1.0 + c.iter().map(|z| z.norm()).sum::<f64>());
    if roots.iter().all(|&r| eval(r).norm() <= bound) {
        Some(roots)
    } else {
        None
    }
}

/// All complex roots of an exact polynomial with multiplicities:
/// square-free decomposition first, Durand-Kerner on each (simple-root)
/// factor after. Multiplicities are exact by construction.
pub fn rat_poly_roots(
    p: &RatPoly,
    max_iter: usize,
    tol: f64,
) -> Option<Vec<(Complex64, usize)>> {
    let mut out = Vec::new();
    for (factor, mult) in p.square_free_factors() {
        let coeffs: Vec<Complex64> = factor.coeffs().iter().map(rat_to_c64).collect();
        for root in durand_kerner(&coeffs, max_iter, tol)? {
            out.push((root, mult));
        }
    }
    Some(out)
}
