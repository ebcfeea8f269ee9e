//! Characteristic polynomials of dimension-2 tensors via the Sylvester
//! resultant.
//!
//! For an order-k tensor T on two variables, the eigenvalue equation
//! gives two binary forms of degree k-1 in (x_1, x_2):
//!
//! ```text
//! f_i = lambda * x_i^(k-1) - (T x)_i
//! ```
//!
//! The characteristic polynomial is their resultant: the determinant of
//! the 2(k-1) x 2(k-1) Sylvester matrix, whose entries are degree <= 1
//! polynomials in lambda. The determinant is expanded by fraction-free
//! Bareiss elimination over the exact polynomial ring, then normalized
//! monic.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Zero;

use crate::poly::{rat_poly_roots, RatPoly};
use crate::scalar::Rat;
use crate::tensor::{Tensor, TensorError};

/// `phi_T(lambda)` for a dimension-2 tensor, monic of degree 2(k-1).
pub fn charpoly_n2(t: &Tensor<Rat>) -> Result<RatPoly, TensorError> {
    if t.dim() != 2 {
        return Err(TensorError::DimensionMismatch);
    }
    if t.order() < 2 {
        return Err(TensorError::OrderTooSmall);
    }
    let m = t.order() - 1;
    // coefficient of x_1^(m-j) x_2^j in (T x)_i
    let mut c = vec![vec![Rat::zero(); m + 1]; 2];
    for (idx, v) in t.nonzeros() {
        let j = idx[1..].iter().filter(|&&a| a == 1).count();
        c[idx[0]][j] += v;
    }
    let lambda = RatPoly::monomial(Rat::from_integer(1.into()), 1);
    let form = |i: usize| -> Vec<RatPoly> {
        (0..=m)
            .map(|j| {
                let mut p = RatPoly::constant(-c[i][j].clone());
                let lead = (i == 0 && j == 0) || (i == 1 && j == m);
                if lead {
                    p = p.add(&lambda);
                }
                p
            })
            .collect()
    };
    let f1 = form(0);
    let f2 = form(1);
    let size = 2 * m;
    let mut mat = vec![vec![RatPoly::zero(); size]; size];
    for r in 0..m {
        for j in 0..=m {
            mat[r][r + j] = f1[j].clone();
            mat[m + r][r + j] = f2[j].clone();
        }
    }
    let det = poly_bareiss_det(mat);
    debug_assert_eq!(det.degree(), Some(size));
    Ok(det.monic())
}

/// Fraction-free Bareiss determinant over the polynomial ring.
fn poly_bareiss_det(mut a: Vec<Vec<RatPoly>>) -> RatPoly {
    let n = a.len();
    if n == 0 {
        return RatPoly::one();
    }
    let mut negate = false;
    let mut prev = RatPoly::one();
    for p in 0..n - 1 {
        if a[p][p].is_zero() {
            let Some(swap) = (p + 1..n).find(|&r| !a[r][p].is_zero()) else {
                return RatPoly::zero();
            };
            a.swap(p, swap);
            negate = !negate;
        }
        for i in p + 1..n {
            for j in p + 1..n {
                let v = a[i][j]
                    .mul(&a[p][p])
                    .sub(&a[i][p].mul(&a[p][j]))
                    .div_exact(&prev);
                a[i][j] = v;
            }
            a[i][p] = RatPoly::zero();
        }
        prev = a[p][p].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

/// Eigenvalues of a dimension-2 tensor with exact multiplicities, via
/// `charpoly_n2` and square-free root extraction.
pub fn spectrum_n2(
    t: &Tensor<Rat>,
    max_iter: usize,
    tol: f64,
) -> Result<Option<Vec<(Complex64, usize)>>, TensorError> {
    let phi = charpoly_n2(t)?;
    Ok(rat_poly_roots(&phi, max_iter, tol))
}
