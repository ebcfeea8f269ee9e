//! Exact spectrum of a graph adjacency matrix: characteristic
//! polynomial from power-sum traces (Newton identities over rationals),
//! roots with multiplicities by square-free splitting, and numerical
//! eigenvectors from the nullspace of `A - alpha I`.

use hyperspec_core::poly::{rat_poly_roots, RatPoly};
use hyperspec_core::scalar::Rat;
use hyperspec_core::trace::charpoly_coefficients;
use hyperspec_core::Hypergraph;
use num_complex::Complex64;
use num_traits::{One, Zero};

fn adjacency_matrix(g: &Hypergraph) -> Vec<Vec<Rat>> {
    let n = g.n();
    let mut a = vec![vec![Rat::zero(); n]; n];
    for e in g.edges() {
        a[e[0]][e[1]] = Rat::one();
        a[e[1]][e[0]] = Rat::one();
    }
    a
}

fn mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = a.len();
    let mut out = vec![vec![Rat::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

fn mat_trace(a: &[Vec<Rat>]) -> Rat {
    (0..a.len()).map(|i| a[i][i].clone()).sum()
}

/// `det(lambda I - A)` of the 2-uniform adjacency matrix, exact.
pub fn adjacency_charpoly(g: &Hypergraph) -> RatPoly {
    assert_eq!(g.k(), 2, "matrix spectrum needs a 2-uniform graph");
    let a = adjacency_matrix(g);
    let n = g.n();
    let mut traces = Vec::with_capacity(n);
    let mut power = a.clone();
    for d in 1..=n {
        traces.push(mat_trace(&power));
        if d < n {
            power = mat_mul(&power, &a);
        }
    }
    let p = charpoly_coefficients(&traces);
    // lambda^n + p_1 lambda^(n-1) + ... + p_n
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    for (t, c) in p.into_iter().enumerate() {
        coeffs[n - 1 - t] = c;
    }
    RatPoly::new(coeffs)
}

/// Eigenvalues with multiplicities; real symmetric input, so complex
/// parts are root-finder noise and are dropped.
pub fn adjacency_spectrum(g: &Hypergraph, max_iter: usize, tol: f64) -> Option<Vec<(f64, usize)>> {
    let cp = adjacency_charpoly(g);
    let roots = rat_poly_roots(&cp, max_iter, tol)?;
    let mut out: Vec<(f64, usize)> = roots.into_iter().map(|(z, m)| (z.re, m)).collect();
    out.sort_by(|a, b| b.0.total_cmp(&a.0));
    Some(out)
}

/// A unit nonzero vector in the nullspace of `A - alpha I`, by Gaussian
/// elimination with partial pivoting; `None` if the matrix looks
/// nonsingular at the given threshold.
pub fn eigenvector_for(g: &Hypergraph, alpha: f64) -> Option<Vec<Complex64>> {
    let n = g.n();
    let mut m = vec![vec![0.0f64; n]; n];
    for e in g.edges() {
        m[e[0]][e[1]] = 1.0;
        m[e[1]][e[0]] = 1.0;
    }
    for (i, row) in m.iter_mut().enumerate() {
        row[i] -= alpha;
    }
    let scale = m
        .iter()
        .flat_map(|r| r.iter())
        .fold(1.0f64, |acc, v| acc.max(v.abs()));
    let eps = 1e-9 * scale;
    let mut pivot_col = vec![usize::MAX; n];
    let mut rank = 0;
    for col in 0..n {
        let Some(best) = (rank..n).max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))
        else {
            break;
        };
        if m[best][col].abs() <= eps {
            continue;
        }
        m.swap(rank, best);
        let p = m[rank][col];
        for j in 0..n {
            m[rank][j] /= p;
        }
        for i in 0..n {
            if i != rank && m[i][col].abs() > 0.0 {
                let f = m[i][col];
                for j in 0..n {
                    m[i][j] -= f * m[rank][j];
                }
            }
        }
        pivot_col[rank] = col;
        rank += 1;
    }
    if rank == n {
        return None;
    }
    // free column: the smallest column that is no pivot
    let pivots: Vec<usize> = pivot_col[..rank].to_vec();
    let free = (0..n).find(|c| !pivots.contains(c))?;
    let mut x = vec![0.0f64; n];
    x[free] = 1.0;
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = -m[r][free];
    }
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    Some(x.iter().map(|&v| Complex64::new(v / norm, 0.0)).collect())
}
