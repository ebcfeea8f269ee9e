//! Linear systems over Z_k for composite k.
//!
//! `A x = b (mod k)` is solved by factoring k into prime powers,
//! Gaussian elimination mod each prime, Hensel-style lifting to prime
//! powers (the lift condition is itself linear over GF(p), so no
//! search is needed), and a CRT merge.

use alloc::vec;
use alloc::vec::Vec;

/// All solutions mod m, as a particular solution plus integer-span
/// generators of the solution-difference set.
#[derive(Debug, Clone)]
pub struct ModSolution {
    pub particular: Vec<u64>,
    pub kernel: Vec<Vec<u64>>,
}

fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            let mut a = 0;
            while m % p == 0 {
                m /= p;
                a += 1;
            }
            out.push((p, a));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

fn inv_mod_p(a: u64, p: u64) -> u64 {
    // Fermat; p prime, a != 0 mod p.
    let mut base = a % p;
    let mut e = p - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Gauss-Jordan over GF(p). Rows are dense `u64` entries (reduced mod p
/// internally). Returns a particular solution and a kernel basis.
pub fn gauss_mod_p(rows: &[Vec<u64>], rhs: &[u64], nvars: usize, p: u64) -> Option<ModSolution> {
    let m = rows.len();
    let mut a: Vec<Vec<u64>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, &b)| {
            let mut row: Vec<u64> = r.iter().map(|&x| x % p).collect();
            assert_eq!(row.len(), nvars);
            row.push(b % p);
            row
        })
        .collect();
    let mut pivot_col = Vec::new();
    let mut rank = 0;
    for col in 0..nvars {
        let Some(pr) = (rank..m).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pr);
        let inv = inv_mod_p(a[rank][col], p);
        for x in a[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..m {
            if r != rank && a[r][col] != 0 {
                let f = a[r][col];
                for c in 0..=nvars {
                    a[r][c] = (a[r][c] + (p - f % p) * a[rank][c]) % p;
                }
            }
        }
        pivot_col.push(col);
        rank += 1;
    }
    if a[rank..].iter().any(|r| r[nvars] != 0) {
        return None;
    }
    let mut particular = vec![0u64; nvars];
    for (r, &col) in pivot_col.iter().enumerate() {
        particular[col] = a[r][nvars];
    }
    let mut is_pivot = vec![false; nvars];
    for &c in &pivot_col {
        is_pivot[c] = true;
    }
    let mut kernel = Vec::new();
    for free in 0..nvars {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![0u64; nvars];
        v[free] = 1;
        for (r, &col) in pivot_col.iter().enumerate() {
            v[col] = (p - a[r][free]) % p;
        }
        kernel.push(v);
    }
    Some(ModSolution { particular, kernel })
}

/// Solves `A x = b (mod p^a)` by lifting a GF(p) solution one p-adic
/// digit at a time. At each level the digit condition is a linear
/// GF(p) system in the kernel coefficients and the new digit.
fn solve_prime_power(
    rows: &[Vec<u64>],
    rhs: &[u64],
    nvars: usize,
    p: u64,
    a: u32,
) -> Option<ModSolution> {
    if a == 1 {
        return gauss_mod_p(rows, rhs, nvars, p);
    }
    let prev = solve_prime_power(rows, rhs, nvars, p, a - 1)?;
    let q: u64 = p.pow(a - 1); // modulus already solved
    let big_q: u64 = q * p; // target modulus
    let m = rows.len();
    let r = prev.kernel.len();

    // Integer residuals divided by q, all mod p.
    let dot = |row: &[u64], x: &[u64]| -> i128 {
        row.iter()
            .zip(x)
            .map(|(&c, &v)| c as i128 * v as i128)
            .sum()
    };
    let mut aug_rows: Vec<Vec<u64>> = Vec::with_capacity(m);
    let mut aug_rhs: Vec<u64> = Vec::with_capacity(m);
    for i in 0..m {
        let resid = dot(&rows[i], &prev.particular) - rhs[i] as i128;
        debug_assert_eq!(resid.rem_euclid(q as i128), 0);
        let s0 = (resid / q as i128).rem_euclid(p as i128) as u64;
        let mut row = Vec::with_capacity(r + nvars);
        for w in &prev.kernel {
            let t = dot(&rows[i], w);
            debug_assert_eq!(t.rem_euclid(q as i128), 0);
            row.push((t / q as i128).rem_euclid(p as i128) as u64);
        }
        for j in 0..nvars {
            row.push(rows[i][j] % p);
        }
        aug_rows.push(row);
        aug_rhs.push((p - s0) % p);
    }
    let lift = gauss_mod_p(&aug_rows, &aug_rhs, r + nvars, p)?;

    let assemble = |coeffs: &[u64]| -> Vec<u64> {
        let (c, z) = coeffs.split_at(r);
        let mut v = vec![0u64; nvars];
        for (cw, w) in c.iter().zip(&prev.kernel) {
            for j in 0..nvars {
                v[j] = (v[j] + cw * w[j]) % big_q;
            }
        }
        for j in 0..nvars {
            v[j] = (v[j] + q % big_q * z[j]) % big_q;
        }
        v
    };
    let mut particular = assemble(&lift.particular);
    for j in 0..nvars {
        particular[j] = (particular[j] + prev.particular[j]) % big_q;
    }
    let mut kernel: Vec<Vec<u64>> = lift.kernel.iter().map(|kv| assemble(kv)).collect();
    for w in &prev.kernel {
        kernel.push(w.iter().map(|&x| x * p % big_q).collect());
    }
    Some(ModSolution { particular, kernel })
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Solves `A x = b (mod modulus)` for arbitrary modulus >= 2.
/// Returns any particular solution, or `None` when inconsistent.
pub fn solve_mod(rows: &[Vec<u64>], rhs: &[u64], nvars: usize, modulus: u64) -> Option<Vec<u64>> {
    assert!(modulus >= 2);
    let mut sol = vec![0i128; nvars];
    let mut merged: i128 = 1;
    for (p, a) in factorize(modulus) {
        let q = p.pow(a);
        let rhs_q: Vec<u64> = rhs.iter().map(|&b| b % q).collect();
        let part = solve_prime_power(rows, &rhs_q, nvars, p, a)?.particular;
        // CRT merge coordinatewise.
        let (g, u, _) = ext_gcd(merged, q as i128);
        debug_assert_eq!(g, 1);
        let new_mod = merged * q as i128;
        for j in 0..nvars {
            let diff = (part[j] as i128 - sol[j]).rem_euclid(q as i128);
            sol[j] = (sol[j] + merged * ((u * diff).rem_euclid(q as i128))).rem_euclid(new_mod);
        }
        merged = new_mod;
    }
    Some(sol.iter().map(|&x| x as u64 % modulus).collect())
}
