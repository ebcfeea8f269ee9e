//! Dense GF(2) linear algebra on u64 row masks (up to 64 variables).

use alloc::vec::Vec;

/// Solution of `A x = b` over GF(2): one particular solution plus a
/// basis of the kernel. Every solution is `particular ^ (xor of any
/// subset of the kernel basis)`.
#[derive(Debug, Clone)]
pub struct Gf2Solution {
    pub particular: u64,
    pub kernel: Vec<u64>,
}

/// Solves `A x = b` over GF(2). `rows[i]` is the bitmask of variables in
/// equation i, `rhs` the right-hand-side bits. Returns `None` when the
/// system is inconsistent.
pub fn solve(rows: &[u64], rhs: &[bool], nvars: usize) -> Option<Gf2Solution> {
    assert_eq!(rows.len(), rhs.len());
    assert!(nvars <= 63, "at most 63 variables supported");
    // Augmented rows: variable bits 0..nvars, rhs in bit nvars.
    let rhs_bit = 1u64 << nvars;
    let mut aug: Vec<u64> = rows
        .iter()
        .zip(rhs)
        .map(|(&r, &b)| r | if b { rhs_bit } else { 0 })
        .collect();
    let mut pivot_col: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..nvars {
        let bit = 1u64 << col;
        let Some(pr) = (rank..aug.len()).find(|&r| aug[r] & bit != 0) else {
            continue;
        };
        aug.swap(rank, pr);
        let pivot_row = aug[rank];
        for (r, row) in aug.iter_mut().enumerate() {
            if r != rank && *row & bit != 0 {
                *row ^= pivot_row;
            }
        }
        pivot_col.push(col);
        rank += 1;
    }
    // Inconsistent iff a zero row has rhs set.
    if aug[rank..].iter().any(|&r| r & rhs_bit != 0) {
        return None;
    }
    let mut particular = 0u64;
    for (r, &col) in pivot_col.iter().enumerate() {
        if aug[r] & rhs_bit != 0 {
            particular |= 1 << col;
        }
    }
    let mut is_pivot = [false; 64];
    for &c in &pivot_col {
        is_pivot[c] = true;
    }
    let mut kernel = Vec::new();
    for free in 0..nvars {
        if is_pivot[free] {
            continue;
        }
        let mut v = 1u64 << free;
        for (r, &col) in pivot_col.iter().enumerate() {
            if aug[r] & (1 << free) != 0 {
                v |= 1 << col;
            }
        }
        kernel.push(v);
    }
    Some(Gf2Solution { particular, kernel })
}
