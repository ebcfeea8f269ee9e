//! Closed-walk counts over arc multisets.
//!
//! A closed walk here is a linear sequence of arcs (with a designated
//! starting arc) that is head-to-tail consecutive, returns to its start,
//! and uses a prescribed arc multiset exactly. Arcs with equal value are
//! indistinguishable, so sequences are counted up to relabeling of
//! identical arcs.
//!
//! Two independent counters are provided: a direct backtracking
//! enumeration (the oracle) and a closed form via arborescence counts
//! (the fast path); the test suite checks them against each other.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::factorial;

/// A directed arc multiset on vertices `0..n`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ArcMultiset {
    arcs: BTreeMap<(usize, usize), u64>,
}

impl ArcMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, from: usize, to: usize, mult: u64) {
        if mult > 0 {
            *self.arcs.entry((from, to)).or_insert(0) += mult;
        }
    }

    /// Adds the k-1 arcs `root -> a` for each entry of `alpha`,
    /// repeated `mult` times.
    pub fn add_position(&mut self, root: usize, alpha: &[usize], mult: u64) {
        for &a in alpha {
            self.add(root, a, mult);
        }
    }

    pub fn total_arcs(&self) -> u64 {
        self.arcs.values().sum()
    }

    /// Product of factorials of the arc multiplicities.
    pub fn arc_multiplicity_factorial(&self) -> BigInt {
        self.arcs
            .values()
            .map(|&m| factorial(m as usize))
            .product()
    }

    /// Product of factorials of the vertex outdegrees.
    pub fn outdegree_factorial(&self) -> BigInt {
        self.outdegrees()
            .values()
            .map(|&d| factorial(d as usize))
            .product()
    }

    fn outdegrees(&self) -> BTreeMap<usize, u64> {
        let mut out = BTreeMap::new();
        for (&(f, _), &m) in &self.arcs {
            *out.entry(f).or_insert(0) += m;
        }
        out
    }

    fn indegrees(&self) -> BTreeMap<usize, u64> {
        let mut ind = BTreeMap::new();
        for (&(_, t), &m) in &self.arcs {
            *ind.entry(t).or_insert(0) += m;
        }
        ind
    }

    fn is_balanced(&self) -> bool {
        let out = self.outdegrees();
        let ind = self.indegrees();
        let mut verts: Vec<usize> = out.keys().chain(ind.keys()).copied().collect();
        verts.sort_unstable();
        verts.dedup();
        verts
            .iter()
            .all(|v| out.get(v).copied().unwrap_or(0) == ind.get(v).copied().unwrap_or(0))
    }

    /// Backtracking enumeration of all distinct closed arc-value
    /// sequences using the multiset exactly. Exponential; used as the
    /// oracle for `count_closed_walks`.
    pub fn count_closed_walks_backtracking(&self) -> BigInt {
        if self.arcs.is_empty() {
            return BigInt::zero();
        }
        if !self.is_balanced() {
            return BigInt::zero();
        }
        let keys: Vec<(usize, usize)> = self.arcs.keys().copied().collect();
        let mut remaining: Vec<u64> = self.arcs.values().copied().collect();
        // arcs grouped by tail for the step choice
        let mut by_tail: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, &(f, _)) in keys.iter().enumerate() {
            by_tail.entry(f).or_default().push(i);
        }
        let mut total = BigInt::zero();
        let starts: Vec<usize> = by_tail.keys().copied().collect();
        for start in starts {
            total += count_from(start, start, &keys, &mut remaining, &by_tail);
        }
        total
    }

    /// Closed form: `m * t_w(r) * prod_v (outdeg_v - 1)! / b`, where
    /// `t_w(r)` is the number of spanning arborescences converging to an
    /// arbitrary support vertex `r` (matrix-tree minor determinant) and
    /// `b` is the arc-multiplicity factorial product. Zero when the arc
    /// multiset admits no Eulerian closed sequence.
    pub fn count_closed_walks(&self) -> BigInt {
        if self.arcs.is_empty() || !self.is_balanced() {
            return BigInt::zero();
        }
        let out = self.outdegrees();
        let verts: Vec<usize> = out.keys().copied().collect();
        let index: BTreeMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let s = verts.len();
        // Balanced, so every arc head also has outdegree > 0 unless the
        // multiset is degenerate; a head outside the support kills it.
        if self.arcs.keys().any(|&(_, t)| !index.contains_key(&t)) {
            return BigInt::zero();
        }
        // out-Laplacian restricted to the support, root = first vertex
        let mut lap = vec![vec![BigInt::zero(); s]; s];
        for (i, &v) in verts.iter().enumerate() {
            lap[i][i] = BigInt::from(out[&v]);
        }
        for (&(f, t), &m) in &self.arcs {
            lap[index[&f]][index[&t]] -= BigInt::from(m);
        }
        let minor: Vec<Vec<BigInt>> = (1..s)
            .map(|i| (1..s).map(|j| lap[i][j].clone()).collect())
            .collect();
        let tw = bareiss_det(minor);
        if tw.is_zero() {
            return BigInt::zero();
        }
        debug_assert!(tw.is_positive());
        let mut num = BigInt::from(self.total_arcs()) * tw;
        for &d in out.values() {
            num *= factorial(d as usize - 1);
        }
        let b = self.arc_multiplicity_factorial();
        let (q, r) = num.div_rem(&b);
        debug_assert!(r.is_zero());
        q
    }
}

fn count_from(
    start: usize,
    cur: usize,
    keys: &[(usize, usize)],
    remaining: &mut [u64],
    by_tail: &BTreeMap<usize, Vec<usize>>,
) -> BigInt {
    if remaining.iter().all(|&m| m == 0) {
        return if cur == start {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    let mut total = BigInt::zero();
    if let Some(cands) = by_tail.get(&cur) {
        for &i in cands {
            if remaining[i] > 0 {
                remaining[i] -= 1;
                total += count_from(start, keys[i].1, keys, remaining, by_tail);
                remaining[i] += 1;
            }
        }
    }
    total
}

/// Fraction-free Bareiss determinant of an integer matrix (consumed).
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for p in 0..n - 1 {
        if a[p][p].is_zero() {
            let Some(swap) = (p + 1..n).find(|&r| !a[r][p].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(p, swap);
            sign = -sign;
        }
        for i in p + 1..n {
            for j in p + 1..n {
                let v = (&a[i][j] * &a[p][p] - &a[i][p] * &a[p][j]) / &prev;
                a[i][j] = v;
            }
            a[i][p] = BigInt::zero();
        }
        prev = a[p][p].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}
