//! Odd bipartitions and half-sum labelings.
//!
//! A hypergraph is odd-bipartite when a proper nonempty vertex subset
//! `V_1` meets every edge in an odd number of vertices. A half-sum
//! labeling is `f: V -> Z_k` with every edge sum congruent to `k/2`
//! (mod k); it witnesses `0` as a signless Laplacian eigenvalue through
//! the phase vector `x_i = exp(2 pi f(i) i / k)`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::gf2;
use crate::hypergraph::Hypergraph;
use crate::modk;
use crate::scalar::{rat_int, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelingKind {
    /// Values in `{0, 1}`; every edge contains an odd number of 1s.
    OddBipartition,
    /// Values in `Z_k`; every edge sum is `k/2 (mod k)`.
    HalfSum,
}

/// A vertex labeling certifying one of the two section-3 conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    pub values: Vec<u64>,
    pub kind: LabelingKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelingError {
    /// The supplied vertex set is not an odd bipartition.
    NotOddBipartition,
    /// Operation requires even k.
    OddK,
}

impl fmt::Display for LabelingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotOddBipartition => write!(f, "vertex set is not an odd bipartition"),
            Self::OddK => write!(f, "edge cardinality k must be even"),
        }
    }
}

impl core::error::Error for LabelingError {}

impl Labeling {
    /// Vertices labeled with a nonzero value (for odd bipartitions,
    /// the set `V_1`).
    pub fn support(&self) -> Vec<usize> {
        self.values
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x != 0)
            .map(|(v, _)| v)
            .collect()
    }

    /// Rechecks the labeling against its hypergraph.
    pub fn is_valid_for(&self, h: &Hypergraph) -> bool {
        let k = h.k() as u64;
        if self.values.len() != h.n() {
            return false;
        }
        match self.kind {
            LabelingKind::OddBipartition => {
                self.values.iter().all(|&x| x <= 1)
                    && h.edges().iter().all(|e| {
                        e.iter().map(|&v| self.values[v]).sum::<u64>() % 2 == 1
                    })
            }
            LabelingKind::HalfSum => {
                k % 2 == 0
                    && self.values.iter().all(|&x| x < k)
                    && h.edges().iter().all(|e| {
                        e.iter().map(|&v| self.values[v]).sum::<u64>() % k == k / 2
                    })
            }
        }
    }
}

/// Searches for an odd bipartition: a proper nonempty `V_1` meeting
/// every edge oddly. Solved exactly over GF(2) (one parity equation per
/// edge), then `V_1 = emptyset` and `V_1 = V` are excluded.
pub fn find_odd_bipartition(h: &Hypergraph) -> Option<Labeling> {
    let n = h.n();
    if n < 2 || n > 63 {
        return None;
    }
    let rows: Vec<u64> = h
        .edges()
        .iter()
        .map(|e| e.iter().fold(0u64, |m, &v| m | (1 << v)))
        .collect();
    let rhs = vec![true; rows.len()];
    let sol = gf2::solve(&rows, &rhs, n)?;
    let full = (1u64 << n) - 1;
    let mut pick = sol.particular;
    if pick == 0 {
        // Only possible with no edges: any single vertex works.
        pick = 1;
    }
    if pick == full {
        pick = sol
            .kernel
            .iter()
            .map(|&w| sol.particular ^ w)
            .find(|&c| c != 0 && c != full)?;
    }
    let values = (0..n).map(|v| (pick >> v) & 1).collect();
    Some(Labeling {
        values,
        kind: LabelingKind::OddBipartition,
    })
}

/// Searches for a half-sum labeling `f: V -> Z_k` with every edge sum
/// `k/2 (mod k)`. Returns `None` immediately for odd k; otherwise the
/// linear system over Z_k is solved exactly.
pub fn find_half_sum_labeling(h: &Hypergraph) -> Option<Labeling> {
    let k = h.k() as u64;
    if k % 2 != 0 {
        return None;
    }
    let n = h.n();
    if n == 0 {
        return None;
    }
    let rows: Vec<Vec<u64>> = h
        .edges()
        .iter()
        .map(|e| {
            let mut row = vec![0u64; n];
            for &v in e {
                row[v] = 1;
            }
            row
        })
        .collect();
    let rhs = vec![k / 2; rows.len()];
    let values = modk::solve_mod(&rows, &rhs, n, k)?;
    Some(Labeling {
        values,
        kind: LabelingKind::HalfSum,
    })
}

/// The sign vector of an odd bipartition: `-1` on `V_1`, `+1` elsewhere.
/// For even k this is an exact null vector of the signless Laplacian.
pub fn bipartition_sign_vector(h: &Hypergraph, v1: &[usize]) -> Result<Vec<Rat>, LabelingError> {
    if h.k() % 2 != 0 {
        return Err(LabelingError::OddK);
    }
    let mut values = vec![0u64; h.n()];
    for &v in v1 {
        if v >= h.n() {
            return Err(LabelingError::NotOddBipartition);
        }
        values[v] = 1;
    }
    let lab = Labeling {
        values,
        kind: LabelingKind::OddBipartition,
    };
    let v1_count = lab.support().len();
    if v1_count == 0 || v1_count == h.n() || !lab.is_valid_for(h) {
        return Err(LabelingError::NotOddBipartition);
    }
    Ok(lab
        .values
        .iter()
        .map(|&x| if x == 1 { -rat_int(1) } else { rat_int(1) })
        .collect())
}
