//! Generalized tensor traces by closed-walk enumeration, closed-form
//! Laplacian traces, and Newton-identity coefficient extraction.
//!
//! The d-th trace of an order-k dimension-n tensor is
//!
//! ```text
//! Tr_d(T) = (k-1)^(n-1) * sum over k-valent F of (b(F)/c(F)) pi_F(T) |W(F)|
//! ```
//!
//! where F ranges over tuples (i_1 a_1, ..., i_d a_d) of tensor
//! positions with weakly increasing roots i_j, "k-valent" means every
//! vertex occurs a multiple of k times in F, b and c are arc/outdegree
//! factorial products of the arc multiset of F, and |W(F)| counts the
//! closed walks using that arc multiset exactly.
//!
//! Tuples sharing the same position multiset contribute identically, so
//! the enumeration walks multisets once and carries the ordering count.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::hypergraph::Hypergraph;
use crate::scalar::{binomial, factorial, rat_pow, Rat};
use crate::tensor::Tensor;
use crate::walks::ArcMultiset;
use core::fmt;

/// Enumeration cutoff. The multiset walk is super-exponential, so
/// out-of-budget requests are refused outright rather than truncated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceBudget {
    pub max_d: usize,
    pub max_n: usize,
}

impl TraceBudget {
    /// Default: d at most k, n at most 8.
    pub fn default_for(order: usize) -> Self {
        Self {
            max_d: order,
            max_n: 8,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceError {
    BudgetExceeded {
        d: usize,
        n: usize,
        budget: TraceBudget,
    },
    OrderOutOfRange { t: usize, k: usize },
    ZeroD,
}

impl fmt::Display for TraceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::BudgetExceeded { d, n, budget } => write!(
                f,
                "trace budget exceeded: d={d}, n={n} (allowed d<={}, n<={})",
                budget.max_d, budget.max_n
            ),
            Self::OrderOutOfRange { t, k } => {
                write!(f, "closed form only holds for 1<=t<=k, got t={t}, k={k}")
            }
            Self::ZeroD => write!(f, "trace order d must be >= 1"),
        }
    }
}

impl core::error::Error for TraceError {}

/// One k-valent position multiset with everything needed for its trace
/// contribution. `indices` is the canonical representative tuple
/// (positions repeated by multiplicity, sorted); `orderings` counts the
/// distinct root-sorted tuples with this multiset, all contributing
/// equally.
#[derive(Debug, Clone)]
pub struct TraceTerm {
    pub indices: Vec<Vec<usize>>,
    pub arcs: ArcMultiset,
    pub b: BigInt,
    pub c: BigInt,
    pub pi: Rat,
    pub walk_count: BigInt,
    pub orderings: BigInt,
}

impl TraceTerm {
    /// This term's summand `orderings * (b/c) * pi * |W|`.
    pub fn contribution(&self) -> Rat {
        Rat::new(&self.orderings * &self.b, self.c.clone())
            * &self.pi
            * Rat::from_integer(self.walk_count.clone())
    }
}

struct Enumerator<'a> {
    k: usize,
    d: usize,
    positions: &'a [(Vec<usize>, Rat)],
    chosen: Vec<(usize, u64)>, // (position index, multiplicity)
    counts: Vec<u64>,          // vertex occurrence counts
    terms: Vec<TraceTerm>,
}

impl Enumerator<'_> {
    fn deficit(&self) -> u64 {
        let k = self.k as u64;
        self.counts.iter().map(|&c| (k - c % k) % k).sum()
    }

    fn occur(&mut self, pos: usize, mult: u64, sign: i64) {
        let (idx, _) = &self.positions[pos];
        for &v in idx {
            if sign > 0 {
                self.counts[v] += mult;
            } else {
                self.counts[v] -= mult;
            }
        }
    }

    fn recurse(&mut self, next: usize, used: usize) {
        let remaining = (self.d - used) as u64;
        if self.deficit() > self.k as u64 * remaining {
            return;
        }
        if used == self.d {
            self.emit();
            return;
        }
        for pos in next..self.positions.len() {
            for mult in 1..=remaining {
                self.occur(pos, mult, 1);
                self.chosen.push((pos, mult));
                self.recurse(pos + 1, used + mult as usize);
                self.chosen.pop();
                self.occur(pos, mult, -1);
            }
        }
    }

    fn emit(&mut self) {
        debug_assert_eq!(self.deficit(), 0);
        let mut arcs = ArcMultiset::new();
        let mut pi = Rat::one();
        let mut indices = Vec::new();
        // orderings = product over roots of m_i! / prod over slots of mult!
        let mut root_totals: Vec<(usize, u64)> = Vec::new();
        let mut den = BigInt::one();
        for &(pos, mult) in &self.chosen {
            let (idx, val) = &self.positions[pos];
            let root = idx[0];
            arcs.add_position(root, &idx[1..], mult);
            pi *= rat_pow(val, mult as i64);
            for _ in 0..mult {
                indices.push(idx.clone());
            }
            den *= factorial(mult as usize);
            match root_totals.last_mut() {
                Some((r, total)) if *r == root => *total += mult,
                _ => root_totals.push((root, mult)),
            }
        }
        let mut num = BigInt::one();
        for &(_, total) in &root_totals {
            num *= factorial(total as usize);
        }
        let (orderings, rem) = num.div_rem(&den);
        debug_assert!(rem.is_zero());
        let walk_count = arcs.count_closed_walks();
        if walk_count.is_zero() {
            return;
        }
        let b = arcs.arc_multiplicity_factorial();
        let c = arcs.outdegree_factorial();
        self.terms.push(TraceTerm {
            indices,
            arcs,
            b,
            c,
            pi,
            walk_count,
            orderings,
        });
    }
}

/// Every k-valent position multiset of size d with nonzero entry
/// product and nonzero walk count, with its contribution data.
pub fn enumerate_trace_terms(
    t: &Tensor<Rat>,
    d: usize,
    budget: TraceBudget,
) -> Result<Vec<TraceTerm>, TraceError> {
    if d == 0 {
        return Err(TraceError::ZeroD);
    }
    if d > budget.max_d || t.dim() > budget.max_n {
        return Err(TraceError::BudgetExceeded {
            d,
            n: t.dim(),
            budget,
        });
    }
    let positions: Vec<(Vec<usize>, Rat)> =
        t.nonzeros().map(|(idx, v)| (idx, v.clone())).collect();
    let mut en = Enumerator {
        k: t.order(),
        d,
        positions: &positions,
        chosen: Vec::new(),
        counts: vec![0; t.dim()],
        terms: Vec::new(),
    };
    en.recurse(0, 0);
    let terms = en.terms;
    Ok(terms)
}

/// `Tr_d(T)`, exact. Fails if the enumeration budget does not hold.
pub fn trace_d(t: &Tensor<Rat>, d: usize, budget: TraceBudget) -> Result<Rat, TraceError> {
    let terms = enumerate_trace_terms(t, d, budget)?;
    let scale = rat_pow(&Rat::from_integer(BigInt::from(t.order() as i64 - 1)), t.dim() as i64 - 1);
    Ok(scale * terms.iter().map(|t| t.contribution()).sum::<Rat>())
}

/// Closed-form Laplacian / signless-Laplacian traces: for t < k both
/// equal `(k-1)^(n-1) sum d_i^t`; at t = k an edge-count term
/// `k^(k-1) (k-1)^(n-k) |E|` is added, with sign `(-1)^k` for the
/// Laplacian and `+1` for the signless Laplacian.
pub fn laplacian_trace_formula(
    h: &Hypergraph,
    t: usize,
    signless: bool,
) -> Result<Rat, TraceError> {
    let k = h.k();
    let n = h.n();
    if t < 1 || t > k {
        return Err(TraceError::OrderOutOfRange { t, k });
    }
    let km1 = Rat::from_integer(BigInt::from(k as i64 - 1));
    let mut out = rat_pow(&km1, n as i64 - 1) * Rat::from_integer(h.degree_power_sum(t as u32));
    if t == k {
        let mut edge_term = rat_pow(&Rat::from_integer(BigInt::from(k)), k as i64 - 1)
            * rat_pow(&km1, n as i64 - k as i64)
            * Rat::from_integer(BigInt::from(h.num_edges()));
        if !signless && k % 2 == 1 {
            edge_term = -edge_term;
        }
        out += edge_term;
    }
    Ok(out)
}

/// Characteristic-polynomial coefficients from power sums by forward
/// substitution: `t p_t + sum_{j<t} Tr_j p_{t-j} = -Tr_t`.
pub fn charpoly_coefficients(traces: &[Rat]) -> Vec<Rat> {
    let mut p: Vec<Rat> = Vec::with_capacity(traces.len());
    for (t0, tr) in traces.iter().enumerate() {
        let t = t0 + 1;
        let mut rhs = -tr.clone();
        for j in 1..t {
            rhs -= &traces[j - 1] * &p[t - j - 1];
        }
        p.push(rhs / Rat::from_integer(BigInt::from(t as i64)));
    }
    p
}

/// Codegree-t coefficients of the Laplacian and signless-Laplacian
/// characteristic polynomials of a d-regular k-uniform hypergraph on n
/// vertices: `(-1)^t d^t C(n(k-1)^(n-1), t)` for t < k, with an extra
/// `(+-1) k^(k-3) (k-1)^(n-k) n d` term at t = k (sign `(-1)^(k+1)`
/// for L, `-1` for Q). Returned as the pair (L, Q).
pub fn regular_coefficient_formula(
    n: usize,
    k: usize,
    d: u64,
    t: usize,
) -> Result<(Rat, Rat), TraceError> {
    if t < 1 || t > k {
        return Err(TraceError::OrderOutOfRange { t, k });
    }
    let km1 = BigInt::from(k as i64 - 1);
    let degree = BigInt::from(n as u64) * crate::scalar::bigint_pow(&km1, n - 1);
    let mut base = Rat::from_integer(binomial(&degree, t))
        * rat_pow(&Rat::from_integer(BigInt::from(d)), t as i64);
    if t % 2 == 1 {
        base = -base;
    }
    if t < k {
        return Ok((base.clone(), base));
    }
    // t = k: k^(k-3) is 1/2 at k = 2, so keep it rational
    let nd = rat_pow(&Rat::from_integer(BigInt::from(k)), k as i64 - 3)
        * rat_pow(&Rat::from_integer(km1), n as i64 - k as i64)
        * Rat::from_integer(BigInt::from(n as u64) * BigInt::from(d));
    let l_term = if k % 2 == 0 { -nd.clone() } else { nd.clone() };
    Ok((base.clone() + l_term, base - nd))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};
    use crate::tensor::{adjacency_tensor, laplacian_tensor, signless_laplacian_tensor};
    use rand::{Rng, SeedableRng};

    fn budget() -> TraceBudget {
        TraceBudget { max_d: 6, max_n: 8 }
    }

    fn matrix_tensor(m: &[Vec<i64>]) -> Tensor<Rat> {
        let n = m.len();
        let mut t = Tensor::zeros(2, n);
        for (i, row) in m.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                t.set(&[i, j], rat_int(v));
            }
        }
        t
    }

    fn matrix_power_trace(m: &[Vec<i64>], d: usize) -> Rat {
        let n = m.len();
        let mut acc: Vec<Vec<Rat>> = (0..n)
            .map(|i| (0..n).map(|j| rat_int(m[i][j])).collect())
            .collect();
        for _ in 1..d {
            let mut next = vec![vec![Rat::zero(); n]; n];
            for i in 0..n {
                for j in 0..n {
                    for l in 0..n {
                        next[i][j] += &acc[i][l] * rat_int(m[l][j]);
                    }
                }
            }
            acc = next;
        }
        (0..n).map(|i| acc[i][i].clone()).sum()
    }

    #[test]
    fn matrix_calibration_random() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..25 {
            let n = rng.gen_range(2..=3usize);
            let m: Vec<Vec<i64>> = (0..n)
                .map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect())
                .collect();
            for d in 1..=4 {
                let t = matrix_tensor(&m);
                assert_eq!(
                    trace_d(&t, d, budget()).unwrap(),
                    matrix_power_trace(&m, d),
                    "matrix {m:?} d={d}"
                );
            }
        }
    }

    #[test]
    fn adjacency_traces_vanish_below_k() {
        for h in [
            Hypergraph::single_edge(3),
            Hypergraph::path(3).power(3).unwrap(),
            Hypergraph::single_edge(4),
            Hypergraph::complete(3, 4),
        ] {
            let a = adjacency_tensor(&h);
            for d in 1..h.k() {
                assert!(trace_d(&a, d, budget()).unwrap().is_zero(), "k={} d={d}", h.k());
            }
        }
    }

    #[test]
    fn single_3edge_laplacian_terms_d1() {
        let h = Hypergraph::single_edge(3);
        let l = laplacian_tensor(&h);
        let terms = enumerate_trace_terms(&l, 1, budget()).unwrap();
        // exactly the three diagonal positions
        assert_eq!(terms.len(), 3);
        for t in &terms {
            assert_eq!(t.indices.len(), 1);
            assert!(t.indices[0].iter().all(|&v| v == t.indices[0][0]));
            assert_eq!(t.b, t.c);
            assert_eq!(t.pi, rat_int(1));
        }
        assert_eq!(trace_d(&l, 1, budget()).unwrap(), rat_int(12));
    }

    #[test]
    fn single_3edge_adjacency_d2_empty() {
        let h = Hypergraph::single_edge(3);
        let a = adjacency_tensor(&h);
        assert!(enumerate_trace_terms(&a, 2, budget()).unwrap().is_empty());
    }

    #[test]
    fn budget_refusal() {
        let h = Hypergraph::single_edge(3);
        let a = adjacency_tensor(&h);
        let b = TraceBudget::default_for(3);
        assert!(matches!(
            trace_d(&a, 4, b),
            Err(TraceError::BudgetExceeded { .. })
        ));
        assert!(matches!(trace_d(&a, 0, b), Err(TraceError::ZeroD)));
    }

    #[test]
    fn closed_form_examples() {
        let h = Hypergraph::single_edge(3);
        assert_eq!(laplacian_trace_formula(&h, 1, false).unwrap(), rat_int(12));
        assert_eq!(laplacian_trace_formula(&h, 3, false).unwrap(), rat_int(3));
        assert_eq!(
            laplacian_trace_formula(&h, 3, true).unwrap(),
            rat_int(21)
        );
        // two 3-edges sharing vertex 0
        let bowtie = Hypergraph::new(3, 5, vec![vec![0, 1, 2], vec![0, 3, 4]]).unwrap();
        assert_eq!(
            laplacian_trace_formula(&bowtie, 2, false).unwrap(),
            rat_int(128)
        );
        assert!(laplacian_trace_formula(&bowtie, 4, false).is_err());
    }

    #[test]
    fn closed_form_matches_enumeration() {
        for h in [
            Hypergraph::single_edge(3),
            Hypergraph::new(3, 5, vec![vec![0, 1, 2], vec![0, 3, 4]]).unwrap(),
            Hypergraph::complete(3, 4),
        ] {
            for t in 1..=h.k() {
                for signless in [false, true] {
                    let tensor = if signless {
                        signless_laplacian_tensor(&h)
                    } else {
                        laplacian_tensor(&h)
                    };
                    assert_eq!(
                        trace_d(&tensor, t, budget()).unwrap(),
                        laplacian_trace_formula(&h, t, signless).unwrap(),
                        "n={} t={t} signless={signless}",
                        h.n()
                    );
                }
            }
        }
    }

    #[test]
    fn newton_examples() {
        assert_eq!(charpoly_coefficients(&[rat_int(5)]), vec![rat_int(-5)]);
        assert_eq!(
            charpoly_coefficients(&[rat_int(0), rat_int(2)]),
            vec![rat_int(0), rat_int(-1)]
        );
        // triangular-system arithmetic on a supplied trace sequence
        assert_eq!(
            charpoly_coefficients(&[rat_int(12), rat_int(72), rat_int(3)]),
            vec![rat_int(-12), rat_int(36), rat_int(143)]
        );
    }

    #[test]
    fn newton_matches_matrix_charpoly() {
        // [[0,1],[1,0]]: true traces (0,2), charpoly l^2 - 1
        let m = vec![vec![0i64, 1], vec![1, 0]];
        let t1 = matrix_power_trace(&m, 1);
        let t2 = matrix_power_trace(&m, 2);
        assert_eq!(
            charpoly_coefficients(&[t1, t2]),
            vec![rat_int(0), rat_int(-1)]
        );
    }

    #[test]
    fn regular_formula_examples() {
        // complete 3-uniform on 4 vertices: 3-regular
        let (l1, q1) = regular_coefficient_formula(4, 3, 3, 1).unwrap();
        assert_eq!(l1, rat_int(-96));
        assert_eq!(q1, rat_int(-96));
        // k=2 keeps k^(k-3) = 1/2 exact; both signs are -nd/2 for even k
        let (l2, q2) = regular_coefficient_formula(3, 2, 2, 2).unwrap();
        assert_eq!(l2, rat_int(9)); // C(3,2) 2^2 - 6/2
        assert_eq!(q2, rat_int(9));
        // odd k: L and Q differ by 2 k^(k-3) (k-1)^(n-k) n d at t = k
        let (l3, q3) = regular_coefficient_formula(4, 3, 3, 3).unwrap();
        assert_eq!(l3 - q3, rat(2 * 2 * 4 * 3, 1));
        assert!(regular_coefficient_formula(4, 3, 3, 4).is_err());
    }

    #[test]
    fn regular_formula_matches_newton_from_closed_forms() {
        // complete 3-uniform on 4 vertices (3-regular) and a 2-regular
        // 4-uniform tight cycle on 8 vertices
        let tight = Hypergraph::new(
            4,
            8,
            vec![
                vec![0, 1, 2, 3],
                vec![2, 3, 4, 5],
                vec![4, 5, 6, 7],
                vec![6, 7, 0, 1],
            ],
        )
        .unwrap();
        assert!(tight.degrees().0.iter().all(|&d| d == 2));
        let checks: Vec<(Hypergraph, u64)> =
            vec![(Hypergraph::complete(3, 4), 3), (tight, 2)];
        for (h, d) in checks {
            let traces: Vec<Rat> = (1..=h.k())
                .map(|t| laplacian_trace_formula(&h, t, false).unwrap())
                .collect();
            let p = charpoly_coefficients(&traces);
            let traces_q: Vec<Rat> = (1..=h.k())
                .map(|t| laplacian_trace_formula(&h, t, true).unwrap())
                .collect();
            let pq = charpoly_coefficients(&traces_q);
            for t in 1..=h.k() {
                let (wl, wq) = regular_coefficient_formula(h.n(), h.k(), d, t).unwrap();
                assert_eq!(p[t - 1], wl, "L k={} t={t}", h.k());
                assert_eq!(pq[t - 1], wq, "Q k={} t={t}", h.k());
            }
        }
    }
}
