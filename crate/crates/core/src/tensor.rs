//! Dense order-k dimension-n tensors and the hypergraph tensor builders.
//!
//! Storage is a flat row-major `Vec` of length `n^k`; nonzero iteration
//! is provided for the sparse-ish hypergraph tensors. Builders use exact
//! rationals so that every trace identity can be checked as an equality.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul};

use num_complex::Complex64;
use num_traits::Zero;

use crate::hypergraph::Hypergraph;
use crate::scalar::{factorial, rat_display, rat_parse, rat_to_c64, Rat};

/// Dense order-k dimension-n tensor. Indices are 0-based `[usize; k]`
/// multi-indices; entry `(i_1, ..., i_k)` lives at row-major position
/// `sum_j i_j * n^(k-1-j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor<T> {
    order: usize,
    dim: usize,
    data: Vec<T>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TensorError {
    DimensionMismatch,
    OrderTooSmall,
    NonUnitDiagonal,
    Parse { line: usize, msg: String },
}

impl fmt::Display for TensorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::DimensionMismatch => write!(f, "tensor dimensions do not match"),
            Self::OrderTooSmall => write!(f, "tensor order too small for this operation"),
            Self::NonUnitDiagonal => write!(f, "diagonal matrix entry is not of unit modulus"),
            Self::Parse { line, msg } => write!(f, "line {line}: {msg}"),
        }
    }
}

impl core::error::Error for TensorError {}

impl<T: Clone + Zero + PartialEq> Tensor<T> {
    pub fn zeros(order: usize, dim: usize) -> Self {
        let len = dim.checked_pow(order as u32).expect("tensor too large");
        Self {
            order,
            dim,
            data: vec![T::zero(); len],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.order);
        let mut off = 0;
        for &i in idx {
            debug_assert!(i < self.dim);
            off = off * self.dim + i;
        }
        off
    }

    /// Decodes a flat offset back into a multi-index.
    fn multi_index(&self, mut off: usize) -> Vec<usize> {
        let mut idx = vec![0; self.order];
        for j in (0..self.order).rev() {
            idx[j] = off % self.dim;
            off /= self.dim;
        }
        idx
    }

    pub fn entry(&self, idx: &[usize]) -> &T {
        &self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: T) {
        let off = self.offset(idx);
        self.data[off] = value;
    }

    pub fn add_to(&mut self, idx: &[usize], value: T)
    where
        T: Add<Output = T>,
    {
        let off = self.offset(idx);
        let old = core::mem::replace(&mut self.data[off], T::zero());
        self.data[off] = old + value;
    }

    /// Iterates `(multi_index, value)` over nonzero entries.
    pub fn nonzeros(&self) -> impl Iterator<Item = (Vec<usize>, &T)> + '_ {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(off, v)| (self.multi_index(off), v))
    }

    pub fn num_nonzeros(&self) -> usize {
        self.data.iter().filter(|v| !v.is_zero()).count()
    }

    pub fn map<U: Clone + Zero + PartialEq>(&self, f: impl Fn(&T) -> U) -> Tensor<U> {
        Tensor {
            order: self.order,
            dim: self.dim,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// True iff every entry is invariant under permuting its index tuple.
    pub fn is_symmetric(&self) -> bool {
        for (idx, v) in self.nonzeros() {
            let mut sorted = idx.clone();
            sorted.sort_unstable();
            let mut perm = sorted.clone();
            loop {
                if self.entry(&perm) != v {
                    return false;
                }
                if !next_permutation(&mut perm) {
                    break;
                }
            }
        }
        true
    }
}

impl<T> Tensor<T>
where
    T: Clone + Zero + PartialEq + Mul<Output = T> + Add<Output = T>,
{
    /// `(T x)_i = sum over i_2..i_k of t_{i i_2..i_k} x_{i_2}...x_{i_k}`.
    pub fn apply(&self, x: &[T]) -> Result<Vec<T>, TensorError> {
        if x.len() != self.dim {
            return Err(TensorError::DimensionMismatch);
        }
        if self.order < 2 {
            return Err(TensorError::OrderTooSmall);
        }
        let mut out = vec![T::zero(); self.dim];
        for (idx, v) in self.nonzeros() {
            let mut term = v.clone();
            for &j in &idx[1..] {
                term = term * x[j].clone();
            }
            let old = core::mem::replace(&mut out[idx[0]], T::zero());
            out[idx[0]] = old + term;
        }
        Ok(out)
    }

    /// Shao's tensor product: for `A` of order m >= 2 and `B` of order
    /// k >= 1 (both dimension n), the result has order (m-1)(k-1)+1 and
    /// entries `c_{i a_1..a_{m-1}} = sum a_{i i_2..i_m} b_{i_2 a_1} ... b_{i_m a_{m-1}}`.
    pub fn shao_product(&self, b: &Tensor<T>) -> Result<Tensor<T>, TensorError> {
        if self.dim != b.dim {
            return Err(TensorError::DimensionMismatch);
        }
        if self.order < 2 || b.order < 1 {
            return Err(TensorError::OrderTooSmall);
        }
        let n = self.dim;
        let m = self.order;
        let kb = b.order;
        let out_order = (m - 1) * (kb - 1) + 1;
        let mut out = Tensor::zeros(out_order, n);
        let block = kb - 1; // length of each alpha_j
        let mut out_len = 1usize;
        for _ in 0..out_order {
            out_len *= n;
        }
        for off in 0..out_len {
            let idx = out.multi_index(off);
            let i = idx[0];
            // alpha_j = idx[1 + (j-1)*block .. 1 + j*block]
            let mut acc = T::zero();
            let mut inner = vec![0usize; m - 1]; // i_2..i_m
            loop {
                let mut a_idx = Vec::with_capacity(m);
                a_idx.push(i);
                a_idx.extend_from_slice(&inner);
                let a_val = self.entry(&a_idx);
                if !a_val.is_zero() {
                    let mut term = a_val.clone();
                    for (j, &ij) in inner.iter().enumerate() {
                        let mut b_idx = Vec::with_capacity(kb);
                        b_idx.push(ij);
                        b_idx.extend_from_slice(&idx[1 + j * block..1 + (j + 1) * block]);
                        term = term * b.entry(&b_idx).clone();
                    }
                    acc = acc + term;
                }
                if !increment(&mut inner, n) {
                    break;
                }
            }
            out.data[off] = acc;
        }
        Ok(out)
    }

    /// The matrix sandwich `P T Q` with entries
    /// `sum t_{j_1..j_k} p_{i_1 j_1} q_{j_2 i_2} ... q_{j_k i_k}`.
    pub fn matrix_sandwich(
        &self,
        p: &[Vec<T>],
        q: &[Vec<T>],
    ) -> Result<Tensor<T>, TensorError> {
        let n = self.dim;
        if p.len() != n || q.len() != n || p.iter().chain(q).any(|r| r.len() != n) {
            return Err(TensorError::DimensionMismatch);
        }
        let mut out = Tensor::zeros(self.order, n);
        for (jdx, v) in self.nonzeros() {
            // scatter over all output indices
            let mut idx = vec![0usize; self.order];
            loop {
                let mut term = v.clone() * p[idx[0]][jdx[0]].clone();
                for t in 1..self.order {
                    term = term * q[jdx[t]][idx[t]].clone();
                }
                if !term.is_zero() {
                    out.add_to(&idx, term);
                }
                if !increment(&mut idx, n) {
                    break;
                }
            }
        }
        Ok(out)
    }
}

fn increment(idx: &mut [usize], n: usize) -> bool {
    for j in (0..idx.len()).rev() {
        idx[j] += 1;
        if idx[j] < n {
            return true;
        }
        idx[j] = 0;
    }
    false
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let len = perm.len();
    if len < 2 {
        return false;
    }
    let mut i = len - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = len - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// The unit tensor: 1 on the diagonal `(i, ..., i)`, 0 elsewhere.
pub fn unit_tensor<T: Clone + Zero + PartialEq + num_traits::One>(
    order: usize,
    dim: usize,
) -> Tensor<T> {
    assert!(order >= 2);
    let mut t = Tensor::zeros(order, dim);
    for i in 0..dim {
        t.set(&vec![i; order], T::one());
    }
    t
}

/// Adjacency tensor: `1/(k-1)!` at every permutation of every edge.
pub fn adjacency_tensor(h: &Hypergraph) -> Tensor<Rat> {
    let k = h.k();
    let mut t = Tensor::zeros(k, h.n());
    let w = Rat::new(1.into(), factorial(k - 1));
    for e in h.edges() {
        let mut perm = e.clone();
        loop {
            t.set(&perm, w.clone());
            if !next_permutation(&mut perm) {
                break;
            }
        }
    }
    t
}

/// Laplacian tensor `L = D - A`.
pub fn laplacian_tensor(h: &Hypergraph) -> Tensor<Rat> {
    degree_signed(h, true)
}

/// Signless Laplacian tensor `Q = D + A`.
pub fn signless_laplacian_tensor(h: &Hypergraph) -> Tensor<Rat> {
    degree_signed(h, false)
}

fn degree_signed(h: &Hypergraph, negate: bool) -> Tensor<Rat> {
    let mut t = adjacency_tensor(h);
    if negate {
        t = t.map(|v| -v.clone());
    }
    for (i, &d) in h.degrees().0.iter().enumerate() {
        t.set(&vec![i; h.k()], Rat::from_integer(d.into()));
    }
    t
}

impl Tensor<Rat> {
    pub fn to_complex(&self) -> Tensor<Complex64> {
        self.map(rat_to_c64)
    }

    pub fn to_f64(&self) -> Tensor<f64> {
        self.map(crate::scalar::rat_to_f64)
    }
}

/// Entrywise check of `T = exp(-i theta) U^{-(k-1)} T U` for a diagonal
/// unit matrix `U`. Returns the verdict and the max deviation.
pub fn check_phase_similarity(
    t: &Tensor<Complex64>,
    u: &[Complex64],
    theta: f64,
    tol: f64,
) -> Result<(bool, f64), TensorError> {
    let n = t.dim();
    if u.len() != n {
        return Err(TensorError::DimensionMismatch);
    }
    if u.iter().any(|z| (z.norm() - 1.0).abs() > 1e-12) {
        return Err(TensorError::NonUnitDiagonal);
    }
    let km1 = (t.order() - 1) as i32;
    let mut pmat = vec![vec![Complex64::zero(); n]; n];
    let mut qmat = vec![vec![Complex64::zero(); n]; n];
    for i in 0..n {
        pmat[i][i] = u[i].powi(-km1);
        qmat[i][i] = u[i];
    }
    let sandwich = t.matrix_sandwich(&pmat, &qmat)?;
    let phase = Complex64::from_polar(1.0, -theta);
    let mut max_dev = 0.0f64;
    for off in 0..t.data.len() {
        let dev = (t.data[off] - phase * sandwich.data[off]).norm();
        max_dev = max_dev.max(dev);
    }
    Ok((max_dev <= tol, max_dev))
}

/// A tensor read from TNS text: either exact-rational or complex.
#[derive(Debug, Clone)]
pub enum TnsTensor {
    Rational(Tensor<Rat>),
    Complex(Tensor<Complex64>),
}

/// Parses the TNS format: line 1 is `k n`, then one line per nonzero:
/// `i_1 ... i_k  p/q` (exact rational) or `i_1 ... i_k  re im`
/// (complex double). Indices are 1-based. `#` lines are ignored.
pub fn parse_tns(text: &str) -> Result<TnsTensor, TensorError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(TensorError::Parse {
        line: 1,
        msg: String::from("empty input"),
    })?;
    let hp: Vec<&str> = header.split_whitespace().collect();
    if hp.len() != 2 {
        return Err(TensorError::Parse {
            line: hline,
            msg: String::from("header must be `k n`"),
        });
    }
    let k: usize = hp[0].parse().map_err(|_| TensorError::Parse {
        line: hline,
        msg: format!("invalid k `{}`", hp[0]),
    })?;
    let n: usize = hp[1].parse().map_err(|_| TensorError::Parse {
        line: hline,
        msg: format!("invalid n `{}`", hp[1]),
    })?;
    let mut rat_t: Option<Tensor<Rat>> = None;
    let mut cpx_t: Option<Tensor<Complex64>> = None;
    for (line, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let parse_idx = |toks: &[&str]| -> Result<Vec<usize>, TensorError> {
            toks.iter()
                .map(|t| {
                    let v: usize = t.parse().map_err(|_| TensorError::Parse {
                        line,
                        msg: format!("invalid index `{t}`"),
                    })?;
                    if v == 0 || v > n {
                        return Err(TensorError::Parse {
                            line,
                            msg: format!("index {v} out of range"),
                        });
                    }
                    Ok(v - 1)
                })
                .collect()
        };
        if toks.len() == k + 1 {
            if cpx_t.is_some() {
                return Err(TensorError::Parse {
                    line,
                    msg: String::from("mixed rational and complex entries"),
                });
            }
            let idx = parse_idx(&toks[..k])?;
            let v = rat_parse(toks[k]).ok_or(TensorError::Parse {
                line,
                msg: format!("invalid rational `{}`", toks[k]),
            })?;
            rat_t
                .get_or_insert_with(|| Tensor::zeros(k, n))
                .set(&idx, v);
        } else if toks.len() == k + 2 {
            if rat_t.is_some() {
                return Err(TensorError::Parse {
                    line,
                    msg: String::from("mixed rational and complex entries"),
                });
            }
            let idx = parse_idx(&toks[..k])?;
            let re: f64 = toks[k].parse().map_err(|_| TensorError::Parse {
                line,
                msg: format!("invalid real part `{}`", toks[k]),
            })?;
            let im: f64 = toks[k + 1].parse().map_err(|_| TensorError::Parse {
                line,
                msg: format!("invalid imaginary part `{}`", toks[k + 1]),
            })?;
            cpx_t
                .get_or_insert_with(|| Tensor::zeros(k, n))
                .set(&idx, Complex64::new(re, im));
        } else {
            return Err(TensorError::Parse {
                line,
                msg: format!("expected {} or {} tokens, got {}", k + 1, k + 2, toks.len()),
            });
        }
    }
    match (rat_t, cpx_t) {
        (Some(t), None) => Ok(TnsTensor::Rational(t)),
        (None, Some(t)) => Ok(TnsTensor::Complex(t)),
        (None, None) => Ok(TnsTensor::Rational(Tensor::zeros(k, n))),
        _ => unreachable!(),
    }
}

/// Serializes a rational tensor to TNS text.
pub fn to_tns(t: &Tensor<Rat>) -> String {
    let mut out = format!("{} {}\n", t.order(), t.dim());
    for (idx, v) in t.nonzeros() {
        let labels: Vec<String> = idx.iter().map(|i| format!("{}", i + 1)).collect();
        out.push_str(&format!("{} {}\n", labels.join(" "), rat_display(v)));
    }
    out
}
