//! Edge-based application of the hypergraph tensors.
//!
//! `(A x)_i = sum over edges e containing i of prod_{v in e, v != i} x_v`,
//! and L/Q add the degree diagonal with the appropriate sign. Working
//! straight off the edge list costs O(m k^2) per apply and never
//! materializes the n^k dense tensor, which is what makes power
//! iteration on large power hypergraphs feasible.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};

use num_traits::{FromPrimitive, Zero};

use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TensorKind {
    Adjacency,
    Laplacian,
    SignlessLaplacian,
}

/// A hypergraph tensor viewed as an operator on vectors.
#[derive(Debug, Clone)]
pub struct HyperOp<'a> {
    h: &'a Hypergraph,
    kind: TensorKind,
    degrees: Vec<u64>,
}

impl<'a> HyperOp<'a> {
    pub fn new(h: &'a Hypergraph, kind: TensorKind) -> Self {
        Self {
            h,
            kind,
            degrees: h.degrees().0,
        }
    }

    pub fn dim(&self) -> usize {
        self.h.n()
    }

    pub fn order(&self) -> usize {
        self.h.k()
    }

    pub fn kind(&self) -> TensorKind {
        self.kind
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        self.h
    }

    /// `T x` for the selected tensor.
    pub fn apply<T>(&self, x: &[T]) -> Vec<T>
    where
        T: Clone
            + Zero
            + FromPrimitive
            + Mul<Output = T>
            + Add<Output = T>
            + Sub<Output = T>,
    {
        assert_eq!(x.len(), self.h.n());
        let k = self.h.k();
        let mut adj = vec![T::zero(); x.len()];
        for e in self.h.edges() {
            for (slot, &i) in e.iter().enumerate() {
                let mut prod: Option<T> = None;
                for (t, &v) in e.iter().enumerate() {
                    if t == slot {
                        continue;
                    }
                    prod = Some(match prod {
                        None => x[v].clone(),
                        Some(p) => p * x[v].clone(),
                    });
                }
                let term = prod.expect("k >= 2");
                adj[i] = adj[i].clone() + term;
            }
        }
        match self.kind {
            TensorKind::Adjacency => adj,
            _ => {
                let mut out = Vec::with_capacity(x.len());
                for (i, a) in adj.into_iter().enumerate() {
                    let mut diag = T::from_u64(self.degrees[i]).expect("degree fits");
                    for _ in 1..k {
                        diag = diag * x[i].clone();
                    }
                    out.push(match self.kind {
                        TensorKind::Laplacian => diag - a,
                        _ => diag + a,
                    });
                }
                out
            }
        }
    }
}
