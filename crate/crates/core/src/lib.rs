//! Spectral invariants of k-uniform hypergraphs.
//!
//! A k-uniform hypergraph `H` has an order-k adjacency tensor `A_H` with
//! entries `1/(k-1)!` at permutations of its edges, a Laplacian tensor
//! `L_H = D_H - A_H` and a signless Laplacian `Q_H = D_H + A_H`, where
//! `D_H` is the diagonal tensor of vertex degrees. Eigenpairs satisfy
//! `T x = lambda x^[k-1]` componentwise.
//!
//! This crate provides:
//!
//! - [`hypergraph`]: the combinatorial layer (parsing, degrees,
//!   connectivity, power hypergraphs, edge deletion with core vertices);
//! - [`labeling`]: odd bipartitions and half-sum labelings, found by
//!   exact linear algebra over GF(2) and Z_k;
//! - [`tensor`]: dense order-k tensors over exact rationals or complex
//!   doubles, the Shao product, and the hypergraph tensor builders;
//! - [`trace`]: generalized traces `Tr_d` by closed-walk enumeration,
//!   closed-form Laplacian trace identities, and Newton-identity
//!   extraction of characteristic polynomial coefficients;
//! - [`charpoly2`]: the exact dimension-2 characteristic polynomial via
//!   the Sylvester resultant;
//! - [`spectra`]: power iteration for spectral radii, polynomial root
//!   finding, and the constructive eigenvector lifts for power
//!   hypergraphs.
//!
//! Vertices are `0`-based throughout the API; the HGF text format uses
//! `1`-based labels and conversion happens at the parse/serialize
//! boundary.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod charpoly2;
pub mod enumerate;
pub mod gf2;
pub mod hypergraph;
pub mod hyperop;
pub mod labeling;
pub mod modk;
pub mod poly;
pub mod scalar;
pub mod spectra;
pub mod tensor;
pub mod trace;
pub mod walks;

pub use hypergraph::{DegreeSequence, EdgeDeletion, Hypergraph, HypergraphError};
pub use labeling::{Labeling, LabelingKind};
pub use scalar::Rat;
pub use spectra::EigenPair;
pub use tensor::Tensor;
