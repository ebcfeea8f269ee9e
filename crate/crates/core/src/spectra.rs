//! Numerical eigenpair machinery: residuals, Perron pairs by shifted
//! power iteration, and the constructive eigenvector builders for
//! odd-bipartite witnesses and power-hypergraph lifts.
//!
//! Every eigenpair leaving this module has its residual recomputed at
//! the boundary; construction formulas are never trusted. Fractional
//! powers use principal branches, with a sign-variant fallback for the
//! core-vertex scale in the Laplacian-family lifts (the variant used is
//! recorded in the report).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
// Float supplies powf/powi for f64 under no_std; builds where the std
// feature is unified in shadow it with the inherent methods
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::{One, Signed, Zero};

use crate::hypergraph::Hypergraph;
use crate::hyperop::{HyperOp, TensorKind};
use crate::labeling::{bipartition_sign_vector, Labeling, LabelingKind};
use crate::poly::durand_kerner;
use crate::scalar::{rat_to_c64, Rat};
use crate::tensor::Tensor;

/// Tolerances fixed across the module: eigenpair acceptance, power
/// iteration bound gap, root-finder residual, and the imaginary-part
/// cutoff below which a root counts as real.
pub const EIGEN_TOL: f64 = 1e-8;
pub const CW_GAP_TOL: f64 = 1e-10;
pub const ROOT_TOL: f64 = 1e-10;
pub const REAL_IMAG_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub enum SpectraError {
    ZeroVector,
    NotNonnegative,
    NonConvergence { iters: usize },
    NotTwoUniform,
    NotRegular,
    OddK,
    KTooSmall,
    ZeroAlpha,
    InputResidual(f64),
    VerificationFailed { residual: f64 },
    RootAtOne,
    Disconnected,
    InvalidWitness,
    TooFewCoreVertices,
    NoSuchEdge,
}

impl core::fmt::Display for SpectraError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Self::ZeroVector => write!(f, "eigenvector must be nonzero"),
            Self::NotNonnegative => write!(f, "operator has negative entries"),
            Self::NonConvergence { iters } => {
                write!(f, "iteration did not converge within {iters} steps")
            }
            Self::NotTwoUniform => write!(f, "base graph must be 2-uniform"),
            Self::NotRegular => write!(f, "base graph must be regular"),
            Self::OddK => write!(f, "k must be even"),
            Self::KTooSmall => write!(f, "k too small for this lift"),
            Self::ZeroAlpha => write!(f, "source eigenvalue must be nonzero"),
            Self::InputResidual(r) => write!(f, "input eigenpair residual too large: {r:e}"),
            Self::VerificationFailed { residual } => {
                write!(f, "constructed witness failed verification: residual {residual:e}")
            }
            Self::RootAtOne => write!(f, "defining polynomial has a root at 1"),
            Self::Disconnected => write!(f, "hypergraph must be connected"),
            Self::InvalidWitness => write!(f, "supplied labeling is not valid"),
            Self::TooFewCoreVertices => write!(f, "edge must contain at least 2 core vertices"),
            Self::NoSuchEdge => write!(f, "edge not present in the hypergraph"),
        }
    }
}

impl core::error::Error for SpectraError {}

/// An eigenpair `T x = lambda x^[k-1]` with its recomputed residual.
#[derive(Debug, Clone)]
pub struct EigenPair {
    pub lambda: Complex64,
    pub x: Vec<Complex64>,
    pub residual: f64,
}

/// Anything that acts like an order-k tensor on complex vectors.
pub trait TensorOp {
    fn dim(&self) -> usize;
    fn order(&self) -> usize;
    fn apply_vec(&self, x: &[Complex64]) -> Vec<Complex64>;
}

impl TensorOp for Tensor<Complex64> {
    fn dim(&self) -> usize {
        Tensor::dim(self)
    }
    fn order(&self) -> usize {
        Tensor::order(self)
    }
    fn apply_vec(&self, x: &[Complex64]) -> Vec<Complex64> {
        self.apply(x).expect("dimension checked by caller")
    }
}

impl TensorOp for HyperOp<'_> {
    fn dim(&self) -> usize {
        HyperOp::dim(self)
    }
    fn order(&self) -> usize {
        HyperOp::order(self)
    }
    fn apply_vec(&self, x: &[Complex64]) -> Vec<Complex64> {
        self.apply(x)
    }
}

/// `max_i |(T x)_i - lambda x_i^(k-1)|` after max-norm normalization.
pub fn residual(
    op: &impl TensorOp,
    lambda: Complex64,
    x: &[Complex64],
) -> Result<f64, SpectraError> {
    assert_eq!(x.len(), op.dim());
    let scale = x.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return Err(SpectraError::ZeroVector);
    }
    let xn: Vec<Complex64> = x.iter().map(|z| z / scale).collect();
    let y = op.apply_vec(&xn);
    let km1 = op.order() as u32 - 1;
    Ok(y
        .iter()
        .zip(&xn)
        .map(|(yi, xi)| (yi - lambda * xi.powu(km1)).norm())
        .fold(0.0, f64::max))
}

fn eigen_pair(
    op: &impl TensorOp,
    lambda: Complex64,
    x: Vec<Complex64>,
    tol: f64,
) -> Result<EigenPair, SpectraError> {
    let r = residual(op, lambda, &x)?;
    if r > tol {
        return Err(SpectraError::VerificationFailed { residual: r });
    }
    Ok(EigenPair {
        lambda,
        x,
        residual: r,
    })
}

/// Output of the Perron power iteration.
#[derive(Debug, Clone)]
pub struct PerronReport {
    pub pair: EigenPair,
    /// spectral radius of each connected component
    pub component_rhos: Vec<f64>,
    pub warnings: Vec<String>,
}

/// Spectral radius and positive eigenvector of the adjacency or
/// signless Laplacian tensor by shifted power iteration
/// (`x <- (T x + sigma x^[k-1])^[1/(k-1)]`, normalized). The shift is
/// the maximum diagonal entry, or 1 when the diagonal vanishes (plain
/// adjacency iteration can oscillate on bipartite-like structures).
/// Stops when the Collatz-Wielandt bounds meet within `tol`.
/// Disconnected input is handled per component, keeping the largest.
pub fn spectral_radius_power(
    h: &Hypergraph,
    kind: TensorKind,
    tol: f64,
    max_iter: usize,
) -> Result<PerronReport, SpectraError> {
    if kind == TensorKind::Laplacian {
        return Err(SpectraError::NotNonnegative);
    }
    let comps = h.components();
    let mut warnings = Vec::new();
    if comps.len() > 1 {
        warnings.push(format!(
            "input has {} components; iterating each and keeping the largest radius",
            comps.len()
        ));
    }
    let mut component_rhos = Vec::with_capacity(comps.len());
    let mut best: Option<(f64, &Vec<usize>, Vec<f64>)> = None;
    let mut results: Vec<(f64, Vec<f64>)> = Vec::with_capacity(comps.len());
    for (sub, _) in &comps {
        let (rho, v) = perron_component(sub, kind, tol, max_iter)?;
        component_rhos.push(rho);
        results.push((rho, v));
    }
    for ((rho, v), (_, new_to_old)) in results.into_iter().zip(&comps) {
        if best.as_ref().is_none_or(|(r, _, _)| rho > *r) {
            best = Some((rho, new_to_old, v));
        }
    }
    let (rho, new_to_old, v) = best.ok_or(SpectraError::ZeroVector)?;
    let mut x = vec![Complex64::zero(); h.n()];
    for (nv, &ov) in new_to_old.iter().enumerate() {
        x[ov] = Complex64::new(v[nv], 0.0);
    }
    let op = HyperOp::new(h, kind);
    let pair = eigen_pair(&op, Complex64::new(rho, 0.0), x, 10.0 * tol)?;
    Ok(PerronReport {
        pair,
        component_rhos,
        warnings,
    })
}

fn perron_component(
    h: &Hypergraph,
    kind: TensorKind,
    tol: f64,
    max_iter: usize,
) -> Result<(f64, Vec<f64>), SpectraError> {
    let n = h.n();
    if h.num_edges() == 0 {
        // zero tensor (degrees vanish): everything is a 0-eigenvector
        return Ok((0.0, vec![1.0; n]));
    }
    let k = h.k();
    let max_deg = h.degrees().0.iter().copied().max().unwrap_or(0) as f64;
    let sigma = match kind {
        TensorKind::Adjacency => 1.0, // zero diagonal: unit shift
        _ => max_deg,
    };
    let op = HyperOp::new(h, kind);
    let mut x = vec![1.0f64; n];
    let km1 = (k - 1) as i32;
    for _ in 0..max_iter {
        let ax = op.apply(&x);
        let y: Vec<f64> = ax
            .iter()
            .zip(&x)
            .map(|(a, xi)| a + sigma * xi.powi(km1))
            .collect();
        let ratios: Vec<f64> = y
            .iter()
            .zip(&x)
            .map(|(yi, xi)| yi / xi.powi(km1))
            .collect();
        let lo = ratios.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        if hi - lo < tol {
            return Ok(((lo + hi) / 2.0 - sigma, x));
        }
        let mut next: Vec<f64> = y.iter().map(|v| v.powf(1.0 / km1 as f64)).collect();
        let m = next.iter().copied().fold(0.0, f64::max);
        for v in next.iter_mut() {
            *v /= m;
        }
        x = next;
    }
    Err(SpectraError::NonConvergence { iters: max_iter })
}

/// The largest real root: roots with |imag| below the realness cutoff,
/// maximum real part among them.
pub fn largest_real_root(roots: &[Complex64]) -> Option<f64> {
    roots
        .iter()
        .filter(|r| r.im.abs() < REAL_IMAG_TOL)
        .map(|r| r.re)
        .fold(None, |acc, r| Some(acc.map_or(r, |a: f64| a.max(r))))
}

// --- complex polynomial plumbing for the lift equations -------------

fn cpoly_mul(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::zero(); a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// `(c_1 + c_2 x)^e * (c_3 + c_4 x) - alpha`, low-to-high coefficients.
fn lift_poly(
    lin_pow: (Complex64, Complex64),
    lin: (Complex64, Complex64),
    e: usize,
    alpha: Complex64,
) -> Vec<Complex64> {
    let mut p = vec![Complex64::one()];
    let factor = [lin_pow.0, lin_pow.1];
    for _ in 0..e {
        p = cpoly_mul(&p, &factor);
    }
    p = cpoly_mul(&p, &[lin.0, lin.1]);
    p[0] -= alpha;
    p
}

/// One verified lift of a base-graph eigenpair to a power hypergraph.
#[derive(Debug, Clone)]
pub struct LiftReport {
    pub kind: TensorKind,
    pub source: Complex64,
    pub lifted: Vec<Complex64>,
    pub witnesses: Vec<EigenPair>,
    /// set when the source is the Perron value d: the largest real root,
    /// which the lift theorems identify as the spectral radius
    pub rho: Option<f64>,
    /// branch bookkeeping: which witnesses needed the flipped sign of
    /// the core scale
    pub notes: Vec<String>,
}

fn check_base_pair(
    g: &Hypergraph,
    alpha: Complex64,
    x: &[Complex64],
) -> Result<(), SpectraError> {
    if g.k() != 2 {
        return Err(SpectraError::NotTwoUniform);
    }
    let op = HyperOp::new(g, TensorKind::Adjacency);
    let r = residual(&op, alpha, x)?;
    if r > 1e-10 {
        return Err(SpectraError::InputResidual(r));
    }
    Ok(())
}

fn max_normalize(x: &[Complex64]) -> Vec<Complex64> {
    let scale = x.iter().map(|z| z.norm()).fold(0.0, f64::max);
    x.iter().map(|z| z / scale).collect()
}

/// Lifts a nonzero adjacency eigenpair (alpha, x) of a graph G to the
/// power hypergraph G^k: eigenvalue `alpha^(2/k)`, eigenvector
/// `y_u = x_u^(2/k)` on V(G) and `y = (x_i x_j / alpha)^(1/k)` on the
/// core vertices of edge {i, j}. Principal branches; the eigenrelation
/// is verified by residual, not assumed.
pub fn lift_adjacency_eigenpair(
    g: &Hypergraph,
    alpha: Complex64,
    x: &[Complex64],
    k: usize,
) -> Result<EigenPair, SpectraError> {
    if k < 3 {
        return Err(SpectraError::KTooSmall);
    }
    if alpha.norm() < 1e-12 {
        return Err(SpectraError::ZeroAlpha);
    }
    check_base_pair(g, alpha, x)?;
    let x = max_normalize(x);
    let h = g.power(k).expect("2-uniform, k >= 3");
    let lambda = alpha.powf(2.0 / k as f64);
    let mut y = vec![Complex64::zero(); h.n()];
    let exp_v = 2.0 / k as f64;
    let exp_c = 1.0 / k as f64;
    for (u, xu) in x.iter().enumerate() {
        y[u] = xu.powf(exp_v);
    }
    for (ei, e) in g.edges().iter().enumerate() {
        let val = (x[e[0]] * x[e[1]] / alpha).powf(exp_c);
        for t in 0..k - 2 {
            y[g.n() + ei * (k - 2) + t] = val;
        }
    }
    let op = HyperOp::new(&h, TensorKind::Adjacency);
    eigen_pair(&op, lambda, y, EIGEN_TOL)
}

fn regular_degree(g: &Hypergraph) -> Result<u64, SpectraError> {
    let degs = g.degrees().0;
    let d = degs.first().copied().unwrap_or(0);
    if degs.iter().any(|&v| v != d) {
        return Err(SpectraError::NotRegular);
    }
    Ok(d)
}

fn lift_regular_family(
    g: &Hypergraph,
    alpha: Complex64,
    x: &[Complex64],
    k: usize,
    kind: TensorKind,
) -> Result<LiftReport, SpectraError> {
    if k < 4 {
        return Err(SpectraError::KTooSmall);
    }
    if k % 2 != 0 {
        return Err(SpectraError::OddK);
    }
    if alpha.norm() < 1e-12 {
        return Err(SpectraError::ZeroAlpha);
    }
    check_base_pair(g, alpha, x)?;
    let d = regular_degree(g)? as f64;
    let x = max_normalize(x);
    let e = (k - 2) / 2;
    let one = Complex64::one();
    // signless: (lambda - d)(lambda - 1)^e = alpha
    // laplacian: (d - lambda)(1 - lambda)^e = alpha
    let coeffs = match kind {
        TensorKind::SignlessLaplacian => lift_poly(
            (-one, one),
            (Complex64::new(-d, 0.0), one),
            e,
            alpha,
        ),
        TensorKind::Laplacian => lift_poly(
            (one, -one),
            (Complex64::new(d, 0.0), -one),
            e,
            alpha,
        ),
        TensorKind::Adjacency => unreachable!("adjacency lift is separate"),
    };
    let roots = durand_kerner(&coeffs, 5000, ROOT_TOL)
        .ok_or(SpectraError::NonConvergence { iters: 5000 })?;
    if roots.iter().any(|r| (r - one).norm() < 1e-9) {
        return Err(SpectraError::RootAtOne);
    }
    let h = g.power(k).expect("2-uniform, k >= 4");
    let op = HyperOp::new(&h, kind);
    let exp_v = 2.0 / k as f64;
    let exp_c = 1.0 / k as f64;
    let mut witnesses = Vec::with_capacity(roots.len());
    let mut notes = Vec::new();
    for &lambda in &roots {
        // core scale (lambda-1)^(-1/2) for Q, (1-lambda)^(-1/2) for L;
        // principal branch first, flipped sign as fallback
        let base = match kind {
            TensorKind::SignlessLaplacian => lambda - one,
            _ => one - lambda,
        };
        let scale = base.powf(-0.5);
        let mut pair = None;
        let mut best_residual = f64::INFINITY;
        for (flip, s) in [(false, scale), (true, -scale)] {
            let mut y = vec![Complex64::zero(); h.n()];
            for (u, xu) in x.iter().enumerate() {
                y[u] = xu.powf(exp_v);
            }
            for (ei, edge) in g.edges().iter().enumerate() {
                let val = s * (x[edge[0]] * x[edge[1]]).powf(exp_c);
                for t in 0..k - 2 {
                    y[g.n() + ei * (k - 2) + t] = val;
                }
            }
            match eigen_pair(&op, lambda, y, EIGEN_TOL) {
                Ok(p) => {
                    if flip {
                        notes.push(format!(
                            "root {lambda} verified with the flipped core-scale branch"
                        ));
                    }
                    pair = Some(p);
                    break;
                }
                Err(SpectraError::VerificationFailed { residual }) => {
                    best_residual = best_residual.min(residual);
                }
                Err(err) => return Err(err),
            }
        }
        match pair {
            Some(p) => witnesses.push(p),
            None => {
                return Err(SpectraError::VerificationFailed {
                    residual: best_residual,
                })
            }
        }
    }
    let rho = if (alpha - Complex64::new(d, 0.0)).norm() < 1e-9
        && kind == TensorKind::SignlessLaplacian
    {
        largest_real_root(&roots)
    } else {
        None
    };
    Ok(LiftReport {
        kind,
        source: alpha,
        lifted: roots,
        witnesses,
        rho,
        notes,
    })
}

/// Signless-Laplacian lift for a d-regular graph: the roots of
/// `(lambda - d)(lambda - 1)^((k-2)/2) = alpha`, each with a verified
/// eigenvector on Q of G^k. When alpha = d, the largest real root is
/// flagged as the spectral radius of Q.
pub fn lift_regular_slap(
    g: &Hypergraph,
    alpha: Complex64,
    x: &[Complex64],
    k: usize,
) -> Result<LiftReport, SpectraError> {
    lift_regular_family(g, alpha, x, k, TensorKind::SignlessLaplacian)
}

/// Laplacian lift for a d-regular graph: the roots of
/// `(d - lambda)(1 - lambda)^((k-2)/2) = alpha`, verified against L of
/// G^k with core scale `(1 - lambda)^(-1/2)`.
pub fn lift_regular_lap(
    g: &Hypergraph,
    alpha: Complex64,
    x: &[Complex64],
    k: usize,
) -> Result<LiftReport, SpectraError> {
    lift_regular_family(g, alpha, x, k, TensorKind::Laplacian)
}

/// Extends an adjacency eigenpair of H - e (edge deleted with its core
/// vertices) to H by placing zeros on the deleted core vertices. Valid
/// whenever e has at least 2 core vertices: the zeros kill every
/// monomial of e in every row.
pub fn extend_eigenvector_zero(
    h: &Hypergraph,
    e: &[usize],
    lambda: Complex64,
    x_sub: &[Complex64],
) -> Result<EigenPair, SpectraError> {
    let del = h
        .remove_edge_with_cores(e)
        .map_err(|_| SpectraError::NoSuchEdge)?;
    if h.n() - del.sub.n() < 2 {
        return Err(SpectraError::TooFewCoreVertices);
    }
    let sub_op = HyperOp::new(&del.sub, TensorKind::Adjacency);
    let r = residual(&sub_op, lambda, x_sub)?;
    if r > 1e-10 {
        return Err(SpectraError::InputResidual(r));
    }
    let x_sub = max_normalize(x_sub);
    let mut y = vec![Complex64::zero(); h.n()];
    for (nv, &ov) in del.new_to_old.iter().enumerate() {
        y[ov] = x_sub[nv];
    }
    let op = HyperOp::new(h, TensorKind::Adjacency);
    eigen_pair(&op, lambda, y, 1e-10)
}

/// The exact signless-Laplacian null vector of an odd bipartition:
/// -1 on V1, +1 elsewhere. The residual is checked in exact rational
/// arithmetic, so 0 here means exactly 0.
pub fn slap_null_witness(h: &Hypergraph, v1: &[usize]) -> Result<EigenPair, SpectraError> {
    let x = bipartition_sign_vector(h, v1).map_err(|_| SpectraError::InvalidWitness)?;
    let op = HyperOp::new(h, TensorKind::SignlessLaplacian);
    let qx: Vec<Rat> = op.apply(&x);
    if qx.iter().any(|v| !v.is_zero()) {
        let worst = qx
            .iter()
            .map(|v| crate::scalar::rat_to_f64(&v.abs()))
            .fold(0.0, f64::max);
        return Err(SpectraError::VerificationFailed { residual: worst });
    }
    Ok(EigenPair {
        lambda: Complex64::zero(),
        x: x.iter().map(rat_to_c64).collect(),
        residual: 0.0,
    })
}

fn phase_vector(values: &[u64], k: usize) -> Vec<Complex64> {
    values
        .iter()
        .map(|&f| Complex64::from_polar(1.0, 2.0 * core::f64::consts::PI * f as f64 / k as f64))
        .collect()
}

/// `-rho(A_H)` as an eigenvalue, witnessed by modulating the Perron
/// vector with the half-sum phases `exp(2 pi i f(v) / k)`: every edge
/// product picks up `exp(pi i) = -1`.
pub fn neg_rho_witness(
    h: &Hypergraph,
    f: &Labeling,
    max_iter: usize,
) -> Result<EigenPair, SpectraError> {
    if h.k() % 2 != 0 {
        return Err(SpectraError::OddK);
    }
    if !h.is_connected() {
        return Err(SpectraError::Disconnected);
    }
    if f.kind != LabelingKind::HalfSum || !f.is_valid_for(h) {
        return Err(SpectraError::InvalidWitness);
    }
    let perron = spectral_radius_power(h, TensorKind::Adjacency, CW_GAP_TOL, max_iter)?;
    let rho = perron.pair.lambda.re;
    let phases = phase_vector(&f.values, h.k());
    let y: Vec<Complex64> = perron
        .pair
        .x
        .iter()
        .zip(&phases)
        .map(|(v, p)| v * p)
        .collect();
    let op = HyperOp::new(h, TensorKind::Adjacency);
    eigen_pair(&op, Complex64::new(-rho, 0.0), y, EIGEN_TOL)
}

/// Constructive evidence gathered for one connected hypergraph:
/// condition (1) = even k and odd-bipartite; condition (4) = a half-sum
/// labeling exists; when (4) holds, a phase null vector of Q and a
/// -rho adjacency witness are built and verified. `specimen` marks the
/// interesting case (4) without (1), only possible when 4 divides k.
#[derive(Debug, Clone)]
pub struct ConjectureReport {
    pub odd_bipartition: Option<Labeling>,
    pub half_sum: Option<Labeling>,
    pub cond1: bool,
    pub cond4: bool,
    pub q_null_witness: Option<EigenPair>,
    pub neg_rho: Option<EigenPair>,
    pub specimen: bool,
}

pub fn conjecture_probe(
    h: &Hypergraph,
    max_iter: usize,
) -> Result<ConjectureReport, SpectraError> {
    if !h.is_connected() {
        return Err(SpectraError::Disconnected);
    }
    let ob = crate::labeling::find_odd_bipartition(h);
    let hs = crate::labeling::find_half_sum_labeling(h);
    let cond1 = h.k() % 2 == 0 && ob.is_some();
    let cond4 = hs.is_some();
    let mut q_null_witness = None;
    let mut neg_rho = None;
    if let Some(f) = &hs {
        let y = phase_vector(&f.values, h.k());
        let op = HyperOp::new(h, TensorKind::SignlessLaplacian);
        q_null_witness = Some(eigen_pair(&op, Complex64::zero(), y, EIGEN_TOL)?);
        neg_rho = Some(neg_rho_witness(h, f, max_iter)?);
    }
    Ok(ConjectureReport {
        specimen: cond4 && !cond1,
        odd_bipartition: ob,
        half_sum: hs,
        cond1,
        cond4,
        q_null_witness,
        neg_rho,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::find_half_sum_labeling;
    use crate::tensor::unit_tensor;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn ones(n: usize) -> Vec<Complex64> {
        vec![Complex64::one(); n]
    }

    #[test]
    fn residual_examples() {
        let t: Tensor<crate::scalar::Rat> = unit_tensor(3, 3);
        let tc = t.to_complex();
        let x = vec![c(0.3), c(-2.0), c(1.0)];
        assert!(residual(&tc, c(1.0), &x).unwrap() < 1e-15);

        let h = Hypergraph::single_edge(3);
        let op = HyperOp::new(&h, TensorKind::Adjacency);
        assert!(residual(&op, c(1.0), &ones(3)).unwrap() < 1e-15);
        assert!((residual(&op, c(2.0), &ones(3)).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(
            residual(&op, c(1.0), &[Complex64::zero(); 3]),
            Err(SpectraError::ZeroVector)
        );
    }

    #[test]
    fn perron_single_edge_and_cycle() {
        let h = Hypergraph::single_edge(4);
        let rep = spectral_radius_power(&h, TensorKind::Adjacency, 1e-10, 2000).unwrap();
        assert!((rep.pair.lambda.re - 1.0).abs() < 1e-8);
        assert!(rep.pair.x.iter().all(|z| (z.re - 1.0).abs() < 1e-6));

        let c3 = Hypergraph::cycle(3);
        let rep = spectral_radius_power(&c3, TensorKind::Adjacency, 1e-10, 2000).unwrap();
        assert!((rep.pair.lambda.re - 2.0).abs() < 1e-8);
        assert!(
            spectral_radius_power(&c3, TensorKind::Laplacian, 1e-10, 100).is_err()
        );
    }

    #[test]
    fn perron_signless_of_cycle_power() {
        // Q of C_3^4: largest real root of (x-2)(x-1) = 2, i.e. 3
        let h = Hypergraph::cycle(3).power(4).unwrap();
        let rep = spectral_radius_power(&h, TensorKind::SignlessLaplacian, 1e-10, 5000).unwrap();
        assert!((rep.pair.lambda.re - 3.0).abs() < 1e-7, "{}", rep.pair.lambda);
        assert!(rep.pair.residual < 1e-7);
    }

    #[test]
    fn perron_disconnected_takes_max() {
        // K_2 plus an isolated triangle-free pair... use P_2 + C_3
        let h = Hypergraph::new(2, 5, vec![vec![0, 1], vec![2, 3], vec![3, 4], vec![2, 4]])
            .unwrap();
        let rep = spectral_radius_power(&h, TensorKind::Adjacency, 1e-10, 2000).unwrap();
        assert!((rep.pair.lambda.re - 2.0).abs() < 1e-8);
        assert_eq!(rep.component_rhos.len(), 2);
        assert!(!rep.warnings.is_empty());
        // eigenvector vanishes on the smaller component
        assert!(rep.pair.x[0].norm() < 1e-12);
        assert!(rep.pair.x[2].norm() > 0.1);
    }

    #[test]
    fn largest_real_root_picks() {
        let roots = [
            Complex64::new(1.5, 1.0),
            Complex64::new(3.0, 0.0),
            Complex64::new(0.0, 0.0),
        ];
        assert_eq!(largest_real_root(&roots), Some(3.0));
        assert_eq!(largest_real_root(&[Complex64::new(1.0, 2.0)]), None);
    }

    #[test]
    fn adjacency_lift_k2_edge() {
        let g = Hypergraph::single_edge(2);
        let pair = lift_adjacency_eigenpair(&g, c(1.0), &ones(2), 3).unwrap();
        assert!((pair.lambda - c(1.0)).norm() < 1e-12);
        assert!(pair.residual < 1e-12);
        assert_eq!(pair.x.len(), 3);
    }

    #[test]
    fn adjacency_lift_p3_matches_power_iteration() {
        let g = Hypergraph::path(3);
        let s = 2.0f64.sqrt();
        let x = [c(1.0), c(s), c(1.0)];
        let pair = lift_adjacency_eigenpair(&g, c(s), &x, 3).unwrap();
        assert!((pair.lambda.re - 2.0f64.powf(1.0 / 3.0)).abs() < 1e-10);
        let h = g.power(3).unwrap();
        let rep = spectral_radius_power(&h, TensorKind::Adjacency, 1e-10, 5000).unwrap();
        assert!((rep.pair.lambda.re - pair.lambda.re).abs() < 1e-6);
    }

    #[test]
    fn adjacency_lift_c3_k4() {
        let g = Hypergraph::cycle(3);
        let pair = lift_adjacency_eigenpair(&g, c(2.0), &ones(3), 4).unwrap();
        assert!((pair.lambda.re - 2.0f64.sqrt()).abs() < 1e-10);
        let h = g.power(4).unwrap();
        let rep = spectral_radius_power(&h, TensorKind::Adjacency, 1e-10, 5000).unwrap();
        assert!((rep.pair.lambda.re - pair.lambda.re).abs() < 1e-6);
    }

    #[test]
    fn adjacency_lift_rejects() {
        let g = Hypergraph::single_edge(2);
        assert!(matches!(
            lift_adjacency_eigenpair(&g, Complex64::zero(), &ones(2), 3),
            Err(SpectraError::ZeroAlpha)
        ));
        assert!(matches!(
            lift_adjacency_eigenpair(&g, c(1.0), &ones(2), 2),
            Err(SpectraError::KTooSmall)
        ));
        // wrong eigenpair
        assert!(matches!(
            lift_adjacency_eigenpair(&g, c(0.5), &ones(2), 3),
            Err(SpectraError::InputResidual(_))
        ));
    }

    #[test]
    fn slap_lift_c3_perron() {
        let g = Hypergraph::cycle(3);
        let rep = lift_regular_slap(&g, c(2.0), &ones(3), 4).unwrap();
        let mut roots: Vec<f64> = rep.lifted.iter().map(|r| r.re).collect();
        roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!(roots[0].abs() < 1e-8 && (roots[1] - 3.0).abs() < 1e-8);
        assert_eq!(rep.rho, largest_real_root(&rep.lifted));
        assert!((rep.rho.unwrap() - 3.0).abs() < 1e-8);
        for w in &rep.witnesses {
            assert!(w.residual <= EIGEN_TOL);
        }
    }

    #[test]
    fn slap_lift_complex_pair() {
        // alpha = -1 on C_3: (lambda-2)(lambda-1) = -1 has a complex pair
        let g = Hypergraph::cycle(3);
        let x = [c(1.0), c(-1.0), c(0.0)];
        let rep = lift_regular_slap(&g, c(-1.0), &x, 4).unwrap();
        assert_eq!(rep.lifted.len(), 2);
        assert!(rep.lifted.iter().all(|r| r.im.abs() > 0.1));
        assert!(rep.rho.is_none());
        for w in &rep.witnesses {
            assert!(w.residual <= EIGEN_TOL);
        }
    }

    #[test]
    fn slap_lift_matching() {
        // d = 1: (lambda-1)^2 = 1 gives {0, 2}
        let g = Hypergraph::single_edge(2);
        let rep = lift_regular_slap(&g, c(1.0), &ones(2), 4).unwrap();
        let mut roots: Vec<f64> = rep.lifted.iter().map(|r| r.re).collect();
        roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!(roots[0].abs() < 1e-8 && (roots[1] - 2.0).abs() < 1e-8);
    }

    #[test]
    fn lap_lift_c3_and_matching() {
        let g = Hypergraph::cycle(3);
        let rep = lift_regular_lap(&g, c(2.0), &ones(3), 4).unwrap();
        let mut roots: Vec<f64> = rep.lifted.iter().map(|r| r.re).collect();
        roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
        // (2-x)(1-x) = 2 -> x^2 - 3x = 0
        assert!(roots[0].abs() < 1e-8 && (roots[1] - 3.0).abs() < 1e-8);
        for w in &rep.witnesses {
            assert!(w.residual <= EIGEN_TOL);
        }

        let m = Hypergraph::single_edge(2);
        let rep = lift_regular_lap(&m, c(1.0), &ones(2), 4).unwrap();
        let mut roots: Vec<f64> = rep.lifted.iter().map(|r| r.re).collect();
        roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!(roots[0].abs() < 1e-8 && (roots[1] - 2.0).abs() < 1e-8);
    }

    #[test]
    fn lift_rejects_irregular_and_odd_k() {
        let g = Hypergraph::path(3); // degrees 1,2,1
        assert!(matches!(
            lift_regular_slap(&g, c(1.0), &ones(3), 4),
            Err(SpectraError::NotRegular) | Err(SpectraError::InputResidual(_))
        ));
        let m = Hypergraph::single_edge(2);
        assert!(matches!(
            lift_regular_slap(&m, c(1.0), &ones(2), 5),
            Err(SpectraError::OddK)
        ));
    }

    #[test]
    fn extend_by_zero_cores() {
        let h = Hypergraph::new(3, 5, vec![vec![0, 1, 2], vec![0, 3, 4]]).unwrap();
        let pair = extend_eigenvector_zero(&h, &[0, 3, 4], c(1.0), &ones(3)).unwrap();
        assert!(pair.residual < 1e-12);
        assert!(pair.x[3].norm() < 1e-15 && pair.x[4].norm() < 1e-15);
        // deleting {0,1,2} also leaves 2 cores here; but a fabricated
        // edge is refused
        assert!(matches!(
            extend_eigenvector_zero(&h, &[1, 3, 4], c(1.0), &ones(3)),
            Err(SpectraError::NoSuchEdge)
        ));
    }

    #[test]
    fn extend_requires_two_cores() {
        // every vertex of {2,3} has degree 2: no core vertices
        let h = Hypergraph::new(2, 4, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3], vec![0, 2]])
            .unwrap();
        let del = h.remove_edge_with_cores(&[0, 2]).unwrap();
        assert_eq!(del.sub.n(), 4);
        assert!(matches!(
            extend_eigenvector_zero(&h, &[0, 2], c(1.0), &ones(4)),
            Err(SpectraError::TooFewCoreVertices)
        ));
    }

    #[test]
    fn slap_null_witness_examples() {
        let h = Hypergraph::single_edge(4);
        let pair = slap_null_witness(&h, &[1]).unwrap();
        assert_eq!(pair.residual, 0.0);
        assert!((pair.x[1] + Complex64::one()).norm() < 1e-15);

        let p3 = Hypergraph::path(3);
        let pair = slap_null_witness(&p3, &[1]).unwrap();
        assert_eq!(pair.residual, 0.0);

        assert!(slap_null_witness(&Hypergraph::single_edge(3), &[0]).is_err());
    }

    #[test]
    fn neg_rho_single_4edge() {
        let h = Hypergraph::single_edge(4);
        let f = Labeling {
            values: vec![2, 0, 0, 0],
            kind: LabelingKind::HalfSum,
        };
        let pair = neg_rho_witness(&h, &f, 2000).unwrap();
        assert!((pair.lambda.re + 1.0).abs() < 1e-8);
        assert!((pair.x[0] + Complex64::one()).norm() < 1e-6);
    }

    #[test]
    fn neg_rho_p3() {
        let h = Hypergraph::path(3);
        let f = find_half_sum_labeling(&h).unwrap();
        let pair = neg_rho_witness(&h, &f, 2000).unwrap();
        assert!((pair.lambda.re + 2.0f64.sqrt()).abs() < 1e-7);
        assert!(neg_rho_witness(&Hypergraph::single_edge(3), &f, 10).is_err());
    }

    #[test]
    fn probe_cases() {
        let rep = conjecture_probe(&Hypergraph::single_edge(4), 2000).unwrap();
        assert!(rep.cond1 && rep.cond4 && !rep.specimen);
        assert!(rep.q_null_witness.unwrap().residual <= EIGEN_TOL);
        assert!(rep.neg_rho.unwrap().residual <= EIGEN_TOL);

        let rep = conjecture_probe(&Hypergraph::cycle(3), 2000).unwrap();
        assert!(!rep.cond1 && !rep.cond4);
        assert!(rep.q_null_witness.is_none() && rep.neg_rho.is_none());

        // k = 6 with an odd bipartition: f = 3 on V1 certifies (4)
        let h =
            Hypergraph::new(6, 7, vec![vec![0, 1, 2, 3, 4, 5], vec![1, 2, 3, 4, 5, 6]]).unwrap();
        let rep = conjecture_probe(&h, 2000).unwrap();
        assert_eq!(rep.cond1, rep.cond4);
    }
}
