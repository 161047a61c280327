//! Transition matrices, spectral expansion, expansion bounds, and the
//! matrix decompositions used to cross-check the products numerically.
//!
//! The transition matrix of an `M`-regular digraph has `(v, u)` entry equal
//! to the number of edges from `u` to `v` divided by `M`; a probability
//! vector advances by left multiplication. Regularity makes the matrix
//! doubly stochastic, the uniform distribution stationary, and the spectral
//! expansion equal to the second largest singular value.

mod bounds;
mod expansion;
mod svd;

pub use bounds::{bound_f, bound_f_prime};
pub use expansion::{
    lambda, lambda_report, matrix_power_expansion, spectral_expansion,
    spectral_expansion_power_iter, LambdaReport,
};
pub use svd::{sqrt_split, svd_factors, SvdFactorsOf};

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::graph::LabelledDigraph;
use crate::scalar::Real;

/// A doubly stochastic random-walk transition matrix.
///
/// Constructed either from a graph (stochastic by construction) or from a
/// raw matrix via [`TransitionMatrixOf::from_matrix`], which validates the
/// invariants.
#[derive(Debug, Clone, PartialEq)]
pub struct TransitionMatrixOf<T: Real> {
    m: DMatrix<T>,
}

impl<T: Real> TransitionMatrixOf<T> {
    /// Wraps a matrix after checking squareness, entry range and double
    /// stochasticity within `tol`.
    pub fn from_matrix(m: DMatrix<T>, tol: T) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::NotStochastic(format!(
                "matrix is {}x{}, not square",
                m.nrows(),
                m.ncols()
            )));
        }
        let tm = Self { m };
        tm.validate(tol)?;
        Ok(tm)
    }

    /// Wraps a matrix known to be doubly stochastic (products and powers of
    /// validated matrices).
    pub fn from_matrix_unchecked(m: DMatrix<T>) -> Self {
        debug_assert_eq!(m.nrows(), m.ncols());
        Self { m }
    }

    /// Checks entries in `[0, 1]` and row/column sums equal to 1 within
    /// `tol`.
    pub fn validate(&self, tol: T) -> Result<()> {
        let n = self.dim();
        let one = T::one();
        for j in 0..n {
            let mut col = T::zero();
            for i in 0..n {
                let x = self.m[(i, j)];
                if x < -tol || x > one + tol {
                    return Err(Error::NotStochastic(format!(
                        "entry ({}, {}) = {:?} outside [0, 1]",
                        i + 1,
                        j + 1,
                        x.to_f64()
                    )));
                }
                col += x;
            }
            if (col - one).abs() > tol {
                return Err(Error::NotStochastic(format!(
                    "column {} sums to {:?}",
                    j + 1,
                    col.to_f64()
                )));
            }
        }
        for i in 0..n {
            let row = self.m.row(i).sum();
            if (row - one).abs() > tol {
                return Err(Error::NotStochastic(format!(
                    "row {} sums to {:?}",
                    i + 1,
                    row.to_f64()
                )));
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<T> {
        &self.m
    }

    pub fn into_matrix(self) -> DMatrix<T> {
        self.m
    }

    /// The `t`-th matrix power (the transition matrix of the graph power).
    pub fn power(&self, t: u32) -> Result<Self> {
        if t == 0 {
            return Err(Error::InvalidArgument("power exponent must be >= 1".into()));
        }
        let mut p = self.m.clone();
        for _ in 1..t {
            p = &p * &self.m;
        }
        Ok(Self::from_matrix_unchecked(p))
    }
}

/// The transition matrix of a labelled digraph: entry `(v, u)` is the number
/// of `u -> v` edges divided by the degree. Every entry is an integer
/// multiple of `1/M`.
pub fn transition_matrix<T: Real>(g: &LabelledDigraph) -> TransitionMatrixOf<T> {
    let counts = edge_count_matrix(g);
    let n = g.n_vertices();
    let deg = T::from_usize(g.degree()).expect("degree fits scalar");
    let mut m = DMatrix::<T>::zeros(n, n);
    for v in 0..n {
        for u in 0..n {
            let c = counts[(v, u)];
            if c > 0 {
                m[(v, u)] = T::from_u64(c).expect("count fits scalar") / deg;
            }
        }
    }
    TransitionMatrixOf { m }
}

/// Integer edge-count matrix: entry `(v, u)` is the number of `u -> v`
/// edges. The exact-arithmetic companion of [`transition_matrix`].
pub fn edge_count_matrix(g: &LabelledDigraph) -> DMatrix<u64> {
    let n = g.n_vertices();
    let mut counts = DMatrix::<u64>::zeros(n, n);
    for u in 0..n {
        for k in 0..g.degree() {
            let (v, _) = g.rot_unchecked(u, k);
            counts[(v, u)] += 1;
        }
    }
    counts
}

/// The permutation matrix of the rotation map on `[N] x [M]`: entry
/// `((v, l), (u, k))` is 1 exactly when `Rot(u, k) = (v, l)`, with the
/// composite index `u * M + k`.
pub fn rotation_permutation_matrix<T: Real>(g: &LabelledDigraph) -> TransitionMatrixOf<T> {
    let size = g.n_vertices() * g.degree();
    let m = g.degree();
    let mut a = DMatrix::<T>::zeros(size, size);
    for u in 0..g.n_vertices() {
        for k in 0..m {
            let (v, l) = g.rot_unchecked(u, k);
            a[(v * m + l, u * m + k)] = T::one();
        }
    }
    TransitionMatrixOf { m: a }
}

/// The three step matrices of the zig-zag product on `[N] x [M]`:
/// `(I_N (x) B1, A~, I_N (x) B2)` where `Bi` is the transition matrix of
/// `hi` and `A~` is the rotation permutation of `g`. Their product
/// `(I (x) B2) A~ (I (x) B1)` equals the transition matrix of the product
/// graph exactly.
pub fn lift_step_matrices<T: Real>(
    g: &LabelledDigraph,
    h1: &LabelledDigraph,
    h2: &LabelledDigraph,
) -> Result<(
    TransitionMatrixOf<T>,
    TransitionMatrixOf<T>,
    TransitionMatrixOf<T>,
)> {
    let m = g.degree();
    if h1.n_vertices() != m || h2.n_vertices() != m {
        return Err(Error::DimensionMismatch(format!(
            "lift needs both component graphs on [{m}]; got [{}] and [{}]",
            h1.n_vertices(),
            h2.n_vertices()
        )));
    }
    let b1 = transition_matrix::<T>(h1);
    let b2 = transition_matrix::<T>(h2);
    let lift = |b: &TransitionMatrixOf<T>| {
        let size = g.n_vertices() * m;
        let mut out = DMatrix::<T>::zeros(size, size);
        for blk in 0..g.n_vertices() {
            out.view_mut((blk * m, blk * m), (m, m))
                .copy_from(b.matrix());
        }
        TransitionMatrixOf { m: out }
    };
    Ok((lift(&b1), rotation_permutation_matrix(g), lift(&b2)))
}

/// A probability vector on the vertex set.
#[derive(Debug, Clone, PartialEq)]
pub struct DistributionOf<T: Real> {
    p: DVector<T>,
}

impl<T: Real> DistributionOf<T> {
    /// Validates non-negativity and unit total mass within `tol`.
    pub fn new(p: DVector<T>, tol: T) -> Result<Self> {
        for (i, &x) in p.iter().enumerate() {
            if x < -tol {
                return Err(Error::NotStochastic(format!(
                    "distribution entry {} = {:?} is negative",
                    i + 1,
                    x.to_f64()
                )));
            }
        }
        let total = p.sum();
        if (total - T::one()).abs() > tol {
            return Err(Error::NotStochastic(format!(
                "distribution sums to {:?}",
                total.to_f64()
            )));
        }
        Ok(Self { p })
    }

    /// The stationary distribution of a regular digraph: `1/N` everywhere.
    pub fn uniform(n: usize) -> Self {
        let w = T::one() / T::from_usize(n).expect("n fits scalar");
        Self {
            p: DVector::from_element(n, w),
        }
    }

    /// All mass on one vertex.
    pub fn point_mass(n: usize, vertex: usize) -> Self {
        let mut p = DVector::zeros(n);
        p[vertex] = T::one();
        Self { p }
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    pub fn vector(&self) -> &DVector<T> {
        &self.p
    }
}

/// Euclidean distance of the walk from stationarity after `t` steps:
/// `|| A^t mu - pi ||` with `pi` uniform. Bounded by
/// `lambda^t * || mu - pi ||`.
pub fn mixing_distance<T: Real>(
    a: &TransitionMatrixOf<T>,
    mu: &DistributionOf<T>,
    t: u32,
) -> Result<T> {
    if mu.len() != a.dim() {
        return Err(Error::DimensionMismatch(format!(
            "distribution has {} entries, matrix dimension is {}",
            mu.len(),
            a.dim()
        )));
    }
    let mut x = mu.vector().clone();
    let mut y = DVector::zeros(a.dim());
    for _ in 0..t {
        y.gemv(T::one(), a.matrix(), &x, T::zero());
        std::mem::swap(&mut x, &mut y);
    }
    let pi = DistributionOf::<T>::uniform(a.dim());
    Ok((x - pi.vector()).norm())
}

/// Splits a vector on `[N] x [M]` into its per-block mean part and the
/// orthogonal remainder: `x = x_par + x_perp` with `x_par = x_bar (x) 1_M`,
/// `x_bar(u)` the mean of block `u`. Returns `(x_par, x_perp, x_bar)`.
pub fn decompose_parallel_perp<T: Real>(
    x: &DVector<T>,
    n: usize,
    m: usize,
) -> Result<(DVector<T>, DVector<T>, DVector<T>)> {
    if x.len() != n * m {
        return Err(Error::LengthMismatch { len: x.len(), n, m });
    }
    let inv_m = T::one() / T::from_usize(m).expect("m fits scalar");
    let mut bar = DVector::zeros(n);
    for u in 0..n {
        let mut s = T::zero();
        for k in 0..m {
            s += x[u * m + k];
        }
        bar[u] = s * inv_m;
    }
    let mut par = DVector::zeros(n * m);
    for u in 0..n {
        for k in 0..m {
            par[u * m + k] = bar[u];
        }
    }
    let perp = x - &par;
    Ok((par, perp, bar))
}

/// Uniform vector `1/sqrt(n) * (1, ..., 1)`.
pub(crate) fn unit_uniform<T: Real>(n: usize) -> DVector<T> {
    let w = T::one() / T::from_usize(n).expect("n fits scalar").sqrt();
    DVector::from_element(n, w)
}

/// Tolerance used when comparing floats in tests.
#[cfg(test)]
pub(crate) fn assert_close(a: f64, b: f64, tol: f64, what: &str) {
    assert!(
        (a - b).abs() <= tol,
        "{what}: {a} vs {b} (|diff| = {:e} > {tol:e})",
        (a - b).abs()
    );
}
