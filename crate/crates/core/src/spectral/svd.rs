//! Singular value decomposition with a reproducible orientation, and the
//! square-root split of a doubly stochastic matrix.

use nalgebra::{DMatrix, DVector};

use super::{unit_uniform, TransitionMatrixOf};
use crate::scalar::{cast, Real};

/// Orthogonal factors and singular values of a transition matrix:
/// `A = left * diag(singular_values) * right^T`, values non-increasing.
///
/// For a doubly stochastic matrix the top singular value is 1 with the
/// normalized all-ones vector on both sides; the constructor orients the
/// factors so this holds even when the top value is degenerate, and fixes
/// remaining sign ambiguity by making the largest-magnitude entry of each
/// left column positive.
#[derive(Debug, Clone)]
pub struct SvdFactorsOf<T: Real> {
    pub left: DMatrix<T>,
    pub right: DMatrix<T>,
    pub singular_values: DVector<T>,
}

impl<T: Real> SvdFactorsOf<T> {
    /// `left * diag(sigma) * right^T`.
    pub fn reconstruct(&self) -> DMatrix<T> {
        &self.left * DMatrix::from_diagonal(&self.singular_values) * self.right.transpose()
    }

    /// Frobenius norm of `reconstruct() - a`.
    pub fn reconstruction_error(&self, a: &DMatrix<T>) -> T {
        (self.reconstruct() - a).norm()
    }
}

/// Computes oriented SVD factors of a doubly stochastic matrix.
pub fn svd_factors<T: Real>(a: &TransitionMatrixOf<T>) -> SvdFactorsOf<T> {
    let n = a.dim();
    let svd = a.matrix().clone().svd(true, true);
    let mut left = svd.u.expect("u requested");
    let mut right = svd.v_t.expect("v_t requested").transpose();
    let sigma = svd.singular_values;
    debug_assert!(
        (1..n).all(|i| sigma[i] <= sigma[i - 1]),
        "singular values sorted non-increasing"
    );

    orient_top_block(a.matrix(), &mut left, &mut right, &sigma);

    // Sign convention: the largest-magnitude entry of each left column is
    // positive; the paired right column flips with it.
    for c in 0..n {
        let col = left.column(c);
        let mut arg = 0;
        let mut best = T::zero();
        for (i, &x) in col.iter().enumerate() {
            if x.abs() > best {
                best = x.abs();
                arg = i;
            }
        }
        if left[(arg, c)] < T::zero() {
            left.column_mut(c).neg_mut();
            right.column_mut(c).neg_mut();
        }
    }

    SvdFactorsOf {
        left,
        right,
        singular_values: sigma,
    }
}

/// Rotates the top singular block so the first pair of vectors is the
/// normalized all-ones direction. Doubly stochastic matrices fix the uniform
/// vector on both sides, but when the top value is degenerate (identity,
/// permutation matrices) the raw SVD may return any basis of the block.
fn orient_top_block<T: Real>(
    a: &DMatrix<T>,
    left: &mut DMatrix<T>,
    right: &mut DMatrix<T>,
    sigma: &DVector<T>,
) {
    let n = a.nrows();
    let block_tol = cast::<T>(1e-12) * T::one().max(sigma[0]);
    let b = (0..n)
        .take_while(|&i| sigma[i] >= sigma[0] - block_tol)
        .count();

    let u = unit_uniform::<T>(n);
    // Component of the uniform vector inside the block's right-singular span.
    let coeffs = right.columns(0, b).transpose() * &u;
    if (coeffs.norm() - T::one()).abs() > cast::<T>(1e-10) {
        // Uniform direction not (numerically) inside the top block; leave
        // the factors as computed.
        return;
    }
    let mut span_u = right.columns(0, b) * coeffs;
    span_u /= span_u.norm();

    // Gram-Schmidt: uniform first, completed from the existing block columns.
    let mut basis: Vec<DVector<T>> = Vec::with_capacity(b);
    basis.push(span_u);
    for c in 0..b {
        if basis.len() == b {
            break;
        }
        let mut w = right.column(c).into_owned();
        for _ in 0..2 {
            for q in &basis {
                let proj = q.dot(&w);
                w.axpy(-proj, q, T::one());
            }
        }
        let norm = w.norm();
        if norm > cast::<T>(1e-8) {
            w /= norm;
            basis.push(w);
        }
    }
    if basis.len() != b {
        return;
    }

    // Within the block the matrix acts isometrically, so the left basis is
    // the image of the right one.
    for (c, q) in basis.into_iter().enumerate() {
        let mut p = a * &q;
        let norm = p.norm();
        if norm <= cast::<T>(1e-8) {
            return;
        }
        p /= norm;
        left.set_column(c, &p);
        right.set_column(c, &q);
    }
}

/// Splits a doubly stochastic matrix `B = P Sigma Q^T` into
/// `B1 = P sqrt(Sigma) P^T` and `B2 = P sqrt(Sigma) Q^T`, so that
/// `B1 * B2 = B`, both factors fix the all-ones vector, and the singular
/// values of each factor are the square roots of those of `B`.
pub fn sqrt_split<T: Real>(b: &TransitionMatrixOf<T>) -> (DMatrix<T>, DMatrix<T>) {
    let f = svd_factors(b);
    let root = DMatrix::from_diagonal(&f.singular_values.map(|s| s.max(T::zero()).sqrt()));
    let b1 = &f.left * &root * f.left.transpose();
    let b2 = &f.left * &root * f.right.transpose();
    (b1, b2)
}
