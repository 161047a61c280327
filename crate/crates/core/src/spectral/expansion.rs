//! Spectral expansion: the second largest singular value of a doubly
//! stochastic transition matrix, by dense SVD or by deflated power
//! iteration.

use nalgebra::{DMatrix, DVector};

use super::{unit_uniform, TransitionMatrixOf};
use crate::error::{Error, Result};
use crate::randgen::SeededRng;
use crate::scalar::{cast, Real};
use crate::tolerance::Tolerances;

/// Seed for the power-iteration start vector; the stream id is the matrix
/// dimension, so the routine is a pure function of its inputs.
const POWER_ITER_SEED: u64 = 0x5eed_0f_2d_i64 as u64;

/// Spectral expansion by dense SVD: the second largest singular value.
///
/// For a 1x1 matrix the maximum in the definition ranges over an empty set;
/// by convention the value is 0.
pub fn spectral_expansion<T: Real>(a: &TransitionMatrixOf<T>) -> T {
    if a.dim() <= 1 {
        return T::zero();
    }
    let sv = a.matrix().clone().svd(false, false).singular_values;
    debug_assert!(sv[1] <= sv[0] + cast::<T>(1e-12));
    clamp_unit(sv[1])
}

/// Spectral expansion by deflated power iteration.
///
/// Iterates `x -> P1 (A^T (A (P1 x)))` where `P1` projects onto the
/// complement of the all-ones direction, with `A^T A` formed once up front.
/// Convergence is declared on the Rayleigh quotient (relative change below
/// `tol`, extrapolated geometrically), so a degenerate second singular value
/// does not impede convergence of the value itself. Returns the square root
/// of the dominant deflated eigenvalue.
pub fn spectral_expansion_power_iter<T: Real>(
    a: &TransitionMatrixOf<T>,
    tol: T,
    max_iters: usize,
) -> Result<T> {
    if tol <= T::zero() {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }
    second_singular_value_power_iter(a.matrix(), tol, max_iters)
}

pub(crate) fn second_singular_value_power_iter<T: Real>(
    a: &DMatrix<T>,
    tol: T,
    max_iters: usize,
) -> Result<T> {
    let n = a.nrows();
    if n <= 1 {
        return Ok(T::zero());
    }
    let gram = a.transpose() * a;
    let unit = unit_uniform::<T>(n);

    // Seeded random start, orthogonalized against the uniform direction.
    let mut rng = SeededRng::new(POWER_ITER_SEED, n as u64);
    let mut v: DVector<T> = DVector::zeros(n);
    loop {
        for x in v.iter_mut() {
            *x = cast::<T>(rng.gen_f64() * 2.0 - 1.0);
        }
        let c = unit.dot(&v);
        v.axpy(-c, &unit, T::one());
        let norm = v.norm();
        if norm > cast::<T>(1e-6) {
            v /= norm;
            break;
        }
    }

    // Absolute floor below which Rayleigh fluctuations are rounding noise of
    // the O(1)-normed Gram matrix, not signal.
    let abs_floor = cast::<T>(1e-13);
    let mut w: DVector<T> = DVector::zeros(n);
    let mut rho_prev: Option<T> = None;
    let mut delta_prev: Option<T> = None;
    let mut last_gap = f64::INFINITY;

    for iter in 1..=max_iters {
        w.gemv(T::one(), &gram, &v, T::zero());
        let c = unit.dot(&w);
        w.axpy(-c, &unit, T::one());

        let rho = v.dot(&w);
        let w_norm = w.norm();
        if w_norm <= cast::<T>(1e-300) {
            // Operator is null on the complement of the uniform direction.
            return Ok(T::zero());
        }

        if let Some(prev) = rho_prev {
            let delta = (rho - prev).abs();
            last_gap = delta.to_f64().unwrap_or(f64::INFINITY);
            // Geometric extrapolation of the remaining error from the ratio
            // of successive Rayleigh increments.
            let est = match delta_prev {
                Some(dp) if dp > T::zero() => {
                    let r = (delta / dp).min(cast::<T>(0.999));
                    delta / (T::one() - r)
                }
                _ => delta,
            };
            if est <= (tol * rho.abs()).max(abs_floor) {
                return Ok(clamp_unit(rho.max(T::zero()).sqrt()));
            }
            delta_prev = Some(delta);
        }
        rho_prev = Some(rho);
        v.copy_from(&w);
        v /= w_norm;
        let _ = iter;
    }
    Err(Error::NoConvergence {
        iters: max_iters,
        gap: last_gap,
    })
}

/// Spectral expansion with the size dispatch from the central tolerances:
/// dense SVD up to `dense_svd_max_dim`, deflated power iteration above.
pub fn lambda<T: Real>(a: &TransitionMatrixOf<T>, tols: &Tolerances) -> Result<T> {
    if a.dim() <= tols.dense_svd_max_dim {
        Ok(spectral_expansion(a))
    } else {
        spectral_expansion_power_iter(a, cast::<T>(tols.power_iter_tol), tols.power_iter_max_iters)
    }
}

/// Spectral expansion plus a degeneracy flag.
#[derive(Debug, Clone, Copy)]
pub struct LambdaReport<T: Real> {
    pub lambda: T,
    /// Set when the second singular value is 1 within the inequality slack:
    /// the graph may be disconnected or periodic; the value alone cannot
    /// tell which.
    pub disconnected_or_periodic: bool,
}

/// [`lambda`] with diagnostics.
pub fn lambda_report<T: Real>(
    a: &TransitionMatrixOf<T>,
    tols: &Tolerances,
) -> Result<LambdaReport<T>> {
    let value = lambda(a, tols)?;
    Ok(LambdaReport {
        lambda: value,
        disconnected_or_periodic: value >= T::one() - cast::<T>(tols.inequality_slack),
    })
}

/// Spectral expansion of the `t`-th matrix power, `lambda(A^t)`: the
/// spectral route to graph powers that avoids explicit rotation maps.
/// Satisfies `lambda(A^t) <= lambda(A)^t` up to rounding.
pub fn matrix_power_expansion<T: Real>(
    a: &TransitionMatrixOf<T>,
    t: u32,
    tols: &Tolerances,
) -> Result<T> {
    lambda(&a.power(t)?, tols)
}

fn clamp_unit<T: Real>(x: T) -> T {
    x.max(T::zero()).min(T::one())
}
