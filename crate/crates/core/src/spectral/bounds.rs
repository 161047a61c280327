//! Closed-form upper bounds on the spectral expansion of the products.

use crate::error::{Error, Result};
use crate::scalar::{cast, Real};

fn check_unit_interval<T: Real>(name: &'static str, x: T) -> Result<()> {
    if x < T::zero() || x > T::one() {
        return Err(Error::Domain {
            name,
            value: x.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(())
}

/// Upper bound on the spectral expansion of the zig-zag product, given
/// bounds `alpha` on the outer graph and `beta1`, `beta2` on the two
/// component graphs:
///
/// ```text
/// f(a, b1, b2) = 1/2 [ sqrt(a^2 (1-b1^2)(1-b2^2) + (b1+b2)^2)
///              +       sqrt(a^2 (1-b1^2)(1-b2^2) + (b1-b2)^2) ]
/// ```
///
/// The value lies in `[0, 1]`, is symmetric in `beta1`/`beta2`, and equals 1
/// exactly when `(1-alpha)(1-beta1)(1-beta2) = 0`.
pub fn bound_f<T: Real>(alpha: T, beta1: T, beta2: T) -> Result<T> {
    check_unit_interval("alpha", alpha)?;
    check_unit_interval("beta1", beta1)?;
    check_unit_interval("beta2", beta2)?;
    let one = T::one();
    // Grouped so the value is exactly symmetric in beta1 and beta2.
    let c = alpha * alpha * ((one - beta1 * beta1) * (one - beta2 * beta2));
    let plus = beta1 + beta2;
    let minus = beta1 - beta2;
    let half = cast::<T>(0.5);
    let v = half * ((c + plus * plus).sqrt() + (c + minus * minus).sqrt());
    Ok(v.min(one))
}

/// Upper bound for powers of the reduced zig-zag product:
/// `f'(a, b) = f(a, sqrt(b), sqrt(b)) = a(1-b)/2 + sqrt(a^2 (1-b)^2 + 4b)/2`.
/// The `k`-th power of the product has expansion at most `f'^(k-1)`.
pub fn bound_f_prime<T: Real>(alpha: T, beta: T) -> Result<T> {
    check_unit_interval("alpha", alpha)?;
    check_unit_interval("beta", beta)?;
    let one = T::one();
    let half = cast::<T>(0.5);
    let four = cast::<T>(4.0);
    let gap = alpha * (one - beta);
    let v = half * gap + half * (gap * gap + four * beta).sqrt();
    Ok(v.min(one))
}
