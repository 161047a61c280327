//! Graph products on rotation maps: the generalized zig-zag product, the
//! reduced zig-zag product, and powering.
//!
//! Composite encodings are fixed so file output is reproducible across
//! implementations: product vertex `(u, k)` is index `u * M + k`, zig-zag
//! edge label `(i, j)` is index `i * D2 + j` (0-based; the 1-based file view
//! is `(u-1)*M + k` and `(i-1)*D2 + j`). Powering encodes label tuples in
//! base `M`, first step most significant.

use crate::error::{Error, Result};
use crate::graph::LabelledDigraph;
use crate::tolerance::Tolerances;

/// The generalized zig-zag product of `g` with `(h1, h2)`.
///
/// `g` is `M`-regular on `[N]`; `h1`, `h2` live on `[M]` with degrees `D1`,
/// `D2`. The product is `D1*D2`-regular on `[N] x [M]`: a step follows an
/// `h1` edge on the label coordinate, then the deterministic rotation of
/// `g`, then an `h2` edge on the label coordinate.
pub fn zigzag(
    g: &LabelledDigraph,
    h1: &LabelledDigraph,
    h2: &LabelledDigraph,
) -> Result<LabelledDigraph> {
    let (n, m) = (g.n_vertices(), g.degree());
    if h1.n_vertices() != m || h2.n_vertices() != m {
        return Err(Error::DimensionMismatch(format!(
            "zig-zag needs both component graphs on [{m}]; got [{}] and [{}]",
            h1.n_vertices(),
            h2.n_vertices()
        )));
    }
    let (d1, d2) = (h1.degree(), h2.degree());
    let deg = d1 * d2;
    let mut rot = vec![0usize; n * m * deg];
    for u in 0..n {
        for k in 0..m {
            let base = (u * m + k) * deg;
            for i in 0..d1 {
                let (kp, ip) = h1.rot_unchecked(k, i);
                let (v, lp) = g.rot_unchecked(u, kp);
                for j in 0..d2 {
                    let (l, jp) = h2.rot_unchecked(lp, j);
                    rot[base + i * d2 + j] = (v * m + l) * deg + (ip * d2 + jp);
                }
            }
        }
    }
    LabelledDigraph::from_encoded(n * m, deg, rot)
}

/// The reduced zig-zag product `g` with `h` (zig-zag with a trivial second
/// component, on the collapsed label set `[D]`).
///
/// Built directly as the two-step rotation rather than through [`zigzag`]
/// with a trivial graph; the equivalence of the two constructions is covered
/// by tests.
pub fn reduced_zigzag(g: &LabelledDigraph, h: &LabelledDigraph) -> Result<LabelledDigraph> {
    let (n, m) = (g.n_vertices(), g.degree());
    if h.n_vertices() != m {
        return Err(Error::DimensionMismatch(format!(
            "reduced zig-zag needs the component graph on [{m}]; got [{}]",
            h.n_vertices()
        )));
    }
    let d = h.degree();
    let mut rot = vec![0usize; n * m * d];
    for u in 0..n {
        for k in 0..m {
            let base = (u * m + k) * d;
            for i in 0..d {
                let (kp, j) = h.rot_unchecked(k, i);
                let (v, l) = g.rot_unchecked(u, kp);
                rot[base + i] = (v * m + l) * d + j;
            }
        }
    }
    LabelledDigraph::from_encoded(n * m, d, rot)
}

/// The `t`-th power of `g`: the `M^t`-regular graph on `[N]` whose edges are
/// the length-`t` walks. `Rot(v0, (k1, ..., kt)) = (vt, (lt, ..., l1))` with
/// `(vi, li) = Rot_g(v(i-1), ki)`; note the reversed order of the `l`s.
///
/// The rotation table has `N * M^t` entries; above the configured cap the
/// call fails (spectra of large powers are better obtained from transition
/// matrix powers, see the spectral module).
pub fn power(g: &LabelledDigraph, t: u32) -> Result<LabelledDigraph> {
    power_with_cap(g, t, Tolerances::default().explicit_power_cap)
}

/// [`power`] with an explicit cap on rotation entries.
pub fn power_with_cap(g: &LabelledDigraph, t: u32, cap: u64) -> Result<LabelledDigraph> {
    if t == 0 {
        return Err(Error::InvalidArgument("power exponent must be >= 1".into()));
    }
    let (n, m) = (g.n_vertices(), g.degree());
    let entries = (m as u128)
        .checked_pow(t)
        .and_then(|d| d.checked_mul(n as u128))
        .ok_or(Error::PowerTooLarge {
            entries: u128::MAX,
            cap,
        })?;
    if entries > cap as u128 {
        return Err(Error::PowerTooLarge { entries, cap });
    }

    let t = t as usize;
    let deg = m.pow(t as u32);
    let mut rot = vec![0usize; n * deg];
    let mut steps = vec![0usize; t];
    let mut exits = vec![0usize; t];
    for v0 in 0..n {
        for c in 0..deg {
            // Decode (k1, ..., kt) from c, k1 most significant.
            let mut cc = c;
            for i in (0..t).rev() {
                steps[i] = cc % m;
                cc /= m;
            }
            let mut v = v0;
            for i in 0..t {
                let (nv, l) = g.rot_unchecked(v, steps[i]);
                v = nv;
                exits[i] = l;
            }
            // Encode (lt, ..., l1), lt most significant.
            let mut enc = 0usize;
            for i in (0..t).rev() {
                enc = enc * m + exits[i];
            }
            rot[v0 * deg + c] = v * deg + enc;
        }
    }
    LabelledDigraph::from_encoded(n, deg, rot)
}
