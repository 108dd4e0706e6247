//! Closed-form lower bounds on boundaries and path counts.
//!
//! * `e(x)`: edge-boundary surrogate, real-valued.
//! * `b(x)`, `s(x)`: vertex-boundary and surface surrogates, exact rationals
//!   built from the level decomposition `x = Σ_{i≤k} C(n,i) + α·C(n,k+1)`.
//! * Fractional binomials for the Lovász form of Kruskal–Katona.

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational used for `α`, `b` and `s`.
pub type Rational = Ratio<i128>;

/// Largest dimension the bound functions accept.
pub const MAX_BOUND_DIM: u32 = 64;

fn check_bound_dim(n: u32) -> Result<()> {
    if (1..=MAX_BOUND_DIM).contains(&n) {
        Ok(())
    } else {
        Err(Error::DimensionOutOfRange {
            dim: n as usize,
            max: MAX_BOUND_DIM as usize,
        })
    }
}

fn cube_size(n: u32) -> u128 {
    1u128 << n
}

/// `C(n, k)`, zero outside `0..=n`. Exact for `n ≤ 64`.
pub fn binomial(n: u32, k: i64) -> u128 {
    if k < 0 || k > i64::from(n) {
        return 0;
    }
    let k = k.min(i64::from(n) - k) as u128;
    let n = u128::from(n);
    (0..k).fold(1u128, |acc, j| acc * (n - j) / (j + 1))
}

/// `x = Σ_{i=0}^{k} C(n,i) + α·C(n,k+1)` with `0 ≤ α < 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelDecomposition {
    pub n: u32,
    pub k: u32,
    pub alpha: Rational,
    /// `x − Σ_{i≤k} C(n,i)`, the numerator of `α` over `C(n,k+1)`.
    remainder: u128,
}

impl LevelDecomposition {
    /// Recomputes `x` from `k` and `α`.
    pub fn reconstruct(&self) -> Rational {
        let base: u128 = (0..=self.k).map(|i| binomial(self.n, i.into())).sum();
        Rational::from_integer(base as i128)
            + self.alpha * Rational::from_integer(binomial(self.n, i64::from(self.k) + 1) as i128)
    }
}

/// Splits `1 ≤ x ≤ 2^n` into its level `k` and fractional part `α`.
pub fn level_decompose(n: u32, x: u128) -> Result<LevelDecomposition> {
    check_bound_dim(n)?;
    if x == 0 || x > cube_size(n) {
        return Err(Error::CountOutOfRange {
            count: x,
            min: 1,
            max: cube_size(n),
        });
    }
    let mut base = 0u128;
    let mut k = 0u32;
    loop {
        base += binomial(n, k.into());
        let next = binomial(n, i64::from(k) + 1);
        if x < base + next || k == n {
            let remainder = x - base;
            let alpha = if next == 0 {
                Rational::zero()
            } else {
                Rational::new(remainder as i128, next as i128)
            };
            return Ok(LevelDecomposition {
                n,
                k,
                alpha,
                remainder,
            });
        }
        k += 1;
    }
}

// (1−α)·C(n,lo) + α·C(n,lo+1) in exact arithmetic.
fn interpolate(d: &LevelDecomposition, lo: i64) -> Result<Rational> {
    let denom = binomial(d.n, i64::from(d.k) + 1);
    let low = binomial(d.n, lo);
    if denom == 0 {
        return Ok(Rational::from_integer(low as i128));
    }
    let high = binomial(d.n, lo + 1);
    let r = d.remainder;
    let num = (denom - r)
        .checked_mul(low)
        .and_then(|p| r.checked_mul(high).and_then(|q| p.checked_add(q)))
        .ok_or(Error::Overflow("level interpolation"))?;
    let num = i128::try_from(num).map_err(|_| Error::Overflow("level interpolation"))?;
    Ok(Rational::new(num, denom as i128))
}

/// `b_n(x) = (1−α)C(n,k+1) + α·C(n,k+2)`.
pub fn func_b(n: u32, x: u128) -> Result<Rational> {
    let d = level_decompose(n, x)?;
    interpolate(&d, i64::from(d.k) + 1)
}

/// `s_n(x) = (1−α)C(n,k) + α·C(n,k+1)`.
pub fn func_s(n: u32, x: u128) -> Result<Rational> {
    let d = level_decompose(n, x)?;
    interpolate(&d, i64::from(d.k))
}

/// `e_n(x)`: `x(n − log₂x)` up to `2^{n−1}`, mirrored above it; zero at both ends.
pub fn func_e(n: u32, x: u128) -> Result<f64> {
    check_bound_dim(n)?;
    let total = cube_size(n);
    if x > total {
        return Err(Error::CountOutOfRange {
            count: x,
            min: 0,
            max: total,
        });
    }
    let y = if x <= total / 2 { x } else { total - x };
    if y == 0 {
        return Ok(0.0);
    }
    let y = y as f64;
    Ok(y * (f64::from(n) - y.log2()))
}

/// `C(x, r) = x(x−1)⋯(x−r+1)/r!` for real `x`.
pub fn fractional_binomial(x: f64, r: u32) -> f64 {
    (0..r).fold(1.0, |acc, j| acc * (x - f64::from(j)) / f64::from(j + 1))
}

/// The unique `x > r − 1` with `C(x, r) = m`.
///
/// Integer solutions are returned exactly; otherwise bisection runs until the
/// bracket stops shrinking, which is far below `1e-9`.
pub fn solve_kk_threshold(m: u128, r: u32) -> Result<f64> {
    if r == 0 {
        return Err(Error::Input("rank r must be at least 1".into()));
    }
    if m == 0 {
        return Err(Error::CountOutOfRange {
            count: 0,
            min: 1,
            max: u128::MAX,
        });
    }
    let target = m as f64;
    let mut lo = f64::from(r - 1);
    let mut hi = f64::from(r);
    let mut grow = 0;
    while fractional_binomial(hi, r) < target {
        lo = hi;
        hi *= 2.0;
        grow += 1;
        if grow > 200 || !hi.is_finite() {
            return Err(Error::NoConvergence(format!(
                "no bracket for C(x, {r}) = {m}"
            )));
        }
    }
    for _ in 0..2000 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if fractional_binomial(mid, r) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if hi - lo > 1e-9 * hi.max(1.0) {
        return Err(Error::NoConvergence(format!(
            "bracket [{lo}, {hi}] for C(x, {r}) = {m}"
        )));
    }
    let x = 0.5 * (lo + hi);
    let t = x.round();
    if t >= f64::from(r) && t <= f64::from(MAX_BOUND_DIM) && binomial(t as u32, r.into()) == m {
        return Ok(t);
    }
    Ok(x)
}

fn check_pair(n: u32, a: u128, b: u128) -> Result<()> {
    check_bound_dim(n)?;
    let total = cube_size(n);
    for v in [a, b] {
        if v == 0 {
            return Err(Error::CountOutOfRange {
                count: v,
                min: 1,
                max: total,
            });
        }
    }
    if a + b > total {
        return Err(Error::CountOutOfRange {
            count: a + b,
            min: 2,
            max: total,
        });
    }
    Ok(())
}

/// `min{e(a), e(b), 2^{n−1}}`: lower bound on edge-disjoint paths.
pub fn bl_edge_bound(n: u32, a: u128, b: u128) -> Result<f64> {
    check_pair(n, a, b)?;
    let half = (cube_size(n) / 2) as f64;
    Ok(func_e(n, a)?.min(func_e(n, b)?).min(half))
}

/// `min{b(a), b(b)}`: lower bound on interior-disjoint paths.
pub fn bl_vertex_bound(n: u32, a: u128, b: u128) -> Result<Rational> {
    check_pair(n, a, b)?;
    Ok(func_b(n, a)?.min(func_b(n, b)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    E,
    B,
    S,
}

/// A bound value: exact for `b`, `s`; floating point for `e`.
#[derive(Clone, Debug, PartialEq)]
pub enum BoundValue {
    Exact(Rational),
    Real(f64),
}

impl BoundValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            BoundValue::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            BoundValue::Real(x) => *x,
        }
    }
}

pub fn evaluate(kind: BoundKind, n: u32, x: u128) -> Result<BoundValue> {
    Ok(match kind {
        BoundKind::E => BoundValue::Real(func_e(n, x)?),
        BoundKind::B => BoundValue::Exact(func_b(n, x)?),
        BoundKind::S => BoundValue::Exact(func_s(n, x)?),
    })
}

/// Point up to which `b_n` is non-decreasing and after which it is
/// non-increasing: `Σ_{i=0}^{⌈n/2⌉−1} C(n,i)`.
pub fn b_turning_point(n: u32) -> u128 {
    (0..n.div_ceil(2)).map(|i| binomial(n, i.into())).sum()
}

/// `Σ_{i=0}^{k} C(n,i)`, the size of the Hamming ball of radius `k`.
pub fn ball_size(n: u32, k: u32) -> u128 {
    (0..=k).map(|i| binomial(n, i.into())).sum()
}
