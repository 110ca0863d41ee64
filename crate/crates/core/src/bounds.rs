//! Closed-form fixed-point moments of the k-step distribution and the
//! resulting upper and lower bounds on total-variation distance, which
//! pin the mixing profile to the cutoff time (n - 3/2) ln n.
//!
//! The moment formulas expand the permutation representation (and its
//! tensor square) into irreducible blocks, then sum the k-th powers of
//! each block's eigenvalues. They hold for n >= 5; at n = 4 one block
//! degenerates and the expansion is no longer valid.

use crate::error::{Error, Result};
use crate::spectrum::Spectrum;
use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};

fn check_degree(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::DegreeTooSmall { n, min });
    }
    Ok(())
}

/// (expectation, second moment) of the fixed-point count after k steps.
fn closed_moments_float(n: usize, k: u32) -> (f64, f64) {
    let m = n as f64;
    let den = 2.0 * m - 3.0;
    let ki = k as i32;
    // 1 + (-1)^k, the parity factor on the paired eigenvalues.
    let pe = if k % 2 == 0 { 2.0 } else { 0.0 };
    let q = ((2.0 * m - 5.0) / den).powi(ki);
    let r = ((m - 3.0) / den).powi(ki);
    let s = ((2.0 * m - 7.0) / den).powi(ki);
    let mm = (m - 3.0) * q + r * pe;
    let e = 1.0 + mm;
    let block_a = (m - 2.0) * (m - 5.0) / 2.0 * s + (-1.0 / den).powi(ki) + (m - 3.0) * r * pe;
    let block_b = (m - 3.0) * (m - 4.0) / 2.0 * s
        + (3.0 / den).powi(ki)
        + (m - 3.0) * ((m - 5.0) / den).powi(ki) * pe;
    let m2 = 2.0 + 3.0 * mm + block_a + block_b;
    (e, m2)
}

fn closed_moments_exact(n: usize, k: u32) -> (Ratio<BigInt>, Ratio<BigInt>) {
    let m = n as i64;
    let kk = k as usize;
    let p = |base: i64| num_traits::pow(BigInt::from(base), kk);
    let dk = p(2 * m - 3);
    let sign = if k % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    let pe = if k % 2 == 0 {
        BigInt::from(2)
    } else {
        BigInt::zero()
    };
    let mm = BigInt::from(m - 3) * p(2 * m - 5) + &pe * p(m - 3);
    let e_num = &dk + &mm;
    let block_a = BigInt::from((m - 2) * (m - 5) / 2) * p(2 * m - 7)
        + &sign
        + BigInt::from(m - 3) * &pe * p(m - 3);
    let block_b = BigInt::from((m - 3) * (m - 4) / 2) * p(2 * m - 7)
        + p(3)
        + BigInt::from(m - 3) * &pe * p(m - 5);
    let m2_num = BigInt::from(2) * &dk + BigInt::from(3) * mm + block_a + block_b;
    (
        Ratio::new(e_num, dk.clone()),
        Ratio::new(m2_num, dk),
    )
}

/// Expected number of fixed points after k steps, in closed form.
/// Valid from n = 4 (only the near-top block enters).
pub fn expected_fixed_points(n: usize, k: u32) -> Result<f64> {
    check_degree(n, 4)?;
    Ok(closed_moments_float(n, k).0)
}

/// Expected squared number of fixed points after k steps, in closed form.
pub fn expected_squared_fixed_points(n: usize, k: u32) -> Result<f64> {
    check_degree(n, 5)?;
    Ok(closed_moments_float(n, k).1)
}

/// Variance of the fixed-point count after k steps, in closed form.
pub fn fixed_point_variance(n: usize, k: u32) -> Result<f64> {
    check_degree(n, 5)?;
    let (e, m2) = closed_moments_float(n, k);
    Ok(m2 - e * e)
}

pub fn expected_fixed_points_exact(n: usize, k: u32) -> Result<Ratio<BigInt>> {
    check_degree(n, 4)?;
    Ok(closed_moments_exact(n, k).0)
}

pub fn expected_squared_fixed_points_exact(n: usize, k: u32) -> Result<Ratio<BigInt>> {
    check_degree(n, 5)?;
    Ok(closed_moments_exact(n, k).1)
}

pub fn fixed_point_variance_exact(n: usize, k: u32) -> Result<Ratio<BigInt>> {
    check_degree(n, 5)?;
    let (e, m2) = closed_moments_exact(n, k);
    Ok(m2 - &e * &e)
}

/// The l2 upper bound on total-variation distance, summing the squared
/// k-th powers of every eigenvalue except the top one. Exact in the
/// spectrum, so it needs the full tableau enumeration.
pub fn upper_bound_spectral(n: usize, k: u32) -> Result<f64> {
    if n < 4 {
        return Err(Error::DegreeTooSmall { n, min: 4 });
    }
    let spectrum = Spectrum::compute(n)?;
    Ok(upper_bound_spectral_from(&spectrum, k))
}

/// Same bound from a precomputed spectrum.
pub fn upper_bound_spectral_from(spectrum: &Spectrum, k: u32) -> f64 {
    let den = spectrum.den() as f64;
    let mut sum = 0.0f64;
    for entry in spectrum.entries() {
        if entry.num == spectrum.den() as i64 {
            continue;
        }
        let lambda_k = (entry.num as f64 / den).powi(k as i32);
        sum += entry.mult as f64 * lambda_k * lambda_k;
    }
    0.5 * sum.sqrt()
}

fn ln_factorial(n: usize) -> f64 {
    (2..=n).map(|i| (i as f64).ln()).sum()
}

/// Closed-form envelope over the spectral bound: no tableau enumeration,
/// and usable far beyond the exact bound's reach. Dominates the spectral
/// bound at every k (each step of its derivation is an upper bound).
/// Can return infinity for huge n at small k; that is the honest value
/// of the envelope, not an error.
pub fn upper_bound_envelope(n: usize, k: u32) -> Result<f64> {
    check_degree(n, 4)?;
    let m = n as f64;
    let first = (m * m * (-2.0 * k as f64 / (m - 1.5)).exp()).exp_m1();
    let second = (ln_factorial(n) - k as f64).exp();
    Ok(0.5 * (first + second).sqrt())
}

/// Chebyshev-type lower bound on total-variation distance from the
/// fixed-point statistic, clamped to [0, 1].
pub fn lower_bound_fixed_points(n: usize, k: u32) -> Result<f64> {
    let e = expected_fixed_points(n, k)?;
    let v = fixed_point_variance(n, k)?;
    Ok((1.0 - 4.0 * v / (e * e) - 2.0 / e).clamp(0.0, 1.0))
}

/// The total-variation cutoff time (n - 3/2) ln n.
pub fn cutoff_time(n: usize) -> f64 {
    (n as f64 - 1.5) * (n as f64).ln()
}

/// One row of the mixing profile at a fixed step count. The exact
/// spectral bound is the only expensive ingredient, so it is filled in
/// only when a precomputed spectrum is supplied.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundPoint {
    pub k: u32,
    pub ub_spectral: Option<f64>,
    pub ub_envelope: f64,
    pub lb_fixedpoint: f64,
    pub e_k: f64,
    pub v_k: f64,
}

impl BoundPoint {
    pub fn compute(n: usize, k: u32, spectrum: Option<&Spectrum>) -> Result<BoundPoint> {
        if let Some(s) = spectrum {
            if s.n() != n {
                return Err(Error::DegreeMismatch {
                    left: n,
                    right: s.n(),
                });
            }
        }
        Ok(BoundPoint {
            k,
            ub_spectral: spectrum.map(|s| upper_bound_spectral_from(s, k)),
            ub_envelope: upper_bound_envelope(n, k)?,
            lb_fixedpoint: lower_bound_fixed_points(n, k)?,
            e_k: expected_fixed_points(n, k)?,
            v_k: fixed_point_variance(n, k)?,
        })
    }
}
