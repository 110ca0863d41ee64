//! Seeded Monte Carlo simulation of the shuffle. Each trial owns a
//! counter-addressed RNG stream, every accumulator is an exact integer,
//! and the parallel reduction is order-independent, so a (seed, trials)
//! pair gives bitwise-identical statistics at any thread count.

use crate::error::{Error, Result};
use crate::perm::Perm;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Summary statistics of the fixed-point count over repeated walks.
#[derive(Clone, Debug, PartialEq)]
pub struct WalkStats {
    pub n: usize,
    pub k: u32,
    pub trials: u64,
    pub mean: f64,
    pub variance: f64,
    pub ci_half_width: f64,
    pub seed: u64,
}

/// Applies one generator in place. `state` maps positions to values,
/// `pos` is its inverse; both stay consistent. `i` is the 0-based moved
/// point (so the 1-based generator is (i+1, n-1, n)).
fn apply_generator(state: &mut [usize], pos: &mut [usize], i: usize, forward: bool) {
    let n = state.len();
    let xi = pos[i];
    let xm = pos[n - 2];
    let xl = pos[n - 1];
    if forward {
        state[xi] = n - 2;
        state[xm] = n - 1;
        state[xl] = i;
        pos[n - 2] = xi;
        pos[n - 1] = xm;
        pos[i] = xl;
    } else {
        state[xi] = n - 1;
        state[xl] = n - 2;
        state[xm] = i;
        pos[n - 1] = xi;
        pos[n - 2] = xl;
        pos[i] = xm;
    }
}

fn check_degree(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::DegreeTooSmall { n, min: 3 });
    }
    Ok(())
}

fn run_walk(n: usize, k: u32, rng: &mut impl Rng) -> (Vec<usize>, Vec<usize>) {
    let mut state: Vec<usize> = (0..n).collect();
    let mut pos = state.clone();
    let support = 2 * n - 3;
    for _ in 0..k {
        let draw = rng.gen_range(0..support);
        if draw == 0 {
            continue;
        }
        let g = draw - 1;
        apply_generator(&mut state, &mut pos, g / 2, g % 2 == 0);
    }
    (state, pos)
}

/// Number of fixed points of one sampled k-step walk.
pub fn sample_fixed_points(n: usize, k: u32, rng: &mut impl Rng) -> Result<u64> {
    check_degree(n)?;
    let (state, _) = run_walk(n, k, rng);
    Ok(state.iter().enumerate().filter(|(x, v)| x == *v).count() as u64)
}

/// The endpoint permutation of one sampled k-step walk.
pub fn sample_endpoint(n: usize, k: u32, rng: &mut impl Rng) -> Result<Perm> {
    check_degree(n)?;
    let (state, _) = run_walk(n, k, rng);
    let one_line: Vec<usize> = state.iter().map(|v| v + 1).collect();
    Perm::from_one_line(&one_line)
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Estimates the mean and variance of the fixed-point count after k
/// steps from independent trials, with a 95% confidence half-width on
/// the mean.
pub fn estimate_fixed_point_stats(
    n: usize,
    k: u32,
    trials: u64,
    seed: u64,
) -> Result<WalkStats> {
    check_degree(n)?;
    if trials < 2 {
        return Err(Error::Unsupported {
            reason: format!("need at least 2 trials, got {trials}"),
        });
    }
    let (sum, sum_sq) = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t);
            let x = sample_fixed_points(n, k, &mut rng).expect("degree already validated");
            (x, (x as u128) * (x as u128))
        })
        .reduce(|| (0u64, 0u128), |a, b| (a.0 + b.0, a.1 + b.1));
    let t = trials as f64;
    let mean = sum as f64 / t;
    // Exact integer numerator: trials * sum of squares - (sum)^2.
    let var_num = trials as u128 * sum_sq - (sum as u128) * (sum as u128);
    let variance = var_num as f64 / (t * (t - 1.0));
    let ci_half_width = 1.96 * (variance / t).sqrt();
    Ok(WalkStats {
        n,
        k,
        trials,
        mean,
        variance,
        ci_half_width,
        seed,
    })
}
