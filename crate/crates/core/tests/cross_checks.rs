//! Cross-module consistency: the tableau spectrum, the convolution
//! engine, and the closed-form bounds must all describe the same walk.

use num_bigint::BigInt;
use num_traits::pow;
use tt2_core::perm::factorial;
use tt2_core::walk::{ActionTable, DistVector};
use tt2_core::{bounds, Spectrum};

/// The group order times the k-step return probability equals the sum
/// of k-th powers of all eigenvalues (the operator's trace). This ties
/// the full tableau spectrum to the production convolution engine with
/// exact integer arithmetic.
#[test]
fn spectrum_power_sums_equal_walk_return_traces() {
    let n = 6usize;
    let spectrum = Spectrum::compute(n).unwrap();
    let table = ActionTable::build(n).unwrap();
    let order = BigInt::from(factorial(n) / 2);
    let mut dist = DistVector::delta_identity_exact(n).unwrap();
    for k in 0..=12usize {
        let return_num = BigInt::from(dist.values_exact().unwrap()[0].clone());
        let power_sum: BigInt = spectrum
            .entries()
            .iter()
            .map(|e| BigInt::from(e.mult) * pow(BigInt::from(e.num), k))
            .sum();
        assert_eq!(&order * &return_num, power_sum, "k={k}");
        dist = dist.convolve_step(&table).unwrap();
    }
}

/// Lower bound <= exact TV <= spectral upper bound for every k up to 60,
/// and past the cutoff the closed-form envelope dominates the spectral
/// bound.
#[test]
fn bounds_sandwich_the_walk_at_degrees_five_and_six() {
    for n in [5usize, 6] {
        let spectrum = Spectrum::compute(n).unwrap();
        let table = ActionTable::build(n).unwrap();
        let tau = bounds::cutoff_time(n);
        let mut dist = DistVector::delta_identity_exact(n).unwrap();
        for k in 0..=60u32 {
            let tv = dist.tv_to_uniform().unwrap();
            let lb = bounds::lower_bound_fixed_points(n, k).unwrap();
            let ub = bounds::upper_bound_spectral_from(&spectrum, k);
            assert!(lb <= tv + 1e-9, "n={n} k={k}: lb {lb} > tv {tv}");
            assert!(tv <= ub + 1e-9, "n={n} k={k}: tv {tv} > ub {ub}");
            if (k as f64) >= tau {
                let env = bounds::upper_bound_envelope(n, k).unwrap();
                assert!(ub <= env + 1e-9, "n={n} k={k}: ub {ub} > envelope {env}");
            }
            dist = dist.convolve_step(&table).unwrap();
        }
    }
}

/// At n = 5 the numerator of the expected fixed-point count over the
/// implicit denominator 7^k collapses to 7^k + 2*5^k + 2^k (1 + (-1)^k).
#[test]
fn degree_five_moment_numerators_have_closed_form() {
    let n = 5usize;
    let table = ActionTable::build(n).unwrap();
    let mut dist = DistVector::delta_identity_exact(n).unwrap();
    for k in 0..=15usize {
        let weighted: BigInt = dist
            .values_exact()
            .unwrap()
            .iter()
            .enumerate()
            .filter(|(_, v)| !num_traits::Zero::is_zero(*v))
            .map(|(rank, v)| {
                let p = tt2_core::Perm::unrank(tt2_core::PermRank(rank as u64), n).unwrap();
                BigInt::from(v.clone()) * BigInt::from(p.fixed_points() as u64)
            })
            .sum();
        let parity = if k % 2 == 0 { 2 } else { 0 };
        let expect = pow(BigInt::from(7), k)
            + BigInt::from(2) * pow(BigInt::from(5), k)
            + BigInt::from(parity) * pow(BigInt::from(2), k);
        assert_eq!(weighted, expect, "k={k}");
        dist = dist.convolve_step(&table).unwrap();
    }
}
