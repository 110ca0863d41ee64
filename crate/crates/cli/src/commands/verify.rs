//! `verify`: consistency checks tying the group algebra, the tableau
//! spectrum, and the walk engine to one another.

use clap::Args;
use tt2_core::error::Result as CoreResult;
use tt2_core::perm::{even_fixed_point_counts, factorial};
use tt2_core::tableaux::upper_census;
use tt2_core::walk::{ActionTable, DistVector};
use tt2_core::{bounds, jm, spectrum};

use crate::{with_threads, Failure};

#[derive(Args)]
pub(crate) struct VerifyArgs {
    /// Run a single named check
    #[arg(long)]
    pub(crate) only: Option<String>,
    /// Restrict the chosen check to one degree; requires --only
    #[arg(long)]
    pub(crate) n: Option<usize>,
    /// Worker threads (default: all cores)
    #[arg(long)]
    pub(crate) threads: Option<usize>,
}

struct Outcome {
    pass: bool,
    detail: String,
}

struct Check {
    name: &'static str,
    degrees: std::ops::RangeInclusive<usize>,
    run: fn(usize) -> CoreResult<Outcome>,
}

fn registry() -> Vec<Check> {
    vec![
        Check {
            name: "walk-factorization",
            degrees: 2..=6,
            run: walk_factorization,
        },
        Check {
            name: "jm-commutation",
            degrees: 2..=6,
            run: jm_commutation,
        },
        Check {
            name: "jm-twist",
            degrees: 4..=6,
            run: jm_twist,
        },
        Check {
            name: "measure-consistency",
            degrees: 3..=7,
            run: measure_consistency,
        },
        Check {
            name: "trace-oracle",
            degrees: 4..=5,
            run: trace_oracle,
        },
        Check {
            name: "family-spectra",
            degrees: 6..=12,
            run: family_spectra,
        },
        Check {
            name: "upper-tableaux",
            degrees: 4..=8,
            run: upper_tableaux,
        },
        Check {
            name: "fixed-points",
            degrees: 4..=8,
            run: fixed_points,
        },
        Check {
            name: "closed-moments",
            degrees: 6..=6,
            run: closed_moments,
        },
    ]
}

fn walk_factorization(n: usize) -> CoreResult<Outcome> {
    let diff = jm::walk_factorization_diff(n)?;
    Ok(Outcome {
        pass: diff.is_empty(),
        detail: match diff.first() {
            None => "walk element equals its twist-times-sum factorization".into(),
            Some((p, got, want)) => format!(
                "coefficient at {:?} is {got}, the factored form gives {want}",
                p.one_line()
            ),
        },
    })
}

fn jm_commutation(n: usize) -> CoreResult<Outcome> {
    let bad = jm::commutation_check(n)?;
    Ok(Outcome {
        pass: bad.is_empty(),
        detail: match bad.first() {
            None => "alternating elements commute pairwise".into(),
            Some((i, j)) => format!("elements {i} and {j} fail to commute"),
        },
    })
}

fn jm_twist(n: usize) -> CoreResult<Outcome> {
    let bad = jm::twist_relation_check(n)?;
    Ok(Outcome {
        pass: bad.is_empty(),
        detail: match bad.first() {
            None => "twist conjugation shifts each alternating element".into(),
            Some(i) => format!("twist relation fails at index {i}"),
        },
    })
}

fn measure_consistency(n: usize) -> CoreResult<Outcome> {
    let diff = jm::walk_element_measure_diff(n)?;
    Ok(Outcome {
        pass: diff.is_empty(),
        detail: match diff.first() {
            None => "walk element matches the step measure scaled by 2n-3".into(),
            Some((p, got, want)) => format!(
                "coefficient at {:?} is {got}, the measure gives {want}",
                p.one_line()
            ),
        },
    })
}

fn trace_oracle(n: usize) -> CoreResult<Outcome> {
    let report = spectrum::trace_moment_check(n, 20)?;
    Ok(Outcome {
        pass: report.ok(),
        detail: match report.first_mismatch() {
            None => "spectral power sums match closed-walk counts for k <= 20".into(),
            Some(m) => format!(
                "k={}: closed walks {} vs spectral sum {}",
                m.k, m.closed_walks, m.spectral_sum
            ),
        },
    })
}

fn family_spectra(n: usize) -> CoreResult<Outcome> {
    let checks = spectrum::family_spectrum_check(n)?;
    let bad = checks.iter().find(|c| !c.ok());
    Ok(Outcome {
        pass: bad.is_none(),
        detail: match bad {
            None => format!(
                "{} shape families match their predicted per-copy spectra",
                checks.len()
            ),
            Some(c) => format!("family {} deviates from its predicted spectrum", c.shape),
        },
    })
}

fn upper_tableaux(n: usize) -> CoreResult<Outcome> {
    let census = upper_census(n)?;
    Ok(Outcome {
        pass: census.ok(),
        detail: format!(
            "{} of {} standard tableaux are upper",
            census.total_upper, census.total_std
        ),
    })
}

fn fixed_points(n: usize) -> CoreResult<Outcome> {
    let counts = even_fixed_point_counts(n)?;
    let expect = factorial(n - 1) / 2;
    let bad = counts.iter().position(|&c| c != expect);
    Ok(Outcome {
        pass: bad.is_none(),
        detail: match bad {
            None => format!("every point is fixed by exactly {expect} even permutations"),
            Some(i) => format!(
                "point {} is fixed by {} even permutations, expected {expect}",
                i + 1,
                counts[i]
            ),
        },
    })
}

fn closed_moments(n: usize) -> CoreResult<Outcome> {
    let table = ActionTable::build(n)?;
    let mut dist = DistVector::delta_identity_exact(n)?;
    let mut worst = 0.0f64;
    for k in 0..=30u32 {
        let e = dist.expectation_fixed_points()?;
        let v = dist.second_moment_fixed_points()? - e * e;
        worst = worst
            .max((e - bounds::expected_fixed_points(n, k)?).abs())
            .max((v - bounds::fixed_point_variance(n, k)?).abs());
        if k < 30 {
            dist = dist.convolve_step(&table)?;
        }
    }
    Ok(Outcome {
        pass: worst <= 1e-10,
        detail: format!("largest moment deviation {worst:.3e} over k <= 30"),
    })
}

pub(crate) fn run(args: &VerifyArgs) -> Result<(), Failure> {
    let checks = registry();
    let selected: Vec<&Check> = match &args.only {
        None => {
            if args.n.is_some() {
                return Err(Failure::usage("--n only applies together with --only"));
            }
            checks.iter().collect()
        }
        Some(name) => {
            let Some(check) = checks.iter().find(|c| c.name == *name) else {
                let names: Vec<&str> = checks.iter().map(|c| c.name).collect();
                return Err(Failure::usage(format!(
                    "unknown check {name:?}; valid names: {}",
                    names.join(", ")
                )));
            };
            if let Some(n) = args.n {
                if !check.degrees.contains(&n) {
                    return Err(Failure::usage(format!(
                        "check {} covers degrees {}..={}",
                        check.name,
                        check.degrees.start(),
                        check.degrees.end()
                    )));
                }
            }
            vec![check]
        }
    };
    with_threads(args.threads, || run_checks(&selected, args.n))
}

fn run_checks(selected: &[&Check], only_n: Option<usize>) -> Result<(), Failure> {
    let mut passed = 0u32;
    let mut failed = 0u32;
    for check in selected {
        let degrees: Vec<usize> = match only_n {
            Some(n) => vec![n],
            None => check.degrees.clone().collect(),
        };
        for n in degrees {
            let outcome = (check.run)(n)?;
            let status = if outcome.pass { "pass" } else { "FAIL" };
            println!("[{status}] {:<20} n={:<2} {}", check.name, n, outcome.detail);
            if outcome.pass {
                passed += 1;
            } else {
                failed += 1;
            }
        }
    }
    println!("{passed} passed, {failed} failed");
    if failed > 0 {
        return Err(Failure::check(format!("{failed} check(s) failed")));
    }
    Ok(())
}
