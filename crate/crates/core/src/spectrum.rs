//! The exact eigenvalue multiset of the shuffle's transition operator,
//! read off tableau contents, with an integer trace-moment oracle that
//! validates it against brute-force walk counts.

use crate::error::{Error, Result};
use crate::measure::MeasureSpec;
use crate::perm::{factorial, Perm, PermRank};
use crate::tableaux::{partitions, upper_syt, ContentVector, Partition};
use num_bigint::BigInt;
use rayon::prelude::*;
use std::collections::BTreeMap;

/// How an entry's eigenvalue arises from the contents of its tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EigenvalueCase {
    /// a_n = a_{n-1} + 1: single eigenvalue 2a_n - 1.
    Up,
    /// a_n = a_{n-1} - 1: single eigenvalue -(2a_n + 1).
    Down,
    /// a_n and a_{n-1} non-adjacent: +(a_n + a_{n-1}) of the +- pair.
    PairPlus,
    /// a_n and a_{n-1} non-adjacent: -(a_n + a_{n-1}) of the +- pair.
    PairMinus,
}

impl EigenvalueCase {
    pub fn label(&self) -> &'static str {
        match self {
            EigenvalueCase::Up => "up",
            EigenvalueCase::Down => "down",
            EigenvalueCase::PairPlus => "pair+",
            EigenvalueCase::PairMinus => "pair-",
        }
    }
}

/// One eigenvalue numerator with its regular-representation multiplicity.
/// The eigenvalue itself is num/(2n-3).
#[derive(Clone, Debug)]
pub struct SpectrumEntry {
    pub num: i64,
    pub mult: u64,
    pub shape: Partition,
    pub contents: ContentVector,
    pub case: EigenvalueCase,
}

/// The full spectrum for degree n, in canonical order: conjugate-pair
/// representatives in descending partition order, the representative's
/// upper tableaux before its transpose's, pair entries + before -.
#[derive(Clone, Debug)]
pub struct Spectrum {
    n: usize,
    den: u64,
    entries: Vec<SpectrumEntry>,
}

fn entries_for_tableau(
    shape: &Partition,
    contents: ContentVector,
    dim: u64,
    n: usize,
    out: &mut Vec<SpectrumEntry>,
) {
    let an = contents.of(n);
    let an1 = contents.of(n - 1);
    if an == an1 + 1 {
        out.push(SpectrumEntry {
            num: 2 * an - 1,
            mult: dim,
            shape: shape.clone(),
            contents,
            case: EigenvalueCase::Up,
        });
    } else if an == an1 - 1 {
        out.push(SpectrumEntry {
            num: -(2 * an + 1),
            mult: dim,
            shape: shape.clone(),
            contents,
            case: EigenvalueCase::Down,
        });
    } else if an1 < an {
        // The partner tableau with the two top labels swapped regenerates
        // the same pair; only the a_{n-1} < a_n member emits.
        out.push(SpectrumEntry {
            num: an + an1,
            mult: dim,
            shape: shape.clone(),
            contents: contents.clone(),
            case: EigenvalueCase::PairPlus,
        });
        out.push(SpectrumEntry {
            num: -(an + an1),
            mult: dim,
            shape: shape.clone(),
            contents,
            case: EigenvalueCase::PairMinus,
        });
    }
}

fn entries_for_representative(lam: &Partition, n: usize) -> Result<Vec<SpectrumEntry>> {
    let conj = lam.conjugate();
    let dim = lam.dimension()?;
    let mut out = Vec::new();
    for t in upper_syt(lam) {
        entries_for_tableau(t.shape(), t.contents(), dim, n, &mut out);
    }
    if conj != *lam {
        for t in upper_syt(&conj) {
            entries_for_tableau(t.shape(), t.contents(), dim, n, &mut out);
        }
    }
    Ok(out)
}

impl Spectrum {
    /// Full spectrum from tableau contents. The content rules cover the
    /// whole group algebra (total multiplicity n!/2) only from degree 4 up;
    /// at n = 3 they under-count, so that degree is rejected rather than
    /// served incomplete.
    pub fn compute(n: usize) -> Result<Spectrum> {
        if n < 4 {
            return Err(Error::DegreeTooSmall { n, min: 4 });
        }
        let reps: Vec<Partition> = partitions(n)
            .into_iter()
            .filter(|lam| *lam >= lam.conjugate())
            .collect();
        let per_rep: Vec<Result<Vec<SpectrumEntry>>> = reps
            .par_iter()
            .map(|lam| entries_for_representative(lam, n))
            .collect();
        let mut entries = Vec::new();
        for chunk in per_rep {
            entries.extend(chunk?);
        }
        Ok(Spectrum {
            n,
            den: 2 * n as u64 - 3,
            entries,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The common denominator 2n-3.
    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    pub fn total_multiplicity(&self) -> u128 {
        self.entries.iter().map(|e| e.mult as u128).sum()
    }

    /// Total multiplicity per distinct numerator.
    pub fn aggregate(&self) -> BTreeMap<i64, u128> {
        let mut map = BTreeMap::new();
        for e in &self.entries {
            *map.entry(e.num).or_insert(0u128) += e.mult as u128;
        }
        map
    }
}

/// Expected-vs-enumerated count for one eigenvalue numerator within a
/// single irreducible copy.
#[derive(Clone, Debug)]
pub struct FamilyRow {
    pub num: i64,
    pub expected: u64,
    pub actual: u64,
}

/// Per-copy spectrum check for one shape family.
#[derive(Clone, Debug)]
pub struct FamilyCheck {
    pub shape: Partition,
    pub dimension: u64,
    pub rows: Vec<FamilyRow>,
}

impl FamilyCheck {
    pub fn ok(&self) -> bool {
        self.rows.iter().all(|r| r.expected == r.actual)
            && self.rows.iter().map(|r| r.actual).sum::<u64>() == self.dimension
    }
}

/// Verifies the per-copy eigenvalue counts of the four shapes whose first
/// row has at least n-2 boxes: (n), (n-1,1), (n-2,2), (n-2,1,1).
///
/// Per-copy means each tableau contributes count 1 (2 for a pair), without
/// the regular-representation factor d_lambda.
pub fn family_spectrum_check(n: usize) -> Result<Vec<FamilyCheck>> {
    if n < 6 {
        return Err(Error::DegreeTooSmall { n, min: 6 });
    }
    let m = n as i64;
    let families: Vec<(Partition, Vec<(i64, u64)>)> = vec![
        (Partition::new(vec![n])?, vec![(2 * m - 3, 1)]),
        (
            Partition::new(vec![n - 1, 1])?,
            vec![
                (2 * m - 5, n as u64 - 3),
                (m - 3, 1),
                (-(m - 3), 1),
            ],
        ),
        (
            Partition::new(vec![n - 2, 2])?,
            vec![
                (2 * m - 7, ((n - 2) * (n - 5) / 2) as u64),
                (-1, 1),
                (m - 3, n as u64 - 3),
                (-(m - 3), n as u64 - 3),
            ],
        ),
        (
            Partition::new(vec![n - 2, 1, 1])?,
            vec![
                (2 * m - 7, ((n - 3) * (n - 4) / 2) as u64),
                (3, 1),
                (m - 5, n as u64 - 3),
                (-(m - 5), n as u64 - 3),
            ],
        ),
    ];

    let mut checks = Vec::new();
    for (shape, expected_rows) in families {
        // Distinct numerators can coincide within a family (e.g. n-5 = 3
        // at n = 8), so both sides aggregate by numerator.
        let mut expected: BTreeMap<i64, u64> = BTreeMap::new();
        for (num, count) in expected_rows {
            *expected.entry(num).or_insert(0) += count;
        }
        let mut actual: BTreeMap<i64, u64> = BTreeMap::new();
        let conj = shape.conjugate();
        let mut per_copy = Vec::new();
        for t in upper_syt(&shape) {
            entries_for_tableau(t.shape(), t.contents(), 1, n, &mut per_copy);
        }
        for t in upper_syt(&conj) {
            entries_for_tableau(t.shape(), t.contents(), 1, n, &mut per_copy);
        }
        for e in &per_copy {
            *actual.entry(e.num).or_insert(0) += 1;
        }
        let nums: Vec<i64> = expected
            .keys()
            .chain(actual.keys())
            .copied()
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .rev()
            .collect();
        let rows = nums
            .into_iter()
            .map(|num| FamilyRow {
                num,
                expected: expected.get(&num).copied().unwrap_or(0),
                actual: actual.get(&num).copied().unwrap_or(0),
            })
            .collect();
        let dimension = shape.dimension()?;
        checks.push(FamilyCheck {
            shape,
            dimension,
            rows,
        });
    }
    Ok(checks)
}

/// One trace moment: closed-walk count of the k-step transition graph
/// against the spectral power sum.
#[derive(Clone, Debug)]
pub struct TraceMoment {
    pub k: u32,
    pub closed_walks: BigInt,
    pub spectral_sum: BigInt,
}

impl TraceMoment {
    pub fn matches(&self) -> bool {
        self.closed_walks == self.spectral_sum
    }
}

#[derive(Clone, Debug)]
pub struct TraceMomentReport {
    pub n: usize,
    pub moments: Vec<TraceMoment>,
}

impl TraceMomentReport {
    pub fn ok(&self) -> bool {
        self.moments.iter().all(|m| m.matches())
    }

    pub fn first_mismatch(&self) -> Option<&TraceMoment> {
        self.moments.iter().find(|m| !m.matches())
    }
}

/// Exact oracle: builds the integer count matrix A over the even
/// permutations (A[x][y] = 1 iff y is one shuffle step from x, so
/// (2n-3) M = A) and asserts Trace(A^k) = sum(mult * num^k) for
/// k = 1..=k_max. Exact big-integer arithmetic throughout.
pub fn trace_moment_check(n: usize, k_max: u32) -> Result<TraceMomentReport> {
    if n < 4 {
        return Err(Error::DegreeTooSmall { n, min: 4 });
    }
    if n > 5 {
        return Err(Error::DegreeTooLarge { n, max: 5 });
    }
    if k_max > 30 {
        return Err(Error::Unsupported {
            reason: format!("trace moments capped at k_max = 30, got {k_max}"),
        });
    }
    let measure = MeasureSpec::build(n)?;
    let mut states = Vec::new();
    let mut index_of_rank = vec![usize::MAX; factorial(n) as usize];
    for r in 0..factorial(n) {
        let p = Perm::unrank(PermRank(r), n)?;
        if p.is_even() {
            index_of_rank[r as usize] = states.len();
            states.push(p);
        }
    }
    let m = states.len();
    // out_edges[x] lists the states reachable in one step (with repetition
    // impossible: distinct atoms give distinct products).
    let mut out_edges = vec![Vec::with_capacity(measure.support_size()); m];
    for (x, p) in states.iter().enumerate() {
        for atom in measure.atoms() {
            let q = p.compose(&atom.perm)?;
            let y = index_of_rank[q.rank()?.0 as usize];
            out_edges[x].push(y);
        }
    }

    let spectrum = Spectrum::compute(n)?;
    let mut power: Vec<Vec<BigInt>> = (0..m)
        .map(|x| {
            let mut row = vec![BigInt::from(0); m];
            row[x] = BigInt::from(1);
            row
        })
        .collect();

    let mut moments = Vec::new();
    for k in 1..=k_max {
        let mut next: Vec<Vec<BigInt>> = vec![vec![BigInt::from(0); m]; m];
        for x in 0..m {
            for z in 0..m {
                if power[x][z] == BigInt::from(0) {
                    continue;
                }
                for &y in &out_edges[z] {
                    next[x][y] += &power[x][z];
                }
            }
        }
        power = next;
        let closed_walks: BigInt = (0..m).map(|x| power[x][x].clone()).sum();
        let spectral_sum: BigInt = spectrum
            .entries()
            .iter()
            .map(|e| BigInt::from(e.mult) * num_traits::pow(BigInt::from(e.num), k as usize))
            .sum();
        moments.push(TraceMoment {
            k,
            closed_walks,
            spectral_sum,
        });
    }
    Ok(TraceMomentReport { n, moments })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_four_aggregate() {
        let s = Spectrum::compute(4).unwrap();
        assert_eq!(s.den(), 5);
        assert_eq!(s.total_multiplicity(), 12);
        let agg = s.aggregate();
        let expected: BTreeMap<i64, u128> =
            [(5, 1), (3, 3), (1, 3), (-1, 5)].into_iter().collect();
        assert_eq!(agg, expected);
    }

    #[test]
    fn degree_four_entries_in_canonical_order() {
        let s = Spectrum::compute(4).unwrap();
        let got: Vec<(i64, u64, EigenvalueCase, Vec<usize>)> = s
            .entries()
            .iter()
            .map(|e| {
                (
                    e.num,
                    e.mult,
                    e.case,
                    e.shape.parts().to_vec(),
                )
            })
            .collect();
        assert_eq!(
            got,
            vec![
                (5, 1, EigenvalueCase::Up, vec![4]),
                (1, 3, EigenvalueCase::PairPlus, vec![3, 1]),
                (-1, 3, EigenvalueCase::PairMinus, vec![3, 1]),
                (3, 3, EigenvalueCase::Down, vec![2, 1, 1]),
                (-1, 2, EigenvalueCase::Up, vec![2, 2]),
            ]
        );
    }

    #[test]
    fn multiplicities_cover_the_group() {
        for n in 4..=9 {
            let s = Spectrum::compute(n).unwrap();
            assert_eq!(s.total_multiplicity(), factorial(n) as u128 / 2, "n={n}");
        }
    }

    #[test]
    fn top_eigenvalue_is_simple_and_gap_is_two_over_den() {
        for n in 4..=10 {
            let s = Spectrum::compute(n).unwrap();
            let den = s.den() as i64;
            let top: u128 = s
                .entries()
                .iter()
                .filter(|e| e.num == den)
                .map(|e| e.mult as u128)
                .sum();
            assert_eq!(top, 1, "n={n}");
            assert!(s.entries().iter().all(|e| e.num.abs() <= den));
            if n >= 5 {
                let second = s
                    .entries()
                    .iter()
                    .filter(|e| e.num != den)
                    .map(|e| e.num)
                    .max()
                    .unwrap();
                assert_eq!(second, den - 2, "n={n}");
            }
        }
    }

    #[test]
    fn near_top_row_family_entries() {
        // Per the totals convention, the two-row shape (n-1,1) contributes
        // (2n-5) with multiplicity (n-3)(n-1) and +-(n-3) with multiplicity
        // (n-1) each, counting its transpose pair.
        for n in 5..=9 {
            let s = Spectrum::compute(n).unwrap();
            let m = n as i64;
            let family: Vec<&SpectrumEntry> = s
                .entries()
                .iter()
                .filter(|e| {
                    e.shape.parts() == [n - 1, 1] || e.shape.parts().to_vec() == {
                        let mut v = vec![2];
                        v.extend(std::iter::repeat(1).take(n - 2));
                        v
                    }
                })
                .collect();
            let mut agg: BTreeMap<i64, u64> = BTreeMap::new();
            for e in &family {
                *agg.entry(e.num).or_insert(0) += e.mult;
            }
            let d = (n - 1) as u64;
            let expected: BTreeMap<i64, u64> = [
                (2 * m - 5, (n as u64 - 3) * d),
                (m - 3, d),
                (-(m - 3), d),
            ]
            .into_iter()
            .collect();
            assert_eq!(agg, expected, "n={n}");
        }
    }

    #[test]
    fn family_check_passes_and_reports_per_copy_rows() {
        for n in 6..=9 {
            let checks = family_spectrum_check(n).unwrap();
            assert_eq!(checks.len(), 4);
            for c in &checks {
                assert!(c.ok(), "n={n} shape {} rows {:?}", c.shape, c.rows);
            }
        }
        let checks = family_spectrum_check(10).unwrap();
        let two_row: BTreeMap<i64, u64> = checks[1]
            .rows
            .iter()
            .map(|r| (r.num, r.actual))
            .collect();
        assert_eq!(
            two_row,
            [(15, 7), (7, 1), (-7, 1)].into_iter().collect()
        );
        let hooked: BTreeMap<i64, u64> = checks[3]
            .rows
            .iter()
            .map(|r| (r.num, r.actual))
            .collect();
        assert_eq!(
            hooked,
            [(13, 21), (3, 1), (5, 7), (-5, 7)].into_iter().collect()
        );
    }

    #[test]
    fn family_check_rejects_small_degrees() {
        assert!(family_spectrum_check(5).is_err());
    }

    #[test]
    fn spectrum_rejects_degrees_the_content_rules_do_not_cover() {
        assert!(Spectrum::compute(3).is_err());
        assert!(Spectrum::compute(2).is_err());
    }

    #[test]
    fn trace_moments_match_at_degree_four() {
        let report = trace_moment_check(4, 20).unwrap();
        assert!(report.ok(), "{:?}", report.first_mismatch());
        assert_eq!(report.moments[0].closed_walks, BigInt::from(12));
        assert_eq!(report.moments[1].closed_walks, BigInt::from(60));
    }

    #[test]
    fn swapping_pair_representatives_keeps_the_spectrum() {
        for n in [6usize, 7] {
            let canonical = Spectrum::compute(n).unwrap().aggregate();
            let mut swapped: BTreeMap<i64, u128> = BTreeMap::new();
            for lam in partitions(n) {
                if lam > lam.conjugate() {
                    continue;
                }
                for e in entries_for_representative(&lam, n).unwrap() {
                    *swapped.entry(e.num).or_insert(0) += e.mult as u128;
                }
            }
            assert_eq!(canonical, swapped, "n={n}");
        }
    }
}
