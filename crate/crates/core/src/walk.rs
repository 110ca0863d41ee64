//! Dense k-step distributions of the shuffle, computed by repeated
//! convolution over the full rank space of S_n (odd ranks stay zero).
//!
//! Two value modes share one engine: `f64` probabilities, and exact
//! integer numerators over the implicit denominator (2n-3)^step.

use crate::error::{Error, Result};
use crate::measure::MeasureSpec;
use crate::perm::{factorial, Parity, ParityScan, Perm, PermRank};
use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use std::fmt;
use std::fs;
use std::io::Write as _;
use std::path::Path;

/// Largest degree whose state ranks fit in u32 (13! overflows).
pub const MAX_TABLE_DEGREE: usize = 12;

const CACHE_MAGIC: &[u8; 4] = b"TT2S";
const CACHE_VERSION: u16 = 1;

/// Ranks handled per parallel work unit; fixed so float convolution is
/// bitwise reproducible across thread counts.
const PAR_CHUNK: usize = 4096;

fn check_degree_bounds(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::DegreeTooSmall { n, min: 3 });
    }
    if n > MAX_TABLE_DEGREE {
        return Err(Error::DegreeTooLarge {
            n,
            max: MAX_TABLE_DEGREE,
        });
    }
    Ok(())
}

/// Precomputed right action of the 2n-4 generators on ranks:
/// `row(r)[c]` is the rank of `unrank(r)` followed by generator c,
/// with generators in measure order (i ascending, forward then backward).
#[derive(Clone, PartialEq, Eq)]
pub struct ActionTable {
    n: usize,
    generators: usize,
    flat: Vec<u32>,
}

impl fmt::Debug for ActionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ActionTable")
            .field("n", &self.n)
            .field("generators", &self.generators)
            .field("states", &(self.flat.len() / self.generators.max(1)))
            .finish()
    }
}

impl ActionTable {
    pub fn build(n: usize) -> Result<ActionTable> {
        check_degree_bounds(n)?;
        let measure = MeasureSpec::build(n)?;
        let gens: Vec<Perm> = measure
            .generators()
            .iter()
            .map(|a| a.perm.clone())
            .collect();
        let m = gens.len();
        let states = factorial(n) as usize;
        let mut flat = vec![0u32; states * m];
        flat.par_chunks_mut(m * PAR_CHUNK)
            .enumerate()
            .try_for_each(|(ci, chunk)| -> Result<()> {
                let base = ci * PAR_CHUNK;
                for (j, row) in chunk.chunks_mut(m).enumerate() {
                    let p = Perm::unrank(PermRank((base + j) as u64), n)?;
                    for (c, g) in gens.iter().enumerate() {
                        row[c] = p.compose(g)?.rank()?.0 as u32;
                    }
                }
                Ok(())
            })?;
        Ok(ActionTable {
            n,
            generators: m,
            flat,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    fn row(&self, rank: usize) -> &[u32] {
        &self.flat[rank * self.generators..(rank + 1) * self.generators]
    }

    pub fn cache_file_name(n: usize) -> String {
        format!("tt2-action-n{n:02}.bin")
    }

    /// Writes via a temp file and rename, so concurrent readers never
    /// observe a partial cache.
    pub fn write_cache(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        {
            let file = fs::File::create(&tmp)?;
            let mut w = std::io::BufWriter::new(file);
            w.write_all(CACHE_MAGIC)?;
            w.write_all(&CACHE_VERSION.to_le_bytes())?;
            w.write_all(&(self.n as u16).to_le_bytes())?;
            for &v in &self.flat {
                w.write_all(&v.to_le_bytes())?;
            }
            w.flush()?;
        }
        fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn read_cache(path: &Path, n: usize) -> Result<ActionTable> {
        check_degree_bounds(n)?;
        let bytes = fs::read(path)?;
        let bad = |reason: &str| Error::BadCache {
            reason: reason.to_string(),
        };
        if bytes.len() < 8 || &bytes[0..4] != CACHE_MAGIC {
            return Err(bad("missing header magic"));
        }
        let version = u16::from_le_bytes([bytes[4], bytes[5]]);
        if version != CACHE_VERSION {
            return Err(bad(&format!("unsupported version {version}")));
        }
        let stored_n = u16::from_le_bytes([bytes[6], bytes[7]]) as usize;
        if stored_n != n {
            return Err(bad(&format!("built for degree {stored_n}, wanted {n}")));
        }
        let m = 2 * n - 4;
        let states = factorial(n);
        let count = states as usize * m;
        if bytes.len() != 8 + 4 * count {
            return Err(bad("wrong payload length"));
        }
        let mut flat = Vec::with_capacity(count);
        for chunk in bytes[8..].chunks_exact(4) {
            let v = u32::from_le_bytes([chunk[0], chunk[1], chunk[2], chunk[3]]);
            if (v as u64) >= states {
                return Err(bad("state rank out of range"));
            }
            flat.push(v);
        }
        Ok(ActionTable {
            n,
            generators: m,
            flat,
        })
    }

    /// Reads the table from `cache_dir` if a valid cache exists there,
    /// otherwise builds it (and saves it best-effort when a dir is given).
    pub fn load_or_build(n: usize, cache_dir: Option<&Path>) -> Result<ActionTable> {
        let Some(dir) = cache_dir else {
            return ActionTable::build(n);
        };
        let path = dir.join(ActionTable::cache_file_name(n));
        if path.is_file() {
            if let Ok(table) = ActionTable::read_cache(&path, n) {
                return Ok(table);
            }
        }
        let table = ActionTable::build(n)?;
        if fs::create_dir_all(dir).is_ok() {
            let _ = table.write_cache(&path);
        }
        Ok(table)
    }
}

/// Bytes an action table for degree n occupies in memory (and on disk,
/// up to the 8-byte header).
pub fn action_table_bytes(n: usize) -> Result<u128> {
    check_degree_bounds(n)?;
    Ok(factorial(n) as u128 * (2 * n as u128 - 4) * 4)
}

/// Bytes one float distribution vector for degree n occupies.
pub fn dist_vector_bytes(n: usize) -> Result<u128> {
    check_degree_bounds(n)?;
    Ok(factorial(n) as u128 * 8)
}

#[derive(Clone, PartialEq)]
enum Values {
    F(Vec<f64>),
    X(Vec<BigUint>),
}

impl Values {
    fn mode(&self) -> &'static str {
        match self {
            Values::F(_) => "float",
            Values::X(_) => "exact",
        }
    }
}

/// A distribution over S_n indexed by permutation rank. `step` counts
/// convolutions applied since the point mass at the identity.
#[derive(Clone, PartialEq)]
pub struct DistVector {
    n: usize,
    step: u32,
    values: Values,
}

impl fmt::Debug for DistVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DistVector")
            .field("n", &self.n)
            .field("step", &self.step)
            .field("mode", &self.values.mode())
            .finish()
    }
}

impl DistVector {
    pub fn delta_identity_float(n: usize) -> Result<DistVector> {
        check_degree_bounds(n)?;
        let mut values = vec![0.0f64; factorial(n) as usize];
        values[0] = 1.0;
        Ok(DistVector {
            n,
            step: 0,
            values: Values::F(values),
        })
    }

    pub fn delta_identity_exact(n: usize) -> Result<DistVector> {
        check_degree_bounds(n)?;
        let mut values = vec![BigUint::zero(); factorial(n) as usize];
        values[0] = BigUint::from(1u32);
        Ok(DistVector {
            n,
            step: 0,
            values: Values::X(values),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn step(&self) -> u32 {
        self.step
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.values, Values::X(_))
    }

    pub fn values_float(&self) -> Result<&[f64]> {
        match &self.values {
            Values::F(v) => Ok(v),
            Values::X(_) => Err(Error::ModeMismatch {
                expected: "float",
                got: "exact",
            }),
        }
    }

    pub fn values_exact(&self) -> Result<&[BigUint]> {
        match &self.values {
            Values::X(v) => Ok(v),
            Values::F(_) => Err(Error::ModeMismatch {
                expected: "exact",
                got: "float",
            }),
        }
    }

    /// Denominator of the exact representation: (2n-3)^step.
    pub fn denominator(&self) -> BigUint {
        num_traits::pow(BigUint::from(2 * self.n - 3), self.step as usize)
    }

    pub fn prob_of_rank(&self, rank: u64) -> Result<f64> {
        if rank >= factorial(self.n) {
            return Err(Error::RankOutOfRange { rank, n: self.n });
        }
        match &self.values {
            Values::F(v) => Ok(v[rank as usize]),
            Values::X(v) => {
                let r = Ratio::new(
                    BigInt::from(v[rank as usize].clone()),
                    BigInt::from(self.denominator()),
                );
                Ok(ratio_to_f64(&r))
            }
        }
    }

    pub fn prob_of(&self, p: &Perm) -> Result<f64> {
        if p.n() != self.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: p.n(),
            });
        }
        self.prob_of_rank(p.rank()?.0)
    }

    /// One convolution step against the measure, via the action table.
    /// The generator set is closed under inversion, so gathering along
    /// the forward action computes the pullback exactly.
    pub fn convolve_step(&self, table: &ActionTable) -> Result<DistVector> {
        if table.n != self.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: table.n,
            });
        }
        let values = match &self.values {
            Values::F(v) => {
                let inv = 1.0 / (2 * self.n - 3) as f64;
                let mut out = vec![0.0f64; v.len()];
                out.par_chunks_mut(PAR_CHUNK)
                    .enumerate()
                    .for_each(|(ci, chunk)| {
                        let base = ci * PAR_CHUNK;
                        for (off, slot) in chunk.iter_mut().enumerate() {
                            let y = base + off;
                            let mut acc = v[y];
                            for &t in table.row(y) {
                                acc += v[t as usize];
                            }
                            *slot = acc * inv;
                        }
                    });
                Values::F(out)
            }
            Values::X(v) => {
                let mut out = Vec::with_capacity(v.len());
                for y in 0..v.len() {
                    let mut acc = v[y].clone();
                    for &t in table.row(y) {
                        acc += &v[t as usize];
                    }
                    out.push(acc);
                }
                Values::X(out)
            }
        };
        Ok(DistVector {
            n: self.n,
            step: self.step + 1,
            values,
        })
    }

    /// Tableless convolution: pushes mass forward atom by atom. Slower
    /// but needs no precomputed table.
    pub fn convolve_step_direct(&self, measure: &MeasureSpec) -> Result<DistVector> {
        if measure.n() != self.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: measure.n(),
            });
        }
        let values = match &self.values {
            Values::F(v) => {
                let mut out = vec![0.0f64; v.len()];
                for (x, &val) in v.iter().enumerate() {
                    if val == 0.0 {
                        continue;
                    }
                    let p = Perm::unrank(PermRank(x as u64), self.n)?;
                    for atom in measure.atoms() {
                        let prob = *atom.prob.numer() as f64 / *atom.prob.denom() as f64;
                        let t = p.compose(&atom.perm)?.rank()?.0 as usize;
                        out[t] += val * prob;
                    }
                }
                Values::F(out)
            }
            Values::X(v) => {
                // Every atom carries probability 1/(2n-3), so pushing a
                // numerator forward adds it unscaled.
                let mut out = vec![BigUint::zero(); v.len()];
                for (x, val) in v.iter().enumerate() {
                    if val.is_zero() {
                        continue;
                    }
                    let p = Perm::unrank(PermRank(x as u64), self.n)?;
                    for atom in measure.atoms() {
                        let t = p.compose(&atom.perm)?.rank()?.0 as usize;
                        out[t] += val;
                    }
                }
                Values::X(out)
            }
        };
        Ok(DistVector {
            n: self.n,
            step: self.step + 1,
            values,
        })
    }

    /// Total-variation distance to the uniform distribution on A_n.
    pub fn tv_to_uniform(&self) -> Result<f64> {
        match &self.values {
            Values::F(v) => {
                let u = 2.0 / factorial(self.n) as f64;
                let mut sum = 0.0f64;
                let mut comp = 0.0f64;
                for (val, parity) in v.iter().zip(ParityScan::new(self.n)?) {
                    if parity == Parity::Even {
                        kahan_add(&mut sum, &mut comp, (val - u).abs());
                    }
                }
                Ok(0.5 * sum)
            }
            Values::X(_) => Ok(ratio_to_f64(&self.tv_to_uniform_exact()?)),
        }
    }

    /// Exact total-variation distance, available in exact mode only.
    pub fn tv_to_uniform_exact(&self) -> Result<Ratio<BigInt>> {
        let v = self.values_exact()?;
        let nf = BigInt::from(factorial(self.n));
        let den = BigInt::from(self.denominator());
        let two_den = &den + &den;
        let mut acc = BigInt::zero();
        for (val, parity) in v.iter().zip(ParityScan::new(self.n)?) {
            if parity == Parity::Even {
                acc += (BigInt::from(val.clone()) * &nf - &two_den).abs();
            }
        }
        Ok(Ratio::new(acc, two_den * nf))
    }

    fn fixed_point_moment_float(&self, power: u32) -> Result<f64> {
        let v = match &self.values {
            Values::F(v) => v,
            Values::X(_) => {
                let exact = self.fixed_point_moment_exact(power)?;
                return Ok(ratio_to_f64(&exact));
            }
        };
        let mut sum = 0.0f64;
        let mut comp = 0.0f64;
        for (x, &val) in v.iter().enumerate() {
            if val == 0.0 {
                continue;
            }
            let fix = Perm::unrank(PermRank(x as u64), self.n)?.fixed_points() as u64;
            kahan_add(&mut sum, &mut comp, val * fix.pow(power) as f64);
        }
        Ok(sum)
    }

    fn fixed_point_moment_exact(&self, power: u32) -> Result<Ratio<BigInt>> {
        let v = self.values_exact()?;
        let mut acc = BigUint::zero();
        for (x, val) in v.iter().enumerate() {
            if val.is_zero() {
                continue;
            }
            let fix = Perm::unrank(PermRank(x as u64), self.n)?.fixed_points() as u64;
            acc += val * BigUint::from(fix.pow(power));
        }
        Ok(Ratio::new(
            BigInt::from(acc),
            BigInt::from(self.denominator()),
        ))
    }

    /// Expected number of fixed points under this distribution.
    pub fn expectation_fixed_points(&self) -> Result<f64> {
        self.fixed_point_moment_float(1)
    }

    pub fn expectation_fixed_points_exact(&self) -> Result<Ratio<BigInt>> {
        self.fixed_point_moment_exact(1)
    }

    /// Expected squared number of fixed points under this distribution.
    pub fn second_moment_fixed_points(&self) -> Result<f64> {
        self.fixed_point_moment_float(2)
    }

    pub fn second_moment_fixed_points_exact(&self) -> Result<Ratio<BigInt>> {
        self.fixed_point_moment_exact(2)
    }
}

/// First and second moments of the fixed-point count under the uniform
/// distribution on A_n, by direct enumeration. Both equal (1, 2) for
/// every n >= 4.
pub fn uniform_fixed_point_moments(n: usize) -> Result<(Ratio<BigInt>, Ratio<BigInt>)> {
    if n < 2 {
        return Err(Error::DegreeTooSmall { n, min: 2 });
    }
    if n > 10 {
        return Err(Error::DegreeTooLarge { n, max: 10 });
    }
    let mut count = 0u64;
    let mut sum = 0u64;
    let mut sum_sq = 0u64;
    for (rank, parity) in ParityScan::new(n)?.enumerate() {
        if parity == Parity::Even {
            let fix = Perm::unrank(PermRank(rank as u64), n)?.fixed_points() as u64;
            count += 1;
            sum += fix;
            sum_sq += fix * fix;
        }
    }
    Ok((
        Ratio::new(BigInt::from(sum), BigInt::from(count)),
        Ratio::new(BigInt::from(sum_sq), BigInt::from(count)),
    ))
}

pub(crate) fn ratio_to_f64(r: &Ratio<BigInt>) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn kahan_add(sum: &mut f64, comp: &mut f64, term: f64) {
    let y = term - *comp;
    let t = *sum + y;
    *comp = (t - *sum) - y;
    *sum = t;
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn delta_is_a_point_mass() {
        let d = DistVector::delta_identity_float(4).unwrap();
        assert_eq!(d.step(), 0);
        assert_eq!(d.prob_of_rank(0).unwrap(), 1.0);
        assert_eq!(d.prob_of(&Perm::identity(4).unwrap()).unwrap(), 1.0);
        // TV from a point mass: 1/2 (|1 - 2/n!| + (n!/2 - 1) * 2/n!).
        let expect = 1.0 - 2.0 / 24.0;
        assert!((d.tv_to_uniform().unwrap() - expect).abs() < 1e-15);

        let x = DistVector::delta_identity_exact(4).unwrap();
        assert_eq!(x.denominator(), BigUint::one());
        assert_eq!(
            x.tv_to_uniform_exact().unwrap(),
            Ratio::new(BigInt::from(11), BigInt::from(12))
        );
    }

    #[test]
    fn two_step_return_probability_is_one_fifth() {
        // At n = 4 the support has 5 atoms; the ordered pairs multiplying
        // to the identity are exactly the 5 atom/inverse pairs, so the
        // return probability after two steps is 5/25 = 1/5.
        let table = ActionTable::build(4).unwrap();
        let d2 = DistVector::delta_identity_exact(4)
            .unwrap()
            .convolve_step(&table)
            .unwrap()
            .convolve_step(&table)
            .unwrap();
        assert_eq!(d2.denominator(), BigUint::from(25u32));
        assert_eq!(d2.values_exact().unwrap()[0], BigUint::from(5u32));

        let f2 = DistVector::delta_identity_float(4)
            .unwrap()
            .convolve_step(&table)
            .unwrap()
            .convolve_step(&table)
            .unwrap();
        assert!((f2.prob_of_rank(0).unwrap() - 0.2).abs() < 1e-15);
    }

    #[test]
    fn one_step_spreads_mass_over_the_support() {
        let n = 5;
        let table = ActionTable::build(n).unwrap();
        let d1 = DistVector::delta_identity_exact(n)
            .unwrap()
            .convolve_step(&table)
            .unwrap();
        let measure = MeasureSpec::build(n).unwrap();
        for atom in measure.atoms() {
            let r = atom.perm.rank().unwrap().0;
            assert_eq!(d1.values_exact().unwrap()[r as usize], BigUint::one());
        }
        let nonzero = d1
            .values_exact()
            .unwrap()
            .iter()
            .filter(|v| !v.is_zero())
            .count();
        assert_eq!(nonzero, measure.support_size());
    }

    #[test]
    fn convolution_preserves_total_mass() {
        let n = 5;
        let table = ActionTable::build(n).unwrap();
        let mut f = DistVector::delta_identity_float(n).unwrap();
        let mut x = DistVector::delta_identity_exact(n).unwrap();
        for _ in 0..6 {
            f = f.convolve_step(&table).unwrap();
            x = x.convolve_step(&table).unwrap();
        }
        let total: f64 = f.values_float().unwrap().iter().sum();
        assert!((total - 1.0).abs() < 1e-12);
        let exact_total: BigUint = x.values_exact().unwrap().iter().sum();
        assert_eq!(exact_total, num_traits::pow(BigUint::from(7u32), 6));
    }

    #[test]
    fn odd_ranks_never_receive_mass() {
        let n = 5;
        let table = ActionTable::build(n).unwrap();
        let mut x = DistVector::delta_identity_exact(n).unwrap();
        for _ in 0..3 {
            x = x.convolve_step(&table).unwrap();
        }
        for (val, parity) in x
            .values_exact()
            .unwrap()
            .iter()
            .zip(ParityScan::new(n).unwrap())
        {
            if parity == Parity::Odd {
                assert!(val.is_zero());
            }
        }
    }

    #[test]
    fn table_and_direct_convolutions_agree() {
        let n = 5;
        let table = ActionTable::build(n).unwrap();
        let measure = MeasureSpec::build(n).unwrap();

        let mut by_table = DistVector::delta_identity_exact(n).unwrap();
        let mut direct = DistVector::delta_identity_exact(n).unwrap();
        for _ in 0..3 {
            by_table = by_table.convolve_step(&table).unwrap();
            direct = direct.convolve_step_direct(&measure).unwrap();
        }
        assert_eq!(
            by_table.values_exact().unwrap(),
            direct.values_exact().unwrap()
        );

        let mut ft = DistVector::delta_identity_float(n).unwrap();
        let mut fd = DistVector::delta_identity_float(n).unwrap();
        for _ in 0..3 {
            ft = ft.convolve_step(&table).unwrap();
            fd = fd.convolve_step_direct(&measure).unwrap();
        }
        for (a, b) in ft
            .values_float()
            .unwrap()
            .iter()
            .zip(fd.values_float().unwrap())
        {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn exact_and_float_runs_agree() {
        let n = 5;
        let table = ActionTable::build(n).unwrap();
        let mut f = DistVector::delta_identity_float(n).unwrap();
        let mut x = DistVector::delta_identity_exact(n).unwrap();
        for _ in 0..10 {
            f = f.convolve_step(&table).unwrap();
            x = x.convolve_step(&table).unwrap();
        }
        for rank in 0..factorial(n) {
            let pf = f.prob_of_rank(rank).unwrap();
            let px = x.prob_of_rank(rank).unwrap();
            assert!((pf - px).abs() < 1e-12, "rank {rank}: {pf} vs {px}");
        }
        let tf = f.tv_to_uniform().unwrap();
        let tx = x.tv_to_uniform().unwrap();
        assert!((tf - tx).abs() < 1e-12);
    }

    #[test]
    fn tv_is_monotone_nonincreasing() {
        for n in 4..=6 {
            let table = ActionTable::build(n).unwrap();
            let mut d = DistVector::delta_identity_float(n).unwrap();
            let mut prev = d.tv_to_uniform().unwrap();
            for _ in 0..12 {
                d = d.convolve_step(&table).unwrap();
                let tv = d.tv_to_uniform().unwrap();
                assert!(tv <= prev + 1e-12, "n={n} step={}", d.step());
                prev = tv;
            }
        }
    }

    #[test]
    fn fixed_point_moments_start_at_degree_squared() {
        let n = 5;
        let d = DistVector::delta_identity_exact(n).unwrap();
        assert_eq!(
            d.expectation_fixed_points_exact().unwrap(),
            Ratio::from_integer(BigInt::from(5))
        );
        assert_eq!(
            d.second_moment_fixed_points_exact().unwrap(),
            Ratio::from_integer(BigInt::from(25))
        );
        let f = DistVector::delta_identity_float(n).unwrap();
        assert_eq!(f.expectation_fixed_points().unwrap(), 5.0);
        assert_eq!(f.second_moment_fixed_points().unwrap(), 25.0);
    }

    #[test]
    fn one_step_fixed_point_expectation_is_exact() {
        // After one step: identity (5 fixed points) with weight 1, six
        // three-cycles (2 fixed points each), denominator 7.
        let n = 5;
        let table = ActionTable::build(n).unwrap();
        let d1 = DistVector::delta_identity_exact(n)
            .unwrap()
            .convolve_step(&table)
            .unwrap();
        assert_eq!(
            d1.expectation_fixed_points_exact().unwrap(),
            Ratio::new(BigInt::from(17), BigInt::from(7))
        );
    }

    #[test]
    fn uniform_moments_are_one_and_two() {
        for n in 4..=8 {
            let (m1, m2) = uniform_fixed_point_moments(n).unwrap();
            assert_eq!(m1, Ratio::from_integer(BigInt::one()), "n={n}");
            assert_eq!(m2, Ratio::from_integer(BigInt::from(2)), "n={n}");
        }
        // Degree 3 is the exception: A_3 has no double transpositions.
        let (m1, m2) = uniform_fixed_point_moments(3).unwrap();
        assert_eq!(m1, Ratio::from_integer(BigInt::one()));
        assert_eq!(m2, Ratio::from_integer(BigInt::from(3)));
    }

    #[test]
    fn cache_roundtrip_preserves_the_table() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join(ActionTable::cache_file_name(4));
        let table = ActionTable::build(4).unwrap();
        table.write_cache(&path).unwrap();
        let back = ActionTable::read_cache(&path, 4).unwrap();
        assert_eq!(table, back);
    }

    #[test]
    fn cache_rejects_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.bin");
        let table = ActionTable::build(4).unwrap();
        table.write_cache(&path).unwrap();

        // Wrong degree requested.
        assert!(matches!(
            ActionTable::read_cache(&path, 5),
            Err(Error::BadCache { .. })
        ));

        // Truncated payload.
        let bytes = fs::read(&path).unwrap();
        fs::write(&path, &bytes[..bytes.len() - 4]).unwrap();
        assert!(matches!(
            ActionTable::read_cache(&path, 4),
            Err(Error::BadCache { .. })
        ));

        // Bad magic.
        let mut bytes = fs::read(&path).unwrap();
        bytes[0] = b'X';
        fs::write(&path, &bytes).unwrap();
        assert!(matches!(
            ActionTable::read_cache(&path, 4),
            Err(Error::BadCache { .. })
        ));
    }

    #[test]
    fn load_or_build_writes_and_reuses_the_cache() {
        let dir = tempfile::tempdir().unwrap();
        let first = ActionTable::load_or_build(4, Some(dir.path())).unwrap();
        assert!(dir.path().join(ActionTable::cache_file_name(4)).is_file());
        let second = ActionTable::load_or_build(4, Some(dir.path())).unwrap();
        assert_eq!(first, second);
        let no_cache = ActionTable::load_or_build(4, None).unwrap();
        assert_eq!(first, no_cache);
    }

    #[test]
    fn degree_bounds_are_enforced() {
        assert!(ActionTable::build(2).is_err());
        assert!(DistVector::delta_identity_float(13).is_err());
        assert!(action_table_bytes(12).unwrap() > 0);
        assert_eq!(dist_vector_bytes(4).unwrap(), 24 * 8);
    }

    #[test]
    fn mode_mismatch_is_reported() {
        let f = DistVector::delta_identity_float(4).unwrap();
        assert!(f.values_exact().is_err());
        assert!(f.tv_to_uniform_exact().is_err());
        let x = DistVector::delta_identity_exact(4).unwrap();
        assert!(x.values_float().is_err());
    }
}
