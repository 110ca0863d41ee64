//! Sparse exact arithmetic in the integer group algebra of S_n, used to
//! verify the algebraic identities behind the shuffle's spectrum.
//!
//! The group product follows the classical convention: in g*h the right
//! factor h acts first. In `Perm::compose` terms, g*h = h.compose(g).

use crate::error::{Error, Result};
use crate::measure::MeasureSpec;
use crate::perm::{Orientation, Perm};
use std::collections::BTreeMap;

/// An integer-coefficient element of the group algebra of S_n.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupAlgebraElement {
    n: usize,
    coeffs: BTreeMap<Perm, i64>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> GroupAlgebraElement {
        GroupAlgebraElement {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Result<GroupAlgebraElement> {
        Ok(GroupAlgebraElement::from_perm(Perm::identity(n)?))
    }

    pub fn from_perm(p: Perm) -> GroupAlgebraElement {
        let n = p.n();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(p, 1);
        GroupAlgebraElement { n, coeffs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, p: &Perm) -> i64 {
        self.coeffs.get(p).copied().unwrap_or(0)
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Perm, i64)> {
        self.coeffs.iter().map(|(p, &c)| (p, c))
    }

    fn check_degree(&self, other: &GroupAlgebraElement) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &GroupAlgebraElement) -> Result<GroupAlgebraElement> {
        self.check_degree(other)?;
        let mut coeffs = self.coeffs.clone();
        for (p, &c) in &other.coeffs {
            let entry = coeffs.entry(p.clone()).or_insert(0);
            *entry += c;
            if *entry == 0 {
                coeffs.remove(p);
            }
        }
        Ok(GroupAlgebraElement { n: self.n, coeffs })
    }

    pub fn sub(&self, other: &GroupAlgebraElement) -> Result<GroupAlgebraElement> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, factor: i64) -> GroupAlgebraElement {
        if factor == 0 {
            return GroupAlgebraElement::zero(self.n);
        }
        GroupAlgebraElement {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .map(|(p, &c)| (p.clone(), c * factor))
                .collect(),
        }
    }

    /// Algebra product; on basis elements g*h applies h first.
    pub fn mul(&self, other: &GroupAlgebraElement) -> Result<GroupAlgebraElement> {
        self.check_degree(other)?;
        let mut coeffs: BTreeMap<Perm, i64> = BTreeMap::new();
        for (g, &cg) in &self.coeffs {
            for (h, &ch) in &other.coeffs {
                let w = h.compose(g)?;
                let entry = coeffs.entry(w).or_insert(0);
                *entry += cg * ch;
            }
        }
        coeffs.retain(|_, c| *c != 0);
        Ok(GroupAlgebraElement { n: self.n, coeffs })
    }

    /// All coefficient disagreements with `other`, as (perm, self, other).
    pub fn diff(&self, other: &GroupAlgebraElement) -> Vec<(Perm, i64, i64)> {
        let mut keys: Vec<&Perm> = self.coeffs.keys().chain(other.coeffs.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .filter_map(|p| {
                let a = self.coeff(p);
                let b = other.coeff(p);
                (a != b).then(|| (p.clone(), a, b))
            })
            .collect()
    }
}

/// The symmetric-group sum X_i = sum of transpositions (j, i) for j < i.
/// X_1 = 0.
pub fn jm_symmetric(i: usize, n: usize) -> Result<GroupAlgebraElement> {
    if i < 1 || i > n {
        return Err(Error::PointOutOfRange { i, n });
    }
    let mut out = GroupAlgebraElement::zero(n);
    for j in 1..i {
        out = out.add(&GroupAlgebraElement::from_perm(Perm::transposition(
            j, i, n,
        )?))?;
    }
    Ok(out)
}

/// The even-support analog: Y_1 = 0 and Y_i = (1,2) * X_i for i >= 2
/// (so Y_2 = 1). Every supported permutation is even.
pub fn jm_alternating(i: usize, n: usize) -> Result<GroupAlgebraElement> {
    if i < 1 || i > n {
        return Err(Error::PointOutOfRange { i, n });
    }
    if i == 1 {
        return Ok(GroupAlgebraElement::zero(n));
    }
    let swap = GroupAlgebraElement::from_perm(Perm::transposition(1, 2, n)?);
    swap.mul(&jm_symmetric(i, n)?)
}

/// The permutation t_i = (1,2)(i,i+1) (product, right factor first).
pub fn twist(i: usize, n: usize) -> Result<Perm> {
    if i < 1 || i + 1 > n {
        return Err(Error::PointOutOfRange { i, n });
    }
    let swap12 = Perm::transposition(1, 2, n)?;
    let si = Perm::transposition(i, i + 1, n)?;
    si.compose(&swap12)
}

/// The walk element: identity plus all 2n-4 top three-cycles, i.e. the
/// measure scaled by 2n-3. Defined for n >= 2 (bare identity at n = 2).
pub fn walk_element(n: usize) -> Result<GroupAlgebraElement> {
    if n < 2 {
        return Err(Error::DegreeTooSmall { n, min: 2 });
    }
    let mut out = GroupAlgebraElement::one(n)?;
    if n >= 3 {
        for i in 1..=n - 2 {
            for o in [Orientation::Forward, Orientation::Backward] {
                out = out.add(&GroupAlgebraElement::from_perm(Perm::three_cycle(
                    i, n, o,
                )?))?;
            }
        }
    }
    Ok(out)
}

/// Coefficient-wise check that the walk element factors through the
/// alternating JM elements:
///   n = 2: identity;  n = 3: 1 + Y_3;  n > 3: t_{n-1} * (Y_n + Y_{n-1}).
/// Returns the coefficient diff (empty iff the identity holds).
pub fn walk_factorization_diff(n: usize) -> Result<Vec<(Perm, i64, i64)>> {
    let lhs = walk_element(n)?;
    let rhs = match n {
        0 | 1 => return Err(Error::DegreeTooSmall { n, min: 2 }),
        2 => GroupAlgebraElement::one(n)?,
        3 => GroupAlgebraElement::one(n)?.add(&jm_alternating(3, n)?)?,
        _ => {
            let t = GroupAlgebraElement::from_perm(twist(n - 1, n)?);
            let sum = jm_alternating(n, n)?.add(&jm_alternating(n - 1, n)?)?;
            t.mul(&sum)?
        }
    };
    Ok(lhs.diff(&rhs))
}

/// Pairs (i, j) with Y_i Y_j != Y_j Y_i (always empty: the elements
/// commute pairwise).
pub fn commutation_check(n: usize) -> Result<Vec<(usize, usize)>> {
    let ys: Vec<GroupAlgebraElement> = (1..=n)
        .map(|i| jm_alternating(i, n))
        .collect::<Result<_>>()?;
    let mut failures = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if ys[i].mul(&ys[j])? != ys[j].mul(&ys[i])? {
                failures.push((i + 1, j + 1));
            }
        }
    }
    Ok(failures)
}

/// Indices i in 3..n where t_i Y_i != Y_{i+1} t_i - 1.
pub fn twist_relation_check(n: usize) -> Result<Vec<usize>> {
    let mut failures = Vec::new();
    for i in 3..n {
        let t = GroupAlgebraElement::from_perm(twist(i, n)?);
        let lhs = t.mul(&jm_alternating(i, n)?)?;
        let rhs = jm_alternating(i + 1, n)?
            .mul(&t)?
            .sub(&GroupAlgebraElement::one(n)?)?;
        if lhs != rhs {
            failures.push(i);
        }
    }
    Ok(failures)
}

/// Coefficient diff between the walk element and the measure scaled by
/// its denominator 2n-3 (empty iff they agree atom-by-atom).
pub fn walk_element_measure_diff(n: usize) -> Result<Vec<(Perm, i64, i64)>> {
    let measure = MeasureSpec::build(n)?;
    let mut from_measure = GroupAlgebraElement::zero(n);
    for atom in measure.atoms() {
        // Each atom has probability 1/(2n-3); scaled it contributes 1.
        from_measure = from_measure.add(&GroupAlgebraElement::from_perm(atom.perm.clone()))?;
    }
    Ok(walk_element(n)?.diff(&from_measure))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_basics() {
        let n = 4;
        let one = GroupAlgebraElement::one(n).unwrap();
        let g = GroupAlgebraElement::from_perm(
            Perm::three_cycle(1, n, Orientation::Forward).unwrap(),
        );
        let sum = one.add(&g).unwrap();
        assert_eq!(sum.support_len(), 2);
        assert_eq!(sum.sub(&g).unwrap(), one);
        assert_eq!(one.mul(&g).unwrap(), g);
        assert_eq!(g.mul(&one).unwrap(), g);
        assert_eq!(g.sub(&g).unwrap(), GroupAlgebraElement::zero(n));
    }

    #[test]
    fn product_applies_right_factor_first() {
        // (n,n-1) * (n,i) must equal the forward three-cycle (i,n-1,n).
        let n = 5;
        let i = 2;
        let a = GroupAlgebraElement::from_perm(Perm::transposition(n, n - 1, n).unwrap());
        let b = GroupAlgebraElement::from_perm(Perm::transposition(n, i, n).unwrap());
        let prod = a.mul(&b).unwrap();
        let cyc = Perm::three_cycle(i, n, Orientation::Forward).unwrap();
        assert_eq!(prod, GroupAlgebraElement::from_perm(cyc));
    }

    #[test]
    fn smallest_alternating_elements() {
        // Y_2 = 1 and Y_3 = (1,3,2) + (1,2,3).
        let n = 3;
        assert_eq!(
            jm_alternating(2, n).unwrap(),
            GroupAlgebraElement::one(n).unwrap()
        );
        let y3 = jm_alternating(3, n).unwrap();
        assert_eq!(y3.support_len(), 2);
        let c132 = Perm::from_one_line(&[3, 1, 2]).unwrap();
        let c123 = Perm::from_one_line(&[2, 3, 1]).unwrap();
        assert_eq!(y3.coeff(&c132), 1);
        assert_eq!(y3.coeff(&c123), 1);
        assert_eq!(jm_alternating(1, n).unwrap().support_len(), 0);
    }

    #[test]
    fn alternating_elements_have_even_support() {
        for n in 3..=6 {
            for i in 3..=n {
                let y = jm_alternating(i, n).unwrap();
                assert!(y.iter().all(|(p, _)| p.is_even()));
                assert_eq!(y.support_len(), i - 1);
            }
        }
    }

    #[test]
    fn walk_element_matches_scaled_measure() {
        for n in 3..=7 {
            assert!(walk_element_measure_diff(n).unwrap().is_empty(), "n={n}");
        }
    }

    #[test]
    fn walk_element_factorization_holds() {
        for n in 2..=6 {
            let diff = walk_factorization_diff(n).unwrap();
            assert!(diff.is_empty(), "n={n}: {diff:?}");
        }
    }

    #[test]
    fn alternating_elements_commute() {
        for n in 2..=6 {
            assert!(commutation_check(n).unwrap().is_empty(), "n={n}");
        }
    }

    #[test]
    fn twist_relation_holds() {
        for n in 4..=6 {
            assert!(twist_relation_check(n).unwrap().is_empty(), "n={n}");
        }
    }

    #[test]
    fn degree_mismatch_rejected() {
        let a = GroupAlgebraElement::one(4).unwrap();
        let b = GroupAlgebraElement::one(5).unwrap();
        assert!(a.add(&b).is_err());
        assert!(a.mul(&b).is_err());
    }
}
