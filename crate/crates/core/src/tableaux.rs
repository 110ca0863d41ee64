//! Integer partitions, standard Young tableaux, box contents, and
//! hook-length dimensions.

use crate::error::{Error, Result};

/// A partition of n: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl std::fmt::Debug for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Partition{:?}", self.parts)
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Partition> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition {
                reason: "no parts".into(),
            });
        }
        for w in parts.windows(2) {
            if w[1] > w[0] {
                return Err(Error::InvalidPartition {
                    reason: format!("parts not weakly decreasing: {} < {}", w[0], w[1]),
                });
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition {
                reason: "zero part".into(),
            });
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of boxes.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Transpose of the Young diagram (column lengths).
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts[0];
        let parts = (0..cols)
            .map(|c| self.parts.iter().filter(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Number of standard Young tableaux of this shape (hook length formula).
    pub fn dimension(&self) -> Result<u64> {
        let n = self.n();
        let conj = self.conjugate();
        let mut numerator: u128 = 1;
        for i in 1..=n as u128 {
            numerator = numerator
                .checked_mul(i)
                .ok_or(Error::DegreeTooLarge { n, max: 34 })?;
        }
        let mut hooks: u128 = 1;
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len {
                let hook = (len - 1 - c) + (conj.parts[c] - 1 - r) + 1;
                hooks = hooks
                    .checked_mul(hook as u128)
                    .ok_or(Error::DegreeTooLarge { n, max: 34 })?;
            }
        }
        let dim = numerator / hooks;
        u64::try_from(dim).map_err(|_| Error::DegreeTooLarge { n, max: 34 })
    }
}

/// All partitions of n in lexicographically descending order, (n) first.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn go(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    go(n, n, &mut prefix, &mut out);
    out
}

/// Contents a_i = column - row of the box holding label i, for i = 1..n.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ContentVector {
    values: Vec<i64>,
}

impl ContentVector {
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Content of the 1-based label i.
    pub fn of(&self, i: usize) -> i64 {
        self.values[i - 1]
    }
}

/// A standard Young tableau: rows of labels, increasing along rows and
/// down columns, using each of 1..n once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
    /// pos[label-1] = (row, col), 0-based.
    pos: Vec<(usize, usize)>,
}

impl Tableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Tableau> {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect())?;
        let n = shape.n();
        let mut pos = vec![None; n];
        for (r, row) in rows.iter().enumerate() {
            for (c, &label) in row.iter().enumerate() {
                if label < 1 || label > n {
                    return Err(Error::InvalidTableau {
                        reason: format!("label {label} out of range"),
                    });
                }
                if pos[label - 1].is_some() {
                    return Err(Error::InvalidTableau {
                        reason: format!("label {label} repeated"),
                    });
                }
                pos[label - 1] = Some((r, c));
                if c > 0 && rows[r][c - 1] > label {
                    return Err(Error::InvalidTableau {
                        reason: format!("row {r} not increasing"),
                    });
                }
                if r > 0 && rows[r - 1][c] > label {
                    return Err(Error::InvalidTableau {
                        reason: format!("column {c} not increasing"),
                    });
                }
            }
        }
        let pos = pos.into_iter().map(|p| p.unwrap()).collect();
        Ok(Tableau { shape, rows, pos })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.pos.len()
    }

    /// (row, col) of the 1-based label, 0-based coordinates.
    pub fn position_of(&self, label: usize) -> (usize, usize) {
        self.pos[label - 1]
    }

    pub fn contents(&self) -> ContentVector {
        ContentVector {
            values: self
                .pos
                .iter()
                .map(|&(r, c)| c as i64 - r as i64)
                .collect(),
        }
    }

    /// True when label 2 sits to the right of label 1 (content +1).
    /// Vacuously true for single-box tableaux.
    pub fn is_upper(&self) -> bool {
        self.n() < 2 || self.pos[1] == (0, 1)
    }
}

/// All standard Young tableaux of the given shape, in a deterministic
/// order (labels placed 1..n, candidate rows tried top to bottom).
pub fn enumerate_syt(shape: &Partition) -> Vec<Tableau> {
    let n = shape.n();
    let parts = shape.parts();
    let mut fill = vec![0usize; parts.len()];
    let mut pos = vec![(0usize, 0usize); n];
    let mut out = Vec::new();

    fn go(
        label: usize,
        n: usize,
        parts: &[usize],
        fill: &mut [usize],
        pos: &mut [(usize, usize)],
        out: &mut Vec<Tableau>,
    ) {
        if label > n {
            let rows: Vec<Vec<usize>> = {
                let mut rows: Vec<Vec<usize>> = parts.iter().map(|&p| vec![0; p]).collect();
                for (i, &(r, c)) in pos.iter().enumerate() {
                    rows[r][c] = i + 1;
                }
                rows
            };
            out.push(Tableau {
                shape: Partition {
                    parts: parts.to_vec(),
                },
                rows,
                pos: pos.to_vec(),
            });
            return;
        }
        for r in 0..parts.len() {
            let c = fill[r];
            if c < parts[r] && (r == 0 || fill[r - 1] > c) {
                fill[r] += 1;
                pos[label - 1] = (r, c);
                go(label + 1, n, parts, fill, pos, out);
                fill[r] -= 1;
            }
        }
    }

    go(1, n, parts, &mut fill, &mut pos, &mut out);
    out
}

/// The upper standard tableaux of the shape, in enumeration order.
pub fn upper_syt(shape: &Partition) -> Vec<Tableau> {
    enumerate_syt(shape)
        .into_iter()
        .filter(|t| t.is_upper())
        .collect()
}

/// Census of upper tableaux against all standard tableaux of degree n.
#[derive(Clone, Debug)]
pub struct UpperCensus {
    pub n: usize,
    pub total_std: u64,
    pub total_upper: u64,
    /// (shape, standard count, upper count) per self-conjugate shape.
    pub self_conjugate: Vec<(Partition, u64, u64)>,
}

impl UpperCensus {
    /// Upper tableaux make up exactly half of all standard tableaux,
    /// globally and on every self-conjugate shape.
    pub fn ok(&self) -> bool {
        2 * self.total_upper == self.total_std
            && self
                .self_conjugate
                .iter()
                .all(|(_, std_count, upper)| 2 * upper == *std_count)
    }
}

/// Counts standard and upper tableaux over every shape of n. Transposing
/// swaps upper with non-upper tableaux for n >= 2, which forces the
/// half-cardinality invariant checked by [`UpperCensus::ok`].
pub fn upper_census(n: usize) -> Result<UpperCensus> {
    if n < 2 {
        return Err(Error::DegreeTooSmall { n, min: 2 });
    }
    let mut total_std = 0u64;
    let mut total_upper = 0u64;
    let mut self_conjugate = Vec::new();
    for shape in partitions(n) {
        let all = enumerate_syt(&shape);
        let upper = all.iter().filter(|t| t.is_upper()).count() as u64;
        total_std += all.len() as u64;
        total_upper += upper;
        if shape.is_self_conjugate() {
            self_conjugate.push((shape, all.len() as u64, upper));
        }
    }
    Ok(UpperCensus {
        n,
        total_std,
        total_upper,
        self_conjugate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::factorial;

    /// Independent partition counts via the pentagonal number recurrence.
    fn partition_counts(up_to: usize) -> Vec<u64> {
        let mut p = vec![0i64; up_to + 1];
        p[0] = 1;
        for k in 1..=up_to {
            let mut total = 0i64;
            let mut j = 1i64;
            loop {
                let g1 = (j * (3 * j - 1) / 2) as usize;
                let g2 = (j * (3 * j + 1) / 2) as usize;
                if g1 > k {
                    break;
                }
                let sign = if j % 2 == 1 { 1 } else { -1 };
                total += sign * p[k - g1];
                if g2 <= k {
                    total += sign * p[k - g2];
                }
                j += 1;
            }
            p[k] = total;
        }
        p.into_iter().map(|v| v as u64).collect()
    }

    #[test]
    fn partitions_of_four_in_order() {
        let got: Vec<Vec<usize>> = partitions(4).iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            got,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn partition_counts_match_recurrence() {
        let expected = partition_counts(12);
        for n in 1..=12 {
            assert_eq!(partitions(n).len() as u64, expected[n], "p({n})");
        }
        assert_eq!(partitions(10).len(), 42);
    }

    #[test]
    fn conjugate_is_an_involution() {
        let p = Partition::new(vec![4, 2, 1]).unwrap();
        assert_eq!(p.conjugate().parts(), &[3, 2, 1, 1]);
        for lam in partitions(9) {
            assert_eq!(lam.conjugate().conjugate(), lam);
            assert_eq!(lam.conjugate().n(), lam.n());
        }
    }

    #[test]
    fn hook_dimensions() {
        assert_eq!(Partition::new(vec![6]).unwrap().dimension().unwrap(), 1);
        assert_eq!(Partition::new(vec![5, 1]).unwrap().dimension().unwrap(), 5);
        assert_eq!(Partition::new(vec![2, 2]).unwrap().dimension().unwrap(), 2);
        assert_eq!(Partition::new(vec![3, 2]).unwrap().dimension().unwrap(), 5);
        assert_eq!(Partition::new(vec![4, 2]).unwrap().dimension().unwrap(), 9);
        assert_eq!(
            Partition::new(vec![4, 1, 1]).unwrap().dimension().unwrap(),
            10
        );
    }

    #[test]
    fn dimension_is_conjugation_invariant() {
        for n in 1..=10 {
            for lam in partitions(n) {
                assert_eq!(
                    lam.dimension().unwrap(),
                    lam.conjugate().dimension().unwrap()
                );
            }
        }
    }

    #[test]
    fn dimensions_square_sum_to_group_order() {
        for n in 1..=8 {
            let total: u64 = partitions(n)
                .iter()
                .map(|lam| {
                    let d = lam.dimension().unwrap();
                    d * d
                })
                .sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn enumeration_count_matches_dimension() {
        for n in 1..=8 {
            for lam in partitions(n) {
                let tabs = enumerate_syt(&lam);
                assert_eq!(tabs.len() as u64, lam.dimension().unwrap(), "{lam}");
                for t in &tabs {
                    // Round-trips through the validating constructor.
                    let rebuilt = Tableau::from_rows(t.rows().to_vec()).unwrap();
                    assert_eq!(&rebuilt, t);
                }
            }
        }
    }

    #[test]
    fn enumeration_order_is_deterministic() {
        let lam = Partition::new(vec![2, 2]).unwrap();
        let tabs = enumerate_syt(&lam);
        assert_eq!(tabs.len(), 2);
        assert_eq!(tabs[0].rows(), &[vec![1, 2], vec![3, 4]]);
        assert_eq!(tabs[1].rows(), &[vec![1, 3], vec![2, 4]]);
    }

    #[test]
    fn contents_of_extreme_shapes() {
        let row = enumerate_syt(&Partition::new(vec![5]).unwrap());
        assert_eq!(row[0].contents().values(), &[0, 1, 2, 3, 4]);
        let col = enumerate_syt(&Partition::new(vec![1, 1, 1]).unwrap());
        assert_eq!(col[0].contents().values(), &[0, -1, -2]);
        let hook = Tableau::from_rows(vec![vec![1, 2, 4], vec![3]]).unwrap();
        assert_eq!(hook.contents().values(), &[0, 1, -1, 2]);
        assert!(hook.is_upper());
        let lower = Tableau::from_rows(vec![vec![1, 3, 4], vec![2]]).unwrap();
        assert!(!lower.is_upper());
    }

    #[test]
    fn first_content_is_zero_second_is_signed_unit() {
        for lam in partitions(7) {
            for t in enumerate_syt(&lam) {
                let c = t.contents();
                assert_eq!(c.of(1), 0);
                if t.n() >= 2 {
                    assert_eq!(c.of(2).abs(), 1);
                    assert_eq!(t.is_upper(), c.of(2) == 1);
                }
            }
        }
    }

    #[test]
    fn upper_tableaux_split_standard_count() {
        // Conjugation pairs each tableau with one of opposite uprightness,
        // so the upper counts of a shape and its transpose add to the full
        // count; self-conjugate shapes hold exactly half.
        for n in 2..=8 {
            for lam in partitions(n) {
                let conj = lam.conjugate();
                let std_count = lam.dimension().unwrap();
                let upper = upper_syt(&lam).len() as u64;
                let upper_conj = upper_syt(&conj).len() as u64;
                assert_eq!(upper + upper_conj, std_count, "{lam}");
                if lam == conj {
                    assert_eq!(2 * upper, std_count, "{lam}");
                }
            }
        }
    }

    #[test]
    fn upper_census_counts_half_of_all_tableaux() {
        // Totals over all shapes are the involution numbers.
        let involutions = [2u64, 4, 10, 26, 76, 232, 764, 2620];
        for (n, expect) in (2..=9).zip(involutions) {
            let census = upper_census(n).unwrap();
            assert!(census.ok(), "n={n}");
            assert_eq!(census.total_std, expect);
            assert_eq!(2 * census.total_upper, expect);
        }
        assert!(upper_census(1).is_err());
    }

    #[test]
    fn invalid_tableaux_rejected() {
        assert!(Tableau::from_rows(vec![vec![1, 3], vec![2, 2]]).is_err());
        assert!(Tableau::from_rows(vec![vec![2, 1]]).is_err());
        assert!(Tableau::from_rows(vec![vec![1], vec![2, 3]]).is_err());
        assert!(Tableau::from_rows(vec![vec![1, 2], vec![4, 3]]).is_err());
    }
}
