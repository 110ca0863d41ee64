//! Permutations of {1..n} with 1-based interfaces, plus lexicographic
//! (Lehmer-code) ranking over the full symmetric group.
//!
//! Composition convention: `p.compose(q)` applies `p` first, then `q`.
//! Walk states are built by composing the current state with a generator,
//! i.e. "state then generator".

use crate::error::{Error, Result};

/// n! for n <= 20 (the largest factorial that fits in u64).
pub const MAX_RANKABLE_DEGREE: usize = 20;

const FACT: [u64; 21] = {
    let mut f = [1u64; 21];
    let mut i = 1;
    while i <= 20 {
        f[i] = f[i - 1] * i as u64;
        i += 1;
    }
    f
};

/// n! as u64. Panics if n > 20.
pub fn factorial(n: usize) -> u64 {
    FACT[n]
}

/// 0-based position of a permutation in lexicographic one-line order over S_n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PermRank(pub u64);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// Orientation of the 3-cycle on {i, n-1, n}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    /// (i, n-1, n): sends i -> n-1 -> n -> i.
    Forward,
    /// (i, n, n-1): sends i -> n -> n-1 -> i.
    Backward,
}

/// A permutation of {1..n}, stored 0-based in one-line form.
///
/// Degrees up to 255 are supported; ranking additionally requires n <= 20.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    img: Vec<u8>,
}

impl std::fmt::Debug for Perm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Perm{:?}", self.one_line())
    }
}

impl std::fmt::Display for Perm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let line: Vec<String> = self.one_line().iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", line.join(" "))
    }
}

impl Perm {
    pub fn identity(n: usize) -> Result<Perm> {
        check_degree(n)?;
        Ok(Perm {
            img: (0..n as u16).map(|x| x as u8).collect(),
        })
    }

    /// Builds a permutation from its 1-based one-line form: `images[i-1] = p(i)`.
    pub fn from_one_line(images: &[usize]) -> Result<Perm> {
        let n = images.len();
        check_degree(n)?;
        let mut seen = vec![false; n];
        let mut img = Vec::with_capacity(n);
        for &v in images {
            if v < 1 || v > n {
                return Err(Error::InvalidOneLine {
                    n,
                    reason: format!("value {v} out of range"),
                });
            }
            if seen[v - 1] {
                return Err(Error::InvalidOneLine {
                    n,
                    reason: format!("value {v} repeated"),
                });
            }
            seen[v - 1] = true;
            img.push((v - 1) as u8);
        }
        Ok(Perm { img })
    }

    /// 1-based one-line form.
    pub fn one_line(&self) -> Vec<usize> {
        self.img.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn n(&self) -> usize {
        self.img.len()
    }

    /// Image of the 1-based point `i`. Panics if `i` is out of range.
    pub fn apply(&self, i: usize) -> usize {
        self.img[i - 1] as usize + 1
    }

    /// `self` followed by `other`: `(self.compose(other))(i) = other(self(i))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.n() != other.n() {
            return Err(Error::DegreeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Perm {
            img: self.img.iter().map(|&x| other.img[x as usize]).collect(),
        })
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0u8; self.n()];
        for (x, &y) in self.img.iter().enumerate() {
            img[y as usize] = x as u8;
        }
        Perm { img }
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(x, &y)| x == y as usize)
    }

    /// Number of 1-based points with p(i) = i.
    pub fn fixed_points(&self) -> usize {
        self.img
            .iter()
            .enumerate()
            .filter(|&(x, &y)| x == y as usize)
            .count()
    }

    /// Parity by inversion count.
    pub fn parity(&self) -> Parity {
        let mut inversions = 0usize;
        for x in 0..self.img.len() {
            for y in x + 1..self.img.len() {
                if self.img[y] < self.img[x] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    /// The 3-cycle on {i, n-1, n} with the given orientation, for 1 <= i <= n-2.
    pub fn three_cycle(i: usize, n: usize, orientation: Orientation) -> Result<Perm> {
        if n < 3 {
            return Err(Error::DegreeTooSmall { n, min: 3 });
        }
        if i < 1 || i > n - 2 {
            return Err(Error::PointOutOfRange { i, n });
        }
        let mut p = Perm::identity(n)?;
        let (a, b, c) = (i - 1, n - 2, n - 1);
        match orientation {
            Orientation::Forward => {
                p.img[a] = b as u8;
                p.img[b] = c as u8;
                p.img[c] = a as u8;
            }
            Orientation::Backward => {
                p.img[a] = c as u8;
                p.img[c] = b as u8;
                p.img[b] = a as u8;
            }
        }
        Ok(p)
    }

    /// The transposition (a, b), 1-based, a != b.
    pub fn transposition(a: usize, b: usize, n: usize) -> Result<Perm> {
        if a < 1 || a > n {
            return Err(Error::PointOutOfRange { i: a, n });
        }
        if b < 1 || b > n || a == b {
            return Err(Error::PointOutOfRange { i: b, n });
        }
        let mut p = Perm::identity(n)?;
        p.img.swap(a - 1, b - 1);
        Ok(p)
    }

    /// Lexicographic rank of the one-line form, via the Lehmer code.
    pub fn rank(&self) -> Result<PermRank> {
        let n = self.n();
        if n > MAX_RANKABLE_DEGREE {
            return Err(Error::DegreeTooLarge {
                n,
                max: MAX_RANKABLE_DEGREE,
            });
        }
        let mut r = 0u64;
        for x in 0..n {
            let mut smaller_later = 0u64;
            for y in x + 1..n {
                if self.img[y] < self.img[x] {
                    smaller_later += 1;
                }
            }
            r += smaller_later * FACT[n - 1 - x];
        }
        Ok(PermRank(r))
    }

    /// Inverse of `rank`: the permutation of degree n at the given rank.
    pub fn unrank(rank: PermRank, n: usize) -> Result<Perm> {
        check_degree(n)?;
        if n > MAX_RANKABLE_DEGREE {
            return Err(Error::DegreeTooLarge {
                n,
                max: MAX_RANKABLE_DEGREE,
            });
        }
        let mut r = rank.0;
        if r >= FACT[n] {
            return Err(Error::RankOutOfRange { rank: r, n });
        }
        let mut pool: Vec<u8> = (0..n as u16).map(|x| x as u8).collect();
        let mut img = Vec::with_capacity(n);
        for x in 0..n {
            let f = FACT[n - 1 - x];
            let d = (r / f) as usize;
            r %= f;
            img.push(pool.remove(d));
        }
        Ok(Perm { img })
    }
}

fn check_degree(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::DegreeTooSmall { n, min: 1 });
    }
    if n > u8::MAX as usize + 1 {
        return Err(Error::DegreeTooLarge {
            n,
            max: u8::MAX as usize + 1,
        });
    }
    Ok(())
}

/// Streams the parity of every permutation of degree n in rank order, in
/// O(1) amortized time per rank.
///
/// The parity at a rank is the parity of the Lehmer digit sum, maintained
/// incrementally by a mixed-radix odometer over the digits.
pub struct ParityScan {
    digits: Vec<u32>,
    even: bool,
    remaining: u64,
}

impl ParityScan {
    pub fn new(n: usize) -> Result<ParityScan> {
        check_degree(n)?;
        if n > MAX_RANKABLE_DEGREE {
            return Err(Error::DegreeTooLarge {
                n,
                max: MAX_RANKABLE_DEGREE,
            });
        }
        Ok(ParityScan {
            digits: vec![0; n],
            even: true,
            remaining: FACT[n],
        })
    }
}

impl Iterator for ParityScan {
    type Item = Parity;

    fn next(&mut self) -> Option<Parity> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let out = if self.even { Parity::Even } else { Parity::Odd };
        if self.remaining > 0 {
            // Digit at significance s has radix s+1; digit 0 never moves.
            let mut s = 1usize;
            loop {
                self.digits[s] += 1;
                if self.digits[s] as usize <= s {
                    self.even = !self.even;
                    break;
                }
                self.digits[s] = 0;
                if s % 2 == 1 {
                    self.even = !self.even;
                }
                s += 1;
            }
        }
        Some(out)
    }
}

/// Counts, for each point i, the even permutations of degree n that fix i.
///
/// For n >= 3 composing with a transposition of two other points pairs the
/// even permutations fixing i with the odd ones, so every count equals
/// half of (n-1)!.
pub fn even_fixed_point_counts(n: usize) -> Result<Vec<u64>> {
    if n > 10 {
        return Err(Error::DegreeTooLarge { n, max: 10 });
    }
    let mut counts = vec![0u64; n];
    for (rank, parity) in ParityScan::new(n)?.enumerate() {
        if matches!(parity, Parity::Odd) {
            continue;
        }
        let p = Perm::unrank(PermRank(rank as u64), n)?;
        for i in 1..=n {
            if p.apply(i) == i {
                counts[i - 1] += 1;
            }
        }
    }
    Ok(counts)
}
