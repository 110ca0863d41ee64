//! The driving measure of the shuffle: uniform mass 1/(2n-3) on the
//! identity and on each of the 2n-4 three-cycles rotating {i, n-1, n}.

use crate::error::{Error, Result};
use crate::perm::{Orientation, Perm};
use num_rational::Ratio;
use num_traits::Zero;

/// One supported permutation with its exact probability.
#[derive(Clone, Debug)]
pub struct Atom {
    pub perm: Perm,
    pub prob: Ratio<u64>,
}

/// The shuffle measure on the alternating group of degree n.
///
/// Atom order is canonical: identity first, then i = 1..=n-2 ascending with
/// the forward cycle (i, n-1, n) before the backward cycle (i, n, n-1).
#[derive(Clone, Debug)]
pub struct MeasureSpec {
    n: usize,
    atoms: Vec<Atom>,
}

impl MeasureSpec {
    pub fn build(n: usize) -> Result<MeasureSpec> {
        if n < 3 {
            return Err(Error::DegreeTooSmall { n, min: 3 });
        }
        let den = 2 * n as u64 - 3;
        let prob = Ratio::new(1, den);
        let mut atoms = Vec::with_capacity(den as usize);
        atoms.push(Atom {
            perm: Perm::identity(n)?,
            prob,
        });
        for i in 1..=n - 2 {
            atoms.push(Atom {
                perm: Perm::three_cycle(i, n, Orientation::Forward)?,
                prob,
            });
            atoms.push(Atom {
                perm: Perm::three_cycle(i, n, Orientation::Backward)?,
                prob,
            });
        }
        Ok(MeasureSpec { n, atoms })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 2n-3: number of supported permutations, and the common denominator.
    pub fn support_size(&self) -> usize {
        self.atoms.len()
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    /// The non-identity atoms, in canonical order.
    pub fn generators(&self) -> &[Atom] {
        &self.atoms[1..]
    }

    /// Exact probability of `p` under the measure (zero off the support).
    pub fn prob(&self, p: &Perm) -> Result<Ratio<u64>> {
        if p.n() != self.n {
            return Err(Error::DegreeMismatch {
                left: p.n(),
                right: self.n,
            });
        }
        for atom in &self.atoms {
            if atom.perm == *p {
                return Ok(atom.prob);
            }
        }
        Ok(Ratio::zero())
    }
}
