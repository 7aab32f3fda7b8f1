//! Permutations of `1..=n`.
//!
//! A [`Permutation`] stores the image of every point, so `sigma.apply(i)` is
//! `σ(i)`. Composition follows the usual right-to-left convention:
//! `a.compose(&b)` is the map `i ↦ a(b(i))`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // images[i - 1] = σ(i)
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Builds a permutation from its image list `[σ(1), σ(2), …, σ(n)]`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidPermutation(n));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        check_point(n, i)?;
        check_point(n, j)?;
        if i == j {
            return Err(Error::DegenerateTransposition(i));
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, j - 1);
        Ok(Permutation { images })
    }

    /// The cycle `(c_1 c_2 … c_r)`, sending `c_t` to `c_{t+1}` and `c_r` to `c_1`.
    pub fn from_cycle(n: usize, cycle: &[usize]) -> Result<Self> {
        let mut seen = vec![false; n];
        for &c in cycle {
            check_point(n, c)?;
            if seen[c - 1] {
                return Err(Error::RepeatedIndex(c));
            }
            seen[c - 1] = true;
        }
        let mut images: Vec<usize> = (1..=n).collect();
        for (t, &c) in cycle.iter().enumerate() {
            images[c - 1] = cycle[(t + 1) % cycle.len()];
        }
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `σ(i)` for `i` in `1..=n`.
    ///
    /// Panics when `i` is out of range.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&x| self.images[x - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x - 1] = i + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// Disjoint cycles of length at least two, each starting at its smallest
    /// point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 1..=self.len() {
            if seen[start - 1] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x - 1] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub(crate) fn swap_images_of_points(&mut self, a: usize, b: usize) {
        // left-multiply by the transposition (a b): every point mapping to a
        // now maps to b and vice versa
        for x in self.images.iter_mut() {
            if *x == a {
                *x = b;
            } else if *x == b {
                *x = a;
            }
        }
    }
}

fn check_point(n: usize, i: usize) -> Result<()> {
    if i == 0 || i > n {
        Err(Error::IndexOutOfRange { index: i, max: n })
    } else {
        Ok(())
    }
}

/// Cycle notation, `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (t, c) in cycle.iter().enumerate() {
                if t > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}
