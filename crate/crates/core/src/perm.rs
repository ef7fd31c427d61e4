//! Permutations of the points `1..=degree`.
//!
//! Products are read left to right: `a.compose(&b)` first applies `a`, then
//! `b`, so the image of `i` is `b(a(i))`. Every algorithm in the crate uses
//! this convention, and conjugation is `h^g = g⁻¹ h g`.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A bijection of `{1, ..., degree}` stored as an image table.
///
/// Ordering is lexicographic on the image table, so the identity is the
/// smallest permutation of its degree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 1-based images: `images[i - 1]` is the image
    /// of point `i`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let zero: Vec<u32> = images
            .iter()
            .map(|&p| {
                if p == 0 || p > images.len() {
                    Err(Error::InvalidPermutation(format!(
                        "image {p} outside 1..={}",
                        images.len()
                    )))
                } else {
                    Ok((p - 1) as u32)
                }
            })
            .collect::<Result<_>>()?;
        Self::from_zero_based(zero)
    }

    /// Builds a permutation from a 0-based image table.
    pub fn from_zero_based(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &p in &images {
            let p = p as usize;
            if p >= n || seen[p] {
                return Err(Error::InvalidPermutation(format!(
                    "image table {:?} is not a bijection",
                    images.iter().map(|x| x + 1).collect::<Vec<_>>()
                )));
            }
            seen[p] = true;
        }
        Ok(Self {
            images: images.into_boxed_slice(),
        })
    }

    /// Builds a permutation from disjoint cycles over 1-based points.
    pub fn from_cycles<C: AsRef<[usize]>>(degree: usize, cycles: &[C]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} outside 1..={degree}"
                    )));
                }
                if touched[p - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} appears twice in cycle notation"
                    )));
                }
                touched[p - 1] = true;
            }
            for (k, &p) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                images[p - 1] = (next - 1) as u32;
            }
        }
        Ok(Self {
            images: images.into_boxed_slice(),
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based `point`.
    pub fn image(&self, point: usize) -> usize {
        self.images[point - 1] as usize + 1
    }

    /// The raw 0-based image table.
    pub fn as_slice(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i as u32 == p)
    }

    /// Smallest 0-based point moved by the permutation.
    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &p)| i as u32 != p)
            .map(|(i, _)| i)
    }

    /// `self` then `other`, checking degrees.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// `self` then `other`; degrees must agree.
    pub(crate) fn then(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Self {
            images: self
                .images
                .iter()
                .map(|&p| other.images[p as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.degree()];
        for (i, &p) in self.images.iter().enumerate() {
            inv[p as usize] = i as u32;
        }
        Self {
            images: inv.into_boxed_slice(),
        }
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.inverse().then(self).then(g)
    }

    pub fn pow(&self, exp: i64) -> Self {
        let base = if exp < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&sq);
            }
            sq = sq.then(&sq);
            e >>= 1;
        }
        acc
    }

    /// Non-trivial cycles, 1-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.images[p] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Least `k ≥ 1` with `self^k = 1`: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }
}

/// `a` then `b`.
pub fn compose(a: &Permutation, b: &Permutation) -> Result<Permutation> {
    a.compose(b)
}

/// Order of a permutation as a group element.
pub fn element_order(g: &Permutation) -> u64 {
    g.order()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn compose_is_left_to_right() {
        // 1 -> 2 -> 1, 2 -> 3 -> 3, 3 -> 1 -> 2
        let a = cyc(3, &[&[1, 2, 3]]);
        let b = cyc(3, &[&[1, 2]]);
        assert_eq!(a.compose(&b).unwrap(), cyc(3, &[&[2, 3]]));
    }

    #[test]
    fn identity_and_involution() {
        let p = cyc(5, &[&[1, 4, 2], &[3, 5]]);
        assert_eq!(p.compose(&Permutation::identity(5)).unwrap(), p);
        let t = cyc(3, &[&[1, 2]]);
        assert!(t.compose(&t).unwrap().is_identity());
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert!(matches!(
            a.compose(&b),
            Err(Error::DegreeMismatch {
                expected: 3,
                found: 4
            })
        ));
    }

    #[test]
    fn orders() {
        assert_eq!(Permutation::identity(4).order(), 1);
        assert_eq!(cyc(5, &[&[1, 2, 3], &[4, 5]]).order(), 6);
        assert_eq!(cyc(9, &[&[1, 2, 3, 4, 5, 6, 7]]).order(), 7);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[[1usize, 2], [2, 3]]).is_err());
        assert!(Permutation::from_cycles(3, &[[1usize, 4]]).is_err());
    }

    #[test]
    fn display_and_pow() {
        let p = cyc(5, &[&[1, 2, 3], &[4, 5]]);
        assert_eq!(p.to_string(), "(1 2 3)(4 5)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert_eq!(p.pow(6), Permutation::identity(5));
        assert_eq!(p.pow(-1), p.inverse());
        assert_eq!(p.pow(3), cyc(5, &[&[4, 5]]));
    }

    #[test]
    fn identity_is_smallest() {
        let id = Permutation::identity(4);
        assert!(id < cyc(4, &[&[3, 4]]));
    }
}
