use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as `(p, exponent)` pairs, increasing in `p`.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: u64, p: u64) -> u64 {
    let mut part = 1;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
        part *= p;
    }
    part
}

/// `n` is a power of `p` (including `p⁰ = 1`).
pub fn is_power_of(n: u64, p: u64) -> bool {
    p_part(n, p) == n
}

/// A power of some prime, 1 included.
pub fn is_prime_power(n: u64) -> bool {
    factorize(n).len() <= 1
}

/// A finite set of primes, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeSet(BTreeSet<u64>);

impl PrimeSet {
    pub fn new<I: IntoIterator<Item = u64>>(primes: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for p in primes {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            set.insert(p);
        }
        Ok(Self(set))
    }

    /// Prime divisors of `n`.
    pub fn of(n: u64) -> Self {
        Self(factorize(n).into_iter().map(|(p, _)| p).collect())
    }

    pub fn contains(&self, p: u64) -> bool {
        self.0.contains(&p)
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> Option<u64> {
        self.0.last().copied()
    }

    /// The π-part of `n`.
    pub fn part_of(&self, n: u64) -> u64 {
        self.0.iter().map(|&p| p_part(n, p)).product()
    }

    /// Every prime divisor of `n` lies in the set.
    pub fn covers(&self, n: u64) -> bool {
        self.part_of(n) == n
    }

    /// All subsets, smallest first.
    pub fn subsets(&self) -> Vec<PrimeSet> {
        let primes: Vec<u64> = self.iter().collect();
        (0u32..1 << primes.len())
            .map(|mask| {
                PrimeSet(
                    primes
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, &p)| p)
                        .collect(),
                )
            })
            .collect()
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}
