//! Small Galois fields `GF(p^m)`.
//!
//! Elements are encoded as integers `0..q` whose base-`p` digits are the
//! polynomial coefficients, lowest degree first. Addition and multiplication
//! are precomputed tables.

use crate::error::{Error, Result};
use crate::structure::primes::{factorize, is_prime};

/// Reduction polynomials, monic, coefficients lowest degree first without
/// the leading 1.
fn modulus(p: u32, m: u32) -> Option<Vec<u32>> {
    match (p, m) {
        (_, 1) => Some(vec![0]),
        (2, 2) => Some(vec![1, 1]),    // t² + t + 1
        (2, 3) => Some(vec![1, 1, 0]), // t³ + t + 1
        (3, 2) => Some(vec![1, 0]),    // t² + 1
        _ => None,
    }
}

/// An element of a [`GaloisField`]: its digit encoding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(pub u32);

#[derive(Clone, Debug)]
pub struct GaloisField {
    p: u32,
    m: u32,
    q: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
}

impl GaloisField {
    /// Supported orders: primes, and 4, 8, 9.
    pub fn new(q: u32) -> Result<Self> {
        let unsupported = || Error::Unsupported {
            what: "field order",
            value: q.to_string(),
        };
        let f = factorize(q as u64);
        if f.len() != 1 {
            return Err(unsupported());
        }
        let (p, m) = (f[0].0 as u32, f[0].1);
        debug_assert!(is_prime(p as u64));
        let modulus = modulus(p, m).ok_or_else(unsupported)?;
        let digits = |x: u32| -> Vec<u32> {
            let mut x = x;
            (0..m)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect()
        };
        let encode = |d: &[u32]| -> u32 { d.iter().rev().fold(0, |acc, &c| acc * p + c) };
        let mut add = vec![0; (q * q) as usize];
        let mut mul = vec![0; (q * q) as usize];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = encode(&sum);
                // schoolbook product, then reduce t^k for k >= m
                let mut prod = vec![0u32; (2 * m - 1) as usize];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for k in (m as usize..prod.len()).rev() {
                    let c = prod[k];
                    if c == 0 {
                        continue;
                    }
                    prod[k] = 0;
                    // t^m = -(modulus tail)
                    for (i, &r) in modulus.iter().enumerate() {
                        let idx = k - m as usize + i;
                        prod[idx] = (prod[idx] + (p - r % p) % p * c) % p;
                    }
                }
                mul[(a * q + b) as usize] = encode(&prod[..m as usize]);
            }
        }
        Ok(Self { p, m, q, add, mul })
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.add[(a.0 * self.q + b.0) as usize])
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.mul[(a.0 * self.q + b.0) as usize])
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.elements()
            .find(|&b| self.add(a, b) == self.zero())
            .expect("additive inverse")
    }

    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        self.elements().find(|&b| self.mul(a, b) == self.one())
    }

    pub fn pow(&self, a: FieldElement, e: u32) -> FieldElement {
        (0..e).fold(self.one(), |acc, _| self.mul(acc, a))
    }

    /// Multiplicative order of a non-zero element.
    pub fn multiplicative_order(&self, a: FieldElement) -> u32 {
        assert_ne!(a, self.zero());
        let mut k = 1;
        let mut x = a;
        while x != self.one() {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// The smallest generator of the multiplicative group.
    pub fn primitive_element(&self) -> FieldElement {
        self.elements()
            .skip(1)
            .find(|&a| self.multiplicative_order(a) == self.q - 1)
            .expect("multiplicative group of a finite field is cyclic")
    }

    /// `x ↦ x^p`.
    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.pow(a, self.p)
    }

    /// The elements `p^i` for `i < m`, a basis over the prime field.
    pub fn additive_basis(&self) -> Vec<FieldElement> {
        (0..self.m).map(|i| FieldElement(self.p.pow(i))).collect()
    }

    /// Polynomial coefficients, lowest degree first.
    pub fn coefficients(&self, a: FieldElement) -> Vec<u32> {
        let mut x = a.0;
        (0..self.m)
            .map(|_| {
                let d = x % self.p;
                x /= self.p;
                d
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ORDERS: [u32; 8] = [2, 3, 4, 5, 7, 8, 9, 11];

    #[test]
    fn field_axioms_exhaustive() {
        for q in ORDERS {
            let f = GaloisField::new(q).unwrap();
            let els: Vec<_> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, f.zero()), a);
                assert_eq!(f.mul(a, f.one()), a);
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                if a != f.zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one(), "q={q}");
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn multiplicative_group_is_cyclic() {
        for q in ORDERS {
            let f = GaloisField::new(q).unwrap();
            let g = f.primitive_element();
            let mut seen: Vec<_> = (0..q - 1).map(|k| f.pow(g, k)).collect();
            seen.sort();
            seen.dedup();
            assert_eq!(seen.len() as u32, q - 1);
        }
    }

    #[test]
    fn frobenius_is_an_automorphism() {
        for q in [4, 8, 9] {
            let f = GaloisField::new(q).unwrap();
            let mut images: Vec<_> = f.elements().map(|a| f.frobenius(a)).collect();
            for a in f.elements() {
                assert_eq!(f.pow(a, q), a);
                for b in f.elements() {
                    assert_eq!(
                        f.frobenius(f.add(a, b)),
                        f.add(f.frobenius(a), f.frobenius(b))
                    );
                    assert_eq!(
                        f.frobenius(f.mul(a, b)),
                        f.mul(f.frobenius(a), f.frobenius(b))
                    );
                }
            }
            images.sort();
            images.dedup();
            assert_eq!(images.len() as u32, q);
        }
    }

    #[test]
    fn unsupported_orders() {
        assert!(GaloisField::new(6).is_err());
        assert!(GaloisField::new(16).is_err());
        assert!(GaloisField::new(1).is_err());
    }
}
