use std::fmt;

use sha2::{Digest, Sha256};

use crate::perm::Permutation;

/// SHA-256 digest of a sorted element list.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint([u8; 32]);

impl Fingerprint {
    /// Hashes permutations that are already in sorted order.
    pub fn of_sorted<'a, I>(elements: I) -> Self
    where
        I: IntoIterator<Item = &'a Permutation>,
    {
        let mut hasher = Sha256::new();
        for p in elements {
            hasher.update((p.degree() as u32).to_le_bytes());
            for &x in p.as_slice() {
                hasher.update(x.to_le_bytes());
            }
        }
        let digest = hasher.finalize();
        let mut out = [0u8; 32];
        out.copy_from_slice(&digest);
        Self(out)
    }

    pub fn as_bytes(&self) -> &[u8; 32] {
        &self.0
    }

    /// First 16 hex digits; what reports print.
    pub fn short(&self) -> String {
        self.0[..8].iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fingerprint({})", self.short())
    }
}

/// A canonically sorted, duplicate-free list of permutations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    elements: Vec<Permutation>,
    fingerprint: Fingerprint,
}

impl ElementSet {
    pub fn from_unsorted(mut elements: Vec<Permutation>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let fingerprint = Fingerprint::of_sorted(&elements);
        Self {
            elements,
            fingerprint,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn as_slice(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn into_vec(self) -> Vec<Permutation> {
        self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn fingerprint(&self) -> Fingerprint {
        self.fingerprint
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.elements.iter()
    }

    /// Closed under products and inverses (and non-empty).
    pub fn is_subgroup(&self) -> bool {
        if self.elements.is_empty() {
            return false;
        }
        self.elements.iter().all(|a| {
            self.contains(&a.inverse()) && self.elements.iter().all(|b| self.contains(&a.then(b)))
        })
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ElementSet")
            .field("len", &self.elements.len())
            .field("fingerprint", &self.fingerprint)
            .finish()
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = &'a Permutation;
    type IntoIter = std::slice::Iter<'a, Permutation>;
    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}
