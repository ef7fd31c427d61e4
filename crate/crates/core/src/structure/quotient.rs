//! Quotients realized as the action on right cosets of the kernel.

use std::sync::Arc;

use crate::ambient::{Ambient, ElementId};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::subgroup::Subgroup;

use super::is_normal;

const OUTSIDE: u32 = u32::MAX;

/// `G/N` as a permutation group on the right cosets `Nx`.
#[derive(Debug, Clone)]
pub struct QuotientRep {
    source: Subgroup,
    kernel: Subgroup,
    image: PermGroup,
    image_ambient: Arc<Ambient>,
    generator_images: Vec<Permutation>,
    coset_of: Vec<u32>,
    reps: Vec<ElementId>,
}

/// `G/N` for `N ⊴ G`.
pub fn quotient(g: &Subgroup, n: &Subgroup) -> Result<QuotientRep> {
    if !is_normal(g, n)? {
        return Err(Error::NotNormal);
    }
    let amb = g.ambient();
    let mut coset_of = vec![OUTSIDE; amb.order()];
    let mut reps = Vec::new();
    let kernel: Vec<ElementId> = n.ids().collect();
    for x in g.ids() {
        if coset_of[x as usize] != OUTSIDE {
            continue;
        }
        let c = reps.len() as u32;
        for &k in &kernel {
            coset_of[amb.mul(k, x) as usize] = c;
        }
        reps.push(x);
    }
    let degree = reps.len();
    let act = |x: ElementId| -> Permutation {
        let images = reps
            .iter()
            .map(|&r| coset_of[amb.mul(r, x) as usize])
            .collect();
        Permutation::from_zero_based(images).expect("coset action is a bijection")
    };
    let generator_images: Vec<Permutation> = g.generator_ids().iter().map(|&s| act(s)).collect();
    let image = PermGroup::new(degree, generator_images.clone())?;
    let image_ambient = Ambient::with_budget(image.clone(), amb.budget())?;
    Ok(QuotientRep {
        source: g.clone(),
        kernel: n.clone(),
        image,
        image_ambient,
        generator_images,
        coset_of,
        reps,
    })
}

impl QuotientRep {
    pub fn source(&self) -> &Subgroup {
        &self.source
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn image(&self) -> &PermGroup {
        &self.image
    }

    pub fn image_ambient(&self) -> &Arc<Ambient> {
        &self.image_ambient
    }

    /// The whole image as a subgroup of its own ambient.
    pub fn image_whole(&self) -> Subgroup {
        Subgroup::whole(&self.image_ambient)
    }

    /// Images of the source generators, in order.
    pub fn generator_images(&self) -> &[Permutation] {
        &self.generator_images
    }

    /// Index of the coset `Nx`.
    pub fn coset_of(&self, x: ElementId) -> Option<usize> {
        let c = self.coset_of[x as usize];
        (c != OUTSIDE).then_some(c as usize)
    }

    pub fn coset_representatives(&self) -> &[ElementId] {
        &self.reps
    }

    /// `xN` as a permutation of the cosets.
    pub fn project(&self, x: ElementId) -> Result<Permutation> {
        if !self.source.contains_id(x) {
            return Err(Error::NotContained);
        }
        let amb = self.source.ambient();
        let images = self
            .reps
            .iter()
            .map(|&r| self.coset_of[amb.mul(r, x) as usize])
            .collect();
        Permutation::from_zero_based(images)
    }

    fn project_id(&self, x: ElementId) -> Result<ElementId> {
        let p = self.project(x)?;
        Ok(self
            .image_ambient
            .id_of(&p)
            .expect("image lies in the quotient"))
    }

    /// `HN/N` as a subgroup of the image.
    pub fn project_subgroup(&self, h: &Subgroup) -> Result<Subgroup> {
        h.check_inside(&self.source)?;
        let ids = h
            .generator_ids()
            .iter()
            .map(|&x| self.project_id(x))
            .collect::<Result<Vec<_>>>()?;
        Ok(Subgroup::generated_by_ids(&self.image_ambient, &ids))
    }

    /// Full preimage of a subgroup of the image.
    pub fn preimage(&self, h: &Subgroup) -> Result<Subgroup> {
        if !Arc::ptr_eq(h.ambient(), &self.image_ambient) {
            return Err(Error::AmbientMismatch);
        }
        let amb = self.source.ambient();
        let mut members = amb.empty_set();
        for x in self.source.ids() {
            if h.contains_id(self.project_id(x)?) {
                members.insert(x as usize);
            }
        }
        Ok(Subgroup::from_members(amb, members))
    }

    /// `(ab)N = aN · bN` for every pair of source generators.
    pub fn is_homomorphism_on_generators(&self) -> bool {
        let amb = self.source.ambient();
        let gens = self.source.generator_ids();
        gens.iter().all(|&a| {
            gens.iter().all(|&b| {
                let lhs = self.project(amb.mul(a, b)).unwrap();
                let rhs = self.project(a).unwrap().then(&self.project(b).unwrap());
                lhs == rhs
            })
        })
    }
}
