//! Homomorphisms between table groups, stored as full image vectors.

use crate::error::Error;
use crate::group::FiniteGroup;
use crate::Result;

/// A group homomorphism given by the image of every domain element.
///
/// Construction verifies `images[x·y] = images[x]·images[y]` on all pairs
/// and `images[0] = 0`, so a held `GroupMap` is always a genuine morphism.
#[derive(Clone, Debug)]
pub struct GroupMap {
    domain: FiniteGroup,
    codomain: FiniteGroup,
    images: Vec<u32>,
}

impl GroupMap {
    pub fn new(domain: FiniteGroup, codomain: FiniteGroup, images: Vec<u32>) -> Result<Self> {
        if images.len() != domain.order() {
            return Err(Error::Mismatch(format!(
                "expected {} images, got {}",
                domain.order(),
                images.len()
            )));
        }
        if images.first() != Some(&0) {
            return Err(Error::NotAHomomorphism { x: 0, y: 0 });
        }
        if let Some(&bad) = images.iter().find(|&&im| im as usize >= codomain.order()) {
            return Err(Error::Mismatch(format!(
                "image index {bad} out of range for codomain of order {}",
                codomain.order()
            )));
        }
        for x in 0..domain.order() {
            for y in 0..domain.order() {
                let lhs = images[domain.mul(x, y)] as usize;
                let rhs = codomain.mul(images[x] as usize, images[y] as usize);
                if lhs != rhs {
                    return Err(Error::NotAHomomorphism { x, y });
                }
            }
        }
        Ok(GroupMap {
            domain,
            codomain,
            images,
        })
    }

    /// The trivial morphism sending everything to the identity.
    pub fn trivial(domain: FiniteGroup, codomain: FiniteGroup) -> Self {
        let n = domain.order();
        GroupMap {
            domain,
            codomain,
            images: vec![0; n],
        }
    }

    /// Identity automorphism of a group.
    pub fn identity(group: FiniteGroup) -> Self {
        let images = (0..group.order() as u32).collect();
        GroupMap {
            domain: group.clone(),
            codomain: group,
            images,
        }
    }

    pub fn domain(&self) -> &FiniteGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteGroup {
        &self.codomain
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.codomain.order()];
        self.images.iter().all(|&im| {
            let slot = &mut seen[im as usize];
            !std::mem::replace(slot, true)
        })
    }

    pub fn is_bijective(&self) -> bool {
        self.domain.order() == self.codomain.order() && self.is_injective()
    }

    /// Composition `other ∘ self` (apply `self` first).
    pub fn then(&self, other: &GroupMap) -> Result<GroupMap> {
        if self.codomain != other.domain {
            return Err(Error::Mismatch(
                "composition domains do not line up".into(),
            ));
        }
        let images = self
            .images
            .iter()
            .map(|&im| other.images[im as usize])
            .collect();
        // Composition of verified morphisms needs no re-verification.
        Ok(GroupMap {
            domain: self.domain.clone(),
            codomain: other.codomain.clone(),
            images,
        })
    }

    /// Inverse of a bijective morphism.
    pub fn inverse(&self) -> Result<GroupMap> {
        if !self.is_bijective() {
            return Err(Error::InvalidArgument("map is not bijective".into()));
        }
        let mut images = vec![0u32; self.codomain.order()];
        for (x, &im) in self.images.iter().enumerate() {
            images[im as usize] = x as u32;
        }
        Ok(GroupMap {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            images,
        })
    }
}
