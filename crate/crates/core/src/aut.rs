//! Automorphism groups of small groups, as faithful permutation actions
//! found by generator-image backtracking.

use std::collections::HashMap;

use crate::error::Error;
use crate::group::FiniteGroup;
use crate::iso::isomorphisms_between;
use crate::Result;

/// Default input-size bound for [`automorphism_group`]; enumeration is a
/// full backtracking search, so large inputs must be requested explicitly.
pub const DEFAULT_AUT_INPUT_BOUND: usize = 1000;

/// The full automorphism group of a parent group.
///
/// `carrier` is an abstract group whose element k acts on the parent by the
/// permutation `perm(k)`; composition of permutations matches the carrier
/// table with the convention `carrier.mul(i, j)` = "apply j, then i".
/// Permutations are stored sorted lexicographically, which puts the
/// identity at carrier index 0.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    parent: FiniteGroup,
    carrier: FiniteGroup,
    perms: Vec<Vec<u32>>,
}

/// Enumerates all automorphisms of `g` within the default bound.
pub fn automorphism_group(g: &FiniteGroup) -> Result<AutomorphismGroup> {
    automorphism_group_bounded(g, DEFAULT_AUT_INPUT_BOUND)
}

/// Enumerates all automorphisms of `g`, refusing inputs above `bound`.
pub fn automorphism_group_bounded(g: &FiniteGroup, bound: usize) -> Result<AutomorphismGroup> {
    if g.order() > bound {
        return Err(Error::ResourceBound {
            what: "automorphism search input order",
            needed: g.order(),
            bound,
        });
    }
    let mut perms = isomorphisms_between(g, g, true);
    perms.sort_unstable();
    debug_assert!(perms[0].iter().enumerate().all(|(i, &x)| i == x as usize));

    let mut index: HashMap<&[u32], u32> = HashMap::with_capacity(perms.len());
    for (i, p) in perms.iter().enumerate() {
        let prior = index.insert(p.as_slice(), i as u32);
        debug_assert!(prior.is_none(), "duplicate automorphism");
    }
    let k = perms.len();
    let mut table = vec![0u32; k * k];
    for i in 0..k {
        for j in 0..k {
            let composed: Vec<u32> = (0..g.order())
                .map(|x| perms[i][perms[j][x] as usize])
                .collect();
            table[i * k + j] = *index
                .get(composed.as_slice())
                .expect("automorphisms are closed under composition");
        }
    }
    let carrier = FiniteGroup::from_table(format!("Aut({})", g.label()), k, table)?;
    Ok(AutomorphismGroup {
        parent: g.clone(),
        carrier,
        perms,
    })
}

impl AutomorphismGroup {
    /// Wraps an explicit set of automorphism permutations of `parent`,
    /// which must be closed under composition (e.g. the brace automorphisms
    /// inside the full automorphism group). Permutations are sorted so the
    /// identity lands at carrier index 0.
    pub(crate) fn from_perms(
        parent: FiniteGroup,
        mut perms: Vec<Vec<u32>>,
        label: impl Into<String>,
    ) -> Result<AutomorphismGroup> {
        perms.sort_unstable();
        perms.dedup();
        let index: HashMap<&[u32], u32> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.as_slice(), i as u32))
            .collect();
        let k = perms.len();
        let mut table = vec![0u32; k * k];
        for i in 0..k {
            for j in 0..k {
                let composed: Vec<u32> = (0..parent.order())
                    .map(|x| perms[i][perms[j][x] as usize])
                    .collect();
                table[i * k + j] = *index.get(composed.as_slice()).ok_or_else(|| {
                    Error::InvalidArgument("permutation set not closed under composition".into())
                })?;
            }
        }
        let carrier = FiniteGroup::from_table(label, k, table)?;
        Ok(AutomorphismGroup {
            parent,
            carrier,
            perms,
        })
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    /// The abstract group of automorphisms.
    pub fn carrier(&self) -> &FiniteGroup {
        &self.carrier
    }

    /// Permutation of the parent's elements realizing automorphism `k`.
    pub fn perm(&self, k: usize) -> &[u32] {
        &self.perms[k]
    }

    /// Applies automorphism `k` to parent element `x`.
    #[inline]
    pub fn apply(&self, k: usize, x: usize) -> usize {
        self.perms[k][x] as usize
    }

    /// Carrier index of an explicit permutation, if it is an automorphism.
    pub fn index_of_perm(&self, perm: &[u32]) -> Option<usize> {
        self.perms.binary_search_by(|p| p.as_slice().cmp(perm)).ok()
    }

    /// Composition in the carrier: apply `j`, then `i`.
    #[inline]
    pub fn compose(&self, i: usize, j: usize) -> usize {
        self.carrier.mul(i, j)
    }

    #[inline]
    pub fn inverse(&self, k: usize) -> usize {
        self.carrier.inv(k)
    }

    /// Carrier index of conjugation x ↦ g x g⁻¹, which is always an
    /// automorphism of the parent.
    pub fn index_of_conjugation(&self, g: usize) -> usize {
        let perm: Vec<u32> = (0..self.parent.order())
            .map(|x| self.parent.conj(g, x) as u32)
            .collect();
        self.index_of_perm(&perm)
            .expect("inner automorphisms are automorphisms")
    }
}
