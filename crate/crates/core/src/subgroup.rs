//! Subgroups as sorted element-index sets within a parent group, plus the
//! subgroup lattice, normality tests and quotient groups.

use std::collections::HashSet;

use crate::error::Error;
use crate::group::FiniteGroup;
use crate::morphism::GroupMap;
use crate::Result;

/// Subgroup lattice enumeration is only sensible for small parents.
const LATTICE_BOUND: usize = 512;

/// A subgroup of a parent [`FiniteGroup`], stored as a strictly increasing
/// list of element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    parent: FiniteGroup,
    elements: Vec<u32>,
}

impl Subgroup {
    /// Wraps an element set after verifying it is a subgroup: contains the
    /// identity, closed under the parent product (inverses follow in a
    /// finite group).
    pub fn new(parent: FiniteGroup, mut elements: Vec<u32>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.first() != Some(&0) {
            return Err(Error::InvalidSubgroup("must contain the identity".into()));
        }
        if let Some(&bad) = elements.iter().find(|&&x| x as usize >= parent.order()) {
            return Err(Error::InvalidSubgroup(format!(
                "element {bad} out of range"
            )));
        }
        let member: HashSet<u32> = elements.iter().copied().collect();
        for &x in &elements {
            for &y in &elements {
                let z = parent.mul(x as usize, y as usize) as u32;
                if !member.contains(&z) {
                    return Err(Error::InvalidSubgroup(format!(
                        "not closed: {x}·{y} = {z} escapes"
                    )));
                }
            }
        }
        assert_eq!(
            parent.order() % elements.len(),
            0,
            "Lagrange: subgroup order divides group order"
        );
        Ok(Subgroup { parent, elements })
    }

    /// Smallest subgroup containing the given generators (and the identity);
    /// the trivial subgroup for an empty generator set.
    pub fn generated(parent: &FiniteGroup, gens: &[usize]) -> Subgroup {
        let mut in_set = vec![false; parent.order()];
        in_set[0] = true;
        let mut elems: Vec<u32> = vec![0];
        for &g in gens {
            if !in_set[g] {
                in_set[g] = true;
                elems.push(g as u32);
            }
        }
        let mut head = 0;
        while head < elems.len() {
            let x = elems[head] as usize;
            head += 1;
            for idx in 0..elems.len() {
                let y = elems[idx] as usize;
                for z in [parent.mul(x, y), parent.mul(y, x)] {
                    if !in_set[z] {
                        in_set[z] = true;
                        elems.push(z as u32);
                    }
                }
            }
        }
        elems.sort_unstable();
        Subgroup {
            parent: parent.clone(),
            elements: elems,
        }
    }

    pub fn trivial(parent: &FiniteGroup) -> Subgroup {
        Subgroup {
            parent: parent.clone(),
            elements: vec![0],
        }
    }

    pub fn full(parent: &FiniteGroup) -> Subgroup {
        Subgroup {
            parent: parent.clone(),
            elements: (0..parent.order() as u32).collect(),
        }
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Sorted element indices.
    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&(x as u32)).is_ok()
    }

    pub fn is_normal(&self) -> bool {
        for g in 0..self.parent.order() {
            for &h in &self.elements {
                if !self.contains(self.parent.conj(g, h as usize)) {
                    return false;
                }
            }
        }
        true
    }

    /// The conjugate subgroup `g H g⁻¹`.
    pub fn conjugate_by(&self, g: usize) -> Subgroup {
        let mut elements: Vec<u32> = self
            .elements
            .iter()
            .map(|&h| self.parent.conj(g, h as usize) as u32)
            .collect();
        elements.sort_unstable();
        Subgroup {
            parent: self.parent.clone(),
            elements,
        }
    }

    /// Reindexes the subgroup as a standalone group on `0..order`, with the
    /// i-th smallest element mapped to index i (so the identity stays at 0).
    /// Returns the group and the original parent indices per new index.
    pub fn as_group(&self, label: impl Into<String>) -> (FiniteGroup, Vec<u32>) {
        let k = self.elements.len();
        let index_of = |x: u32| self.elements.binary_search(&x).expect("closed") as u32;
        let mut table = vec![0u32; k * k];
        for i in 0..k {
            for j in 0..k {
                let z = self
                    .parent
                    .mul(self.elements[i] as usize, self.elements[j] as usize);
                table[i * k + j] = index_of(z as u32);
            }
        }
        let group = FiniteGroup::from_table(label, k, table).expect("subgroup table is a group");
        (group, self.elements.clone())
    }
}

/// Every subgroup of `g`, found by closing each subgroup of the growing
/// lattice under one extra generator. Deterministic order: by (order,
/// element list).
pub fn all_subgroups(g: &FiniteGroup) -> Result<Vec<Subgroup>> {
    if g.order() > LATTICE_BOUND {
        return Err(Error::ResourceBound {
            what: "subgroup lattice order",
            needed: g.order(),
            bound: LATTICE_BOUND,
        });
    }
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut queue: Vec<Subgroup> = vec![Subgroup::trivial(g)];
    seen.insert(queue[0].elements.clone());
    let mut head = 0;
    while head < queue.len() {
        let current = queue[head].clone();
        head += 1;
        for x in 1..g.order() {
            if current.contains(x) {
                continue;
            }
            let mut gens: Vec<usize> =
                current.elements.iter().map(|&e| e as usize).collect();
            gens.push(x);
            let bigger = Subgroup::generated(g, &gens);
            if seen.insert(bigger.elements.clone()) {
                queue.push(bigger);
            }
        }
    }
    queue.sort_by(|a, b| {
        (a.order(), &a.elements).cmp(&(b.order(), &b.elements))
    });
    Ok(queue)
}

/// All normal subgroups of `g`, including the trivial one and `g` itself,
/// in deterministic (order, element list) order.
pub fn normal_subgroups(g: &FiniteGroup) -> Result<Vec<Subgroup>> {
    Ok(all_subgroups(g)?
        .into_iter()
        .filter(|h| h.is_normal())
        .collect())
}

/// The quotient group `G/H` for a normal subgroup, with the projection map.
///
/// Cosets are indexed in order of their least member, so the identity coset
/// `H` is index 0.
pub fn quotient_group(g: &FiniteGroup, h: &Subgroup) -> Result<(FiniteGroup, GroupMap)> {
    if h.parent() != g {
        return Err(Error::Mismatch("subgroup of a different parent".into()));
    }
    // Normality check doubles as the error path required by callers.
    for ge in 0..g.order() {
        for &he in h.elements() {
            let z = g.conj(ge, he as usize);
            if !h.contains(z) {
                return Err(Error::NotNormal {
                    element: he as usize,
                    by: ge,
                });
            }
        }
    }
    let n = g.order();
    let mut coset_of = vec![u32::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for x in 0..n {
        if coset_of[x] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(x);
        for &he in h.elements() {
            coset_of[g.mul(x, he as usize)] = id;
        }
    }
    let q = reps.len();
    let mut table = vec![0u32; q * q];
    for (i, &ri) in reps.iter().enumerate() {
        for (j, &rj) in reps.iter().enumerate() {
            table[i * q + j] = coset_of[g.mul(ri, rj)];
        }
    }
    let quotient = FiniteGroup::from_table(format!("{}/H{}", g.label(), h.order()), q, table)?;
    let projection = GroupMap::new(g.clone(), quotient.clone(), coset_of)?;
    Ok((quotient, projection))
}
