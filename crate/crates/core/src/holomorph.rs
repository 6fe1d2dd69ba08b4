//! The holomorph Hol(N) = N ⋊ Aut(N) of an abelian group, its regular
//! subgroups, and their classification up to conjugation by Aut(N).
//!
//! A regular subgroup meets each translation coset exactly once, so it is
//! precisely the graph {(x, α_x) : x ∈ N} of a map α: N → Aut(N) with
//! α_0 = id and α_x ∘ α_y = α_{x + α_x(y)}. Enumeration therefore assigns α
//! values depth-first with constraint propagation instead of walking the
//! subgroup lattice: every forced product is filled in immediately and
//! contradictions prune the branch. Deduplication is free because the
//! α-vector is a canonical form.
//!
//! The full Cayley table of the holomorph is only materialized on demand
//! ([`HolomorphGroup::group`]); the searches run on the pair calculus
//! (base table, automorphism permutations, carrier table) directly, which
//! keeps holomorphs of order ~20000 cheap to handle.

use std::collections::HashMap;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::aut::{automorphism_group, AutomorphismGroup};
use crate::error::Error;
use crate::group::FiniteGroup;
use crate::iso::small_group_label;
use crate::subgroup::Subgroup;
use crate::Result;

/// Resource bounds for holomorph searches.
#[derive(Clone, Copy, Debug)]
pub struct SearchLimits {
    /// Largest holomorph order the regular-subgroup search will accept.
    pub max_holomorph_order: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_holomorph_order: 50_000,
        }
    }
}

impl SearchLimits {
    pub fn with_bound(max_holomorph_order: usize) -> Self {
        SearchLimits {
            max_holomorph_order,
        }
    }
}

/// Hol(N) for abelian N, with the product (x, φ)(y, ψ) = (x + φ(y), φψ)
/// and the affine action (x, φ)·z = x + φ(z) on N.
///
/// Element (x, φ) has index `x·|Aut(N)| + φ`; `decode`/`encode` publish the
/// pairing so fixtures can address elements directly.
#[derive(Debug)]
pub struct HolomorphGroup {
    base: FiniteGroup,
    auts: AutomorphismGroup,
    group: OnceLock<FiniteGroup>,
}

/// Builds Hol(N); rejects nonabelian N (left braces need abelian additive
/// groups, and Aut enumeration is bounded).
pub fn holomorph(n: &FiniteGroup) -> Result<HolomorphGroup> {
    if !n.is_abelian() {
        return Err(Error::NotAbelian { order: n.order() });
    }
    let auts = automorphism_group(n)?;
    Ok(HolomorphGroup {
        base: n.clone(),
        auts,
        group: OnceLock::new(),
    })
}

impl HolomorphGroup {
    pub fn base(&self) -> &FiniteGroup {
        &self.base
    }

    pub fn auts(&self) -> &AutomorphismGroup {
        &self.auts
    }

    pub fn order(&self) -> usize {
        self.base.order() * self.auts.order()
    }

    #[inline]
    pub fn encode(&self, x: usize, aut: usize) -> usize {
        x * self.auts.order() + aut
    }

    #[inline]
    pub fn decode(&self, e: usize) -> (usize, usize) {
        (e / self.auts.order(), e % self.auts.order())
    }

    /// Product of two encoded elements.
    pub fn product(&self, e1: usize, e2: usize) -> usize {
        let (x, f) = self.decode(e1);
        let (y, g) = self.decode(e2);
        self.encode(
            self.base.mul(x, self.auts.apply(f, y)),
            self.auts.compose(f, g),
        )
    }

    /// Inverse of an encoded element: (x, φ)⁻¹ = (φ⁻¹(−x), φ⁻¹).
    pub fn inverse(&self, e: usize) -> usize {
        let (x, f) = self.decode(e);
        let f_inv = self.auts.inverse(f);
        self.encode(self.auts.apply(f_inv, self.base.inv(x)), f_inv)
    }

    /// Affine action on the base: (x, φ)·z = x + φ(z).
    pub fn act(&self, e: usize, z: usize) -> usize {
        let (x, f) = self.decode(e);
        self.base.mul(x, self.auts.apply(f, z))
    }

    /// The holomorph as a plain table group, materialized on first use.
    /// All searches in this module avoid it; only subgroup wrappers and
    /// explicit callers pay for the table.
    pub fn group(&self) -> &FiniteGroup {
        self.group.get_or_init(|| {
            FiniteGroup::semidirect_by_action(
                &self.base,
                self.auts.carrier(),
                |a, x| self.auts.apply(a, x),
                format!("Hol({})", self.base.label()),
            )
            .expect("holomorph table is a group")
        })
    }

    /// The normal regular subgroup of translations {(x, id)}.
    pub fn translations(&self) -> Subgroup {
        let elements: Vec<u32> = (0..self.base.order())
            .map(|x| self.encode(x, 0) as u32)
            .collect();
        Subgroup::new(self.group().clone(), elements).expect("translations form a subgroup")
    }

    /// Regularity: |S| = |N| and the stabilizer of 0 ∈ N is trivial, i.e.
    /// the identity is the only member translating by 0.
    pub fn is_regular(&self, s: &Subgroup) -> bool {
        if s.order() != self.base.order() {
            return false;
        }
        let zero_stab = s
            .elements()
            .iter()
            .filter(|&&e| self.decode(e as usize).0 == 0)
            .count();
        zero_stab == 1
    }

    /// The α-vector of a regular subgroup: alpha(x) = the automorphism paired
    /// with translation part x. Fails if the subgroup is not regular.
    pub fn alpha_of_subgroup(&self, s: &Subgroup) -> Result<Vec<u32>> {
        if !self.is_regular(s) {
            return Err(Error::NotRegular);
        }
        let mut alpha = vec![u32::MAX; self.base.order()];
        for &e in s.elements() {
            let (x, f) = self.decode(e as usize);
            if alpha[x] != u32::MAX {
                return Err(Error::NotRegular);
            }
            alpha[x] = f as u32;
        }
        Ok(alpha)
    }

    /// Inverse of [`Self::alpha_of_subgroup`]: wraps an α-vector as a subgroup of
    /// the materialized holomorph.
    pub fn subgroup_from_alpha(&self, alpha: &[u32]) -> Result<Subgroup> {
        let elements: Vec<u32> = alpha
            .iter()
            .enumerate()
            .map(|(x, &a)| self.encode(x, a as usize) as u32)
            .collect();
        Subgroup::new(self.group().clone(), elements)
    }

    /// The regular subgroup {(x, α_x)} as an abstract group on the base
    /// indices: x·y = x + α_x(y). This is also the multiplicative group of
    /// the left brace attached to the subgroup.
    pub fn group_from_alpha(&self, alpha: &[u32], label: impl Into<String>) -> FiniteGroup {
        let n = self.base.order();
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            let ax = alpha[x] as usize;
            for y in 0..n {
                table[x * n + y] = self.base.mul(x, self.auts.apply(ax, y)) as u32;
            }
        }
        FiniteGroup::from_table(label, n, table).expect("regular subgroup is a group")
    }

    /// Conjugation by ν ∈ Aut(N) inside the holomorph:
    /// Φ_ν(x, φ) = (ν(x), ν φ ν⁻¹). Image of any subgroup is a subgroup of
    /// the same order; regularity is preserved.
    pub fn inner_conjugate(&self, nu: usize, s: &Subgroup) -> Subgroup {
        let nu_inv = self.auts.inverse(nu);
        let elements: Vec<u32> = s
            .elements()
            .iter()
            .map(|&e| {
                let (x, f) = self.decode(e as usize);
                let conj = self.auts.compose(self.auts.compose(nu, f), nu_inv);
                self.encode(self.auts.apply(nu, x), conj) as u32
            })
            .collect();
        Subgroup::new(self.group().clone(), elements)
            .expect("automorphism image of a subgroup is a subgroup")
    }

    /// Φ_ν applied to an α-vector (regular subgroups only).
    pub fn conjugate_alpha(&self, alpha: &[u32], nu: usize) -> Vec<u32> {
        let nu_inv = self.auts.inverse(nu);
        let mut out = vec![0u32; alpha.len()];
        for (x, &a) in alpha.iter().enumerate() {
            let conj = self.auts.compose(self.auts.compose(nu, a as usize), nu_inv);
            out[self.auts.apply(nu, x)] = conj as u32;
        }
        out
    }

    /// The ν ∈ Aut(N) with Φ_ν(S) = S, for a regular subgroup in α-form.
    pub(crate) fn alpha_stabilizer(&self, alpha: &[u32]) -> Vec<usize> {
        (0..self.auts.order())
            .filter(|&nu| self.conjugate_alpha(alpha, nu) == alpha)
            .collect()
    }

    /// All regular subgroups as α-vectors, lexicographically sorted (which
    /// equals sorting the corresponding element lists).
    ///
    /// The search fans out over the first branching level (the choice of
    /// α on the first unassigned element) across threads; results are
    /// merged and re-sorted, so the output is schedule-independent.
    pub fn regular_alpha_maps(&self, limits: &SearchLimits) -> Result<Vec<Vec<u32>>> {
        if self.order() > limits.max_holomorph_order {
            return Err(Error::ResourceBound {
                what: "holomorph order",
                needed: self.order(),
                bound: limits.max_holomorph_order,
            });
        }
        if self.base.order() == 1 {
            return Ok(vec![vec![0]]);
        }
        let mut out: Vec<Vec<u32>> = (0..self.auts.order())
            .into_par_iter()
            .flat_map_iter(|candidate| {
                let mut search = AlphaSearch::new(self);
                let mut found = Vec::new();
                let watermark = search.assigned.len();
                if search.assign_and_close(1, candidate) {
                    search.run(&mut found);
                }
                search.rollback(watermark);
                found
            })
            .collect();
        out.sort_unstable();
        // The α-vector is a canonical form, so the search cannot emit the
        // same subgroup twice.
        debug_assert!(out.windows(2).all(|w| w[0] != w[1]));
        Ok(out)
    }

    /// All regular subgroups, wrapped (this materializes the holomorph
    /// table; counting paths use [`Self::regular_alpha_maps`] instead).
    pub fn regular_subgroups(&self, limits: &SearchLimits) -> Result<Vec<Subgroup>> {
        self.regular_alpha_maps(limits)?
            .iter()
            .map(|alpha| self.subgroup_from_alpha(alpha))
            .collect()
    }

    /// Orbit partition of the regular subgroups under Φ_ν for ν ∈ Aut(N),
    /// on α-vectors. Representative = lexicographic minimum of the orbit;
    /// classes ordered by representative.
    pub fn classify_alpha_maps(&self, limits: &SearchLimits) -> Result<Vec<RawRegularClass>> {
        let alphas = self.regular_alpha_maps(limits)?;
        let index: HashMap<&[u32], usize> = alphas
            .iter()
            .enumerate()
            .map(|(i, a)| (a.as_slice(), i))
            .collect();
        let mut visited = vec![false; alphas.len()];
        let mut classes = Vec::new();
        for start in 0..alphas.len() {
            if visited[start] {
                continue;
            }
            // Iterating in sorted order makes the first unvisited member
            // the lexicographic minimum of its orbit.
            let mut orbit = vec![start];
            visited[start] = true;
            let mut head = 0;
            while head < orbit.len() {
                let current = orbit[head];
                head += 1;
                for nu in 1..self.auts.order() {
                    let image = self.conjugate_alpha(&alphas[current], nu);
                    let &idx = index
                        .get(image.as_slice())
                        .expect("conjugate of a regular subgroup is regular");
                    if !visited[idx] {
                        visited[idx] = true;
                        orbit.push(idx);
                    }
                }
            }
            classes.push(RawRegularClass {
                rep_alpha: alphas[start].clone(),
                orbit_length: orbit.len(),
            });
        }
        Ok(classes)
    }

    /// Public classification with wrapped representatives and isomorphism
    /// labels (materializes the holomorph table for the `Subgroup` parents).
    pub fn classify_regular(&self, limits: &SearchLimits) -> Result<Vec<RegularClass>> {
        self.classify_alpha_maps(limits)?
            .into_iter()
            .map(|raw| {
                let representative = self.subgroup_from_alpha(&raw.rep_alpha)?;
                let as_group = self.group_from_alpha(&raw.rep_alpha, "R");
                Ok(RegularClass {
                    representative,
                    orbit_length: raw.orbit_length,
                    iso_label: small_group_label(&as_group),
                })
            })
            .collect()
    }
}

/// A conjugacy class of regular subgroups in α-form (no table attached).
#[derive(Clone, Debug)]
pub struct RawRegularClass {
    pub rep_alpha: Vec<u32>,
    pub orbit_length: usize,
}

/// A conjugacy class of regular subgroups of Hol(N) under Aut(N).
#[derive(Clone, Debug)]
pub struct RegularClass {
    representative: Subgroup,
    orbit_length: usize,
    iso_label: String,
}

impl RegularClass {
    pub(crate) fn from_parts(
        representative: Subgroup,
        orbit_length: usize,
        iso_label: String,
    ) -> RegularClass {
        RegularClass {
            representative,
            orbit_length,
            iso_label,
        }
    }

    pub fn representative(&self) -> &Subgroup {
        &self.representative
    }

    pub fn orbit_length(&self) -> usize {
        self.orbit_length
    }

    /// Isomorphism type label of the representative (exact for the orders
    /// that occur in censuses here).
    pub fn iso_label(&self) -> &str {
        &self.iso_label
    }
}

/// Depth-first α-assignment with constraint propagation.
struct AlphaSearch<'a> {
    hol: &'a HolomorphGroup,
    alpha: Vec<u32>,
    assigned: Vec<u32>,
}

impl<'a> AlphaSearch<'a> {
    fn new(hol: &'a HolomorphGroup) -> Self {
        let n = hol.base.order();
        let mut search = AlphaSearch {
            hol,
            alpha: vec![u32::MAX; n],
            assigned: Vec::with_capacity(n),
        };
        // α_0 = id is forced: the unique member translating by 0 is the
        // identity of the holomorph.
        search.alpha[0] = 0;
        search.assigned.push(0);
        search
    }

    fn run(&mut self, out: &mut Vec<Vec<u32>>) {
        let n = self.hol.base.order();
        if self.assigned.len() == n {
            out.push(self.alpha.clone());
            return;
        }
        let x = (0..n).find(|&x| self.alpha[x] == u32::MAX).unwrap();
        for cand in 0..self.hol.auts.order() {
            let watermark = self.assigned.len();
            if self.assign_and_close(x, cand) {
                self.run(out);
            }
            self.rollback(watermark);
        }
    }

    /// Sets α_x = φ and closes under the subgroup law
    /// α_{u + α_u(v)} = α_u ∘ α_v over all assigned pairs.
    fn assign_and_close(&mut self, x: usize, phi: usize) -> bool {
        let watermark = self.assigned.len();
        self.alpha[x] = phi as u32;
        self.assigned.push(x as u32);
        let mut head = watermark;
        while head < self.assigned.len() {
            let u = self.assigned[head] as usize;
            head += 1;
            for idx in 0..self.assigned.len() {
                let v = self.assigned[idx] as usize;
                for (s, t) in [(u, v), (v, u)] {
                    let a_s = self.alpha[s] as usize;
                    let a_t = self.alpha[t] as usize;
                    let z = self.hol.base.mul(s, self.hol.auts.apply(a_s, t));
                    let forced = self.hol.auts.compose(a_s, a_t) as u32;
                    if self.alpha[z] != u32::MAX {
                        if self.alpha[z] != forced {
                            return false;
                        }
                    } else {
                        self.alpha[z] = forced;
                        self.assigned.push(z as u32);
                    }
                }
            }
        }
        true
    }

    fn rollback(&mut self, watermark: usize) {
        while self.assigned.len() > watermark {
            let x = self.assigned.pop().unwrap() as usize;
            self.alpha[x] = u32::MAX;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::{isomorphism_type_of_order12, Order12Type};
    use std::collections::BTreeMap;

    fn type_counts(hol: &HolomorphGroup) -> BTreeMap<Order12Type, usize> {
        let alphas = hol.regular_alpha_maps(&SearchLimits::default()).unwrap();
        let mut counts = BTreeMap::new();
        for alpha in &alphas {
            let g = hol.group_from_alpha(alpha, "R");
            *counts
                .entry(isomorphism_type_of_order12(&g).unwrap())
                .or_insert(0) += 1;
        }
        counts
    }

    #[test]
    fn holomorph_orders() {
        let c12 = FiniteGroup::cyclic(12);
        let hol = holomorph(&c12).unwrap();
        assert_eq!(hol.order(), 48);

        let e = Order12Type::C6xC2.sample();
        assert_eq!(holomorph(&e).unwrap().order(), 144);

        assert!(holomorph(&FiniteGroup::alternating_4()).is_err());
    }

    #[test]
    fn product_matches_table() {
        let hol = holomorph(&FiniteGroup::cyclic(12)).unwrap();
        let g = hol.group().clone();
        assert_eq!(g.order(), 48);
        for e1 in 0..48 {
            for e2 in 0..48 {
                assert_eq!(hol.product(e1, e2), g.mul(e1, e2));
            }
            assert_eq!(hol.inverse(e1), g.inv(e1));
        }
    }

    #[test]
    fn translations_are_regular_and_normal() {
        let hol = holomorph(&FiniteGroup::cyclic(12)).unwrap();
        let t = hol.translations();
        assert!(hol.is_regular(&t));
        assert!(t.is_normal());
        // The embedded Aut(N) = {(0, φ)} stabilizes 0, so it is not regular.
        let aut_part = Subgroup::new(
            hol.group().clone(),
            (0..hol.auts().order()).map(|a| a as u32).collect(),
        )
        .unwrap();
        assert!(!hol.is_regular(&aut_part));
    }

    #[test]
    fn hol_c2_has_only_translations() {
        let hol = holomorph(&FiniteGroup::cyclic(2)).unwrap();
        let regs = hol.regular_subgroups(&SearchLimits::default()).unwrap();
        assert_eq!(regs.len(), 1);
        assert_eq!(regs[0], hol.translations());
    }

    #[test]
    fn regular_counts_in_hol_c12() {
        let hol = holomorph(&FiniteGroup::cyclic(12)).unwrap();
        let counts = type_counts(&hol);
        assert_eq!(counts.get(&Order12Type::C12), Some(&1));
        assert_eq!(counts.get(&Order12Type::C6xC2), Some(&1));
        assert_eq!(counts.get(&Order12Type::A4), None);
        assert_eq!(counts.get(&Order12Type::D12), Some(&3));
        assert_eq!(counts.get(&Order12Type::Dic12), Some(&1));
    }

    #[test]
    fn regular_counts_in_hol_c6xc2() {
        let hol = holomorph(&Order12Type::C6xC2.sample()).unwrap();
        let counts = type_counts(&hol);
        assert_eq!(counts.get(&Order12Type::C12), Some(&3));
        assert_eq!(counts.get(&Order12Type::C6xC2), Some(&1));
        assert_eq!(counts.get(&Order12Type::A4), Some(&2));
        assert_eq!(counts.get(&Order12Type::D12), Some(&3));
        assert_eq!(counts.get(&Order12Type::Dic12), Some(&3));
    }

    #[test]
    fn classification_lengths_sum_to_counts() {
        for e in [FiniteGroup::cyclic(12), Order12Type::C6xC2.sample()] {
            let hol = holomorph(&e).unwrap();
            let limits = SearchLimits::default();
            let total = hol.regular_alpha_maps(&limits).unwrap().len();
            let classes = hol.classify_alpha_maps(&limits).unwrap();
            let sum: usize = classes.iter().map(|c| c.orbit_length).sum();
            assert_eq!(sum, total);
        }
    }

    #[test]
    fn dihedral_classes_in_hol_c12() {
        let hol = holomorph(&FiniteGroup::cyclic(12)).unwrap();
        let classes = hol.classify_regular(&SearchLimits::default()).unwrap();
        let d12_lengths: Vec<usize> = classes
            .iter()
            .filter(|c| c.iso_label() == "D12")
            .map(|c| c.orbit_length())
            .collect();
        assert_eq!(d12_lengths.iter().sum::<usize>(), 3);
        assert_eq!(d12_lengths.len(), 2); // lengths 1 and 2
        assert!(d12_lengths.contains(&1));
        assert!(d12_lengths.contains(&2));

        let dic_lengths: Vec<usize> = classes
            .iter()
            .filter(|c| c.iso_label() == "Dic12")
            .map(|c| c.orbit_length())
            .collect();
        assert_eq!(dic_lengths, vec![1]);
    }

    #[test]
    fn conjugation_preserves_regularity() {
        let hol = holomorph(&FiniteGroup::cyclic(12)).unwrap();
        let regs = hol.regular_subgroups(&SearchLimits::default()).unwrap();
        for s in &regs {
            // ν = id leaves the subgroup unchanged.
            assert_eq!(&hol.inner_conjugate(0, s), s);
            for nu in 0..hol.auts().order() {
                let image = hol.inner_conjugate(nu, s);
                assert!(hol.is_regular(&image));
            }
        }
    }

    #[test]
    fn resource_bound_refusal() {
        let hol = holomorph(&FiniteGroup::cyclic(12)).unwrap();
        let err = hol
            .regular_alpha_maps(&SearchLimits::with_bound(10))
            .unwrap_err();
        assert!(matches!(err, Error::ResourceBound { .. }));
    }
}
