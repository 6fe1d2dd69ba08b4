//! Morphisms τ: F → Z_p^* and their classification up to precomposition
//! with the inner automorphisms Φ_ν of the holomorph that stabilize F.
//!
//! Enumeration reduces to the normal subgroups F′ of F with cyclic quotient
//! C of order dividing p−1, with one morphism per embedding of C into the
//! units; kernels label the resulting brace classes.

use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::arith;
use crate::aut::{automorphism_group, AutomorphismGroup};
use crate::error::Error;
use crate::group::FiniteGroup;
use crate::holomorph::{HolomorphGroup, RegularClass, SearchLimits};
use crate::iso::small_group_label;
use crate::morphism::GroupMap;
use crate::subgroup::{normal_subgroups, quotient_group, Subgroup};
use crate::Result;

/// The unit group Z_p^* as a table group: index i carries the unit i+1, so
/// the identity (unit 1) sits at index 0.
#[derive(Clone, Debug)]
pub struct UnitsModP {
    p: usize,
    carrier: FiniteGroup,
}

impl UnitsModP {
    pub fn new(p: usize) -> Result<UnitsModP> {
        if !arith::is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        let k = p - 1;
        let mut table = vec![0u32; k * k];
        for i in 0..k {
            for j in 0..k {
                table[i * k + j] = (((i + 1) * (j + 1)) % p - 1) as u32;
            }
        }
        let carrier = FiniteGroup::from_table(format!("Z{p}*"), k, table)?;
        Ok(UnitsModP { p, carrier })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn carrier(&self) -> &FiniteGroup {
        &self.carrier
    }

    pub fn unit_at(&self, index: usize) -> usize {
        index + 1
    }

    pub fn index_of(&self, unit: usize) -> usize {
        unit % self.p - 1
    }
}

/// The canonical ζ_k mod p: the smallest positive integer of multiplicative
/// order exactly k. Requires k | p−1.
pub fn unit_of_order(p: usize, k: usize) -> Result<usize> {
    if !arith::is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if k == 0 || (p - 1) % k != 0 {
        return Err(Error::InvalidArgument(format!(
            "order {k} does not divide p-1 = {}",
            p - 1
        )));
    }
    (1..p)
        .find(|&u| arith::multiplicative_order(u, p) == k)
        .ok_or_else(|| Error::InvalidArgument("no unit of requested order".into()))
}

/// A group morphism F → Z_p^*, stored as the full unit-value vector over F.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauMorphism {
    group: FiniteGroup,
    p: usize,
    values: Vec<usize>,
}

impl TauMorphism {
    /// Validates multiplicativity: values(x·y) = values(x)·values(y) mod p
    /// and values(identity) = 1.
    pub fn new(group: FiniteGroup, p: usize, values: Vec<usize>) -> Result<TauMorphism> {
        if !arith::is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        if values.len() != group.order() {
            return Err(Error::Mismatch(format!(
                "expected {} values, got {}",
                group.order(),
                values.len()
            )));
        }
        if values.iter().any(|&v| v == 0 || v >= p) {
            return Err(Error::InvalidArgument("values must be units mod p".into()));
        }
        if values[0] != 1 {
            return Err(Error::NotAHomomorphism { x: 0, y: 0 });
        }
        for x in 0..group.order() {
            for y in 0..group.order() {
                if values[group.mul(x, y)] != values[x] * values[y] % p {
                    return Err(Error::NotAHomomorphism { x, y });
                }
            }
        }
        Ok(TauMorphism { group, p, values })
    }

    pub fn trivial(group: FiniteGroup, p: usize) -> TauMorphism {
        let n = group.order();
        TauMorphism {
            group,
            p,
            values: vec![1; n],
        }
    }

    /// The multiplicative group F the morphism is defined on.
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn value(&self, x: usize) -> usize {
        self.values[x]
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 1)
    }

    pub fn kernel_size(&self) -> usize {
        self.values.iter().filter(|&&v| v == 1).count()
    }

    /// The kernel as a subgroup of F, with its isomorphism-type label.
    pub fn kernel(&self) -> (Subgroup, String) {
        let elements: Vec<u32> = (0..self.group.order())
            .filter(|&x| self.values[x] == 1)
            .map(|x| x as u32)
            .collect();
        let sub = Subgroup::new(self.group.clone(), elements).expect("kernel is a subgroup");
        let (as_group, _) = sub.as_group("ker");
        let label = small_group_label(&as_group);
        (sub, label)
    }

    /// Precomposition τ ∘ g with a permutation of F (an automorphism of F
    /// or the restriction of a Φ_ν).
    pub fn precompose(&self, perm: &[u32]) -> TauMorphism {
        let values = (0..self.group.order())
            .map(|x| self.values[perm[x] as usize])
            .collect();
        TauMorphism {
            group: self.group.clone(),
            p: self.p,
            values,
        }
    }

    /// The semidirect product Z_p ⋊_τ F as a table group; elements pair
    /// (m, f) at index m·|F| + f.
    pub fn semidirect_group(&self) -> Result<FiniteGroup> {
        let zp = FiniteGroup::cyclic(self.p);
        FiniteGroup::semidirect_by_action(
            &zp,
            &self.group,
            |f, m| self.values[f] * m % self.p,
            format!("C{}:{}", self.p, self.group.label()),
        )
    }

    /// τ as a map into the brace automorphisms of the trivial brace of size
    /// p (unit k acts as x ↦ kx mod p).
    pub fn unit_action_map(&self, brace_auts: &AutomorphismGroup) -> Result<GroupMap> {
        if brace_auts.parent().order() != self.p {
            return Err(Error::Mismatch(
                "brace automorphism group is not over Z_p".into(),
            ));
        }
        let images: Vec<u32> = self
            .values
            .iter()
            .map(|&u| {
                let perm: Vec<u32> = (0..self.p).map(|x| (u * x % self.p) as u32).collect();
                brace_auts
                    .index_of_perm(&perm)
                    .map(|k| k as u32)
                    .ok_or_else(|| {
                        Error::Mismatch("unit action is not among the brace automorphisms".into())
                    })
            })
            .collect::<Result<_>>()?;
        GroupMap::new(self.group.clone(), brace_auts.carrier().clone(), images)
    }
}

/// All morphisms τ: F → Z_p^*, one per (normal subgroup with cyclic
/// quotient of order d | p−1, unit embedding of the quotient). The trivial
/// morphism comes first; kernels shrink along the list; embeddings are
/// ordered by exponent, so the output is deterministic.
pub fn enumerate_tau(f: &FiniteGroup, p: usize) -> Result<Vec<TauMorphism>> {
    if !arith::is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let mut kernels = normal_subgroups(f)?;
    kernels.sort_by(|a, b| {
        (std::cmp::Reverse(a.order()), a.elements()).cmp(&(std::cmp::Reverse(b.order()), b.elements()))
    });
    let mut out = Vec::new();
    for kernel in kernels {
        let (quotient, projection) = quotient_group(f, &kernel)?;
        let d = quotient.order();
        if (p - 1) % d != 0 {
            continue; // no units of that order mod p
        }
        if d == 1 {
            out.push(TauMorphism::trivial(f.clone(), p));
            continue;
        }
        // Cyclic means an element of full order exists; exponent alone is
        // not enough (S3 has exponent 6).
        let Some(generator) = (1..d).find(|&q| quotient.element_order(q) == d) else {
            continue;
        };
        let zeta = unit_of_order(p, d)?;
        // Discrete logs base `generator` inside the quotient.
        let mut dlog = vec![0usize; d];
        let mut acc = 0usize;
        for k in 0..d {
            dlog[acc] = k;
            acc = quotient.mul(acc, generator);
        }
        for e in 1..d {
            if arith::gcd(e, d) != 1 {
                continue;
            }
            let values: Vec<usize> = (0..f.order())
                .map(|x| arith::pow_mod(zeta, e * dlog[projection.apply(x)], p))
                .collect();
            out.push(TauMorphism::new(f.clone(), p, values)?);
        }
    }
    Ok(out)
}

/// Automorphism stabilizer S₀(τ) = { g ∈ Aut F : τ∘g = τ }, as a subgroup
/// of the automorphism carrier.
pub fn s_zero(f: &FiniteGroup, tau: &TauMorphism) -> Result<Subgroup> {
    if tau.group() != f {
        return Err(Error::Mismatch("τ is not defined on this group".into()));
    }
    let auts = automorphism_group(f)?;
    let fixing: Vec<u32> = (0..auts.order())
        .filter(|&k| {
            let perm = auts.perm(k);
            (0..f.order()).all(|x| tau.value(perm[x] as usize) == tau.value(x))
        })
        .map(|k| k as u32)
        .collect();
    Subgroup::new(auts.carrier().clone(), fixing)
}

/// One equivalence class of pairs (F, τ): a conjugacy class of regular
/// subgroups F ≤ Hol(E) together with an orbit of morphisms τ under
/// precomposition with the Φ_ν stabilizing F.
#[derive(Clone, Debug)]
pub struct TauClass {
    f_class: RegularClass,
    tau_rep: TauMorphism,
    orbit_size: usize,
    kernel_order: usize,
    kernel_label: String,
}

impl TauClass {
    pub fn f_class(&self) -> &RegularClass {
        &self.f_class
    }

    /// Canonical representative: lexicographically least value vector in
    /// the orbit.
    pub fn tau_rep(&self) -> &TauMorphism {
        &self.tau_rep
    }

    /// Number of morphisms equivalent to the representative.
    pub fn orbit_size(&self) -> usize {
        self.orbit_size
    }

    pub fn kernel_order(&self) -> usize {
        self.kernel_order
    }

    pub fn kernel_label(&self) -> &str {
        &self.kernel_label
    }

    /// Column label in the census tables: "F" for the trivial morphism
    /// (direct products), otherwise the kernel's isomorphism label.
    pub fn kernel_column(&self) -> &str {
        if self.tau_rep.is_trivial() {
            "F"
        } else {
            &self.kernel_label
        }
    }

    /// Length of the conjugacy class of the corresponding regular subgroup
    /// of Hol(Z_p × E): F-class length times τ-orbit size.
    pub fn holomorph_class_length(&self) -> usize {
        self.f_class.orbit_length() * self.orbit_size
    }
}

impl Serialize for TauClass {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("TauClass", 5)?;
        s.serialize_field("F_label", self.f_class.iso_label())?;
        s.serialize_field("kernel_order", &self.kernel_order)?;
        s.serialize_field("kernel_label", &self.kernel_label)?;
        s.serialize_field("orbit_size", &self.orbit_size)?;
        s.serialize_field("tau_values", &self.tau_rep.values)?;
        s.end()
    }
}

/// Partitions the morphisms F → Z_p^* into orbits under τ ↦ τ∘Φ_ν|_F over
/// the ν ∈ Aut(E) with Φ_ν(F) = F. For a regular F the restriction acts on
/// translation parts, so the position permutation is ν itself.
pub fn tau_orbits(hol: &HolomorphGroup, f: &Subgroup, p: usize) -> Result<Vec<TauClass>> {
    let alpha = hol.alpha_of_subgroup(f)?;
    tau_orbits_for_alpha(hol, &alpha, p)
}

pub(crate) fn tau_orbits_for_alpha(
    hol: &HolomorphGroup,
    alpha: &[u32],
    p: usize,
) -> Result<Vec<TauClass>> {
    let f_group = hol.group_from_alpha(alpha, "F");
    let taus = enumerate_tau(&f_group, p)?;
    let stabilizer = hol.alpha_stabilizer(alpha);
    let orbit_length = hol.auts().order() / stabilizer.len();
    let f_class = RegularClass::from_parts(
        hol.subgroup_from_alpha(alpha)?,
        orbit_length,
        small_group_label(&f_group),
    );

    let restrictions: Vec<&[u32]> = stabilizer
        .iter()
        .map(|&nu| hol.auts().perm(nu))
        .collect();
    let mut seen = vec![false; taus.len()];
    let index_of = |values: &[usize]| taus.iter().position(|t| t.values() == values);
    let mut classes = Vec::new();
    for start in 0..taus.len() {
        if seen[start] {
            continue;
        }
        let mut orbit_members = Vec::new();
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(current) = stack.pop() {
            orbit_members.push(current);
            for perm in &restrictions {
                let image = taus[current].precompose(perm);
                let idx = index_of(image.values())
                    .expect("precomposition permutes the morphism list");
                if !seen[idx] {
                    seen[idx] = true;
                    stack.push(idx);
                }
            }
        }
        let rep = orbit_members
            .iter()
            .map(|&i| &taus[i])
            .min_by(|a, b| a.values().cmp(b.values()))
            .expect("orbit is nonempty")
            .clone();
        let (kernel, kernel_label) = rep.kernel();
        classes.push(TauClass {
            f_class: f_class.clone(),
            kernel_order: kernel.order(),
            kernel_label,
            orbit_size: orbit_members.len(),
            tau_rep: rep,
        });
    }
    Ok(classes)
}

/// The complete classification of braces of size |E|·p with additive group
/// Z_p × E: one [`TauClass`] per brace isomorphism class, grouped by the
/// conjugacy classes of regular subgroups of Hol(E).
pub fn classify_pairs(
    e: &FiniteGroup,
    p: usize,
    limits: &SearchLimits,
) -> Result<Vec<TauClass>> {
    if !crate::counting::check_hypothesis(e.order(), p) {
        return Err(Error::HypothesisNotVerified {
            n: e.order(),
            p,
            reason: "normal subgroup of order p not certified".into(),
        });
    }
    let hol = crate::holomorph::holomorph(e)?;
    let raw_classes = hol.classify_alpha_maps(limits)?;
    let mut out = Vec::new();
    for raw in &raw_classes {
        out.extend(tau_orbits_for_alpha(&hol, &raw.rep_alpha, p)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::holomorph::holomorph;
    use crate::iso::Order12Type;
    use std::collections::BTreeMap;

    fn kernel_census(taus: &[TauMorphism]) -> BTreeMap<usize, usize> {
        let mut census = BTreeMap::new();
        for t in taus {
            *census.entry(t.kernel_size()).or_insert(0) += 1;
        }
        census
    }

    #[test]
    fn canonical_units() {
        assert_eq!(unit_of_order(13, 1).unwrap(), 1);
        assert_eq!(unit_of_order(13, 2).unwrap(), 12);
        assert_eq!(unit_of_order(13, 4).unwrap(), 5);
        assert_eq!(unit_of_order(7, 6).unwrap(), 3);
        assert!(unit_of_order(7, 4).is_err()); // 4 does not divide 6
        assert!(unit_of_order(12, 2).is_err()); // not prime
    }

    #[test]
    fn units_mod_p_structure() {
        let units = UnitsModP::new(13).unwrap();
        assert_eq!(units.carrier().order(), 12);
        assert!(units.carrier().is_abelian());
        assert_eq!(units.carrier().exponent(), 12); // cyclic
        assert_eq!(units.unit_at(0), 1);
        assert_eq!(units.index_of(1), 0);
    }

    #[test]
    fn tau_census_c12() {
        let c12 = FiniteGroup::cyclic(12);
        // p ≡ 1 (mod 12): all twelve morphisms exist.
        let taus = enumerate_tau(&c12, 13).unwrap();
        assert_eq!(taus.len(), 12);
        let census = kernel_census(&taus);
        let expected: BTreeMap<usize, usize> =
            [(12, 1), (6, 1), (4, 2), (3, 2), (2, 2), (1, 4)].into();
        assert_eq!(census, expected);

        // p ≡ 11: only the trivial morphism and the kernel-6 one.
        let taus = enumerate_tau(&c12, 11).unwrap();
        assert_eq!(kernel_census(&taus), [(12, 1), (6, 1)].into());
    }

    #[test]
    fn tau_census_a4_d12_dic12() {
        let a4 = FiniteGroup::alternating_4();
        assert_eq!(enumerate_tau(&a4, 7).unwrap().len(), 3); // 7 ≡ 1 mod 3
        assert_eq!(enumerate_tau(&a4, 11).unwrap().len(), 1);

        let d12 = FiniteGroup::dihedral(6);
        for p in [7usize, 11, 13, 17] {
            let taus = enumerate_tau(&d12, p).unwrap();
            assert_eq!(kernel_census(&taus), [(12, 1), (6, 3)].into(), "p = {p}");
        }

        let dic = FiniteGroup::dicyclic_12();
        assert_eq!(
            kernel_census(&enumerate_tau(&dic, 13).unwrap()),
            [(12, 1), (6, 1), (3, 2)].into()
        );
        assert_eq!(
            kernel_census(&enumerate_tau(&dic, 7).unwrap()),
            [(12, 1), (6, 1)].into()
        );
    }

    #[test]
    fn tau_census_c6xc2() {
        let f = Order12Type::C6xC2.sample();
        let taus = enumerate_tau(&f, 7).unwrap();
        assert_eq!(
            kernel_census(&taus),
            [(12, 1), (6, 3), (4, 2), (2, 6)].into()
        );
        // Counting identity: Σ φ(d) over cyclic quotients d | p−1.
        assert_eq!(taus.len(), 12);
    }

    #[test]
    fn kernel_labels_distinguish() {
        let d12 = FiniteGroup::dihedral(6);
        let taus = enumerate_tau(&d12, 7).unwrap();
        let labels: Vec<String> = taus
            .iter()
            .filter(|t| !t.is_trivial())
            .map(|t| t.kernel().1)
            .collect();
        // One cyclic kernel and two dihedral ones.
        assert_eq!(labels.iter().filter(|l| l.as_str() == "C6").count(), 1);
        assert_eq!(labels.iter().filter(|l| l.as_str() == "D6").count(), 2);
    }

    #[test]
    fn s_zero_sizes() {
        // F = C12, kernel-6 τ: S₀ = Aut F of size 4.
        let c12 = FiniteGroup::cyclic(12);
        let taus = enumerate_tau(&c12, 13).unwrap();
        let kernel6 = taus.iter().find(|t| t.kernel_size() == 6).unwrap();
        assert_eq!(s_zero(&c12, kernel6).unwrap().order(), 4);
        // Kernel-3 τ: S₀ = {1, 5} of size 2.
        let kernel3 = taus.iter().find(|t| t.kernel_size() == 3).unwrap();
        assert_eq!(s_zero(&c12, kernel3).unwrap().order(), 2);
        // Trivial τ: everything fixes it.
        let trivial = TauMorphism::trivial(c12.clone(), 13);
        assert_eq!(s_zero(&c12, &trivial).unwrap().order(), 4);

        // F = A4, nontrivial τ: S₀ ≅ A4 of size 12 inside S4.
        let a4 = FiniteGroup::alternating_4();
        let taus = enumerate_tau(&a4, 7).unwrap();
        let nontrivial = taus.iter().find(|t| !t.is_trivial()).unwrap();
        assert_eq!(s_zero(&a4, nontrivial).unwrap().order(), 12);

        // F = Dic12, kernel-3 τ: S₀ = ⟨ρ², σ⟩ of size 6 (ρ² has order 3 in
        // Aut Dic12 ≅ D12); the brute-force |Aut| oracle in the acceptance
        // suite pins this down.
        let dic = FiniteGroup::dicyclic_12();
        let taus = enumerate_tau(&dic, 13).unwrap();
        let kernel3 = taus.iter().find(|t| t.kernel_size() == 3).unwrap();
        assert_eq!(s_zero(&dic, kernel3).unwrap().order(), 6);

        // F = D12: kernel C6 fixes everything, dihedral kernels give size 6.
        let d12 = FiniteGroup::dihedral(6);
        let taus = enumerate_tau(&d12, 7).unwrap();
        for t in taus.iter().filter(|t| !t.is_trivial()) {
            let expected = if t.kernel().1 == "C6" { 12 } else { 6 };
            assert_eq!(s_zero(&d12, t).unwrap().order(), expected);
        }
    }

    #[test]
    fn s_zero_contains_inner_automorphisms() {
        // τ∘conj_f = τ for every f ∈ F because Z_p^* is abelian, so the
        // conjugation automorphisms always sit inside S₀.
        for f_group in [
            FiniteGroup::dihedral(6),
            FiniteGroup::alternating_4(),
            FiniteGroup::dicyclic_12(),
        ] {
            let auts = automorphism_group(&f_group).unwrap();
            for tau in enumerate_tau(&f_group, 13).unwrap() {
                let s0 = s_zero(&f_group, &tau).unwrap();
                for f in 0..f_group.order() {
                    let idx = auts.index_of_conjugation(f);
                    assert!(s0.contains(idx));
                }
            }
        }
    }

    #[test]
    fn tau_action_well_defined() {
        // τ∘g has an isomorphic kernel for every automorphism g.
        let f = Order12Type::C6xC2.sample();
        let taus = enumerate_tau(&f, 7).unwrap();
        let auts = automorphism_group(&f).unwrap();
        for t in &taus {
            for k in 0..auts.order() {
                let composed = t.precompose(auts.perm(k));
                let validated =
                    TauMorphism::new(f.clone(), 7, composed.values().to_vec()).unwrap();
                assert_eq!(validated.kernel().1, t.kernel().1);
            }
        }
    }

    #[test]
    fn trivial_tau_alone_in_orbit() {
        let hol = holomorph(&FiniteGroup::cyclic(12)).unwrap();
        let limits = SearchLimits::default();
        for raw in hol.classify_alpha_maps(&limits).unwrap() {
            let classes = tau_orbits_for_alpha(&hol, &raw.rep_alpha, 13).unwrap();
            let trivial: Vec<_> = classes
                .iter()
                .filter(|c| c.tau_rep().is_trivial())
                .collect();
            assert_eq!(trivial.len(), 1);
            assert_eq!(trivial[0].orbit_size(), 1);
        }
    }

    #[test]
    fn translation_tau_orbits_on_c12() {
        // E = C12, F = translations ≅ C12, p ≡ 1 (mod 12): six classes with
        // kernel orders 12, 6, 4, 3, 2, 1.
        let hol = holomorph(&FiniteGroup::cyclic(12)).unwrap();
        let t = hol.translations();
        let classes = tau_orbits(&hol, &t, 13).unwrap();
        let mut kernel_orders: Vec<usize> = classes.iter().map(|c| c.kernel_order()).collect();
        kernel_orders.sort_unstable();
        assert_eq!(kernel_orders, vec![1, 2, 3, 4, 6, 12]);
        // Orbit sizes account for all 12 morphisms.
        let total: usize = classes.iter().map(|c| c.orbit_size()).sum();
        assert_eq!(total, 12);
    }

    #[test]
    fn kernel2_collapse_depends_on_ambient_e() {
        let limits = SearchLimits::default();
        // F ≅ C6×C2 inside Hol(C6×C2): the six kernel-order-2 morphisms
        // collapse to one class.
        let e2 = Order12Type::C6xC2.sample();
        let hol2 = holomorph(&e2).unwrap();
        let f_class = hol2
            .classify_alpha_maps(&limits)
            .unwrap()
            .into_iter()
            .find(|c| {
                let g = hol2.group_from_alpha(&c.rep_alpha, "F");
                g.is_abelian() && g.exponent() == 6
            })
            .unwrap();
        let classes = tau_orbits_for_alpha(&hol2, &f_class.rep_alpha, 7).unwrap();
        let kernel2: Vec<_> = classes.iter().filter(|c| c.kernel_order() == 2).collect();
        assert_eq!(kernel2.len(), 1);
        assert_eq!(kernel2[0].orbit_size(), 6);

        // The same F inside Hol(C12): two classes survive.
        let hol1 = holomorph(&FiniteGroup::cyclic(12)).unwrap();
        let f_class = hol1
            .classify_alpha_maps(&limits)
            .unwrap()
            .into_iter()
            .find(|c| {
                let g = hol1.group_from_alpha(&c.rep_alpha, "F");
                g.is_abelian() && g.exponent() == 6
            })
            .unwrap();
        let classes = tau_orbits_for_alpha(&hol1, &f_class.rep_alpha, 7).unwrap();
        let kernel2: Vec<_> = classes.iter().filter(|c| c.kernel_order() == 2).collect();
        assert_eq!(kernel2.len(), 2);
    }

    #[test]
    fn classify_pairs_row_counts() {
        let limits = SearchLimits::default();
        // E = C12, p = 11: 14 classes.
        let classes = classify_pairs(&FiniteGroup::cyclic(12), 11, &limits).unwrap();
        assert_eq!(classes.len(), 14);

        // E = C6×C2, p = 7: 15 classes.
        let classes = classify_pairs(&Order12Type::C6xC2.sample(), 7, &limits).unwrap();
        assert_eq!(classes.len(), 15);

        // E = C12, p = 13: 22 classes.
        let classes = classify_pairs(&FiniteGroup::cyclic(12), 13, &limits).unwrap();
        assert_eq!(classes.len(), 22);
    }

    #[test]
    fn hypothesis_refusal() {
        let limits = SearchLimits::default();
        assert!(matches!(
            classify_pairs(&FiniteGroup::cyclic(12), 5, &limits),
            Err(Error::HypothesisNotVerified { .. })
        ));
    }
}
