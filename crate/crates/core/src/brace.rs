//! Left braces as two compatible group tables on one carrier, conversion
//! to and from regular subgroups of the holomorph, products, isomorphism
//! and the size-np decomposition.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::aut::{automorphism_group, AutomorphismGroup};
use crate::counting::check_hypothesis;
use crate::error::Error;
use crate::group::FiniteGroup;
use crate::holomorph::HolomorphGroup;
use crate::iso::{fingerprint, isomorphism};
use crate::morphism::GroupMap;
use crate::subgroup::Subgroup;
use crate::tau::TauMorphism;
use crate::Result;

/// Below this order the brace relation is verified on all |B|³ triples;
/// beyond it a seeded random sample of triples is checked instead.
const EXHAUSTIVE_RELATION_BOUND: usize = 200;
const SAMPLED_TRIPLES: usize = 100_000;

/// A left brace: one carrier 0..order with an abelian additive table and a
/// multiplicative table sharing the neutral element 0, satisfying
/// a·(b + c) = a·b − a + a·c for all triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftBrace {
    add: FiniteGroup,
    mul: FiniteGroup,
}

impl LeftBrace {
    /// Validates the compatibility of the two tables (abelian addition and
    /// the brace relation) before wrapping them.
    pub fn new(add: FiniteGroup, mul: FiniteGroup) -> Result<LeftBrace> {
        if add.order() != mul.order() {
            return Err(Error::Mismatch(format!(
                "additive order {} != multiplicative order {}",
                add.order(),
                mul.order()
            )));
        }
        if !add.is_abelian() {
            return Err(Error::NotAbelian { order: add.order() });
        }
        let brace = LeftBrace { add, mul };
        brace.check_relation()?;
        Ok(brace)
    }

    fn check_relation(&self) -> Result<()> {
        let n = self.order();
        let check = |a: usize, b: usize, c: usize| -> Result<()> {
            let lhs = self.mul.mul(a, self.add.mul(b, c));
            let rhs = self.add.mul(
                self.add.mul(self.mul.mul(a, b), self.add.inv(a)),
                self.mul.mul(a, c),
            );
            if lhs != rhs {
                return Err(Error::BraceRelation { a, b, c });
            }
            Ok(())
        };
        if n <= EXHAUSTIVE_RELATION_BOUND {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(0xB12A_CE00);
            for _ in 0..SAMPLED_TRIPLES {
                check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        Ok(())
    }

    /// The trivial brace: addition and multiplication coincide on Z_n.
    pub fn trivial(n: usize) -> LeftBrace {
        let c = FiniteGroup::cyclic(n);
        LeftBrace {
            add: c.clone(),
            mul: c,
        }
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    /// The additive group (B, +).
    pub fn add(&self) -> &FiniteGroup {
        &self.add
    }

    /// The multiplicative group (B, ·).
    pub fn mul(&self) -> &FiniteGroup {
        &self.mul
    }

    /// The λ-map of the brace at x: y ↦ −x + x·y, always an automorphism of
    /// the additive group.
    pub fn lambda_perm(&self, x: usize) -> Vec<u32> {
        (0..self.order())
            .map(|y| self.add.mul(self.add.inv(x), self.mul.mul(x, y)) as u32)
            .collect()
    }

    /// Reconstructs the regular subgroup {(x, λ_x)} of Hol(B, +) realizing
    /// this brace. `hol` must be the holomorph of the additive group.
    pub fn to_regular(&self, hol: &HolomorphGroup) -> Result<Subgroup> {
        if hol.base() != &self.add {
            return Err(Error::Mismatch(
                "holomorph base is not the additive group of the brace".into(),
            ));
        }
        let alpha: Vec<u32> = (0..self.order())
            .map(|x| {
                let perm = self.lambda_perm(x);
                hol.auts()
                    .index_of_perm(&perm)
                    .map(|k| k as u32)
                    .ok_or_else(|| {
                        Error::Mismatch("λ-map value is not an automorphism index".into())
                    })
            })
            .collect::<Result<_>>()?;
        hol.subgroup_from_alpha(&alpha)
    }
}

/// The brace attached to a regular subgroup R of Hol(N): addition is N,
/// multiplication is x·y = x + α_x(y) where (x, α_x) ∈ R.
pub fn brace_from_regular(hol: &HolomorphGroup, regular: &Subgroup) -> Result<LeftBrace> {
    let alpha = hol.alpha_of_subgroup(regular)?;
    brace_from_alpha(hol, &alpha)
}

/// Same as [`brace_from_regular`], from the α-vector directly (no holomorph
/// table needed).
pub fn brace_from_alpha(hol: &HolomorphGroup, alpha: &[u32]) -> Result<LeftBrace> {
    let mul = hol.group_from_alpha(alpha, format!("{}-mul", hol.base().label()));
    LeftBrace::new(hol.base().clone(), mul)
}

/// Direct product of braces, componentwise on both operations.
pub fn direct_product_brace(b1: &LeftBrace, b2: &LeftBrace) -> Result<LeftBrace> {
    let add = FiniteGroup::direct_product(b1.add(), b2.add())?;
    let mul = FiniteGroup::direct_product(b1.mul(), b2.mul())?;
    LeftBrace::new(add, mul)
}

/// The automorphisms of a brace: permutations fixing 0 that are
/// simultaneously automorphisms of (B, +) and (B, ·), as a subgroup of
/// Aut(B, +).
pub fn brace_automorphisms(b: &LeftBrace) -> Result<AutomorphismGroup> {
    let add_auts = automorphism_group(b.add())?;
    let n = b.order();
    let brace_perms: Vec<Vec<u32>> = (0..add_auts.order())
        .filter(|&k| {
            let perm = add_auts.perm(k);
            (0..n).all(|x| {
                (0..n).all(|y| {
                    perm[b.mul().mul(x, y)] as usize
                        == b.mul().mul(perm[x] as usize, perm[y] as usize)
                })
            })
        })
        .map(|k| add_auts.perm(k).to_vec())
        .collect();
    AutomorphismGroup::from_perms(
        b.add().clone(),
        brace_perms,
        format!("BrAut({})", b.add().label()),
    )
}

/// Semidirect product of braces via τ: (B2, ·) → brace automorphisms of B1.
/// Addition is the direct product; multiplication is
/// (a, b)(a', b') = (a·τ_b(a'), b b').
///
/// `brace_auts` must be the brace automorphism group of `b1` (the codomain
/// of τ); images are re-checked to be brace automorphisms.
pub fn semidirect_product_brace(
    b1: &LeftBrace,
    b2: &LeftBrace,
    brace_auts: &AutomorphismGroup,
    tau: &GroupMap,
) -> Result<LeftBrace> {
    if tau.domain() != b2.mul() {
        return Err(Error::Mismatch(
            "τ must be defined on the multiplicative group of B2".into(),
        ));
    }
    if tau.codomain() != brace_auts.carrier() || brace_auts.parent() != b1.add() {
        return Err(Error::Mismatch(
            "τ must land in the brace automorphisms of B1".into(),
        ));
    }
    // Guard against a tampered carrier: every image must preserve both
    // operations of B1.
    let n1 = b1.order();
    for b in 0..b2.order() {
        let k = tau.apply(b);
        let perm = brace_auts.perm(k);
        for x in 0..n1 {
            for y in 0..n1 {
                let add_ok = perm[b1.add().mul(x, y)] as usize
                    == b1.add().mul(perm[x] as usize, perm[y] as usize);
                let mul_ok = perm[b1.mul().mul(x, y)] as usize
                    == b1.mul().mul(perm[x] as usize, perm[y] as usize);
                if !add_ok || !mul_ok {
                    return Err(Error::Mismatch(
                        "τ image is not a brace automorphism of B1".into(),
                    ));
                }
            }
        }
    }
    let add = FiniteGroup::direct_product(b1.add(), b2.add())?;
    let mul = FiniteGroup::semidirect_by_action(
        b1.mul(),
        b2.mul(),
        |b, x| brace_auts.apply(tau.apply(b), x),
        format!("{}:x{}", b1.mul().label(), b2.mul().label()),
    )?;
    LeftBrace::new(add, mul)
}

/// A brace morphism: additive and multiplicative homomorphism at once.
#[derive(Clone, Debug)]
pub struct BraceMap {
    map: GroupMap,
}

impl BraceMap {
    pub fn new(domain: &LeftBrace, codomain: &LeftBrace, images: Vec<u32>) -> Result<BraceMap> {
        let add_map = GroupMap::new(domain.add().clone(), codomain.add().clone(), images)?;
        // Re-validate against the multiplicative structures.
        for x in 0..domain.order() {
            for y in 0..domain.order() {
                let lhs = add_map.apply(domain.mul().mul(x, y));
                let rhs = codomain.mul().mul(add_map.apply(x), add_map.apply(y));
                if lhs != rhs {
                    return Err(Error::NotAHomomorphism { x, y });
                }
            }
        }
        Ok(BraceMap { map: add_map })
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map.apply(x)
    }

    pub fn images(&self) -> &[u32] {
        self.map.images()
    }

    pub fn is_bijective(&self) -> bool {
        self.map.is_bijective()
    }
}

/// Brace isomorphism witness: the additive structures are matched first
/// (abelian, cheap), then each additive isomorphism ψ0∘a is filtered for
/// multiplicative compatibility.
pub fn brace_isomorphism(b1: &LeftBrace, b2: &LeftBrace) -> Option<BraceMap> {
    if b1.order() != b2.order() {
        return None;
    }
    if fingerprint(b1.mul()) != fingerprint(b2.mul()) {
        return None;
    }
    let psi0 = isomorphism(b1.add(), b2.add())?;
    let add_auts = automorphism_group(b1.add()).ok()?;
    let n = b1.order();
    for k in 0..add_auts.order() {
        let perm = add_auts.perm(k);
        let candidate: Vec<u32> = (0..n).map(|x| psi0.apply(perm[x] as usize) as u32).collect();
        let multiplicative = (0..n).all(|x| {
            (0..n).all(|y| {
                candidate[b1.mul().mul(x, y)] as usize
                    == b2
                        .mul()
                        .mul(candidate[x] as usize, candidate[y] as usize)
            })
        });
        if multiplicative {
            let map = BraceMap::new(b1, b2, candidate).expect("checked on all pairs");
            return Some(map);
        }
    }
    None
}

pub fn braces_isomorphic(b1: &LeftBrace, b2: &LeftBrace) -> bool {
    brace_isomorphism(b1, b2).is_some()
}

/// Splits a brace of size np (p prime, p ∤ n, hypothesis (H)) into the
/// morphism τ and the complement brace B′ of size n, such that the
/// semidirect product of the trivial brace of size p and B′ via τ is
/// isomorphic to the input.
///
/// The additive p-torsion A_p and n-torsion A_n are multiplicatively closed
/// (λ-maps preserve torsion); A_p is the unique multiplicative Sylow-p
/// subgroup, so conjugation by A_n defines τ after identifying A_p ≅ Z_p by
/// its least nonzero element.
pub fn decompose_np_brace(b: &LeftBrace, p: usize) -> Result<(TauMorphism, LeftBrace)> {
    let order = b.order();
    if !crate::arith::is_prime(p) {
        return Err(Error::InvalidArgument(format!("p = {p} is not prime")));
    }
    if order % p != 0 || (order / p) % p == 0 {
        return Err(Error::InvalidArgument(format!(
            "order {order} is not n·p with p ∤ n for p = {p}"
        )));
    }
    let n = order / p;
    if !check_hypothesis(n, p) {
        return Err(Error::HypothesisNotVerified {
            n,
            p,
            reason: "normal subgroup of order p not certified".into(),
        });
    }

    let add_orders = b.add().element_orders();
    let p_part: Vec<u32> = (0..order)
        .filter(|&x| p % (add_orders[x] as usize) == 0)
        .map(|x| x as u32)
        .collect();
    let n_part: Vec<u32> = (0..order)
        .filter(|&x| n % (add_orders[x] as usize) == 0)
        .map(|x| x as u32)
        .collect();
    debug_assert_eq!(p_part.len(), p);
    debug_assert_eq!(n_part.len(), n);

    // Both torsion parts are multiplicative subgroups; Subgroup::new
    // re-checks closure.
    let sylow = Subgroup::new(b.mul().clone(), p_part.clone())?;
    let complement = Subgroup::new(b.mul().clone(), n_part.clone())?;
    if !sylow.is_normal() {
        return Err(Error::HypothesisNotVerified {
            n,
            p,
            reason: "multiplicative Sylow-p subgroup is not normal".into(),
        });
    }

    // On A_p the two operations coincide (the sub-brace of prime size is
    // trivial); the τ values are discrete logs of conjugation.
    for &x in &p_part {
        for &y in &p_part {
            debug_assert_eq!(
                b.mul().mul(x as usize, y as usize),
                b.add().mul(x as usize, y as usize)
            );
        }
    }

    let (add_prime, n_elems) = Subgroup::new(b.add().clone(), n_part.clone())?
        .as_group(format!("{}'", b.add().label()));
    let (mul_prime, n_elems_mul) = complement.as_group(format!("{}'", b.mul().label()));
    debug_assert_eq!(n_elems, n_elems_mul);
    let b_prime = LeftBrace::new(add_prime, mul_prime)?;

    let generator = p_part[1] as usize; // least nonzero p-torsion element
    let values: Vec<usize> = n_elems
        .iter()
        .map(|&f| {
            let conj = b.mul().conj(f as usize, generator);
            // k with conj = k·generator in (A_p, +).
            let mut acc = generator;
            let mut k = 1;
            while acc != conj {
                acc = b.add().mul(acc, generator);
                k += 1;
            }
            k
        })
        .collect();
    let tau = TauMorphism::new(b_prime.mul().clone(), p, values)?;
    Ok((tau, b_prime))
}

/// Rebuilds the semidirect product of the trivial brace of size p and B′
/// via τ; inverse of [`decompose_np_brace`] up to brace isomorphism.
pub fn recompose_np_brace(tau: &TauMorphism, b_prime: &LeftBrace) -> Result<LeftBrace> {
    if tau.group() != b_prime.mul() {
        return Err(Error::Mismatch(
            "τ is not defined on the multiplicative group of B′".into(),
        ));
    }
    let trivial_p = LeftBrace::trivial(tau.p());
    let bauts = brace_automorphisms(&trivial_p)?;
    let action = tau.unit_action_map(&bauts)?;
    semidirect_product_brace(&trivial_p, b_prime, &bauts, &action)
}

/// Serialization shape: {order, add-table, mul-table} with tables as nested
/// rows.
impl Serialize for LeftBrace {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let n = self.order();
        let rows = |g: &FiniteGroup| -> Vec<Vec<u32>> {
            (0..n)
                .map(|i| (0..n).map(|j| g.mul(i, j) as u32).collect())
                .collect()
        };
        let mut s = serializer.serialize_struct("LeftBrace", 3)?;
        s.serialize_field("order", &n)?;
        s.serialize_field("add", &rows(&self.add))?;
        s.serialize_field("mul", &rows(&self.mul))?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::holomorph::{holomorph, SearchLimits};
    use crate::iso::{isomorphism_type_of_order12, Order12Type};

    #[test]
    fn trivial_braces() {
        let b = LeftBrace::trivial(7);
        assert_eq!(b.order(), 7);
        assert_eq!(b.add(), b.mul());
        assert_eq!(LeftBrace::trivial(1).order(), 1);
    }

    #[test]
    fn rejects_incompatible_tables() {
        // D12 as additive group is rejected outright.
        let d12 = FiniteGroup::dihedral(6);
        assert!(matches!(
            LeftBrace::new(d12.clone(), d12),
            Err(Error::NotAbelian { .. })
        ));

        // Elementary abelian addition with C8 multiplication: Hol(C2³) has
        // no elements of order 8, so no pair of tables of these types can
        // satisfy the brace relation.
        let c2 = FiniteGroup::cyclic(2);
        let e8 = FiniteGroup::direct_product(
            &FiniteGroup::direct_product(&c2, &c2).unwrap(),
            &c2,
        )
        .unwrap();
        assert!(matches!(
            LeftBrace::new(e8, FiniteGroup::cyclic(8)),
            Err(Error::BraceRelation { .. })
        ));

        // C4 addition with the Klein XOR table, by contrast, is a genuine
        // left brace (the unique nontrivial brace of size 4 with cyclic
        // additive group).
        let c4 = FiniteGroup::cyclic(4);
        let v4 = FiniteGroup::klein();
        assert!(LeftBrace::new(c4, v4).is_ok());
    }

    #[test]
    fn translations_give_trivial_brace() {
        let hol = holomorph(&FiniteGroup::cyclic(12)).unwrap();
        let b = brace_from_regular(&hol, &hol.translations()).unwrap();
        assert_eq!(b.add(), b.mul());
        assert!(braces_isomorphic(&b, &LeftBrace::trivial(12)));
    }

    #[test]
    fn braces_of_size_12_from_hol_c12() {
        let hol = holomorph(&FiniteGroup::cyclic(12)).unwrap();
        let classes = hol.classify_alpha_maps(&SearchLimits::default()).unwrap();
        assert_eq!(classes.len(), 5);
        for class in &classes {
            let b = brace_from_alpha(&hol, &class.rep_alpha).unwrap();
            // Round-trip through the regular subgroup is the identity.
            let back = b.to_regular(&hol).unwrap();
            let alpha = hol.alpha_of_subgroup(&back).unwrap();
            assert_eq!(alpha, class.rep_alpha);
        }
    }

    #[test]
    fn conjugate_regulars_give_isomorphic_braces() {
        let hol = holomorph(&Order12Type::C6xC2.sample()).unwrap();
        let regs = hol.regular_subgroups(&SearchLimits::default()).unwrap();
        let s = &regs[3];
        for nu in 0..hol.auts().order() {
            let conj = hol.inner_conjugate(nu, s);
            let b1 = brace_from_regular(&hol, s).unwrap();
            let b2 = brace_from_regular(&hol, &conj).unwrap();
            assert!(braces_isomorphic(&b1, &b2));
        }
    }

    #[test]
    fn non_isomorphic_braces_detected() {
        let hol = holomorph(&FiniteGroup::cyclic(12)).unwrap();
        let classes = hol.classify_alpha_maps(&SearchLimits::default()).unwrap();
        let braces: Vec<LeftBrace> = classes
            .iter()
            .map(|c| brace_from_alpha(&hol, &c.rep_alpha).unwrap())
            .collect();
        for (i, a) in braces.iter().enumerate() {
            for (j, b) in braces.iter().enumerate() {
                assert_eq!(braces_isomorphic(a, b), i == j);
            }
        }
    }

    #[test]
    fn direct_product_of_braces() {
        let b12 = LeftBrace::trivial(12);
        let b1 = LeftBrace::trivial(1);
        let prod = direct_product_brace(&b12, &b1).unwrap();
        assert!(braces_isomorphic(&prod, &b12));

        let b7 = LeftBrace::trivial(7);
        let prod = direct_product_brace(&b7, &b12).unwrap();
        assert_eq!(prod.order(), 84);
        assert!(braces_isomorphic(&prod, &LeftBrace::trivial(84)));
    }

    #[test]
    fn brace_automorphisms_of_trivial_p() {
        let b = LeftBrace::trivial(7);
        let auts = brace_automorphisms(&b).unwrap();
        assert_eq!(auts.order(), 6); // Aut(Z_7) = Z_7^*
    }

    #[test]
    fn nontrivial_brace_has_fewer_automorphisms() {
        // A brace whose multiplicative group is nonabelian: automorphisms
        // must preserve both tables.
        let hol = holomorph(&FiniteGroup::cyclic(12)).unwrap();
        let classes = hol.classify_alpha_maps(&SearchLimits::default()).unwrap();
        let nonabelian = classes
            .iter()
            .map(|c| brace_from_alpha(&hol, &c.rep_alpha).unwrap())
            .find(|b| !b.mul().is_abelian())
            .unwrap();
        let bauts = brace_automorphisms(&nonabelian).unwrap();
        let add_auts = automorphism_group(nonabelian.add()).unwrap();
        assert!(bauts.order() <= add_auts.order());
    }

    #[test]
    fn decompose_recompose_trivial_84() {
        let b = LeftBrace::trivial(84);
        let (tau, b_prime) = decompose_np_brace(&b, 7).unwrap();
        assert_eq!(b_prime.order(), 12);
        assert!(tau.is_trivial());
        assert!(braces_isomorphic(&b_prime, &LeftBrace::trivial(12)));
        let back = recompose_np_brace(&tau, &b_prime).unwrap();
        assert!(braces_isomorphic(&back, &b));
    }

    #[test]
    fn decompose_nontrivial_84() {
        // Build a brace of size 84 with multiplicative group Z7 ⋊ C12 via a
        // τ of kernel order 6, decompose it, and check the pieces.
        let c12 = FiniteGroup::cyclic(12);
        let tau = TauMorphism::new(
            c12.clone(),
            7,
            (0..12).map(|x| if x % 2 == 0 { 1 } else { 6 }).collect(),
        )
        .unwrap();
        let b12 = LeftBrace::trivial(12);
        let recomposed = recompose_np_brace(&tau, &b12).unwrap();
        assert_eq!(recomposed.order(), 84);
        assert!(!recomposed.mul().is_abelian());

        let (tau_back, b_prime) = decompose_np_brace(&recomposed, 7).unwrap();
        assert_eq!(b_prime.order(), 12);
        assert_eq!(
            isomorphism_type_of_order12(b_prime.mul()).unwrap(),
            Order12Type::C12
        );
        assert_eq!(tau_back.kernel_size(), 6);
        let again = recompose_np_brace(&tau_back, &b_prime).unwrap();
        assert!(braces_isomorphic(&again, &recomposed));
    }

    #[test]
    fn serializes_as_order_and_tables() {
        let b = LeftBrace::trivial(3);
        let value = serde_json::to_value(&b).unwrap();
        assert_eq!(value["order"], 3);
        assert_eq!(value["add"][1][2], 0);
        assert_eq!(value["mul"], value["add"]);
    }

    #[test]
    fn decompose_requires_hypothesis() {
        let b = LeftBrace::trivial(60);
        // 60 = 12·5 and (12, 5) fails (H).
        assert!(matches!(
            decompose_np_brace(&b, 5),
            Err(Error::HypothesisNotVerified { .. })
        ));
    }
}
