//! Property suites over randomized inputs: isomorphism vs labels, quotient
//! laws, product degeneracies, table-validation robustness, serialization.

use proptest::prelude::*;

use brace_core::counting::{BraceCensus, CensusRow};
use brace_core::group::FiniteGroup;
use brace_core::holomorph::{holomorph, SearchLimits};
use brace_core::iso::{are_isomorphic, isomorphism, isomorphism_type_of_order12, Order12Type};
use brace_core::subgroup::{quotient_group, Subgroup};

fn group_pool() -> Vec<FiniteGroup> {
    let c2 = FiniteGroup::cyclic(2);
    vec![
        FiniteGroup::cyclic(1),
        FiniteGroup::cyclic(2),
        FiniteGroup::cyclic(3),
        FiniteGroup::cyclic(4),
        FiniteGroup::cyclic(6),
        FiniteGroup::cyclic(12),
        FiniteGroup::direct_product(&FiniteGroup::cyclic(6), &c2).unwrap(),
        FiniteGroup::klein(),
        FiniteGroup::dihedral(3),
        FiniteGroup::dihedral(6),
        FiniteGroup::alternating_4(),
        FiniteGroup::dicyclic_12(),
    ]
}

/// A random permutation of 0..n fixing 0, driven by swap indices.
fn relabel_perm(n: usize, seed: &[usize]) -> Vec<u32> {
    let mut perm: Vec<u32> = (0..n as u32).collect();
    for (k, &s) in seed.iter().enumerate() {
        let i = 1 + k % (n - 1);
        let j = 1 + s % (n - 1);
        perm.swap(i, j);
    }
    perm
}

proptest! {
    /// are_isomorphic agrees with label equality on the five order-12
    /// types, under arbitrary relabelings of one side.
    #[test]
    fn iso_agrees_with_order12_labels(
        i in 0usize..5,
        j in 0usize..5,
        seed in prop::collection::vec(0usize..1000, 0..12),
    ) {
        let a = Order12Type::ALL[i].sample();
        let b = Order12Type::ALL[j].sample();
        let b = b.relabel(&relabel_perm(12, &seed)).unwrap();
        prop_assert_eq!(are_isomorphic(&a, &b), i == j);
        prop_assert_eq!(isomorphism_type_of_order12(&b).unwrap(), Order12Type::ALL[j]);
    }

    /// Quotient law: |G/H|·|H| = |G| and the projection is a verified
    /// morphism, for every normal subgroup generated from random elements.
    #[test]
    fn quotient_order_law(
        which in 0usize..12,
        gens in prop::collection::vec(0usize..12, 0..3),
    ) {
        let g = group_pool()[which].clone();
        let gens: Vec<usize> = gens.into_iter().map(|x| x % g.order()).collect();
        let h = Subgroup::generated(&g, &gens);
        if h.is_normal() {
            let (q, projection) = quotient_group(&g, &h).unwrap();
            prop_assert_eq!(q.order() * h.order(), g.order());
            prop_assert_eq!(projection.apply(0), 0);
        } else {
            prop_assert!(quotient_group(&g, &h).is_err());
        }
    }

    /// A semidirect product along the trivial action is the direct product
    /// (same table), and an isomorphism witness exists.
    #[test]
    fn trivial_action_degenerates_to_direct(a in 0usize..12, b in 0usize..12) {
        let pool = group_pool();
        let (ga, gb) = (&pool[a], &pool[b]);
        if ga.order() * gb.order() <= 144 {
            let direct = FiniteGroup::direct_product(ga, gb).unwrap();
            let semi = FiniteGroup::semidirect_by_action(ga, gb, |_, x| x, "semi").unwrap();
            prop_assert_eq!(&semi, &direct);
            prop_assert!(isomorphism(&semi, &direct).is_some());
        }
    }

    /// Tampering a single Cayley-table cell always produces a rejected
    /// table: either a row/column stops being a permutation or the
    /// identity/associativity laws break.
    #[test]
    fn single_cell_tamper_rejected(n in 2usize..20, cell in 0usize..400, delta in 1usize..19) {
        let g = FiniteGroup::cyclic(n);
        let mut table: Vec<u32> = (0..n * n).map(|k| g.mul(k / n, k % n) as u32).collect();
        let cell = cell % (n * n);
        let delta = 1 + delta % (n - 1); // nonzero mod n, so the cell really changes
        table[cell] = ((table[cell] as usize + delta) % n) as u32;
        prop_assert!(FiniteGroup::from_table("tampered", n, table).is_err());
    }

    /// Element orders divide the group order.
    #[test]
    fn element_order_divides(which in 0usize..12, x in 0usize..12) {
        let g = group_pool()[which].clone();
        let x = x % g.order();
        prop_assert_eq!(g.order() % g.element_order(x), 0);
    }

    /// Census values survive a JSON round-trip.
    #[test]
    fn census_json_roundtrip(
        n in 1usize..100,
        p in 1usize..100,
        counts in prop::collection::vec((0usize..3, 0usize..5, 0usize..40), 0..12),
    ) {
        let additive = ["C12", "C6xC2", "C36"];
        let multiplicative = ["C12", "C6xC2", "A4", "D12", "Dic12"];
        let rows: Vec<CensusRow> = counts
            .into_iter()
            .map(|(a, m, count)| CensusRow {
                additive: additive[a].to_string(),
                multiplicative: multiplicative[m].to_string(),
                count,
            })
            .collect();
        let total = rows.iter().map(|r| r.count).sum();
        let census = BraceCensus { n, p, rows, total };
        let json = serde_json::to_string(&census).unwrap();
        let back: BraceCensus = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, census);
    }

    /// Conjugation by any ν ∈ Aut(N) permutes the regular subgroups.
    #[test]
    fn conjugation_permutes_regulars(nu in 0usize..4, which in 0usize..6) {
        let hol = holomorph(&FiniteGroup::cyclic(12)).unwrap();
        let alphas = hol.regular_alpha_maps(&SearchLimits::default()).unwrap();
        let alpha = &alphas[which % alphas.len()];
        let image = hol.conjugate_alpha(alpha, nu % hol.auts().order());
        prop_assert!(alphas.contains(&image));
        let as_subgroup = hol.subgroup_from_alpha(&image).unwrap();
        prop_assert!(hol.is_regular(&as_subgroup));
    }
}
