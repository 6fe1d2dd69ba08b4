//! Immutable finite groups given by their full Cayley table.
//!
//! Elements are dense indices `0..order`, with the identity always at index
//! 0. Every constructor validates the table invariants: identity law, Latin
//! square (hence inverses) and associativity. Associativity is checked with
//! Light's test over a generating set, which proves it for all triples at
//! cost O(|gens|·n²) instead of O(n³), and is skipped above
//! [`ASSOCIATIVITY_BOUND`] where constructors are trusted primitives.
//!
//! Product groups pair elements row-major: the element `(a, b)` of `A × B`
//! (or `A ⋊ B`) has index `a·|B| + b`. Tests and callers may rely on this.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::arith;
use crate::error::Error;
use crate::Result;

/// Orders up to this bound get an exhaustive associativity proof on
/// construction (via Light's test); larger tables are trusted primitives.
pub const ASSOCIATIVITY_BOUND: usize = 5000;

/// Hard cap on table order so indices fit comfortably and allocations stay
/// within reason. Everything in scope is far below this.
pub const MAX_ORDER: usize = 65_536;

struct GroupData {
    order: usize,
    /// Row-major: `table[i * order + j]` = index of the product i·j.
    table: Vec<u32>,
    inverses: Vec<u32>,
    label: String,
    element_orders: OnceLock<Vec<u32>>,
    conj_classes: OnceLock<ConjClasses>,
    center: OnceLock<Vec<u32>>,
}

struct ConjClasses {
    /// Class id per element; class 0 is {identity}.
    class_of: Vec<u32>,
    /// Elements per class, each sorted.
    members: Vec<Vec<u32>>,
}

/// A finite group as an immutable shared Cayley table.
///
/// Cloning is cheap (reference-counted); the table itself is never mutated
/// after construction, so values can be shared freely across threads.
#[derive(Clone)]
pub struct FiniteGroup(Arc<GroupData>);

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.label(), self.order())
    }
}

impl PartialEq for FiniteGroup {
    /// Structural equality of tables (labels ignored); same-allocation
    /// groups compare equal without touching the tables.
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.order() == other.order() && self.0.table == other.0.table)
    }
}
impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Builds a group from an explicit table, validating all invariants.
    ///
    /// `table[i][j]` is flattened row-major. The identity must sit at index
    /// 0; tables that are not Latin squares or (for orders within
    /// [`ASSOCIATIVITY_BOUND`]) not associative are rejected.
    pub fn from_table(label: impl Into<String>, order: usize, table: Vec<u32>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidTable("order must be positive".into()));
        }
        if order > MAX_ORDER {
            return Err(Error::ResourceBound {
                what: "group order",
                needed: order,
                bound: MAX_ORDER,
            });
        }
        if table.len() != order * order {
            return Err(Error::InvalidTable(format!(
                "table length {} does not match order {}",
                table.len(),
                order
            )));
        }
        let at = |i: usize, j: usize| table[i * order + j] as usize;

        // Identity law at index 0.
        for j in 0..order {
            if at(0, j) != j || at(j, 0) != j {
                return Err(Error::InvalidTable(format!(
                    "identity law fails at index {j} (identity must be element 0)"
                )));
            }
        }

        // Latin square: every row and column is a permutation.
        let mut seen = vec![false; order];
        for i in 0..order {
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..order {
                let v = at(i, j);
                if v >= order || seen[v] {
                    return Err(Error::InvalidTable(format!("row {i} is not a permutation")));
                }
                seen[v] = true;
            }
        }
        for j in 0..order {
            seen.iter_mut().for_each(|s| *s = false);
            for i in 0..order {
                let v = at(i, j);
                if seen[v] {
                    return Err(Error::InvalidTable(format!(
                        "column {j} is not a permutation"
                    )));
                }
                seen[v] = true;
            }
        }

        if order <= ASSOCIATIVITY_BOUND {
            check_associativity(order, &table)?;
        }

        // Two-sided inverses exist in any associative Latin square with
        // identity; record them.
        let mut inverses = vec![0u32; order];
        for i in 0..order {
            let j = (0..order).find(|&j| at(i, j) == 0).expect("latin row");
            inverses[i] = j as u32;
        }

        Ok(FiniteGroup(Arc::new(GroupData {
            order,
            table,
            inverses,
            label: label.into(),
            element_orders: OnceLock::new(),
            conj_classes: OnceLock::new(),
            center: OnceLock::new(),
        })))
    }

    /// Cyclic group of order `n` with i·j = (i+j) mod n; label `C{n}`.
    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n >= 1, "cyclic order must be positive");
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = ((i + j) % n) as u32;
            }
        }
        FiniteGroup::from_table(format!("C{n}"), n, table).expect("cyclic table is a group")
    }

    /// Trivial group, labelled `C1`.
    pub fn trivial() -> FiniteGroup {
        FiniteGroup::cyclic(1)
    }

    /// Direct product `A × B`, with element `(a, b)` at index `a·|B| + b`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
        let label = format!("{}x{}", a.label(), b.label());
        semidirect_by_action(a, b, |_, x| x, label)
    }

    /// Semidirect product `A ⋊ B` for an explicit action of `B` on `A` by
    /// permutations: `(a, b)(a', b') = (a · act(b)(a'), b b')`.
    ///
    /// `action(b, x)` must be a homomorphism `B → Aut(A)`; within the
    /// associativity bound this is re-proved on the assembled table, so a
    /// bogus action is rejected rather than silently accepted.
    pub fn semidirect_by_action(
        a: &FiniteGroup,
        b: &FiniteGroup,
        action: impl Fn(usize, usize) -> usize,
        label: impl Into<String>,
    ) -> Result<FiniteGroup> {
        semidirect_by_action(a, b, action, label.into())
    }

    /// Semidirect product `A ⋊ B` along a verified morphism from `B` into
    /// the automorphism group of `A`.
    pub fn semidirect_product(
        a: &FiniteGroup,
        auts_a: &crate::aut::AutomorphismGroup,
        b: &FiniteGroup,
        act: &crate::morphism::GroupMap,
    ) -> Result<FiniteGroup> {
        if auts_a.parent() != a {
            return Err(Error::Mismatch(
                "automorphism group is over a different group".into(),
            ));
        }
        if act.domain() != b || act.codomain() != auts_a.carrier() {
            return Err(Error::Mismatch(
                "action must map B into the automorphism carrier of A".into(),
            ));
        }
        semidirect_by_action(
            a,
            b,
            |bb, x| auts_a.apply(act.apply(bb), x),
            format!("{}:{}", a.label(), b.label()),
        )
    }

    /// Dihedral group of order `2m` (cyclic rotations ⋊ inversion); label
    /// `D{2m}`.
    pub fn dihedral(m: usize) -> FiniteGroup {
        assert!(m >= 1);
        let rot = FiniteGroup::cyclic(m);
        let flip = FiniteGroup::cyclic(2);
        semidirect_by_action(
            &rot,
            &flip,
            |b, x| if b == 1 && x != 0 { m - x } else { x },
            format!("D{}", 2 * m),
        )
        .expect("dihedral action is valid")
    }

    /// Klein four-group `C2 × C2`.
    pub fn klein() -> FiniteGroup {
        let c2 = FiniteGroup::cyclic(2);
        FiniteGroup::direct_product(&c2, &c2).expect("small product")
    }

    /// Alternating group A4 as V4 ⋊ C3 (the 3-cycle permutes the three
    /// involutions of the Klein group).
    pub fn alternating_4() -> FiniteGroup {
        let v4 = FiniteGroup::klein();
        let c3 = FiniteGroup::cyclic(3);
        // V4 elements: 0 = id, involutions 1, 2, 3; the generator of C3
        // cycles 1 → 2 → 3 → 1.
        let cycle = [
            [0usize, 1, 2, 3], // id
            [0, 2, 3, 1],
            [0, 3, 1, 2],
        ];
        semidirect_by_action(&v4, &c3, |b, x| cycle[b][x], "A4".to_string())
            .expect("A4 action is valid")
    }

    /// Dicyclic group of order 12, C3 ⋊ C4 with the C4 generator inverting
    /// C3; its square acts trivially.
    pub fn dicyclic_12() -> FiniteGroup {
        let c3 = FiniteGroup::cyclic(3);
        let c4 = FiniteGroup::cyclic(4);
        semidirect_by_action(
            &c3,
            &c4,
            |b, x| if b % 2 == 1 && x != 0 { 3 - x } else { x },
            "Dic12".to_string(),
        )
        .expect("Dic12 action is valid")
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    /// Same table, different display label.
    pub fn with_label(&self, label: impl Into<String>) -> FiniteGroup {
        let d = &self.0;
        FiniteGroup(Arc::new(GroupData {
            order: d.order,
            table: d.table.clone(),
            inverses: d.inverses.clone(),
            label: label.into(),
            element_orders: OnceLock::new(),
            conj_classes: OnceLock::new(),
            center: OnceLock::new(),
        }))
    }

    /// Identity element index (always 0).
    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    /// Product of two element indices.
    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.0.table[i * self.0.order + j] as usize
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.0.inverses[i] as usize
    }

    /// `x^k` for k ≥ 0.
    pub fn power(&self, x: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    /// Conjugate `g x g⁻¹`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// Commutator `x y x⁻¹ y⁻¹`.
    #[inline]
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(x, y), self.mul(self.inv(x), self.inv(y)))
    }

    /// Multiplicative order of an element; divides the group order.
    pub fn element_order(&self, x: usize) -> usize {
        self.element_orders()[x] as usize
    }

    /// Orders of all elements, cached.
    pub fn element_orders(&self) -> &[u32] {
        self.0.element_orders.get_or_init(|| {
            let n = self.order();
            let mut orders = vec![0u32; n];
            for x in 0..n {
                let mut acc = x;
                let mut k = 1u32;
                while acc != 0 {
                    acc = self.mul(acc, x);
                    k += 1;
                }
                orders[x] = k;
            }
            orders
        })
    }

    /// Multiset of element orders as sorted (order, count) pairs.
    pub fn order_census(&self) -> Vec<(usize, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for &o in self.element_orders() {
            *counts.entry(o as usize).or_insert(0usize) += 1;
        }
        counts.into_iter().collect()
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> usize {
        self.element_orders()
            .iter()
            .fold(1usize, |acc, &o| arith::lcm(acc, o as usize))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        for i in 1..n {
            for j in (i + 1)..n {
                if self.mul(i, j) != self.mul(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Elements commuting with everything, sorted.
    pub fn center(&self) -> &[u32] {
        self.0.center.get_or_init(|| {
            let n = self.order();
            (0..n)
                .filter(|&z| (0..n).all(|g| self.mul(z, g) == self.mul(g, z)))
                .map(|z| z as u32)
                .collect()
        })
    }

    fn conj_data(&self) -> &ConjClasses {
        self.0.conj_classes.get_or_init(|| {
            let n = self.order();
            let mut class_of = vec![u32::MAX; n];
            let mut members: Vec<Vec<u32>> = Vec::new();
            for x in 0..n {
                if class_of[x] != u32::MAX {
                    continue;
                }
                let id = members.len() as u32;
                let mut orbit = vec![x as u32];
                class_of[x] = id;
                let mut head = 0;
                while head < orbit.len() {
                    let y = orbit[head] as usize;
                    head += 1;
                    for g in 0..n {
                        let z = self.conj(g, y);
                        if class_of[z] == u32::MAX {
                            class_of[z] = id;
                            orbit.push(z as u32);
                        }
                    }
                }
                orbit.sort_unstable();
                members.push(orbit);
            }
            ConjClasses { class_of, members }
        })
    }

    /// Conjugacy class id of an element.
    pub fn conjugacy_class_of(&self, x: usize) -> usize {
        self.conj_data().class_of[x] as usize
    }

    /// Size of the conjugacy class containing `x`.
    pub fn conjugacy_class_size(&self, x: usize) -> usize {
        let d = self.conj_data();
        d.members[d.class_of[x] as usize].len()
    }

    /// Conjugacy classes as sorted element lists, in order of least member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<u32>> {
        let mut classes = self.conj_data().members.clone();
        classes.sort_by_key(|c| c[0]);
        classes
    }

    /// Sorted multiset of conjugacy class sizes.
    pub fn class_size_census(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.conj_data().members.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        sizes
    }

    /// Elements of the commutator subgroup [G, G], sorted.
    pub fn commutator_subgroup_elements(&self) -> Vec<u32> {
        let n = self.order();
        let mut in_set = vec![false; n];
        in_set[0] = true;
        let mut elems = vec![0u32];
        for x in 0..n {
            for y in 0..n {
                let c = self.commutator(x, y);
                if !in_set[c] {
                    in_set[c] = true;
                    elems.push(c as u32);
                }
            }
        }
        // Close the generated set under products.
        let mut head = 0;
        while head < elems.len() {
            let a = elems[head] as usize;
            head += 1;
            for idx in 0..elems.len() {
                let b = elems[idx] as usize;
                for z in [self.mul(a, b), self.mul(b, a)] {
                    if !in_set[z] {
                        in_set[z] = true;
                        elems.push(z as u32);
                    }
                }
            }
        }
        elems.sort_unstable();
        elems
    }

    /// Invariant factors (descending divisibility chain) of an abelian
    /// group, recovered from element-order counts prime by prime.
    pub fn abelian_invariants(&self) -> Result<Vec<usize>> {
        if !self.is_abelian() {
            return Err(Error::NotAbelian { order: self.order() });
        }
        Ok(abelian_invariants_unchecked(self))
    }

    /// Relabels elements by the permutation `perm` (which must fix 0),
    /// producing an isomorphic group: new table t'(π(i), π(j)) = π(t(i, j)).
    pub fn relabel(&self, perm: &[u32]) -> Result<FiniteGroup> {
        let n = self.order();
        if perm.len() != n || perm[0] != 0 {
            return Err(Error::InvalidArgument(
                "relabel permutation must cover all elements and fix 0".into(),
            ));
        }
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                table[perm[i] as usize * n + perm[j] as usize] = perm[self.mul(i, j)];
            }
        }
        FiniteGroup::from_table(format!("{}~", self.label()), n, table)
    }
}

/// All abelian groups of order `n`, one per isomorphism type, in a
/// deterministic order with the cyclic group first. Labels are in invariant
/// factor form (`C12`, `C6xC2`, ...).
pub fn abelian_groups_of_order(n: usize) -> Vec<FiniteGroup> {
    assert!(n >= 1);
    if n == 1 {
        return vec![FiniteGroup::trivial()];
    }
    let factored = arith::factorize(n);
    // One partition choice per prime; combine into invariant factors.
    let partition_sets: Vec<Vec<Vec<u32>>> = factored
        .iter()
        .map(|&(_, e)| arith::partitions(e))
        .collect();
    let mut combos: Vec<Vec<usize>> = vec![Vec::new()];
    for set in &partition_sets {
        let mut next = Vec::new();
        for combo in &combos {
            for (idx, _) in set.iter().enumerate() {
                let mut c = combo.clone();
                c.push(idx);
                next.push(c);
            }
        }
        combos = next;
    }
    combos
        .into_iter()
        .map(|combo| {
            let width = combo
                .iter()
                .zip(&partition_sets)
                .map(|(&idx, set)| set[idx].len())
                .max()
                .unwrap();
            let mut factors = vec![1usize; width];
            for ((&idx, set), &(p, _)) in combo.iter().zip(&partition_sets).zip(&factored) {
                for (slot, &exp) in set[idx].iter().enumerate() {
                    factors[slot] *= p.pow(exp);
                }
            }
            let mut group = FiniteGroup::cyclic(factors[0]);
            for &f in &factors[1..] {
                group = FiniteGroup::direct_product(&group, &FiniteGroup::cyclic(f))
                    .expect("product of abelian groups");
            }
            group
        })
        .collect()
}

/// Canonical label for the abelian group with the given invariant factors.
pub fn abelian_label(invariants: &[usize]) -> String {
    invariants
        .iter()
        .map(|f| format!("C{f}"))
        .collect::<Vec<_>>()
        .join("x")
}

fn abelian_invariants_unchecked(g: &FiniteGroup) -> Vec<usize> {
    let n = g.order();
    if n == 1 {
        return vec![];
    }
    let orders = g.element_orders();
    let mut primary: Vec<Vec<u32>> = Vec::new(); // partition per prime
    let factored = arith::factorize(n);
    for &(q, e) in &factored {
        // c_k = #elements of order dividing q^k; the differences of
        // log_q(c_k) give the conjugate partition of the Sylow-q type.
        let mut heights = Vec::new();
        let mut prev_log = 0u32;
        for k in 1..=e {
            let qk = q.pow(k);
            let c = orders
                .iter()
                .filter(|&&o| qk % (o as usize) == 0)
                .count();
            let log = {
                let mut l = 0u32;
                let mut c = c;
                while c > 1 {
                    c /= q;
                    l += 1;
                }
                l
            };
            heights.push(log - prev_log);
            prev_log = log;
        }
        // `heights[k-1]` = number of partition parts ≥ k: conjugate back.
        let mut partition = Vec::new();
        for part_idx in 0..heights[0] {
            let lambda = heights.iter().take_while(|&&h| h > part_idx).count() as u32;
            partition.push(lambda);
        }
        primary.push(partition);
    }
    let width = primary.iter().map(|p| p.len()).max().unwrap_or(0);
    let mut invariants = vec![1usize; width];
    for (partition, &(q, _)) in primary.iter().zip(&factored) {
        for (slot, &exp) in partition.iter().enumerate() {
            invariants[slot] *= q.pow(exp);
        }
    }
    invariants
}

fn semidirect_by_action(
    a: &FiniteGroup,
    b: &FiniteGroup,
    action: impl Fn(usize, usize) -> usize,
    label: String,
) -> Result<FiniteGroup> {
    let (na, nb) = (a.order(), b.order());
    let n = na
        .checked_mul(nb)
        .filter(|&n| n <= MAX_ORDER)
        .ok_or(Error::ResourceBound {
            what: "product order",
            needed: na.saturating_mul(nb),
            bound: MAX_ORDER,
        })?;
    let mut table = vec![0u32; n * n];
    for a1 in 0..na {
        for b1 in 0..nb {
            let row = (a1 * nb + b1) * n;
            for a2 in 0..na {
                let acted = a.mul(a1, action(b1, a2));
                for b2 in 0..nb {
                    table[row + a2 * nb + b2] = (acted * nb + b.mul(b1, b2)) as u32;
                }
            }
        }
    }
    FiniteGroup::from_table(label, n, table)
}

/// Light's associativity test: with S a generating set of the magma, the
/// operation is associative iff (x·g)·y = x·(g·y) for all g ∈ S and all
/// x, y. The set of elements satisfying that identity is closed under the
/// product, so covering a generating set covers everything.
fn check_associativity(order: usize, table: &[u32]) -> Result<()> {
    let at = |i: usize, j: usize| table[i * order + j] as usize;
    let gens = magma_generators(order, table);
    for &g in &gens {
        for x in 0..order {
            let xg = at(x, g);
            for y in 0..order {
                if at(xg, y) != at(x, at(g, y)) {
                    return Err(Error::InvalidTable(format!(
                        "associativity fails: ({x}·{g})·{y} != {x}·({g}·{y})"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Greedy small generating set of the magma: repeatedly adjoin the smallest
/// element outside the closure of the current set (plus the identity).
fn magma_generators(order: usize, table: &[u32]) -> Vec<usize> {
    let at = |i: usize, j: usize| table[i * order + j] as usize;
    let mut in_closure = vec![false; order];
    in_closure[0] = true;
    let mut closure = vec![0usize];
    let mut gens = Vec::new();
    while closure.len() < order {
        let g = (0..order).find(|&x| !in_closure[x]).unwrap();
        gens.push(g);
        in_closure[g] = true;
        closure.push(g);
        let mut head = 0;
        while head < closure.len() {
            let x = closure[head];
            head += 1;
            for idx in 0..closure.len() {
                let y = closure[idx];
                for z in [at(x, y), at(y, x)] {
                    if !in_closure[z] {
                        in_closure[z] = true;
                        closure.push(z);
                    }
                }
            }
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_basics() {
        let c1 = FiniteGroup::cyclic(1);
        assert_eq!(c1.order(), 1);

        let c12 = FiniteGroup::cyclic(12);
        assert!(c12.is_abelian());
        assert_eq!(c12.element_order(1), 12);
        assert_eq!(c12.exponent(), 12);
        assert_eq!(c12.inv(5), 7);
    }

    #[test]
    fn direct_product_shapes() {
        let c6 = FiniteGroup::cyclic(6);
        let c2 = FiniteGroup::cyclic(2);
        let e = FiniteGroup::direct_product(&c6, &c2).unwrap();
        assert_eq!(e.order(), 12);
        assert!(e.is_abelian());
        assert_eq!(e.exponent(), 6);
        assert_eq!(e.label(), "C6xC2");

        let c1 = FiniteGroup::cyclic(1);
        let same = FiniteGroup::direct_product(&c1, &c6).unwrap();
        assert_eq!(same.order(), 6);
        // C1 × B relabels B identically under the row-major pairing.
        assert_eq!(same, c6);
    }

    #[test]
    fn named_order_12_groups() {
        let a4 = FiniteGroup::alternating_4();
        assert_eq!(a4.order(), 12);
        assert!(!a4.is_abelian());
        assert_eq!(a4.center().len(), 1);
        assert_eq!(a4.order_census(), vec![(1, 1), (2, 3), (3, 8)]);

        let d12 = FiniteGroup::dihedral(6);
        assert_eq!(d12.order(), 12);
        assert_eq!(d12.order_census(), vec![(1, 1), (2, 7), (3, 2), (6, 2)]);

        let dic = FiniteGroup::dicyclic_12();
        assert_eq!(dic.order(), 12);
        // Unique involution.
        assert_eq!(dic.order_census(), vec![(1, 1), (2, 1), (3, 2), (4, 6), (6, 2)]);
    }

    #[test]
    fn rejects_broken_identity() {
        // Cyclic table with two rows swapped: still Latin, identity law broken.
        let c5 = FiniteGroup::cyclic(5);
        let mut table: Vec<u32> = (0..25).map(|k| c5.mul(k / 5, k % 5) as u32).collect();
        for j in 0..5 {
            table.swap(5 + j, 10 + j);
        }
        assert!(FiniteGroup::from_table("bad", 5, table).is_err());
    }

    #[test]
    fn rejects_non_associative_latin_square() {
        // The smallest nonassociative loop: a Latin square of order 5 with
        // identity 0. It cannot be associative — a group of order 5 is
        // cyclic, yet here 1·1 = 0 gives an involution.
        #[rustfmt::skip]
        let table: Vec<u32> = vec![
            0, 1, 2, 3, 4,
            1, 0, 3, 4, 2,
            2, 3, 4, 0, 1,
            3, 4, 1, 2, 0,
            4, 2, 0, 1, 3,
        ];
        let err = FiniteGroup::from_table("loop5", 5, table).unwrap_err();
        assert!(matches!(err, Error::InvalidTable(_)));
    }

    #[test]
    fn commutators_and_invariants() {
        let a4 = FiniteGroup::alternating_4();
        let derived = a4.commutator_subgroup_elements();
        assert_eq!(derived.len(), 4); // V4

        let e = FiniteGroup::direct_product(&FiniteGroup::cyclic(6), &FiniteGroup::cyclic(2))
            .unwrap();
        assert_eq!(e.abelian_invariants().unwrap(), vec![6, 2]);
        assert_eq!(FiniteGroup::cyclic(12).abelian_invariants().unwrap(), vec![12]);
        assert!(FiniteGroup::dihedral(6).abelian_invariants().is_err());
    }

    #[test]
    fn abelian_group_enumeration() {
        let of12: Vec<String> = abelian_groups_of_order(12)
            .iter()
            .map(|g| g.label().to_string())
            .collect();
        assert_eq!(of12, vec!["C12", "C6xC2"]);

        let of36: Vec<String> = abelian_groups_of_order(36)
            .iter()
            .map(|g| g.label().to_string())
            .collect();
        assert_eq!(of36, vec!["C36", "C12xC3", "C18xC2", "C6xC6"]);

        assert_eq!(abelian_groups_of_order(1).len(), 1);
        assert_eq!(abelian_groups_of_order(24).len(), 3);
        assert_eq!(abelian_groups_of_order(60).len(), 2);
    }

    #[test]
    fn typed_semidirect_product() {
        use crate::aut::automorphism_group;
        use crate::morphism::GroupMap;
        // C3 ⋊ C2 with the inversion action is S3.
        let c3 = FiniteGroup::cyclic(3);
        let c2 = FiniteGroup::cyclic(2);
        let auts = automorphism_group(&c3).unwrap();
        let inv_idx = (0..auts.order())
            .find(|&k| auts.apply(k, 1) == 2)
            .unwrap() as u32;
        let act = GroupMap::new(c2.clone(), auts.carrier().clone(), vec![0, inv_idx]).unwrap();
        let s3 = FiniteGroup::semidirect_product(&c3, &auts, &c2, &act).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());

        // A non-homomorphic action is rejected before it gets here: the
        // GroupMap constructor refuses it.
        assert!(GroupMap::new(c2, auts.carrier().clone(), vec![0, 0, 0]).is_err());
    }

    #[test]
    fn relabel_preserves_structure() {
        let d12 = FiniteGroup::dihedral(6);
        let perm: Vec<u32> = vec![0, 5, 3, 1, 2, 4, 7, 11, 6, 10, 9, 8];
        let relabeled = d12.relabel(&perm).unwrap();
        assert_eq!(relabeled.order_census(), d12.order_census());
    }
}
