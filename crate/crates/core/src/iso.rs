//! Isomorphism testing for small orders: invariant fingerprints first, then
//! generator-image backtracking with constraint propagation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::group::{abelian_label, FiniteGroup};
use crate::morphism::GroupMap;
use crate::subgroup::{quotient_group, Subgroup};
use crate::Result;

/// Cheap isomorphism invariants. Equal fingerprints are necessary (not
/// sufficient) for isomorphism; the derived `Ord` gives deterministic
/// bucketing in censuses.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fingerprint {
    pub order: usize,
    pub abelian: bool,
    pub order_census: Vec<(usize, usize)>,
    pub center_order: usize,
    pub class_sizes: Vec<usize>,
    pub abelianization: Vec<usize>,
}

pub fn fingerprint(g: &FiniteGroup) -> Fingerprint {
    let derived = g.commutator_subgroup_elements();
    let abelianization = if derived.len() == 1 {
        g.abelian_invariants().expect("trivial derived subgroup")
    } else {
        let h = Subgroup::new(g.clone(), derived).expect("derived subgroup");
        let (q, _) = quotient_group(g, &h).expect("derived subgroup is normal");
        q.abelian_invariants().expect("abelianization is abelian")
    };
    Fingerprint {
        order: g.order(),
        abelian: g.is_abelian(),
        order_census: g.order_census(),
        center_order: g.center().len(),
        class_sizes: g.class_size_census(),
        abelianization,
    }
}

/// The five isomorphism types of groups of order 12.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Order12Type {
    C12,
    C6xC2,
    A4,
    D12,
    Dic12,
}

impl Order12Type {
    /// All five, in the conventional table order.
    pub const ALL: [Order12Type; 5] = [
        Order12Type::C12,
        Order12Type::C6xC2,
        Order12Type::A4,
        Order12Type::D12,
        Order12Type::Dic12,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Order12Type::C12 => "C12",
            Order12Type::C6xC2 => "C6xC2",
            Order12Type::A4 => "A4",
            Order12Type::D12 => "D12",
            Order12Type::Dic12 => "Dic12",
        }
    }

    /// A reference group of this type.
    pub fn sample(self) -> FiniteGroup {
        match self {
            Order12Type::C12 => FiniteGroup::cyclic(12),
            Order12Type::C6xC2 => {
                FiniteGroup::direct_product(&FiniteGroup::cyclic(6), &FiniteGroup::cyclic(2))
                    .expect("order 12")
            }
            Order12Type::A4 => FiniteGroup::alternating_4(),
            Order12Type::D12 => FiniteGroup::dihedral(6),
            Order12Type::Dic12 => FiniteGroup::dicyclic_12(),
        }
    }
}

impl fmt::Display for Order12Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Classifies a group of order 12 by classical invariants: abelian groups by
/// exponent, Dic12 by its unique involution, A4 by exactly three involutions
/// without being abelian, D12 otherwise (seven involutions).
pub fn isomorphism_type_of_order12(g: &FiniteGroup) -> Result<Order12Type> {
    if g.order() != 12 {
        return Err(Error::InvalidArgument(format!(
            "order must be 12, got {}",
            g.order()
        )));
    }
    let involutions = (1..12).filter(|&x| g.element_order(x) == 2).count();
    let ty = if g.is_abelian() {
        if g.exponent() == 12 {
            Order12Type::C12
        } else {
            Order12Type::C6xC2
        }
    } else if involutions == 1 {
        Order12Type::Dic12
    } else if involutions == 3 {
        Order12Type::A4
    } else {
        Order12Type::D12
    };
    Ok(ty)
}

/// Display label for the small groups that occur as morphism kernels here
/// (orders dividing 12). Abelian groups are labelled by invariant factors;
/// the nonabelian ones by their conventional names.
pub fn small_group_label(g: &FiniteGroup) -> String {
    if g.order() == 1 {
        return "1".to_string();
    }
    if g.is_abelian() {
        return abelian_label(&g.abelian_invariants().expect("abelian"));
    }
    match g.order() {
        6 => "D6".to_string(),
        12 => isomorphism_type_of_order12(g)
            .map(|t| t.label().to_string())
            .unwrap_or_else(|_| "G12".to_string()),
        8 => {
            let involutions = (1..8).filter(|&x| g.element_order(x) == 2).count();
            if involutions == 1 { "Q8" } else { "D8" }.to_string()
        }
        n => format!("G{n}"),
    }
}

/// Greedy generating set: repeatedly adjoin the element whose closure with
/// the current generators is largest (smallest index on ties). Small sets
/// keep the backtracking searches shallow.
pub(crate) fn greedy_generators(g: &FiniteGroup) -> Vec<usize> {
    let n = g.order();
    let mut gens: Vec<usize> = Vec::new();
    let mut closure = closure_of(g, &gens);
    while closure.iter().filter(|&&b| b).count() < n {
        let mut best: Option<(usize, usize)> = None; // (size, element)
        for x in 1..n {
            if closure[x] {
                continue;
            }
            gens.push(x);
            let size = closure_of(g, &gens).iter().filter(|&&b| b).count();
            gens.pop();
            let better = match best {
                None => true,
                Some((s, _)) => size > s,
            };
            if better {
                best = Some((size, x));
            }
        }
        let (_, x) = best.expect("not yet generating");
        gens.push(x);
        closure = closure_of(g, &gens);
    }
    gens
}

fn closure_of(g: &FiniteGroup, gens: &[usize]) -> Vec<bool> {
    let n = g.order();
    let mut in_set = vec![false; n];
    in_set[0] = true;
    let mut elems = vec![0usize];
    for &x in gens {
        if !in_set[x] {
            in_set[x] = true;
            elems.push(x);
        }
    }
    let mut head = 0;
    while head < elems.len() {
        let x = elems[head];
        head += 1;
        for idx in 0..elems.len() {
            let y = elems[idx];
            for z in [g.mul(x, y), g.mul(y, x)] {
                if !in_set[z] {
                    in_set[z] = true;
                    elems.push(z);
                }
            }
        }
    }
    in_set
}

/// Backtracking over generator images. Every complete assignment has had
/// all products of mapped elements cross-checked, so a returned vector is a
/// genuine isomorphism (bijectivity from injectivity + equal orders).
/// Candidates are tried in ascending index order, so the first witness is
/// deterministic.
pub(crate) fn isomorphisms_between(
    a: &FiniteGroup,
    b: &FiniteGroup,
    find_all: bool,
) -> Vec<Vec<u32>> {
    let n = a.order();
    if n != b.order() {
        return Vec::new();
    }
    let gens = greedy_generators(a);
    if gens.is_empty() {
        // Trivial group.
        return vec![vec![0]];
    }
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let (o, cs) = (a.element_order(g), a.conjugacy_class_size(g));
            (0..n)
                .filter(|&y| b.element_order(y) == o && b.conjugacy_class_size(y) == cs)
                .collect()
        })
        .collect();

    let mut state = MapState {
        image: vec![u32::MAX; n],
        used: vec![false; n],
        assigned: Vec::with_capacity(n),
    };
    state.force(0, 0);
    let mut found = Vec::new();
    search(a, b, &gens, &candidates, 0, &mut state, find_all, &mut found);
    found
}

struct MapState {
    image: Vec<u32>,
    used: Vec<bool>,
    assigned: Vec<u32>,
}

impl MapState {
    fn force(&mut self, x: usize, y: usize) {
        self.image[x] = y as u32;
        self.used[y] = true;
        self.assigned.push(x as u32);
    }

    /// Assigns image[x] = y and closes under products against everything
    /// already assigned. Returns true on success; on contradiction rolls
    /// back to the entry state and returns false.
    fn assign_and_close(&mut self, a: &FiniteGroup, b: &FiniteGroup, x: usize, y: usize) -> bool {
        let watermark = self.assigned.len();
        if !self.try_set(x, y) {
            return false;
        }
        let mut head = watermark;
        while head < self.assigned.len() {
            let u = self.assigned[head] as usize;
            head += 1;
            for idx in 0..self.assigned.len() {
                let v = self.assigned[idx] as usize;
                for (s, t) in [(u, v), (v, u)] {
                    let z = a.mul(s, t);
                    let w = b.mul(self.image[s] as usize, self.image[t] as usize);
                    if self.image[z] != u32::MAX {
                        if self.image[z] as usize != w {
                            self.rollback(watermark);
                            return false;
                        }
                    } else if !self.try_set(z, w) {
                        self.rollback(watermark);
                        return false;
                    }
                }
            }
        }
        true
    }

    fn try_set(&mut self, x: usize, y: usize) -> bool {
        if self.used[y] {
            return false;
        }
        self.force(x, y);
        true
    }

    fn rollback(&mut self, watermark: usize) {
        while self.assigned.len() > watermark {
            let x = self.assigned.pop().unwrap() as usize;
            let y = self.image[x] as usize;
            self.image[x] = u32::MAX;
            self.used[y] = false;
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn search(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    depth: usize,
    state: &mut MapState,
    find_all: bool,
    found: &mut Vec<Vec<u32>>,
) {
    if depth == gens.len() {
        debug_assert_eq!(state.assigned.len(), a.order(), "generators generate");
        found.push(state.image.clone());
        return;
    }
    let g = gens[depth];
    if state.image[g] != u32::MAX {
        // Forced by earlier closure; viable only if the forced image passes
        // the invariant filter for this generator.
        let forced = state.image[g] as usize;
        if candidates[depth].binary_search(&forced).is_ok() {
            search(a, b, gens, candidates, depth + 1, state, find_all, found);
        }
        return;
    }
    for &y in &candidates[depth] {
        let watermark = state.assigned.len();
        if state.assign_and_close(a, b, g, y) {
            search(a, b, gens, candidates, depth + 1, state, find_all, found);
            state.rollback(watermark);
        }
        if !find_all && !found.is_empty() {
            return;
        }
    }
}

/// Isomorphism test; correct for any pair of validated groups, fast for the
/// small orders in scope.
pub fn are_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    isomorphism(a, b).is_some()
}

/// First isomorphism found (deterministic), as a verified [`GroupMap`].
pub fn isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Option<GroupMap> {
    if a.order() != b.order() || fingerprint(a) != fingerprint(b) {
        return None;
    }
    let witnesses = isomorphisms_between(a, b, false);
    witnesses.into_iter().next().map(|images| {
        GroupMap::new(a.clone(), b.clone(), images).expect("search output is a morphism")
    })
}
