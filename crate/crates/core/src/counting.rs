//! Brace censuses, hypothesis checking, automorphism-order formulas and
//! Hopf-Galois structure counts via Byott's formula, with a brute-force
//! route through the holomorph for cross-validation.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::aut::automorphism_group;
use crate::error::Error;
use crate::group::{abelian_groups_of_order, abelian_label, FiniteGroup};
use crate::holomorph::{holomorph, SearchLimits};
use crate::iso::{
    are_isomorphic, fingerprint, isomorphism_type_of_order12, Fingerprint, Order12Type,
};
use crate::subgroup::{normal_subgroups, quotient_group, Subgroup};
use crate::tau::{classify_pairs, s_zero, TauClass, TauMorphism};
use crate::Result;

/// Kernel columns of the Hopf-Galois tables, in the conventional order.
pub const KERNEL_COLUMNS: [&str; 8] = ["F", "C6", "D6", "C4", "C2xC2", "C3", "C2", "1"];

/// Hypothesis (H): p prime, p ∤ n, and every group of order np has a
/// normal subgroup of order p.
///
/// The certificate is arithmetic. The Sylow count n_p divides n and is
/// ≡ 1 (mod p), so if no divisor d > 1 of n satisfies d ≡ 1 (mod p) then
/// n_p = 1 is forced (in particular whenever p > n). When the only bad
/// divisor is n itself, n_p = n would make the n elements outside the
/// Sylow-p subgroups a normal complement H of order n acted on faithfully
/// by C_p, which requires an automorphism of order p of a group of order
/// n, i.e. ord_p(q) ≤ k for some prime power q^k ‖ n. If no prime power
/// passes that test, (H) holds. Returns false whenever it cannot certify —
/// never guesses.
pub fn check_hypothesis(n: usize, p: usize) -> bool {
    if n == 0 || !arith::is_prime(p) || n % p == 0 {
        return false;
    }
    if p > n {
        return true;
    }
    let bad: Vec<usize> = arith::divisors(n)
        .into_iter()
        .filter(|&d| d > 1 && d % p == 1)
        .collect();
    if bad.is_empty() {
        return true;
    }
    if bad == [n] {
        return arith::factorize(n)
            .into_iter()
            .all(|(q, k)| arith::multiplicative_order(q % p, p) > k as usize);
    }
    false
}

/// One cell of a brace census: classes with the given additive and
/// multiplicative types.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub additive: String,
    pub multiplicative: String,
    pub count: usize,
}

/// Brace (or regular-subgroup) counts bucketed by (additive type,
/// multiplicative type). `p = 1` marks single-size censuses computed by
/// brute force over the holomorph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraceCensus {
    pub n: usize,
    pub p: usize,
    pub rows: Vec<CensusRow>,
    pub total: usize,
}

impl BraceCensus {
    pub fn get(&self, additive: &str, multiplicative: &str) -> usize {
        self.rows
            .iter()
            .find(|r| r.additive == additive && r.multiplicative == multiplicative)
            .map_or(0, |r| r.count)
    }

    /// Counts along one additive row in the given column order.
    pub fn row_vector(&self, additive: &str, columns: &[&str]) -> Vec<usize> {
        columns.iter().map(|c| self.get(additive, c)).collect()
    }

    pub fn additive_labels(&self) -> Vec<String> {
        let mut out = Vec::new();
        for r in &self.rows {
            if !out.contains(&r.additive) {
                out.push(r.additive.clone());
            }
        }
        out
    }

    pub fn multiplicative_labels(&self) -> Vec<String> {
        let mut out = Vec::new();
        for r in &self.rows {
            if !out.contains(&r.multiplicative) {
                out.push(r.multiplicative.clone());
            }
        }
        out
    }
}

/// Deterministic isomorphism-type labels: exact names for order 12 and for
/// abelian groups, opaque `G<order>.<k>` tags (fingerprint-bucketed, then
/// isomorphism-tested) for anything else.
struct TypeRegistry {
    entries: Vec<(Fingerprint, FiniteGroup, String)>,
    counters: BTreeMap<usize, usize>,
}

impl TypeRegistry {
    fn new() -> Self {
        TypeRegistry {
            entries: Vec::new(),
            counters: BTreeMap::new(),
        }
    }

    fn label_for(&mut self, g: &FiniteGroup) -> String {
        if g.order() == 12 {
            return isomorphism_type_of_order12(g)
                .expect("order checked")
                .label()
                .to_string();
        }
        if g.is_abelian() {
            return abelian_label(&g.abelian_invariants().expect("abelian"));
        }
        let fp = fingerprint(g);
        for (efp, eg, label) in &self.entries {
            if *efp == fp && are_isomorphic(eg, g) {
                return label.clone();
            }
        }
        let counter = self.counters.entry(g.order()).or_insert(0);
        *counter += 1;
        let label = format!("G{}.{}", g.order(), counter);
        self.entries.push((fp, g.clone(), label.clone()));
        label
    }
}

fn assemble_census(
    n: usize,
    p: usize,
    per_additive: Vec<(String, Vec<String>)>,
) -> BraceCensus {
    // Canonical column set: the five order-12 names when they cover
    // everything, otherwise the sorted union of labels.
    let order12: Vec<&str> = Order12Type::ALL.iter().map(|t| t.label()).collect();
    let seen: BTreeSet<&str> = per_additive
        .iter()
        .flat_map(|(_, labels)| labels.iter().map(|s| s.as_str()))
        .collect();
    let columns: Vec<String> = if seen.iter().all(|l| order12.contains(l)) {
        order12.iter().map(|s| s.to_string()).collect()
    } else {
        seen.into_iter().map(|s| s.to_string()).collect()
    };
    let mut rows = Vec::new();
    let mut total = 0;
    for (additive, labels) in &per_additive {
        for column in &columns {
            let count = labels.iter().filter(|l| *l == column).count();
            total += count;
            rows.push(CensusRow {
                additive: additive.clone(),
                multiplicative: column.clone(),
                count,
            });
        }
    }
    BraceCensus { n, p, rows, total }
}

/// Brace classes of size n·p via the pair classification: for each abelian
/// E of order n, the (F, τ) classes bucketed by the multiplicative type.
pub fn brace_count(n: usize, p: usize, limits: &SearchLimits) -> Result<BraceCensus> {
    if !arith::is_prime(p) {
        return Err(Error::InvalidArgument(format!("p = {p} is not prime")));
    }
    if !check_hypothesis(n, p) {
        return Err(Error::HypothesisNotVerified {
            n,
            p,
            reason: hypothesis_diagnostic(n, p),
        });
    }
    let mut registry = TypeRegistry::new();
    let mut per_additive = Vec::new();
    for e in abelian_groups_of_order(n) {
        let classes = classify_pairs(&e, p, limits)?;
        let labels: Vec<String> = classes
            .iter()
            .map(|class| {
                let (f_group, _) = class.f_class().representative().as_group("F");
                registry.label_for(&f_group)
            })
            .collect();
        per_additive.push((e.label().to_string(), labels));
    }
    Ok(assemble_census(n, p, per_additive))
}

fn hypothesis_diagnostic(n: usize, p: usize) -> String {
    if !arith::is_prime(p) {
        return format!("{p} is not prime");
    }
    if n % p == 0 {
        return format!("p = {p} divides n = {n}");
    }
    let bad: Vec<usize> = arith::divisors(n)
        .into_iter()
        .filter(|&d| d > 1 && d % p == 1)
        .collect();
    format!("divisors {bad:?} of {n} are ≡ 1 (mod {p}); a group of order np may lack a normal Sylow-p")
}

/// Brace classes of size m counted directly: conjugacy classes of regular
/// subgroups of Hol(N) over all abelian N of order m, bucketed by the
/// multiplicative type.
pub fn brace_count_bruteforce(m: usize, limits: &SearchLimits) -> Result<BraceCensus> {
    let groups = abelian_groups_of_order(m);
    let class_groups: Vec<(String, Vec<FiniteGroup>)> = groups
        .par_iter()
        .map(|n_group| -> Result<(String, Vec<FiniteGroup>)> {
            let hol = holomorph(n_group)?;
            let classes = hol.classify_alpha_maps(limits)?;
            let reps = classes
                .iter()
                .map(|c| hol.group_from_alpha(&c.rep_alpha, "G"))
                .collect();
            Ok((n_group.label().to_string(), reps))
        })
        .collect::<Result<_>>()?;
    let mut registry = TypeRegistry::new();
    let per_additive = class_groups
        .into_iter()
        .map(|(label, reps)| {
            let labels = reps.iter().map(|g| registry.label_for(g)).collect();
            (label, labels)
        })
        .collect();
    Ok(assemble_census(m, 1, per_additive))
}

/// Counts of regular subgroups (not classes) of Hol(E) by isomorphism
/// type, for a single abelian E.
pub fn regular_counts_for(e: &FiniteGroup, limits: &SearchLimits) -> Result<BraceCensus> {
    let hol = holomorph(e)?;
    let alphas = hol.regular_alpha_maps(limits)?;
    let mut registry = TypeRegistry::new();
    let labels: Vec<String> = alphas
        .iter()
        .map(|a| registry.label_for(&hol.group_from_alpha(a, "R")))
        .collect();
    Ok(assemble_census(
        e.order(),
        1,
        vec![(e.label().to_string(), labels)],
    ))
}

/// Counts of regular subgroups (not classes) of Hol(E) by isomorphism
/// type, over all abelian E of order n.
pub fn regular_subgroup_table(n: usize, limits: &SearchLimits) -> Result<BraceCensus> {
    let groups = abelian_groups_of_order(n);
    let subgroup_groups: Vec<(String, Vec<FiniteGroup>)> = groups
        .par_iter()
        .map(|e| -> Result<(String, Vec<FiniteGroup>)> {
            let hol = holomorph(e)?;
            let alphas = hol.regular_alpha_maps(limits)?;
            let reps = alphas
                .iter()
                .map(|a| hol.group_from_alpha(a, "R"))
                .collect();
            Ok((e.label().to_string(), reps))
        })
        .collect::<Result<_>>()?;
    let mut registry = TypeRegistry::new();
    let per_additive = subgroup_groups
        .into_iter()
        .map(|(label, reps)| {
            let labels = reps.iter().map(|g| registry.label_for(g)).collect();
            (label, labels)
        })
        .collect();
    Ok(assemble_census(n, 1, per_additive))
}

/// |S| for G = Z_p ⋊_τ F with τ nontrivial: the subgroup of Aut(G) fixing
/// F setwise has order (p−1)·|S₀(τ)|.
pub fn s_set_order(p: usize, f: &FiniteGroup, tau: &TauMorphism) -> Result<usize> {
    if tau.group() != f || tau.p() != p {
        return Err(Error::Mismatch("τ does not match (p, F)".into()));
    }
    if tau.is_trivial() {
        return Err(Error::InvalidArgument(
            "trivial τ gives a direct product; the S-set formula does not apply".into(),
        ));
    }
    Ok((p - 1) * s_zero(f, tau)?.order())
}

/// |Aut(Z_p ⋊_τ F)|: p(p−1)|S₀| for nontrivial τ; for the direct product
/// (trivial τ) both factors are characteristic because gcd(p, |F|) = 1, so
/// the order is (p−1)·|Aut F|.
pub fn aut_order_semidirect(p: usize, f: &FiniteGroup, tau: &TauMorphism) -> Result<usize> {
    if tau.group() != f || tau.p() != p {
        return Err(Error::Mismatch("τ does not match (p, F)".into()));
    }
    if tau.is_trivial() {
        Ok((p - 1) * automorphism_group(f)?.order())
    } else {
        Ok(p * (p - 1) * s_zero(f, tau)?.order())
    }
}

/// Regular subgroups of Hol(N) bucketed by isomorphism type: one
/// representative group per type with its count.
pub fn regular_iso_census(
    n_group: &FiniteGroup,
    limits: &SearchLimits,
) -> Result<Vec<(FiniteGroup, usize)>> {
    let hol = holomorph(n_group)?;
    let alphas = hol.regular_alpha_maps(limits)?;
    let mut buckets: Vec<(Fingerprint, FiniteGroup, usize)> = Vec::new();
    for alpha in &alphas {
        let g = hol.group_from_alpha(alpha, "R");
        let fp = fingerprint(&g);
        if let Some(bucket) = buckets
            .iter_mut()
            .find(|(bfp, bg, _)| *bfp == fp && are_isomorphic(bg, &g))
        {
            bucket.2 += 1;
        } else {
            buckets.push((fp, g, 1));
        }
    }
    Ok(buckets.into_iter().map(|(_, g, c)| (g, c)).collect())
}

/// Byott's formula: a(N, G) = |Aut G| / |Aut N| · b(N, G), where b(N, G)
/// is the number of regular subgroups of Hol(N) isomorphic to G.
///
/// b is computed by direct holomorph counting when the search bound allows
/// it, and by the conjugacy-class aggregation over the (F, τ)
/// classification when N = Z_p × E satisfies hypothesis (H); when both
/// routes run they must agree.
pub fn byott_count(n_group: &FiniteGroup, g: &FiniteGroup, limits: &SearchLimits) -> Result<usize> {
    if n_group.order() != g.order() {
        return Err(Error::Mismatch(format!(
            "|N| = {} but |G| = {}",
            n_group.order(),
            g.order()
        )));
    }
    if !n_group.is_abelian() {
        return Err(Error::NotAbelian {
            order: n_group.order(),
        });
    }
    let b = regular_count_of_type(n_group, g, limits)?;
    let aut_g = automorphism_group(g)?.order();
    let aut_n = automorphism_group(n_group)?.order();
    let numerator = aut_g * b;
    if numerator % aut_n != 0 {
        return Err(Error::RouteDisagreement(format!(
            "Byott quotient |Aut G|·b / |Aut N| = {aut_g}·{b}/{aut_n} is not an integer"
        )));
    }
    Ok(numerator / aut_n)
}

fn regular_count_of_type(
    n_group: &FiniteGroup,
    g: &FiniteGroup,
    limits: &SearchLimits,
) -> Result<usize> {
    let hol = holomorph(n_group)?;
    let direct = if hol.order() <= limits.max_holomorph_order {
        let alphas = hol.regular_alpha_maps(limits)?;
        let fp = fingerprint(g);
        Some(
            alphas
                .iter()
                .filter(|alpha| {
                    let cand = hol.group_from_alpha(alpha, "R");
                    fingerprint(&cand) == fp && are_isomorphic(&cand, g)
                })
                .count(),
        )
    } else {
        None
    };
    let aggregated = pair_aggregated_count(n_group, g, limits)?;
    match (direct, aggregated) {
        (Some(d), Some(a)) if d != a => Err(Error::RouteDisagreement(format!(
            "direct regular count {d} != class aggregation {a} for G = {}",
            g.label()
        ))),
        (Some(d), _) => Ok(d),
        (None, Some(a)) => Ok(a),
        (None, None) => Err(Error::ResourceBound {
            what: "holomorph order (no counting route applies)",
            needed: hol.order(),
            bound: limits.max_holomorph_order,
        }),
    }
}

/// Class-length aggregation: b(N, G) = Σ over (F, τ) classes with
/// Z_p ⋊_τ F ≅ G of (F-class length) × (τ-orbit size), when N = Z_p × E
/// for some prime p with hypothesis (H).
fn pair_aggregated_count(
    n_group: &FiniteGroup,
    g: &FiniteGroup,
    limits: &SearchLimits,
) -> Result<Option<usize>> {
    let order = n_group.order();
    let p = match arith::factorize(order)
        .into_iter()
        .rev()
        .find(|&(q, k)| k == 1 && check_hypothesis(order / q, q))
    {
        Some((q, _)) => q,
        None => return Ok(None),
    };
    let n = order / p;
    // E = n-torsion subgroup of N.
    let e_elements: Vec<u32> = (0..order)
        .filter(|&x| n % n_group.element_order(x) == 0)
        .map(|x| x as u32)
        .collect();
    let (e, _) = Subgroup::new(n_group.clone(), e_elements)?.as_group("E");
    let e = {
        let invariants = e.abelian_invariants()?;
        e.with_label(abelian_label(&invariants))
    };
    let classes = classify_pairs(&e, p, limits)?;
    let fp = fingerprint(g);
    let mut total = 0;
    for class in &classes {
        let candidate = class.tau_rep().semidirect_group()?;
        if fingerprint(&candidate) == fp && are_isomorphic(&candidate, g) {
            total += class.holomorph_class_length();
        }
    }
    Ok(Some(total))
}

/// One row of a Hopf-Galois table: cells follow [`KERNEL_COLUMNS`]; `None`
/// renders as a dash (kernel not applicable for this F at this p).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HgsRow {
    pub f_label: String,
    pub cells: Vec<Option<usize>>,
}

/// The number of Hopf-Galois structures of abelian type N = Z_p × E on a
/// Galois extension of degree 12p, per multiplicative type F and kernel.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HgsCensus {
    pub p: usize,
    pub n_label: String,
    pub e_label: String,
    pub kernel_columns: Vec<String>,
    pub rows: Vec<HgsRow>,
}

impl HgsCensus {
    pub fn cell(&self, f_label: &str, kernel: &str) -> Option<usize> {
        let col = self.kernel_columns.iter().position(|k| k == kernel)?;
        self.rows
            .iter()
            .find(|r| r.f_label == f_label)
            .and_then(|r| r.cells[col])
    }
}

/// The Hopf-Galois table for abelian type Z_p × E (E of order 12),
/// instantiated at the prime p.
///
/// Cells: `None` when no morphism with that kernel exists for F (either
/// structurally or because d ∤ p−1 at this p); 0 when Hol(E) simply has no
/// regular subgroup of type F; otherwise a(N, G) by Byott's formula with
/// |Aut G| from the S₀ formula and b(N, G) from class-length aggregation.
pub fn hgs_table(p: usize, e: &FiniteGroup, limits: &SearchLimits) -> Result<HgsCensus> {
    if e.order() != 12 {
        return Err(Error::InvalidArgument(format!(
            "Hopf-Galois tables are for degree 12p; |E| = {}",
            e.order()
        )));
    }
    if p < 7 || !arith::is_prime(p) {
        return Err(Error::InvalidArgument(format!(
            "p must be a prime ≥ 7, got {p}"
        )));
    }
    let classes = classify_pairs(e, p, limits)?;
    let aut_n = (p - 1) * automorphism_group(e)?.order();
    let n_label = {
        let mut invariants = e.abelian_invariants()?;
        invariants[0] *= p;
        abelian_label(&invariants)
    };

    let mut rows = Vec::new();
    for f_type in Order12Type::ALL {
        let sample = f_type.sample();
        let possible = possible_kernel_columns(&sample)?;
        let aut_f = automorphism_group(&sample)?.order();
        let f_classes: Vec<&TauClass> = classes
            .iter()
            .filter(|c| c.f_class().iso_label() == f_type.label())
            .collect();
        let mut cells = Vec::with_capacity(KERNEL_COLUMNS.len());
        for column in KERNEL_COLUMNS {
            if !possible.contains(column) {
                cells.push(None);
                continue;
            }
            let bucket: Vec<&&TauClass> = f_classes
                .iter()
                .filter(|c| c.kernel_column() == column)
                .collect();
            if bucket.is_empty() {
                // Structurally possible kernel: a zero count means the type
                // F has no regular subgroup at all; an empty bucket with
                // regular subgroups present means the p-condition fails.
                cells.push(if f_classes.is_empty() { Some(0) } else { None });
                continue;
            }
            let mut b_cell = 0;
            let mut aut_g: Option<usize> = None;
            for class in &bucket {
                b_cell += class.holomorph_class_length();
                let this_aut = if class.tau_rep().is_trivial() {
                    (p - 1) * aut_f
                } else {
                    p * (p - 1) * s_zero(class.tau_rep().group(), class.tau_rep())?.order()
                };
                match aut_g {
                    None => aut_g = Some(this_aut),
                    Some(prev) if prev != this_aut => {
                        return Err(Error::RouteDisagreement(format!(
                            "classes in cell ({}, {column}) have different |Aut G|",
                            f_type.label()
                        )));
                    }
                    Some(_) => {}
                }
            }
            let aut_g = aut_g.expect("bucket is nonempty");
            let numerator = aut_g * b_cell;
            if numerator % aut_n != 0 {
                return Err(Error::RouteDisagreement(format!(
                    "Byott quotient not integral in cell ({}, {column})",
                    f_type.label()
                )));
            }
            cells.push(Some(numerator / aut_n));
        }
        rows.push(HgsRow {
            f_label: f_type.label().to_string(),
            cells,
        });
    }
    Ok(HgsCensus {
        p,
        n_label,
        e_label: e.label().to_string(),
        kernel_columns: KERNEL_COLUMNS.iter().map(|s| s.to_string()).collect(),
        rows,
    })
}

/// Kernel columns structurally available for a multiplicative type F:
/// one per normal subgroup with cyclic quotient ("F" itself for the
/// trivial quotient), regardless of p.
fn possible_kernel_columns(f: &FiniteGroup) -> Result<BTreeSet<&'static str>> {
    let mut out = BTreeSet::new();
    for kernel in normal_subgroups(f)? {
        let (quotient, _) = quotient_group(f, &kernel)?;
        let d = quotient.order();
        let cyclic = d == 1 || (1..d).any(|q| quotient.element_order(q) == d);
        if !cyclic {
            continue;
        }
        if kernel.order() == f.order() {
            out.insert("F");
        } else {
            let (as_group, _) = kernel.as_group("K");
            let label = crate::iso::small_group_label(&as_group);
            if let Some(col) = KERNEL_COLUMNS.iter().find(|&&c| c == label) {
                out.insert(col);
            }
        }
    }
    Ok(out)
}
