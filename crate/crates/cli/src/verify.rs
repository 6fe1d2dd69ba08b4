//! The one-shot verification harness: re-derives every published table and
//! cross-check and reports item-by-item.

use brace_core::counting::{
    brace_count, brace_count_bruteforce, check_hypothesis, hgs_table, regular_subgroup_table,
    KERNEL_COLUMNS,
};
use brace_core::group::{abelian_groups_of_order, FiniteGroup};
use brace_core::holomorph::{holomorph, SearchLimits};
use brace_core::tau::classify_pairs;
use brace_core::{arith, Error};

use crate::golden;
use crate::report::{VerifyItem, VerifyReport};

pub fn verify_paper(p_set: &[usize], limits: &SearchLimits) -> Result<VerifyReport, Error> {
    if p_set.is_empty() {
        return Err(Error::InvalidArgument("p-set must not be empty".into()));
    }
    for &p in p_set {
        if !arith::is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        if !check_hypothesis(12, p) {
            return Err(Error::HypothesisNotVerified {
                n: 12,
                p,
                reason: "verification requires primes satisfying (H) for n = 12".into(),
            });
        }
    }

    let mut items = Vec::new();

    // Brace table of size 12, by brute force over the holomorphs.
    let census12 = brace_count_bruteforce(12, limits)?;
    push_table_item(
        &mut items,
        "brace table of size 12",
        &golden::BRACE_TABLE_12,
        |e| census12.row_vector(e, &golden::MULT_COLUMNS),
    );

    // Regular-subgroup table of Hol(E).
    let regular = regular_subgroup_table(12, limits)?;
    push_table_item(
        &mut items,
        "regular subgroups of Hol(E)",
        &golden::REGULAR_TABLE_12,
        |e| regular.row_vector(e, &golden::MULT_COLUMNS),
    );

    // Size-12p censuses, one per requested prime, matched by residue.
    for &p in p_set {
        let census = brace_count(12, p, limits)?;
        let (row_c12, row_e2, total) =
            golden::census_for_residue(p).expect("p coprime to 12 after (H)");
        let got_c12 = census.row_vector("C12", &golden::MULT_COLUMNS);
        let got_e2 = census.row_vector("C6xC2", &golden::MULT_COLUMNS);
        let passed = got_c12 == row_c12 && got_e2 == row_e2 && census.total == total;
        items.push(VerifyItem {
            name: format!("size-12p census at p = {p}"),
            passed,
            detail: if passed {
                format!("rows {got_c12:?} / {got_e2:?} with total {total}")
            } else {
                format!(
                    "expected {row_c12:?} / {row_e2:?} (total {total}), got {got_c12:?} / {got_e2:?} (total {})",
                    census.total
                )
            },
        });
    }

    // Hopf-Galois tables at each requested prime, both abelian types.
    for &p in p_set {
        for e in abelian_groups_of_order(12) {
            let table = hgs_table(p, &e, limits)?;
            let mut mismatches = Vec::new();
            for (f_label, cells) in golden::hgs_rows(e.label()) {
                for (kernel, cell) in KERNEL_COLUMNS.iter().zip(cells) {
                    let expected = cell.instantiate(p);
                    let got = table.cell(f_label, kernel);
                    if got != expected {
                        mismatches.push(format!(
                            "({f_label}, {kernel}): expected {expected:?}, got {got:?}"
                        ));
                    }
                }
            }
            items.push(VerifyItem {
                name: format!("Hopf-Galois table for {} at p = {p}", table.n_label),
                passed: mismatches.is_empty(),
                detail: if mismatches.is_empty() {
                    "all 40 cells match".to_string()
                } else {
                    mismatches.join("; ")
                },
            });
        }
    }

    // Single-size totals.
    for (m, expected) in golden::BRUTE_FORCE_TOTALS {
        let census = brace_count_bruteforce(m, limits)?;
        items.push(VerifyItem {
            name: format!("brace count of size {m}"),
            passed: census.total == expected,
            detail: format!("expected {expected}, got {}", census.total),
        });
    }

    // Dual-route check at p = 7: direct classification of Hol(Z7 × E)
    // versus the (F, τ) pair classification.
    for (e_label, expected) in golden::DUAL_ROUTE_AT_7 {
        let e = abelian_groups_of_order(12)
            .into_iter()
            .find(|g| g.label() == e_label)
            .expect("order-12 abelian label");
        let n = FiniteGroup::direct_product(&FiniteGroup::cyclic(7), &e)?;
        let hol = holomorph(&n)?;
        let direct = hol.classify_alpha_maps(limits)?.len();
        let pairs = classify_pairs(&e, 7, limits)?.len();
        let passed = direct == expected && pairs == expected;
        items.push(VerifyItem {
            name: format!("dual-route classes for Z7 x {e_label}"),
            passed,
            detail: format!("direct {direct}, pairs {pairs}, expected {expected}"),
        });
    }

    let passed = items.iter().all(|i| i.passed);
    Ok(VerifyReport { passed, items })
}

fn push_table_item(
    items: &mut Vec<VerifyItem>,
    name: &str,
    golden_rows: &[(&str, [usize; 5])],
    got_row: impl Fn(&str) -> Vec<usize>,
) {
    let mut mismatches = Vec::new();
    for (e, expected) in golden_rows {
        let got = got_row(e);
        if got != expected.to_vec() {
            mismatches.push(format!("row {e}: expected {expected:?}, got {got:?}"));
        }
    }
    items.push(VerifyItem {
        name: name.to_string(),
        passed: mismatches.is_empty(),
        detail: if mismatches.is_empty() {
            "all rows match".to_string()
        } else {
            mismatches.join("; ")
        },
    });
}
