use std::collections::BTreeSet;

use tricyclic_core::enumerate::{
    enumerate_tricyclic_naive, enumerate_tricyclic_structured, naive_forms, structured_forms, verify_theorem,
};
use tricyclic_core::families::catalog_sweep;
use tricyclic_core::{canonical_form, Strategy};

/// Connected graphs with `n` vertices and `n + 2` edges, indexed by `n`.
const CLASS_COUNTS: [usize; 11] = [0, 0, 0, 0, 1, 4, 22, 107, 486, 2075, 8548];

#[test]
fn naive_counts_are_locked() {
    for n in 0..=8 {
        assert_eq!(naive_forms(n).unwrap().len(), CLASS_COUNTS[n], "n = {n}");
    }
}

#[test]
fn structured_matches_naive_up_to_eight() {
    for n in 1..=8 {
        assert_eq!(structured_forms(n).unwrap(), naive_forms(n).unwrap(), "n = {n}");
    }
}

#[test]
fn structured_counts_beyond_the_naive_range() {
    for n in 9..=10 {
        assert_eq!(structured_forms(n).unwrap().len(), CLASS_COUNTS[n], "n = {n}");
    }
}

#[test]
fn outputs_are_tricyclic_and_distinct() {
    for n in 4..=7 {
        for list in [enumerate_tricyclic_naive(n).unwrap(), enumerate_tricyclic_structured(n).unwrap()] {
            assert!(list.iter().all(|g| g.is_tricyclic() && g.order() == n));
            let forms: BTreeSet<_> = list.iter().map(canonical_form).collect();
            assert_eq!(forms.len(), list.len());
        }
    }
}

#[test]
fn catalog_members_appear_in_the_enumeration() {
    for n in 4..=10 {
        let forms = structured_forms(n).unwrap();
        for (id, g) in catalog_sweep(n).into_iter().filter(|(_, g)| g.order() == n) {
            assert!(forms.contains(&canonical_form(&g)), "{id} missing at n = {n}");
        }
    }
}

#[test]
fn verification_census_is_locked() {
    let reports = verify_theorem(8, Strategy::Structured).unwrap();
    let positives: Vec<usize> = reports.iter().map(|r| r.positives).collect();
    let classified: Vec<usize> = reports.iter().map(|r| r.classified).collect();
    assert_eq!(positives, [0, 0, 0, 0, 1, 3, 2, 10]);
    assert_eq!(classified, [0, 0, 0, 0, 1, 3, 2, 9]);
    let h1 = &reports[6];
    assert_eq!(h1.families.get("H1"), Some(&1));
    // the one positive outside the catalog at order 8
    assert_eq!(reports[7].counterexamples, ["G@`@W{"]);
    for r in &reports {
        assert!(r.hagos_failures.is_empty() && r.float_disagreements.is_empty() && r.non_integral.is_empty());
        assert!(r.missing_catalog_members.is_empty());
    }
}

#[test]
fn order_four_has_no_positive() {
    let r = &verify_theorem(4, Strategy::Naive).unwrap()[3];
    assert_eq!((r.total, r.positives, r.classified), (1, 0, 0));
    assert!(r.counterexamples.is_empty());
}
