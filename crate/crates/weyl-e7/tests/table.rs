//! Full-pipeline checks: enumerate the group from scratch, build the class
//! table, and verify every column against the reference data plus the
//! invariants the rest of the workspace depends on.
//!
//! The enumeration runs once per test binary (shared through a OnceLock)
//! and deliberately bypasses the disk cache: this file is the certifying
//! run.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use proptest::prelude::*;
use weyl_e7::cyclotomic::{self, CycloFactors};
use weyl_e7::table_data::ROWS;
use weyl_e7::{
    cache, class_table, classes, enumerate_group, exceptional_orbits, fingerprint,
    invariant_picard_rank, simple_reflections, ClassTable, GroupStore, Isometry, Minimality,
    DEFAULT_MEMORY_BUDGET, GROUP_ORDER,
};

fn ctx() -> &'static (GroupStore, ClassTable) {
    static CTX: OnceLock<(GroupStore, ClassTable)> = OnceLock::new();
    CTX.get_or_init(|| {
        let store = enumerate_group(DEFAULT_MEMORY_BUDGET).expect("enumeration fits the budget");
        let table = ClassTable::build(&store).expect("classification succeeds");
        (store, table)
    })
}

#[test]
fn group_order_and_membership() {
    let (store, _) = ctx();
    assert_eq!(store.len() as u64, GROUP_ORDER);
    assert!(store.contains(&Isometry::identity()));
    assert!(store.contains(&Isometry::central_involution()));
    for s in simple_reflections() {
        assert!(store.contains(&s));
    }
}

#[test]
fn sixty_classes_matching_reference_columns() {
    let (_, table) = ctx();
    assert_eq!(table.records().len(), 60);
    for (i, r) in table.records().iter().enumerate() {
        let row = &ROWS[i];
        assert_eq!(r.id, i as u32 + 1);
        assert_eq!(r.carter_label, row.carter);
        assert_eq!(r.order, row.order);
        assert_eq!(r.rho_invariant, row.rho);
        assert_eq!(r.geiser_partner, row.geiser);
        assert_eq!(r.eigenvalues.len(), 7);
        let ones = r.eigenvalues.iter().filter(|&&(n, _)| n == 1).count() as u32;
        assert_eq!(r.rho_invariant, 1 + ones);
        assert_eq!(r.order, r.representative.order());
        assert_eq!(invariant_picard_rank(&r.representative), r.rho_invariant);
    }
}

#[test]
fn fingerprints_certified_with_three_tiebreak_reversals() {
    let (_, table) = ctx();
    assert!(table.is_certified());
    // The canonical tie-break disagrees with the partner column on exactly
    // the three dependent pairs; the build reverses them and says so.
    assert_eq!(table.notes().len(), 3);
    for (note, pair) in table.notes().iter().zip(["(9, 10)", "(21, 22)", "(37, 38)"]) {
        assert!(note.contains(pair), "{note} should mention {pair}");
    }
}

#[test]
fn class_sizes_sum_and_divide() {
    let (_, table) = ctx();
    let sum: u64 = table.records().iter().map(|r| r.class_size).sum();
    assert_eq!(sum, GROUP_ORDER);
    for r in table.records() {
        assert_eq!(GROUP_ORDER % r.class_size, 0, "class {} size", r.id);
        // Twisting by the central element is a size-preserving bijection
        // between partner classes.
        assert_eq!(r.class_size, table.record(r.geiser_partner).class_size);
    }
    assert_eq!(table.record(1).class_size, 1);
    assert_eq!(table.record(2).class_size, 63);
    assert_eq!(table.record(31).class_size, 63);
    assert_eq!(table.record(39).class_size, 207_360);
    assert_eq!(table.record(49).class_size, 1);
}

#[test]
fn classify_known_elements() {
    let (_, table) = ctx();
    assert_eq!(table.classify_element(&Isometry::identity()), 1);
    assert_eq!(table.classify_element(&Isometry::central_involution()), 49);
    for s in simple_reflections() {
        assert_eq!(table.classify_element(&s), 2);
    }
    for r in table.records() {
        assert_eq!(table.classify_element(&r.representative), r.id);
    }
}

fn kperp_factors_from_eigenvalues(eigs: &[(u32, u32)]) -> CycloFactors {
    let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
    for &(n, _) in eigs {
        *counts.entry(n).or_default() += 1;
    }
    counts
        .into_iter()
        .map(|(n, c)| {
            let deg = cyclotomic::phi_degree(n) as u32;
            assert_eq!(c % deg, 0, "eigenvalues of index {n} form whole factors");
            (n, c / deg)
        })
        .collect()
}

#[test]
fn geiser_twist_matches_partner_column_and_negates_eigenvalues() {
    let (_, table) = ctx();
    for r in table.records() {
        let twisted = table.geiser_twist_class(r.id);
        assert_eq!(twisted, r.geiser_partner);
        assert_eq!(table.geiser_twist_class(twisted), r.id);
        let own = kperp_factors_from_eigenvalues(&r.eigenvalues);
        let partner = kperp_factors_from_eigenvalues(&table.record(r.geiser_partner).eigenvalues);
        assert_eq!(cyclotomic::negate_factors(&own), partner);
    }
    assert_eq!(table.geiser_twist_class(1), 49);
    assert_eq!(table.geiser_twist_class(24), 43);
}

#[test]
fn minimal_classes_are_exactly_the_eighteen() {
    let (_, table) = ctx();
    let minimal: Vec<u32> = table
        .records()
        .iter()
        .filter(|r| r.minimality != Minimality::NonMinimal)
        .map(|r| r.id)
        .collect();
    let expected: Vec<u32> = [31, 35, 40, 43, 44, 45]
        .into_iter()
        .chain(49..=60)
        .collect();
    assert_eq!(minimal, expected);
    for r in table.records() {
        match r.minimality {
            Minimality::MinimalConicBundle => assert_eq!(r.rho_invariant, 2),
            Minimality::MinimalPicardOne => assert_eq!(r.rho_invariant, 1),
            Minimality::NonMinimal => {}
        }
        assert_eq!(table.minimality_kind(r.id), r.minimality);
    }
    let conic = table
        .records()
        .iter()
        .filter(|r| r.minimality == Minimality::MinimalConicBundle)
        .count();
    assert_eq!(conic, 6);
}

#[test]
fn conic_bundle_class_orbit_structure() {
    let (_, table) = ctx();
    let orbits = exceptional_orbits(&table.record(31).representative);
    assert_eq!(orbits.len(), 28);
    assert!(orbits.iter().all(|o| o.len() == 2));
    // 12 orbits are component pairs of degenerate fibres (meeting once);
    // the rest meet twice; none is contractible.
    let meet_once = orbits.iter().filter(|o| o[0].intersect(o[1]) == 1).count();
    let meet_twice = orbits.iter().filter(|o| o[0].intersect(o[1]) == 2).count();
    assert_eq!((meet_once, meet_twice), (12, 16));
}

#[test]
fn element_and_subgroup_class_counts_agree() {
    let (_, table) = ctx();
    assert_eq!(table.cyclic_subgroup_class_count(), 60);
}

#[test]
fn table_exports() {
    let (_, table) = ctx();
    let csv = classes::table_csv(table);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 61);
    assert_eq!(
        lines[0],
        "id,carter_label,order,eigenvalues,rho,geiser,minimality,class_size,representative"
    );
    assert!(lines[1].starts_with("1,\u{2205},1,1^0 1^0 1^0 1^0 1^0 1^0 1^0,8,49,NonMinimal,1,"));

    let json: serde_json::Value = serde_json::from_str(&classes::table_json(table)).unwrap();
    let rows = json.as_array().unwrap();
    assert_eq!(rows.len(), 60);
    assert_eq!(rows[0]["id"], 1);
    assert_eq!(rows[48]["minimality"], "MinimalPicardOne");
    let eig56: Vec<String> = rows[55]["eigenvalues"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_string())
        .collect();
    assert!(eig56.contains(&"2^1".to_string()));
    assert!(eig56.contains(&"18^5".to_string()));
    assert_eq!(rows[55]["order"], 18);
}

#[test]
fn cache_round_trip_and_corruption_handling() {
    let (_, table) = ctx();
    let dir = tempfile::tempdir().unwrap();
    cache::save(dir.path(), table).unwrap();
    let reloaded = cache::load(dir.path()).expect("cache should load back");
    assert_eq!(reloaded.records().len(), 60);
    for (a, b) in table.records().iter().zip(reloaded.records()) {
        assert_eq!(a.id, b.id);
        assert_eq!(a.representative, b.representative);
        assert_eq!(a.class_size, b.class_size);
        assert_eq!(a.minimality, b.minimality);
    }
    assert_eq!(reloaded.notes(), table.notes());
    assert!(reloaded.is_certified());

    // Corrupt file: rejected, not trusted.
    let path = cache::cache_file_path(dir.path());
    std::fs::write(&path, b"{\"version\":9,\"records\":[]}").unwrap();
    assert!(cache::load(dir.path()).is_none());

    // With a corrupt cache and a hopeless budget, the rebuild reports the
    // budget failure instead of silently looping.
    let err = cache::load_or_build(4096, dir.path()).unwrap_err();
    assert!(matches!(err, cache::TableError::Budget(_)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_words_classify_consistently(
        word in prop::collection::vec(0usize..7, 0..28),
        conj in prop::collection::vec(0usize..7, 0..16),
    ) {
        let (_, table) = ctx();
        let gens = simple_reflections();
        let m = word.iter().fold(Isometry::identity(), |acc, &i| acc.compose(&gens[i]));
        let w = conj.iter().fold(Isometry::identity(), |acc, &i| acc.compose(&gens[i]));

        let id = table.classify_element(&m);
        prop_assert!((1..=60).contains(&id));
        prop_assert_eq!(invariant_picard_rank(&m), table.record(id).rho_invariant);
        prop_assert_eq!(table.record(id).order, m.order());

        // Conjugation invariance (w is an involution-word; w^-1 = reversed word).
        let w_inv = conj.iter().rev().fold(Isometry::identity(), |acc, &i| acc.compose(&gens[i]));
        prop_assert_eq!(w.compose(&w_inv), Isometry::identity());
        let conjugate = w.compose(&m).compose(&w_inv);
        prop_assert_eq!(table.classify_element(&conjugate), id);
        prop_assert_eq!(fingerprint(&conjugate), fingerprint(&m));

        // Every element is conjugate to its inverse here (all classes real).
        let inv = m.pow(m.order() - 1);
        if m.order() > 1 {
            prop_assert_eq!(table.classify_element(&inv), id);
        }
    }

    #[test]
    fn random_words_have_coherent_orbit_partitions(
        word in prop::collection::vec(0usize..7, 0..28),
    ) {
        let gens = simple_reflections();
        let m = word.iter().fold(Isometry::identity(), |acc, &i| acc.compose(&gens[i]));
        let orbits = exceptional_orbits(&m);
        let total: usize = orbits.iter().map(|o| o.len()).sum();
        prop_assert_eq!(total, 56);
        for orbit in &orbits {
            // Orbit closed under m, and cyclically generated from its head.
            for (i, &v) in orbit.iter().enumerate() {
                let next = m.apply(v);
                prop_assert_eq!(next, orbit[(i + 1) % orbit.len()]);
            }
        }
    }
}

#[test]
fn singleton_table_accessor_is_consistent() {
    // The process-wide accessor (disk-cache backed) must agree with the
    // hermetic build whatever the cache state was.
    let (_, table) = ctx();
    let singleton = class_table();
    for (a, b) in table.records().iter().zip(singleton.records()) {
        assert_eq!(a.id, b.id);
        assert_eq!(a.representative, b.representative);
        assert_eq!(a.class_size, b.class_size);
    }
}
