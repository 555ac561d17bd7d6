//! The isometry group of the degree-2 Picard lattice.
//!
//! Everything fixing the canonical class is generated by seven simple
//! reflections; this crate enumerates that group exactly (2,903,040
//! elements), partitions it into its 60 conjugacy classes, and attaches to
//! each class the invariants that drive the rest of the workspace: the
//! characteristic polynomial split into cyclotomic factors, the invariant
//! sublattice rank, the pairing induced by the central involution, and the
//! minimality of the class action on exceptional classes.

pub mod cache;
pub mod classes;
pub mod cyclotomic;
pub mod group;
pub mod mat;
pub mod table_data;

use std::sync::OnceLock;

use pic_e7::{e, DivisorClass, L};

pub use classes::{
    exceptional_orbits, fingerprint, invariant_picard_rank, ClassFingerprint, ClassTable,
    ConjugacyClassRecord, Minimality, GROUP_ORDER,
};
pub use group::{enumerate_group, BudgetExceeded, GroupStore, DEFAULT_MEMORY_BUDGET};
pub use mat::{Isometry, IsometryError};

/// Process-wide class table, built (or loaded from the default disk cache)
/// on first use.  Panics if the build fails; use [`cache::load_or_build`]
/// directly for recoverable error handling or a custom budget.
pub fn class_table() -> &'static ClassTable {
    static TABLE: OnceLock<ClassTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        cache::load_or_build(DEFAULT_MEMORY_BUDGET, &cache::default_cache_dir())
            .unwrap_or_else(|e| panic!("class table unavailable: {e}"))
    })
}

/// The 60 conjugacy-class records in id order.
pub fn conjugacy_classes() -> &'static [ConjugacyClassRecord] {
    class_table().records()
}

/// Simple roots: one node of valence three plus an A6 chain,
/// `L - E1 - E2 - E3` and `Ei - E(i+1)` for i = 1..6.
pub fn simple_roots() -> [DivisorClass; 7] {
    [
        L - e(1) - e(2) - e(3),
        e(1) - e(2),
        e(2) - e(3),
        e(3) - e(4),
        e(4) - e(5),
        e(5) - e(6),
        e(6) - e(7),
    ]
}

/// Reflections in the simple roots; these generate the whole group.
pub fn simple_reflections() -> [Isometry; 7] {
    simple_roots().map(Isometry::reflection)
}

#[cfg(test)]
mod tests {
    use super::*;
    use pic_e7::K;

    #[test]
    fn simple_roots_are_roots() {
        for alpha in simple_roots() {
            assert_eq!(alpha.self_intersection(), -2);
            assert_eq!(alpha.intersect(K), 0);
        }
    }

    #[test]
    fn simple_reflections_are_involutions() {
        for s in simple_reflections() {
            assert_eq!(s.compose(&s), Isometry::identity());
            assert_eq!(s.order(), 2);
        }
    }

    #[test]
    fn dynkin_diagram_is_e7() {
        // Valences in the simple-root graph (edges where the pairing is 1):
        // one node of valence 3, two of valence 1... for E7 the chain is
        // 1-2-2-3-2-2-1 with the branch node attached to position 3.
        let roots = simple_roots();
        let mut valence = [0u32; 7];
        for i in 0..7 {
            for j in 0..7 {
                if i != j && roots[i].intersect(roots[j]) == 1 {
                    valence[i] += 1;
                }
            }
        }
        let mut sorted = valence;
        sorted.sort();
        assert_eq!(sorted, [1, 1, 1, 2, 2, 2, 3]);
        // The branch node is the (-1)-curve triple point L-E1-E2-E3.
        assert_eq!(valence[0], 1);
        assert_eq!(valence[3], 3);
    }

    #[test]
    fn central_involution_commutes_with_generators() {
        let z = Isometry::central_involution();
        for s in simple_reflections() {
            assert_eq!(s.compose(&z), z.compose(&s));
        }
    }
}
