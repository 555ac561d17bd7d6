//! Conjugacy classification: the partition of the group into its 60
//! classes, the per-class invariants, and the matching against the
//! reference table in [`crate::table_data`].
//!
//! The partition itself is ground truth (conjugation-orbit closure inside
//! the enumerated group); fingerprints are a lookup key on top of it,
//! certified injective during the build.  Class representatives are the
//! members with the smallest BFS position, so the table is identical
//! across runs.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use pic_e7::{exceptional_classes, roots, DivisorClass};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{self, CycloFactors};
use crate::group::GroupStore;
use crate::mat::{packed_mul, Isometry, Packed};
use crate::simple_reflections;
use crate::table_data::ROWS;

pub const GROUP_ORDER: u64 = 2_903_040;

/// How the lattice action constrains a surface carrying it.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Minimality {
    /// Some orbit of exceptional classes is pairwise orthogonal, hence
    /// contractible over the ground field.
    NonMinimal,
    /// Minimal with invariant rank 2: the invariant part is spanned by K
    /// and a fibration class.
    MinimalConicBundle,
    /// Minimal with invariant rank 1.
    MinimalPicardOne,
}

impl fmt::Display for Minimality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Minimality::NonMinimal => "NonMinimal",
            Minimality::MinimalConicBundle => "MinimalConicBundle",
            Minimality::MinimalPicardOne => "MinimalPicardOne",
        };
        f.write_str(s)
    }
}

/// Conjugation-invariant key: characteristic polynomial (as cyclotomic
/// factors) plus the cycle types on the two finite class censuses.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ClassFingerprint {
    /// (n, multiplicity) pairs for the factorization of det(tI - M) on the
    /// full lattice; degrees weighted by multiplicity sum to 8.
    pub charpoly_cyclotomic: Vec<(u32, u32)>,
    /// Cycle lengths (descending) of the permutation of the 56 exceptional
    /// classes.
    pub exc_cycle_type: Vec<u32>,
    /// Cycle lengths (descending) of the permutation of the 126 roots.
    pub root_cycle_type: Vec<u32>,
}

/// One row of the computed class table.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConjugacyClassRecord {
    pub id: u32,
    pub carter_label: String,
    pub order: u32,
    /// Seven eigenvalues on the orthogonal complement of K, each a root of
    /// unity encoded as (n, k): the primitive n-th root raised to k.
    pub eigenvalues: Vec<(u32, u32)>,
    pub rho_invariant: u32,
    pub geiser_partner: u32,
    pub minimality: Minimality,
    pub class_size: u64,
    pub representative: Isometry,
}

/// Errors while building or cross-checking the class table.
#[derive(Debug, Clone)]
pub enum BuildError {
    WrongGroupOrder { found: usize },
    WrongClassCount { found: usize },
    Factorization { detail: String },
    TableMismatch { detail: String },
    MinimalWithLargeRank { rho: u32 },
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::WrongGroupOrder { found } => {
                write!(f, "group store holds {found} elements, expected {GROUP_ORDER}")
            }
            BuildError::WrongClassCount { found } => {
                write!(f, "partition produced {found} conjugacy classes, expected 60")
            }
            BuildError::Factorization { detail } => {
                write!(f, "characteristic polynomial not a product of cyclotomics: {detail}")
            }
            BuildError::TableMismatch { detail } => {
                write!(f, "computed classes do not match the reference table: {detail}")
            }
            BuildError::MinimalWithLargeRank { rho } => {
                write!(f, "minimal class with invariant rank {rho} (expected 1 or 2)")
            }
        }
    }
}

impl std::error::Error for BuildError {}

// ---------------------------------------------------------------------------
// Standalone invariants of a single isometry
// ---------------------------------------------------------------------------

fn permutation_on(classes: &[DivisorClass], m: &Isometry) -> Vec<u32> {
    classes
        .iter()
        .map(|&v| {
            classes
                .binary_search(&m.apply(v))
                .expect("isometry must permute the census") as u32
        })
        .collect()
}

fn cycle_type(perm: &[u32]) -> Vec<u32> {
    let mut seen = vec![false; perm.len()];
    let mut parts = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u32;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            len += 1;
            i = perm[i] as usize;
        }
        parts.push(len);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// Cyclotomic factorization of det(tI - M) on the full lattice.
pub fn pic_cyclotomic_factors(m: &Isometry) -> Result<CycloFactors, BuildError> {
    cyclotomic::factor_cyclotomic(&m.char_poly())
        .map_err(|detail| BuildError::Factorization { detail })
}

/// Conjugation-invariant fingerprint of an isometry.
pub fn fingerprint(m: &Isometry) -> ClassFingerprint {
    let factors = pic_cyclotomic_factors(m)
        .expect("a lattice isometry fixing K has cyclotomic characteristic polynomial");
    ClassFingerprint {
        charpoly_cyclotomic: factors.iter().map(|(&n, &e)| (n, e)).collect(),
        exc_cycle_type: cycle_type(&permutation_on(exceptional_classes(), m)),
        root_cycle_type: cycle_type(&permutation_on(roots(), m)),
    }
}

/// Rank of the sublattice fixed by the cyclic group generated by `m`,
/// i.e. the multiplicity of eigenvalue 1 on the full lattice.
pub fn invariant_picard_rank(m: &Isometry) -> u32 {
    let factors = pic_cyclotomic_factors(m)
        .expect("a lattice isometry fixing K has cyclotomic characteristic polynomial");
    factors.get(&1).copied().unwrap_or(0)
}

/// Orbits of the 56 exceptional classes under the cyclic group generated by
/// `m`.  Orbits are listed by their smallest member (census order) and each
/// orbit starts at that member and follows repeated application of `m`.
pub fn exceptional_orbits(m: &Isometry) -> Vec<Vec<DivisorClass>> {
    let exc = exceptional_classes();
    let perm = permutation_on(exc, m);
    let mut seen = vec![false; exc.len()];
    let mut orbits = Vec::new();
    for start in 0..exc.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            orbit.push(exc[i]);
            i = perm[i] as usize;
        }
        orbits.push(orbit);
    }
    orbits
}

fn orbit_is_contractible(orbit: &[DivisorClass]) -> bool {
    for (i, &a) in orbit.iter().enumerate() {
        for &b in &orbit[i + 1..] {
            if a.intersect(b) != 0 {
                return false;
            }
        }
    }
    true
}

fn minimality_from_rep(m: &Isometry, rho: u32) -> Result<Minimality, BuildError> {
    if exceptional_orbits(m).iter().any(|o| orbit_is_contractible(o)) {
        return Ok(Minimality::NonMinimal);
    }
    match rho {
        1 => Ok(Minimality::MinimalPicardOne),
        2 => Ok(Minimality::MinimalConicBundle),
        rho => Err(BuildError::MinimalWithLargeRank { rho }),
    }
}

// ---------------------------------------------------------------------------
// The class table
// ---------------------------------------------------------------------------

#[derive(Debug)]
pub struct ClassTable {
    records: Vec<ConjugacyClassRecord>,
    by_fingerprint: BTreeMap<ClassFingerprint, Vec<u32>>,
    certified: bool,
    notes: Vec<String>,
}

struct RawClass {
    rep: Isometry,
    size: u64,
    order: u32,
    kperp: Vec<(u32, u32)>,
    rho: u32,
    fp: ClassFingerprint,
}

/// Partition the store into conjugation orbits.  Returns the orbit data in
/// order of smallest member position, plus the orbit index of every element.
fn partition(store: &GroupStore) -> (Vec<RawClass>, Vec<u32>) {
    let gens: Vec<Packed> = simple_reflections().iter().map(|s| s.packed()).collect();
    let n = store.len();
    let mut class_of: Vec<u32> = vec![u32::MAX; n];
    let mut raw = Vec::new();
    for start in 0..n {
        if class_of[start] != u32::MAX {
            continue;
        }
        let cid = raw.len() as u32;
        class_of[start] = cid;
        let mut size = 1u64;
        let mut layer: Vec<Packed> = vec![*store.packed(start)];
        while !layer.is_empty() {
            // Generators are involutions, so s . m . s is conjugation by s.
            let conj: Vec<usize> = layer
                .par_iter()
                .flat_map_iter(|m| {
                    gens.iter()
                        .map(move |s| packed_mul(&packed_mul(s, m), s))
                })
                .map(|c| {
                    store
                        .position(&c)
                        .expect("conjugate of a group element stays in the group")
                })
                .collect();
            let mut fresh = Vec::new();
            for p in conj {
                if class_of[p] == u32::MAX {
                    class_of[p] = cid;
                    size += 1;
                    fresh.push(*store.packed(p));
                }
            }
            layer = fresh;
        }
        let rep = store.get(start);
        raw.push((rep, size));
    }
    let raw = raw
        .into_iter()
        .map(|(rep, size)| {
            let factors = pic_cyclotomic_factors(&rep)
                .expect("group element has cyclotomic characteristic polynomial");
            let rho = factors.get(&1).copied().unwrap_or(0);
            assert!(rho >= 1, "every isometry here fixes K");
            let mut kperp_map = factors.clone();
            if rho == 1 {
                kperp_map.remove(&1);
            } else {
                kperp_map.insert(1, rho - 1);
            }
            let kperp: Vec<(u32, u32)> = kperp_map.iter().map(|(&n, &e)| (n, e)).collect();
            let order = cyclotomic::factors_order(&factors);
            debug_assert_eq!(order, rep.order());
            RawClass {
                fp: fingerprint(&rep),
                rep,
                size,
                order,
                kperp,
                rho,
            }
        })
        .collect();
    (raw, class_of)
}

const AMBIGUOUS_PAIRS: [(u32, u32); 6] = [(5, 6), (9, 10), (13, 14), (21, 22), (25, 26), (37, 38)];

impl ClassTable {
    /// Classify every element of the store and match the classes against
    /// the reference table.
    pub fn build(store: &GroupStore) -> Result<ClassTable, BuildError> {
        if store.len() as u64 != GROUP_ORDER {
            return Err(BuildError::WrongGroupOrder { found: store.len() });
        }
        let (raw, class_of) = partition(store);
        if raw.len() != 60 {
            return Err(BuildError::WrongClassCount { found: raw.len() });
        }
        let mut notes = Vec::new();

        // Match raw classes to table rows on (order, K-perp factors).  The
        // reference table determines every bucket uniquely except six pairs
        // of rows it genuinely does not distinguish.
        let mut row_buckets: BTreeMap<(u32, Vec<(u32, u32)>), Vec<u32>> = BTreeMap::new();
        for row in &ROWS {
            row_buckets
                .entry((row.order, row.kperp_factors.to_vec()))
                .or_default()
                .push(row.id);
        }
        let mut cls_buckets: BTreeMap<(u32, Vec<(u32, u32)>), Vec<usize>> = BTreeMap::new();
        for (i, c) in raw.iter().enumerate() {
            cls_buckets
                .entry((c.order, c.kperp.clone()))
                .or_default()
                .push(i);
        }

        // assignment[i] = table id of raw class i
        let mut assignment = vec![0u32; 60];
        for (key, row_ids) in &row_buckets {
            let Some(cands) = cls_buckets.get(key) else {
                return Err(BuildError::TableMismatch {
                    detail: format!("no computed class with order {} and factors {:?}", key.0, key.1),
                });
            };
            if cands.len() != row_ids.len() {
                return Err(BuildError::TableMismatch {
                    detail: format!(
                        "bucket (order {}, factors {:?}): {} computed classes vs {} rows",
                        key.0,
                        key.1,
                        cands.len(),
                        row_ids.len()
                    ),
                });
            }
            match row_ids.len() {
                1 => assignment[cands[0]] = row_ids[0],
                2 => {
                    // Canonical tie-break: the class whose cycle type on the
                    // exceptional census is lexicographically smaller gets
                    // the smaller id (cycle types listed descending).
                    let (a, b) = (cands[0], cands[1]);
                    let key_of = |i: usize| (&raw[i].fp.exc_cycle_type, &raw[i].fp.root_cycle_type);
                    let (small, large) = if key_of(a) <= key_of(b) { (a, b) } else { (b, a) };
                    assignment[small] = row_ids[0];
                    assignment[large] = row_ids[1];
                }
                k => {
                    return Err(BuildError::TableMismatch {
                        detail: format!("bucket of size {k} (order {}, factors {:?})", key.0, key.1),
                    });
                }
            }
        }

        // Twisting by the central involution at the raw-class level.
        let central = Isometry::central_involution().packed();
        let twist_raw: Vec<usize> = raw
            .iter()
            .map(|c| {
                let t = packed_mul(&central, &c.rep.packed());
                class_of[store.position(&t).expect("twist stays in the group")] as usize
            })
            .collect();

        // The table's partner column must hold under the assignment.  The
        // tie-break fixes each ambiguous pair in isolation; when it points
        // an arrow at the wrong member of a partner pair, swap that pair
        // (the pairing itself is never in question).
        let mut swapped: Vec<(u32, u32)> = Vec::new();
        loop {
            let violation = (0..60).find_map(|i| {
                let expected = ROWS[assignment[i] as usize - 1].geiser;
                let actual = assignment[twist_raw[i]];
                (actual != expected).then_some((expected, actual))
            });
            let Some((expected, actual)) = violation else { break };
            let pair = AMBIGUOUS_PAIRS
                .iter()
                .find(|&&(a, b)| (a, b) == (expected.min(actual), expected.max(actual)))
                .copied();
            match pair {
                Some(p) if !swapped.contains(&p) => {
                    for a in assignment.iter_mut() {
                        if *a == p.0 {
                            *a = p.1;
                        } else if *a == p.1 {
                            *a = p.0;
                        }
                    }
                    notes.push(format!(
                        "tie-break for pair {:?} reversed to respect the partner column",
                        p
                    ));
                    swapped.push(p);
                }
                _ => {
                    return Err(BuildError::TableMismatch {
                        detail: format!(
                            "partner column violated: twist lands in {actual}, table says {expected}"
                        ),
                    });
                }
            }
        }

        // Assemble records in id order, cross-checking every table column.
        let mut slots: Vec<Option<ConjugacyClassRecord>> = (0..60).map(|_| None).collect();
        for (i, c) in raw.iter().enumerate() {
            let id = assignment[i];
            let row = &ROWS[id as usize - 1];
            if row.order != c.order || row.rho != c.rho || row.kperp_factors != c.kperp.as_slice() {
                return Err(BuildError::TableMismatch {
                    detail: format!("row {id} invariants disagree with computed class"),
                });
            }
            let kperp_map: CycloFactors = c.kperp.iter().copied().collect();
            let minimality = minimality_from_rep(&c.rep, c.rho)?;
            slots[id as usize - 1] = Some(ConjugacyClassRecord {
                id,
                carter_label: row.carter.to_string(),
                order: c.order,
                eigenvalues: cyclotomic::eigenvalues_of(&kperp_map),
                rho_invariant: c.rho,
                geiser_partner: row.geiser,
                minimality,
                class_size: c.size,
                representative: c.rep.clone(),
            });
        }
        let records: Vec<ConjugacyClassRecord> =
            slots.into_iter().map(|s| s.expect("all ids assigned")).collect();

        if records.iter().map(|r| r.class_size).sum::<u64>() != GROUP_ORDER {
            return Err(BuildError::TableMismatch {
                detail: "class sizes do not sum to the group order".into(),
            });
        }

        Ok(ClassTable::from_records(records, notes))
    }

    /// Rebuild the lookup structures from finished records (also the cache
    /// load path; recomputes and recertifies everything derivable from the
    /// representatives).
    pub(crate) fn from_records(records: Vec<ConjugacyClassRecord>, mut notes: Vec<String>) -> ClassTable {
        let mut by_fingerprint: BTreeMap<ClassFingerprint, Vec<u32>> = BTreeMap::new();
        for r in &records {
            by_fingerprint
                .entry(fingerprint(&r.representative))
                .or_default()
                .push(r.id);
        }
        let certified = by_fingerprint.len() == records.len();
        if !certified {
            notes.push(
                "fingerprint collision between classes; classification falls back to \
                 explicit conjugation orbits"
                    .into(),
            );
        }
        ClassTable { records, by_fingerprint, certified, notes }
    }

    pub fn records(&self) -> &[ConjugacyClassRecord] {
        &self.records
    }

    pub fn record(&self, id: u32) -> &ConjugacyClassRecord {
        assert!((1..=60).contains(&id), "class id must be 1..60, got {id}");
        &self.records[id as usize - 1]
    }

    /// True when the fingerprint key separates all 60 classes (always the
    /// case in practice; the claim is re-proved on every build and load).
    pub fn is_certified(&self) -> bool {
        self.certified
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    /// Id of the class containing `m`.
    pub fn classify_element(&self, m: &Isometry) -> u32 {
        let ids = self
            .by_fingerprint
            .get(&fingerprint(m))
            .expect("every isometry fixing K lies in one of the 60 classes");
        match ids.as_slice() {
            [one] => *one,
            several => self.classify_by_orbit(m, several),
        }
    }

    /// Fallback used only if fingerprints failed certification: walk the
    /// conjugation orbit of `m` until it meets a candidate representative.
    /// Needs no group store; the orbit closes inside the class.
    fn classify_by_orbit(&self, m: &Isometry, ids: &[u32]) -> u32 {
        let targets: Vec<(Packed, u32)> = ids
            .iter()
            .map(|&id| (self.record(id).representative.packed(), id))
            .collect();
        let gens: Vec<Packed> = simple_reflections().iter().map(|s| s.packed()).collect();
        let first = m.packed();
        if let Some(&(_, id)) = targets.iter().find(|(t, _)| *t == first) {
            return id;
        }
        let mut seen: HashSet<Packed> = HashSet::new();
        seen.insert(first);
        let mut stack = vec![first];
        while let Some(x) = stack.pop() {
            for s in &gens {
                let c = packed_mul(&packed_mul(s, &x), s);
                if seen.insert(c) {
                    if let Some(&(_, id)) = targets.iter().find(|(t, _)| *t == c) {
                        return id;
                    }
                    stack.push(c);
                }
            }
        }
        unreachable!("conjugation orbit always reaches the class representative")
    }

    /// Class of the central involution composed with a representative of
    /// `id`; equals the stored partner column (checked during the build).
    pub fn geiser_twist_class(&self, id: u32) -> u32 {
        let g = Isometry::central_involution();
        self.classify_element(&g.compose(&self.record(id).representative))
    }

    pub fn minimality_kind(&self, id: u32) -> Minimality {
        self.record(id).minimality
    }

    /// Number of conjugacy classes of cyclic subgroups: element classes,
    /// merged when one is a primitive power of another.
    pub fn cyclic_subgroup_class_count(&self) -> usize {
        let mut generator_sets: BTreeSet<Vec<u32>> = BTreeSet::new();
        for r in &self.records {
            let mut ids: Vec<u32> = (1..=r.order)
                .filter(|&k| cyclotomic::gcd(k, r.order) == 1)
                .map(|k| self.classify_element(&r.representative.pow(k)))
                .collect();
            ids.sort_unstable();
            ids.dedup();
            generator_sets.insert(ids);
        }
        generator_sets.len()
    }
}

// ---------------------------------------------------------------------------
// Table export
// ---------------------------------------------------------------------------

/// Flat export row; eigenvalues as "n^k" tokens, representative by rows.
#[derive(Serialize)]
pub struct TableRow {
    pub id: u32,
    pub carter_label: String,
    pub order: u32,
    pub eigenvalues: Vec<String>,
    pub rho: u32,
    pub geiser: u32,
    pub minimality: String,
    pub class_size: u64,
    pub representative: [[i64; 8]; 8],
}

pub fn table_rows(table: &ClassTable) -> Vec<TableRow> {
    table
        .records()
        .iter()
        .map(|r| TableRow {
            id: r.id,
            carter_label: r.carter_label.clone(),
            order: r.order,
            eigenvalues: r.eigenvalues.iter().map(|&(n, k)| format!("{n}^{k}")).collect(),
            rho: r.rho_invariant,
            geiser: r.geiser_partner,
            minimality: r.minimality.to_string(),
            class_size: r.class_size,
            representative: *r.representative.matrix(),
        })
        .collect()
}

pub fn table_json(table: &ClassTable) -> String {
    serde_json::to_string_pretty(&table_rows(table)).expect("table rows serialize")
}

/// CSV with a fixed column order; the eigenvalue tokens are joined by
/// spaces and the matrix rows by ';' so no field ever needs quoting.
pub fn table_csv(table: &ClassTable) -> String {
    let mut out = String::from(
        "id,carter_label,order,eigenvalues,rho,geiser,minimality,class_size,representative\n",
    );
    for r in table_rows(table) {
        let eig = r.eigenvalues.join(" ");
        let rep = r
            .representative
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join(";");
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.id, r.carter_label, r.order, eig, r.rho, r.geiser, r.minimality, r.class_size, rep
        ));
    }
    out
}
