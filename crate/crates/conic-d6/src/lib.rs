//! The rank-8 divisor lattice of a conic bundle with six degenerate fibres,
//! in the basis `(C, F, E1, ..., E6)`: a section class `C` with `C² = 0`,
//! the fibre class `F`, and the six blown-up fibre components.
//!
//! The only nonzero products among basis classes are `C·F = 1` and
//! `E_i·E_i = -1`.  The canonical class is `K = -2C - 2F + E1 + ... + E6`
//! with `K² = 2` and `K·F = -2`, so the lattice is isomorphic to the
//! `(L, E1..E7)` lattice of `pic_e7`; `embed_into_e7` realizes one fixed
//! isomorphism.
//!
//! The symmetries fixing `F` and `K` form the group `(Z/2)^5 ⋊ S6` of order
//! 23040: permutations of the six degenerate fibres combined with swaps of
//! the two components inside an even number of fibres ([`WD6Element`]).
//! [`sections_selfint`] enumerates section classes of a given
//! self-intersection, optionally filtered against constraint classes.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use pic_e7::DivisorClass;
use weyl_e7::Isometry;

/// A divisor class as 8 integer coordinates over `(C, F, E1, ..., E6)`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CBClass(pub [i64; 8]);

/// The base section class `C`, with `C² = 0` and `C·F = 1`.
pub const C: CBClass = CBClass([1, 0, 0, 0, 0, 0, 0, 0]);

/// The fibre class `F`, with `F² = 0`.
pub const F: CBClass = CBClass([0, 1, 0, 0, 0, 0, 0, 0]);

/// The canonical class `K = -2C - 2F + E1 + ... + E6`; `K² = 2`, `K·F = -2`.
pub const K_CB: CBClass = CBClass([-2, -2, 1, 1, 1, 1, 1, 1]);

/// The 2-section `D = 2C + F - E1 - ... - E6`, the unique class of shape
/// `2C + aF - Σ b_i E_i` with negative self-intersection that pairs
/// non-negatively with every section of self-intersection -1 (see
/// [`negative_two_sections`]).  `D² = -2`, `D·F = 2`, and `D` is orthogonal
/// to every `C - E_i`.
pub const D: CBClass = CBClass([2, 1, -1, -1, -1, -1, -1, -1]);

/// The 2-section `R = 2C + 3F - E1 - ... - E6`, with `R² = 6` and `R·F = 2`.
pub const R: CBClass = CBClass([2, 3, -1, -1, -1, -1, -1, -1]);

/// The `i`-th exceptional fibre component `E_i`, for `i` in `1..=6`.
pub const fn e(i: usize) -> CBClass {
    assert!(i >= 1 && i <= 6);
    let mut c = [0i64; 8];
    c[i + 1] = 1;
    CBClass(c)
}

/// Intersection number under the form with `C·F = 1`, `E_i² = -1`, all
/// other basis products zero.
pub fn intersect_cb(a: CBClass, b: CBClass) -> i64 {
    let mut acc = a.0[0] * b.0[1] + a.0[1] * b.0[0];
    for i in 2..8 {
        acc -= a.0[i] * b.0[i];
    }
    acc
}

/// The canonical class constant as a function, for symmetry with the
/// `(L, E1..E7)` lattice API.
pub fn canonical_class_cb() -> CBClass {
    K_CB
}

impl CBClass {
    pub const ZERO: CBClass = CBClass([0; 8]);

    pub fn intersect(self, other: CBClass) -> i64 {
        intersect_cb(self, other)
    }

    pub fn self_intersection(self) -> i64 {
        intersect_cb(self, self)
    }
}

impl std::ops::Add for CBClass {
    type Output = CBClass;
    fn add(self, rhs: CBClass) -> CBClass {
        CBClass(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl std::ops::Sub for CBClass {
    type Output = CBClass;
    fn sub(self, rhs: CBClass) -> CBClass {
        CBClass(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl std::ops::Neg for CBClass {
    type Output = CBClass;
    fn neg(self) -> CBClass {
        CBClass(std::array::from_fn(|i| -self.0[i]))
    }
}

impl std::ops::Mul<CBClass> for i64 {
    type Output = CBClass;
    fn mul(self, rhs: CBClass) -> CBClass {
        CBClass(std::array::from_fn(|i| self * rhs.0[i]))
    }
}

impl fmt::Display for CBClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};", self.0[0], self.0[1])?;
        for i in 2..8 {
            write!(f, "{}{}", if i == 2 { " " } else { "," }, self.0[i])?;
        }
        write!(f, ")")
    }
}

/// Why a flip-set/permutation pair fails [`WD6Element`] validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WD6Error {
    /// The flip set has odd size; only even flip sets preserve the lattice.
    OddFlipSet { size: usize },
    /// An index outside `1..=6`.
    IndexOutOfRange { index: usize },
    /// The same index listed twice in the flip set.
    DuplicateFlip { index: usize },
    /// The permutation images do not form a bijection of `{1..6}`.
    NotAPermutation,
}

impl fmt::Display for WD6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WD6Error::OddFlipSet { size } => {
                write!(f, "flip set has odd size {size}")
            }
            WD6Error::IndexOutOfRange { index } => {
                write!(f, "index {index} outside 1..=6")
            }
            WD6Error::DuplicateFlip { index } => {
                write!(f, "index {index} repeated in flip set")
            }
            WD6Error::NotAPermutation => {
                write!(f, "images do not form a permutation of 1..=6")
            }
        }
    }
}

impl std::error::Error for WD6Error {}

/// An element `ι_S · σ` of the group `(Z/2)^5 ⋊ S6`: a permutation `σ` of
/// the six degenerate fibres followed by component swaps `ι_S` over an even
/// set `S` of fibre indices.
///
/// The action on classes ([`apply_wd6`]) is `v ↦ ι_S(σ(v))` where `σ`
/// permutes the `E_i` and `ι_S` maps `E_i ↦ F - E_i` for `i ∈ S`,
/// `C ↦ C + (|S|/2)F - Σ_{i∈S} E_i`, fixing `F`.  Evenness of `S` is a
/// type invariant, so the action is always defined and integral.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct WD6Element {
    /// Bit `i-1` set iff `i ∈ S`; the number of set bits is even.
    flips: u8,
    /// `perm[i-1] = σ(i) - 1` (0-based images).
    perm: [u8; 6],
}

impl WD6Element {
    /// Build `ι_S · σ` from a flip set (1-based indices) and permutation
    /// images `perm[k] = σ(k+1)` (1-based).
    pub fn new(flip_set: &[usize], perm: [usize; 6]) -> Result<WD6Element, WD6Error> {
        let mut flips = 0u8;
        for &i in flip_set {
            if !(1..=6).contains(&i) {
                return Err(WD6Error::IndexOutOfRange { index: i });
            }
            let bit = 1u8 << (i - 1);
            if flips & bit != 0 {
                return Err(WD6Error::DuplicateFlip { index: i });
            }
            flips |= bit;
        }
        if flips.count_ones() % 2 != 0 {
            return Err(WD6Error::OddFlipSet {
                size: flips.count_ones() as usize,
            });
        }
        let mut p = [0u8; 6];
        let mut seen = [false; 6];
        for k in 0..6 {
            let img = perm[k];
            if !(1..=6).contains(&img) {
                return Err(WD6Error::IndexOutOfRange { index: img });
            }
            if seen[img - 1] {
                return Err(WD6Error::NotAPermutation);
            }
            seen[img - 1] = true;
            p[k] = (img - 1) as u8;
        }
        Ok(WD6Element { flips, perm: p })
    }

    pub fn identity() -> WD6Element {
        WD6Element {
            flips: 0,
            perm: [0, 1, 2, 3, 4, 5],
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == WD6Element::identity()
    }

    /// The flip set `S` as sorted 1-based indices.
    pub fn flip_set(&self) -> Vec<usize> {
        (1..=6).filter(|i| self.flips >> (i - 1) & 1 == 1).collect()
    }

    /// Permutation images `σ(1), ..., σ(6)` (1-based).
    pub fn permutation(&self) -> [usize; 6] {
        std::array::from_fn(|k| self.perm[k] as usize + 1)
    }

    /// Group product `self · other`, acting as "apply `other`, then `self`".
    ///
    /// Since `σ ι_S σ⁻¹ = ι_{σ(S)}`, the product of `ι_{S1}σ1` and
    /// `ι_{S2}σ2` is `ι_{S1 Δ σ1(S2)} (σ1σ2)` with `Δ` the symmetric
    /// difference.
    pub fn compose(&self, other: &WD6Element) -> WD6Element {
        let mut moved = 0u8;
        for j in 0..6 {
            if other.flips >> j & 1 == 1 {
                moved |= 1 << self.perm[j];
            }
        }
        WD6Element {
            flips: self.flips ^ moved,
            perm: std::array::from_fn(|k| self.perm[other.perm[k] as usize]),
        }
    }

    pub fn inverse(&self) -> WD6Element {
        let mut inv = [0u8; 6];
        for k in 0..6 {
            inv[self.perm[k] as usize] = k as u8;
        }
        let mut moved = 0u8;
        for j in 0..6 {
            if self.flips >> j & 1 == 1 {
                moved |= 1 << inv[j];
            }
        }
        WD6Element {
            flips: moved,
            perm: inv,
        }
    }

    /// Multiplicative order; at most 30 in this group.
    pub fn order(&self) -> u32 {
        let mut acc = *self;
        let mut n = 1;
        while !acc.is_identity() {
            acc = acc.compose(self);
            n += 1;
            assert!(n <= 64, "order bound exceeded");
        }
        n
    }
}

/// Action of `g = ι_S σ` on a class: permute the `E_i` by `σ`, then apply
/// the component swaps over `S`.  Preserves the form, fixes `F` and `K`.
pub fn apply_wd6(g: &WD6Element, v: CBClass) -> CBClass {
    let c = v.0[0];
    let f = v.0[1];
    // e[j] is the E_{j+1} coefficient after permuting: σ(E_i) = E_{σ(i)}.
    let mut e = [0i64; 6];
    for i in 0..6 {
        e[g.perm[i] as usize] = v.0[2 + i];
    }
    let half = i64::from(g.flips.count_ones() / 2);
    let mut out = [0i64; 8];
    out[0] = c;
    out[1] = f + c * half;
    for j in 0..6 {
        if g.flips >> j & 1 == 1 {
            out[1] += e[j];
            out[2 + j] = -c - e[j];
        } else {
            out[2 + j] = e[j];
        }
    }
    CBClass(out)
}

/// All 23040 elements of `(Z/2)^5 ⋊ S6`, by closure of the generators
/// `ι_{12}` and the adjacent transpositions, in sorted order.
pub fn enumerate_wd6() -> Vec<WD6Element> {
    let mut gens = vec![WD6Element::new(&[1, 2], [1, 2, 3, 4, 5, 6]).unwrap()];
    for i in 1..6 {
        let mut p = [1, 2, 3, 4, 5, 6];
        p.swap(i - 1, i);
        gens.push(WD6Element::new(&[], p).unwrap());
    }
    let mut seen: HashSet<WD6Element> = HashSet::new();
    let mut frontier = vec![WD6Element::identity()];
    seen.insert(frontier[0]);
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &frontier {
            for s in &gens {
                let h = s.compose(g);
                if seen.insert(h) {
                    next.push(h);
                }
            }
        }
        frontier = next;
    }
    let mut all: Vec<WD6Element> = seen.into_iter().collect();
    all.sort_unstable();
    all
}

/// Degrees of the base closed points under the degenerate fibres for a
/// bundle whose symmetry generator is `g`: the cycle type of `σ` on the six
/// fibres, ascending.
pub fn fibre_point_degrees(g: &WD6Element) -> Vec<u32> {
    let mut seen = [false; 6];
    let mut degs = Vec::new();
    for start in 0..6 {
        if seen[start] {
            continue;
        }
        let mut len = 0u32;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            j = g.perm[j] as usize;
            len += 1;
        }
        degs.push(len);
    }
    degs.sort_unstable();
    degs
}

/// All section classes `C + aF - Σ b_i E_i` (with `a ≥ 0`, `b_i ∈ {0,1}`)
/// of self-intersection `target` pairing non-negatively with every
/// constraint class, in sorted order.
///
/// The window `a ≤ (target + 6)/2` is complete: the self-intersection is
/// `2a - Σ b_i`, so `2a = target + Σ b_i ≤ target + 6`.
pub fn sections_selfint(target: i64, constraints: &[CBClass]) -> Vec<CBClass> {
    let mut out = Vec::new();
    let a_max = (target + 6).div_euclid(2);
    let mut a = 0;
    while a <= a_max {
        for mask in 0u32..64 {
            let mut v = [0i64; 8];
            v[0] = 1;
            v[1] = a;
            for i in 0..6 {
                v[2 + i] = -i64::from(mask >> i & 1);
            }
            let cand = CBClass(v);
            if cand.self_intersection() == target
                && constraints.iter().all(|&c| intersect_cb(cand, c) >= 0)
            {
                out.push(cand);
            }
        }
        a += 1;
    }
    out.sort_unstable();
    out
}

/// All classes `2C + aF - Σ b_i E_i` (`0 ≤ a ≤ 6`, `b_i ∈ {0,1,2}`) with
/// negative self-intersection that either equal [`D`] or pair
/// non-negatively with `D` and with all 32 sections of self-intersection
/// -1.  Returns exactly `[D]`.
///
/// The window is complete for the classes the filter can accept: pairing
/// against `C - E_i` forces `b_i ≤ a`, pairing against the fibre components
/// `E_i` and `F - E_i` forces `0 ≤ b_i ≤ 2`, and then negative
/// self-intersection `4a < Σ b_i² ≤ 24` forces `a ≤ 6`.
pub fn negative_two_sections() -> Vec<CBClass> {
    let sections = sections_selfint(-1, &[]);
    let mut out = Vec::new();
    for a in 0..=6i64 {
        for code in 0u32..729 {
            let mut v = [0i64; 8];
            v[0] = 2;
            v[1] = a;
            let mut rest = code;
            for i in 0..6 {
                v[2 + i] = -i64::from(rest % 3);
                rest /= 3;
            }
            let h = CBClass(v);
            if h.self_intersection() >= 0 {
                continue;
            }
            if h == D
                || (intersect_cb(h, D) >= 0
                    && sections.iter().all(|&s| intersect_cb(h, s) >= 0))
            {
                out.push(h);
            }
        }
    }
    out.sort_unstable();
    out
}

/// The fixed isomorphism onto the `(L, E1..E7)` lattice:
/// `C ↦ L-E1`, `F ↦ L-E2`, `E_i ↦ E_{i+2}` for `i = 1..5`, and
/// `E6 ↦ L-E1-E2`.  Preserves intersection numbers and sends the canonical
/// class to the canonical class.
pub fn embed_into_e7(v: CBClass) -> DivisorClass {
    let c = v.0[0];
    let f = v.0[1];
    let e6 = v.0[7];
    let mut out = [0i64; 8];
    out[0] = c + f + e6;
    out[1] = -c - e6;
    out[2] = -f - e6;
    for i in 0..5 {
        out[3 + i] = v.0[2 + i];
    }
    DivisorClass(out)
}

/// Inverse of [`embed_into_e7`]: `L ↦ C+F-E6`, `E1 ↦ F-E6`, `E2 ↦ C-E6`,
/// `E_i ↦ E_{i-2}` for `i = 3..7`.
pub fn embed_from_e7(v: DivisorClass) -> CBClass {
    let a = v.0[0];
    let b1 = v.0[1];
    let b2 = v.0[2];
    let mut out = [0i64; 8];
    out[0] = a + b2;
    out[1] = a + b1;
    for i in 0..5 {
        out[2 + i] = v.0[3 + i];
    }
    out[7] = -a - b1 - b2;
    CBClass(out)
}

/// Transport `g` through [`embed_into_e7`] to an isometry of the
/// `(L, E1..E7)` lattice.  The result fixes the image of `F`.
pub fn wd6_to_isometry(g: &WD6Element) -> Isometry {
    let mut m = [[0i64; 8]; 8];
    for j in 0..8 {
        let basis = DivisorClass(std::array::from_fn(|i| i64::from(i == j)));
        let img = embed_into_e7(apply_wd6(g, embed_from_e7(basis)));
        for i in 0..8 {
            m[i][j] = img.0[i];
        }
    }
    Isometry::new(m).expect("transported action preserves the form and fixes K")
}

/// Conjugacy class id (1..=60) of the transported element in the full
/// isometry group of the `(L, E1..E7)` lattice.
pub fn wd6_class_in_e7(g: &WD6Element) -> u32 {
    weyl_e7::class_table().classify_element(&wd6_to_isometry(g))
}

impl fmt::Display for WD6Element {
    /// Text form: flip set in braces after `i`, then cycles of `σ`, e.g.
    /// `i{1,2,3,5}(34)(56)`; the identity prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        if self.flips != 0 {
            write!(f, "i{{")?;
            let mut first = true;
            for i in self.flip_set() {
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{i}")?;
                first = false;
            }
            write!(f, "}}")?;
        }
        let mut seen = [false; 6];
        for start in 0..6 {
            if seen[start] || self.perm[start] as usize == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                write!(f, "{}", j + 1)?;
                j = self.perm[j] as usize;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Why a string fails to parse as a [`WD6Element`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseWD6Error {
    /// Unexpected character or premature end at the given byte offset.
    Syntax { at: usize, expected: &'static str },
    /// An index appears in two cycles, or twice in one cycle.
    DuplicateCycleEntry { index: usize },
    /// The parsed data fails element validation.
    Element(WD6Error),
}

impl fmt::Display for ParseWD6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseWD6Error::Syntax { at, expected } => {
                write!(f, "syntax error at byte {at}: expected {expected}")
            }
            ParseWD6Error::DuplicateCycleEntry { index } => {
                write!(f, "index {index} appears twice in the cycles")
            }
            ParseWD6Error::Element(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ParseWD6Error {}

impl FromStr for WD6Element {
    type Err = ParseWD6Error;

    /// Parse the [`fmt::Display`] form: `1`, or an optional `i{...}` flip
    /// set followed by cycles like `(34)(56)`.
    fn from_str(s: &str) -> Result<WD6Element, ParseWD6Error> {
        let s = s.trim();
        if s == "1" {
            return Ok(WD6Element::identity());
        }
        let bytes = s.as_bytes();
        let mut pos = 0;
        let mut flip_set = Vec::new();
        if bytes.first() == Some(&b'i') {
            pos += 1;
            if bytes.get(pos) != Some(&b'{') {
                return Err(ParseWD6Error::Syntax {
                    at: pos,
                    expected: "'{' after 'i'",
                });
            }
            pos += 1;
            loop {
                match bytes.get(pos) {
                    Some(d @ b'1'..=b'9') => {
                        flip_set.push(usize::from(d - b'0'));
                        pos += 1;
                    }
                    _ => {
                        return Err(ParseWD6Error::Syntax {
                            at: pos,
                            expected: "digit in flip set",
                        })
                    }
                }
                match bytes.get(pos) {
                    Some(&b',') => pos += 1,
                    Some(&b'}') => {
                        pos += 1;
                        break;
                    }
                    _ => {
                        return Err(ParseWD6Error::Syntax {
                            at: pos,
                            expected: "',' or '}' in flip set",
                        })
                    }
                }
            }
        }
        let mut perm = [1usize, 2, 3, 4, 5, 6];
        let mut used = [false; 6];
        while pos < bytes.len() {
            if bytes[pos] != b'(' {
                return Err(ParseWD6Error::Syntax {
                    at: pos,
                    expected: "'(' starting a cycle",
                });
            }
            pos += 1;
            let mut cycle = Vec::new();
            while let Some(d @ b'1'..=b'9') = bytes.get(pos) {
                cycle.push(usize::from(d - b'0'));
                pos += 1;
            }
            if bytes.get(pos) != Some(&b')') {
                return Err(ParseWD6Error::Syntax {
                    at: pos,
                    expected: "digit or ')' in cycle",
                });
            }
            pos += 1;
            if cycle.len() < 2 {
                return Err(ParseWD6Error::Syntax {
                    at: pos,
                    expected: "at least two entries in a cycle",
                });
            }
            for &i in &cycle {
                if !(1..=6).contains(&i) {
                    return Err(ParseWD6Error::Element(WD6Error::IndexOutOfRange {
                        index: i,
                    }));
                }
                if used[i - 1] {
                    return Err(ParseWD6Error::DuplicateCycleEntry { index: i });
                }
                used[i - 1] = true;
            }
            for k in 0..cycle.len() {
                perm[cycle[k] - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        if flip_set.is_empty() && !used.iter().any(|&u| u) {
            return Err(ParseWD6Error::Syntax {
                at: 0,
                expected: "'1', a flip set, or a cycle",
            });
        }
        WD6Element::new(&flip_set, perm).map_err(ParseWD6Error::Element)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gram_relations() {
        assert_eq!(intersect_cb(C, C), 0);
        assert_eq!(intersect_cb(C, F), 1);
        assert_eq!(intersect_cb(F, F), 0);
        for i in 1..=6 {
            assert_eq!(intersect_cb(e(i), e(i)), -1);
            assert_eq!(intersect_cb(C, e(i)), 0);
            assert_eq!(intersect_cb(F, e(i)), 0);
            for j in i + 1..=6 {
                assert_eq!(intersect_cb(e(i), e(j)), 0);
            }
        }
        assert_eq!(intersect_cb(K_CB, K_CB), 2);
        assert_eq!(intersect_cb(K_CB, F), -2);
        assert_eq!(canonical_class_cb(), K_CB);
        let c123 = C - e(1) - e(2) - e(3);
        assert_eq!(c123.self_intersection(), -3);
    }

    #[test]
    fn distinguished_two_sections() {
        assert_eq!(D, 2 * C + F - e(1) - e(2) - e(3) - e(4) - e(5) - e(6));
        assert_eq!(D.self_intersection(), -2);
        assert_eq!(intersect_cb(D, F), 2);
        for i in 1..=6 {
            assert_eq!(intersect_cb(D, C - e(i)), 0);
        }
        assert_eq!(R, 2 * C + 3 * F - e(1) - e(2) - e(3) - e(4) - e(5) - e(6));
        assert_eq!(R.self_intersection(), 6);
        assert_eq!(intersect_cb(R, F), 2);
    }

    #[test]
    fn generator_action_formulas() {
        let i12 = WD6Element::new(&[1, 2], [1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(apply_wd6(&i12, C), C + F - e(1) - e(2));
        assert_eq!(apply_wd6(&i12, e(1)), F - e(1));
        assert_eq!(apply_wd6(&i12, e(3)), e(3));
        assert_eq!(apply_wd6(&i12, F), F);
        let rot: WD6Element = "(123)".parse().unwrap();
        assert_eq!(apply_wd6(&rot, e(1)), e(2));
        assert_eq!(apply_wd6(&rot, e(3)), e(1));
    }

    #[test]
    fn compose_matches_action() {
        let a: WD6Element = "i{1,2,3,5}(34)(56)".parse().unwrap();
        let b: WD6Element = "i{1,3}(12)(3456)".parse().unwrap();
        let ab = a.compose(&b);
        for j in 0..8 {
            let basis = CBClass(std::array::from_fn(|i| i64::from(i == j)));
            assert_eq!(apply_wd6(&ab, basis), apply_wd6(&a, apply_wd6(&b, basis)));
        }
        assert!(a.compose(&a.inverse()).is_identity());
        assert!(b.inverse().compose(&b).is_identity());
    }

    #[test]
    fn odd_flip_set_rejected() {
        let err = WD6Element::new(&[1, 2, 3], [1, 2, 3, 4, 5, 6]).unwrap_err();
        assert_eq!(err, WD6Error::OddFlipSet { size: 3 });
        assert_eq!(
            WD6Element::new(&[1, 1], [1, 2, 3, 4, 5, 6]).unwrap_err(),
            WD6Error::DuplicateFlip { index: 1 }
        );
        assert_eq!(
            WD6Element::new(&[], [1, 2, 3, 4, 5, 5]).unwrap_err(),
            WD6Error::NotAPermutation
        );
    }

    #[test]
    fn display_round_trip_basics() {
        assert_eq!(WD6Element::identity().to_string(), "1");
        assert_eq!("1".parse::<WD6Element>().unwrap(), WD6Element::identity());
        let g: WD6Element = "i{1,2,3,5}(34)(56)".parse().unwrap();
        assert_eq!(g.to_string(), "i{1,2,3,5}(34)(56)");
        assert_eq!(g.flip_set(), vec![1, 2, 3, 5]);
        assert_eq!(g.permutation(), [1, 2, 4, 3, 6, 5]);
        assert!("i{1,2,3}(45)".parse::<WD6Element>().is_err());
        assert!("(17)".parse::<WD6Element>().is_err());
        assert!("(122)".parse::<WD6Element>().is_err());
        assert!("i{1,2".parse::<WD6Element>().is_err());
        assert!("".parse::<WD6Element>().is_err());
    }

    #[test]
    fn embed_round_trip_on_basis() {
        for j in 0..8 {
            let cb = CBClass(std::array::from_fn(|i| i64::from(i == j)));
            assert_eq!(embed_from_e7(embed_into_e7(cb)), cb);
            let dc = DivisorClass(std::array::from_fn(|i| i64::from(i == j)));
            assert_eq!(embed_into_e7(embed_from_e7(dc)), dc);
        }
        assert_eq!(embed_into_e7(K_CB), pic_e7::K);
    }
}
