//! Integer model of the rank-8 divisor class lattice of a blowup of the
//! projective plane at seven points.
//!
//! Classes are written in the basis `(L, E1, ..., E7)`: the pullback of a
//! line and the seven exceptional divisors.  The intersection form is
//! diagonal `(+1, -1, -1, -1, -1, -1, -1, -1)` in this basis and the
//! canonical class is `K = -3L + E1 + ... + E7`, so `K·K = 2`.
//!
//! Everything here is exact machine arithmetic; coefficients of the classes
//! this crate enumerates never leave single digits.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

/// A divisor class as 8 integer coordinates `(d; m1..m7)` over `(L, E1..E7)`.
///
/// Serializes as a plain JSON array of 8 integers.
#[derive(
    Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct DivisorClass(pub [i64; 8]);

/// Diagonal of the intersection form over the basis `(L, E1..E7)`.
pub const GRAM_DIAGONAL: [i64; 8] = [1, -1, -1, -1, -1, -1, -1, -1];

/// The class of a line, `L`.
pub const L: DivisorClass = DivisorClass([1, 0, 0, 0, 0, 0, 0, 0]);

/// The canonical class `K = -3L + E1 + ... + E7`.
pub const K: DivisorClass = DivisorClass([-3, 1, 1, 1, 1, 1, 1, 1]);

/// The `i`-th exceptional basis class `E_i`, for `i` in `1..=7`.
pub const fn e(i: usize) -> DivisorClass {
    assert!(i >= 1 && i <= 7);
    let mut c = [0i64; 8];
    c[i] = 1;
    DivisorClass(c)
}

impl DivisorClass {
    pub const ZERO: DivisorClass = DivisorClass([0; 8]);

    /// Intersection number `self · other` under the diagonal form.
    pub fn intersect(self, other: DivisorClass) -> i64 {
        let mut acc = 0;
        for i in 0..8 {
            acc += GRAM_DIAGONAL[i] * self.0[i] * other.0[i];
        }
        acc
    }

    pub fn self_intersection(self) -> i64 {
        self.intersect(self)
    }

    /// Degree against the anticanonical polarization, `-K · self`.
    pub fn anticanonical_degree(self) -> i64 {
        -K.intersect(self)
    }

    /// Image under the involution `v ↦ (v·K)K - v`.
    ///
    /// This fixes `K`, negates the orthogonal complement of `K`, and sends a
    /// class `T` with `T·K = -1` to `-K - T`.
    pub fn geiser_image(self) -> DivisorClass {
        let t = self.intersect(K);
        let mut out = [0i64; 8];
        for i in 0..8 {
            out[i] = t * K.0[i] - self.0[i];
        }
        DivisorClass(out)
    }
}

impl std::ops::Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl std::ops::Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl std::ops::Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass(std::array::from_fn(|i| -self.0[i]))
    }
}

impl std::ops::Mul<DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass(std::array::from_fn(|i| self * rhs.0[i]))
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.0[0])?;
        for i in 1..8 {
            write!(f, "{}{}", if i == 1 { " " } else { "," }, self.0[i])?;
        }
        write!(f, ")")
    }
}

/// `c·c + c·K` is odd, so `c` cannot satisfy the adjunction formula for a
/// curve class; the input is malformed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusParityError {
    pub class: DivisorClass,
}

impl fmt::Display for GenusParityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "class {} has odd c\u{b7}c + c\u{b7}K; arithmetic genus undefined",
            self.class
        )
    }
}

impl std::error::Error for GenusParityError {}

/// Arithmetic genus `1 + (c·c + c·K)/2` from the adjunction formula.
///
/// Negative values are legitimate output: they certify that no irreducible
/// curve has this class.  An odd `c·c + c·K` is reported as an error, though
/// on this lattice the parity is automatically even for every integer vector
/// (`d(d+3)` and `m(m+1)` are even), so the branch only guards against a
/// future change of basis conventions.
pub fn arithmetic_genus(c: DivisorClass) -> Result<i64, GenusParityError> {
    let n = c.self_intersection() + c.intersect(K);
    if n.rem_euclid(2) != 0 {
        return Err(GenusParityError { class: c });
    }
    Ok(1 + n / 2)
}

/// Enumerates classes with the given self-intersection and degree against K
/// over the window `|d| <= 3`, `|m_i| <= 2`, in lexicographic order.
///
/// The window is exhaustive for the two families this crate serves (the 56
/// classes with `v² = v·K = -1` and the 126 with `v² = -2`, `v·K = 0`); both
/// are known to have all coordinates within it.
fn enumerate_classes(self_int: i64, k_degree: i64) -> Vec<DivisorClass> {
    let mut out = Vec::new();
    let mut c = [0i64; 8];
    for d in -3..=3 {
        c[0] = d;
        enumerate_rest(&mut c, 1, self_int, k_degree, &mut out);
    }
    out
}

fn enumerate_rest(
    c: &mut [i64; 8],
    idx: usize,
    self_int: i64,
    k_degree: i64,
    out: &mut Vec<DivisorClass>,
) {
    if idx == 8 {
        let v = DivisorClass(*c);
        if v.self_intersection() == self_int && v.intersect(K) == k_degree {
            out.push(v);
        }
        return;
    }
    for m in -2..=2 {
        c[idx] = m;
        enumerate_rest(c, idx + 1, self_int, k_degree, out);
    }
}

/// The 56 classes `v` with `v·v = -1` and `v·K = -1`, in lexicographic order.
pub fn exceptional_classes() -> &'static [DivisorClass] {
    static CACHE: OnceLock<Vec<DivisorClass>> = OnceLock::new();
    CACHE.get_or_init(|| enumerate_classes(-1, -1))
}

/// The 126 classes `v` with `v·v = -2` and `v·K = 0`, in lexicographic order.
pub fn roots() -> &'static [DivisorClass] {
    static CACHE: OnceLock<Vec<DivisorClass>> = OnceLock::new();
    CACHE.get_or_init(|| enumerate_classes(-2, 0))
}
