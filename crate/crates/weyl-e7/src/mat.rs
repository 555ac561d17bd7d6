//! Exact 8x8 integer matrices acting on divisor class coordinates, plus the
//! validated `Isometry` wrapper.
//!
//! Matrices act on column vectors: column `j` is the image of the `j`-th
//! basis class.  `compose(a, b)` is "apply `b`, then `a`".

use std::fmt;

use pic_e7::{DivisorClass, GRAM_DIAGONAL, K};

pub type Mat = [[i64; 8]; 8];

/// Group elements packed entrywise into `i8`; 64 bytes per element.
/// Entries of lattice isometries fixing K stay single-digit, far inside the
/// `i8` range (there is a hard validation rail at 32).
pub type Packed = [i8; 64];

pub const IDENTITY: Mat = {
    let mut m = [[0i64; 8]; 8];
    let mut i = 0;
    while i < 8 {
        m[i][i] = 1;
        i += 1;
    }
    m
};

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let mut c = [[0i64; 8]; 8];
    for i in 0..8 {
        for k in 0..8 {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..8 {
                c[i][j] += aik * b[k][j];
            }
        }
    }
    c
}

pub fn mat_apply(m: &Mat, v: DivisorClass) -> DivisorClass {
    let mut out = [0i64; 8];
    for i in 0..8 {
        for j in 0..8 {
            out[i] += m[i][j] * v.0[j];
        }
    }
    DivisorClass(out)
}

pub fn mat_trace(m: &Mat) -> i64 {
    (0..8).map(|i| m[i][i]).sum()
}

pub fn pack(m: &Mat) -> Packed {
    let mut p = [0i8; 64];
    for i in 0..8 {
        for j in 0..8 {
            p[i * 8 + j] = i8::try_from(m[i][j]).expect("group element entry exceeds i8");
        }
    }
    p
}

pub fn unpack(p: &Packed) -> Mat {
    let mut m = [[0i64; 8]; 8];
    for i in 0..8 {
        for j in 0..8 {
            m[i][j] = i64::from(p[i * 8 + j]);
        }
    }
    m
}

/// Product of two packed matrices.  Accumulators fit `i32` (8 terms of
/// products of `i8`); the result is packed back with a range check.
pub fn packed_mul(a: &Packed, b: &Packed) -> Packed {
    let mut c = [0i8; 64];
    for i in 0..8 {
        for j in 0..8 {
            let mut acc: i32 = 0;
            for k in 0..8 {
                acc += i32::from(a[i * 8 + k]) * i32::from(b[k * 8 + j]);
            }
            c[i * 8 + j] = i8::try_from(acc).expect("group element entry exceeds i8");
        }
    }
    c
}

/// Coefficients `c[0..=8]` of `det(tI - M)`, ascending degree, `c[8] = 1`.
///
/// Faddeev-LeVerrier recurrence; every division is exact over the integers.
pub fn char_poly(m: &Mat) -> [i64; 9] {
    let mut coeffs = [0i64; 9];
    coeffs[8] = 1;
    let mut a = *m;
    for k in 1..=8i64 {
        let t = mat_trace(&a);
        assert_eq!(t % k, 0, "Faddeev-LeVerrier division must be exact");
        let c = -t / k;
        coeffs[8 - k as usize] = c;
        if k < 8 {
            let mut shifted = a;
            for i in 0..8 {
                shifted[i][i] += c;
            }
            a = mat_mul(m, &shifted);
        }
    }
    coeffs
}

/// Why a matrix failed `Isometry` validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsometryError {
    /// `Mᵀ G M != G` for the diagonal intersection form G.
    FormNotPreserved,
    /// `M·K != K`.
    CanonicalClassMoved,
    /// An entry exceeds the sanity bound of 32.
    EntryOutOfRange { value: i64 },
}

impl fmt::Display for IsometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsometryError::FormNotPreserved => {
                write!(f, "matrix does not preserve the intersection form")
            }
            IsometryError::CanonicalClassMoved => {
                write!(f, "matrix does not fix the canonical class")
            }
            IsometryError::EntryOutOfRange { value } => {
                write!(f, "matrix entry {value} outside the sanity bound 32")
            }
        }
    }
}

impl std::error::Error for IsometryError {}

/// A lattice isometry fixing K: an integer matrix with `Mᵀ G M = G` and
/// `M·K = K`.  These are exactly the elements of the order-2,903,040
/// reflection group generated by the root reflections.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct Isometry {
    m: Mat,
}

impl Isometry {
    pub fn new(m: Mat) -> Result<Isometry, IsometryError> {
        for row in &m {
            for &x in row {
                if x.abs() > 32 {
                    return Err(IsometryError::EntryOutOfRange { value: x });
                }
            }
        }
        // Mᵀ G M = G, entry by entry: column_i · column_j under the form
        // must equal G[i][j].
        for i in 0..8 {
            for j in i..8 {
                let mut acc = 0i64;
                for r in 0..8 {
                    acc += GRAM_DIAGONAL[r] * m[r][i] * m[r][j];
                }
                let expect = if i == j { GRAM_DIAGONAL[i] } else { 0 };
                if acc != expect {
                    return Err(IsometryError::FormNotPreserved);
                }
            }
        }
        if mat_apply(&m, K) != K {
            return Err(IsometryError::CanonicalClassMoved);
        }
        Ok(Isometry { m })
    }

    pub fn identity() -> Isometry {
        Isometry { m: IDENTITY }
    }

    /// The central involution `v ↦ (v·K)K - v`: identity on K, negation on
    /// the orthogonal complement of K.
    pub fn central_involution() -> Isometry {
        let mut m = [[0i64; 8]; 8];
        for j in 0..8 {
            let ej = DivisorClass(std::array::from_fn(|i| i64::from(i == j)));
            let img = ej.geiser_image();
            for i in 0..8 {
                m[i][j] = img.0[i];
            }
        }
        Isometry { m }
    }

    /// Reflection `v ↦ v + (v·α)α` in a root `α` (requires `α·α = -2`,
    /// `α·K = 0`, so that the map is an involutive isometry fixing K).
    pub fn reflection(alpha: DivisorClass) -> Isometry {
        assert_eq!(alpha.self_intersection(), -2, "reflection needs a (-2)-class");
        assert_eq!(alpha.intersect(K), 0, "reflection root must be orthogonal to K");
        let mut m = [[0i64; 8]; 8];
        for j in 0..8 {
            let ej = DivisorClass(std::array::from_fn(|i| i64::from(i == j)));
            let img = ej + ej.intersect(alpha) * alpha;
            for i in 0..8 {
                m[i][j] = img.0[i];
            }
        }
        Isometry { m }
    }

    pub fn matrix(&self) -> &Mat {
        &self.m
    }

    pub fn apply(&self, v: DivisorClass) -> DivisorClass {
        mat_apply(&self.m, v)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        Isometry {
            m: mat_mul(&self.m, &other.m),
        }
    }

    pub fn pow(&self, mut k: u32) -> Isometry {
        let mut acc = Isometry::identity();
        let mut base = *self;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            k >>= 1;
        }
        acc
    }

    /// Multiplicative order, by iterated multiplication (capped; isometries
    /// of this lattice have order at most 30).
    pub fn order(&self) -> u32 {
        let mut acc = *self;
        for k in 1..=120 {
            if acc.m == IDENTITY {
                return k;
            }
            acc = acc.compose(self);
        }
        panic!("order exceeds cap; not a finite-order lattice isometry?");
    }

    pub fn char_poly(&self) -> [i64; 9] {
        char_poly(&self.m)
    }

    pub fn trace(&self) -> i64 {
        mat_trace(&self.m)
    }

    pub fn packed(&self) -> Packed {
        pack(&self.m)
    }

    /// Rebuilds an isometry from packed storage produced by this crate.
    pub fn from_packed(p: &Packed) -> Isometry {
        let m = unpack(p);
        debug_assert!(Isometry::new(m).is_ok());
        Isometry { m }
    }
}

impl serde::Serialize for Isometry {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.m.serialize(s)
    }
}

/// Deserialization revalidates, so untrusted cache files cannot smuggle in a
/// non-isometry.
impl<'de> serde::Deserialize<'de> for Isometry {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let m = Mat::deserialize(d)?;
        Isometry::new(m).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use pic_e7::e;

    #[test]
    fn identity_validates() {
        assert!(Isometry::new(IDENTITY).is_ok());
    }

    #[test]
    fn central_involution_squares_to_identity() {
        let g = Isometry::central_involution();
        assert!(Isometry::new(*g.matrix()).is_ok());
        assert_eq!(g.compose(&g), Isometry::identity());
        assert_eq!(g.apply(K), K);
        assert_eq!(g.apply(e(1)), -K - e(1));
    }

    #[test]
    fn char_poly_of_identity() {
        // (t - 1)^8 = t^8 - 8t^7 + 28t^6 - 56t^5 + 70t^4 - 56t^3 + 28t^2 - 8t + 1
        assert_eq!(
            char_poly(&IDENTITY),
            [1, -8, 28, -56, 70, -56, 28, -8, 1]
        );
    }

    #[test]
    fn rejects_non_isometry() {
        let mut m = IDENTITY;
        m[0][0] = 2;
        assert_eq!(Isometry::new(m), Err(IsometryError::FormNotPreserved));
        // A form-preserving matrix that moves K: negation of everything.
        let neg = std::array::from_fn(|i| std::array::from_fn(|j| -IDENTITY[i][j]));
        assert_eq!(Isometry::new(neg), Err(IsometryError::CanonicalClassMoved));
    }

    #[test]
    fn packed_roundtrip() {
        let g = Isometry::central_involution();
        assert_eq!(Isometry::from_packed(&g.packed()), g);
        let s = Isometry::reflection(e(1) - e(2));
        assert_eq!(
            packed_mul(&s.packed(), &g.packed()),
            s.compose(&g).packed()
        );
    }
}
