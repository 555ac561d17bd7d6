//! The reference class table: 60 rows of (Carter graph label, order,
//! eigenvalues on the orthogonal complement of K, invariant rank, partner
//! under the central involution).
//!
//! Eigenvalue multisets are stored as cyclotomic factor multisets of the
//! rank-7 action; `(n, m)` means `Φ_n^m`.  Two published misprints are
//! corrected here and covered by the consistency tests below:
//! row 50 lists order 2 although its eigenvalues contain i (true order 4),
//! and row 56 lists one eigenvalue as a primitive 8th root inside an
//! otherwise-18th-order collection (it is -ξ9², giving Φ2·Φ18).

pub struct RowData {
    pub id: u32,
    pub carter: &'static str,
    pub order: u32,
    /// Cyclotomic factors of the rank-7 action orthogonal to K.
    pub kperp_factors: &'static [(u32, u32)],
    pub rho: u32,
    pub geiser: u32,
}

pub const ROWS: [RowData; 60] = [
    RowData { id: 1, carter: "∅", order: 1, kperp_factors: &[(1, 7)], rho: 8, geiser: 49 },
    RowData { id: 2, carter: "A1", order: 2, kperp_factors: &[(1, 6), (2, 1)], rho: 7, geiser: 31 },
    RowData { id: 3, carter: "A1^2", order: 2, kperp_factors: &[(1, 5), (2, 2)], rho: 6, geiser: 18 },
    RowData { id: 4, carter: "A2", order: 3, kperp_factors: &[(1, 5), (3, 1)], rho: 6, geiser: 53 },
    RowData { id: 5, carter: "A1^3", order: 2, kperp_factors: &[(1, 4), (2, 3)], rho: 5, geiser: 9 },
    RowData { id: 6, carter: "A1^3", order: 2, kperp_factors: &[(1, 4), (2, 3)], rho: 5, geiser: 10 },
    RowData { id: 7, carter: "A2xA1", order: 6, kperp_factors: &[(1, 4), (2, 1), (3, 1)], rho: 5, geiser: 40 },
    RowData { id: 8, carter: "A3", order: 4, kperp_factors: &[(1, 4), (2, 1), (4, 1)], rho: 5, geiser: 33 },
    RowData { id: 9, carter: "A1^4", order: 2, kperp_factors: &[(1, 3), (2, 4)], rho: 4, geiser: 5 },
    RowData { id: 10, carter: "A1^4", order: 2, kperp_factors: &[(1, 3), (2, 4)], rho: 4, geiser: 6 },
    RowData { id: 11, carter: "A2xA1^2", order: 6, kperp_factors: &[(1, 3), (2, 2), (3, 1)], rho: 4, geiser: 27 },
    RowData { id: 12, carter: "A2^2", order: 3, kperp_factors: &[(1, 3), (3, 2)], rho: 4, geiser: 55 },
    RowData { id: 13, carter: "A3xA1", order: 4, kperp_factors: &[(1, 3), (2, 2), (4, 1)], rho: 4, geiser: 21 },
    RowData { id: 14, carter: "A3xA1", order: 4, kperp_factors: &[(1, 3), (2, 2), (4, 1)], rho: 4, geiser: 22 },
    RowData { id: 15, carter: "A4", order: 5, kperp_factors: &[(1, 3), (5, 1)], rho: 4, geiser: 54 },
    RowData { id: 16, carter: "D4", order: 6, kperp_factors: &[(1, 3), (2, 2), (6, 1)], rho: 4, geiser: 19 },
    RowData { id: 17, carter: "D4(a1)", order: 4, kperp_factors: &[(1, 3), (4, 2)], rho: 4, geiser: 50 },
    RowData { id: 18, carter: "A1^5", order: 2, kperp_factors: &[(1, 2), (2, 5)], rho: 3, geiser: 3 },
    RowData { id: 19, carter: "A2xA1^3", order: 6, kperp_factors: &[(1, 2), (2, 3), (3, 1)], rho: 3, geiser: 16 },
    RowData { id: 20, carter: "A2^2xA1", order: 6, kperp_factors: &[(1, 2), (2, 1), (3, 2)], rho: 3, geiser: 45 },
    RowData { id: 21, carter: "A3xA1^2", order: 4, kperp_factors: &[(1, 2), (2, 3), (4, 1)], rho: 3, geiser: 13 },
    RowData { id: 22, carter: "A3xA1^2", order: 4, kperp_factors: &[(1, 2), (2, 3), (4, 1)], rho: 3, geiser: 14 },
    RowData { id: 23, carter: "A3xA2", order: 12, kperp_factors: &[(1, 2), (2, 1), (3, 1), (4, 1)], rho: 3, geiser: 42 },
    RowData { id: 24, carter: "A4xA1", order: 10, kperp_factors: &[(1, 2), (2, 1), (5, 1)], rho: 3, geiser: 43 },
    RowData { id: 25, carter: "A5", order: 6, kperp_factors: &[(1, 2), (2, 1), (3, 1), (6, 1)], rho: 3, geiser: 37 },
    RowData { id: 26, carter: "A5", order: 6, kperp_factors: &[(1, 2), (2, 1), (3, 1), (6, 1)], rho: 3, geiser: 38 },
    RowData { id: 27, carter: "D4xA1", order: 6, kperp_factors: &[(1, 2), (2, 3), (6, 1)], rho: 3, geiser: 11 },
    RowData { id: 28, carter: "D4(a1)xA1", order: 4, kperp_factors: &[(1, 2), (2, 1), (4, 2)], rho: 3, geiser: 35 },
    RowData { id: 29, carter: "D5", order: 8, kperp_factors: &[(1, 2), (2, 1), (8, 1)], rho: 3, geiser: 41 },
    RowData { id: 30, carter: "D5(a1)", order: 12, kperp_factors: &[(1, 2), (2, 1), (4, 1), (6, 1)], rho: 3, geiser: 34 },
    RowData { id: 31, carter: "A1^6", order: 2, kperp_factors: &[(1, 1), (2, 6)], rho: 2, geiser: 2 },
    RowData { id: 32, carter: "A2^3", order: 3, kperp_factors: &[(1, 1), (3, 3)], rho: 2, geiser: 60 },
    RowData { id: 33, carter: "A3xA1^3", order: 4, kperp_factors: &[(1, 1), (2, 4), (4, 1)], rho: 2, geiser: 8 },
    RowData { id: 34, carter: "A3xA2xA1", order: 12, kperp_factors: &[(1, 1), (2, 2), (3, 1), (4, 1)], rho: 2, geiser: 30 },
    RowData { id: 35, carter: "A3^2", order: 4, kperp_factors: &[(1, 1), (2, 2), (4, 2)], rho: 2, geiser: 28 },
    RowData { id: 36, carter: "A4xA2", order: 15, kperp_factors: &[(1, 1), (3, 1), (5, 1)], rho: 2, geiser: 59 },
    RowData { id: 37, carter: "A5xA1", order: 6, kperp_factors: &[(1, 1), (2, 2), (3, 1), (6, 1)], rho: 2, geiser: 25 },
    RowData { id: 38, carter: "A5xA1", order: 6, kperp_factors: &[(1, 1), (2, 2), (3, 1), (6, 1)], rho: 2, geiser: 26 },
    RowData { id: 39, carter: "A6", order: 7, kperp_factors: &[(1, 1), (7, 1)], rho: 2, geiser: 57 },
    RowData { id: 40, carter: "D4xA1^2", order: 6, kperp_factors: &[(1, 1), (2, 4), (6, 1)], rho: 2, geiser: 7 },
    RowData { id: 41, carter: "D5xA1", order: 8, kperp_factors: &[(1, 1), (2, 2), (8, 1)], rho: 2, geiser: 29 },
    RowData { id: 42, carter: "D5(a1)xA1", order: 12, kperp_factors: &[(1, 1), (2, 2), (4, 1), (6, 1)], rho: 2, geiser: 23 },
    RowData { id: 43, carter: "D6", order: 10, kperp_factors: &[(1, 1), (2, 2), (10, 1)], rho: 2, geiser: 24 },
    RowData { id: 44, carter: "D6(a1)", order: 8, kperp_factors: &[(1, 1), (4, 1), (8, 1)], rho: 2, geiser: 52 },
    RowData { id: 45, carter: "D6(a2)", order: 6, kperp_factors: &[(1, 1), (2, 2), (6, 2)], rho: 2, geiser: 20 },
    RowData { id: 46, carter: "E6", order: 12, kperp_factors: &[(1, 1), (3, 1), (12, 1)], rho: 2, geiser: 58 },
    RowData { id: 47, carter: "E6(a1)", order: 9, kperp_factors: &[(1, 1), (9, 1)], rho: 2, geiser: 56 },
    RowData { id: 48, carter: "E6(a2)", order: 6, kperp_factors: &[(1, 1), (3, 1), (6, 2)], rho: 2, geiser: 51 },
    RowData { id: 49, carter: "A1^7", order: 2, kperp_factors: &[(2, 7)], rho: 1, geiser: 1 },
    RowData { id: 50, carter: "A3^2xA1", order: 4, kperp_factors: &[(2, 3), (4, 2)], rho: 1, geiser: 17 },
    RowData { id: 51, carter: "A5xA2", order: 6, kperp_factors: &[(2, 1), (3, 2), (6, 1)], rho: 1, geiser: 48 },
    RowData { id: 52, carter: "A7", order: 8, kperp_factors: &[(2, 1), (4, 1), (8, 1)], rho: 1, geiser: 44 },
    RowData { id: 53, carter: "D4xA1^3", order: 6, kperp_factors: &[(2, 5), (6, 1)], rho: 1, geiser: 4 },
    RowData { id: 54, carter: "D6xA1", order: 10, kperp_factors: &[(2, 3), (10, 1)], rho: 1, geiser: 15 },
    RowData { id: 55, carter: "D6(a2)xA1", order: 6, kperp_factors: &[(2, 3), (6, 2)], rho: 1, geiser: 12 },
    RowData { id: 56, carter: "E7", order: 18, kperp_factors: &[(2, 1), (18, 1)], rho: 1, geiser: 47 },
    RowData { id: 57, carter: "E7(a1)", order: 14, kperp_factors: &[(2, 1), (14, 1)], rho: 1, geiser: 39 },
    RowData { id: 58, carter: "E7(a2)", order: 12, kperp_factors: &[(2, 1), (6, 1), (12, 1)], rho: 1, geiser: 46 },
    RowData { id: 59, carter: "E7(a3)", order: 30, kperp_factors: &[(2, 1), (6, 1), (10, 1)], rho: 1, geiser: 36 },
    RowData { id: 60, carter: "E7(a4)", order: 6, kperp_factors: &[(2, 1), (6, 3)], rho: 1, geiser: 32 },
];
