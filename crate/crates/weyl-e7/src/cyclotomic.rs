//! Cyclotomic bookkeeping: exact factorization of characteristic polynomials
//! of finite-order lattice isometries into cyclotomic polynomials, and the
//! `(n, k)` encoding of their root-of-unity eigenvalues.
//!
//! A rank-7 or rank-8 action of finite order only admits cyclotomic factors
//! `Φ_n` with `φ(n) ≤ 7`, which restricts `n` to the thirteen values below.

use std::collections::BTreeMap;

/// `(n, coefficients of Φ_n ascending by degree)` for every n with φ(n) ≤ 7.
pub const CYCLOTOMICS: &[(u32, &[i64])] = &[
    (1, &[-1, 1]),
    (2, &[1, 1]),
    (3, &[1, 1, 1]),
    (4, &[1, 0, 1]),
    (5, &[1, 1, 1, 1, 1]),
    (6, &[1, -1, 1]),
    (7, &[1, 1, 1, 1, 1, 1, 1]),
    (8, &[1, 0, 0, 0, 1]),
    (9, &[1, 0, 0, 1, 0, 0, 1]),
    (10, &[1, -1, 1, -1, 1]),
    (12, &[1, 0, -1, 0, 1]),
    (14, &[1, -1, 1, -1, 1, -1, 1]),
    (18, &[1, 0, 0, -1, 0, 0, 1]),
];

pub fn phi_degree(n: u32) -> usize {
    CYCLOTOMICS
        .iter()
        .find(|&&(m, _)| m == n)
        .map(|&(_, c)| c.len() - 1)
        .expect("cyclotomic index outside the supported set")
}

/// Multiset of cyclotomic factors `{n -> multiplicity}`.
pub type CycloFactors = BTreeMap<u32, u32>;

/// Divides `poly` (ascending coefficients) by `div` exactly; `None` if the
/// division leaves a remainder.  Both inputs monic.
fn exact_div(poly: &[i64], div: &[i64]) -> Option<Vec<i64>> {
    debug_assert_eq!(*div.last().unwrap(), 1);
    if poly.len() < div.len() {
        return None;
    }
    let mut rem = poly.to_vec();
    let qlen = poly.len() - div.len() + 1;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + div.len() - 1];
        quot[i] = c;
        if c != 0 {
            for (j, &d) in div.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    if rem.iter().all(|&r| r == 0) {
        Some(quot)
    } else {
        None
    }
}

/// Factors a monic integer polynomial into cyclotomics, or reports the part
/// that is not a product of supported cyclotomic factors.
pub fn factor_cyclotomic(poly: &[i64]) -> Result<CycloFactors, String> {
    if poly.last() != Some(&1) {
        return Err(format!("polynomial is not monic: {poly:?}"));
    }
    let mut rest = poly.to_vec();
    let mut factors = CycloFactors::new();
    for &(n, coeffs) in CYCLOTOMICS {
        while let Some(q) = exact_div(&rest, coeffs) {
            *factors.entry(n).or_insert(0) += 1;
            rest = q;
            if rest.len() == 1 {
                break;
            }
        }
    }
    if rest == [1] {
        Ok(factors)
    } else {
        Err(format!(
            "residual non-cyclotomic factor {rest:?} of {poly:?}"
        ))
    }
}

/// The eigenvalues contributed by one copy of `Φ_n`, encoded `(n, k)` for
/// `e^{2πik/n}`: all `k` coprime to `n` (and `k = 0` for `n = 1`).
pub fn primitive_exponents(n: u32) -> Vec<u32> {
    if n == 1 {
        return vec![0];
    }
    (1..n).filter(|&k| gcd(k, n) == 1).collect()
}

/// Expands a factor multiset into the sorted eigenvalue multiset.
pub fn eigenvalues_of(factors: &CycloFactors) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for (&n, &mult) in factors {
        for _ in 0..mult {
            for k in primitive_exponents(n) {
                out.push((n, k));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Total degree of the factor multiset.
pub fn factors_degree(factors: &CycloFactors) -> usize {
    factors
        .iter()
        .map(|(&n, &m)| phi_degree(n) * m as usize)
        .sum()
}

/// lcm of the cyclotomic indices: the multiplicative order of any matrix
/// with exactly these eigenvalues.
pub fn factors_order(factors: &CycloFactors) -> u32 {
    factors.keys().fold(1, |acc, &n| lcm(acc, n))
}

/// Image of the factor multiset under negating every eigenvalue:
/// `Φ1↔Φ2`, `Φ3↔Φ6`, `Φ5↔Φ10`, `Φ7↔Φ14`, `Φ9↔Φ18`; `Φ4`, `Φ8`, `Φ12`
/// are fixed (their root sets are stable under negation).
pub fn negate_factors(factors: &CycloFactors) -> CycloFactors {
    factors
        .iter()
        .map(|(&n, &m)| {
            let image = match n {
                1 => 2,
                2 => 1,
                3 => 6,
                6 => 3,
                5 => 10,
                10 => 5,
                7 => 14,
                14 => 7,
                9 => 18,
                18 => 9,
                4 | 8 | 12 => n,
                _ => unreachable!("unsupported cyclotomic index {n}"),
            };
            (image, m)
        })
        .collect()
}

pub fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 { a } else { gcd(b, a % b) }
}

pub fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_power_of_phi1() {
        // (t-1)^8
        let p = [1, -8, 28, -56, 70, -56, 28, -8, 1];
        let f = factor_cyclotomic(&p).unwrap();
        assert_eq!(f, CycloFactors::from([(1, 8)]));
        assert_eq!(factors_degree(&f), 8);
        assert_eq!(factors_order(&f), 1);
    }

    #[test]
    fn factor_mixed() {
        // (t-1)(t+1)(t^2+t+1) = (t^2-1)(t^2+t+1) = t^4+t^3-t-1
        let p = [-1, -1, 0, 1, 1];
        let f = factor_cyclotomic(&p).unwrap();
        assert_eq!(f, CycloFactors::from([(1, 1), (2, 1), (3, 1)]));
        assert_eq!(factors_order(&f), 6);
        assert_eq!(
            eigenvalues_of(&f),
            vec![(1, 0), (2, 1), (3, 1), (3, 2)]
        );
    }

    #[test]
    fn non_cyclotomic_rejected() {
        // t^2 - 2 has no root-of-unity roots.
        assert!(factor_cyclotomic(&[-2, 0, 1]).is_err());
    }

    #[test]
    fn negation_is_an_involution_on_supported_indices() {
        for &(n, _) in CYCLOTOMICS {
            let f = CycloFactors::from([(n, 2)]);
            assert_eq!(negate_factors(&negate_factors(&f)), f);
        }
    }

    #[test]
    fn cyclotomic_degrees_are_euler_phi() {
        for &(n, _) in CYCLOTOMICS {
            assert_eq!(phi_degree(n), primitive_exponents(n).len());
        }
    }
}
