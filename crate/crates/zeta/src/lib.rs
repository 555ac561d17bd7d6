//! Zeta data for a lattice class over F_q: the degree-8 numerator-of-interest
//! P(t) = det(I - qtM) for the class representative M, the full zeta function
//! 1 / ((1-t) P(t) (1-q^2 t)), and the point counts
//! `N_d = 1 + q^d Tr(M^d) + q^(2d)`.
//!
//! A negative N_d certifies that no surface with this action exists over
//! F_{q}; the first such d is reported.
//!
//! Two independent routes to N_d are exposed: the trace formula above, and
//! power sums read off the zeta denominator by logarithmic differentiation.
//! Tests and the acceptance gate hold them equal.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::fmt;
use weyl_e7::cyclotomic;

/// Everything `cmd zeta` prints: exact integers, arbitrary precision.
#[derive(Clone, Debug, Serialize)]
pub struct ZetaData {
    pub class_id: u32,
    pub q: u64,
    /// Coefficients c0..c8 of P(t), ascending.
    #[serde(rename = "P", serialize_with = "ser_bigints")]
    pub p_coeffs: Vec<BigInt>,
    /// N_1..N_dmax.
    #[serde(rename = "N", serialize_with = "ser_bigints")]
    pub point_counts: Vec<BigInt>,
    /// Smallest d with N_d < 0, if any.
    pub negative_at: Option<u32>,
}

/// Big integers rendered as decimal strings so the JSON stays exact.
fn ser_bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

/// The zeta function as an exact rational function: numerator 1 over three
/// denominator factors, each a coefficient list (ascending, constant 1).
#[derive(Clone, Debug)]
pub struct ZetaFunction {
    pub q: u64,
    /// (1 - t), P(t), (1 - q^2 t).
    pub denominator_factors: [Vec<BigInt>; 3],
}

impl ZetaFunction {
    /// The expanded degree-10 denominator.
    pub fn denominator_expanded(&self) -> Vec<BigInt> {
        let mut acc = vec![BigInt::from(1)];
        for f in &self.denominator_factors {
            acc = poly_mul(&acc, f);
        }
        acc
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZetaError {
    InvalidClass(u32),
    InvalidQ(u64),
    InvalidDmax,
}

impl fmt::Display for ZetaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZetaError::InvalidClass(id) => write!(f, "class id {id} outside 1..60"),
            ZetaError::InvalidQ(q) => write!(f, "{q} is not a prime power"),
            ZetaError::InvalidDmax => write!(f, "dmax must be at least 1"),
        }
    }
}

impl std::error::Error for ZetaError {}

/// Check q = p^e, p prime, e >= 1.
pub fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..=q).find(|d| q % d == 0).expect("q >= 2 has a divisor");
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
    }
    rest == 1
}

fn check(class_id: u32, q: u64) -> Result<(), ZetaError> {
    if !(1..=60).contains(&class_id) {
        return Err(ZetaError::InvalidClass(class_id));
    }
    if !is_prime_power(q) {
        return Err(ZetaError::InvalidQ(q));
    }
    Ok(())
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// P(t) = det(I - qtM): with det(tI - M) = sum a_k t^k this is
/// c_j = a_{8-j} q^j, exact in big integers.
pub fn frobenius_char_poly(class_id: u32, q: u64) -> Result<Vec<BigInt>, ZetaError> {
    check(class_id, q)?;
    let rep = &weyl_e7::class_table().record(class_id).representative;
    let a = rep.char_poly();
    let qb = BigInt::from(q);
    Ok((0..=8).map(|j| BigInt::from(a[8 - j]) * qb.pow(j as u32)).collect())
}

/// Z(t) = 1 / ((1-t) P(t) (1-q^2 t)) as exact factor lists.
pub fn zeta_function(class_id: u32, q: u64) -> Result<ZetaFunction, ZetaError> {
    let p = frobenius_char_poly(class_id, q)?;
    let q2 = BigInt::from(q) * BigInt::from(q);
    Ok(ZetaFunction {
        q,
        denominator_factors: [vec![BigInt::from(1), BigInt::from(-1)], p, vec![BigInt::from(1), -q2]],
    })
}

/// Point counts via the trace formula, plus the first negative index.
pub fn point_counts(class_id: u32, q: u64, dmax: u32) -> Result<ZetaData, ZetaError> {
    check(class_id, q)?;
    if dmax < 1 {
        return Err(ZetaError::InvalidDmax);
    }
    let rep = &weyl_e7::class_table().record(class_id).representative;
    let qb = BigInt::from(q);
    let mut power = rep.clone();
    let mut counts = Vec::with_capacity(dmax as usize);
    for d in 1..=dmax {
        let qd = qb.pow(d);
        let n: BigInt = 1 + &qd * BigInt::from(power.trace()) + &qd * &qd;
        counts.push(n);
        power = power.compose(rep);
    }
    let negative_at = counts
        .iter()
        .position(|n| n.is_negative())
        .map(|i| i as u32 + 1);
    Ok(ZetaData {
        class_id,
        q,
        p_coeffs: frobenius_char_poly(class_id, q)?,
        point_counts: counts,
        negative_at,
    })
}

/// Power sums of the inverse roots of f(t) = 1 + c1 t + ...: the d-th
/// coefficient of -t f'(t)/f(t), by the classical recurrence
/// p_d = -d c_d - sum_{k=1}^{d-1} c_k p_{d-k}.
pub fn power_sums(f: &[BigInt], dmax: u32) -> Vec<BigInt> {
    assert!(!f.is_empty() && f[0] == BigInt::from(1), "constant term must be 1");
    let c = |j: usize| f.get(j).cloned().unwrap_or_else(BigInt::zero);
    let mut p: Vec<BigInt> = Vec::with_capacity(dmax as usize);
    for d in 1..=dmax as usize {
        let mut acc = -BigInt::from(d as i64) * c(d);
        for k in 1..d {
            acc -= c(k) * &p[d - k - 1];
        }
        p.push(acc);
    }
    p
}

/// Independent route to N_d: expand log Z(t) = sum N_d t^d / d, i.e. sum
/// the inverse-root power sums of the three denominator factors.
pub fn point_counts_via_log(class_id: u32, q: u64, dmax: u32) -> Result<Vec<BigInt>, ZetaError> {
    if dmax < 1 {
        return Err(ZetaError::InvalidDmax);
    }
    let z = zeta_function(class_id, q)?;
    let mut counts = vec![BigInt::zero(); dmax as usize];
    for f in &z.denominator_factors {
        for (acc, p) in counts.iter_mut().zip(power_sums(f, dmax)) {
            *acc += p;
        }
    }
    Ok(counts)
}

/// Symbolic unit-circle certificate: P(t/q) normalized to be monic in
/// reverse is a product of cyclotomics with the same multiset as det(tI-M),
/// so every root of P has absolute value exactly 1/q.  Returns the factor
/// multiset; errors if the factorization fails (it cannot, for a genuine
/// class representative).
pub fn unit_circle_factors(class_id: u32, q: u64) -> Result<cyclotomic::CycloFactors, ZetaError> {
    check(class_id, q)?;
    let rep = &weyl_e7::class_table().record(class_id).representative;
    let a = rep.char_poly();
    // P(t/q) has coefficients a_{8-j}; reverse to a_j and factor.
    let mut reversed: Vec<i64> = a.to_vec();
    if reversed[8] < 0 {
        for x in &mut reversed {
            *x = -*x;
        }
    }
    let factors = cyclotomic::factor_cyclotomic(&reversed)
        .expect("reversed characteristic polynomial is cyclotomic");
    Ok(factors)
}

pub fn to_json(data: &ZetaData) -> String {
    serde_json::to_string_pretty(data).expect("zeta data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_recognition() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32] {
            assert!(is_prime_power(q), "{q}");
        }
        for q in [0u64, 1, 6, 10, 12, 14, 15, 100] {
            assert!(!is_prime_power(q), "{q}");
        }
    }

    #[test]
    fn power_sums_of_geometric_factors() {
        // 1 - t: inverse root 1, all power sums 1.
        let f = vec![BigInt::from(1), BigInt::from(-1)];
        assert_eq!(power_sums(&f, 4), vec![1, 1, 1, 1].into_iter().map(BigInt::from).collect::<Vec<_>>());
        // 1 - 9t: power sums 9^d.
        let f = vec![BigInt::from(1), BigInt::from(-9)];
        assert_eq!(
            power_sums(&f, 3),
            vec![9, 81, 729].into_iter().map(BigInt::from).collect::<Vec<_>>()
        );
        // (1 - 2t)(1 + 3t) = 1 + t - 6t^2: power sums 2^d + (-3)^d.
        let f = vec![BigInt::from(1), BigInt::from(1), BigInt::from(-6)];
        assert_eq!(
            power_sums(&f, 4),
            vec![-1, 13, -19, 97].into_iter().map(BigInt::from).collect::<Vec<_>>()
        );
    }

    #[test]
    fn invalid_inputs_rejected() {
        assert_eq!(frobenius_char_poly(0, 2).unwrap_err(), ZetaError::InvalidClass(0));
        assert_eq!(frobenius_char_poly(61, 2).unwrap_err(), ZetaError::InvalidClass(61));
        assert_eq!(frobenius_char_poly(1, 6).unwrap_err(), ZetaError::InvalidQ(6));
        assert_eq!(point_counts(1, 2, 0).unwrap_err(), ZetaError::InvalidDmax);
    }

    #[test]
    fn poly_mul_basic() {
        let a = vec![BigInt::from(1), BigInt::from(-1)];
        let b = vec![BigInt::from(1), BigInt::from(1)];
        assert_eq!(
            poly_mul(&a, &b),
            vec![BigInt::from(1), BigInt::from(0), BigInt::from(-1)]
        );
    }
}
