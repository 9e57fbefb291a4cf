//! Brute-force divisor enumeration: the independent oracle for divisor
//! counting. Counts pairwise non-associated divisors by trial division over
//! an exhaustive candidate pool, with size caps to stay desk-scale.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{DomainError, DomainId, Element};

const MAX_INT_ABS: u64 = 1_000_000;
const MAX_POLY_DEGREE: usize = 8;
const MAX_POLY_CANDIDATES: u64 = 2_000_000;
const MAX_QUAD_NORM: u64 = 10_000;

/// All divisors of `a` up to associates, as canonical representatives in
/// ascending order.
pub fn canonical_divisors(a: &Element) -> Result<Vec<Element>, DomainError> {
    if a.is_zero() {
        return Err(DomainError::ZeroModulus);
    }
    let mut found: BTreeSet<Element> = BTreeSet::new();
    match a.domain() {
        DomainId::Integers => {
            let v = a
                .int_value()
                .expect("integer element")
                .abs()
                .to_u64()
                .filter(|&v| v <= MAX_INT_ABS)
                .ok_or(DomainError::SizeLimitExceeded {
                    what: format!("|a| above {MAX_INT_ABS}"),
                })?;
            for d in 1..=v {
                if v % d == 0 {
                    found.insert(Element::integer(d));
                }
            }
        }
        DomainId::Poly { p } => {
            let deg = a.poly_degree().expect("nonzero");
            if deg > MAX_POLY_DEGREE {
                return Err(DomainError::SizeLimitExceeded {
                    what: format!("degree above {MAX_POLY_DEGREE}"),
                });
            }
            let candidates: u64 = (0..=deg as u32).map(|k| (p as u64).pow(k)).sum();
            if candidates > MAX_POLY_CANDIDATES {
                return Err(DomainError::SizeLimitExceeded {
                    what: format!("more than {MAX_POLY_CANDIDATES} monic candidates"),
                });
            }
            // every monic polynomial of degree at most deg a
            for k in 0..=deg {
                let count = (p as u64).pow(k as u32);
                for lower in 0..count {
                    let mut coeffs = vec![0i64; k + 1];
                    let mut v = lower;
                    for c in coeffs.iter_mut().take(k) {
                        *c = (v % p as u64) as i64;
                        v /= p as u64;
                    }
                    coeffs[k] = 1;
                    let cand = Element::poly(p, &coeffs).expect("valid prime");
                    if cand.divides(a).expect("same domain") {
                        found.insert(cand);
                    }
                }
            }
        }
        DomainId::Quadratic { d } => {
            let bound = a.norm().to_u64().filter(|&n| n <= MAX_QUAD_NORM).ok_or(
                DomainError::SizeLimitExceeded {
                    what: format!("norm above {MAX_QUAD_NORM}"),
                },
            )?;
            let norm_big = BigInt::from(bound);
            // lattice points with 1 <= N <= N(a); N(x + y*w) grows
            // quadratically in both coordinates, so a crude box suffices
            let radius = (bound as f64).sqrt() as i64 + 2;
            let y_extra = if d == -1 || d == -2 { 0 } else { radius };
            for y in -(radius + y_extra)..=(radius + y_extra) {
                for x in -(2 * radius)..=(2 * radius) {
                    let cand = Element::quad(d, x, y).expect("valid d");
                    let n = cand.norm();
                    if n.is_zero() || n > norm_big {
                        continue;
                    }
                    if (&norm_big % &n).is_zero() && cand.divides(a).expect("same domain") {
                        found.insert(cand.canonical_associate());
                    }
                }
            }
        }
    }
    Ok(found.into_iter().collect())
}

/// The number of pairwise non-associated divisors, by trial division.
pub fn divisor_count_oracle(a: &Element) -> Result<u64, DomainError> {
    Ok(canonical_divisors(a)?.len() as u64)
}
