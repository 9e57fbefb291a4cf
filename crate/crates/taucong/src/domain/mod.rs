//! Exact arithmetic in three unique factorization domain families:
//! arbitrary-precision integers, polynomials over a prime field, and the
//! nine imaginary quadratic rings of class number one.
//!
//! Elements carry their domain tag; all operations are exact. The associate
//! relation is handled through [`Element::canonical_associate`], which picks
//! one representative per unit orbit: `|x|` for integers, the monic multiple
//! for polynomials, and the lexicographically greatest coordinate pair for
//! quadratic elements.

pub mod divisors;
pub mod parse;
pub mod residues;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// The nine imaginary quadratic fields whose integer rings are unique
/// factorization domains.
pub const HEEGNER: [i32; 9] = [-1, -2, -3, -7, -11, -19, -43, -67, -163];

const MAX_POLY_PRIME: u32 = 97;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DomainError {
    #[error("domain mismatch: {left} vs {right}")]
    DomainMismatch { left: DomainId, right: DomainId },
    #[error("{0} is not a prime up to {MAX_POLY_PRIME}")]
    BadPrime(u32),
    #[error("{0} is not one of the nine supported discriminants")]
    BadDiscriminant(i32),
    #[error("not divisible")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("modulus is zero")]
    ZeroModulus,
    #[error("modulus is a unit")]
    UnitModulus,
    #[error("size limit exceeded: {what}")]
    SizeLimitExceeded { what: String },
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum DomainId {
    /// The rational integers.
    Integers,
    /// Polynomials over the prime field with `p` elements.
    Poly { p: u32 },
    /// Algebraic integers of the imaginary quadratic field of discriminant
    /// parameter `d`, written in the basis `1, w` with `w = sqrt(d)` for
    /// `d = -1, -2` and `w = (1 + sqrt(d))/2` for the other seven.
    Quadratic { d: i32 },
}

impl DomainId {
    pub fn poly(p: u32) -> Result<Self, DomainError> {
        let is_prime = p >= 2
            && (2..p)
                .take_while(|q| q * q <= p)
                .all(|q| !p.is_multiple_of(q));
        if !is_prime || p > MAX_POLY_PRIME {
            return Err(DomainError::BadPrime(p));
        }
        Ok(DomainId::Poly { p })
    }

    pub fn quadratic(d: i32) -> Result<Self, DomainError> {
        if !HEEGNER.contains(&d) {
            return Err(DomainError::BadDiscriminant(d));
        }
        Ok(DomainId::Quadratic { d })
    }

    /// `w^2` written as `t + s*w`.
    fn omega_squared(self) -> (BigInt, i64) {
        match self {
            DomainId::Quadratic { d } if d == -1 || d == -2 => (BigInt::from(d), 0),
            DomainId::Quadratic { d } => (BigInt::from((d - 1) / 4), 1),
            _ => unreachable!("omega only exists in quadratic domains"),
        }
    }

    /// Conjugation in coordinates: `a + b*w` to `a' + b'*w`.
    fn conj_coords(self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        match self {
            DomainId::Quadratic { d } if d == -1 || d == -2 => (a.clone(), -b),
            DomainId::Quadratic { .. } => (a + b, -b),
            _ => unreachable!(),
        }
    }
}

impl fmt::Display for DomainId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainId::Integers => write!(f, "Z"),
            DomainId::Poly { p } => write!(f, "F{p}[x]"),
            DomainId::Quadratic { d } => write!(f, "Q({d})"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub(crate) enum Repr {
    Int(BigInt),
    /// Little-endian coefficients in `[0, p)`, no trailing zeros; empty is
    /// the zero polynomial.
    Poly(Vec<u64>),
    /// `a + b*w`.
    Quad {
        a: BigInt,
        b: BigInt,
    },
}

/// A value in one of the three domain families.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Element {
    domain: DomainId,
    repr: Repr,
}

fn trim(mut coeffs: Vec<u64>) -> Vec<u64> {
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    coeffs
}

impl Element {
    pub fn integer(v: impl Into<BigInt>) -> Self {
        Element {
            domain: DomainId::Integers,
            repr: Repr::Int(v.into()),
        }
    }

    /// Polynomial from little-endian signed coefficients, reduced mod `p`.
    pub fn poly(p: u32, coeffs: &[i64]) -> Result<Self, DomainError> {
        let domain = DomainId::poly(p)?;
        let p = p as i64;
        let reduced = coeffs.iter().map(|&c| (c.rem_euclid(p)) as u64).collect();
        Ok(Element {
            domain,
            repr: Repr::Poly(trim(reduced)),
        })
    }

    pub fn quad(d: i32, a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<Self, DomainError> {
        let domain = DomainId::quadratic(d)?;
        Ok(Element {
            domain,
            repr: Repr::Quad {
                a: a.into(),
                b: b.into(),
            },
        })
    }

    pub fn zero(domain: DomainId) -> Self {
        Self::from_int(domain, 0)
    }

    pub fn one(domain: DomainId) -> Self {
        Self::from_int(domain, 1)
    }

    /// Image of a rational integer in any of the domains.
    pub fn from_int(domain: DomainId, v: i64) -> Self {
        let repr = match domain {
            DomainId::Integers => Repr::Int(BigInt::from(v)),
            DomainId::Poly { p } => Repr::Poly(trim(vec![v.rem_euclid(p as i64) as u64])),
            DomainId::Quadratic { .. } => Repr::Quad {
                a: BigInt::from(v),
                b: BigInt::zero(),
            },
        };
        Element { domain, repr }
    }

    pub fn domain(&self) -> DomainId {
        self.domain
    }

    pub(crate) fn repr(&self) -> &Repr {
        &self.repr
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Int(v) => v.is_zero(),
            Repr::Poly(c) => c.is_empty(),
            Repr::Quad { a, b } => a.is_zero() && b.is_zero(),
        }
    }

    /// Integer coordinates of a quadratic element.
    pub fn quad_coords(&self) -> Option<(&BigInt, &BigInt)> {
        match &self.repr {
            Repr::Quad { a, b } => Some((a, b)),
            _ => None,
        }
    }

    pub fn int_value(&self) -> Option<&BigInt> {
        match &self.repr {
            Repr::Int(v) => Some(v),
            _ => None,
        }
    }

    pub fn poly_coeffs(&self) -> Option<&[u64]> {
        match &self.repr {
            Repr::Poly(c) => Some(c),
            _ => None,
        }
    }

    /// Degree of a nonzero polynomial.
    pub fn poly_degree(&self) -> Option<usize> {
        match &self.repr {
            Repr::Poly(c) if !c.is_empty() => Some(c.len() - 1),
            _ => None,
        }
    }

    fn check_domain(&self, other: &Element) -> Result<(), DomainError> {
        if self.domain != other.domain {
            return Err(DomainError::DomainMismatch {
                left: self.domain,
                right: other.domain,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Element) -> Result<Element, DomainError> {
        self.check_domain(other)?;
        let repr = match (&self.repr, &other.repr) {
            (Repr::Int(x), Repr::Int(y)) => Repr::Int(x + y),
            (Repr::Poly(x), Repr::Poly(y)) => {
                let DomainId::Poly { p } = self.domain else {
                    unreachable!()
                };
                let p = p as u64;
                let mut out = vec![0u64; x.len().max(y.len())];
                for (i, slot) in out.iter_mut().enumerate() {
                    let xv = x.get(i).copied().unwrap_or(0);
                    let yv = y.get(i).copied().unwrap_or(0);
                    *slot = (xv + yv) % p;
                }
                Repr::Poly(trim(out))
            }
            (Repr::Quad { a: a1, b: b1 }, Repr::Quad { a: a2, b: b2 }) => Repr::Quad {
                a: a1 + a2,
                b: b1 + b2,
            },
            _ => unreachable!("domains already matched"),
        };
        Ok(Element {
            domain: self.domain,
            repr,
        })
    }

    pub fn neg(&self) -> Element {
        let repr = match &self.repr {
            Repr::Int(x) => Repr::Int(-x),
            Repr::Poly(x) => {
                let DomainId::Poly { p } = self.domain else {
                    unreachable!()
                };
                let p = p as u64;
                Repr::Poly(trim(x.iter().map(|&c| (p - c) % p).collect()))
            }
            Repr::Quad { a, b } => Repr::Quad { a: -a, b: -b },
        };
        Element {
            domain: self.domain,
            repr,
        }
    }

    pub fn sub(&self, other: &Element) -> Result<Element, DomainError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Element) -> Result<Element, DomainError> {
        self.check_domain(other)?;
        let repr = match (&self.repr, &other.repr) {
            (Repr::Int(x), Repr::Int(y)) => Repr::Int(x * y),
            (Repr::Poly(x), Repr::Poly(y)) => {
                let DomainId::Poly { p } = self.domain else {
                    unreachable!()
                };
                let p = p as u64;
                if x.is_empty() || y.is_empty() {
                    Repr::Poly(vec![])
                } else {
                    let mut out = vec![0u64; x.len() + y.len() - 1];
                    for (i, &xv) in x.iter().enumerate() {
                        for (j, &yv) in y.iter().enumerate() {
                            out[i + j] = (out[i + j] + xv * yv) % p;
                        }
                    }
                    Repr::Poly(trim(out))
                }
            }
            (Repr::Quad { a: a1, b: b1 }, Repr::Quad { a: a2, b: b2 }) => {
                let (t, s) = self.domain.omega_squared();
                let bb = b1 * b2;
                Repr::Quad {
                    a: a1 * a2 + &t * &bb,
                    b: a1 * b2 + a2 * b1 + s * &bb,
                }
            }
            _ => unreachable!("domains already matched"),
        };
        Ok(Element {
            domain: self.domain,
            repr,
        })
    }

    /// Multiplicative norm: absolute value for integers, `p^deg` for nonzero
    /// polynomials (so nonzero constants have norm 1), the field norm for
    /// quadratic elements. Zero has norm 0 except for the zero polynomial,
    /// which also reports 0.
    pub fn norm(&self) -> BigInt {
        match &self.repr {
            Repr::Int(v) => v.abs(),
            Repr::Poly(c) => {
                if c.is_empty() {
                    BigInt::zero()
                } else {
                    let DomainId::Poly { p } = self.domain else {
                        unreachable!()
                    };
                    BigInt::from(p).pow((c.len() - 1) as u32)
                }
            }
            Repr::Quad { a, b } => {
                let DomainId::Quadratic { d } = self.domain else {
                    unreachable!()
                };
                if d == -1 || d == -2 {
                    a * a - BigInt::from(d) * b * b
                } else {
                    a * a + a * b + BigInt::from((1 - i64::from(d)) / 4) * b * b
                }
            }
        }
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    pub fn conjugate(&self) -> Element {
        match &self.repr {
            Repr::Quad { a, b } => {
                let (ca, cb) = self.domain.conj_coords(a, b);
                Element {
                    domain: self.domain,
                    repr: Repr::Quad { a: ca, b: cb },
                }
            }
            _ => self.clone(),
        }
    }

    /// The canonical representative of the associate class of `self`.
    /// Idempotent; two elements are associated iff their canonical
    /// associates are equal.
    pub fn canonical_associate(&self) -> Element {
        match &self.repr {
            Repr::Int(v) => Element {
                domain: self.domain,
                repr: Repr::Int(v.abs()),
            },
            Repr::Poly(c) => {
                if c.is_empty() {
                    return self.clone();
                }
                let DomainId::Poly { p } = self.domain else {
                    unreachable!()
                };
                let inv = mod_inverse(*c.last().expect("nonzero"), p as u64);
                let coeffs = c.iter().map(|&x| x * inv % p as u64).collect();
                Element {
                    domain: self.domain,
                    repr: Repr::Poly(coeffs),
                }
            }
            Repr::Quad { .. } => units(self.domain)
                .iter()
                .map(|u| {
                    let prod = self.mul(u).expect("same domain");
                    let Repr::Quad { a, b } = prod.repr else {
                        unreachable!()
                    };
                    (a, b)
                })
                .max()
                .map(|(a, b)| Element {
                    domain: self.domain,
                    repr: Repr::Quad { a, b },
                })
                .expect("unit list nonempty"),
        }
    }

    /// True iff `self` divides `b`.
    pub fn divides(&self, b: &Element) -> Result<bool, DomainError> {
        self.check_domain(b)?;
        if self.is_zero() {
            return Ok(b.is_zero());
        }
        Ok(self.try_div_exact(b).is_some())
    }

    /// Exact quotient `b / self`.
    pub fn div_exact(b: &Element, a: &Element) -> Result<Element, DomainError> {
        a.check_domain(b)?;
        if a.is_zero() {
            return Err(DomainError::DivisionByZero);
        }
        a.try_div_exact(b).ok_or(DomainError::NotDivisible)
    }

    fn try_div_exact(&self, b: &Element) -> Option<Element> {
        match (&self.repr, &b.repr) {
            (Repr::Int(x), Repr::Int(y)) => {
                let (q, r) = y.div_rem(x);
                r.is_zero().then_some(Element {
                    domain: self.domain,
                    repr: Repr::Int(q),
                })
            }
            (Repr::Poly(_), Repr::Poly(_)) => {
                let (q, r) = poly_divrem(self.domain, b, self);
                r.is_zero().then_some(q)
            }
            (Repr::Quad { .. }, Repr::Quad { .. }) => {
                // b / a = b * conj(a) / N(a)
                let num = b.mul(&self.conjugate()).expect("same domain");
                let n = self.norm();
                let Repr::Quad { a: na, b: nb } = num.repr else {
                    unreachable!()
                };
                let (qa, ra) = na.div_rem(&n);
                let (qb, rb) = nb.div_rem(&n);
                (ra.is_zero() && rb.is_zero()).then_some(Element {
                    domain: self.domain,
                    repr: Repr::Quad { a: qa, b: qb },
                })
            }
            _ => unreachable!("domains already matched"),
        }
    }

    /// Greatest common divisor, returned as a canonical associate.
    /// `gcd(a, 0)` is the canonical associate of `a`, and `gcd(0, 0) = 0`.
    ///
    /// Integers and polynomials use the Euclidean algorithm. Quadratic
    /// domains go through ideal arithmetic: the lattice generated by the two
    /// elements is principal (class number one), and its generator is a
    /// greatest common divisor. This works uniformly in all nine rings,
    /// including the four that are not norm-Euclidean.
    pub fn gcd(&self, other: &Element) -> Result<Element, DomainError> {
        self.check_domain(other)?;
        if self.is_zero() && other.is_zero() {
            return Ok(Element::zero(self.domain));
        }
        let g = match self.domain {
            DomainId::Integers => {
                let (Repr::Int(x), Repr::Int(y)) = (&self.repr, &other.repr) else {
                    unreachable!()
                };
                Element {
                    domain: self.domain,
                    repr: Repr::Int(x.gcd(y)),
                }
            }
            DomainId::Poly { .. } => {
                let mut a = self.clone();
                let mut b = other.clone();
                while !b.is_zero() {
                    let (_, r) = poly_divrem(self.domain, &a, &b);
                    a = b;
                    b = r;
                }
                a
            }
            DomainId::Quadratic { .. } => crate::quad::gcd_via_ideals(self, other)?,
        };
        Ok(g.canonical_associate())
    }
}

/// Quotient and remainder of polynomial division, `deg r < deg b`.
fn poly_divrem(domain: DomainId, a: &Element, b: &Element) -> (Element, Element) {
    let DomainId::Poly { p } = domain else {
        unreachable!()
    };
    let p = p as u64;
    let bcoef = match &b.repr {
        Repr::Poly(c) if !c.is_empty() => c,
        _ => panic!("polynomial division by zero"),
    };
    let mut rem: Vec<u64> = match &a.repr {
        Repr::Poly(c) => c.clone(),
        _ => unreachable!(),
    };
    let lead_inv = mod_inverse(*bcoef.last().expect("nonzero"), p);
    let mut quot = vec![0u64; (rem.len() + 1).saturating_sub(bcoef.len())];
    while rem.len() >= bcoef.len() {
        let k = rem.len() - bcoef.len();
        let factor = rem.last().expect("trimmed, so nonzero") * lead_inv % p;
        quot[k] = factor;
        for (i, &bc) in bcoef.iter().enumerate() {
            rem[k + i] = (rem[k + i] + p - factor * bc % p) % p;
        }
        rem.pop();
        while rem.last() == Some(&0) {
            rem.pop();
        }
    }
    (
        Element {
            domain,
            repr: Repr::Poly(trim(quot)),
        },
        Element {
            domain,
            repr: Repr::Poly(rem),
        },
    )
}

/// Crate-internal access to polynomial division for the residue machinery.
pub(crate) fn poly_divrem_parts(a: &Element, b: &Element) -> (Element, Element) {
    poly_divrem(a.domain, a, b)
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p is prime, a nonzero mod p
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

/// All units of the domain: two for the integers, the `p - 1` nonzero
/// constants for `F_p[x]`, and 2, 4 or 6 for the quadratic rings.
pub fn units(domain: DomainId) -> Vec<Element> {
    match domain {
        DomainId::Integers => vec![Element::integer(1), Element::integer(-1)],
        DomainId::Poly { p } => (1..p as i64)
            .map(|c| Element::poly(p, &[c]).expect("valid prime"))
            .collect(),
        DomainId::Quadratic { d } => {
            let q = |a: i64, b: i64| Element::quad(d, a, b).expect("valid d");
            match d {
                -1 => vec![q(1, 0), q(-1, 0), q(0, 1), q(0, -1)],
                -3 => vec![q(1, 0), q(-1, 0), q(0, 1), q(0, -1), q(-1, 1), q(1, -1)],
                _ => vec![q(1, 0), q(-1, 0)],
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gauss(a: i64, b: i64) -> Element {
        Element::quad(-1, a, b).unwrap()
    }

    #[test]
    fn domain_validation() {
        assert!(DomainId::poly(5).is_ok());
        assert!(DomainId::poly(97).is_ok());
        assert_eq!(DomainId::poly(4).unwrap_err(), DomainError::BadPrime(4));
        assert_eq!(DomainId::poly(101).unwrap_err(), DomainError::BadPrime(101));
        assert!(DomainId::quadratic(-163).is_ok());
        assert_eq!(
            DomainId::quadratic(-5).unwrap_err(),
            DomainError::BadDiscriminant(-5)
        );
    }

    #[test]
    fn integer_arithmetic() {
        let six = Element::integer(6);
        let minus_two = Element::integer(-2);
        assert_eq!(six.mul(&minus_two).unwrap(), Element::integer(-12));
        assert_eq!(six.add(&minus_two).unwrap(), Element::integer(4));
        assert_eq!(six.sub(&minus_two).unwrap(), Element::integer(8));
        assert_eq!(six.norm(), BigInt::from(6));
        assert_eq!(minus_two.norm(), BigInt::from(2));
    }

    #[test]
    fn poly_arithmetic_mod_5() {
        let a = Element::poly(5, &[1, 1]).unwrap(); // x + 1
        let b = Element::poly(5, &[2, 1]).unwrap(); // x + 2
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod, Element::poly(5, &[2, 3, 1]).unwrap()); // x^2 + 3x + 2
        assert_eq!(prod.poly_degree(), Some(2));
        assert_eq!(prod.norm(), BigInt::from(25));
        // coefficients reduce mod p and trailing zeros trim away
        assert_eq!(
            Element::poly(5, &[7, 5]).unwrap(),
            Element::poly(5, &[2]).unwrap()
        );
        assert!(Element::poly(5, &[0, 0]).unwrap().is_zero());
    }

    #[test]
    fn gaussian_norm_identity() {
        let x = gauss(2, 1);
        let y = gauss(2, -1);
        assert_eq!(x.mul(&y).unwrap(), gauss(5, 0));
        assert_eq!(x.norm(), BigInt::from(5));
    }

    #[test]
    fn eisenstein_multiplication() {
        // w^2 = w - 1 for d = -3
        let w = Element::quad(-3, 0, 1).unwrap();
        assert_eq!(w.mul(&w).unwrap(), Element::quad(-3, -1, 1).unwrap());
        assert_eq!(w.norm(), BigInt::from(1));
    }

    #[test]
    fn domain_mismatch_is_an_error() {
        let x = Element::integer(1);
        let y = Element::poly(5, &[1]).unwrap();
        assert!(matches!(
            x.mul(&y).unwrap_err(),
            DomainError::DomainMismatch { .. }
        ));
    }

    #[test]
    fn unit_counts() {
        assert_eq!(units(DomainId::Integers).len(), 2);
        assert_eq!(units(DomainId::poly(5).unwrap()).len(), 4);
        assert_eq!(units(DomainId::quadratic(-1).unwrap()).len(), 4);
        assert_eq!(units(DomainId::quadratic(-3).unwrap()).len(), 6);
        for d in [-2, -7, -11, -19, -43, -67, -163] {
            let us = units(DomainId::quadratic(d).unwrap());
            assert_eq!(us.len(), 2, "d = {d}");
            for u in &us {
                assert!(u.is_unit());
            }
        }
        // every listed unit really has norm one, and they are distinct
        for d in HEEGNER {
            let us = units(DomainId::quadratic(d).unwrap());
            for u in &us {
                assert_eq!(u.norm(), BigInt::from(1), "d = {d}");
            }
            let set: std::collections::HashSet<_> = us.iter().collect();
            assert_eq!(set.len(), us.len());
        }
    }

    #[test]
    fn canonical_associates() {
        assert_eq!(
            Element::integer(-5).canonical_associate(),
            Element::integer(5)
        );
        // 2x + 4 over F5 becomes monic: x + 2
        assert_eq!(
            Element::poly(5, &[4, 2]).unwrap().canonical_associate(),
            Element::poly(5, &[2, 1]).unwrap()
        );
        // 1 - 2i has associates (1,-2), (-1,2), (2,1), (-2,-1); lex max is (2,1)
        assert_eq!(gauss(1, -2).canonical_associate(), gauss(2, 1));
        // idempotent
        for e in [gauss(3, 7), gauss(-4, 0), gauss(0, 0)] {
            assert_eq!(
                e.canonical_associate(),
                e.canonical_associate().canonical_associate()
            );
        }
        // 1 stays canonical in every quadratic ring
        for d in HEEGNER {
            let one = Element::one(DomainId::quadratic(d).unwrap());
            assert_eq!(one.canonical_associate(), one, "d = {d}");
        }
    }

    #[test]
    fn divisibility() {
        assert!(Element::integer(3).divides(&Element::integer(12)).unwrap());
        assert_eq!(
            Element::div_exact(&Element::integer(12), &Element::integer(3)).unwrap(),
            Element::integer(4)
        );
        assert!(gauss(1, 1).divides(&gauss(2, 0)).unwrap());
        assert_eq!(
            Element::div_exact(&gauss(2, 0), &gauss(1, 1)).unwrap(),
            gauss(1, -1)
        );
        // x + 1 does not divide x^2 + 1 over F5
        let x1 = Element::poly(5, &[1, 1]).unwrap();
        let sq = Element::poly(5, &[1, 0, 1]).unwrap();
        assert!(!x1.divides(&sq).unwrap());
        assert_eq!(
            Element::div_exact(&sq, &x1).unwrap_err(),
            DomainError::NotDivisible
        );
        assert_eq!(
            Element::div_exact(&sq, &Element::poly(5, &[]).unwrap()).unwrap_err(),
            DomainError::DivisionByZero
        );
        // zero divides only zero
        assert!(!Element::integer(0).divides(&Element::integer(3)).unwrap());
        assert!(Element::integer(0).divides(&Element::integer(0)).unwrap());
    }

    #[test]
    fn poly_division_with_remainder() {
        let domain = DomainId::poly(5).unwrap();
        // (x^3 + 2x + 1) / (x + 3)
        let a = Element::poly(5, &[1, 2, 0, 1]).unwrap();
        let b = Element::poly(5, &[3, 1]).unwrap();
        let (q, r) = poly_divrem(domain, &a, &b);
        assert_eq!(q.mul(&b).unwrap().add(&r).unwrap(), a);
        assert!(r.poly_degree().unwrap_or(0) < b.poly_degree().unwrap());
    }

    #[test]
    fn gcd_euclidean_cases() {
        assert_eq!(
            Element::integer(6).gcd(&Element::integer(0)).unwrap(),
            Element::integer(6)
        );
        assert_eq!(
            Element::integer(0).gcd(&Element::integer(0)).unwrap(),
            Element::integer(0)
        );
        assert_eq!(
            Element::integer(-12).gcd(&Element::integer(18)).unwrap(),
            Element::integer(6)
        );
        // gcd(x^2 - 1, x^2 + 3x + 2) = x + 1 over F5
        let a = Element::poly(5, &[-1, 0, 1]).unwrap();
        let b = Element::poly(5, &[2, 3, 1]).unwrap();
        assert_eq!(a.gcd(&b).unwrap(), Element::poly(5, &[1, 1]).unwrap());
    }
}
