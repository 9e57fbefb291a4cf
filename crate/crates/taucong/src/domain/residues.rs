//! Residue transversals and the finite multiplicative semigroup of a
//! quotient `D/(m)`.
//!
//! Whether `x*a*y` lands in the ideal `(m)` depends only on residues mod
//! `m`, and the transversal realizes every residue exactly once, so the
//! principal congruence of `(m)` on the whole domain is faithfully computed
//! as the principal congruence of `{0}` on this finite table.
//!
//! Transversal orders are fixed and part of the output contract:
//! `0 .. |m|-1` for integers; all polynomials of degree below `deg m` in
//! base-`p` counting order; for quadratic domains the points `i + j*w` with
//! `0 <= i < a`, `0 <= j < c` from the HNF basis `{a, b + c*w}` of the
//! modulus lattice, `j` outermost.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, ToPrimitive};

use super::{DomainError, DomainId, Element};
use crate::quad::QuadIdeal;
use crate::semigroup::CommSemigroup;

/// Residue counts above this are refused outright.
const ENUMERATION_LIMIT: u64 = 4_000_000;
/// Cayley tables are quadratic in the residue count; keep them desk-scale.
const TABLE_LIMIT: u64 = 2048;

enum Reducer {
    Int { modulus: BigInt },
    Poly { p: u64, modulus: Element },
    Quad { a: BigInt, b: BigInt, c: BigInt },
}

/// Number of residues of `D/(m)`: `|m|`, `p^deg m`, or the norm.
pub fn residue_count(m: &Element) -> Result<BigInt, DomainError> {
    if m.is_zero() {
        return Err(DomainError::ZeroModulus);
    }
    Ok(m.norm())
}

fn build_reducer(m: &Element) -> Result<(Reducer, u64), DomainError> {
    let count = residue_count(m)?;
    let count = count.to_u64().filter(|&c| c <= ENUMERATION_LIMIT).ok_or(
        DomainError::SizeLimitExceeded {
            what: format!("residue count {} exceeds {ENUMERATION_LIMIT}", m.norm()),
        },
    )?;
    let reducer = match m.domain() {
        DomainId::Integers => Reducer::Int {
            modulus: m.int_value().expect("integer element").abs(),
        },
        DomainId::Poly { p } => Reducer::Poly {
            p: p as u64,
            modulus: m.clone(),
        },
        DomainId::Quadratic { .. } => {
            let hnf = QuadIdeal::principal(m)
                .map_err(|_| DomainError::ZeroModulus)?
                .hnf();
            let [[a, b], [_, c]] = hnf;
            Reducer::Quad { a, b, c }
        }
    };
    Ok((reducer, count))
}

impl Reducer {
    fn reduce(&self, x: &Element) -> usize {
        match self {
            Reducer::Int { modulus } => {
                let v = x.int_value().expect("integer element");
                v.mod_floor(modulus).to_usize().expect("below limit")
            }
            Reducer::Poly { p, modulus } => {
                let (_, r) = super::poly_divrem_parts(x, modulus);
                let coeffs = r.poly_coeffs().expect("poly element");
                let mut index = 0u64;
                for &c in coeffs.iter().rev() {
                    index = index * p + c;
                }
                index as usize
            }
            Reducer::Quad { a, b, c } => {
                let (u, v) = x.quad_coords().expect("quadratic element");
                let j = v.mod_floor(c);
                let k = (v - &j) / c;
                let i = (u - &k * b).mod_floor(a);
                let a_usize = a.to_usize().expect("below limit");
                j.to_usize().expect("below limit") * a_usize + i.to_usize().expect("below limit")
            }
        }
    }
}

/// A complete, duplicate-free transversal of `D/(m)` in the documented
/// order. A unit modulus yields the single zero residue.
pub fn enumerate_residues(m: &Element) -> Result<Vec<Element>, DomainError> {
    let (reducer, count) = build_reducer(m)?;
    let domain = m.domain();
    let mut out = Vec::with_capacity(count as usize);
    match domain {
        DomainId::Integers => {
            for i in 0..count {
                out.push(Element::integer(i));
            }
        }
        DomainId::Poly { p } => {
            for k in 0..count {
                let mut digits = Vec::new();
                let mut v = k;
                while v > 0 {
                    digits.push((v % p as u64) as i64);
                    v /= p as u64;
                }
                out.push(Element::poly(p, &digits).expect("valid prime"));
            }
        }
        DomainId::Quadratic { d } => {
            let Reducer::Quad { a, c, .. } = reducer else {
                unreachable!()
            };
            let a = a.to_u64().expect("below limit");
            let c = c.to_u64().expect("below limit");
            for j in 0..c {
                for i in 0..a {
                    out.push(Element::quad(d, i, j).expect("valid d"));
                }
            }
        }
    }
    Ok(out)
}

/// The multiplicative semigroup of `D/(m)` with its transversal and the
/// quotient map onto transversal indices.
pub struct ResidueSemigroup {
    modulus: Element,
    transversal: Vec<Element>,
    semigroup: CommSemigroup,
    reducer: Reducer,
}

impl ResidueSemigroup {
    pub fn new(m: &Element) -> Result<Self, DomainError> {
        let (reducer, count) = build_reducer(m)?;
        if count > TABLE_LIMIT {
            return Err(DomainError::SizeLimitExceeded {
                what: format!("residue table for {count} residues exceeds {TABLE_LIMIT}"),
            });
        }
        let transversal = enumerate_residues(m)?;
        let n = transversal.len();
        let mut table = vec![0usize; n * n];
        for i in 0..n {
            for j in i..n {
                let prod = transversal[i].mul(&transversal[j]).expect("same domain");
                let idx = reducer.reduce(&prod);
                table[i * n + j] = idx;
                table[j * n + i] = idx;
            }
        }
        let semigroup = CommSemigroup::from_table_unchecked(n, table, None);
        Ok(ResidueSemigroup {
            modulus: m.clone(),
            transversal,
            semigroup,
            reducer,
        })
    }

    pub fn modulus(&self) -> &Element {
        &self.modulus
    }

    pub fn order(&self) -> usize {
        self.transversal.len()
    }

    pub fn transversal(&self) -> &[Element] {
        &self.transversal
    }

    pub fn semigroup(&self) -> &CommSemigroup {
        &self.semigroup
    }

    /// Index of the residue of `x` in the transversal; a ring quotient map.
    pub fn reduce(&self, x: &Element) -> Result<usize, DomainError> {
        if x.domain() != self.modulus.domain() {
            return Err(DomainError::DomainMismatch {
                left: self.modulus.domain(),
                right: x.domain(),
            });
        }
        Ok(self.reducer.reduce(x))
    }

    /// The zero residue always sits at index 0.
    pub fn zero_index(&self) -> usize {
        0
    }

    pub fn one_index(&self) -> usize {
        self.reducer.reduce(&Element::one(self.modulus.domain()))
    }
}
