//! Ideal arithmetic in the nine class-number-one imaginary quadratic rings.
//!
//! A nonzero ideal is a rank-2 sublattice of the ring in the `(1, w)` basis,
//! stored in column Hermite normal form `[[a, b], [0, c]]` with `a, c > 0`
//! and `0 <= b < a`; its basis is `{a, b + c*w}` and its norm is `a*c`.
//! Because every ideal here is principal, a shortest nonzero vector under
//! the norm form is a generator, and Lagrange-Gauss reduction finds one.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::domain::{DomainError, DomainId, Element};
use crate::semigroup::laws::Verdict;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuadError {
    #[error("all generators are zero")]
    AllZero,
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error("basis does not span an ideal: not closed under multiplication by w")]
    NotAnIdealLattice,
    #[error("shortest vector failed the generator re-check; input is not a valid ideal")]
    NotPrincipalWitness,
}

/// A nonzero ideal in column Hermite normal form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadIdeal {
    d: i32,
    /// Basis `{a, b + c*w}` with `a, c > 0`, `0 <= b < a`.
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl QuadIdeal {
    pub fn d(&self) -> i32 {
        self.d
    }

    /// The HNF matrix `[[a, b], [0, c]]`, columns spanning the lattice.
    pub fn hnf(&self) -> [[BigInt; 2]; 2] {
        [
            [self.a.clone(), self.b.clone()],
            [BigInt::zero(), self.c.clone()],
        ]
    }

    /// Lattice determinant, equal to the ideal norm.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.c
    }

    pub fn basis_elements(&self) -> [Element; 2] {
        [
            Element::quad(self.d, self.a.clone(), BigInt::zero()).expect("valid d"),
            Element::quad(self.d, self.b.clone(), self.c.clone()).expect("valid d"),
        ]
    }

    /// True iff the element lies in the lattice.
    pub fn contains(&self, x: &Element) -> bool {
        let Some((u, v)) = x.quad_coords() else {
            return false;
        };
        let (k, r) = v.div_rem(&self.c);
        if !r.is_zero() {
            return false;
        }
        (u - k * &self.b).is_multiple_of(&self.a)
    }

    /// Smallest ideal containing the given generators.
    pub fn from_generators(d: i32, gens: &[Element]) -> Result<Self, QuadError> {
        let domain = DomainId::quadratic(d)?;
        let omega = Element::quad(d, 0, 1).expect("valid d");
        let mut vectors = Vec::new();
        for g in gens {
            if g.domain() != domain {
                return Err(DomainError::DomainMismatch {
                    left: domain,
                    right: g.domain(),
                }
                .into());
            }
            if g.is_zero() {
                continue;
            }
            let (ga, gb) = g.quad_coords().expect("quadratic element");
            vectors.push((ga.clone(), gb.clone()));
            let wg = g.mul(&omega).expect("same domain");
            let (wa, wb) = wg.quad_coords().expect("quadratic element");
            vectors.push((wa.clone(), wb.clone()));
        }
        if vectors.is_empty() {
            return Err(QuadError::AllZero);
        }
        Self::from_lattice_vectors(d, vectors)
    }

    /// Principal ideal of a single nonzero element.
    pub fn principal(g: &Element) -> Result<Self, QuadError> {
        let DomainId::Quadratic { d } = g.domain() else {
            return Err(DomainError::DomainMismatch {
                left: DomainId::quadratic(-1).expect("valid"),
                right: g.domain(),
            }
            .into());
        };
        Self::from_generators(d, std::slice::from_ref(g))
    }

    /// HNF of an explicit spanning set, verifying closure under
    /// multiplication by `w` (i.e. that the lattice really is an ideal).
    pub fn from_lattice_vectors(
        d: i32,
        mut vectors: Vec<(BigInt, BigInt)>,
    ) -> Result<Self, QuadError> {
        DomainId::quadratic(d)?;
        vectors.retain(|(x, y)| !x.is_zero() || !y.is_zero());
        if vectors.is_empty() {
            return Err(QuadError::AllZero);
        }
        // Stage 1: gcd of the w-coordinates via pairwise reduction, leaving
        // one vector with nonzero w-part and the rest with w-part zero.
        loop {
            let mut nonzero: Vec<usize> = (0..vectors.len())
                .filter(|&i| !vectors[i].1.is_zero())
                .collect();
            if nonzero.len() <= 1 {
                break;
            }
            nonzero.sort_by_key(|&i| vectors[i].1.abs());
            let pivot = nonzero[0];
            let (px, py) = vectors[pivot].clone();
            for &i in &nonzero[1..] {
                let q = vectors[i].1.div_floor(&py);
                vectors[i].0 -= &q * &px;
                vectors[i].1 -= &q * &py;
            }
            vectors.retain(|(x, y)| !x.is_zero() || !y.is_zero());
        }
        let (mut b, mut c) = match vectors.iter().find(|(_, y)| !y.is_zero()) {
            Some(v) => v.clone(),
            None => {
                // rank 1: pure integer vectors never span an ideal of a rank-2 ring
                return Err(QuadError::NotAnIdealLattice);
            }
        };
        if c.is_negative() {
            b = -b;
            c = -c;
        }
        // Stage 2: gcd of the pure-integer parts.
        let mut a = BigInt::zero();
        for (x, y) in &vectors {
            if y.is_zero() {
                a = a.gcd(x);
            }
        }
        if a.is_zero() {
            return Err(QuadError::NotAnIdealLattice);
        }
        b = b.mod_floor(&a);
        let ideal = QuadIdeal { d, a, b, c };
        // closure under w: w * basis vectors must stay inside
        let omega = Element::quad(d, 0, 1).expect("valid d");
        for e in ideal.basis_elements() {
            let we = e.mul(&omega).expect("same domain");
            if !ideal.contains(&we) {
                return Err(QuadError::NotAnIdealLattice);
            }
        }
        Ok(ideal)
    }

    pub fn mul(&self, other: &QuadIdeal) -> Result<QuadIdeal, QuadError> {
        if self.d != other.d {
            return Err(DomainError::DomainMismatch {
                left: DomainId::quadratic(self.d).expect("valid"),
                right: DomainId::quadratic(other.d).expect("valid"),
            }
            .into());
        }
        let mut vectors = Vec::with_capacity(4);
        for e in self.basis_elements() {
            for f in other.basis_elements() {
                let prod = e.mul(&f).expect("same domain");
                let (x, y) = prod.quad_coords().expect("quadratic element");
                vectors.push((x.clone(), y.clone()));
            }
        }
        Self::from_lattice_vectors(self.d, vectors)
    }

    /// The ideal of all complex conjugates of members.
    pub fn conjugate(&self) -> QuadIdeal {
        let vectors = self
            .basis_elements()
            .iter()
            .map(|e| {
                let conj = e.conjugate();
                let (x, y) = conj.quad_coords().expect("quadratic element");
                (x.clone(), y.clone())
            })
            .collect();
        Self::from_lattice_vectors(self.d, vectors).expect("conjugate of an ideal is an ideal")
    }

    /// A generator: the canonical associate of a shortest nonzero lattice
    /// vector, found by Lagrange-Gauss reduction under the norm form. The
    /// result is re-checked to generate the ideal.
    pub fn principal_generator(&self) -> Result<Element, QuadError> {
        let u = Element::quad(self.d, self.a.clone(), BigInt::zero()).expect("valid d");
        let v = Element::quad(self.d, self.b.clone(), self.c.clone()).expect("valid d");
        let short = lagrange_gauss(&u, &v);
        let gen = short.canonical_associate();
        if Self::principal(&gen)? != *self {
            return Err(QuadError::NotPrincipalWitness);
        }
        Ok(gen)
    }
}

/// Serialized form mirroring the CLI JSON: discriminant, HNF rows as
/// numbers, norm, canonical generator as an element string.
impl Serialize for QuadIdeal {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use num_traits::ToPrimitive;
        use serde::ser::SerializeStruct;
        let as_i64 = |x: &BigInt| {
            x.to_i64()
                .ok_or_else(|| serde::ser::Error::custom("entry exceeds 64 bits"))
        };
        let mut st = serializer.serialize_struct("QuadIdeal", 4)?;
        st.serialize_field("d", &self.d)?;
        let hnf = self.hnf();
        let rows: Vec<Vec<i64>> = hnf
            .iter()
            .map(|row| row.iter().map(&as_i64).collect::<Result<_, _>>())
            .collect::<Result<_, _>>()?;
        st.serialize_field("hnf", &rows)?;
        st.serialize_field("norm", &as_i64(&self.norm())?)?;
        let gen = self
            .principal_generator()
            .map_err(serde::ser::Error::custom)?;
        st.serialize_field("generator", &gen.to_string())?;
        st.end()
    }
}

/// Shortest nonzero vector of the lattice spanned by `u, v` under the norm
/// form (two-dimensional lattice reduction).
fn lagrange_gauss(u: &Element, v: &Element) -> Element {
    let mut u = u.clone();
    let mut v = v.clone();
    loop {
        if u.norm() > v.norm() {
            std::mem::swap(&mut u, &mut v);
        }
        // 2 * <u, v> = N(u + v) - N(u) - N(v), always an integer
        let g2 = u.add(&v).expect("same domain").norm() - u.norm() - v.norm();
        let nu = u.norm();
        // nearest integer to g2 / (2 * N(u))
        let t = (&g2 + &nu).div_floor(&(BigInt::from(2) * &nu));
        if t.is_zero() {
            return u;
        }
        let shift = u.mul(&big_to_elem(u.domain(), &t)).expect("same domain");
        let w = v.sub(&shift).expect("same domain");
        if w.norm() >= v.norm() {
            return u;
        }
        v = w;
    }
}

fn big_to_elem(domain: DomainId, v: &BigInt) -> Element {
    match domain {
        DomainId::Quadratic { d } => Element::quad(d, v.clone(), BigInt::zero()).expect("valid d"),
        _ => unreachable!("lattice reduction is quadratic-only"),
    }
}

/// Gcd through ideal arithmetic: the generator of the ideal spanned by the
/// two elements. Used by [`Element::gcd`] for quadratic domains.
pub(crate) fn gcd_via_ideals(x: &Element, y: &Element) -> Result<Element, DomainError> {
    let DomainId::Quadratic { d } = x.domain() else {
        unreachable!("caller dispatches on domain")
    };
    if x.is_zero() {
        return Ok(y.clone());
    }
    if y.is_zero() {
        return Ok(x.clone());
    }
    let ideal = QuadIdeal::from_generators(d, &[x.clone(), y.clone()]).map_err(quad_to_domain)?;
    ideal.principal_generator().map_err(quad_to_domain)
}

fn quad_to_domain(e: QuadError) -> DomainError {
    match e {
        QuadError::Domain(d) => d,
        other => DomainError::SizeLimitExceeded {
            what: other.to_string(),
        },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ConjProductFailure {
    GeneratorRoundTrip,
    TauDisagreement,
    ConjugateProductNotRationalInteger { generator: String },
    ConjugateTauDisagreement,
}

/// Full check for an ideal given by generators: it has a principal generator
/// `m` whose ideal reproduces the HNF, the gcd relation of `m` agrees with
/// the principal congruence of `(m)` on residues, and the conjugate product
/// is generated by a positive rational integer for which the same agreement
/// holds. Returns the verdict together with `m` and `n`.
pub fn ideal_congruence_check(
    d: i32,
    gens: &[Element],
) -> Result<(Verdict<ConjProductFailure>, Element, Element), QuadError> {
    let ideal = QuadIdeal::from_generators(d, gens)?;
    let m = match ideal.principal_generator() {
        Ok(m) => m,
        Err(QuadError::NotPrincipalWitness) => {
            return Ok((
                Verdict::Fail(ConjProductFailure::GeneratorRoundTrip),
                Element::zero(DomainId::quadratic(d)?),
                Element::zero(DomainId::quadratic(d)?),
            ))
        }
        Err(e) => return Err(e),
    };
    if !crate::tau::tau_congruence_check(&m)
        .map_err(QuadError::Domain)?
        .passed()
    {
        return Ok((
            Verdict::Fail(ConjProductFailure::TauDisagreement),
            m.clone(),
            Element::zero(DomainId::quadratic(d)?),
        ));
    }
    let product = ideal.mul(&ideal.conjugate())?;
    let n = product.principal_generator()?;
    let rational = n
        .quad_coords()
        .map(|(a, b)| b.is_zero() && a.is_positive())
        .unwrap_or(false);
    if !rational {
        return Ok((
            Verdict::Fail(ConjProductFailure::ConjugateProductNotRationalInteger {
                generator: n.to_string(),
            }),
            m,
            n,
        ));
    }
    if !crate::tau::tau_congruence_check(&n)
        .map_err(QuadError::Domain)?
        .passed()
    {
        return Ok((
            Verdict::Fail(ConjProductFailure::ConjugateTauDisagreement),
            m,
            n,
        ));
    }
    Ok((Verdict::Pass, m, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gauss(a: i64, b: i64) -> Element {
        Element::quad(-1, a, b).unwrap()
    }

    #[test]
    fn hnf_of_two_and_one_plus_i() {
        let ideal = QuadIdeal::from_generators(-1, &[gauss(2, 0), gauss(1, 1)]).unwrap();
        assert_eq!(ideal.norm(), BigInt::from(2));
        let hnf = ideal.hnf();
        assert_eq!(hnf[0][0], BigInt::from(2));
        assert_eq!(hnf[0][1], BigInt::from(1));
        assert_eq!(hnf[1][0], BigInt::from(0));
        assert_eq!(hnf[1][1], BigInt::from(1));
        // same ideal as the principal ideal of 1 + i
        assert_eq!(ideal, QuadIdeal::principal(&gauss(1, 1)).unwrap());
    }

    #[test]
    fn principal_ideal_norm_matches_element_norm() {
        let five = QuadIdeal::principal(&gauss(5, 0)).unwrap();
        assert_eq!(five.norm(), BigInt::from(25));
        let unit = QuadIdeal::from_generators(-7, &[Element::quad(-7, 1, 0).unwrap()]).unwrap();
        assert_eq!(unit.norm(), BigInt::from(1));
    }

    #[test]
    fn hnf_is_invariant_under_generator_presentation() {
        let one = QuadIdeal::from_generators(-1, &[gauss(2, 0), gauss(1, 1)]).unwrap();
        let two = QuadIdeal::from_generators(-1, &[gauss(1, 1), gauss(2, 0)]).unwrap();
        let three = QuadIdeal::from_generators(-1, &[gauss(-1, -1), gauss(0, 2)]).unwrap();
        assert_eq!(one, two);
        assert_eq!(one, three);
    }

    #[test]
    fn ideal_products() {
        let p = QuadIdeal::principal(&gauss(1, 1)).unwrap();
        let q = QuadIdeal::principal(&gauss(1, -1)).unwrap();
        let prod = p.mul(&q).unwrap();
        assert_eq!(prod, QuadIdeal::principal(&gauss(2, 0)).unwrap());
        assert_eq!(prod.norm(), BigInt::from(4));

        // multiplying by the unit ideal changes nothing
        let unit = QuadIdeal::principal(&gauss(1, 0)).unwrap();
        assert_eq!(p.mul(&unit).unwrap(), p);

        // (2)(3) = (6) for d = -3
        let two = QuadIdeal::principal(&Element::quad(-3, 2, 0).unwrap()).unwrap();
        let three = QuadIdeal::principal(&Element::quad(-3, 3, 0).unwrap()).unwrap();
        let six = two.mul(&three).unwrap();
        assert_eq!(
            six,
            QuadIdeal::principal(&Element::quad(-3, 6, 0).unwrap()).unwrap()
        );
        assert_eq!(six.norm(), BigInt::from(36));
    }

    #[test]
    fn conjugates() {
        let p = QuadIdeal::principal(&gauss(1, 1)).unwrap();
        let pc = p.conjugate();
        assert_eq!(pc.norm(), BigInt::from(2));
        // (1 - i) = -i (1 + i), so the conjugate ideal is the same ideal here
        assert_eq!(pc, QuadIdeal::principal(&gauss(1, -1)).unwrap());

        // rational integers are fixed by conjugation
        let five = QuadIdeal::principal(&Element::quad(-7, 5, 0).unwrap()).unwrap();
        assert_eq!(five.conjugate(), five);

        // d = -7: N(w) = 2, conjugate is (1 - w)
        let w = QuadIdeal::principal(&Element::quad(-7, 0, 1).unwrap()).unwrap();
        let wc = w.conjugate();
        assert_eq!(
            wc,
            QuadIdeal::principal(&Element::quad(-7, 1, -1).unwrap()).unwrap()
        );
        assert_eq!(wc.norm(), BigInt::from(2));
    }

    #[test]
    fn generators_recovered() {
        // (2, 1+i) is generated by the canonical associate of 1 + i
        let ideal = QuadIdeal::from_generators(-1, &[gauss(2, 0), gauss(1, 1)]).unwrap();
        assert_eq!(ideal.principal_generator().unwrap(), gauss(1, 1));

        // (3, 1 + sqrt(-2)) for d = -2
        let ideal = QuadIdeal::from_generators(
            -2,
            &[
                Element::quad(-2, 3, 0).unwrap(),
                Element::quad(-2, 1, 1).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(
            ideal.principal_generator().unwrap(),
            Element::quad(-2, 1, 1).unwrap()
        );

        // (5) recovers 5 in every ring
        for d in crate::domain::HEEGNER {
            let five = Element::quad(d, 5, 0).unwrap();
            let ideal = QuadIdeal::principal(&five).unwrap();
            assert_eq!(ideal.principal_generator().unwrap(), five, "d = {d}");
        }
    }

    #[test]
    fn two_and_omega_span_everything_for_minus_163() {
        // N(w) = 41 is odd, so 2 and w are coprime and the ideal is the ring
        let ideal = QuadIdeal::from_generators(
            -163,
            &[
                Element::quad(-163, 2, 0).unwrap(),
                Element::quad(-163, 0, 1).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(ideal.norm(), BigInt::from(1));
        assert_eq!(
            ideal.principal_generator().unwrap(),
            Element::quad(-163, 1, 0).unwrap()
        );
    }

    #[test]
    fn rejects_zero_and_non_ideal_lattices() {
        assert_eq!(
            QuadIdeal::from_generators(-1, &[gauss(0, 0)]).unwrap_err(),
            QuadError::AllZero
        );
        // the lattice Z*1 + Z*2i is not closed under multiplication by i
        assert_eq!(
            QuadIdeal::from_lattice_vectors(
                -1,
                vec![
                    (BigInt::from(1), BigInt::from(0)),
                    (BigInt::from(0), BigInt::from(2))
                ],
            )
            .unwrap_err(),
            QuadError::NotAnIdealLattice
        );
    }

    #[test]
    fn gcd_through_ideals() {
        let g = gauss(2, 0).gcd(&gauss(1, 1)).unwrap();
        assert_eq!(g, gauss(1, 1));
        // gcd with zero is the canonical associate
        assert_eq!(gauss(0, 0).gcd(&gauss(1, -2)).unwrap(), gauss(2, 1));
        // coprime elements
        assert_eq!(gauss(2, 1).gcd(&gauss(2, -1)).unwrap(), gauss(1, 0));
        // works in the non-Euclidean rings too
        for d in [-19, -43, -67, -163] {
            let x = Element::quad(d, 6, 0).unwrap();
            let y = Element::quad(d, 10, 0).unwrap();
            assert_eq!(
                x.gcd(&y).unwrap(),
                Element::quad(d, 2, 0).unwrap(),
                "d = {d}"
            );
        }
    }

    #[test]
    fn norm_multiplicativity_of_ideals() {
        let samples = [
            (-1, gauss(3, 2), gauss(1, 4)),
            (
                -7,
                Element::quad(-7, 2, 3).unwrap(),
                Element::quad(-7, -1, 2).unwrap(),
            ),
            (
                -43,
                Element::quad(-43, 1, 1).unwrap(),
                Element::quad(-43, 4, -1).unwrap(),
            ),
        ];
        for (d, x, y) in samples {
            let a = QuadIdeal::from_generators(d, &[x.clone(), Element::quad(d, 10, 2).unwrap()])
                .unwrap();
            let b = QuadIdeal::from_generators(d, &[y.clone(), Element::quad(d, 6, 0).unwrap()])
                .unwrap();
            assert_eq!(a.mul(&b).unwrap().norm(), a.norm() * b.norm());
        }
    }
}
