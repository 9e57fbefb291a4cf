//! The gcd relation of a modulus and its realization as a principal
//! congruence.
//!
//! For a modulus `m`, two elements are tau-related when their gcds with `m`
//! are associated. On the residue ring `D/(m)` this relation is computed one
//! way from gcds and the other way as the principal congruence of the zero
//! ideal; the checkers here verify that the two computations agree exactly,
//! that the identity class is the coprime residues, that everything descends
//! to the associate-class level, and that divisor counts drop out as class
//! counts.

use std::collections::BTreeSet;

use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::domain::residues::ResidueSemigroup;
use crate::domain::{units, DomainError, DomainId, Element};
use crate::semigroup::ideals::separator;
use crate::semigroup::laws::{condition_star_check, StarFailure, Verdict};
use crate::semigroup::{ElementSet, Partition};

/// True iff `gcd(a, m)` and `gcd(b, m)` are associated. With `m = 0` this is
/// exactly the associate relation.
pub fn tau_related(m: &Element, a: &Element, b: &Element) -> Result<bool, DomainError> {
    Ok(a.gcd(m)? == b.gcd(m)?)
}

/// The tau classes of a nonzero, non-unit modulus, living on its residue
/// transversal. Each class carries the canonical gcd value it shares, and
/// those values are exactly the canonical divisors of `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauClasses {
    modulus: Element,
    transversal: Vec<Element>,
    partition: Partition,
    divisors: Vec<Element>,
}

impl TauClasses {
    pub fn modulus(&self) -> &Element {
        &self.modulus
    }

    pub fn transversal(&self) -> &[Element] {
        &self.transversal
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// Canonical gcd value of each class, indexed by class number.
    pub fn divisors(&self) -> &[Element] {
        &self.divisors
    }

    pub fn num_classes(&self) -> usize {
        self.partition.num_classes()
    }
}

impl Serialize for TauClasses {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("TauClasses", 3)?;
        st.serialize_field("modulus", &self.modulus.to_string())?;
        let divisors: Vec<String> = self.divisors.iter().map(Element::to_string).collect();
        st.serialize_field("divisors", &divisors)?;
        st.serialize_field("classes", &self.partition)?;
        st.end()
    }
}

/// Partition the residues of `m` by the canonical gcd with `m`.
pub fn tau_classes(m: &Element) -> Result<TauClasses, DomainError> {
    if m.is_zero() {
        return Err(DomainError::ZeroModulus);
    }
    if m.is_unit() {
        return Err(DomainError::UnitModulus);
    }
    let transversal = crate::domain::residues::enumerate_residues(m)?;
    let mut gcds = Vec::with_capacity(transversal.len());
    let mut seen: Vec<Element> = Vec::new();
    let mut labels = Vec::with_capacity(transversal.len());
    for r in &transversal {
        let g = r.gcd(m)?;
        let class = match seen.iter().position(|x| *x == g) {
            Some(c) => c,
            None => {
                seen.push(g.clone());
                seen.len() - 1
            }
        };
        labels.push(class);
        gcds.push(g);
    }
    let partition = Partition::from_labels(&labels);
    let divisors = (0..partition.num_classes())
        .map(|c| gcds[partition.representative(c)].clone())
        .collect();
    Ok(TauClasses {
        modulus: m.clone(),
        transversal,
        partition,
        divisors,
    })
}

/// The principal congruence of the ideal `(m)`, computed on the residue
/// semigroup as the principal congruence of the zero residue - entirely
/// gcd-free. Residues are classed exactly as the elements of the full domain
/// they represent.
pub fn principal_ideal_congruence(m: &Element) -> Result<Partition, DomainError> {
    let rs = ResidueSemigroup::new(m)?;
    Ok(pj_on(&rs))
}

fn pj_on(rs: &ResidueSemigroup) -> Partition {
    let zero = ElementSet::from_members(rs.order(), [rs.zero_index()]);
    rs.semigroup().principal_congruence(&zero)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum TauCongruenceFailure {
    /// The gcd partition and the principal congruence differ.
    PartitionMismatch,
    /// They agree but the quotient fails the star condition.
    QuotientNotStar(StarFailure),
}

/// Exact agreement of the gcd relation with the principal congruence of
/// `(m)`, plus the star condition on the common quotient. A unit modulus
/// passes trivially: both relations are universal on the one-point residue
/// ring.
pub fn tau_congruence_check(m: &Element) -> Result<Verdict<TauCongruenceFailure>, DomainError> {
    if m.is_zero() {
        return Err(DomainError::ZeroModulus);
    }
    let rs = ResidueSemigroup::new(m)?;
    let pj = pj_on(&rs);
    let tau_partition = if m.is_unit() {
        Partition::universal(1)
    } else {
        tau_classes(m)?.partition.clone()
    };
    if tau_partition != pj {
        return Ok(Verdict::Fail(TauCongruenceFailure::PartitionMismatch));
    }
    let (quotient, _) = rs
        .semigroup()
        .quotient(&pj)
        .expect("principal congruences are congruences");
    if let Verdict::Fail(f) = condition_star_check(&quotient) {
        return Ok(Verdict::Fail(TauCongruenceFailure::QuotientNotStar(f)));
    }
    Ok(Verdict::Pass)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum SeparatorClassFailure {
    IdentityClassIsNotCoprimeSet,
    DefinitionalSeparatorDiffers,
}

/// The identity class of the principal congruence of `(m)` is exactly the
/// set of residues coprime to `m`, and also exactly the separator of the
/// zero class computed definitionally in the residue semigroup.
pub fn separator_class_check(m: &Element) -> Result<Verdict<SeparatorClassFailure>, DomainError> {
    if m.is_zero() {
        return Err(DomainError::ZeroModulus);
    }
    if m.is_unit() {
        return Err(DomainError::UnitModulus);
    }
    let rs = ResidueSemigroup::new(m)?;
    let pj = pj_on(&rs);
    let identity_class = pj.class_set(pj.class_of(rs.one_index()));
    let coprime = ElementSet::from_members(
        rs.order(),
        (0..rs.order()).filter(|&i| {
            rs.transversal()[i]
                .gcd(m)
                .map(|g| g.is_unit())
                .unwrap_or(false)
        }),
    );
    if identity_class != coprime {
        return Ok(Verdict::Fail(
            SeparatorClassFailure::IdentityClassIsNotCoprimeSet,
        ));
    }
    let zero_class = pj.class_set(pj.class_of(rs.zero_index()));
    let sep = separator(rs.semigroup(), &zero_class);
    if sep != identity_class {
        return Ok(Verdict::Fail(
            SeparatorClassFailure::DefinitionalSeparatorDiffers,
        ));
    }
    Ok(Verdict::Pass)
}

/// Number of pairwise non-associated divisors of a nonzero element, read off
/// as the class count of its gcd relation. Units have exactly one divisor.
pub fn divisor_count(a: &Element) -> Result<u64, DomainError> {
    if a.is_zero() {
        return Err(DomainError::ZeroModulus);
    }
    if a.is_unit() {
        return Ok(1);
    }
    Ok(tau_classes(a)?.num_classes() as u64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CoherenceFailure {
    /// Multiplying a residue by a unit moved it to a different class.
    UnitOrbitEscapesClass { residue: usize },
    /// The unit-orbit partition failed the congruence check.
    OrbitsNotACongruence,
    /// The separator computed definitionally in the orbit quotient differs
    /// from the image of the separator class.
    SeparatorImageMismatch,
    /// The canonical image of the separator class overlaps the canonical
    /// image of its complement.
    CanonicalImageOverlap,
    /// Re-deriving the classes purely on canonical representatives gives a
    /// different class count.
    CanonicalClassCountMismatch { got: usize, want: usize },
}

/// Descent to the associate-class level. Classes are unions of unit orbits;
/// the orbit partition is a congruence whose quotient realizes the
/// associate-class monoid on residues, and the separator of the zero image
/// computed definitionally there is exactly the image of the separator
/// class; canonical images of the separator class and of its complement
/// stay disjoint; re-running the gcd classification purely on canonical
/// representatives reproduces the class count. A unit modulus passes
/// trivially.
pub fn associate_coherence_check(m: &Element) -> Result<Verdict<CoherenceFailure>, DomainError> {
    if m.is_zero() {
        return Err(DomainError::ZeroModulus);
    }
    if m.is_unit() {
        return Ok(Verdict::Pass);
    }
    let rs = ResidueSemigroup::new(m)?;
    let pj = pj_on(&rs);
    let tau = tau_classes(m)?;
    let us = units(m.domain());

    // unit orbits stay inside both partitions' classes
    let mut orbit_label = Vec::with_capacity(rs.order());
    for i in 0..rs.order() {
        let mut least = usize::MAX;
        for u in &us {
            let j = rs.reduce(&rs.transversal()[i].mul(u)?)?;
            if !pj.same_class(i, j) || !tau.partition.same_class(i, j) {
                return Ok(Verdict::Fail(CoherenceFailure::UnitOrbitEscapesClass {
                    residue: i,
                }));
            }
            least = least.min(j);
        }
        orbit_label.push(least);
    }

    // the orbit quotient realizes the associate-class monoid on residues;
    // its definitional separator of the zero image must be the image of
    // the separator class
    let orbits = Partition::from_labels(&orbit_label);
    if !rs.semigroup().is_congruence(&orbits) {
        return Ok(Verdict::Fail(CoherenceFailure::OrbitsNotACongruence));
    }
    let (orbit_quotient, _) = rs
        .semigroup()
        .quotient(&orbits)
        .expect("congruence just checked");
    let zero_image =
        ElementSet::from_members(orbit_quotient.order(), [orbits.class_of(rs.zero_index())]);
    let sep_class = pj.class_set(pj.class_of(rs.one_index()));
    let sep_image = ElementSet::from_members(
        orbit_quotient.order(),
        sep_class.iter().map(|i| orbits.class_of(i)),
    );
    if separator(&orbit_quotient, &zero_image) != sep_image {
        return Ok(Verdict::Fail(CoherenceFailure::SeparatorImageMismatch));
    }

    // the canonical image of the separator class is disjoint from the
    // canonical image of the rest, and canonicalizing keeps members inside
    let canon_of = |i: usize| rs.transversal()[i].canonical_associate();
    let canon_image: BTreeSet<Element> = sep_class.iter().map(canon_of).collect();
    for i in 0..rs.order() {
        let inside = sep_class.contains(i);
        let canon = canon_of(i);
        if inside {
            let back = rs.reduce(&canon)?;
            if !sep_class.contains(back) {
                return Ok(Verdict::Fail(CoherenceFailure::CanonicalImageOverlap));
            }
        } else if canon_image.contains(&canon) {
            return Ok(Verdict::Fail(CoherenceFailure::CanonicalImageOverlap));
        }
    }

    // classification on canonical representatives only
    let m_canon = m.canonical_associate();
    let canon_gcds: BTreeSet<Element> = (0..rs.order())
        .map(|i| canon_of(i).gcd(&m_canon))
        .collect::<Result<_, _>>()?;
    if canon_gcds.len() != pj.num_classes() {
        return Ok(Verdict::Fail(
            CoherenceFailure::CanonicalClassCountMismatch {
                got: canon_gcds.len(),
                want: pj.num_classes(),
            },
        ));
    }
    Ok(Verdict::Pass)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityFailure {
    pub a: String,
    pub b: String,
    pub s: String,
}

/// Scaling stability of the gcd relation: related elements stay related
/// after multiplying both by any element.
pub fn tau_mul_stability_check(
    m: &Element,
    triples: &[(Element, Element, Element)],
) -> Result<Verdict<StabilityFailure>, DomainError> {
    for (a, b, s) in triples {
        if tau_related(m, a, b)? {
            let sa = s.mul(a)?;
            let sb = s.mul(b)?;
            if !tau_related(m, &sa, &sb)? {
                return Ok(Verdict::Fail(StabilityFailure {
                    a: a.to_string(),
                    b: b.to_string(),
                    s: s.to_string(),
                }));
            }
        }
    }
    Ok(Verdict::Pass)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum SharpnessFailure {
    WitnessesAssociated,
    ContextsDiffer { x: String, y: String },
    ProductVanishedUnexpectedly { x: String, y: String },
}

/// With modulus zero the gcd relation collapses to the associate relation,
/// which is strictly finer than the principal congruence of `{0}`: in an
/// integral domain `x*a*y = 0` forces `x = 0` or `y = 0`, so all nonzero
/// elements share one class there. Verified on a bounded window around the
/// witnesses, which is enough since triple products vanish only through a
/// zero factor.
pub fn tau_zero_sharpness_check(domain: DomainId) -> Verdict<SharpnessFailure> {
    let zero = Element::zero(domain);
    let (a, b) = sharpness_witnesses(domain);
    let tau0_separates = a
        .gcd(&zero)
        .and_then(|ga| b.gcd(&zero).map(|gb| ga != gb))
        .unwrap_or(false);
    if !tau0_separates {
        return Verdict::Fail(SharpnessFailure::WitnessesAssociated);
    }
    for x in window(domain) {
        for y in window(domain) {
            let xay = x.mul(&a).and_then(|t| t.mul(&y)).expect("same domain");
            let xby = x.mul(&b).and_then(|t| t.mul(&y)).expect("same domain");
            if xay.is_zero() != xby.is_zero() {
                return Verdict::Fail(SharpnessFailure::ContextsDiffer {
                    x: x.to_string(),
                    y: y.to_string(),
                });
            }
            let expect_zero = x.is_zero() || y.is_zero();
            if xay.is_zero() != expect_zero {
                return Verdict::Fail(SharpnessFailure::ProductVanishedUnexpectedly {
                    x: x.to_string(),
                    y: y.to_string(),
                });
            }
        }
    }
    Verdict::Pass
}

fn sharpness_witnesses(domain: DomainId) -> (Element, Element) {
    match domain {
        DomainId::Integers | DomainId::Quadratic { .. } => {
            (Element::from_int(domain, 2), Element::from_int(domain, 3))
        }
        DomainId::Poly { p } => (
            Element::poly(p, &[0, 1]).expect("valid prime"),
            Element::poly(p, &[1, 1]).expect("valid prime"),
        ),
    }
}

fn window(domain: DomainId) -> Vec<Element> {
    match domain {
        DomainId::Integers => (-6..=6).map(Element::integer).collect(),
        DomainId::Poly { p } => {
            let p64 = p as i64;
            let mut out = Vec::new();
            for c0 in 0..p64 {
                for c1 in 0..p64 {
                    out.push(Element::poly(p, &[c0, c1]).expect("valid prime"));
                }
            }
            out
        }
        DomainId::Quadratic { d } => {
            let mut out = Vec::new();
            for x in -3i64..=3 {
                for y in -3i64..=3 {
                    out.push(Element::quad(d, x, y).expect("valid d"));
                }
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::divisors::canonical_divisors;

    #[test]
    fn tau_relation_mod_6() {
        let m = Element::integer(6);
        assert!(tau_related(&m, &Element::integer(4), &Element::integer(10)).unwrap());
        assert!(!tau_related(&m, &Element::integer(2), &Element::integer(3)).unwrap());
    }

    #[test]
    fn tau_with_zero_modulus_is_the_associate_relation() {
        let zero = Element::integer(0);
        assert!(tau_related(&zero, &Element::integer(2), &Element::integer(-2)).unwrap());
        assert!(!tau_related(&zero, &Element::integer(2), &Element::integer(3)).unwrap());
    }

    #[test]
    fn tau_classes_mod_6() {
        let t = tau_classes(&Element::integer(6)).unwrap();
        assert_eq!(
            t.partition().classes(),
            vec![vec![0], vec![1, 5], vec![2, 4], vec![3]]
        );
        assert_eq!(
            t.divisors().to_vec(),
            vec![
                Element::integer(6),
                Element::integer(1),
                Element::integer(2),
                Element::integer(3)
            ]
        );
        assert_eq!(t.num_classes(), 4);
    }

    #[test]
    fn tau_classes_rejects_degenerate_moduli() {
        assert_eq!(
            tau_classes(&Element::integer(0)).unwrap_err(),
            DomainError::ZeroModulus
        );
        assert_eq!(
            tau_classes(&Element::integer(-1)).unwrap_err(),
            DomainError::UnitModulus
        );
    }

    #[test]
    fn pj_mod_6_matches_gcd_classes() {
        let p = principal_ideal_congruence(&Element::integer(6)).unwrap();
        assert_eq!(p.classes(), vec![vec![0], vec![1, 5], vec![2, 4], vec![3]]);
    }

    #[test]
    fn pj_of_unit_is_universal() {
        let p = principal_ideal_congruence(&Element::integer(1)).unwrap();
        assert_eq!(p, Partition::universal(1));
    }

    #[test]
    fn pj_of_gaussian_one_plus_i() {
        let p = principal_ideal_congruence(&Element::quad(-1, 1, 1).unwrap()).unwrap();
        assert_eq!(p.num_classes(), 2);
    }

    #[test]
    fn agreement_checks_pass_on_fixtures() {
        assert!(tau_congruence_check(&Element::integer(6)).unwrap().passed());
        assert!(tau_congruence_check(&Element::integer(1)).unwrap().passed());
        assert!(tau_congruence_check(&Element::quad(-1, 5, 0).unwrap())
            .unwrap()
            .passed());
        let f = Element::poly(5, &[2, 3, 1]).unwrap(); // (x+1)(x+2)
        assert!(tau_congruence_check(&f).unwrap().passed());
    }

    #[test]
    fn gaussian_five_has_four_classes() {
        let t = tau_classes(&Element::quad(-1, 5, 0).unwrap()).unwrap();
        assert_eq!(t.num_classes(), 4);
    }

    #[test]
    fn separator_class_mod_6() {
        let m = Element::integer(6);
        assert!(separator_class_check(&m).unwrap().passed());
        let p = principal_ideal_congruence(&m).unwrap();
        // identity class is the coprime residues {1, 5}
        assert_eq!(p.class_members(p.class_of(1)), vec![1, 5]);
    }

    #[test]
    fn separator_class_f2_x_squared() {
        // residues of x^2 over F2: 0, 1, x, x+1; coprime ones are 1 and x+1
        let m = Element::poly(2, &[0, 0, 1]).unwrap();
        assert!(separator_class_check(&m).unwrap().passed());
        let p = principal_ideal_congruence(&m).unwrap();
        assert_eq!(p.class_members(p.class_of(1)), vec![1, 3]);
    }

    #[test]
    fn separator_class_gaussian() {
        let m = Element::quad(-1, 1, 1).unwrap();
        assert!(separator_class_check(&m).unwrap().passed());
        assert_eq!(
            separator_class_check(&Element::integer(1)).unwrap_err(),
            DomainError::UnitModulus
        );
    }

    #[test]
    fn divisor_counts() {
        assert_eq!(divisor_count(&Element::integer(6)).unwrap(), 4);
        assert_eq!(divisor_count(&Element::integer(12)).unwrap(), 6);
        assert_eq!(divisor_count(&Element::integer(-1)).unwrap(), 1);
        assert_eq!(divisor_count(&Element::quad(-1, 5, 0).unwrap()).unwrap(), 4);
    }

    #[test]
    fn cubic_with_three_roots_has_eight_divisors_mod_5() {
        // x^3 + 2x^2 - x - 2 = (x - 1)(x + 1)(x + 2); its three roots stay
        // distinct mod 5, so the count carries over and the oracle agrees
        let f = Element::poly(5, &[-2, -1, 2, 1]).unwrap();
        assert_eq!(divisor_count(&f).unwrap(), 8);
        assert_eq!(
            crate::domain::divisors::divisor_count_oracle(&f).unwrap(),
            8
        );
    }

    #[test]
    fn coherence_on_fixtures() {
        assert!(associate_coherence_check(&Element::integer(6))
            .unwrap()
            .passed());
        assert!(associate_coherence_check(&Element::quad(-1, 5, 0).unwrap())
            .unwrap()
            .passed());
        // x^2 + 1 over F3
        assert!(
            associate_coherence_check(&Element::poly(3, &[1, 0, 1]).unwrap())
                .unwrap()
                .passed()
        );
    }

    #[test]
    fn stability_samples() {
        let m = Element::integer(6);
        let triples = vec![
            (
                Element::integer(4),
                Element::integer(10),
                Element::integer(3),
            ),
            (
                Element::integer(7),
                Element::integer(7),
                Element::integer(2),
            ),
        ];
        assert!(tau_mul_stability_check(&m, &triples).unwrap().passed());

        let gm = Element::quad(-1, 5, 0).unwrap();
        let a = Element::quad(-1, 2, 1).unwrap();
        let b = a.mul(&Element::quad(-1, 0, 1).unwrap()).unwrap();
        let s = Element::quad(-1, 1, 1).unwrap();
        assert!(tau_mul_stability_check(&gm, &[(a, b, s)]).unwrap().passed());
    }

    #[test]
    fn sharpness_in_all_three_families() {
        assert!(tau_zero_sharpness_check(DomainId::Integers).passed());
        assert!(tau_zero_sharpness_check(DomainId::poly(2).unwrap()).passed());
        assert!(tau_zero_sharpness_check(DomainId::quadratic(-1).unwrap()).passed());
    }

    #[test]
    fn tau_classes_serialize_shape() {
        let t = tau_classes(&Element::integer(6)).unwrap();
        let js = serde_json::to_value(&t).unwrap();
        assert_eq!(js["modulus"], "6");
        assert_eq!(js["divisors"][0], "6");
        assert_eq!(js["classes"][1], serde_json::json!([1, 5]));
    }

    #[test]
    fn class_representatives_are_the_canonical_divisors() {
        for m in [
            Element::integer(6),
            Element::integer(12),
            Element::quad(-1, 5, 0).unwrap(),
            Element::poly(5, &[2, 3, 1]).unwrap(),
        ] {
            let t = tau_classes(&m).unwrap();
            let from_classes: BTreeSet<Element> = t.divisors().iter().cloned().collect();
            let from_oracle: BTreeSet<Element> =
                canonical_divisors(&m).unwrap().into_iter().collect();
            assert_eq!(from_classes, from_oracle, "m = {m}");
            // one and only one divisor per class
            assert_eq!(from_classes.len(), t.num_classes(), "m = {m}");
        }
    }
}
