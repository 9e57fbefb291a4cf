//! Checkers for the structural laws tying ideals, separators and principal
//! congruences together on finite commutative semigroups.

use serde::Serialize;

use super::ideals::{is_ideal, is_prime_ideal, maximal_ideals, separator};
use super::iso::iso_check;
use super::partition::Partition;
use super::set::ElementSet;
use super::{CommSemigroup, SemigroupError};

/// Outcome of a law check: either everything held, or a witness of failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict<F> {
    Pass,
    Fail(F),
}

impl<F> Verdict<F> {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn failure(&self) -> Option<&F> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(f) => Some(f),
        }
    }
}

/// Why the star condition failed.
///
/// The star condition on a finite commutative semigroup: it is a monoid with
/// a zero, every non-identity element is torsion, and distinct elements have
/// distinct annihilators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum StarFailure {
    NotMonoidWithZero,
    NonTorsionElement { element: usize },
    AnnihilatorCollision { s: usize, t: usize },
}

pub fn condition_star_check(s: &CommSemigroup) -> Verdict<StarFailure> {
    let (Some(e), Some(_z)) = (s.identity(), s.zero()) else {
        return Verdict::Fail(StarFailure::NotMonoidWithZero);
    };
    if s.order() == 1 {
        return Verdict::Pass;
    }
    let torsion = s.torsion_set().expect("zero and order checked above");
    for x in 0..s.order() {
        if x != e && !torsion.contains(x) {
            return Verdict::Fail(StarFailure::NonTorsionElement { element: x });
        }
    }
    let anns: Vec<ElementSet> = (0..s.order())
        .map(|x| s.annihilator(x).expect("zero present"))
        .collect();
    for a in 0..s.order() {
        for b in a + 1..s.order() {
            if anns[a] == anns[b] {
                return Verdict::Fail(StarFailure::AnnihilatorCollision { s: a, t: b });
            }
        }
    }
    Verdict::Pass
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderFailure {
    /// Distinct elements generating the same principal ideal.
    pub a: usize,
    pub b: usize,
}

/// Antisymmetry of the divisibility quasi-order on a monoid: `a*S = b*S`
/// may only happen for `a = b`.
pub fn natural_order_check(s: &CommSemigroup) -> Result<Verdict<OrderFailure>, SemigroupError> {
    if s.identity().is_none() {
        return Err(SemigroupError::NoIdentity);
    }
    let cones: Vec<ElementSet> = (0..s.order())
        .map(|a| ElementSet::from_members(s.order(), (0..s.order()).map(|x| s.mul(a, x))))
        .collect();
    for a in 0..s.order() {
        for b in a + 1..s.order() {
            if cones[a] == cones[b] {
                return Ok(Verdict::Fail(OrderFailure { a, b }));
            }
        }
    }
    Ok(Verdict::Pass)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum SeparatorQuotientFailure {
    IdealNotOneClass,
    SeparatorNotOneClass,
    IdealNotZeroClass,
    SeparatorNotIdentityClass,
    QuotientNotStar(StarFailure),
}

/// For an ideal with a nonempty separator: the ideal and its separator are
/// single classes of the principal congruence, they land on the zero and the
/// identity of the quotient, and the quotient satisfies the star condition.
pub fn separator_quotient_check(
    c: &CommSemigroup,
    ideal: &ElementSet,
) -> Result<Verdict<SeparatorQuotientFailure>, SemigroupError> {
    if !is_ideal(c, ideal)? {
        return Err(SemigroupError::NotAnIdeal);
    }
    let sep = separator(c, ideal);
    if sep.is_empty() {
        return Err(SemigroupError::EmptySeparator);
    }
    let p = c.principal_congruence(ideal);
    let ideal_class = p.class_of(ideal.iter().next().expect("ideal nonempty"));
    if p.class_set(ideal_class) != *ideal {
        return Ok(Verdict::Fail(SeparatorQuotientFailure::IdealNotOneClass));
    }
    let sep_class = p.class_of(sep.iter().next().expect("separator nonempty"));
    if p.class_set(sep_class) != sep {
        return Ok(Verdict::Fail(
            SeparatorQuotientFailure::SeparatorNotOneClass,
        ));
    }
    let (q, _) = c.quotient(&p)?;
    if q.zero() != Some(ideal_class) {
        return Ok(Verdict::Fail(SeparatorQuotientFailure::IdealNotZeroClass));
    }
    if q.identity() != Some(sep_class) {
        return Ok(Verdict::Fail(
            SeparatorQuotientFailure::SeparatorNotIdentityClass,
        ));
    }
    if let Verdict::Fail(f) = condition_star_check(&q) {
        return Ok(Verdict::Fail(SeparatorQuotientFailure::QuotientNotStar(f)));
    }
    Ok(Verdict::Pass)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum RecoveryFailure {
    ZeroClassNotIdeal,
    SeparatorNotIdentityClass,
    CongruenceNotRecovered,
}

/// Converse direction: from a congruence whose quotient satisfies the star
/// condition, recover the ideal (the zero class) and confirm that its
/// separator is the identity class and its principal congruence is the
/// original congruence. Returns the recovered ideal alongside the verdict.
pub fn star_quotient_recovery_check(
    c: &CommSemigroup,
    alpha: &Partition,
) -> Result<(Verdict<RecoveryFailure>, ElementSet), SemigroupError> {
    let (q, _) = c.quotient(alpha)?;
    if !condition_star_check(&q).passed() {
        return Err(SemigroupError::QuotientNotStar);
    }
    let zero_class = q.zero().expect("star quotient has a zero");
    let ideal = alpha.class_set(zero_class);
    if !is_ideal(c, &ideal)? {
        return Ok((Verdict::Fail(RecoveryFailure::ZeroClassNotIdeal), ideal));
    }
    let identity_class = q.identity().expect("star quotient has an identity");
    if separator(c, &ideal) != alpha.class_set(identity_class) {
        return Ok((
            Verdict::Fail(RecoveryFailure::SeparatorNotIdentityClass),
            ideal,
        ));
    }
    if c.principal_congruence(&ideal) != *alpha {
        return Ok((
            Verdict::Fail(RecoveryFailure::CongruenceNotRecovered),
            ideal,
        ));
    }
    Ok((Verdict::Pass, ideal))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaximalIdealFailure {
    pub prime: bool,
    pub separator_nonempty: bool,
    pub two_element_star_quotient: bool,
}

/// On a maximal ideal, primality, a nonempty separator, and a two-element
/// monoid-with-zero quotient stand or fall together. The three assertions are
/// evaluated independently; the check passes iff they agree.
pub fn maximal_ideal_check(
    s: &CommSemigroup,
    m: &ElementSet,
) -> Result<Verdict<MaximalIdealFailure>, SemigroupError> {
    if !is_ideal(s, m)? || m.is_full() {
        return Err(SemigroupError::NotMaximal);
    }
    if !maximal_ideals(s).contains(m) {
        return Err(SemigroupError::NotMaximal);
    }
    let prime = is_prime_ideal(s, m)?;
    let separator_nonempty = !separator(s, m).is_empty();
    let (q, _) = s.quotient(&s.principal_congruence(m))?;
    let two_element_star_quotient = q.order() == 2 && q.identity().is_some() && q.zero().is_some();
    if prime == separator_nonempty && separator_nonempty == two_element_star_quotient {
        Ok(Verdict::Pass)
    } else {
        Ok(Verdict::Fail(MaximalIdealFailure {
            prime,
            separator_nonempty,
            two_element_star_quotient,
        }))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum StripZeroFailure {
    RestrictionMismatch { a: usize, b: usize },
    QuotientsNotIsomorphic,
}

/// Removing the zero from a semigroup whose nonzero elements are closed under
/// multiplication must not change the congruence picture: the restriction of
/// the principal congruence of `I` equals the principal congruence of
/// `I` minus zero, and the two quotients are isomorphic.
pub fn strip_zero_check(
    c: &CommSemigroup,
    ideal: &ElementSet,
) -> Result<Verdict<StripZeroFailure>, SemigroupError> {
    let zero = c.zero().ok_or(SemigroupError::NoZero)?;
    for a in 0..c.order() {
        for b in 0..c.order() {
            if a != zero && b != zero && c.mul(a, b) == zero {
                return Err(SemigroupError::NonzeroNotClosed { a, b });
            }
        }
    }
    if !is_ideal(c, ideal)? {
        return Err(SemigroupError::NotAnIdeal);
    }
    let nonzero: Vec<usize> = (0..c.order()).filter(|&x| x != zero).collect();
    let star_members: Vec<usize> = ideal.iter().filter(|&x| x != zero).collect();
    if star_members.is_empty() {
        return Err(SemigroupError::ZeroIdealOnly);
    }

    // reindex the nonzero part
    let mut new_index = vec![usize::MAX; c.order()];
    for (i, &x) in nonzero.iter().enumerate() {
        new_index[x] = i;
    }
    let m = nonzero.len();
    let mut table = vec![0usize; m * m];
    for (i, &x) in nonzero.iter().enumerate() {
        for (j, &y) in nonzero.iter().enumerate() {
            table[i * m + j] = new_index[c.mul(x, y)];
        }
    }
    let c_star = CommSemigroup::from_table_unchecked(m, table, None);
    let ideal_star = ElementSet::from_members(m, star_members.iter().map(|&x| new_index[x]));

    let p = c.principal_congruence(ideal);
    let p_star = c_star.principal_congruence(&ideal_star);
    for (i, &x) in nonzero.iter().enumerate() {
        for (j, &y) in nonzero.iter().enumerate() {
            if p.same_class(x, y) != p_star.same_class(i, j) {
                return Ok(Verdict::Fail(StripZeroFailure::RestrictionMismatch {
                    a: x,
                    b: y,
                }));
            }
        }
    }
    let (q, _) = c.quotient(&p)?;
    let (q_star, _) = c_star.quotient(&p_star)?;
    if iso_check(&q, &q_star)?.is_none() {
        return Ok(Verdict::Fail(StripZeroFailure::QuotientsNotIsomorphic));
    }
    Ok(Verdict::Pass)
}

/// Tally of one run of the structural law suite over a single semigroup.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LawSuiteReport {
    pub torsion_ideal: usize,
    pub order_implication: usize,
    pub separator_quotient: usize,
    pub congruence_recovery: usize,
    pub maximal_ideal: usize,
    pub failures: Vec<String>,
}

impl LawSuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn absorb(&mut self, other: &LawSuiteReport) {
        self.torsion_ideal += other.torsion_ideal;
        self.order_implication += other.order_implication;
        self.separator_quotient += other.separator_quotient;
        self.congruence_recovery += other.congruence_recovery;
        self.maximal_ideal += other.maximal_ideal;
        self.failures.extend(other.failures.iter().cloned());
    }
}

/// Run every applicable structural check on one semigroup: the torsion set
/// is an ideal, the star condition forces an antisymmetric natural order,
/// every ideal with a nonempty separator yields a star quotient with the
/// ideal and separator as distinguished classes, every congruence with a
/// star quotient is recovered from its zero class, and the three
/// maximal-ideal assertions agree.
///
/// With `exhaustive_subsets`, the recovery direction draws congruences from
/// the principal congruences of all `2^n` subsets; otherwise only from
/// ideals (the scalable choice for user-supplied tables).
pub fn law_suite(s: &CommSemigroup, exhaustive_subsets: bool) -> LawSuiteReport {
    let mut report = LawSuiteReport::default();
    let table = || s.to_table_text().replace('\n', ";");

    if s.zero().is_some() && s.order() >= 2 {
        let torsion = s.torsion_set().expect("zero present and order checked");
        match super::ideals::is_ideal(s, &torsion) {
            Ok(true) => report.torsion_ideal += 1,
            _ => report.failures.push(format!(
                "torsion set {torsion:?} is not an ideal in {}",
                table()
            )),
        }
    }

    if condition_star_check(s).passed() {
        report.order_implication += 1;
        match natural_order_check(s) {
            Ok(Verdict::Pass) => {}
            other => report.failures.push(format!(
                "star condition holds but natural order fails ({other:?}) in {}",
                table()
            )),
        }
    }

    let ideals = super::ideals::enumerate_ideals(s);
    for ideal in &ideals {
        if separator(s, ideal).is_empty() {
            continue;
        }
        match separator_quotient_check(s, ideal) {
            Ok(Verdict::Pass) => report.separator_quotient += 1,
            other => report.failures.push(format!(
                "separator quotient check failed for {ideal:?} in {}: {other:?}",
                table()
            )),
        }
    }

    // subset exhaustion is only meaningful at census scale
    let exhaustive_subsets = exhaustive_subsets && s.order() <= 20;
    let congruences: Vec<Partition> = if exhaustive_subsets {
        let mut seen = std::collections::HashSet::new();
        let n = s.order();
        let mut out = Vec::new();
        for mask in 0u64..1 << n {
            let h = ElementSet::from_members(n, (0..n).filter(|&i| mask >> i & 1 == 1));
            let p = s.principal_congruence(&h);
            if seen.insert(p.clone()) {
                out.push(p);
            }
        }
        out
    } else {
        ideals.iter().map(|i| s.principal_congruence(i)).collect()
    };
    for alpha in &congruences {
        match star_quotient_recovery_check(s, alpha) {
            Ok((Verdict::Pass, _)) => report.congruence_recovery += 1,
            Err(SemigroupError::QuotientNotStar) => {}
            other => report.failures.push(format!(
                "recovery check failed for {alpha:?} in {}: {other:?}",
                table()
            )),
        }
    }

    for m in super::ideals::maximal_ideals(s) {
        match maximal_ideal_check(s, &m) {
            Ok(Verdict::Pass) => report.maximal_ideal += 1,
            other => report.failures.push(format!(
                "maximal ideal check failed for {m:?} in {}: {other:?}",
                table()
            )),
        }
    }

    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{mul_mod, three_element_monoid, CommSemigroup};

    #[test]
    fn star_condition_verdicts() {
        assert!(condition_star_check(&three_element_monoid()).passed());

        let one = CommSemigroup::validate(&[vec![0]]).unwrap();
        assert!(condition_star_check(&one).passed());

        // 3 is a non-identity unit of Z/4, so its annihilator is {0}
        let z4 = mul_mod(4);
        assert_eq!(
            condition_star_check(&z4),
            Verdict::Fail(StarFailure::NonTorsionElement { element: 3 })
        );

        let group = CommSemigroup::validate(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(
            condition_star_check(&group),
            Verdict::Fail(StarFailure::NotMonoidWithZero)
        );
    }

    #[test]
    fn natural_order_verdicts() {
        assert!(natural_order_check(&three_element_monoid())
            .unwrap()
            .passed());

        // in a group every translate is the whole carrier
        let group = CommSemigroup::validate(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(
            natural_order_check(&group).unwrap(),
            Verdict::Fail(OrderFailure { a: 0, b: 1 })
        );

        let one = CommSemigroup::validate(&[vec![0]]).unwrap();
        assert!(natural_order_check(&one).unwrap().passed());

        let no_id = CommSemigroup::validate(&[vec![0, 0], vec![0, 0]]).unwrap();
        assert_eq!(
            natural_order_check(&no_id).unwrap_err(),
            SemigroupError::NoIdentity
        );
    }

    #[test]
    fn separator_quotient_on_fixtures() {
        let s = three_element_monoid();
        let zero_only = ElementSet::from_members(3, [2]);
        assert!(separator_quotient_check(&s, &zero_only).unwrap().passed());

        // whole semigroup as ideal: universal congruence, one-class quotient
        assert!(separator_quotient_check(&s, &ElementSet::full(3))
            .unwrap()
            .passed());

        let z6 = mul_mod(6);
        assert!(
            separator_quotient_check(&z6, &ElementSet::from_members(6, [0]))
                .unwrap()
                .passed()
        );
    }

    #[test]
    fn separator_quotient_requires_nonempty_separator() {
        // null semigroup of order 3 with a non-full, non-singleton ideal:
        // every product is 0, Sep {0,1} = Id{0,1} & Id{2} and 2*2=0 fails both
        let null3 =
            CommSemigroup::validate(&[vec![0, 0, 0], vec![0, 0, 0], vec![0, 0, 0]]).unwrap();
        let i = ElementSet::from_members(3, [0, 1]);
        assert_eq!(
            separator_quotient_check(&null3, &i).unwrap_err(),
            SemigroupError::EmptySeparator
        );
    }

    #[test]
    fn recovery_on_fixtures() {
        let z6 = mul_mod(6);
        let alpha = z6.principal_congruence(&ElementSet::from_members(6, [0]));
        let (verdict, ideal) = star_quotient_recovery_check(&z6, &alpha).unwrap();
        assert!(verdict.passed());
        assert_eq!(ideal.members(), vec![0]);

        let s = three_element_monoid();
        let (verdict, ideal) = star_quotient_recovery_check(&s, &Partition::discrete(3)).unwrap();
        assert!(verdict.passed());
        assert_eq!(ideal.members(), vec![2]);

        let (verdict, ideal) = star_quotient_recovery_check(&s, &Partition::universal(3)).unwrap();
        assert!(verdict.passed());
        assert!(ideal.is_full());
    }

    #[test]
    fn recovery_rejects_non_star_quotient() {
        // discrete congruence on Z/4: quotient is Z/4 itself, which fails star
        let z4 = mul_mod(4);
        assert_eq!(
            star_quotient_recovery_check(&z4, &Partition::discrete(4)).unwrap_err(),
            SemigroupError::QuotientNotStar
        );
    }

    #[test]
    fn maximal_ideal_agreement() {
        let z4 = mul_mod(4);
        let m = ElementSet::from_members(4, [0, 2]);
        assert!(maximal_ideal_check(&z4, &m).unwrap().passed());

        let s = three_element_monoid();
        let m = ElementSet::from_members(3, [1, 2]);
        assert!(maximal_ideal_check(&s, &m).unwrap().passed());

        let z6 = mul_mod(6);
        assert_eq!(
            maximal_ideal_check(&z6, &ElementSet::from_members(6, [0])).unwrap_err(),
            SemigroupError::NotMaximal
        );
    }

    #[test]
    fn law_suite_on_fixtures() {
        let report = law_suite(&three_element_monoid(), true);
        assert!(report.passed(), "{:?}", report.failures);
        assert!(report.torsion_ideal == 1);
        assert!(report.order_implication == 1);
        assert!(report.separator_quotient >= 1);
        assert!(report.congruence_recovery >= 1);
        assert_eq!(report.maximal_ideal, 1);

        let report6 = law_suite(&mul_mod(6), true);
        assert!(report6.passed(), "{:?}", report6.failures);

        // a group has no zero: most checks are vacuous, none may fail
        let group = CommSemigroup::validate(&[vec![0, 1], vec![1, 0]]).unwrap();
        let rg = law_suite(&group, true);
        assert!(rg.passed(), "{:?}", rg.failures);
        assert_eq!(rg.torsion_ideal, 0);
    }

    #[test]
    fn strip_zero_on_semilattice() {
        // chain semilattice 1 > a > 0
        let chain =
            CommSemigroup::validate(&[vec![0, 1, 2], vec![1, 1, 2], vec![2, 2, 2]]).unwrap();
        let i = ElementSet::from_members(3, [1, 2]);
        assert!(strip_zero_check(&chain, &i).unwrap().passed());

        let z6 = mul_mod(6);
        assert!(matches!(
            strip_zero_check(&z6, &ElementSet::from_members(6, [0])).unwrap_err(),
            SemigroupError::NonzeroNotClosed { .. }
        ));

        // Z/5: nonzero part is a group; whole-semigroup ideal gives trivial
        // quotients on both sides
        let z5 = mul_mod(5);
        assert!(strip_zero_check(&z5, &ElementSet::full(5))
            .unwrap()
            .passed());
    }
}
