//! Ideals, idealizers and separators of subsets of a commutative semigroup.

use std::collections::BTreeSet;

use super::set::ElementSet;
use super::{CommSemigroup, SemigroupError};

/// True iff the nonempty subset `a` absorbs multiplication: `S*A` inside `A`.
pub fn is_ideal(s: &CommSemigroup, a: &ElementSet) -> Result<bool, SemigroupError> {
    if a.is_empty() {
        return Err(SemigroupError::EmptySet);
    }
    Ok(a.iter()
        .all(|x| (0..s.order()).all(|t| a.contains(s.mul(t, x)))))
}

/// The idealizer `{x : x*A inside A}`. The idealizer of the empty set is the
/// whole semigroup.
pub fn idealizer(s: &CommSemigroup, a: &ElementSet) -> ElementSet {
    ElementSet::from_members(
        s.order(),
        (0..s.order()).filter(|&x| a.iter().all(|t| a.contains(s.mul(x, t)))),
    )
}

/// The separator of `a`: elements stabilizing both `a` and its complement.
pub fn separator(s: &CommSemigroup, a: &ElementSet) -> ElementSet {
    idealizer(s, a).intersection(&idealizer(s, &a.complement()))
}

/// The ideal generated by a single element: `{a}` together with `S*a`.
pub fn principal_ideal(s: &CommSemigroup, a: usize) -> ElementSet {
    let mut out = ElementSet::empty(s.order());
    out.insert(a);
    for t in 0..s.order() {
        out.insert(s.mul(t, a));
    }
    out
}

/// All nonempty ideals, as unions of principal ideals closed under union.
/// Deterministic order: ascending cardinality, then member list.
pub fn enumerate_ideals(s: &CommSemigroup) -> Vec<ElementSet> {
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let principals: Vec<ElementSet> = (0..s.order()).map(|a| principal_ideal(s, a)).collect();
    for p in &principals {
        found.insert(p.members());
    }
    loop {
        let snapshot: Vec<Vec<usize>> = found.iter().cloned().collect();
        let before = found.len();
        for current in &snapshot {
            let cur = ElementSet::from_members(s.order(), current.iter().copied());
            for p in &principals {
                found.insert(cur.union(p).members());
            }
        }
        if found.len() == before {
            break;
        }
    }
    let mut out: Vec<ElementSet> = found
        .into_iter()
        .map(|m| ElementSet::from_members(s.order(), m))
        .collect();
    out.sort_by_key(|i| (i.len(), i.members()));
    debug_assert!(out.iter().all(|i| is_ideal(s, i).unwrap()));
    out
}

/// Inclusion-maximal proper ideals.
pub fn maximal_ideals(s: &CommSemigroup) -> Vec<ElementSet> {
    let all: Vec<ElementSet> = enumerate_ideals(s)
        .into_iter()
        .filter(|i| !i.is_full())
        .collect();
    all.iter()
        .filter(|i| !all.iter().any(|j| *i != j && i.is_subset(j)))
        .cloned()
        .collect()
}

/// Element-wise primality: `a*b` in `I` forces `a` in `I` or `b` in `I`.
pub fn is_prime_ideal(s: &CommSemigroup, i: &ElementSet) -> Result<bool, SemigroupError> {
    if !is_ideal(s, i)? {
        return Err(SemigroupError::NotAnIdeal);
    }
    if i.is_full() {
        return Err(SemigroupError::NotProper);
    }
    for a in 0..s.order() {
        for b in 0..s.order() {
            if i.contains(s.mul(a, b)) && !i.contains(a) && !i.contains(b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True iff `a` is closed under multiplication.
pub fn is_subsemigroup(s: &CommSemigroup, a: &ElementSet) -> bool {
    a.iter().all(|x| a.iter().all(|y| a.contains(s.mul(x, y))))
}
