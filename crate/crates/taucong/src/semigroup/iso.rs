//! Table-preserving bijections between small semigroups.

use super::{CommSemigroup, SemigroupError};

const ISO_ORDER_LIMIT: usize = 12;

type Signature = (usize, Vec<(usize, usize)>);

fn initial_colors(s: &CommSemigroup) -> Vec<usize> {
    (0..s.order())
        .map(|a| {
            let idem = s.is_idempotent(a) as usize;
            let ident = (s.identity() == Some(a)) as usize;
            let zero = (s.zero() == Some(a)) as usize;
            idem | ident << 1 | zero << 2
        })
        .collect()
}

fn signatures(s: &CommSemigroup, colors: &[usize]) -> Vec<Signature> {
    (0..s.order())
        .map(|a| {
            let mut profile: Vec<(usize, usize)> = (0..s.order())
                .map(|x| (colors[x], colors[s.mul(a, x)]))
                .collect();
            profile.sort_unstable();
            (colors[a], profile)
        })
        .collect()
}

/// Joint colouring of both semigroups refined by the multiplication
/// structure. Colours are assigned by sorting the combined signatures, so
/// equal colours mean equal signatures across the two carriers; any
/// isomorphism must respect them.
fn refine_colors_joint(s1: &CommSemigroup, s2: &CommSemigroup) -> (Vec<usize>, Vec<usize>) {
    let mut c1 = initial_colors(s1);
    let mut c2 = initial_colors(s2);
    loop {
        let sig1 = signatures(s1, &c1);
        let sig2 = signatures(s2, &c2);
        let mut all: Vec<&Signature> = sig1.iter().chain(sig2.iter()).collect();
        all.sort();
        all.dedup();
        let rank = |sig: &Signature| all.binary_search(&sig).expect("present");
        let n1: Vec<usize> = sig1.iter().map(rank).collect();
        let n2: Vec<usize> = sig2.iter().map(rank).collect();
        if n1 == c1 && n2 == c2 {
            return (c1, c2);
        }
        c1 = n1;
        c2 = n2;
    }
}

fn extend(
    s1: &CommSemigroup,
    s2: &CommSemigroup,
    c1: &[usize],
    c2: &[usize],
    map: &mut Vec<Option<usize>>,
    used: &mut Vec<bool>,
    pos: usize,
) -> bool {
    let n = s1.order();
    if pos == n {
        return true;
    }
    for cand in 0..n {
        if used[cand] || c2[cand] != c1[pos] {
            continue;
        }
        map[pos] = Some(cand);
        used[cand] = true;
        // Every pair (a, b) gets verified exactly when the last of
        // a, b, a*b receives its image, so checking pairs with all three
        // assigned at each step is sound and complete.
        let consistent = (0..=pos).all(|a| {
            (0..=pos).all(|b| {
                let prod = s1.mul(a, b);
                prod > pos || s2.mul(map[a].unwrap(), map[b].unwrap()) == map[prod].unwrap()
            })
        });
        if consistent && extend(s1, s2, c1, c2, map, used, pos + 1) {
            return true;
        }
        map[pos] = None;
        used[cand] = false;
    }
    false
}

/// Search for a table-preserving bijection. Intended for orders up to 12.
pub fn iso_check(
    s1: &CommSemigroup,
    s2: &CommSemigroup,
) -> Result<Option<Vec<usize>>, SemigroupError> {
    if s1.order() > ISO_ORDER_LIMIT || s2.order() > ISO_ORDER_LIMIT {
        return Err(SemigroupError::SizeLimitExceeded {
            what: format!("isomorphism search capped at order {ISO_ORDER_LIMIT}"),
        });
    }
    if s1.order() != s2.order() {
        return Ok(None);
    }
    let (c1, c2) = refine_colors_joint(s1, s2);
    // colour class sizes must agree
    let n = s1.order();
    let count = |cs: &[usize]| {
        let mut hist = vec![0usize; 2 * n];
        for &c in cs {
            hist[c] += 1;
        }
        hist
    };
    if count(&c1) != count(&c2) {
        return Ok(None);
    }
    let mut map = vec![None; n];
    let mut used = vec![false; n];
    if extend(s1, s2, &c1, &c2, &mut map, &mut used, 0) {
        let out: Vec<usize> = map.into_iter().map(Option::unwrap).collect();
        debug_assert!((0..n).all(|a| (0..n).all(|b| s2.mul(out[a], out[b]) == out[s1.mul(a, b)])));
        Ok(Some(out))
    } else {
        Ok(None)
    }
}
