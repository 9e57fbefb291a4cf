//! Generation of commutative semigroup tables: exhaustive for tiny orders,
//! seeded randomized search beyond.

use rand::prelude::IndexedRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{CommSemigroup, SemigroupError};

const EXHAUSTIVE_ORDER_LIMIT: usize = 4;

/// Every commutative, associative table of order `n`, each exactly once (as
/// raw tables, not up to isomorphism), in lexicographic order of the upper
/// triangle. Only available for `n <= 4`.
pub fn exhaustive(n: usize) -> Result<impl Iterator<Item = CommSemigroup>, SemigroupError> {
    if n == 0 || n > EXHAUSTIVE_ORDER_LIMIT {
        return Err(SemigroupError::SizeLimitExceeded {
            what: format!("exhaustive generation capped at order {EXHAUSTIVE_ORDER_LIMIT}"),
        });
    }
    Ok(ExhaustiveIter {
        n,
        triangle: vec![0; n * (n + 1) / 2],
        done: false,
    })
}

struct ExhaustiveIter {
    n: usize,
    triangle: Vec<usize>,
    done: bool,
}

impl ExhaustiveIter {
    fn table(&self) -> Vec<usize> {
        let n = self.n;
        let mut table = vec![0usize; n * n];
        let mut k = 0;
        for a in 0..n {
            for b in a..n {
                table[a * n + b] = self.triangle[k];
                table[b * n + a] = self.triangle[k];
                k += 1;
            }
        }
        table
    }

    fn advance(&mut self) {
        for slot in self.triangle.iter_mut().rev() {
            if *slot + 1 < self.n {
                *slot += 1;
                return;
            }
            *slot = 0;
        }
        self.done = true;
    }
}

impl Iterator for ExhaustiveIter {
    type Item = CommSemigroup;

    fn next(&mut self) -> Option<CommSemigroup> {
        while !self.done {
            let table = self.table();
            self.advance();
            if is_associative(self.n, &table) {
                return Some(CommSemigroup::from_table_unchecked(self.n, table, None));
            }
        }
        None
    }
}

fn is_associative(n: usize, table: &[usize]) -> bool {
    for a in 0..n {
        for b in 0..n {
            let ab = table[a * n + b];
            for c in 0..n {
                if table[ab * n + c] != table[a * n + table[b * n + c]] {
                    return false;
                }
            }
        }
    }
    true
}

fn violations(n: usize, table: &[usize]) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let ab = table[a * n + b];
            for c in 0..n {
                if table[ab * n + c] != table[a * n + table[b * n + c]] {
                    out.push((a, b, c));
                }
            }
        }
    }
    out
}

/// Valid tables found by a seeded min-conflicts search with random restarts:
/// repeatedly repair a random symmetric table by re-assigning cells involved
/// in violated associativity triples. Deterministic for a fixed seed.
pub fn random(n: usize, seed: u64, count: usize) -> impl Iterator<Item = CommSemigroup> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(move |_| search_one(n, &mut rng))
}

fn search_one(n: usize, rng: &mut ChaCha8Rng) -> CommSemigroup {
    const MAX_STEPS: usize = 4000;
    loop {
        let mut table: Vec<usize> = vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let v = rng.random_range(0..n);
                table[a * n + b] = v;
                table[b * n + a] = v;
            }
        }
        for _ in 0..MAX_STEPS {
            let viols = violations(n, &table);
            if viols.is_empty() {
                return CommSemigroup::from_table_unchecked(n, table, None);
            }
            let &(a, b, c) = viols.choose(rng).expect("nonempty");
            let cells = [(a, b), (b, c), (table[a * n + b], c), (a, table[b * n + c])];
            let &(x, y) = cells.choose(rng).expect("nonempty");
            let value = if rng.random_range(0..10) < 3 {
                // occasional random move to escape plateaus
                rng.random_range(0..n)
            } else {
                // otherwise greedy: the value minimizing the violation count,
                // ties broken by the rng
                let mut best = Vec::new();
                let mut best_count = usize::MAX;
                let old = table[x * n + y];
                for v in 0..n {
                    table[x * n + y] = v;
                    table[y * n + x] = v;
                    let cnt = violations(n, &table).len();
                    if cnt < best_count {
                        best_count = cnt;
                        best.clear();
                    }
                    if cnt == best_count {
                        best.push(v);
                    }
                }
                table[x * n + y] = old;
                table[y * n + x] = old;
                *best.choose(rng).expect("nonempty")
            };
            table[x * n + y] = value;
            table[y * n + x] = value;
        }
        // restart from a fresh random table
    }
}
