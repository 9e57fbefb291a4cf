//! Run the structural law suite over every commutative semigroup of orders
//! 1 to 3, and over a seeded random batch at order 5.

use taucong::semigroup::generate;
use taucong::semigroup::laws::{law_suite, LawSuiteReport};

fn main() {
    for order in 1..=3 {
        let mut total = LawSuiteReport::default();
        let mut found = 0;
        for s in generate::exhaustive(order).unwrap() {
            total.absorb(&law_suite(&s, true));
            found += 1;
        }
        println!(
            "order {order}: {found} semigroups, {} separator-quotient checks, {} recoveries, all {}",
            total.separator_quotient,
            total.congruence_recovery,
            if total.passed() { "pass" } else { "FAIL" },
        );
    }

    let mut total = LawSuiteReport::default();
    for s in generate::random(5, 2024, 50) {
        total.absorb(&law_suite(&s, true));
    }
    println!(
        "order 5 random batch (seed 2024, 50 draws): {} maximal-ideal checks, all {}",
        total.maximal_ideal,
        if total.passed() { "pass" } else { "FAIL" },
    );
}
