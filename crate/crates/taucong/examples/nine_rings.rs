//! Every nonzero ideal in each of the nine class-number-one imaginary
//! quadratic rings is principal; its congruence is the gcd relation of the
//! generator, and the conjugate product is generated by a positive rational
//! integer equal to the ideal norm.

use taucong::domain::{Element, HEEGNER};
use taucong::quad::{ideal_congruence_check, QuadIdeal};
use taucong::semigroup::laws::Verdict;

fn main() {
    for d in HEEGNER {
        let gens = vec![
            Element::quad(d, 2, 0).unwrap(),
            Element::quad(d, 1, 1).unwrap(),
        ];
        let ideal = QuadIdeal::from_generators(d, &gens).unwrap();
        let (verdict, m, n) = ideal_congruence_check(d, &gens).unwrap();
        assert!(matches!(verdict, Verdict::Pass));
        println!(
            "d = {d:>4}: (2, 1+w) has norm {:>3}, generator {m}, conj product generated by {n}",
            ideal.norm()
        );
    }
}
