//! Divisor counting for polynomials over a prime field, two ways: as the
//! class count of the gcd relation on residues, and by brute-force monic
//! trial division.

use taucong::domain::divisors::{canonical_divisors, divisor_count_oracle};
use taucong::domain::Element;
use taucong::tau;

fn main() {
    // x^3 + 2x^2 - x - 2 = (x - 1)(x + 1)(x + 2); the three roots stay
    // distinct over F5, so it has 2^3 = 8 monic divisors
    let f = Element::parse("x^3+2x^2-x-2 @ F5").unwrap();
    println!("f = {f}");

    let monic: Vec<String> = canonical_divisors(&f)
        .unwrap()
        .iter()
        .map(|d| d.to_string())
        .collect();
    println!("monic divisors ({}):", monic.len());
    for d in &monic {
        println!("  {d}");
    }

    let via_classes = tau::divisor_count(&f).unwrap();
    let via_oracle = divisor_count_oracle(&f).unwrap();
    println!("class count {via_classes}, trial division {via_oracle}");
    assert_eq!(via_classes, via_oracle);

    // the gcd relation also agrees with the principal congruence of (f)
    println!("agreement: {:?}", tau::tau_congruence_check(&f).unwrap());
}
