//! The gcd relation of a modulus agrees with the principal congruence of
//! the ideal it generates, computed two independent ways on the residues of
//! m = 6: once from gcds, once from context scans in the finite residue
//! semigroup. The common quotient is a 4-element semilattice and the class
//! count is the divisor count d(6) = 4.

use taucong::domain::residues::ResidueSemigroup;
use taucong::domain::Element;
use taucong::tau;

fn main() {
    let m = Element::integer(6);

    let classes = tau::tau_classes(&m).unwrap();
    println!(
        "gcd classes of residues mod 6: {:?}",
        classes.partition().classes()
    );
    println!(
        "divisors read off the classes: {:?}",
        classes
            .divisors()
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
    );

    let pj = tau::principal_ideal_congruence(&m).unwrap();
    println!("principal congruence of (6):   {:?}", pj.classes());
    assert_eq!(classes.partition(), &pj);

    println!(
        "agreement check: {:?}",
        tau::tau_congruence_check(&m).unwrap()
    );
    println!(
        "separator class check: {:?}",
        tau::separator_class_check(&m).unwrap()
    );

    let rs = ResidueSemigroup::new(&m).unwrap();
    let (quotient, _) = rs.semigroup().quotient(&pj).unwrap();
    println!(
        "quotient table (a 4-element semilattice):\n{}",
        quotient.to_table_text()
    );

    println!("d(6) = {}", tau::divisor_count(&m).unwrap());
}
