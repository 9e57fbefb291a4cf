//! Ideal arithmetic in the Gaussian integers: Hermite normal forms,
//! principal generators found by lattice reduction, conjugate products, and
//! the induced congruence agreement.

use taucong::domain::Element;
use taucong::quad::{ideal_congruence_check, QuadIdeal};

fn main() {
    let two = Element::quad(-1, 2, 0).unwrap();
    let one_plus_i = Element::quad(-1, 1, 1).unwrap();

    let ideal = QuadIdeal::from_generators(-1, &[two.clone(), one_plus_i.clone()]).unwrap();
    println!("A = (2, 1+w): hnf {:?}, norm {}", ideal.hnf(), ideal.norm());

    let g = ideal.principal_generator().unwrap();
    println!("principal generator: {g}");

    let conj = ideal.conjugate();
    let product = ideal.mul(&conj).unwrap();
    println!(
        "A * conj(A): hnf {:?}, norm {}, generator {}",
        product.hnf(),
        product.norm(),
        product.principal_generator().unwrap()
    );

    let (verdict, m, n) = ideal_congruence_check(-1, &[two, one_plus_i]).unwrap();
    println!("full check: {verdict:?} with m = {m}, n = {n}");

    // gcds in the ring go through the same lattice reduction
    let x = Element::quad(-1, 4, 2).unwrap();
    let y = Element::quad(-1, 5, 0).unwrap();
    println!("gcd(4+2w, 5) = {}", x.gcd(&y).unwrap());
}
