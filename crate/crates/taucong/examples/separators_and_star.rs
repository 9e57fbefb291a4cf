//! Walk through the subset machinery on a 3-element monoid with a zero:
//! annihilators, idealizers, separators, the star condition, and the
//! natural partial order.

use taucong::semigroup::ideals::{enumerate_ideals, idealizer, separator};
use taucong::semigroup::laws::{condition_star_check, natural_order_check};
use taucong::semigroup::{three_element_monoid, ElementSet};

fn main() {
    // elements are labelled 1, 2, 0 with 2*2 = 0
    let s = three_element_monoid();
    println!("table:\n{}", s.to_table_text());

    for x in 0..s.order() {
        let ann = s.annihilator(x).unwrap();
        let labels: Vec<String> = ann.iter().map(|i| s.label(i)).collect();
        println!("annihilator of {}: {{{}}}", s.label(x), labels.join(", "));
    }

    let zero_only = ElementSet::from_members(3, [2]);
    println!(
        "idealizer of {{0}}: {:?}, separator of {{0}}: {:?}",
        idealizer(&s, &zero_only).members(),
        separator(&s, &zero_only).members()
    );

    println!("ideals: {:?}", enumerate_ideals(&s));
    println!("torsion set: {:?}", s.torsion_set().unwrap());
    println!("star condition: {:?}", condition_star_check(&s));
    println!(
        "natural order antisymmetric: {:?}",
        natural_order_check(&s).unwrap()
    );
}
