//! Farrell-Jones assembly end to end: K_n(F_q[G]) = H_n(BG; K(F_q)) with
//! the hypothesis record and the extension-rule audit.
//!
//! ```text
//! cargo run --example assemble_group_ring
//! ```

use kassembly::assembly::assemble;
use kassembly::homology::GroupDescriptor;
use kassembly::kfield::FieldDescriptor;
use kassembly::render::graded_table;

fn main() {
    let f2 = FieldDescriptor::from_order(2).unwrap();
    let f3 = FieldDescriptor::from_order(3).unwrap();

    // the headline case: the group ring of the rationals
    let result = assemble(&GroupDescriptor::rationals(), &f2, 10).unwrap();
    println!("K_n(F_2[Q]):  [{}]", result.hypotheses.fj_status);
    print!("{}", graded_table("K_n", &result.k_groups));

    // the trivial group recovers Quillen's table on the nose
    let result = assemble(&GroupDescriptor::trivial(), &f2, 6).unwrap();
    println!("\nK_n(F_2[1]) = K_n(F_2):");
    print!("{}", graded_table("K_n", &result.k_groups));

    // the Laurent ring: two filtration pieces per degree, split because
    // the quotient piece is free (Bass-Heller-Swan shape)
    let result = assemble(&GroupDescriptor::integers(), &f3, 6).unwrap();
    println!("\nK_n(F_3[t, 1/t]):");
    print!("{}", graded_table("K_n", &result.k_groups));
    for use_ in &result.audit {
        println!(
            "  extension solved by {:?} at degree {}, piece (p,q) = ({},{})",
            use_.rule, use_.degree, use_.p, use_.q
        );
    }
}
