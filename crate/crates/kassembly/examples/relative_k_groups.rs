//! The relative Waldhausen K-groups of the augmentation R = F_2[Q] → F_2:
//! a single Q in degree 1 and nothing else — the homotopy groups of an
//! Eilenberg-MacLane space.
//!
//! ```text
//! cargo run --example relative_k_groups
//! ```

use kassembly::assembly::relative_k;
use kassembly::homology::GroupDescriptor;
use kassembly::kfield::FieldDescriptor;
use kassembly::render::graded_table;

fn main() {
    let f2 = FieldDescriptor::from_order(2).unwrap();

    let fiber = relative_k(&GroupDescriptor::rationals(), &f2, 10).unwrap();
    println!("K_n(R, k) for R = F_2[Q], k = F_2:");
    print!("{}", graded_table("K_n(R,k)", &fiber));
    println!("\nonly degree 1 is inhabited: K(Perf(R, k)) has the homotopy");
    println!("groups of the Eilenberg-MacLane space BQ = K(Q, 1)");

    // without the smashing hypothesis the fiber sequence is not available,
    // and the pipeline refuses rather than guesses
    match relative_k(&GroupDescriptor::integers(), &f2, 4) {
        Err(e) => println!("\nR = F_2[Z]: {e}"),
        Ok(_) => unreachable!("Tor_1 over the Laurent ring is nonzero"),
    }
}
