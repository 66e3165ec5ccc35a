//! Group homology of classifying spaces: H_p(BG; A) for torsionfree
//! abelian G = Z^a ⊕ Q^b, integrally and with coefficients.
//!
//! ```text
//! cargo run --example group_homology
//! ```

use kassembly::abelian::ExtAb;
use kassembly::homology::{
    higher_rational_note, homology_with_coefficients, integral_homology, GroupDescriptor,
};

fn table(g: &GroupDescriptor, coeff: &ExtAb, label: &str, top: i64) {
    println!("H_p(B({g}); {label}) for 0 <= p <= {top}");
    for p in 0..=top {
        println!("  {p} | {}", homology_with_coefficients(g, coeff, p));
        if let Some(note) = higher_rational_note(g, p) {
            println!("      note: {note}");
        }
    }
    println!();
}

fn main() {
    let z = ExtAb::free(1);
    let f2 = ExtAb::cyclic(2);

    // BQ is a rational circle: Z, Q, then nothing
    table(&GroupDescriptor::rationals(), &z, "Z", 4);
    // finite coefficients see nothing of BQ above degree 0
    table(&GroupDescriptor::rationals(), &f2, "F_2", 4);
    // the torus T^2 = B(Z^2)
    table(&GroupDescriptor::new(2, 0), &z, "Z", 3);
    table(&GroupDescriptor::new(2, 0), &f2, "F_2", 3);
    // a mixed group, and the b >= 2 caveat on pure rational ones
    table(&GroupDescriptor::new(1, 1), &z, "Z", 3);
    table(&GroupDescriptor::new(0, 2), &z, "Z", 3);

    let q = GroupDescriptor::rationals();
    println!("degrees outside the band vanish:");
    for p in [-2, -1, 2, 3, 17] {
        println!("  H_{p}(BQ; Z) = {}", integral_homology(&q, p));
    }
}
