//! Smith normal form over Z: diagonalize with unimodular transforms and
//! read off cokernels as abelian groups.
//!
//! ```text
//! cargo run --example smith_normal_form
//! ```

use kassembly::abelian::{cokernel, smith_normal_form, IntMatrix};

fn show(m: &IntMatrix, name: &str) {
    let snf = smith_normal_form(m);
    println!("{name} = {m:?}");
    println!("invariant factors: {:?}", snf.invariant_factors());
    println!("u·m·v = d holds: {}", snf.u.mul(m).mul(&snf.v) == snf.d);
    println!("coker({name}) = Z^{{rows}} / im = {}", cokernel(m));
    println!();
}

fn main() {
    show(&IntMatrix::from_rows(2, 2, &[2, 4, 6, 8]), "a");
    show(&IntMatrix::from_rows(2, 1, &[2, 0]), "b");
    show(
        &IntMatrix::from_rows(3, 3, &[2, 4, 4, -6, 6, 12, 10, 4, 16]),
        "c",
    );
    // a presentation of Z/2 ⊕ Z/6 ⊕ Z
    show(&IntMatrix::from_rows(3, 2, &[2, 0, 0, 6, 0, 0]), "d");
}
