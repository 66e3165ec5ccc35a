//! Cross-check the closed homology formula against its two independent
//! oracles: the Koszul complex for Z^n and truncated colimits for BQ, plus
//! the presentation-matrix routes for tensor and Tor₁.
//!
//! ```text
//! cargo run --example koszul_vs_formula
//! ```

use kassembly::abelian::ExtAb;
use kassembly::homology::{
    colimit_oracle_bq, homology_with_coefficients, integral_homology, koszul_oracle,
    GroupDescriptor,
};
use kassembly::oracle::{tensor_via_presentation, tor1_via_presentation};

fn main() {
    println!("Koszul oracle vs Λ-formula on Z^a:");
    for a in 0..=5usize {
        let g = GroupDescriptor::new(a, 0);
        for p in 0..=a as i64 {
            let formula = integral_homology(&g, p);
            let oracle = koszul_oracle(a, &ExtAb::free(1), p).unwrap();
            assert_eq!(formula, oracle);
            println!("  a={a} p={p}: formula {formula} == oracle {oracle}");
        }
    }

    println!("\ncolimit oracle vs closed formula on BQ:");
    let coefficients = [
        ("Z", ExtAb::free(1)),
        ("Z^2", ExtAb::free(2)),
        ("F_2", ExtAb::cyclic(2)),
        ("Z/6", ExtAb::cyclic(6)),
        ("Z ⊕ Z/2", ExtAb::free(1).direct_sum(&ExtAb::cyclic(2))),
    ];
    let q = GroupDescriptor::rationals();
    for (label, coeff) in &coefficients {
        for p in 0..=1i64 {
            let formula = homology_with_coefficients(&q, coeff, p);
            let oracle = colimit_oracle_bq(coeff, p, 6).unwrap();
            assert_eq!(formula, oracle);
            println!("  H_{p}(BQ; {label}) = {formula} (both routes)");
        }
    }

    println!("\npresentation-matrix oracle vs gcd rules:");
    let a = ExtAb::new(1, vec![4u32.into()], 0);
    let b = ExtAb::new(0, vec![6u32.into(), 12u32.into()], 0);
    println!("  ({a}) ⊗ ({b}):");
    println!("    closed rule:  {}", a.tensor(&b));
    println!("    presentation: {}", tensor_via_presentation(&a, &b));
    println!("  Tor₁({a}, {b}):");
    println!("    closed rule:  {}", a.tor1(&b));
    println!("    presentation: {}", tor1_via_presentation(&a, &b));
}
