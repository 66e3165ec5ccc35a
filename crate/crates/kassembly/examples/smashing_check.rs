//! The smashing hypothesis k ⊗^L_R k ≃ k, detected through Tor vanishing:
//! holds for R = F_q[Q], fails for the Laurent ring F_q[Z].
//!
//! ```text
//! cargo run --example smashing_check
//! ```

use kassembly::assembly::check_smashing;
use kassembly::homology::GroupDescriptor;
use kassembly::kfield::FieldDescriptor;

fn main() {
    let cases = [
        (GroupDescriptor::rationals(), 2u64),
        (GroupDescriptor::rationals(), 3),
        (GroupDescriptor::integers(), 2),
        (GroupDescriptor::new(1, 1), 2),
        (GroupDescriptor::trivial(), 2),
    ];
    for (g, q) in cases {
        let field = FieldDescriptor::from_order(q).unwrap();
        let report = check_smashing(&g, &field, g.rank().max(1) + 2);
        let verdict = if report.holds { "holds" } else { "FAILS" };
        println!("k ⊗^L_R k ≃ k for R = {field}[{g}]: {verdict}");
        for (n, tor) in &report.witness {
            println!("  Tor_{n}(k, k) = {tor}");
        }
        println!();
    }
}
