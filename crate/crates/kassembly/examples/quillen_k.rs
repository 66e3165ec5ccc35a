//! Quillen's K-theory of finite fields: print K_n(F_q) tables.
//!
//! ```text
//! cargo run --example quillen_k
//! ```

use kassembly::kfield::{k_graded, quillen_k, FieldDescriptor};
use kassembly::render::graded_table;

fn main() {
    for q in [2u64, 3, 4] {
        let field = FieldDescriptor::from_order(q).expect("prime power");
        println!("K_n({field}) for 0 <= n <= 9");
        print!("{}", graded_table("K_n", &k_graded(&field, 9)));
        println!();
    }

    // the odd groups are cyclic of order q^j - 1
    let f2 = FieldDescriptor::from_order(2).unwrap();
    println!("odd-degree orders over F_2:");
    for j in 1..=6i64 {
        println!("  K_{}(F_2) = {}", 2 * j - 1, quillen_k(&f2, 2 * j - 1));
    }
}
