//! The Atiyah-Hirzebruch E² page E²_{p,q} = H_p(BG; K_q(F_q)), drawn as a
//! grid, with the per-differential vanishing report.
//!
//! ```text
//! cargo run --example e2_page
//! ```

use kassembly::ahss::{analyze_differentials, build_e2, DifferentialStatus};
use kassembly::homology::GroupDescriptor;
use kassembly::kfield::FieldDescriptor;
use kassembly::render::e2_diagram;

fn main() {
    let f2 = FieldDescriptor::from_order(2).unwrap();
    let f3 = FieldDescriptor::from_order(3).unwrap();

    let page = build_e2(&GroupDescriptor::rationals(), &f2, 8);
    println!("E²_{{p,q}} = H_p(BQ; K_q(F_2)):\n");
    print!("{}", e2_diagram(&page));

    let report = analyze_differentials(&page);
    println!(
        "\ndifferentials reported: {}, undetermined: {}",
        report.differentials.len(),
        report.undetermined().count()
    );
    let by_status = |s: DifferentialStatus| {
        report
            .differentials
            .iter()
            .filter(|d| d.status == s)
            .count()
    };
    println!(
        "  source zero: {}, target zero: {}",
        by_status(DifferentialStatus::VanishesSourceZero),
        by_status(DifferentialStatus::VanishesTargetZero),
    );

    // a three-column page where degree reasons are not enough
    let page = build_e2(&GroupDescriptor::new(2, 0), &f3, 4);
    println!("\nE²_{{p,q}} = H_p(B(Z^2); K_q(F_3)):\n");
    print!("{}", e2_diagram(&page));
    let report = analyze_differentials(&page);
    for d in report.undetermined() {
        println!(
            "\nundetermined: d^{}: E_{{{},{}}} -> E_{{{},{}}}",
            d.r,
            d.p,
            d.q,
            d.p as i64 - d.r as i64,
            d.q + d.r as usize - 1
        );
    }
}
