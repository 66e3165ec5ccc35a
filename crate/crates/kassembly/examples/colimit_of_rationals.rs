//! Directed colimits from finite truncations: Q as colim(Z →×2 Z →×3 ⋯),
//! torsion death along the same multipliers, stabilization, and an honest
//! refusal when no recognizer applies.
//!
//! ```text
//! cargo run --example colimit_of_rationals
//! ```

use kassembly::abelian::{
    colimit, factorial_multiplier, DirectedSystem, ExtAb, IntMatrix, TransitionRule,
};

fn factorial_system(stage: ExtAb, len: usize) -> DirectedSystem {
    let gens = stage.generator_count();
    DirectedSystem::constant(stage, len, TransitionRule::FactorialRule, |i| {
        IntMatrix::scalar(gens, factorial_multiplier(i))
    })
    .expect("valid system")
}

fn main() {
    // Z --x2--> Z --x3--> Z --x4--> ... presents Q
    let q = factorial_system(ExtAb::free(1), 6);
    println!("colim(Z, x2, x3, x4, ...)      = {}", colimit(&q).unwrap());

    // the same multipliers kill every torsion class
    let dead = factorial_system(ExtAb::cyclic(2), 6);
    println!(
        "colim(Z/2, x2, x3, x4, ...)    = {}",
        colimit(&dead).unwrap()
    );

    // mixed stages: the free part becomes divisible, the torsion dies
    let mixed = factorial_system(ExtAb::free(2).direct_sum(&ExtAb::cyclic(6)), 5);
    println!(
        "colim(Z^2 ⊕ Z/6, x2, x3, ...)  = {}",
        colimit(&mixed).unwrap()
    );

    // explicit systems stabilize along a suffix of isomorphisms
    let stable = DirectedSystem::constant(ExtAb::cyclic(3), 4, TransitionRule::Explicit, |_| {
        IntMatrix::identity(1)
    })
    .unwrap();
    println!(
        "colim(Z/3, id, id, id)         = {}",
        colimit(&stable).unwrap()
    );

    // without a declared rule, x2 forever is not recognizable from a
    // truncation: the caller must extend or re-present
    let undeclared = DirectedSystem::constant(ExtAb::free(1), 4, TransitionRule::Explicit, |_| {
        IntMatrix::scalar(1, 2)
    })
    .unwrap();
    match colimit(&undeclared) {
        Err(e) => println!("colim(Z, x2, x2, x2) explicit  = refused: {e}"),
        Ok(v) => unreachable!("unexpected colimit {v}"),
    }
}
