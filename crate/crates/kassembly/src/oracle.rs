//! Brute-force oracles for the closed-form arithmetic on [`ExtAb`].
//!
//! Nothing here consults the gcd rules in `abelian::group`. A finitely
//! generated group is handed over as a presentation matrix, tensor and Tor
//! are computed from an honest two-term free resolution reduced by Smith
//! normal form, and the results are compared against the closed rules by
//! the test suites. Keep it that way: these routes are only worth having
//! while they stay independent.

use num_bigint::BigInt;

use crate::abelian::{cokernel, homology_of_pair, ExtAb, IntMatrix};

/// Presentation matrix of a finitely generated group: generators are the
/// free generators followed by one generator per torsion factor; relations
/// are `d_i · h_i = 0`. The group is `Z^rows / im`.
///
/// Panics if the group has a rational part.
pub fn presentation(x: &ExtAb) -> IntMatrix {
    assert!(
        x.is_finitely_generated(),
        "presentation matrices only exist for finitely generated groups"
    );
    let gens = x.generator_count();
    let rels = x.torsion().len();
    let mut m = IntMatrix::zeros(gens, rels);
    for (i, d) in x.torsion().iter().enumerate() {
        m[(x.free_rank() + i, i)] = BigInt::from(d.clone());
    }
    m
}

/// `A ⊗ B` from presentations: if `A = coker(P : Z^p → Z^m)` and
/// `B = coker(Q : Z^q → Z^n)`, then `A ⊗ B = coker[P⊗I_n | I_m⊗Q]`.
pub fn tensor_via_presentation(a: &ExtAb, b: &ExtAb) -> ExtAb {
    let (p, q) = (presentation(a), presentation(b));
    let d1 = tensor_first_differential(&p, &q);
    cokernel(&d1)
}

/// `Tor₁(A, B)` as the degree-1 homology of the total complex of the
/// tensor product of two-term free resolutions:
///
/// ```text
/// Z^{pq} --d₂--> Z^{pn} ⊕ Z^{mq} --d₁--> Z^{mn}
/// d₂ = [-(I_p ⊗ Q); P ⊗ I_q],   d₁ = [P ⊗ I_n | I_m ⊗ Q]
/// ```
pub fn tor1_via_presentation(a: &ExtAb, b: &ExtAb) -> ExtAb {
    let (p, q) = (presentation(a), presentation(b));
    let d1 = tensor_first_differential(&p, &q);
    let top = p.kronecker(&IntMatrix::identity(q.cols())); // P ⊗ I_q
    let left = IntMatrix::identity(p.cols()).kronecker(&q); // I_p ⊗ Q
    let d2 = left.neg().vstack(&top);
    homology_of_pair(&d2, &d1)
}

fn tensor_first_differential(p: &IntMatrix, q: &IntMatrix) -> IntMatrix {
    let pn = p.kronecker(&IntMatrix::identity(q.rows()));
    let mq = IntMatrix::identity(p.rows()).kronecker(q);
    pn.hstack(&mq)
}
