//! Group homology of classifying spaces `BG` for `G = Z^a ⊕ Q^b`.
//!
//! For torsionfree abelian `G` the Pontryagin ring of `BG` is an exterior
//! algebra, so integral homology is `H_p(BG; Z) = Λ^p(G)` and a binomial
//! convolution computes it in closed form; arbitrary coefficients follow by
//! universal coefficients. Two independent routes check the formula:
//!
//! * [`koszul_oracle`] builds the Koszul chain complex of `Z^n` (with the
//!   augmented, hence zero, differentials) and grinds out homology with
//!   coefficients from presentation matrices and Smith normal form;
//! * [`colimit_oracle_bq`] realizes `Q = colim(Z →×2 Z →×3 ⋯)` and computes
//!   `H_p(BQ; A)` as a truncated directed colimit over `H_p(BZ; A)`.
//!
//! One caveat the engine states rather than hides: `Λ²(Q^b) ≠ 0` for
//! `b ≥ 2`, so "a rational vector space has homology only in degrees 0, 1"
//! holds only in dimension one. [`higher_rational_note`] flags the affected
//! outputs.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::abelian::{
    colimit, factorial_multiplier, homology_of_pair, DirectedSystem, ExtAb, IntMatrix,
    TransitionRule,
};
use crate::kfield::FieldDescriptor;
use crate::oracle::presentation;
use crate::{Error, Result};

/// Koszul oracle scale cap: chain ranks stay at most C(5,2) = 10.
pub const KOSZUL_RANK_CAP: usize = 5;

/// A torsionfree abelian group `G = Z^a ⊕ Q^b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupDescriptor {
    free_copies: usize,
    rational_copies: usize,
}

impl GroupDescriptor {
    pub fn new(free_copies: usize, rational_copies: usize) -> GroupDescriptor {
        GroupDescriptor {
            free_copies,
            rational_copies,
        }
    }

    /// The additive group of rational numbers.
    pub fn rationals() -> GroupDescriptor {
        GroupDescriptor::new(0, 1)
    }

    /// The infinite cyclic group.
    pub fn integers() -> GroupDescriptor {
        GroupDescriptor::new(1, 0)
    }

    /// The trivial group.
    pub fn trivial() -> GroupDescriptor {
        GroupDescriptor::new(0, 0)
    }

    pub fn free_copies(&self) -> usize {
        self.free_copies
    }

    pub fn rational_copies(&self) -> usize {
        self.rational_copies
    }

    /// `a + b`: homology vanishes strictly above this degree.
    pub fn rank(&self) -> usize {
        self.free_copies + self.rational_copies
    }
}

impl fmt::Display for GroupDescriptor {
    /// Flag grammar: `1`, `Z`, `Q`, `Z^2+Q`, …
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank() == 0 {
            return write!(f, "1");
        }
        let mut terms = Vec::new();
        match self.free_copies {
            0 => {}
            1 => terms.push("Z".to_string()),
            a => terms.push(format!("Z^{a}")),
        }
        match self.rational_copies {
            0 => {}
            1 => terms.push("Q".to_string()),
            b => terms.push(format!("Q^{b}")),
        }
        write!(f, "{}", terms.join("+"))
    }
}

impl FromStr for GroupDescriptor {
    type Err = Error;

    /// Accepts `1` (trivial), or `+`-joined terms `Z`, `Z^a`, `Q`, `Q^b`.
    fn from_str(s: &str) -> Result<GroupDescriptor> {
        let bad = || Error::InvalidGroup(format!("cannot parse group '{s}' (try Q, Z, or Z^2+Q)"));
        let s = s.trim();
        if s == "1" {
            return Ok(GroupDescriptor::trivial());
        }
        let mut a = 0usize;
        let mut b = 0usize;
        for term in s.split('+') {
            let term = term.trim();
            let (letter, copies) = match term.split_once('^') {
                Some((l, exp)) => (l, exp.parse::<usize>().map_err(|_| bad())?),
                None => (term, 1),
            };
            match letter {
                "Z" => a += copies,
                "Q" => b += copies,
                _ => return Err(bad()),
            }
        }
        Ok(GroupDescriptor::new(a, b))
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    usize::try_from(acc).expect("binomial coefficient exceeds usize")
}

/// `H_p(BG; Z) = Λ^p(Z^a ⊕ Q^b)`, by the binomial convolution
/// `⊕_{i+j=p} Λ^i(Z^a) ⊗ Λ^j(Q^b)` with `Λ^j(Q^b) = Q^{C(b,j)}` (exterior
/// powers over `Z` and over `Q` agree because `Q^b` is uniquely divisible).
/// Zero for `p < 0` and for `p > a + b`.
pub fn integral_homology(g: &GroupDescriptor, p: i64) -> ExtAb {
    if p < 0 || p as usize > g.rank() {
        return ExtAb::zero();
    }
    let p = p as usize;
    let (a, b) = (g.free_copies(), g.rational_copies());
    let free = binomial(a, p);
    let mut rational = 0usize;
    for j in 1..=p.min(b) {
        rational += binomial(a, p - j) * binomial(b, j);
    }
    ExtAb::new(free, Vec::new(), rational)
}

/// `H_p(BG; A)` by universal coefficients:
/// `(H_p(BG; Z) ⊗ A) ⊕ Tor₁(H_{p−1}(BG; Z), A)`.
pub fn homology_with_coefficients(g: &GroupDescriptor, coeff: &ExtAb, p: i64) -> ExtAb {
    integral_homology(g, p)
        .tensor(coeff)
        .direct_sum(&integral_homology(g, p - 1).tor1(coeff))
}

/// `Tor^{k[G]}_n(k, k)` for the group algebra over `F_q`, via the
/// identification with `H_n(BG; k)`. Coefficients only see the additive
/// group `(Z/p)^e` of the field.
pub fn tor_group_ring(g: &GroupDescriptor, field: &FieldDescriptor, n: i64) -> ExtAb {
    homology_with_coefficients(g, &field.additive_group(), n)
}

/// Set when the rank-one vanishing picture does not apply: for `b ≥ 2`
/// the higher exterior powers of `Q^b` survive and `H_p(BG; Z)` keeps a
/// rational part in degrees `p ≥ 2`.
pub fn higher_rational_note(g: &GroupDescriptor, p: i64) -> Option<String> {
    if g.rational_copies() >= 2 && p >= 2 && !integral_homology(g, p).is_zero() {
        Some(format!(
            "H_{p}(B({g})) has rational rank > 0: Λ^{p}(Q^{}) ≠ 0, so degree-one vanishing of \
             rational homology does not extend to b ≥ 2",
            g.rational_copies()
        ))
    } else {
        None
    }
}

/// Independent oracle for `H_p(BZ^n; coeff)`: the Koszul complex on the
/// augmented generators.
///
/// The chain group in degree `p` is free of rank `C(n,p)` on the p-element
/// subsets of the generators; the boundary places `±(ε(t_i) − 1)` on each
/// face, and the augmentation `ε(t_i) = 1` makes every entry zero — built
/// and checked, not assumed. Homology with coefficients is the homology of
/// the total complex against a two-term resolution of `coeff`, reduced by
/// Smith normal form.
///
/// `coeff` must be finitely generated. Errors with `SCALE_EXCEEDED` when
/// `n` is above [`KOSZUL_RANK_CAP`].
pub fn koszul_oracle(n: usize, coeff: &ExtAb, p: i64) -> Result<ExtAb> {
    if n > KOSZUL_RANK_CAP {
        return Err(Error::ScaleExceeded {
            what: "koszul generator count",
            got: n,
            cap: KOSZUL_RANK_CAP,
        });
    }
    assert!(
        coeff.is_finitely_generated(),
        "the Koszul oracle needs finitely generated coefficients"
    );
    if p < 0 {
        return Ok(ExtAb::zero());
    }

    for deg in 1..=n {
        assert!(
            koszul_differential(n, deg as i64).is_zero(),
            "trivial action must kill every Koszul differential"
        );
    }

    let rel = presentation(coeff);
    let d_in = total_differential(n, p + 1, &rel);
    let d_out = total_differential(n, p, &rel);
    Ok(homology_of_pair(&d_in, &d_out))
}

/// All p-element subsets of `{0, …, n−1}` in lexicographic order.
fn subsets(n: usize, p: usize) -> Vec<Vec<usize>> {
    let mut all = Vec::with_capacity(binomial(n, p));
    let mut current = Vec::with_capacity(p);
    fn rec(n: usize, p: usize, start: usize, current: &mut Vec<usize>, all: &mut Vec<Vec<usize>>) {
        if current.len() == p {
            all.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(n, p, i + 1, current, all);
            current.pop();
        }
    }
    rec(n, p, 0, &mut current, &mut all);
    all
}

/// Koszul boundary `∂_p : Λ^p → Λ^{p−1}` for `Z^n` with the trivial action:
/// `∂(e_S) = Σ_k (−1)^k · (ε(t_{S[k]}) − 1) · e_{S∖S[k]}`.
fn koszul_differential(n: usize, p: i64) -> IntMatrix {
    let rank = |q: i64| -> usize {
        if q < 0 {
            0
        } else {
            binomial(n, q as usize)
        }
    };
    let mut m = IntMatrix::zeros(rank(p - 1), rank(p));
    if p <= 0 || p as usize > n {
        return m;
    }
    let sources = subsets(n, p as usize);
    let targets = subsets(n, p as usize - 1);
    // ε sends every group generator to 1, so each face multiplier vanishes.
    let aug_multiplier = BigInt::zero();
    for (col, s) in sources.iter().enumerate() {
        for k in 0..s.len() {
            let mut face = s.clone();
            face.remove(k);
            let row = targets
                .iter()
                .position(|t| *t == face)
                .expect("face is a subset of one size lower");
            let signed = if k % 2 == 0 {
                aug_multiplier.clone()
            } else {
                -aug_multiplier.clone()
            };
            m[(row, col)] += signed;
        }
    }
    m
}

/// Differential `T_deg → T_{deg−1}` of the total complex of the Koszul
/// complex tensored with the resolution `Z^{rels} --rel--> Z^{gens}`.
fn total_differential(n: usize, deg: i64, rel: &IntMatrix) -> IntMatrix {
    let (g0, g1) = (rel.rows(), rel.cols());
    let rank = |q: i64| -> usize {
        if q < 0 {
            0
        } else {
            binomial(n, q as usize)
        }
    };

    let d_deg = koszul_differential(n, deg); // r_{deg-1} x r_deg
    let d_prev = koszul_differential(n, deg - 1); // r_{deg-2} x r_{deg-1}

    let top_left = d_deg.kronecker(&IntMatrix::identity(g0));
    let vertical = IntMatrix::identity(rank(deg - 1)).kronecker(rel);
    let top_right = if (deg - 1).rem_euclid(2) == 0 {
        vertical
    } else {
        vertical.neg()
    };
    let bottom_left = IntMatrix::zeros(rank(deg - 2) * g1, rank(deg) * g0);
    let bottom_right = d_prev.kronecker(&IntMatrix::identity(g1));

    top_left
        .hstack(&top_right)
        .vstack(&bottom_left.hstack(&bottom_right))
}

/// Independent oracle for `H_p(BQ; coeff)`, `p ∈ {0, 1}`: build the
/// directed system of `H_p(BZ; coeff)` along the multiplication maps
/// `×2, ×3, ×4, …` of the colimit presentation of `Q` and recognize its
/// colimit.
///
/// The `H₁`-induced transition maps follow the factorial rule; `H₀` is
/// constant with identity transitions, which is exactly the stabilization
/// recognizer's territory, so that system is declared explicit.
///
/// `coeff` must be finitely generated and `stages ≥ 3`.
pub fn colimit_oracle_bq(coeff: &ExtAb, p: i64, stages: usize) -> Result<ExtAb> {
    assert!(stages >= 3, "need at least 3 stages");
    assert!(
        p == 0 || p == 1,
        "the colimit oracle probes degrees 0 and 1"
    );
    let stage_group = koszul_oracle(1, coeff, p)?;
    let gens = stage_group.generator_count();
    let sys = if p == 0 {
        DirectedSystem::constant(stage_group, stages, TransitionRule::Explicit, |_| {
            IntMatrix::identity(gens)
        })?
    } else {
        DirectedSystem::constant(stage_group, stages, TransitionRule::FactorialRule, |i| {
            IntMatrix::scalar(gens, factorial_multiplier(i))
        })?
    };
    colimit(&sys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn ab(free: usize, torsion: &[u64], rational: usize) -> ExtAb {
        ExtAb::new(
            free,
            torsion.iter().map(|&d| BigUint::from(d)).collect(),
            rational,
        )
    }

    fn f2() -> ExtAb {
        ExtAb::cyclic(2)
    }

    #[test]
    fn homology_of_bq() {
        let q = GroupDescriptor::rationals();
        assert_eq!(integral_homology(&q, 0), ExtAb::free(1));
        assert_eq!(integral_homology(&q, 1), ExtAb::rational(1));
        assert_eq!(integral_homology(&q, 2), ExtAb::zero());
        assert_eq!(integral_homology(&q, -1), ExtAb::zero());
    }

    #[test]
    fn homology_of_tori_and_mixed_groups() {
        let z2 = GroupDescriptor::new(2, 0);
        assert_eq!(integral_homology(&z2, 1), ExtAb::free(2));
        assert_eq!(integral_homology(&z2, 2), ExtAb::free(1));
        assert_eq!(integral_homology(&z2, 3), ExtAb::zero());

        // Λ²(Q²) = Q: the rank-one vanishing does not extend
        let q2 = GroupDescriptor::new(0, 2);
        assert_eq!(integral_homology(&q2, 2), ExtAb::rational(1));
        assert!(higher_rational_note(&q2, 2).is_some());
        assert!(higher_rational_note(&GroupDescriptor::rationals(), 2).is_none());

        // Z ⊕ Q: H_2 = Λ¹Z ⊗ Λ¹Q = Q
        let zq = GroupDescriptor::new(1, 1);
        assert_eq!(integral_homology(&zq, 2), ExtAb::rational(1));
        assert_eq!(integral_homology(&zq, 1), ab(1, &[], 1));
    }

    #[test]
    fn coefficients_by_universal_coefficients() {
        let q = GroupDescriptor::rationals();
        assert_eq!(homology_with_coefficients(&q, &f2(), 0), f2());
        assert_eq!(homology_with_coefficients(&q, &f2(), 1), ExtAb::zero());
        assert_eq!(
            homology_with_coefficients(&q, &ExtAb::free(1), 1),
            ExtAb::rational(1)
        );
        let z = GroupDescriptor::integers();
        assert_eq!(homology_with_coefficients(&z, &f2(), 1), f2());
    }

    #[test]
    fn finite_coefficients_collapse_on_rational_groups() {
        for b in 1..=3usize {
            let g = GroupDescriptor::new(0, b);
            for coeff in [f2(), ExtAb::cyclic(9), ab(0, &[2, 12], 0)] {
                for p in 1..=(b as i64 + 1) {
                    assert_eq!(
                        homology_with_coefficients(&g, &coeff, p),
                        ExtAb::zero(),
                        "H_{p}(BQ^{b}; {coeff})"
                    );
                }
            }
        }
    }

    #[test]
    fn vanishing_band_and_integral_coefficients() {
        for a in 0..=3usize {
            for b in 0..=3usize {
                let g = GroupDescriptor::new(a, b);
                let rank = g.rank() as i64;
                for p in [rank + 1, rank + 2, -1, -3] {
                    assert_eq!(integral_homology(&g, p), ExtAb::zero(), "H_{p}(B({g}))");
                }
                for p in -1..=rank + 2 {
                    assert_eq!(
                        homology_with_coefficients(&g, &ExtAb::free(1), p),
                        integral_homology(&g, p),
                        "Z coefficients must recover integral homology"
                    );
                }
            }
        }
    }

    #[test]
    fn koszul_oracle_examples() {
        assert_eq!(
            koszul_oracle(2, &ExtAb::free(1), 1).unwrap(),
            ExtAb::free(2)
        );
        assert_eq!(
            koszul_oracle(0, &ExtAb::free(1), 0).unwrap(),
            ExtAb::free(1)
        );
        // C(3,2) = 3 copies of the coefficient group
        assert_eq!(koszul_oracle(3, &f2(), 2).unwrap(), ab(0, &[2, 2, 2], 0));
        assert!(matches!(
            koszul_oracle(6, &ExtAb::free(1), 1),
            Err(Error::ScaleExceeded { .. })
        ));
    }

    #[test]
    fn koszul_oracle_matches_formula() {
        for n in 0..=4usize {
            let g = GroupDescriptor::new(n, 0);
            for coeff in [ExtAb::free(1), f2(), ab(1, &[4], 0)] {
                for p in -1..=(n as i64 + 1) {
                    assert_eq!(
                        koszul_oracle(n, &coeff, p).unwrap(),
                        homology_with_coefficients(&g, &coeff, p),
                        "n={n} coeff={coeff} p={p}"
                    );
                }
            }
        }
    }

    #[test]
    fn colimit_oracle_examples() {
        assert_eq!(
            colimit_oracle_bq(&ExtAb::free(1), 1, 6).unwrap(),
            ExtAb::rational(1)
        );
        assert_eq!(colimit_oracle_bq(&f2(), 1, 6).unwrap(), ExtAb::zero());
        for coeff in [ExtAb::free(1), f2(), ab(2, &[6], 0)] {
            assert_eq!(colimit_oracle_bq(&coeff, 0, 3).unwrap(), coeff);
        }
    }

    #[test]
    fn tor_of_group_rings() {
        use crate::kfield::FieldDescriptor;
        let field = FieldDescriptor::from_order(2).unwrap();
        let q = GroupDescriptor::rationals();
        assert_eq!(tor_group_ring(&q, &field, 0), f2());
        assert_eq!(tor_group_ring(&q, &field, 1), ExtAb::zero());
        // over the Laurent ring k[Z], Tor₁(k, k) = k
        let z = GroupDescriptor::integers();
        assert_eq!(tor_group_ring(&z, &field, 1), f2());
    }

    #[test]
    fn group_grammar() {
        assert_eq!(
            "Q".parse::<GroupDescriptor>().unwrap(),
            GroupDescriptor::rationals()
        );
        assert_eq!(
            "Z".parse::<GroupDescriptor>().unwrap(),
            GroupDescriptor::integers()
        );
        assert_eq!(
            "Z^2+Q^1".parse::<GroupDescriptor>().unwrap(),
            GroupDescriptor::new(2, 1)
        );
        assert_eq!(
            "Z+Z+Q".parse::<GroupDescriptor>().unwrap(),
            GroupDescriptor::new(2, 1)
        );
        assert_eq!(
            "1".parse::<GroupDescriptor>().unwrap(),
            GroupDescriptor::trivial()
        );
        assert!("R".parse::<GroupDescriptor>().is_err());
        assert!("Z^".parse::<GroupDescriptor>().is_err());
        assert_eq!(GroupDescriptor::new(2, 1).to_string(), "Z^2+Q");
        assert_eq!(GroupDescriptor::trivial().to_string(), "1");
    }
}
