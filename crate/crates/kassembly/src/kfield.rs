//! The coefficient spectrum's homotopy groups: Quillen's computation of
//! the algebraic K-theory of a finite field `F_q`,
//!
//! ```text
//! K_n(F_q) = Z            if n = 0
//!          = 0            if n even, n > 0
//!          = Z/(q^j - 1)  if n = 2j - 1, j ≥ 1
//! ```
//!
//! and zero in negative degrees: `F_q` is regular, so the nonconnective
//! K-groups vanish below 0 and a graded window `[0, N]` loses nothing.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::abelian::ExtAb;
use crate::{Error, Result};

/// A finite field `F_q`, stored as `q = p^e` with `p` prime and `e ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldDescriptor {
    prime: u64,
    exponent: u32,
}

impl FieldDescriptor {
    /// Validates that `q` is a prime power `p^e`, `q ≥ 2`.
    pub fn from_order(q: u64) -> Result<FieldDescriptor> {
        if q < 2 {
            return Err(Error::InvalidField(format!("q = {q} is below 2")));
        }
        let p = smallest_prime_factor(q);
        let mut rest = q;
        let mut exponent = 0u32;
        while rest.is_multiple_of(p) {
            rest /= p;
            exponent += 1;
        }
        if rest != 1 {
            return Err(Error::InvalidField(format!("q = {q} is not a prime power")));
        }
        Ok(FieldDescriptor { prime: p, exponent })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// `q = p^e`.
    pub fn order(&self) -> BigUint {
        BigUint::from(self.prime).pow(self.exponent)
    }

    /// The additive group of the field: `(Z/p)^e`. This is all that trivial
    /// coefficients see of `F_q`.
    pub fn additive_group(&self) -> ExtAb {
        ExtAb::new(
            0,
            vec![BigUint::from(self.prime); self.exponent as usize],
            0,
        )
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.order())
    }
}

fn smallest_prime_factor(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 2;
    }
    n
}

/// `K_n(F_q)`. Zero for `n < 0` and for even `n > 0`; `Z` at 0;
/// `Z/(q^j − 1)` at `n = 2j − 1`.
pub fn quillen_k(field: &FieldDescriptor, n: i64) -> ExtAb {
    if n < 0 {
        return ExtAb::zero();
    }
    if n == 0 {
        return ExtAb::free(1);
    }
    if n % 2 == 0 {
        return ExtAb::zero();
    }
    let j = (n as u64).div_ceil(2);
    let exp = u32::try_from(j)
        .ok()
        .and_then(|j| j.checked_mul(field.exponent))
        .expect("degree too large for q^j");
    let order = BigUint::from(field.prime).pow(exp) - BigUint::one();
    // q = 2, j = 1 gives the trivial group Z/1
    ExtAb::new(0, vec![order], 0)
}

/// Finitely supported graded abelian group on the window `[0, N]`;
/// degrees below zero are zero by the connective convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedAb {
    groups: Vec<ExtAb>,
}

impl GradedAb {
    /// From the list of groups in degrees `0..=N`; must be nonempty.
    pub fn from_groups(groups: Vec<ExtAb>) -> GradedAb {
        assert!(!groups.is_empty(), "window must contain degree 0");
        GradedAb { groups }
    }

    pub fn max_degree(&self) -> usize {
        self.groups.len() - 1
    }

    /// The group in degree `n`; zero outside the window below 0.
    /// Panics above the window: those degrees were never computed.
    pub fn at(&self, n: i64) -> ExtAb {
        if n < 0 {
            return ExtAb::zero();
        }
        self.groups[n as usize].clone()
    }

    pub fn groups(&self) -> &[ExtAb] {
        &self.groups
    }
}

impl Serialize for GradedAb {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("GradedAb", 2)?;
        st.serialize_field("max_degree", &self.max_degree())?;
        st.serialize_field("groups", &self.groups)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for GradedAb {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            max_degree: usize,
            groups: Vec<ExtAb>,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.groups.len() != raw.max_degree + 1 {
            return Err(D::Error::custom(format!(
                "window [0, {}] needs {} groups, got {}",
                raw.max_degree,
                raw.max_degree + 1,
                raw.groups.len()
            )));
        }
        Ok(GradedAb::from_groups(raw.groups))
    }
}

/// Tabulate `K_n(F_q)` for `0 ≤ n ≤ max_degree`.
pub fn k_graded(field: &FieldDescriptor, max_degree: usize) -> GradedAb {
    GradedAb::from_groups(
        (0..=max_degree as i64)
            .map(|n| quillen_k(field, n))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(q: u64) -> FieldDescriptor {
        FieldDescriptor::from_order(q).unwrap()
    }

    #[test]
    fn prime_power_validation() {
        assert_eq!(f(2).prime(), 2);
        assert_eq!((f(8).prime(), f(8).exponent()), (2, 3));
        assert_eq!((f(9).prime(), f(9).exponent()), (3, 2));
        assert!(FieldDescriptor::from_order(1).is_err());
        assert!(FieldDescriptor::from_order(6).is_err());
        assert!(FieldDescriptor::from_order(12).is_err());
    }

    #[test]
    fn quillen_values_for_f2() {
        assert_eq!(quillen_k(&f(2), 0), ExtAb::free(1));
        assert_eq!(quillen_k(&f(2), 1), ExtAb::zero()); // Z/(2-1)
        assert_eq!(quillen_k(&f(2), 3), ExtAb::cyclic(3));
        assert_eq!(quillen_k(&f(2), 5), ExtAb::cyclic(7));
        assert_eq!(quillen_k(&f(2), 4), ExtAb::zero());
        assert_eq!(quillen_k(&f(2), -1), ExtAb::zero());
        assert_eq!(quillen_k(&f(2), -4), ExtAb::zero());
    }

    #[test]
    fn quillen_values_other_fields() {
        // q = 4, n = 3: Z/(4^2 - 1) = Z/15
        assert_eq!(quillen_k(&f(4), 3), ExtAb::cyclic(15));
        assert_eq!(quillen_k(&f(3), 1), ExtAb::cyclic(2));
    }

    #[test]
    fn odd_k_group_has_order_q_pow_j_minus_one() {
        for q in [2u64, 3, 4, 5, 8, 9] {
            let field = f(q);
            for j in 1..=5u32 {
                let k = quillen_k(&field, 2 * j as i64 - 1);
                assert!(k.is_finite());
                let order: BigUint = k.torsion().iter().product();
                assert_eq!(order, field.order().pow(j) - BigUint::one());
            }
        }
    }

    #[test]
    fn graded_tables() {
        let t = k_graded(&f(2), 3);
        assert_eq!(
            t.groups(),
            &[
                ExtAb::free(1),
                ExtAb::zero(),
                ExtAb::zero(),
                ExtAb::cyclic(3)
            ]
        );
        let t = k_graded(&f(3), 1);
        assert_eq!(t.groups(), &[ExtAb::free(1), ExtAb::cyclic(2)]);
        assert_eq!(t.at(-3), ExtAb::zero());
    }

    #[test]
    fn graded_json() {
        let t = k_graded(&f(2), 1);
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(
            json,
            r#"{"max_degree":1,"groups":[{"free":1,"torsion":[],"rational":0},{"free":0,"torsion":[],"rational":0}]}"#
        );
        let back: GradedAb = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
    }
}
