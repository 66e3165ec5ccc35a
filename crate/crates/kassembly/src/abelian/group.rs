//! The value domain: isomorphism classes `Z^r ⊕ Z/d₁ ⊕ … ⊕ Z/d_t ⊕ Q^s`.
//!
//! This is the smallest class of abelian groups containing `Z`, `Q` and the
//! finite groups that is closed under `⊕`, `⊗` and `Tor₁` (both `Z` and `Q`
//! are flat, and `Q` is divisible). Torsion is kept in invariant-factor form
//! `d₁ | d₂ | … | d_t`, `d_i ≥ 2`, so equality of values is equality of
//! isomorphism classes. Anything outside the class is a hard error upstream,
//! never a silent approximation.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Isomorphism class of `Z^free_rank ⊕ Z/d₁ ⊕ … ⊕ Z/d_t ⊕ Q^rational_rank`.
///
/// Construction canonicalizes, so `==` decides isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtAb {
    free_rank: usize,
    torsion: Vec<BigUint>,
    rational_rank: usize,
}

impl ExtAb {
    /// The zero group.
    pub fn zero() -> Self {
        ExtAb {
            free_rank: 0,
            torsion: Vec::new(),
            rational_rank: 0,
        }
    }

    /// `Z^r`.
    pub fn free(r: usize) -> Self {
        ExtAb {
            free_rank: r,
            torsion: Vec::new(),
            rational_rank: 0,
        }
    }

    /// `Q^s`.
    pub fn rational(s: usize) -> Self {
        ExtAb {
            free_rank: 0,
            torsion: Vec::new(),
            rational_rank: s,
        }
    }

    /// `Z/d`. `d = 1` gives the zero group.
    ///
    /// Panics if `d = 0`: there is no cyclic group of order zero in this
    /// encoding (`Z` is `free(1)`).
    pub fn cyclic(d: u64) -> Self {
        Self::new(0, vec![BigUint::from(d)], 0)
    }

    /// Build from parts, canonicalizing the torsion list into an
    /// invariant-factor chain and dropping trivial factors.
    ///
    /// Panics if any torsion entry is zero.
    pub fn new(free_rank: usize, torsion: Vec<BigUint>, rational_rank: usize) -> Self {
        ExtAb {
            free_rank,
            torsion: normalize_invariant_factors(torsion),
            rational_rank,
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// Invariant factors `d₁ | d₂ | … | d_t`, each `≥ 2`.
    pub fn torsion(&self) -> &[BigUint] {
        &self.torsion
    }

    pub fn rational_rank(&self) -> usize {
        self.rational_rank
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty() && self.rational_rank == 0
    }

    /// Finite group: no free and no rational part.
    pub fn is_finite(&self) -> bool {
        self.free_rank == 0 && self.rational_rank == 0
    }

    /// Finitely generated: no rational part.
    pub fn is_finitely_generated(&self) -> bool {
        self.rational_rank == 0
    }

    /// Free abelian `Z^r` (including the zero group).
    pub fn is_free(&self) -> bool {
        self.torsion.is_empty() && self.rational_rank == 0
    }

    /// Pure rational `Q^s` (including the zero group).
    pub fn is_rational_vector_space(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Number of generators in the canonical presentation of the finitely
    /// generated part: free generators first, then one per torsion factor.
    pub fn generator_count(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    /// Direct sum. Ranks add; torsion lists merge and renormalize.
    pub fn direct_sum(&self, other: &ExtAb) -> ExtAb {
        let mut torsion = self.torsion.clone();
        torsion.extend_from_slice(&other.torsion);
        ExtAb::new(
            self.free_rank + other.free_rank,
            torsion,
            self.rational_rank + other.rational_rank,
        )
    }

    /// Tensor product over `Z`.
    ///
    /// Bilinear over `⊕` with `Z ⊗ X = X`, `Z/m ⊗ Z/n = Z/gcd(m,n)`,
    /// `Q ⊗ Z = Q`, `Q ⊗ Q = Q`, `Q ⊗ Z/n = 0`.
    pub fn tensor(&self, other: &ExtAb) -> ExtAb {
        let free = self.free_rank * other.free_rank;
        let rational = self.free_rank * other.rational_rank
            + self.rational_rank * other.free_rank
            + self.rational_rank * other.rational_rank;

        let mut torsion = Vec::new();
        for d in &self.torsion {
            for _ in 0..other.free_rank {
                torsion.push(d.clone());
            }
        }
        for e in &other.torsion {
            for _ in 0..self.free_rank {
                torsion.push(e.clone());
            }
        }
        for d in &self.torsion {
            for e in &other.torsion {
                torsion.push(d.gcd(e));
            }
        }
        ExtAb::new(free, torsion, rational)
    }

    /// `Tor₁` over `Z`. Additive in both arguments; `Z` and `Q` are flat,
    /// so only torsion against torsion survives:
    /// `Tor₁(Z/m, Z/n) = Z/gcd(m,n)`.
    pub fn tor1(&self, other: &ExtAb) -> ExtAb {
        let mut torsion = Vec::new();
        for d in &self.torsion {
            for e in &other.torsion {
                torsion.push(d.gcd(e));
            }
        }
        ExtAb::new(0, torsion, 0)
    }

    /// The unique complement `c` with `c ⊕ summand = self`, if the summand
    /// cancellation is defined: ranks subtract and the summand's torsion
    /// cancels out of `self`'s, matching equal invariant factors first and
    /// falling back to primary (prime-power) cancellation for the rest.
    pub fn complement_of(&self, summand: &ExtAb) -> Option<ExtAb> {
        let free = self.free_rank.checked_sub(summand.free_rank)?;
        let rational = self.rational_rank.checked_sub(summand.rational_rank)?;

        // Match equal invariant factors first; the pipeline's cancellations
        // are all of this form, so factorization is rarely reached.
        let mut remaining = self.torsion.clone();
        let mut unmatched: Vec<BigUint> = Vec::new();
        for e in &summand.torsion {
            if let Some(pos) = remaining.iter().position(|d| d == e) {
                remaining.remove(pos);
            } else {
                unmatched.push(e.clone());
            }
        }

        let torsion = if unmatched.is_empty() {
            remaining
        } else {
            // Primary cancellation: subtract the multiset of prime-power
            // summands. Uniqueness of the complement follows from the
            // uniqueness of the primary cyclic decomposition.
            let mut pool = primary_parts(&remaining);
            for part in primary_parts(&unmatched) {
                let pos = pool.iter().position(|q| *q == part)?;
                pool.remove(pos);
            }
            pool
        };

        let c = ExtAb::new(free, torsion, rational);
        debug_assert_eq!(&c.direct_sum(summand), self);
        Some(c)
    }

    /// Whether `summand` embeds as a direct summand with a complement in
    /// the value class.
    pub fn has_direct_summand(&self, summand: &ExtAb) -> bool {
        self.complement_of(summand).is_some()
    }
}

/// Canonicalize a multiset of cyclic orders into an invariant-factor chain.
///
/// Repeatedly replaces a violating pair `(x, y)` by `(gcd, lcm)`; per prime
/// this is a min/max comparator on the exponent vectors, so the loop sorts
/// every prime's exponents simultaneously without factoring anything.
/// Entries equal to 1 are dropped. Panics on a zero entry.
pub fn normalize_invariant_factors(entries: Vec<BigUint>) -> Vec<BigUint> {
    let one = BigUint::one();
    for d in &entries {
        assert!(!num_traits::Zero::is_zero(d), "torsion order must be >= 1");
    }
    let mut v: Vec<BigUint> = entries.into_iter().filter(|d| *d != one).collect();
    loop {
        let mut changed = false;
        for i in 0..v.len() {
            for j in (i + 1)..v.len() {
                let g = v[i].gcd(&v[j]);
                if g != v[i] {
                    let l = v[i].lcm(&v[j]);
                    v[i] = g;
                    v[j] = l;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    v.retain(|d| *d != one);
    v
}

/// Prime-power decomposition of a torsion multiset, by trial division.
fn primary_parts(factors: &[BigUint]) -> Vec<BigUint> {
    let mut parts = Vec::new();
    for d in factors {
        let mut rest = d.clone();
        let mut p = BigUint::from(2u32);
        while &p * &p <= rest {
            if rest.is_multiple_of(&p) {
                let mut power = BigUint::one();
                while rest.is_multiple_of(&p) {
                    rest /= &p;
                    power *= &p;
                }
                parts.push(power);
            }
            p += 1u32;
        }
        if rest > BigUint::one() {
            parts.push(rest);
        }
    }
    parts.sort();
    parts
}

impl fmt::Display for ExtAb {
    /// `Z^r ⊕ Z/d₁ ⊕ … ⊕ Q^s`, exponent 1 suppressed, zero printed as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut pieces: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => pieces.push("Z".to_string()),
            r => pieces.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            pieces.push(format!("Z/{d}"));
        }
        match self.rational_rank {
            0 => {}
            1 => pieces.push("Q".to_string()),
            s => pieces.push(format!("Q^{s}")),
        }
        write!(f, "{}", pieces.join(" ⊕ "))
    }
}

// JSON form: {"free": r, "torsion": [d₁, …], "rational": s}. Torsion orders
// are emitted as JSON numbers of arbitrary precision, so round-trips are
// byte-identical even past u64.
impl Serialize for ExtAb {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let torsion: Vec<serde_json::Number> = self
            .torsion
            .iter()
            .map(|d| {
                serde_json::from_str(&d.to_string()).expect("decimal digits parse as a JSON number")
            })
            .collect();
        let mut st = serializer.serialize_struct("ExtAb", 3)?;
        st.serialize_field("free", &self.free_rank)?;
        st.serialize_field("torsion", &torsion)?;
        st.serialize_field("rational", &self.rational_rank)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for ExtAb {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            free: usize,
            torsion: Vec<serde_json::Number>,
            rational: usize,
        }
        let raw = Raw::deserialize(deserializer)?;
        let mut torsion = Vec::with_capacity(raw.torsion.len());
        for n in &raw.torsion {
            let d: BigUint = n.to_string().parse().map_err(|_| {
                D::Error::custom(format!("torsion order {n} is not a non-negative integer"))
            })?;
            if num_traits::Zero::is_zero(&d) {
                return Err(D::Error::custom("torsion order must be >= 1"));
            }
            torsion.push(d);
        }
        Ok(ExtAb::new(raw.free, torsion, raw.rational))
    }
}
