//! Truncated directed colimits of finitely generated abelian groups.
//!
//! A [`DirectedSystem`] is a finite truncation `A₀ → A₁ → ⋯ → A_m` of a
//! sequential diagram, with transition maps given by integer matrices on
//! canonical generators (free generators first, then torsion generators).
//! A finite truncation alone can never prove facts about the infinite tail
//! — in particular divisibility by all primes — so every system declares a
//! [`TransitionRule`] and the recognizers in [`colimit`] only draw
//! conclusions the declared rule supports.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{cokernel, ExtAb, IntMatrix};
use crate::{Error, Result};

/// How the diagram continues past the listed truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransitionRule {
    /// No generating rule is declared; only the listed maps carry content.
    /// The colimit is recognized only when a suffix of isomorphisms pins it.
    Explicit,
    /// The system continues the pattern `maps[i] = ×(i+2)` on a constant
    /// stage: `A →×2 A →×3 A →×4 ⋯`. Every prime divides infinitely many
    /// multipliers, which is what lets the recognizer conclude `Q` on free
    /// parts and `0` on torsion.
    FactorialRule,
}

/// Finite truncation of a sequential diagram of finitely generated groups.
#[derive(Debug, Clone)]
pub struct DirectedSystem {
    stages: Vec<ExtAb>,
    maps: Vec<IntMatrix>,
    rule: TransitionRule,
}

impl DirectedSystem {
    /// Validates shapes and well-definedness: `maps[i]` must be a
    /// `gen(stages[i+1]) × gen(stages[i])` matrix carrying each source
    /// relation `d·g` into the target relation lattice.
    pub fn new(
        stages: Vec<ExtAb>,
        maps: Vec<IntMatrix>,
        rule: TransitionRule,
    ) -> Result<DirectedSystem> {
        if stages.is_empty() {
            return Err(Error::InvalidSystem(
                "a system needs at least one stage".into(),
            ));
        }
        if maps.len() + 1 != stages.len() {
            return Err(Error::InvalidSystem(format!(
                "{} stages need {} maps, got {}",
                stages.len(),
                stages.len() - 1,
                maps.len()
            )));
        }
        for (i, stage) in stages.iter().enumerate() {
            if !stage.is_finitely_generated() {
                return Err(Error::InvalidSystem(format!(
                    "stage {i} = {stage} is not finitely generated"
                )));
            }
        }
        for (i, m) in maps.iter().enumerate() {
            let src = &stages[i];
            let tgt = &stages[i + 1];
            if m.rows() != tgt.generator_count() || m.cols() != src.generator_count() {
                return Err(Error::InvalidSystem(format!(
                    "map {i} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    tgt.generator_count(),
                    src.generator_count()
                )));
            }
            if !is_well_defined(src, tgt, m) {
                return Err(Error::InvalidSystem(format!(
                    "map {i} does not carry relations of {src} into relations of {tgt}"
                )));
            }
        }
        Ok(DirectedSystem { stages, maps, rule })
    }

    /// Constant system: every stage equal, maps given uniformly by `make`.
    pub fn constant(
        stage: ExtAb,
        len: usize,
        rule: TransitionRule,
        make: impl Fn(usize) -> IntMatrix,
    ) -> Result<DirectedSystem> {
        assert!(len >= 1, "need at least one stage");
        let maps = (0..len - 1).map(make).collect();
        DirectedSystem::new(vec![stage; len], maps, rule)
    }

    pub fn stages(&self) -> &[ExtAb] {
        &self.stages
    }

    pub fn maps(&self) -> &[IntMatrix] {
        &self.maps
    }

    pub fn rule(&self) -> TransitionRule {
        self.rule
    }
}

/// Multiplier the factorial rule prescribes for `maps[i]`: `i + 2`,
/// so the listed maps read `×2, ×3, ×4, …`.
pub fn factorial_multiplier(i: usize) -> BigInt {
    BigInt::from(i as u64 + 2)
}

fn is_well_defined(src: &ExtAb, tgt: &ExtAb, m: &IntMatrix) -> bool {
    // Source relations are d_i·(torsion generator i); their images must land
    // in the diagonal relation lattice of the target.
    let src_free = src.free_rank();
    let tgt_free = tgt.free_rank();
    for (t, d) in src.torsion().iter().enumerate() {
        let col = src_free + t;
        let d = BigInt::from(d.clone());
        for row in 0..m.rows() {
            let image = &d * &m[(row, col)];
            if row < tgt_free {
                if !image.is_zero() {
                    return false;
                }
            } else {
                let order = BigInt::from(tgt.torsion()[row - tgt_free].clone());
                if !image.is_multiple_of(&order) {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether `m` induces an isomorphism `src → tgt`.
///
/// Finitely generated abelian groups are Hopfian, so for equal isomorphism
/// classes surjectivity suffices; surjectivity is cokernel vanishing of the
/// map together with the target's relations.
fn is_isomorphism(src: &ExtAb, tgt: &ExtAb, m: &IntMatrix) -> bool {
    if src != tgt {
        return false;
    }
    let relations = relation_matrix(tgt);
    cokernel(&m.hstack(&relations)).is_zero()
}

/// Diagonal relation matrix of a finitely generated group: one column
/// `d_i·e_{free+i}` per torsion generator.
fn relation_matrix(x: &ExtAb) -> IntMatrix {
    let gens = x.generator_count();
    let t = x.torsion().len();
    let mut m = IntMatrix::zeros(gens, t);
    for (i, d) in x.torsion().iter().enumerate() {
        m[(x.free_rank() + i, i)] = BigInt::from(d.clone());
    }
    m
}

/// Colimit of a truncated system, when a recognizer fires.
///
/// * `Explicit`: STABILIZATION — if a nonempty suffix of the listed maps
///   are isomorphisms, the answer is the stable stage value, independent of
///   the truncation length past that point.
/// * `FactorialRule`: the stages must be constant and the listed maps must
///   match `×(i+2)·id`. Then the free part becomes divisible (every prime
///   divides infinitely many multipliers) and every torsion class dies (the
///   multipliers cofinally hit multiples of the exponent), so the colimit
///   is `Q^free_rank`. Listed-suffix stabilization is deliberately not
///   consulted here: the declared tail eventually destroys any finite
///   window of isomorphisms.
///
/// Anything else is [`Error::UnrecognizedColimit`]; extend the truncation
/// or present the system differently.
pub fn colimit(sys: &DirectedSystem) -> Result<ExtAb> {
    match sys.rule() {
        TransitionRule::Explicit => {
            if sys.maps.is_empty() {
                return Err(Error::UnrecognizedColimit(
                    "single-stage explicit system has no transition evidence".into(),
                ));
            }
            let all_iso_from = (0..sys.maps.len()).find(|&j| {
                (j..sys.maps.len())
                    .all(|i| is_isomorphism(&sys.stages[i], &sys.stages[i + 1], &sys.maps[i]))
            });
            match all_iso_from {
                Some(_) => Ok(sys.stages.last().expect("nonempty").clone()),
                None => Err(Error::UnrecognizedColimit(
                    "no suffix of the listed maps is an isomorphism".into(),
                )),
            }
        }
        TransitionRule::FactorialRule => {
            let stage = &sys.stages[0];
            if sys.stages.iter().any(|s| s != stage) {
                return Err(Error::UnrecognizedColimit(
                    "factorial rule needs constant stages".into(),
                ));
            }
            let gens = stage.generator_count();
            for (i, m) in sys.maps.iter().enumerate() {
                if *m != IntMatrix::scalar(gens, factorial_multiplier(i)) {
                    return Err(Error::UnrecognizedColimit(format!(
                        "map {i} does not match the declared factorial multiplier"
                    )));
                }
            }
            Ok(ExtAb::rational(stage.free_rank()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_identity_system_stabilizes() {
        let sys = DirectedSystem::constant(ExtAb::cyclic(3), 4, TransitionRule::Explicit, |_| {
            IntMatrix::identity(1)
        })
        .unwrap();
        assert_eq!(colimit(&sys).unwrap(), ExtAb::cyclic(3));
    }

    #[test]
    fn factorial_system_on_z_gives_q() {
        let sys = DirectedSystem::constant(ExtAb::free(1), 6, TransitionRule::FactorialRule, |i| {
            IntMatrix::scalar(1, factorial_multiplier(i))
        })
        .unwrap();
        assert_eq!(colimit(&sys).unwrap(), ExtAb::rational(1));
    }

    #[test]
    fn factorial_system_on_f2_dies() {
        let sys =
            DirectedSystem::constant(ExtAb::cyclic(2), 6, TransitionRule::FactorialRule, |i| {
                IntMatrix::scalar(1, factorial_multiplier(i))
            })
            .unwrap();
        assert_eq!(colimit(&sys).unwrap(), ExtAb::zero());
    }

    #[test]
    fn explicit_multiplication_is_unrecognized() {
        let sys = DirectedSystem::constant(ExtAb::free(1), 4, TransitionRule::Explicit, |_| {
            IntMatrix::scalar(1, 2)
        })
        .unwrap();
        assert!(matches!(colimit(&sys), Err(Error::UnrecognizedColimit(_))));
    }

    #[test]
    fn stabilization_is_truncation_independent() {
        // x2 then identities: stabilizes from index 1 on, any length
        for len in 3..7 {
            let stages = vec![ExtAb::free(1); len];
            let maps: Vec<IntMatrix> = (0..len - 1)
                .map(|i| {
                    if i == 0 {
                        IntMatrix::scalar(1, 2)
                    } else {
                        IntMatrix::identity(1)
                    }
                })
                .collect();
            let sys = DirectedSystem::new(stages, maps, TransitionRule::Explicit).unwrap();
            assert_eq!(colimit(&sys).unwrap(), ExtAb::free(1));
        }
    }

    #[test]
    fn torsion_isomorphisms_are_recognized() {
        // x3 on Z/2 is an isomorphism even though the matrix is not unimodular
        let sys = DirectedSystem::constant(ExtAb::cyclic(2), 3, TransitionRule::Explicit, |_| {
            IntMatrix::scalar(1, 3)
        })
        .unwrap();
        assert_eq!(colimit(&sys).unwrap(), ExtAb::cyclic(2));
    }

    #[test]
    fn ill_defined_maps_are_rejected() {
        // Z/2 → Z/4 by 1 does not carry 2·g to a relation
        let sys = DirectedSystem::new(
            vec![ExtAb::cyclic(2), ExtAb::cyclic(4)],
            vec![IntMatrix::identity(1)],
            TransitionRule::Explicit,
        );
        assert!(matches!(sys, Err(Error::InvalidSystem(_))));
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let sys = DirectedSystem::new(
            vec![ExtAb::free(2), ExtAb::free(1)],
            vec![IntMatrix::identity(2)],
            TransitionRule::Explicit,
        );
        assert!(matches!(sys, Err(Error::InvalidSystem(_))));
    }

    #[test]
    fn surjection_between_distinct_stages_is_not_stable() {
        // Z/4 → Z/2 by 1 is well defined and surjective but not iso
        let sys = DirectedSystem::new(
            vec![ExtAb::cyclic(4), ExtAb::cyclic(2)],
            vec![IntMatrix::identity(1)],
            TransitionRule::Explicit,
        )
        .unwrap();
        assert!(matches!(colimit(&sys), Err(Error::UnrecognizedColimit(_))));
    }
}
