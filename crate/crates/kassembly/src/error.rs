use thiserror::Error;

use crate::abelian::ExtAb;

/// Structured pipeline errors.
///
/// Every refusal the engine can produce carries a stable name (the
/// SCREAMING_SNAKE token reported by [`Error::name`]); the CLI prints that
/// name and exits 1, so scripts can dispatch on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Neither colimit recognizer fired within the truncation. The caller
    /// must extend the system or use a different presentation.
    #[error("UNRECOGNIZED_COLIMIT: {0}")]
    UnrecognizedColimit(String),

    /// A directed system violated a structural invariant at construction.
    #[error("INVALID_SYSTEM: {0}")]
    InvalidSystem(String),

    /// Oracle input exceeds the supported desk scale.
    #[error("SCALE_EXCEEDED: {what} = {got} exceeds cap {cap}")]
    ScaleExceeded {
        what: &'static str,
        got: usize,
        cap: usize,
    },

    /// Differential analysis left UNDETERMINED entries; the abutment
    /// refuses rather than extrapolate.
    #[error("NOT_COLLAPSED: {undetermined} differential(s) undetermined")]
    NotCollapsed { undetermined: usize },

    /// A filtration extension is outside the split whitelist.
    #[error("EXTENSION_AMBIGUOUS: sub {sub}, quotient {quotient} at (p,q)=({p},{q})")]
    ExtensionAmbiguous {
        sub: ExtAb,
        quotient: ExtAb,
        p: usize,
        q: usize,
    },

    /// A long-exact-sequence extension cannot be certified split.
    #[error("LES_AMBIGUOUS: degree {degree}: sub {sub}, quotient {quotient}")]
    LesAmbiguous {
        degree: usize,
        sub: ExtAb,
        quotient: ExtAb,
    },

    /// A `MapSpec` tag contradicts the graded groups it describes.
    #[error("SPEC_INCONSISTENT: degree {degree}: {detail}")]
    SpecInconsistent { degree: usize, detail: String },

    /// The smashing hypothesis `k ⊗^L_R k ≃ k` fails; the fiber sequence
    /// does not apply. Carries the nonzero Tor witness.
    #[error("SMASHING_FAILS: Tor_{degree} = {tor}")]
    SmashingFails { degree: usize, tor: ExtAb },

    /// No unique complement `c` with `c ⊕ base = total` exists.
    #[error("COMPLEMENT_UNDEFINED: degree {degree}: total {total}, summand {base}")]
    ComplementUndefined {
        degree: usize,
        total: ExtAb,
        base: ExtAb,
    },

    /// Not a prime power, or otherwise outside the field descriptor class.
    #[error("INVALID_FIELD: {0}")]
    InvalidField(String),

    /// A group expression outside the grammar `Z^a+Q^b`.
    #[error("INVALID_GROUP: {0}")]
    InvalidGroup(String),
}

impl Error {
    /// Stable structured name, e.g. `"SMASHING_FAILS"`.
    pub fn name(&self) -> &'static str {
        match self {
            Error::UnrecognizedColimit(_) => "UNRECOGNIZED_COLIMIT",
            Error::InvalidSystem(_) => "INVALID_SYSTEM",
            Error::ScaleExceeded { .. } => "SCALE_EXCEEDED",
            Error::NotCollapsed { .. } => "NOT_COLLAPSED",
            Error::ExtensionAmbiguous { .. } => "EXTENSION_AMBIGUOUS",
            Error::LesAmbiguous { .. } => "LES_AMBIGUOUS",
            Error::SpecInconsistent { .. } => "SPEC_INCONSISTENT",
            Error::SmashingFails { .. } => "SMASHING_FAILS",
            Error::ComplementUndefined { .. } => "COMPLEMENT_UNDEFINED",
            Error::InvalidField(_) => "INVALID_FIELD",
            Error::InvalidGroup(_) => "INVALID_GROUP",
        }
    }
}
