use num_bigint::BigInt;
use thiserror::Error;

/// Errors surfaced by the calculator.
///
/// Validation failures (bad field specs, inadmissible moduli, malformed
/// groups) are ordinary error returns. `InvariantViolation` is reserved for
/// internal shape assertions that should be unreachable on valid data; the
/// CLI maps it to a distinct exit code.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("defining polynomial is not monic")]
    NotMonic,

    #[error("defining polynomial is not squarefree")]
    NotSquarefree,

    #[error("integral basis is not closed under multiplication: {0}")]
    BasisNotClosed(String),

    #[error("zeta does not lie in the order")]
    ZetaNotIntegral,

    #[error("zeta does not have exact multiplicative order m")]
    ZetaOrderWrong,

    #[error("1 - zeta^{power} is singular; the root-of-unity action is not free")]
    ZetaActionNotFree { power: u64 },

    #[error("first basis element must be 1")]
    BasisFirstNotOne,

    #[error("modulus {c} is not admissible for this order")]
    NotAdmissible { c: BigInt },

    #[error("element has infinite order (or no nontrivial character)")]
    InfiniteOrderGenerator,

    #[error("quotient ring too large to enumerate: {size} elements")]
    QuotientTooLarge { size: BigInt },

    #[error("translation coordinates exceed the certified integer range")]
    TranslationTooLarge,

    #[error("integral colimit structure requested without a triangular certificate")]
    UncertifiedIntegralRequest,

    #[error("telescope certificate does not match the matrix: {0}")]
    BadCertificate(String),

    #[error("graded-group / action shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("given subset is not a subgroup")]
    NotASubgroup,

    #[error("action matrices do not define a representation: {0}")]
    NotARepresentation(String),

    #[error("group of order {order} exceeds the character-table limit of 24")]
    GroupTooLarge { order: usize },

    #[error("character table construction incomplete: {0}")]
    CharacterTableIncomplete(String),

    #[error("ideal generator is zero")]
    ZeroIdeal,

    #[error("field spec parse error: {0}")]
    SpecParse(String),

    #[error("internal invariant violation: {0}")]
    InvariantViolation(String),
}

impl Error {
    /// True for errors that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::InvariantViolation(_))
    }
}
