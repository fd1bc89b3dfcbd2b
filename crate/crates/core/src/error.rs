use thiserror::Error;

/// Errors raised by the semiring, lattice and quantale constructions.
///
/// Variants that name a "witness" carry element labels so the message can be
/// read without the tables at hand.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("axiom `{law}` fails at ({})", .witness.join(", "))]
    AxiomViolation { law: &'static str, witness: Vec<String> },
    #[error("malformed tables: {0}")]
    Malformed(String),
    #[error("semiring `{0}` has no multiplicative unit")]
    MissingUnit(String),
    #[error("operation requires a unital semiring, `{0}` is not")]
    NotUnital(String),
    #[error("unknown constructor `{0}`")]
    UnknownConstructor(String),
    #[error("homomorphism law `{law}` fails at ({})", .witness.join(", "))]
    HomViolation { law: &'static str, witness: Vec<String> },
    #[error("{0} is not an ideal")]
    NotAnIdeal(String),
    #[error("operands belong to different semirings")]
    MismatchedParent,
    #[error("size {size} exceeds the {what} bound {bound}")]
    SizeBoundExceeded { what: &'static str, size: usize, bound: usize },
    #[error("preimage {0} of a prime is not prime")]
    NotPrimePreimage(String),
    #[error("cover equivalence broken for {0}")]
    EquivalenceBroken(String),
    #[error("not a lattice: {0}")]
    NotALattice(String),
    #[error("lattice is not distributive")]
    NotDistributive,
    #[error("map does not preserve {0}")]
    NotJoinPreserving(&'static str),
    #[error("induced map does not preserve {law} at {witness}")]
    PreservationFailed { law: &'static str, witness: String },
    #[error("nucleus axiom fails: {0}")]
    NucleusAxiomFailed(String),
    #[error("support map is ill defined on {0} / {1}")]
    IllDefined(String, String),
    #[error("spectrum homeomorphism fails: {0}")]
    HomeoFailed(String),
    #[error("frame isomorphism fails: {0}")]
    IsoFailed(String),
    #[error("semiring `{0}` is not additively idempotent")]
    NotAdditivelyIdempotent(String),
    #[error("product of k-ideals {0} is not a k-ideal")]
    ProductNotKIdeal(String),
    #[error("quantale unit is not its top element")]
    NotUnitallyBounded,
    #[error("semiring `{0}` is not complete idealic")]
    NotCompleteIdealic(String),
    #[error("adjunction uniqueness fails: {0}")]
    UniquenessFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
