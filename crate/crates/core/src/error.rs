use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("elements belong to different Boolean algebras")]
    AlgebraMismatch,

    #[error("atom count {0} outside supported range 1..={max}", max = crate::algebra::MAX_ATOMS)]
    AtomCount(usize),

    #[error("exhaustive verification refused: {atoms} atoms exceeds limit of {limit}")]
    ExhaustiveLimit { atoms: usize, limit: usize },

    #[error("element bits {bits:#b} out of range for a {atoms}-atom algebra")]
    ElementRange { bits: u32, atoms: usize },

    #[error("unknown atom label `{0}`")]
    UnknownAtom(String),

    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("empty set: at least one element is required")]
    EmptySet,

    #[error("fragment contains a duplicate element at position {0}")]
    DuplicateElement(usize),

    #[error("expected {expected} labels, found {found}")]
    LabelCount { expected: usize, found: usize },

    #[error("mapping is not total: expected {expected} entries, found {found}")]
    MappingLength { expected: usize, found: usize },

    #[error("mapping entry {index} points to {value}, outside target of size {size}")]
    MappingRange {
        index: usize,
        value: usize,
        size: usize,
    },

    #[error("mapping is not a bijection")]
    NotBijective,

    #[error("fragment of size {size} exceeds isomorphism search limit {limit}")]
    SearchLimit { size: usize, limit: usize },

    #[error("invalid degree `{0}`: expected p/q or decimal in [0,1]")]
    DegreeParse(String),

    #[error("degree {0} outside [0,1]")]
    DegreeRange(String),

    #[error("membership {mu} + nonmembership {nu} exceeds 1")]
    PairSum { mu: String, nu: String },

    #[error("cell ({row}, {col}): membership {mu} + nonmembership {nu} exceeds 1")]
    CellSum {
        row: usize,
        col: usize,
        mu: String,
        nu: String,
    },

    #[error("matrix `{name}` has shape mismatch: expected {rows}x{cols}")]
    MatrixShape {
        name: &'static str,
        rows: usize,
        cols: usize,
    },

    #[error("fuzzy sets are defined over different domains")]
    DomainMismatch,

    #[error("fuzzy set has no membership for `{0}`")]
    MissingMembership(String),

    #[error("unknown operator `{0}`")]
    UnknownOperator(String),

    #[error("relation sets do not match for composition")]
    SetMismatch,

    #[error("relation is not square")]
    NotSquare,

    #[error("relation is not an intuitionistic fuzzy partial order ({0})")]
    NotPartialOrder(String),

    #[error("order is not a lattice")]
    NotLattice,

    #[error("carrier of size {size} exceeds the exhaustive limit {limit}")]
    CarrierLimit { size: usize, limit: usize },

    #[error("De Morgan preconditions unmet: {0}")]
    DeMorganPrecondition(String),

    #[error("De Morgan law violated at ({a}, {b}): {law}")]
    DeMorganViolation { law: String, a: String, b: String },

    #[error("lattice is not an intuitionistic fuzzy Boolean algebra: {0}")]
    NotBooleanAlgebra(String),

    #[error("contradiction nonmembership {0} exceeds 1/2")]
    ContradictionNu(String),

    #[error("invalid record: {0}")]
    Record(String),
}
