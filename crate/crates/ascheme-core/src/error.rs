use core::fmt;

/// Errors raised by scheme construction and the operations on top of it.
///
/// Axiom and morphism failures always carry a concrete witness so that a
/// caller (and the CLI report) can point at the offending points or
/// relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input color matrix is not square.
    NonSquareInput { rows: usize, cols: usize },
    /// One of the four scheme axioms fails. `witness` is a point or
    /// relation triple that exhibits the failure (unused slots are 0).
    AxiomViolation { axiom: u8, witness: (usize, usize, usize) },
    /// A relation or point index is out of range.
    IndexOutOfRange { index: usize, bound: usize },
    /// A Cayley table does not describe a group.
    NotAGroup { reason: &'static str },
    /// A map between groups is not a homomorphism.
    NotAHomomorphism { g: usize, h: usize },
    /// The given relation set is not closed under complex product.
    NotClosed,
    /// The point map does not induce a well-defined relation map: the two
    /// point pairs lie in one domain relation but map into two codomain
    /// relations.
    NotAMorphism { pair_a: (usize, usize), pair_b: (usize, usize) },
    /// The morphism is not admissible; `witness` is an `(x, y, s)` triple
    /// with `(phi(x), y) in phi(s)` but no preimage of `y` in `x s`.
    NotAdmissible { witness: (usize, usize, usize) },
    /// Codomain of the first morphism does not match domain of the second.
    DomainMismatch,
    /// Morphisms with different domain or codomain were mixed.
    MixedSignatures,
    /// Closed subset required to be normal is not.
    NotNormal,
    /// Image of the domain closed subset is not contained in the codomain one.
    ImageNotContained,
    /// Coaction requested for a morphism whose codomain is not thin.
    CodomainNotThin,
    /// Hopf structure requested on a non-thin scheme.
    NotThin,
    /// Closed-subset enumeration refused: rank above the bitset bound.
    RankTooLarge { rank: usize, bound: usize },
    /// Morphism enumeration refused: raw candidate count above budget.
    BudgetExceeded { candidates: u128, budget: u128 },
    /// Two independent computations of the same object disagree. This is a
    /// bug in the library, not a user error.
    InternalInconsistency(&'static str),
    /// Elements of different schemes were combined.
    SchemeMismatch,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonSquareInput { rows, cols } => {
                write!(f, "color matrix is not square: {rows} rows, {cols} columns")
            }
            Error::AxiomViolation { axiom, witness } => {
                write!(f, "scheme axiom {axiom} fails at witness {witness:?}")
            }
            Error::IndexOutOfRange { index, bound } => {
                write!(f, "index {index} out of range 0..{bound}")
            }
            Error::NotAGroup { reason } => write!(f, "not a group: {reason}"),
            Error::NotAHomomorphism { g, h } => {
                write!(f, "not a group homomorphism: fails at pair ({g}, {h})")
            }
            Error::NotClosed => write!(f, "relation set is not closed"),
            Error::NotAMorphism { pair_a, pair_b } => write!(
                f,
                "point map is not a morphism: pairs {pair_a:?} and {pair_b:?} share a domain relation but map to different codomain relations"
            ),
            Error::NotAdmissible { witness } => {
                write!(f, "morphism is not admissible: witness (x, y, s) = {witness:?}")
            }
            Error::DomainMismatch => write!(f, "composition domain mismatch"),
            Error::MixedSignatures => write!(f, "morphisms have mixed domains or codomains"),
            Error::NotNormal => write!(f, "closed subset is not normal"),
            Error::ImageNotContained => {
                write!(f, "image of domain closed subset not contained in codomain closed subset")
            }
            Error::CodomainNotThin => write!(f, "codomain scheme is not thin"),
            Error::NotThin => write!(f, "scheme is not thin"),
            Error::RankTooLarge { rank, bound } => {
                write!(f, "rank {rank} exceeds enumeration bound {bound}")
            }
            Error::BudgetExceeded { candidates, budget } => {
                write!(f, "enumeration would scan {candidates} candidates, budget is {budget}")
            }
            Error::InternalInconsistency(what) => {
                write!(f, "internal inconsistency (library bug): {what}")
            }
            Error::SchemeMismatch => write!(f, "elements belong to different schemes"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
