//! Error type shared by every module of the crate.

use alloc::string::String;
use core::fmt;

/// Everything that can go wrong while building or combining the exact
/// objects of this crate. Variants carry enough context to report the
/// failure without access to the inputs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Error {
    /// Presentation or word text failed to parse; `offset` is a byte
    /// position into the input.
    Parse { offset: usize, message: String },
    /// A word referenced a generator index outside its ambient presentation.
    GeneratorOutOfRange { index: usize, count: usize },
    /// A duplicate generator name in a presentation.
    DuplicateGenerator(String),
    /// A generator name that does not match `[A-Za-z][A-Za-z0-9_]*`.
    BadGeneratorName(String),
    /// An exponent whose absolute value exceeds the letter-expansion cap.
    ExponentTooLarge(i64),
    /// Matrix dimensions incompatible with the requested operation.
    DimensionMismatch { expected: usize, found: usize },
    /// A character value vector of the wrong length for its presentation.
    ValueCountMismatch { generators: usize, values: usize },
    /// Values that fail to vanish on some relator, so they define no
    /// homomorphism of the presented group.
    NotACharacter { relator: usize },
    /// The zero vector where a genuine (nonzero) character is required.
    ZeroCharacter,
    /// Two objects built over different ambient presentations were combined.
    AmbientMismatch,
    /// Arc endpoints that are antipodal classes.
    AntipodalEndpoints,
    /// A join declared over a splitting that does not match the ambient
    /// generator count or the factor subsets.
    BadProductSplitting(String),
    /// A homomorphism whose relator images are nontrivial in the target
    /// abelianization.
    RelatorNotKilled { relator: usize },
    /// A map that should be surjective on rational first homology but is not.
    NotSurjectiveOnH1,
    /// A finite multiplication table that is not a group (with reason).
    BadQuotientTable(String),
    /// Generator images that fail to generate the finite quotient.
    ImagesDoNotGenerate,
    /// A word expected to lie in the kernel of a finite quotient map.
    NotInKernel,
    /// A matrix expected to be an involution (square equal to identity).
    NotAnInvolution,
    /// A finite quotient expected to be elementary abelian of exponent 2.
    NotElementaryAbelianTwo,
    /// An empty relator where Brown's criterion needs letters to walk.
    EmptyRelator,
    /// A character that does not vanish on the relator it must walk.
    CharacterNotOnRelator,
    /// Thompson model data violating its own constraints (with reason).
    BadThompsonModel(String),
    /// Cell counts with no top cell or an empty count vector.
    BadCellCounts(String),
    /// An Euler-characteristic profile factor outside the admitted range.
    BadFactorChi(i64),
    /// A per-degree table missing the requested degree.
    MissingDegree(usize),
    /// A filtration whose stages fail to chain together (with reason).
    BadFiltration(String),
    /// A filtration stage used without a factor description.
    MissingFactor { stage: usize },
    /// The prescribed boundary values admit no extension (distinct from a
    /// well-posed system with no solution, which is reported as `None`).
    InconsistentBoundaryValues,
    /// A sampled scaling parameter that must be a positive rational.
    NonPositiveMu,
    /// A cone direction that fails to vanish on the declared kernel
    /// generators, so it does not fix the fiber character.
    DirectionDoesNotVanish { generator: usize },
    /// Strand count too small for the requested braid construction.
    TooFewStrands { strands: usize, minimum: usize },
    /// A strand index outside `1..=strands`.
    StrandOutOfRange { strand: usize, strands: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { offset, message } => {
                write!(f, "parse error at byte {offset}: {message}")
            }
            Error::GeneratorOutOfRange { index, count } => {
                write!(
                    f,
                    "generator index {index} out of range (presentation has {count})"
                )
            }
            Error::DuplicateGenerator(name) => write!(f, "duplicate generator name `{name}`"),
            Error::BadGeneratorName(name) => write!(f, "invalid generator name `{name}`"),
            Error::ExponentTooLarge(e) => write!(f, "exponent {e} exceeds the expansion cap"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::ValueCountMismatch { generators, values } => {
                write!(f, "{values} values for {generators} generators")
            }
            Error::NotACharacter { relator } => {
                write!(f, "values do not vanish on relator {relator}")
            }
            Error::ZeroCharacter => write!(f, "the zero vector is not a character"),
            Error::AmbientMismatch => write!(f, "objects live over different presentations"),
            Error::AntipodalEndpoints => write!(f, "arc endpoints are antipodal"),
            Error::BadProductSplitting(why) => write!(f, "bad product splitting: {why}"),
            Error::RelatorNotKilled { relator } => {
                write!(
                    f,
                    "image of relator {relator} is nontrivial in the target abelianization"
                )
            }
            Error::NotSurjectiveOnH1 => {
                write!(f, "map is not surjective on rational first homology")
            }
            Error::BadQuotientTable(why) => write!(f, "multiplication table is not a group: {why}"),
            Error::ImagesDoNotGenerate => {
                write!(f, "generator images do not generate the finite quotient")
            }
            Error::NotInKernel => write!(f, "word does not lie in the kernel of the quotient map"),
            Error::NotAnInvolution => write!(f, "matrix is not an involution"),
            Error::NotElementaryAbelianTwo => {
                write!(f, "quotient is not elementary abelian of exponent 2")
            }
            Error::EmptyRelator => write!(f, "relator is empty"),
            Error::CharacterNotOnRelator => {
                write!(f, "character does not vanish on the relator")
            }
            Error::BadThompsonModel(why) => write!(f, "bad Thompson model: {why}"),
            Error::BadCellCounts(why) => write!(f, "bad cell counts: {why}"),
            Error::BadFactorChi(chi) => {
                write!(
                    f,
                    "factor Euler characteristic {chi} is not admissible (must be <= 0)"
                )
            }
            Error::MissingDegree(d) => write!(f, "no subset supplied for degree {d}"),
            Error::BadFiltration(why) => write!(f, "bad filtration: {why}"),
            Error::MissingFactor { stage } => {
                write!(f, "stage {stage} carries no factor description")
            }
            Error::InconsistentBoundaryValues => {
                write!(
                    f,
                    "prescribed values are inconsistent on the kernel generators"
                )
            }
            Error::NonPositiveMu => write!(f, "scaling parameter must be a positive rational"),
            Error::DirectionDoesNotVanish { generator } => {
                write!(
                    f,
                    "direction character is nonzero on kernel generator {generator}"
                )
            }
            Error::TooFewStrands { strands, minimum } => {
                write!(
                    f,
                    "{strands} strands given, construction needs at least {minimum}"
                )
            }
            Error::StrandOutOfRange { strand, strands } => {
                write!(f, "strand {strand} is out of range for {strands} strands")
            }
        }
    }
}

impl core::error::Error for Error {}
