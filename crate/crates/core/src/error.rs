use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("mixed coefficient rings: {0} and {1}")]
    MixedRings(String, String),
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("operation `{op}` does not support coefficients in {ring}")]
    UnsupportedRing { op: &'static str, ring: String },
    #[error("degree {degree} out of range 0..={top}")]
    DegreeOutOfRange { degree: usize, top: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("not a chain complex: d_{lower} * d_{upper} is nonzero", upper = .degree + 1, lower = .degree)]
    NotAComplex { degree: usize },
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("arrangement is not essential: forms have rank {rank} in {ambient} coordinates")]
    NotEssential { rank: usize, ambient: usize },
    #[error("invalid arrangement: {0}")]
    InvalidArrangement(String),
    #[error("invalid character: weights sum to {0}, expected 0")]
    InvalidCharacter(i64),
    #[error("c(A)=3: p(M) is not determined combinatorially for this arrangement")]
    GirthTooSmall,
    #[error("not in generic position: {0}")]
    NotGenericPosition(String),
    #[error("relator {index} specializes to {value}, not 1")]
    RelatorNotKilled { index: usize, value: String },
    #[error("presentation is not meridian-marked: {0}")]
    NotMeridianMarked(String),
    #[error("invalid tower: {0}")]
    TowerInvalid(String),
    #[error("boundary d_{needed} unavailable: complex has top degree {top}")]
    DegreeUnavailable { needed: usize, top: usize },
    #[error("computation paths disagree: {0}")]
    Disagreement(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Whether the input was well formed but the requested mathematics is
    /// refused (as opposed to malformed input).
    pub fn is_refusal(&self) -> bool {
        matches!(
            self,
            Error::UnsupportedRing { .. }
                | Error::NotEssential { .. }
                | Error::GirthTooSmall
                | Error::NotGenericPosition(_)
                | Error::RelatorNotKilled { .. }
                | Error::NotMeridianMarked(_)
                | Error::TowerInvalid(_)
                | Error::DegreeUnavailable { .. }
                | Error::InvalidCharacter(_)
                | Error::Disagreement(_)
        )
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Error::MixedRings(..) => "MixedRings",
            Error::EmptyInput(_) => "EmptyInput",
            Error::UnsupportedRing { .. } => "UnsupportedRing",
            Error::DegreeOutOfRange { .. } => "DegreeOutOfRange",
            Error::Dimension(_) => "Dimension",
            Error::NotAComplex { .. } => "NotAComplex",
            Error::NotInvertible(_) => "NotInvertible",
            Error::NotEssential { .. } => "NotEssential",
            Error::InvalidArrangement(_) => "InvalidArrangement",
            Error::InvalidCharacter(_) => "InvalidCharacter",
            Error::GirthTooSmall => "GirthTooSmall",
            Error::NotGenericPosition(_) => "NotGenericPosition",
            Error::RelatorNotKilled { .. } => "RelatorNotKilled",
            Error::NotMeridianMarked(_) => "NotMeridianMarked",
            Error::TowerInvalid(_) => "TowerInvalid",
            Error::DegreeUnavailable { .. } => "DegreeUnavailable",
            Error::Disagreement(_) => "Disagreement",
            Error::Parse(_) => "Parse",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }
}
