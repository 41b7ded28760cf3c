use thiserror::Error;

/// Every domain error the library can report.
///
/// Each variant maps to exactly one machine-readable code via [`Error::code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero input")]
    ZeroInput,
    #[error("unsupported field for this operation: {0}")]
    UnsupportedField(String),
    #[error("invalid field specification: {0}")]
    InvalidField(String),
    #[error("invalid scalar: {0}")]
    InvalidScalar(String),
    #[error("variable mismatch: {0:?} vs {1:?}")]
    VariableMismatch(Vec<String>, Vec<String>),
    #[error("missing assignment for variable {0}")]
    MissingAssignment(String),
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown symbol `{symbol}` at position {position}")]
    UnknownSymbol { position: usize, symbol: String },
    #[error("singular matrix")]
    SingularMatrix,
    #[error("structure derivation failed: {0}")]
    Derivation(String),
    #[error("degenerate form (zero discriminant)")]
    DegenerateForm,
    #[error("square root of {0} does not exist in the field")]
    SquareRootAbsent(String),
    #[error("form is not diagonalizable by the Hessian transform")]
    NotDiagonalizable,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("curve mismatch")]
    CurveMismatch,
    #[error("form mismatch")]
    FormMismatch,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::FieldMismatch(..) => "FieldMismatch",
            Error::DivisionByZero => "DivisionByZero",
            Error::ZeroInput => "ZeroInput",
            Error::UnsupportedField(_) => "UnsupportedField",
            Error::InvalidField(_) => "InvalidField",
            Error::InvalidScalar(_) => "InvalidScalar",
            Error::VariableMismatch(..) => "VariableMismatch",
            Error::MissingAssignment(_) => "MissingAssignment",
            Error::Syntax { .. } => "SyntaxError",
            Error::UnknownSymbol { .. } => "UnknownSymbol",
            Error::SingularMatrix => "SingularMatrix",
            Error::Derivation(_) => "DerivationFailed",
            Error::DegenerateForm => "DegenerateForm",
            Error::SquareRootAbsent(_) => "SquareRootAbsent",
            Error::NotDiagonalizable => "NotDiagonalizableByThisTransform",
            Error::BudgetExceeded(_) => "BudgetExceeded",
            Error::CurveMismatch => "CurveMismatch",
            Error::FormMismatch => "FormMismatch",
            Error::PreconditionFailed(_) => "PreconditionFailed",
            Error::HypothesisNotMet(_) => "HypothesisNotMet",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
