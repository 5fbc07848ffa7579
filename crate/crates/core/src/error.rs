use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a chain complex: d_{degree} . d_{} is nonzero", degree + 1)]
    NotAComplex { degree: usize },

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("not a crossed category: morphism {morphism} has {count} factorizations")]
    NotCrossed { morphism: String, count: usize },

    #[error("morphisms are not composable: {0}")]
    NotComposable(String),

    #[error("modules live over different base categories or variances: {0}")]
    BaseMismatch(String),

    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: String, found: String },

    #[error("not a subcategory: {0}")]
    NotASubcategory(String),

    #[error("structure constants are not associative at {0}")]
    NotAssociative(String),

    #[error("unit is not two-sided: {0}")]
    NotUnital(String),

    #[error("relation violated: {0}")]
    RelationViolation(String),

    #[error("the F(as) factorization needs the bimodule to be the algebra itself")]
    BimoduleNotAlgebra,

    #[error("unsupported characteristic: {0}")]
    UnsupportedCharacteristic(String),

    #[error("max degree {max_degree} exceeds truncation margin N - 2 = {}", *truncation as i64 - 2)]
    MarginViolation { max_degree: usize, truncation: usize },

    #[error("invalid input: {0}")]
    Input(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
