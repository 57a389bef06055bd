use thiserror::Error;

/// Errors produced by graph parsing, word parsing and the algebraic layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed graph document: {0}")]
    GraphDocument(String),
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
    #[error("invalid vertex symbol {0:?}")]
    BadVertexSymbol(String),
    #[error("loop edge at vertex {0:?}")]
    LoopEdge(String),
    #[error("edge endpoint {0:?} is not a declared vertex")]
    UnknownEdgeEndpoint(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("empty word not allowed here")]
    EmptyWord,
    #[error("word is not an associative Lyndon-Shirshov word: {0:?}")]
    NotLyndonShirshov(String),
    #[error("series bound mismatch: {0} vs {1}")]
    BoundMismatch(usize, usize),
    #[error("negative power of a series whose constant term is not 1")]
    NonUnitConstantTerm,
    #[error("element weight {weight} exceeds series bound {bound}")]
    WeightExceedsBound { weight: usize, bound: usize },
    #[error("element is not in the span of the given basis segment")]
    NotInSpan,
    #[error("basis coordinates are not integral")]
    NonIntegerSolution,
    #[error("nilpotency class must be at least 1")]
    ClassTooSmall,
    #[error("syntax error at position {position}: {message}")]
    WordSyntax { position: usize, message: String },
    #[error("normal forms belong to different bases")]
    BasisMismatch,
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
