use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected {expected} entries, found {found}")]
    BadLength { expected: usize, found: usize },
    #[error("{which} is not a permutation: row {row} used twice")]
    NotPermutation { which: char, row: usize },
    #[error("X and O share the square in column {column}")]
    SharedSquare { column: usize },
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("commutation is not legal: {0}")]
    IllegalCommutation(String),
    #[error("no destabilization block matches at row {row}, column {column}")]
    NoSuchBlock { row: usize, column: usize },
    #[error("braid letter {letter} out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("word is not a literal Markov destabilization pattern")]
    NotDestabilizable,
    #[error("word has no exchange pattern")]
    NoExchangePattern,
    #[error("malformed rectilinear diagram: {0}")]
    MalformedDiagram(String),
    #[error("operation only supports the translation+commutation class")]
    UnsupportedClass,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
