use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("site letter {0} is outside 0..=3")]
    LetterOutOfRange(u8),
    #[error("a Pauli word needs at least one site")]
    EmptyWord,
    #[error("word lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("element arities differ: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("division by a zero scalar")]
    DivisionByZero,
    #[error("observable does not square to the identity")]
    NotAnInvolution,
    #[error("matrix dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
}
