use thiserror::Error;

use crate::braid::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("generator index {index} out of range for {n} strands")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("{what} = {value} out of range [{min}, {max}]")]
    ArgumentOutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },

    #[error("need at least {min} strands, got {n}")]
    TooFewStrands { n: usize, min: usize },

    #[error("not a pure braid: permutation {0}")]
    NotPure(Permutation),

    #[error("tracked strand starting at {start} passes in front at letter {letter}")]
    NotBehind { start: usize, letter: usize },
}
