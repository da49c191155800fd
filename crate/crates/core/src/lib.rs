//! Braid-group engine for deciding whether a pure braid can be unplaited
//! while its upper ends and its lower ends are each kept tied together.
//!
//! The pipeline tracks the last strand of a pure braid, inserts flips so
//! that the strand passes behind every other strand, removes it, and tests
//! whether what remains is a power of the full twist on the remaining
//! strands. Word equality is decided with Garside left normal forms.
//!
//! ```
//! use braid_unplait::{braidio, unplait};
//!
//! let sennit = braidio::parse("B5: (3 4 -2 -1)^5").unwrap();
//! let report = unplait::is_topologically_trivial(&sennit).unwrap();
//! assert!(report.trivial);
//! ```

pub mod braid;
pub mod braidio;
pub mod canonical;
mod error;
pub mod generators;
pub mod unplait;

pub use braid::{BraidWord, Letter, Permutation};
pub use braidio::{Fixture, ParseError, ParseErrorKind};
pub use canonical::{NormalForm, SimpleFactor};
pub use error::BraidError;
pub use unplait::{Mark, StraightenTrace, TrivialityReport};

pub type Result<T, E = BraidError> = std::result::Result<T, E>;
