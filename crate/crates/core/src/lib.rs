//! Combinatorics of LLT coefficients for tuples of identical shapes.

pub mod error;
pub mod hstat;
pub mod llt;
pub mod par;
pub mod partition;
pub mod qseries;
pub mod rs;
pub mod symfun;
pub mod tableau;
pub mod verify;
pub mod word;

pub use error::{Error, ParseError, Result};
pub use llt::{LLTInstance, TableauTuple};
pub use par::Exec;
pub use partition::{Composition, Partition};
pub use qseries::IntLaurentPoly;
pub use symfun::WeightIndexedPoly;
pub use tableau::{SemistandardTableau, StandardTableau};
pub use word::Word;
