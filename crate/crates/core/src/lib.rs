//! Level ternary circular square-free words.
//!
//! A circular word over `{a, b, c}` is square-free when no rotation contains a
//! factor `uu`, and level when its letter counts differ by at most one. Such
//! words exist for every length except 5, 7, 9, 10, 14 and 17. This crate
//! builds them through Pansiot encodings and checks every result directly.
//!
//! ```
//! let cert = levelsq::build(100).unwrap();
//! assert_eq!(cert.word.len(), 100);
//! assert!(levelsq::is_level(cert.word.canonical()));
//! assert!(levelsq::circular_square(cert.word.canonical()).is_none());
//! ```

pub mod assemble;
pub mod brute;
pub mod error;
pub mod level;
pub mod link;
pub mod morphism;
pub mod necklace;
pub mod pansiot;
pub mod shur;
pub mod square;
pub mod walks;
pub mod word;

pub use assemble::{build, BuildCertificate, Builder, Recipe, EXCLUDED_LENGTHS};
pub use error::{Error, Result};
pub use level::{equivalent, is_level, letter_counts, Permutation};
pub use necklace::{CircularBinaryWord, CircularSWord, CircularTernaryWord, Necklace};
pub use pansiot::{delta, expand_f, pi};
pub use square::{circular_square, find_square, SquareWitness};
pub use word::{BinaryWord, Bit, Digit, Letter, SWord, Symbol, TernaryWord, Word};
