//! Circular words, stored by their lexicographically least rotation.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::word::{Bit, Digit, Letter, Symbol, Word};

/// Start index of the lexicographically least rotation of `w` (smallest such
/// index when several rotations tie).
pub fn least_rotation<S: Ord>(w: &[S]) -> usize {
    let n = w.len();
    if n == 0 {
        return 0;
    }
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        match w[(i + k) % n].cmp(&w[(j + k) % n]) {
            Ordering::Equal => k += 1,
            Ordering::Greater => {
                i += k + 1;
                if i <= j {
                    i = j + 1;
                }
                k = 0;
            }
            Ordering::Less => {
                j += k + 1;
                if j <= i {
                    j = i + 1;
                }
                k = 0;
            }
        }
    }
    i.min(j)
}

/// A circular word `[w]`: the conjugacy class of `w`.
///
/// Two necklaces are equal exactly when their canonical rotations are.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Necklace<S> {
    canonical: Word<S>,
}

pub type CircularTernaryWord = Necklace<Letter>;
pub type CircularBinaryWord = Necklace<Bit>;
pub type CircularSWord = Necklace<Digit>;

impl<S: Symbol> Necklace<S> {
    pub fn new(representative: &[S]) -> Self {
        let k = least_rotation(representative);
        Necklace { canonical: Word::from_slice(representative).rotated(k) }
    }

    /// The least rotation.
    pub fn canonical(&self) -> &Word<S> {
        &self.canonical
    }

    pub fn into_canonical(self) -> Word<S> {
        self.canonical
    }

    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    pub fn is_empty(&self) -> bool {
        self.canonical.is_empty()
    }

    /// The canonical representative written twice; every factor of the
    /// circular word of length at most `n` is a factor of this.
    pub fn doubled(&self) -> Word<S> {
        self.canonical.concat(&self.canonical)
    }

    /// True iff `w` is one of the representatives.
    pub fn has_representative(&self, w: &[S]) -> bool {
        w.len() == self.len() && Necklace::new(w) == *self
    }
}

impl<S: Symbol> From<Word<S>> for Necklace<S> {
    fn from(w: Word<S>) -> Self {
        Necklace::new(&w)
    }
}

impl<S: Symbol> fmt::Display for Necklace<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.canonical)
    }
}

impl<S: Symbol> fmt::Debug for Necklace<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.canonical)
    }
}

impl<S: Symbol> Serialize for Necklace<S> {
    fn serialize<Ser: Serializer>(&self, serializer: Ser) -> Result<Ser::Ok, Ser::Error> {
        self.canonical.serialize(serializer)
    }
}

impl<'de, S: Symbol> Deserialize<'de> for Necklace<S> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Word::<S>::deserialize(deserializer).map(Necklace::from)
    }
}
