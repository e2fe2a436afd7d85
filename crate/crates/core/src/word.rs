//! Alphabets and finite words.
//!
//! Three alphabets are in play: the ternary letters `a, b, c`, the bits `0, 1`
//! of Pansiot codes, and the digits `1, 2, 3` that index runs of ones. Words over
//! any of them share one container, [`Word`], so that square detection,
//! rotation and canonicalization are written once.

use std::fmt;
use std::hash::Hash;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A letter of a finite, totally ordered alphabet with a one-character spelling.
pub trait Symbol: Copy + Eq + Ord + Hash + fmt::Debug + Send + Sync + 'static {
    /// Every letter, in alphabet order.
    const ALL: &'static [Self];

    fn to_char(self) -> char;

    fn from_char(c: char) -> Option<Self>;

    /// Position of the letter in [`Symbol::ALL`].
    fn index(self) -> usize;
}

/// A letter of the ternary alphabet `{a, b, c}`, ordered `a < b < c`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    A,
    B,
    C,
}

impl Letter {
    /// The letter distinct from both `self` and `other`.
    ///
    /// Panics if the two letters are equal.
    pub fn third(self, other: Letter) -> Letter {
        assert_ne!(self, other, "third letter of a repeated pair");
        match self.index() + other.index() {
            1 => Letter::C,
            2 => Letter::B,
            _ => Letter::A,
        }
    }
}

impl Symbol for Letter {
    const ALL: &'static [Self] = &[Letter::A, Letter::B, Letter::C];

    fn to_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
            Letter::C => 'c',
        }
    }

    fn from_char(c: char) -> Option<Self> {
        match c {
            'a' => Some(Letter::A),
            'b' => Some(Letter::B),
            'c' => Some(Letter::C),
            _ => None,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// A binary letter of a Pansiot code.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Bit {
    Zero,
    One,
}

impl Symbol for Bit {
    const ALL: &'static [Self] = &[Bit::Zero, Bit::One];

    fn to_char(self) -> char {
        match self {
            Bit::Zero => '0',
            Bit::One => '1',
        }
    }

    fn from_char(c: char) -> Option<Self> {
        match c {
            '0' => Some(Bit::Zero),
            '1' => Some(Bit::One),
            _ => None,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// A letter of the alphabet `{1, 2, 3}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Digit {
    One,
    Two,
    Three,
}

impl Digit {
    /// The digit read as an integer.
    pub fn value(self) -> u8 {
        self as u8 + 1
    }

    pub fn from_value(v: u8) -> Option<Digit> {
        match v {
            1 => Some(Digit::One),
            2 => Some(Digit::Two),
            3 => Some(Digit::Three),
            _ => None,
        }
    }
}

impl Symbol for Digit {
    const ALL: &'static [Self] = &[Digit::One, Digit::Two, Digit::Three];

    fn to_char(self) -> char {
        (b'0' + self.value()) as char
    }

    fn from_char(c: char) -> Option<Self> {
        c.to_digit(10).and_then(|v| Digit::from_value(v as u8))
    }

    fn index(self) -> usize {
        self as usize
    }
}

macro_rules! serialize_as_char {
    ($($t:ty),*) => {$(
        impl Serialize for $t {
            fn serialize<Ser: Serializer>(&self, serializer: Ser) -> Result<Ser::Ok, Ser::Error> {
                serializer.serialize_char(self.to_char())
            }
        }
    )*};
}

serialize_as_char!(Letter, Bit, Digit);

/// A finite word over the alphabet `S`.
///
/// Positions are 0-based throughout the API.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word<S>(Vec<S>);

pub type TernaryWord = Word<Letter>;
pub type BinaryWord = Word<Bit>;
pub type SWord = Word<Digit>;

impl<S: Symbol> Word<S> {
    pub fn new(letters: Vec<S>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_slice(letters: &[S]) -> Self {
        Word(letters.to_vec())
    }

    pub fn as_slice(&self) -> &[S] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<S> {
        self.0
    }

    pub fn push(&mut self, letter: S) {
        self.0.push(letter);
    }

    pub fn pop(&mut self) -> Option<S> {
        self.0.pop()
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &[S]) -> Self {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(other);
        Word(v)
    }

    /// The conjugate obtained by moving the first `k` letters to the end.
    pub fn rotated(&self, k: usize) -> Self {
        if self.is_empty() {
            return self.clone();
        }
        let k = k % self.len();
        let mut v = Vec::with_capacity(self.len());
        v.extend_from_slice(&self.0[k..]);
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    /// All `|w|` rotations, starting with `w` itself. The empty word has the
    /// single rotation `ε`.
    pub fn rotations(&self) -> Vec<Self> {
        if self.is_empty() {
            return vec![Word::empty()];
        }
        (0..self.len()).map(|k| self.rotated(k)).collect()
    }

    /// The word with its last `k` letters removed.
    ///
    /// Panics if `k > |w|`.
    pub fn drop_last(&self, k: usize) -> Self {
        assert!(k <= self.len(), "cannot drop {k} letters from a word of length {}", self.len());
        Word(self.0[..self.len() - k].to_vec())
    }

    /// First index at which `pattern` occurs as a factor.
    pub fn find_factor(&self, pattern: &[S]) -> Option<usize> {
        find_factor(&self.0, pattern)
    }

    pub fn letter_count(&self, letter: S) -> usize {
        self.0.iter().filter(|&&x| x == letter).count()
    }
}

/// First index at which `pattern` occurs in `text`. The empty pattern occurs at 0.
pub fn find_factor<S: PartialEq>(text: &[S], pattern: &[S]) -> Option<usize> {
    if pattern.is_empty() {
        return Some(0);
    }
    text.windows(pattern.len()).position(|w| w == pattern)
}

impl<S> Deref for Word<S> {
    type Target = [S];

    fn deref(&self) -> &[S] {
        &self.0
    }
}

impl<S> AsRef<[S]> for Word<S> {
    fn as_ref(&self) -> &[S] {
        &self.0
    }
}

impl<S> From<Vec<S>> for Word<S> {
    fn from(v: Vec<S>) -> Self {
        Word(v)
    }
}

impl<S> FromIterator<S> for Word<S> {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl<S> Extend<S> for Word<S> {
    fn extend<I: IntoIterator<Item = S>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl<S: Symbol> fmt::Display for Word<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &x in &self.0 {
            write!(f, "{}", x.to_char())?;
        }
        Ok(())
    }
}

impl<S: Symbol> fmt::Debug for Word<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid letter {found:?} at position {position}; expected one of {expected:?}")]
pub struct ParseWordError {
    pub found: char,
    pub position: usize,
    pub expected: String,
}

impl<S: Symbol> FromStr for Word<S> {
    type Err = ParseWordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .enumerate()
            .map(|(position, c)| {
                S::from_char(c).ok_or_else(|| ParseWordError {
                    found: c,
                    position,
                    expected: S::ALL.iter().map(|x| x.to_char()).collect(),
                })
            })
            .collect()
    }
}

impl<S: Symbol> Serialize for Word<S> {
    fn serialize<Ser: Serializer>(&self, serializer: Ser) -> Result<Ser::Ok, Ser::Error> {
        serializer.collect_str(self)
    }
}

impl<'de, S: Symbol> Deserialize<'de> for Word<S> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a word literal, panicking on a bad letter. Intended for constants and tests.
pub fn word<S: Symbol>(s: &str) -> Word<S> {
    s.parse().unwrap_or_else(|e| panic!("bad word literal {s:?}: {e}"))
}

/// Every word of length exactly `n` over `S`, in lexicographic order.
pub fn all_words<S: Symbol>(n: usize) -> impl Iterator<Item = Word<S>> {
    let k = S::ALL.len();
    let total = k.checked_pow(n as u32).expect("word space too large");
    (0..total).map(move |mut code| {
        let mut v = vec![S::ALL[0]; n];
        for slot in v.iter_mut().rev() {
            *slot = S::ALL[code % k];
            code /= k;
        }
        Word(v)
    })
}

/// Every word of length at most `n` over `S`, shortest first.
pub fn all_words_up_to<S: Symbol>(n: usize) -> impl Iterator<Item = Word<S>> {
    (0..=n).flat_map(all_words::<S>)
}
