//! Pansiot codes of ternary words.
//!
//! A ternary word with no two equal adjacent letters is determined by its first
//! two letters and one bit per later letter: `0` when the letter repeats the
//! one two places back, `1` when it is the third letter. Words sharing a code
//! differ by a permutation of `{a, b, c}`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::necklace::{CircularBinaryWord, CircularTernaryWord};
use crate::walks::labels_closed_walk_d1;
use crate::word::{BinaryWord, Bit, Digit, Letter, TernaryWord};

/// Pansiot code of a linear word: bit `i` is `0` iff `v[i] = v[i + 2]`.
pub fn pi(v: &[Letter]) -> Result<BinaryWord> {
    if v.len() < 2 {
        return Err(Error::TooShort { len: v.len(), min: 2 });
    }
    if let Some(index) = v.windows(2).position(|p| p[0] == p[1]) {
        return Err(Error::AdjacentRepeat { index });
    }
    Ok(v.windows(3).map(|t| if t[0] == t[2] { Bit::Zero } else { Bit::One }).collect())
}

/// The decode of a Pansiot code: the word with prefix `ab` and the given code.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct DeltaWord(TernaryWord);

impl DeltaWord {
    pub fn word(&self) -> &TernaryWord {
        &self.0
    }

    pub fn into_word(self) -> TernaryWord {
        self.0
    }

    /// The decode without its last two letters.
    pub fn truncated(&self) -> TernaryWord {
        self.0.drop_last(2)
    }

    pub fn ends_with_ab(&self) -> bool {
        self.0.ends_with(&[Letter::A, Letter::B])
    }
}

/// Decodes any binary word; the result never has two equal adjacent letters.
pub fn delta(u: &[Bit]) -> DeltaWord {
    let mut v = Vec::with_capacity(u.len() + 2);
    v.push(Letter::A);
    v.push(Letter::B);
    for (i, &bit) in u.iter().enumerate() {
        let (x, y) = (v[i], v[i + 1]);
        v.push(match bit {
            Bit::Zero => x,
            Bit::One => x.third(y),
        });
    }
    DeltaWord(TernaryWord::new(v))
}

/// Circular Pansiot code of the representative `v`, indices taken mod `|v|`.
pub fn encode_circular_word(v: &[Letter]) -> Result<BinaryWord> {
    let n = v.len();
    if n < 2 {
        return Err(Error::TooShort { len: n, min: 2 });
    }
    if let Some(index) = (0..n).find(|&i| v[i] == v[(i + 1) % n]) {
        return Err(Error::AdjacentRepeat { index });
    }
    Ok((0..n).map(|i| if v[i] == v[(i + 2) % n] { Bit::Zero } else { Bit::One }).collect())
}

pub fn encode_circular(cw: &CircularTernaryWord) -> Result<CircularBinaryWord> {
    encode_circular_word(cw.canonical()).map(CircularBinaryWord::from)
}

const F1: [Bit; 2] = [Bit::Zero, Bit::One];
const F2: [Bit; 3] = [Bit::Zero, Bit::One, Bit::One];
const F3: [Bit; 4] = [Bit::Zero, Bit::One, Bit::One, Bit::One];

/// `f(d) = 0 1^d`.
pub fn f_image(d: Digit) -> &'static [Bit] {
    match d {
        Digit::One => &F1,
        Digit::Two => &F2,
        Digit::Three => &F3,
    }
}

pub fn expand_f(u: &[Digit]) -> BinaryWord {
    u.iter().flat_map(|&d| f_image(d).iter().copied()).collect()
}

/// `|f(u)| = |u| + Σ digits`.
pub fn f_length(u: &[Digit]) -> usize {
    u.iter().map(|d| 1 + d.value() as usize).sum()
}

/// `Δ(f(u))` with its last two letters removed: the circular word `u` encodes.
pub fn decode_digits(u: &[Digit]) -> TernaryWord {
    delta(&expand_f(u)).truncated()
}

/// A decomposition `u = V χ υ V` where `Vχυ` labels a closed walk in the binary graph.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PansiotSquare {
    pub v: BinaryWord,
    pub chi: Bit,
    pub upsilon: Bit,
}

/// Witness that `Δ(u)` is itself a square. `|V|` is forced by `|u| = 2|V| + 2`.
pub fn square_witness_delta(u: &[Bit]) -> Option<PansiotSquare> {
    let n = u.len();
    if n < 2 || !n.is_multiple_of(2) {
        return None;
    }
    let k = (n - 2) / 2;
    if u[..k] != u[k + 2..] || !labels_closed_walk_d1(&u[..k + 2]) {
        return None;
    }
    Some(PansiotSquare { v: BinaryWord::from_slice(&u[..k]), chi: u[k], upsilon: u[k + 1] })
}

/// Witness that `Δ(u)` contains a square factor: a factor `u[start..]` of `u`
/// whose own decode is a square. The square in `Δ(u)` then starts at `start`
/// and has period `|V| + 2`. Smallest start first, then shortest.
pub fn square_factor_witness_delta(u: &[Bit]) -> Option<(usize, PansiotSquare)> {
    let n = u.len();
    (0..n).find_map(|start| {
        (2..=n - start)
            .step_by(2)
            .find_map(|len| square_witness_delta(&u[start..start + len]).map(|w| (start, w)))
    })
}
