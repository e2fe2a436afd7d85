//! The two six-vertex walk graphs on ordered pairs of distinct letters.
//!
//! In the binary graph an edge `xy → yz` is labelled by the Pansiot bit of
//! `xyz`: `0` when `z = x`, `1` when `z` is the third letter. The digit graph
//! has an edge labelled `d` from `v` to wherever the binary walk labelled
//! `f(d)` ends, so a digit word labels a walk exactly when its `f`-image does.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::pansiot::f_image;
use crate::word::{Bit, Digit, Letter, Symbol};

/// An ordered pair of distinct ternary letters.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairVertex {
    first: Letter,
    second: Letter,
}

impl PairVertex {
    /// All six vertices: `ab, ac, ba, bc, ca, cb`.
    pub const ALL: [PairVertex; 6] = {
        use Letter::*;
        [
            PairVertex { first: A, second: B },
            PairVertex { first: A, second: C },
            PairVertex { first: B, second: A },
            PairVertex { first: B, second: C },
            PairVertex { first: C, second: A },
            PairVertex { first: C, second: B },
        ]
    };

    pub const AB: PairVertex = PairVertex::ALL[0];

    pub fn new(first: Letter, second: Letter) -> Option<Self> {
        (first != second).then_some(PairVertex { first, second })
    }

    pub fn first(self) -> Letter {
        self.first
    }

    pub fn second(self) -> Letter {
        self.second
    }

    /// Position in [`PairVertex::ALL`].
    pub fn index(self) -> usize {
        let lo = self.first.index() * 2;
        if self.second.index() > self.first.index() {
            lo + self.second.index() - 1
        } else {
            lo + self.second.index()
        }
    }

    /// True for `ab, bc, ca`: one side of the bipartition of the digit graph.
    pub fn is_cyclic(self) -> bool {
        (self.first.index() + 1) % 3 == self.second.index()
    }
}

impl fmt::Display for PairVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.first.to_char(), self.second.to_char())
    }
}

impl fmt::Debug for PairVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for PairVertex {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for PairVertex {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars().map(Letter::from_char);
        match (chars.next(), chars.next(), chars.next()) {
            (Some(Some(x)), Some(Some(y)), None) => {
                PairVertex::new(x, y).ok_or_else(|| format!("{s:?} repeats a letter"))
            }
            _ => Err(format!("{s:?} is not a pair of letters")),
        }
    }
}

/// One step in the binary graph, straight from the letter rule.
pub fn d1_step(v: PairVertex, bit: Bit) -> PairVertex {
    let z = match bit {
        Bit::Zero => v.first,
        Bit::One => v.first.third(v.second),
    };
    PairVertex { first: v.second, second: z }
}

struct Tables {
    d1: [[PairVertex; 2]; 6],
    d2: [[PairVertex; 3]; 6],
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let d1 = PairVertex::ALL.map(|v| [d1_step(v, Bit::Zero), d1_step(v, Bit::One)]);
        let d2 = PairVertex::ALL.map(|v| {
            Digit::ALL
                .iter()
                .map(|&d| f_image(d).iter().fold(v, |u, &b| d1[u.index()][b.index()]))
                .collect::<Vec<_>>()
                .try_into()
                .unwrap()
        });
        Tables { d1, d2 }
    })
}

/// One step in the digit graph.
pub fn d2_step(v: PairVertex, d: Digit) -> PairVertex {
    tables().d2[v.index()][d.index()]
}

pub fn walk_endpoint_d1(start: PairVertex, bits: &[Bit]) -> PairVertex {
    let t = tables();
    bits.iter().fold(start, |v, &b| t.d1[v.index()][b.index()])
}

pub fn walk_endpoint_d2(start: PairVertex, s: &[Digit]) -> PairVertex {
    let t = tables();
    s.iter().fold(start, |v, &d| t.d2[v.index()][d.index()])
}

/// True iff `bits` labels a closed walk from at least one of the six vertices.
pub fn labels_closed_walk_d1(bits: &[Bit]) -> bool {
    PairVertex::ALL.iter().any(|&v| walk_endpoint_d1(v, bits) == v)
}

/// Simulation counterpart of [`is_closed_walk_d2`]: closed from at least one vertex.
pub fn labels_closed_walk_d2(s: &[Digit]) -> bool {
    PairVertex::ALL.iter().any(|&v| walk_endpoint_d2(v, s) == v)
}

/// Alternating digit sum `s₁ − s₂ + s₃ − …`.
pub fn omega(s: &[Digit]) -> i64 {
    s.iter()
        .enumerate()
        .map(|(i, d)| if i % 2 == 0 { d.value() as i64 } else { -(d.value() as i64) })
        .sum()
}

/// Closed-walk criterion for the digit graph: even length and `ω(s) ≡ 0 (mod 3)`.
pub fn is_closed_walk_d2(s: &[Digit]) -> bool {
    s.len().is_multiple_of(2) && omega(s).rem_euclid(3) == 0
}
