//! Shur's sufficient conditions for a digit word `U` to encode, through
//! `Δ ∘ f`, a circular square-free ternary word:
//!
//! 1. `U` labels a closed walk in the digit graph;
//! 2. the circular word `[U]` has no factor `11, 222, 223, 322, 333`;
//! 3. `[U]` has no factor `WxyW` with `|W| ≥ 2` and `Wxy` a closed walk.
//!
//! Circular factors are read from the doubled word and have length at most `|U|`.

use serde::Serialize;

use crate::walks::is_closed_walk_d2;
use crate::word::{Digit, SWord};

const FORBIDDEN: [&[Digit]; 5] = {
    use Digit::*;
    [&[One, One], &[Two, Two, Two], &[Two, Two, Three], &[Three, Two, Two], &[Three, Three, Three]]
};

/// The five digit words whose presence forces a square in the decode.
pub fn forbidden_factors() -> Vec<SWord> {
    FORBIDDEN.iter().map(|f| SWord::from_slice(f)).collect()
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FactorHit {
    pub factor: SWord,
    pub position: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct WxywHit {
    pub w: SWord,
    pub x: Digit,
    pub y: Digit,
    pub position: usize,
}

fn at<T: Copy>(z: &[T], i: usize, circular: bool) -> T {
    if circular {
        z[i % z.len()]
    } else {
        z[i]
    }
}

fn starts(n: usize, len: usize, circular: bool) -> std::ops::Range<usize> {
    if len > n {
        0..0
    } else if circular {
        0..n
    } else {
        0..n - len + 1
    }
}

/// First occurrence of a forbidden factor, by position then pattern length.
pub fn forbidden_factor_scan(u: &[Digit], circular: bool) -> Option<FactorHit> {
    let n = u.len();
    (0..n).find_map(|pos| {
        FORBIDDEN.iter().find_map(|f| {
            let fits = starts(n, f.len(), circular).contains(&pos);
            let hit = fits && f.iter().enumerate().all(|(k, &d)| at(u, pos + k, circular) == d);
            hit.then(|| FactorHit { factor: SWord::from_slice(f), position: pos })
        })
    })
}

/// True iff `z` has the factor `WxyW` with `|W| = k` at `pos` and `Wxy` closed.
fn wxyw_at(z: &[Digit], pos: usize, k: usize, circular: bool) -> bool {
    if !(k + 2).is_multiple_of(2) {
        return false;
    }
    let repeats = (0..k).all(|i| at(z, pos + i, circular) == at(z, pos + k + 2 + i, circular));
    if !repeats {
        return false;
    }
    let head: Vec<Digit> = (0..k + 2).map(|i| at(z, pos + i, circular)).collect();
    is_closed_walk_d2(&head)
}

/// A factor `WxyW`, `|W| ≥ 2`, with `Wxy` labelling a closed walk. Smallest
/// position first, then shortest `W`.
pub fn wxyw_scan(z: &[Digit], circular: bool) -> Option<WxywHit> {
    let n = z.len();
    (0..n).find_map(|pos| {
        (2..)
            .take_while(|k| starts(n, 2 * k + 2, circular).contains(&pos))
            .find(|&k| wxyw_at(z, pos, k, circular))
            .map(|k| WxywHit {
                w: (0..k).map(|i| at(z, pos + i, circular)).collect(),
                x: at(z, pos + k, circular),
                y: at(z, pos + k + 1, circular),
                position: pos,
            })
    })
}

/// True iff some `WxyW` factor is a suffix of `z`. When no proper prefix of `z`
/// has such a factor, this decides [`wxyw_scan`] for `z`.
pub fn wxyw_suffix(z: &[Digit]) -> bool {
    let n = z.len();
    (2..).take_while(|k| 2 * k + 2 <= n).any(|k| wxyw_at(z, n - 2 * k - 2, k, false))
}

/// Outcome of checking Shur's conditions on a circular digit word.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ShurReport {
    pub closed_walk: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub forbidden_factor: Option<FactorHit>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wxyw: Option<WxywHit>,
}

impl ShurReport {
    pub fn passes(&self) -> bool {
        self.closed_walk && self.forbidden_factor.is_none() && self.wxyw.is_none()
    }
}

pub fn check_shur(u: &[Digit]) -> ShurReport {
    ShurReport {
        closed_walk: is_closed_walk_d2(u),
        forbidden_factor: forbidden_factor_scan(u, true),
        wxyw: wxyw_scan(u, true),
    }
}
