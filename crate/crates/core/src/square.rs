//! Square detection in linear and circular words.
//!
//! [`find_square_naive`] is the reference scan over every `(start, period)`
//! pair. [`find_square`] and [`circular_square`] run in `O(n²)` by counting, for
//! each period `p`, maximal runs of positions `i` with `w[i] = w[i + p]`: a square
//! of period `p` starts wherever such a run reaches length `p`.

use serde::Serialize;

use crate::necklace::Necklace;
use crate::word::Symbol;

/// A square factor `uu` with `|u| = period`, starting at 0-based `start`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SquareWitness {
    pub start: usize,
    pub period: usize,
}

/// Reference `O(n³)` scan. Returns the square with the smallest start, ties
/// broken by the smallest period.
pub fn find_square_naive<S: PartialEq>(w: &[S]) -> Option<SquareWitness> {
    let n = w.len();
    for start in 0..n {
        for period in 1..=(n - start) / 2 {
            if w[start..start + period] == w[start + period..start + 2 * period] {
                return Some(SquareWitness { start, period });
            }
        }
    }
    None
}

/// Same contract as [`find_square_naive`], in `O(n²)`.
pub fn find_square<S: PartialEq>(w: &[S]) -> Option<SquareWitness> {
    let n = w.len();
    let mut best: Option<SquareWitness> = None;
    for period in 1..=n / 2 {
        let mut run = 0;
        for i in 0..n - period {
            if let Some(b) = best {
                if i + 1 > b.start + period {
                    break;
                }
            }
            if w[i] == w[i + period] {
                run += 1;
                if run == period {
                    let found = SquareWitness { start: i + 1 - period, period };
                    if best.is_none_or(|b| found < b) {
                        best = Some(found);
                    }
                    break;
                }
            } else {
                run = 0;
            }
        }
    }
    best
}

pub fn is_square_free<S: PartialEq>(w: &[S]) -> bool {
    find_square(w).is_none()
}

/// True iff the whole of `w` is a square.
pub fn is_square<S: PartialEq>(w: &[S]) -> bool {
    let n = w.len();
    n > 0 && n.is_multiple_of(2) && w[..n / 2] == w[n / 2..]
}

/// True iff some square is a suffix of `w`. If every proper prefix of `w` is
/// square-free this decides square-freeness of `w` in `O(n²)`.
pub fn has_square_suffix<S: PartialEq>(w: &[S]) -> bool {
    let n = w.len();
    (1..=n / 2).any(|p| w[n - 2 * p..n - p] == w[n - p..])
}

/// A square factor of the circular word with representative `w`: a square of
/// length at most `|w|` starting at `start` and read cyclically.
pub fn circular_square<S: PartialEq>(w: &[S]) -> Option<SquareWitness> {
    let n = w.len();
    let mut best: Option<SquareWitness> = None;
    for period in 1..=n / 2 {
        let mut run = 0;
        for j in 0..n + period - 1 {
            if let Some(b) = best {
                if j + 1 > b.start + period {
                    break;
                }
            }
            if w[j % n] == w[(j + period) % n] {
                run += 1;
                if run == period {
                    let found = SquareWitness { start: j + 1 - period, period };
                    if best.is_none_or(|b| found < b) {
                        best = Some(found);
                    }
                    break;
                }
            } else {
                run = 0;
            }
        }
    }
    best
}

/// Reference check: scans every factor of length at most `|w|` of `ww`.
pub fn circular_square_naive<S: PartialEq + Clone>(w: &[S]) -> Option<SquareWitness> {
    let n = w.len();
    let doubled: Vec<S> = w.iter().chain(w.iter()).cloned().collect();
    for start in 0..n {
        for period in 1..=n / 2 {
            let f = &doubled[start..start + 2 * period];
            if is_square(f) {
                return Some(SquareWitness { start, period });
            }
        }
    }
    None
}

pub fn is_circular_square_free<S: Symbol>(cw: &Necklace<S>) -> bool {
    circular_square(cw.canonical()).is_none()
}
