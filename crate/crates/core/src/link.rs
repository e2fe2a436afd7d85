//! Linking words `s = 33T22`: appended to `h(v)` they shift the length of the
//! decoded circular word by `|f(s)|` while keeping it square-free and level.
//!
//! [`check_link_conditions`] evaluates the seven sufficient conditions one by
//! one, [`search_link`] finds a linking word for a given `|f(s)|`, and the
//! shipped table of linking words for `|f(s)| = 54..=107` is parsed and
//! re-checked by [`verify_table2`].

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::level::is_level;
use crate::morphism::{block, block_letter, BLOCK_LEN};
use crate::pansiot::{delta, expand_f, f_length};
use crate::shur::{wxyw_scan, wxyw_suffix, WxywHit};
use crate::square::circular_square;
use crate::word::{Digit, Letter, SWord, Symbol, TernaryWord};

const HEAD: [Digit; 2] = [Digit::Three, Digit::Three];
const TAIL: [Digit; 2] = [Digit::Two, Digit::Two];
/// Digits the prefix condition forbids after `q h(u)`.
const PREFIX_STOP: [Digit; 5] = [Digit::One, Digit::Three, Digit::Two, Digit::One, Digit::Three];
/// Digits the suffix condition forbids before `h(u) p`.
const SUFFIX_STOP: [Digit; 5] = [Digit::Two, Digit::Three, Digit::One, Digit::Two, Digit::Three];

pub const TABLE2_TSV: &str = include_str!("../data/table2.tsv");

/// A linking word `s = 33T22` with `|f(s)|` cached.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LinkWord {
    pub s: SWord,
    pub t: SWord,
    pub f_length: usize,
}

impl LinkWord {
    /// `None` unless `s` starts with `33` and ends with `22`.
    pub fn new(s: SWord) -> Option<Self> {
        if !has_frame(&s) {
            return None;
        }
        let t = SWord::from_slice(&s[2..s.len() - 2]);
        let f_length = f_length(&s);
        Some(LinkWord { s, t, f_length })
    }

    /// `Δ(f(s))` minus its last two letters.
    pub fn psi(&self) -> TernaryWord {
        delta(&expand_f(&self.s)).truncated()
    }
}

fn has_frame(s: &[Digit]) -> bool {
    s.len() >= 4 && s.starts_with(&HEAD) && s.ends_with(&TAIL)
}

/// A factor `h(μ)` of `s`, `|μ| ≥ 2`, `[μ]` square-free.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct BlockImageHit {
    pub mu: TernaryWord,
    pub position: usize,
}

/// Per-condition outcome of [`check_link_conditions`]. Witness fields are set
/// exactly when the corresponding condition fails.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LinkReport {
    /// `s` starts with `33` and ends with `22`. Without it `T` is empty.
    pub frame: bool,
    /// 1: `s` labels a closed walk.
    pub closed_walk: bool,
    /// 2: witness of a forbidden block image.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub block_image: Option<BlockImageHit>,
    /// 3: witness of a `VxyV` factor of `2s1`, positions in `2s1`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wxyw: Option<WxywHit>,
    /// 4: `T` begins and ends with `1`.
    pub ends_in_one: bool,
    /// 5: position in `T` of an adjacent repeated digit.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub adjacent_repeat: Option<usize>,
    /// 6: length of a forbidden prefix of `T`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bad_prefix: Option<usize>,
    /// 7: start in `T` of a forbidden suffix.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bad_suffix: Option<usize>,
}

impl LinkReport {
    pub fn conditions(&self) -> [bool; 7] {
        [
            self.closed_walk,
            self.block_image.is_none(),
            self.wxyw.is_none(),
            self.ends_in_one,
            self.adjacent_repeat.is_none(),
            self.bad_prefix.is_none(),
            self.bad_suffix.is_none(),
        ]
    }

    pub fn passes(&self) -> bool {
        self.frame && self.conditions().iter().all(|&c| c)
    }

    /// 1-based numbers of the failing conditions.
    pub fn failed(&self) -> Vec<usize> {
        self.conditions().iter().enumerate().filter(|(_, &c)| !c).map(|(i, _)| i + 1).collect()
    }
}

/// The blocks of `μ` parsed from `s[start..]`, checked each time one more
/// block is read.
fn block_image_from(s: &[Digit], start: usize) -> Option<TernaryWord> {
    let mut mu = TernaryWord::empty();
    let mut i = start;
    while let Some(x) = s.get(i..i + BLOCK_LEN).and_then(block_letter) {
        mu.push(x);
        i += BLOCK_LEN;
        if mu.len() >= 2 && circular_square(&mu).is_none() {
            return Some(mu);
        }
    }
    None
}

pub fn block_image_scan(s: &[Digit]) -> Option<BlockImageHit> {
    (0..s.len()).find_map(|position| block_image_from(s, position).map(|mu| BlockImageHit { mu, position }))
}

/// True iff some `h(μ)` with `|μ| ≥ 2` and `[μ]` square-free is a suffix of `s`.
fn block_image_suffix(s: &[Digit]) -> bool {
    let mut mu: Vec<Letter> = Vec::new();
    let mut end = s.len();
    while end >= BLOCK_LEN {
        let Some(x) = block_letter(&s[end - BLOCK_LEN..end]) else { break };
        mu.insert(0, x);
        end -= BLOCK_LEN;
        if mu.len() >= 2 && circular_square(&mu).is_none() {
            return true;
        }
    }
    false
}

/// Lengths `k` such that `t[..k]` is `[1] q h(u)` with `q` a suffix of some
/// block (possibly empty or whole) and `u` arbitrary. `blocks` lets the same
/// matcher run on reversed words.
fn block_framed_ends(t: &[Digit], blocks: &[Vec<Digit>; 3]) -> Vec<bool> {
    let n = t.len();
    let mut reach = vec![false; n + 1];
    for lead in [0, 1] {
        if lead == 1 && t.first() != Some(&Digit::One) {
            continue;
        }
        for b in blocks {
            for q in 0..=BLOCK_LEN {
                let suffix = &b[q..];
                if t[lead..].starts_with(suffix) {
                    reach[lead + suffix.len()] = true;
                }
            }
        }
    }
    for i in 0..=n {
        if reach[i] {
            for b in blocks {
                if t[i..].starts_with(b) {
                    reach[i + BLOCK_LEN] = true;
                }
            }
        }
    }
    reach
}

fn forbidden_prefix(t: &[Digit], blocks: &[Vec<Digit>; 3], stop: &[Digit]) -> Option<usize> {
    let reach = block_framed_ends(t, blocks);
    (0..=t.len()).find(|&i| reach[i] && t[i..].starts_with(stop)).map(|i| i + stop.len())
}

fn forward_blocks() -> [Vec<Digit>; 3] {
    [Letter::A, Letter::B, Letter::C].map(|x| block(x).to_vec())
}

fn reversed_blocks() -> [Vec<Digit>; 3] {
    [Letter::A, Letter::B, Letter::C].map(|x| block(x).iter().rev().copied().collect())
}

/// Condition 6: length of a prefix `q h(u) 13213` or `1 q h(u) 13213` of `t`.
pub fn prefix_violation(t: &[Digit]) -> Option<usize> {
    forbidden_prefix(t, &forward_blocks(), &PREFIX_STOP)
}

/// Condition 7: start of a suffix `23123 h(u) p` or `23123 h(u) p 1` of `t`.
pub fn suffix_violation(t: &[Digit]) -> Option<usize> {
    let reversed: Vec<Digit> = t.iter().rev().copied().collect();
    let stop: Vec<Digit> = SUFFIX_STOP.iter().rev().copied().collect();
    forbidden_prefix(&reversed, &reversed_blocks(), &stop).map(|len| t.len() - len)
}

fn two_s_one(s: &[Digit]) -> Vec<Digit> {
    let mut z = Vec::with_capacity(s.len() + 2);
    z.push(Digit::Two);
    z.extend_from_slice(s);
    z.push(Digit::One);
    z
}

/// Evaluates every condition independently; a malformed frame is reported,
/// not raised.
pub fn check_link_conditions(s: &[Digit]) -> LinkReport {
    let frame = has_frame(s);
    let t: &[Digit] = if frame { &s[2..s.len() - 2] } else { &[] };
    LinkReport {
        frame,
        closed_walk: crate::walks::is_closed_walk_d2(s),
        block_image: block_image_scan(s),
        wxyw: wxyw_scan(&two_s_one(s), false),
        ends_in_one: t.first() == Some(&Digit::One) && t.last() == Some(&Digit::One),
        adjacent_repeat: t.windows(2).position(|p| p[0] == p[1]),
        bad_prefix: prefix_violation(t),
        bad_suffix: suffix_violation(t),
    }
}

/// A linking word is usable when it passes the checker, `Δ(f(s))` ends in `ab`
/// and `ψ = Δ(f(s))⁻⁻` is level.
pub fn is_usable(s: &[Digit]) -> bool {
    check_link_conditions(s).passes() && {
        let d = delta(&expand_f(s));
        d.ends_with_ab() && is_level(&d.truncated())
    }
}

fn digit_weight(d: Digit) -> usize {
    1 + d.value() as usize
}

/// Depth-first search over `T`, digits in increasing order, so the first hit
/// is the lexicographically least usable `s` of the requested weight.
struct LinkSearch {
    /// `2 3 3 T-prefix`
    z: Vec<Digit>,
    budget: usize,
}

const Z_OFFSET: usize = 3;

impl LinkSearch {
    fn new(target: usize) -> Option<Self> {
        let frame = f_length(&HEAD) + f_length(&TAIL);
        let budget = target.checked_sub(frame)?;
        Some(LinkSearch { z: vec![Digit::Two, Digit::Three, Digit::Three], budget })
    }

    fn t(&self) -> &[Digit] {
        &self.z[Z_OFFSET..]
    }

    /// Appends `d` if the extended prefix can still lead to a linking word.
    fn push(&mut self, d: Digit) -> bool {
        let w = digit_weight(d);
        let t_len = self.z.len() - Z_OFFSET;
        let repeat = t_len > 0 && self.z.last() == Some(&d);
        if w > self.budget || (t_len == 0 && d != Digit::One) || repeat {
            return false;
        }
        self.z.push(d);
        self.budget -= w;
        let ok = self.budget != 1
            && !wxyw_suffix(&self.z)
            && !block_image_suffix(&self.z[1..])
            && prefix_violation(self.t()).is_none();
        if !ok {
            self.pop();
        }
        ok
    }

    fn pop(&mut self) {
        let d = self.z.pop().unwrap();
        self.budget += digit_weight(d);
    }

    fn leaf(&self) -> Option<LinkWord> {
        if self.budget != 0 || self.t().last() != Some(&Digit::One) {
            return None;
        }
        let s: SWord = HEAD.iter().chain(self.t()).chain(&TAIL).copied().collect();
        is_usable(&s).then(|| LinkWord::new(s)).flatten()
    }

    fn run(&mut self) -> Option<LinkWord> {
        if self.budget == 0 {
            return self.leaf();
        }
        for &d in Digit::ALL {
            if self.push(d) {
                let found = self.run();
                self.pop();
                if found.is_some() {
                    return found;
                }
            }
        }
        None
    }

    /// Every surviving `T`-prefix of the given length (or shorter, if the
    /// budget runs out first), in search order.
    fn frontier(&mut self, depth: usize, out: &mut Vec<Vec<Digit>>) {
        if self.budget == 0 || self.z.len() - Z_OFFSET == depth {
            out.push(self.t().to_vec());
            return;
        }
        for &d in Digit::ALL {
            if self.push(d) {
                self.frontier(depth, out);
                self.pop();
            }
        }
    }
}


/// The lexicographically least usable linking word with `|f(s)| = target`,
/// or `None` when there is none. Prefixes of `T` are split across the rayon
/// thread pool; the result does not depend on the number of threads.
pub fn search_link(target: usize) -> Option<LinkWord> {
    let mut root = LinkSearch::new(target)?;
    let mut prefixes = Vec::new();
    root.frontier(8, &mut prefixes);
    prefixes.into_par_iter().find_map_first(|prefix| {
        let mut search = LinkSearch::new(target)?;
        for &d in &prefix {
            search.push(d).then_some(())?;
        }
        search.run()
    })
}

/// One shipped row: `s` and the claimed `|f(s)|`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LinkRow {
    pub s: SWord,
    pub n: usize,
}

/// Parses `s<TAB>n` lines. Blank lines and `#` comments are skipped.
pub fn parse_table2(text: &str) -> Result<Vec<LinkRow>> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let table = |reason: String| Error::Table { line: i + 1, reason };
        let (s, n) = line.split_once('\t').ok_or_else(|| table("expected s<TAB>n".into()))?;
        let s: SWord = s.trim().parse().map_err(|e| table(format!("{e}")))?;
        let n: usize = n.trim().parse().map_err(|e| table(format!("bad length: {e}")))?;
        rows.push(LinkRow { s, n });
    }
    Ok(rows)
}

/// The embedded table of linking words.
pub fn table2() -> Vec<LinkRow> {
    parse_table2(TABLE2_TSV).expect("embedded table parses")
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RowOutcome {
    pub s: SWord,
    pub n: usize,
    pub f_length: usize,
    pub report: LinkReport,
    pub psi_level: bool,
    pub ends_with_ab: bool,
}

impl RowOutcome {
    pub fn ok(&self) -> bool {
        self.f_length == self.n && self.report.passes() && self.psi_level && self.ends_with_ab
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Table2Report {
    pub rows: Vec<RowOutcome>,
}

impl Table2Report {
    pub fn ok(&self) -> bool {
        self.rows.iter().all(RowOutcome::ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RowOutcome> {
        self.rows.iter().filter(|r| !r.ok())
    }

    /// True iff the rows cover every `n` in `range` exactly once, in order.
    pub fn covers(&self, range: std::ops::RangeInclusive<usize>) -> bool {
        self.rows.iter().map(|r| r.n).eq(range)
    }
}

pub fn verify_table2(rows: &[LinkRow]) -> Table2Report {
    let rows = rows
        .par_iter()
        .map(|row| {
            let d = delta(&expand_f(&row.s));
            RowOutcome {
                s: row.s.clone(),
                n: row.n,
                f_length: f_length(&row.s),
                report: check_link_conditions(&row.s),
                psi_level: is_level(&d.truncated()),
                ends_with_ab: d.ends_with_ab(),
            }
        })
        .collect();
    Table2Report { rows }
}
