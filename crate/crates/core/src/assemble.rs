//! Verified construction of a level circular square-free word of any
//! admissible length.
//!
//! * `n ≤ 3`: brute force (`[a]`, `[ab]`, `[abc]`).
//! * `4 ≤ n ≤ 89`: a stored digit word `U` whose decode `Δ(f(U))⁻⁻` works,
//!   or a fresh search for one.
//! * `n ≥ 90`: `n = 18m + r` with `54 ≤ r ≤ 107`; the word is `ψω` where
//!   `ψ` decodes a linking word with `|f(s)| = r` and `ω` decodes `h(v)` for a
//!   circular square-free `v` of length `m` starting with `a` and ending with `b`.
//!
//! Every result is re-checked for levelness and circular square-freeness
//! before it is returned.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::brute::brute_level_square_free;
use crate::error::{Error, Result};
use crate::level::{is_level, Permutation};
use crate::link::{is_usable, search_link, table2, LinkRow, LinkWord};
use crate::morphism::apply_h;
use crate::necklace::{CircularTernaryWord, Necklace};
use crate::pansiot::{decode_digits, delta, expand_f, f_image, f_length};
use crate::square::{circular_square, has_square_suffix};
use crate::word::{Digit, Letter, SWord, Symbol, TernaryWord};

/// Lengths with no circular square-free ternary word at all.
pub const EXCLUDED_LENGTHS: [usize; 6] = [5, 7, 9, 10, 14, 17];

/// Base lengths `m` the long construction cannot use.
pub const EXCLUDED_BASES: [usize; 7] = [1, 5, 7, 9, 10, 14, 17];

/// `|f(s)|` values covered by linking words.
pub const LINK_RANGE: RangeInclusive<usize> = 54..=107;

/// Smallest length handled by the long construction.
pub const LONG_MIN: usize = 90;

pub const SHORT_RANGE: RangeInclusive<usize> = 4..=90;

pub const TABLE3_TSV: &str = include_str!("../data/table3.tsv");

pub fn is_excluded(n: usize) -> bool {
    EXCLUDED_LENGTHS.contains(&n)
}

/// A word `v` of length `m` with prefix `a`, suffix `b` and `[v]` circular
/// square-free, taken from [`build`].
pub fn generate_base(m: usize) -> Result<TernaryWord> {
    Builder::embedded().base(m)
}

/// The circular word `[Δ(f(U))⁻⁻]` of length `|f(U)|`. Not checked.
pub fn decode_entry(u: &[Digit]) -> CircularTernaryWord {
    Necklace::new(&decode_digits(u))
}

/// Depth-first search over digit words of weight `n`; only the first `n`
/// letters of the decode end up in the circular word, so only they are
/// checked for squares and letter counts while descending.
struct ShortSearch {
    n: usize,
    cap: usize,
    digits: Vec<Digit>,
    letters: Vec<Letter>,
    counts: [usize; 3],
    budget: usize,
}

impl ShortSearch {
    fn push(&mut self, d: Digit) -> bool {
        let w = 1 + d.value() as usize;
        if w > self.budget {
            return false;
        }
        let before = self.letters.len();
        for &bit in f_image(d) {
            let i = self.letters.len();
            let (x, y) = (self.letters[i - 2], self.letters[i - 1]);
            let z = if bit == crate::word::Bit::Zero { x } else { x.third(y) };
            self.letters.push(z);
            if i < self.n {
                self.counts[z.index()] += 1;
                if self.counts[z.index()] > self.cap || has_square_suffix(&self.letters) {
                    self.truncate(before);
                    return false;
                }
            }
        }
        self.digits.push(d);
        self.budget -= w;
        true
    }

    fn truncate(&mut self, len: usize) {
        while self.letters.len() > len {
            let i = self.letters.len() - 1;
            if i < self.n {
                self.counts[self.letters[i].index()] -= 1;
            }
            self.letters.pop();
        }
    }

    fn pop(&mut self) {
        let d = self.digits.pop().unwrap();
        self.budget += 1 + d.value() as usize;
        self.truncate(self.letters.len() - f_image(d).len());
    }

    fn run(&mut self) -> bool {
        if self.budget == 0 {
            let w = &self.letters[..self.n];
            return is_level(w) && circular_square(w).is_none();
        }
        for &d in Digit::ALL.iter().rev() {
            if self.push(d) {
                if self.run() {
                    return true;
                }
                self.pop();
            }
        }
        false
    }
}

/// The first digit word `U` (digits tried `3`, `2`, `1`) with `|f(U)| = n` whose
/// decode is level and circular square-free, or `None` if there is none.
pub fn search_short(n: usize) -> Result<Option<SWord>> {
    if !SHORT_RANGE.contains(&n) {
        return Err(Error::OutOfRange { n, min: *SHORT_RANGE.start(), max: *SHORT_RANGE.end() });
    }
    let mut search = ShortSearch {
        n,
        cap: n.div_ceil(3),
        digits: Vec::new(),
        letters: vec![Letter::A, Letter::B],
        counts: [1, 1, 0],
        budget: n,
    };
    Ok(search.run().then(|| SWord::new(search.digits)))
}

/// `(m, r)` with `n = 18m + r`, `r ∈ 54..=107` and `m` the smallest usable base length.
pub fn decompose(n: usize) -> Result<(usize, usize)> {
    if n < LONG_MIN {
        return Err(Error::TooSmall { n, min: LONG_MIN });
    }
    let lo = n.saturating_sub(*LINK_RANGE.end()).div_ceil(18).max(2);
    let hi = (n - LINK_RANGE.start()) / 18;
    (lo..=hi)
        .find(|m| !EXCLUDED_BASES.contains(m))
        .map(|m| (m, n - 18 * m))
        .ok_or(Error::NoSuchLength(n))
}

/// One stored short encoding.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ShortRow {
    pub n: usize,
    pub u: SWord,
}

/// Parses `n<TAB>U` lines and checks that each `U` decodes to a level circular
/// square-free word of length `n`.
pub fn parse_table3(text: &str) -> Result<Vec<ShortRow>> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let table = |reason: String| Error::Table { line: i + 1, reason };
        let (n, u) = line.split_once('\t').ok_or_else(|| table("expected n<TAB>U".into()))?;
        let n: usize = n.trim().parse().map_err(|e| table(format!("bad length: {e}")))?;
        let u: SWord = u.trim().parse().map_err(|e| table(format!("{e}")))?;
        let w = decode_entry(&u);
        if w.len() != n {
            return Err(table(format!("{u} decodes to length {}", w.len())));
        }
        if !is_level(w.canonical()) || circular_square(w.canonical()).is_some() {
            return Err(table(format!("{u} decodes to {w}, which is not level and circular square-free")));
        }
        rows.push(ShortRow { n, u });
    }
    Ok(rows)
}

/// How a certified word was obtained.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Recipe {
    BruteForce,
    TableEntry { u: SWord },
    ShortSearch { u: SWord },
    Composite { m: usize, r: usize, v: TernaryWord, s: SWord },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BuildCertificate {
    pub n: usize,
    /// Canonical (least) rotation.
    pub word: CircularTernaryWord,
    pub recipe: Recipe,
    pub level: bool,
    pub circular_square_free: bool,
}

fn certify(n: usize, word: &[Letter], recipe: Recipe) -> Result<BuildCertificate> {
    let level = is_level(word);
    let square = circular_square(word);
    let fail = |reason: String| Err(Error::VerificationFailed { n, reason });
    if word.len() != n {
        return fail(format!("built a word of length {}", word.len()));
    }
    if !level {
        return fail(format!("letter counts {:?}", crate::level::letter_counts(word)));
    }
    if let Some(sq) = square {
        return fail(format!("square of period {} at {}", sq.period, sq.start));
    }
    Ok(BuildCertificate { n, word: Necklace::new(word), recipe, level, circular_square_free: true })
}

/// Builds certificates from stored linking words and short encodings, falling
/// back to search for anything missing.
#[derive(Clone, Debug, Default)]
pub struct Builder {
    links: BTreeMap<usize, SWord>,
    short: BTreeMap<usize, SWord>,
}

impl Builder {
    /// Rows are checked as they are added; a bad row is an error.
    pub fn new(links: &[LinkRow], short: &[ShortRow]) -> Result<Self> {
        let mut builder = Builder::default();
        for (i, row) in links.iter().enumerate() {
            if f_length(&row.s) != row.n || !is_usable(&row.s) {
                return Err(Error::Table { line: i + 1, reason: format!("{} is not a usable linking word for {}", row.s, row.n) });
            }
            builder.links.insert(row.n, row.s.clone());
        }
        for row in short {
            builder.short.insert(row.n, row.u.clone());
        }
        Ok(builder)
    }

    /// Shared builder over the embedded tables.
    pub fn embedded() -> &'static Builder {
        static EMBEDDED: OnceLock<Builder> = OnceLock::new();
        EMBEDDED.get_or_init(|| {
            let short = parse_table3(TABLE3_TSV).expect("embedded short table verifies");
            Builder::new(&table2(), &short).expect("embedded link table verifies")
        })
    }

    /// The least rotation of the word built for `m`, with `b` and `c`
    /// swapped if needed so that it ends in `b`. Lengths shrink by a factor of
    /// about 18 per level of recursion.
    pub fn base(&self, m: usize) -> Result<TernaryWord> {
        if m < 2 || EXCLUDED_BASES.contains(&m) {
            return Err(Error::NoSuchLength(m));
        }
        let mut v = self.build(m)?.word.into_canonical();
        if v.last() == Some(&Letter::C) {
            v = Permutation::new([Letter::A, Letter::C, Letter::B]).unwrap().apply(&v);
        }
        if v[0] != Letter::A || v[m - 1] != Letter::B || circular_square(&v).is_some() {
            return Err(Error::VerificationFailed { n: m, reason: format!("base word {v}") });
        }
        Ok(v)
    }

    fn link_word(&self, r: usize) -> Result<LinkWord> {
        match self.links.get(&r) {
            Some(s) => LinkWord::new(s.clone()).ok_or(Error::NoLinkingWord(r)),
            None => search_link(r).ok_or(Error::NoLinkingWord(r)),
        }
    }

    /// The `18m + r` construction, `n ≥ 90`.
    pub fn assemble_long(&self, n: usize) -> Result<BuildCertificate> {
        let (m, r) = decompose(n)?;
        let v = self.base(m)?;
        let link = self.link_word(r)?;
        let d = delta(&expand_f(&link.s));
        if !d.ends_with_ab() {
            return Err(Error::VerificationFailed { n, reason: format!("Δ(f({})) does not end in ab", link.s) });
        }
        let mut word = d.truncated().into_vec();
        word.extend(decode_digits(&apply_h(&v)).iter());
        certify(n, &word, Recipe::Composite { m, r, v, s: link.s })
    }

    pub fn build(&self, n: usize) -> Result<BuildCertificate> {
        if n == 0 {
            return Err(Error::TooSmall { n, min: 1 });
        }
        if is_excluded(n) {
            return Err(Error::NoSuchLength(n));
        }
        if n <= 3 {
            let w = brute_level_square_free(n)?.ok_or(Error::NoSuchLength(n))?;
            return certify(n, w.canonical(), Recipe::BruteForce);
        }
        if n >= LONG_MIN {
            return self.assemble_long(n);
        }
        let (u, stored) = match self.short.get(&n) {
            Some(u) => (u.clone(), true),
            None => (search_short(n)?.ok_or(Error::NoSuchLength(n))?, false),
        };
        let word = decode_entry(&u);
        let recipe = if stored { Recipe::TableEntry { u } } else { Recipe::ShortSearch { u } };
        certify(n, word.canonical(), recipe)
    }
}

/// [`Builder::build`] over the embedded tables.
pub fn build(n: usize) -> Result<BuildCertificate> {
    Builder::embedded().build(n)
}

/// [`Builder::assemble_long`] over the embedded tables.
pub fn assemble_long(n: usize) -> Result<BuildCertificate> {
    Builder::embedded().assemble_long(n)
}
