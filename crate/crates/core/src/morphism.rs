//! The uniform morphism `h: a → 123123, b → 132132, c → 131313` and the
//! constructions built on it.
//!
//! Every block labels a closed walk in the digit graph, and each block's
//! decode ends in `ab` with every letter appearing six times in the decode
//! minus its last two letters. Decodes of `h`-images therefore concatenate
//! blockwise, and `Δ(f(h(v)))` minus two letters is balanced.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::level::letter_counts;
use crate::necklace::{CircularTernaryWord, Necklace};
use crate::pansiot::{decode_digits, delta, expand_f};
use crate::square::{circular_square, is_square_free};
use crate::word::{Digit, Letter, SWord, Symbol, TernaryWord};

pub const BLOCK_LEN: usize = 6;

const BLOCKS: [[Digit; BLOCK_LEN]; 3] = {
    use Digit::*;
    [[One, Two, Three, One, Two, Three], [One, Three, Two, One, Three, Two], [One, Three, One, Three, One, Three]]
};

/// `h(x)`.
pub fn block(x: Letter) -> &'static [Digit] {
    &BLOCKS[x.index()]
}

/// The letter whose block is exactly `digits`, if any.
pub fn block_letter(digits: &[Digit]) -> Option<Letter> {
    Letter::ALL.iter().copied().find(|&x| block(x) == digits)
}

pub fn apply_h(v: &[Letter]) -> SWord {
    v.iter().flat_map(|&x| block(x).iter().copied()).collect()
}

/// One row of the block decode table.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Block {
    pub source: Letter,
    pub image: SWord,
    /// `Δ(f(h(x)))`, 20 letters.
    pub decode: TernaryWord,
}

pub fn block_decode_table() -> [Block; 3] {
    Letter::ALL
        .iter()
        .map(|&x| Block {
            source: x,
            image: SWord::from_slice(block(x)),
            decode: delta(&expand_f(block(x))).into_word(),
        })
        .collect::<Vec<_>>()
        .try_into()
        .unwrap()
}

/// Witness that `q` occurs in `h(α)` and `h(β)` at offsets incongruent mod 6:
/// `h(α) = p1 q s1` and `h(β) = p2 q s2`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AmbiguityWitness {
    pub alpha: TernaryWord,
    pub beta: TernaryWord,
    pub p1: SWord,
    pub s1: SWord,
    pub p2: SWord,
    pub s2: SWord,
}

/// Square-free ternary words of length `1..=max_len`, by length then lexicographically.
fn square_free_words(max_len: usize) -> Vec<TernaryWord> {
    let mut all = Vec::new();
    let mut layer = vec![TernaryWord::empty()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| Letter::ALL.iter().map(move |&x| w.concat(&[x])))
            .filter(|w| is_square_free(w))
            .collect();
        all.extend(layer.iter().cloned());
    }
    all
}

fn occurrences<'a>(text: &'a [Digit], q: &'a [Digit]) -> impl Iterator<Item = usize> + 'a {
    (0..=text.len().saturating_sub(q.len())).filter(move |&i| text.len() >= q.len() && &text[i..i + q.len()] == q)
}

/// Searches square-free `α, β` with `|α|, |β| ≤ ⌈|q|/6⌉ + 2`. Occurrences are
/// taken in order of `|α|`, then `α`, then offset; the witness pairs the first
/// occurrence with the first one at an incongruent offset.
pub fn is_ambiguous(q: &[Digit]) -> Result<Option<AmbiguityWitness>> {
    if q.is_empty() {
        return Err(Error::EmptyWord);
    }
    let bound = q.len().div_ceil(BLOCK_LEN) + 2;
    let mut first: Option<(TernaryWord, usize)> = None;
    for alpha in square_free_words(bound) {
        let image = apply_h(&alpha);
        for pos in occurrences(&image, q) {
            match &first {
                None => first = Some((alpha.clone(), pos)),
                Some((a, p)) if p % BLOCK_LEN != pos % BLOCK_LEN => {
                    let ha = apply_h(a);
                    return Ok(Some(AmbiguityWitness {
                        p1: SWord::from_slice(&ha[..*p]),
                        s1: SWord::from_slice(&ha[p + q.len()..]),
                        p2: SWord::from_slice(&image[..pos]),
                        s2: SWord::from_slice(&image[pos + q.len()..]),
                        alpha: a.clone(),
                        beta: alpha,
                    }));
                }
                Some(_) => {}
            }
        }
    }
    Ok(None)
}

/// All ambiguous digit words of even length `2..=8`. None has length 8, and
/// ambiguity is closed under taking factors, so the list is complete.
pub fn ambiguous_words_of_even_length() -> Vec<SWord> {
    let mut found = Vec::new();
    for len in (2..=8).step_by(2) {
        for q in crate::word::all_words::<Digit>(len) {
            if is_ambiguous(&q).expect("non-empty").is_some() {
                found.push(q);
            }
        }
    }
    found
}

/// Blocks are told apart by their length-2 suffixes and by their length-3 prefixes.
pub fn synchronization_check() -> bool {
    synchronization_check_with(&BLOCKS.each_ref().map(|b| &b[..]))
}

/// [`synchronization_check`] for an arbitrary block table.
pub fn synchronization_check_with(blocks: &[&[Digit]; 3]) -> bool {
    let distinct = |f: &dyn Fn(&[Digit]) -> &[Digit]| {
        (0..3).all(|i| (i + 1..3).all(|j| f(blocks[i]) != f(blocks[j])))
    };
    blocks.iter().all(|b| b.len() >= 3)
        && distinct(&|b| &b[b.len() - 2..])
        && distinct(&|b| &b[..3])
}

/// `w = h(v)` for the canonical representative of `v`, together with the
/// circular word `[Δ(f(w))⁻⁻]`, checked to be circular square-free with each
/// letter exactly `6|v|` times.
pub fn build_from_necklace(v: &CircularTernaryWord) -> Result<(SWord, CircularTernaryWord)> {
    if circular_square(v.canonical()).is_some() {
        return Err(Error::NotCircularSquareFree(v.to_string()));
    }
    let w = apply_h(v.canonical());
    let decoded = Necklace::new(&decode_digits(&w));
    let n = 18 * v.len();
    let fail = |reason: String| Error::VerificationFailed { n, reason };
    if decoded.len() != n {
        return Err(fail(format!("decode has length {}", decoded.len())));
    }
    if let Some(sq) = circular_square(decoded.canonical()) {
        return Err(fail(format!("square of period {} at {}", sq.period, sq.start)));
    }
    let counts = letter_counts(decoded.canonical());
    if counts != [6 * v.len(); 3] {
        return Err(fail(format!("letter counts {counts:?}")));
    }
    Ok((w, decoded))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::necklace::least_rotation;
    use crate::shur::{check_shur, forbidden_factor_scan};
    use crate::walks::is_closed_walk_d2;
    use crate::word::{all_words, all_words_up_to, word};

    fn s(x: &str) -> SWord {
        word(x)
    }

    fn t(x: &str) -> TernaryWord {
        word(x)
    }

    #[test]
    fn h_examples() {
        assert_eq!(apply_h(&t("a")), s("123123"));
        assert_eq!(apply_h(&[]), s(""));
        assert_eq!(apply_h(&t("cb")), s("131313132132"));
        assert_eq!(block_letter(&s("132132")), Some(Letter::B));
        assert_eq!(block_letter(&s("123132")), None);
    }

    #[test]
    fn block_table_matches_golden_rows() {
        let table = block_decode_table();
        let golden = ["abacabcbacbcacbabcab", "abacabcacbabcbacbcab", "abacabcacbcabcbabcab"];
        for (row, g) in table.iter().zip(golden) {
            assert_eq!(row.decode, t(g));
            assert!(row.decode.ends_with(&[Letter::A, Letter::B]));
            assert_eq!(letter_counts(&row.decode.drop_last(2)), [6, 6, 6]);
        }
    }

    #[test]
    fn blocks_are_closed_and_avoid_doubled_digits() {
        for &x in Letter::ALL {
            assert!(is_closed_walk_d2(block(x)));
        }
        for v in all_words_up_to::<Letter>(4) {
            let w = apply_h(&v);
            let n = w.len();
            assert!((0..n).all(|i| w[i] != w[(i + 1) % n]), "{v:?}");
            assert!(forbidden_factor_scan(&w, true).is_none());
        }
    }

    #[test]
    fn ambiguity_witness_for_1231() {
        let w = is_ambiguous(&s("1231")).unwrap().unwrap();
        assert_eq!(w.alpha, t("a"));
        assert_eq!(w.beta, t("ab"));
        assert_eq!(w.p1, s(""));
        assert_eq!(w.s1, s("23"));
        assert_eq!(w.p2, s("123"));
        assert_eq!(w.s2, s("32132"));
        assert_eq!(apply_h(&w.alpha), w.p1.concat(&s("1231")).concat(&w.s1));
        assert_eq!(apply_h(&w.beta), w.p2.concat(&s("1231")).concat(&w.s2));
    }

    #[test]
    fn unambiguous_examples() {
        assert_eq!(is_ambiguous(&s("123123")).unwrap(), None);
        assert_eq!(is_ambiguous(&s("11")).unwrap(), None);
        assert_eq!(is_ambiguous(&[]), Err(Error::EmptyWord));
    }

    #[test]
    fn even_length_ambiguous_words() {
        let mut found: Vec<String> = ambiguous_words_of_even_length().iter().map(|w| w.to_string()).collect();
        found.sort();
        let mut expected = [
            "12", "23", "31", "13", "32", "21", "1231", "3123", "1321", "3213", "3131", "1313", "313131", "131313",
        ];
        expected.sort();
        assert_eq!(found, expected);
    }

    #[test]
    fn factors_of_ambiguous_words_are_ambiguous() {
        for q in ambiguous_words_of_even_length() {
            for i in 0..q.len() {
                for j in i + 1..=q.len() {
                    assert!(is_ambiguous(&q[i..j]).unwrap().is_some(), "{:?}", &q[i..j]);
                }
            }
        }
    }

    #[test]
    fn synchronization() {
        assert!(synchronization_check());
        let faulty: [&[Digit]; 3] = [block(Letter::A), &s("123132"), block(Letter::C)];
        assert!(!synchronization_check_with(&faulty));
        let same_suffix: [&[Digit]; 3] = [block(Letter::A), &s("132123"), block(Letter::C)];
        assert!(!synchronization_check_with(&same_suffix));
    }

    #[test]
    fn decode_concatenates_blockwise() {
        let table = block_decode_table();
        for v in all_words_up_to::<Letter>(4) {
            let Some((&last, init)) = v.split_last() else { continue };
            let mut expected = TernaryWord::empty();
            for &x in init {
                expected.extend(table[x.index()].decode.drop_last(2).iter().copied());
            }
            expected.extend(table[last.index()].decode.iter().copied());
            assert_eq!(delta(&expand_f(&apply_h(&v))).into_word(), expected, "{v:?}");
        }
    }

    #[test]
    fn build_examples() {
        let (w, d) = build_from_necklace(&Necklace::new(&t("a"))).unwrap();
        assert_eq!(w, s("123123"));
        assert_eq!(d.len(), 18);
        let (_, d) = build_from_necklace(&Necklace::new(&t("ab"))).unwrap();
        assert_eq!((d.len(), letter_counts(d.canonical())), (36, [12; 3]));
        let (_, d) = build_from_necklace(&Necklace::new(&t("abcacb"))).unwrap();
        assert_eq!((d.len(), letter_counts(d.canonical())), (108, [36; 3]));
        assert!(matches!(build_from_necklace(&Necklace::new(&t("abab"))), Err(Error::NotCircularSquareFree(_))));
    }

    #[test]
    fn every_small_necklace_builds() {
        let mut built = 0;
        for n in 1..=6 {
            for v in all_words::<Letter>(n) {
                if least_rotation(&v) != 0 || circular_square(&v).is_some() {
                    continue;
                }
                let (w, d) = build_from_necklace(&Necklace::new(&v)).unwrap();
                assert!(check_shur(&w).passes() || n == 1, "{v:?}");
                assert!(crate::square::circular_square_naive(d.canonical()).is_none());
                // any rotation of v gives the same circular word
                let rotated = Necklace::new(&decode_digits(&apply_h(&v.rotated(1))));
                assert_eq!(rotated, d);
                built += 1;
            }
        }
        assert!(built > 0);
    }
}
