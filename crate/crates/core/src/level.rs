//! Letter counts, levelness, and equivalence under permutations of `{a, b, c}`.

use std::fmt;

use crate::word::{Letter, Symbol, TernaryWord};

/// Occurrences of `a`, `b`, `c`, in that order.
pub fn letter_counts(w: &[Letter]) -> [usize; 3] {
    let mut counts = [0; 3];
    for &x in w {
        counts[x.index()] += 1;
    }
    counts
}

/// True iff any two letter counts differ by at most one. Letters that do not
/// occur count as zero, so `aab` is not level.
pub fn is_level(w: &[Letter]) -> bool {
    let counts = letter_counts(w);
    let max = counts.iter().max().unwrap();
    let min = counts.iter().min().unwrap();
    max - min <= 1
}

/// A bijection of `{a, b, c}`, stored as the images of `a`, `b`, `c`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Permutation([Letter; 3]);

impl Permutation {
    pub const IDENTITY: Permutation = Permutation([Letter::A, Letter::B, Letter::C]);

    /// Returns `None` unless `images` is a bijection.
    pub fn new(images: [Letter; 3]) -> Option<Self> {
        let mut seen = [false; 3];
        for x in images {
            if std::mem::replace(&mut seen[x.index()], true) {
                return None;
            }
        }
        Some(Permutation(images))
    }

    /// All six permutations.
    pub fn all() -> [Permutation; 6] {
        use Letter::*;
        [[A, B, C], [A, C, B], [B, A, C], [B, C, A], [C, A, B], [C, B, A]].map(Permutation)
    }

    pub fn image(&self, x: Letter) -> Letter {
        self.0[x.index()]
    }

    pub fn apply(&self, w: &[Letter]) -> TernaryWord {
        w.iter().map(|&x| self.image(x)).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = Letter::ALL
            .iter()
            .map(|&x| format!("{}→{}", x.to_char(), self.image(x).to_char()))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// The permutation `σ` with `σ(v) = w`, if any. Letters absent from `v` are
/// sent to the unused images in alphabet order.
pub fn equivalent(v: &[Letter], w: &[Letter]) -> Option<Permutation> {
    if v.len() != w.len() {
        return None;
    }
    let mut map: [Option<Letter>; 3] = [None; 3];
    let mut used = [false; 3];
    for (&x, &y) in v.iter().zip(w) {
        match map[x.index()] {
            Some(z) if z != y => return None,
            Some(_) => {}
            None => {
                if used[y.index()] {
                    return None;
                }
                map[x.index()] = Some(y);
                used[y.index()] = true;
            }
        }
    }
    let mut free = Letter::ALL.iter().copied().filter(|y| !used[y.index()]);
    let images = map.map(|m| m.unwrap_or_else(|| free.next().expect("bijection completes")));
    Permutation::new(images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{all_words_up_to, word};

    #[test]
    fn level_examples() {
        assert!(is_level(&word::<Letter>("abc")));
        assert!(!is_level(&word::<Letter>("aab")));
        assert!(is_level(&word::<Letter>("abacbc")));
        assert!(is_level(&word::<Letter>("")));
        assert!(is_level(&word::<Letter>("a")));
        assert!(!is_level(&word::<Letter>("aa")));
    }

    #[test]
    fn equivalence_examples() {
        use Letter::*;
        let sigma = equivalent(&word::<Letter>("abcbacbcabcbacb"), &word::<Letter>("bcacbacabcacbac")).unwrap();
        assert_eq!(sigma, Permutation::new([B, C, A]).unwrap());
        assert_eq!(equivalent(&word::<Letter>("abc"), &word::<Letter>("abc")), Some(Permutation::IDENTITY));
        assert_eq!(equivalent(&word::<Letter>("ab"), &word::<Letter>("ba")), Permutation::new([B, A, C]));
        assert_eq!(equivalent(&word::<Letter>("ab"), &word::<Letter>("aa")), None);
        assert_eq!(equivalent(&word::<Letter>("aa"), &word::<Letter>("ab")), None);
        assert_eq!(equivalent(&word::<Letter>("a"), &word::<Letter>("ab")), None);
    }

    #[test]
    fn permutation_rejects_non_bijection() {
        assert!(Permutation::new([Letter::A, Letter::A, Letter::C]).is_none());
    }

    #[test]
    fn equivalence_and_levelness_properties() {
        for v in all_words_up_to::<Letter>(7) {
            for sigma in Permutation::all() {
                let w = sigma.apply(&v);
                assert_eq!(is_level(&v), is_level(&w));
                let found = equivalent(&v, &w).expect("image is equivalent");
                assert_eq!(found.apply(&v), w);
            }
        }
    }
}
