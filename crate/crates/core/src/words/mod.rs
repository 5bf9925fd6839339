//! Words over the alphabet `{0, …, d-1}` and their periodicity structure.
//!
//! Positions in the public API are 1-indexed: `slice(w, 1, n-1)` is the
//! prefix of `w` and `shift_letter(w, t, m)` changes the `t`-th letter.

pub mod lemmas;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest alphabet that can round-trip through the digit-string format.
pub const MAX_ALPHABET: u32 = 36;

/// A finite word over `A_d`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u8>,
    alphabet: u32,
}

impl Word {
    pub fn new(letters: Vec<u8>, alphabet: u32) -> Result<Self> {
        check_alphabet(alphabet)?;
        if let Some(&bad) = letters.iter().find(|&&a| u32::from(a) >= alphabet) {
            return Err(Error::Range(format!(
                "letter {bad} is not in an alphabet of size {alphabet}"
            )));
        }
        Ok(Self { letters, alphabet })
    }

    pub(crate) fn from_raw(letters: Vec<u8>, alphabet: u32) -> Self {
        debug_assert!(letters.iter().all(|&a| u32::from(a) < alphabet));
        Self { letters, alphabet }
    }

    pub fn empty(alphabet: u32) -> Result<Self> {
        Self::new(Vec::new(), alphabet)
    }

    /// `letter^len`
    pub fn constant(letter: u8, len: usize, alphabet: u32) -> Result<Self> {
        Self::new(vec![letter; len], alphabet)
    }

    /// Parse a digit string (`0-9`, then `a-z`). The alphabet size is never
    /// inferred from the content.
    pub fn parse(s: &str, alphabet: u32) -> Result<Self> {
        check_alphabet(alphabet)?;
        let letters = s
            .trim()
            .chars()
            .map(|c| {
                c.to_digit(MAX_ALPHABET)
                    .filter(|&v| v < alphabet)
                    .map(|v| v as u8)
                    .ok_or_else(|| {
                        Error::Parse(format!("{c:?} is not a letter of A_{alphabet} in {s:?}"))
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { letters, alphabet })
    }

    pub fn alphabet_size(&self) -> u32 {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    /// The letter at 1-indexed position `i`.
    pub fn letter(&self, i: usize) -> Option<u8> {
        i.checked_sub(1).and_then(|j| self.letters.get(j).copied())
    }

    /// `x(a:b)`, the substring `x_a … x_b` (1-indexed, inclusive).
    pub fn slice(&self, a: usize, b: usize) -> Result<Word> {
        if a < 1 || a > b || b > self.len() {
            return Err(Error::Range(format!(
                "slice ({a}:{b}) of a word of length {}",
                self.len()
            )));
        }
        Ok(Self::from_raw(self.letters[a - 1..b].to_vec(), self.alphabet))
    }

    /// `x⁻ = x(1:n-1)`; empty for a single letter.
    pub fn prefix(&self) -> Result<Word> {
        self.drop_one(|l| &l[..l.len() - 1])
    }

    /// `x⁺ = x(2:n)`; empty for a single letter.
    pub fn suffix(&self) -> Result<Word> {
        self.drop_one(|l| &l[1..])
    }

    fn drop_one(&self, keep: impl Fn(&[u8]) -> &[u8]) -> Result<Word> {
        if self.is_empty() {
            return Err(Error::Range("the empty word has no prefix or suffix".into()));
        }
        Ok(Self::from_raw(keep(&self.letters).to_vec(), self.alphabet))
    }

    /// `x ⊕ y`
    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.alphabet != other.alphabet {
            return Err(Error::Alphabet {
                left: self.alphabet,
                right: other.alphabet,
            });
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Self::from_raw(letters, self.alphabet))
    }

    /// `x ⊕ a` for a single letter.
    pub fn push(&self, letter: u8) -> Result<Word> {
        if u32::from(letter) >= self.alphabet {
            return Err(Error::Range(format!(
                "letter {letter} is not in an alphabet of size {}",
                self.alphabet
            )));
        }
        let mut letters = self.letters.clone();
        letters.push(letter);
        Ok(Self::from_raw(letters, self.alphabet))
    }

    /// `w^(t,m)`: the word with letter `t` replaced by `w_t + m (mod d)`.
    pub fn shift_letter(&self, t: usize, m: i64) -> Result<Word> {
        if t < 1 || t > self.len() {
            return Err(Error::Range(format!(
                "position {t} in a word of length {}",
                self.len()
            )));
        }
        let mut letters = self.letters.clone();
        letters[t - 1] = shifted(letters[t - 1], m, self.alphabet);
        Ok(Self::from_raw(letters, self.alphabet))
    }

    /// `w_i = w_{i+ell}` for every applicable `i`. When `2·ell > n` this is
    /// an almost period; when `ell ≥ n` it holds vacuously.
    pub fn has_period(&self, ell: usize) -> bool {
        has_period(&self.letters, ell)
    }

    /// Period `ell` with `2·ell ≤ n` and no shorter period.
    pub fn is_ell_periodic(&self, ell: usize) -> bool {
        is_ell_periodic(&self.letters, ell)
    }

    /// Some extension by `2·ell - n` letters is `ell`-periodic. Requires
    /// `n < 2·ell ≤ 2n`.
    pub fn is_almost_ell_periodic(&self, ell: usize) -> Result<bool> {
        let n = self.len();
        if ell == 0 || 2 * ell <= n {
            return Err(Error::Precondition(format!(
                "almost {ell}-periodicity needs 2·ell > n = {n}; use is_ell_periodic"
            )));
        }
        if ell > n {
            return Err(Error::Precondition(format!(
                "almost {ell}-periodicity needs ell ≤ n = {n}"
            )));
        }
        Ok(is_almost_ell_periodic(&self.letters, ell))
    }

    pub fn period_class(&self, ell: usize) -> PeriodClass {
        PeriodClass::of(&self.letters, ell)
    }
}

fn check_alphabet(alphabet: u32) -> Result<()> {
    if !(2..=MAX_ALPHABET).contains(&alphabet) {
        return Err(Error::Range(format!(
            "alphabet size {alphabet} outside 2..={MAX_ALPHABET}"
        )));
    }
    Ok(())
}

pub(crate) fn shifted(letter: u8, m: i64, alphabet: u32) -> u8 {
    let d = i64::from(alphabet);
    (i64::from(letter) + m).rem_euclid(d) as u8
}

pub(crate) fn has_period(w: &[u8], ell: usize) -> bool {
    ell >= w.len() || w.iter().zip(&w[ell..]).all(|(a, b)| a == b)
}

pub(crate) fn is_ell_periodic(w: &[u8], ell: usize) -> bool {
    ell >= 1 && 2 * ell <= w.len() && has_period(w, ell) && (1..ell).all(|k| !has_period(w, k))
}

/// The extension letters are forced: position `n + i` sits `ell` after
/// position `n - ell + i`, which is inside `w`.
pub(crate) fn is_almost_ell_periodic(w: &[u8], ell: usize) -> bool {
    let n = w.len();
    debug_assert!(ell >= 1 && 2 * ell > n && ell <= n);
    if !has_period(w, ell) {
        return false;
    }
    let mut ext = Vec::with_capacity(2 * ell);
    ext.extend_from_slice(w);
    for i in 0..(2 * ell - n) {
        ext.push(w[n - ell + i]);
    }
    is_ell_periodic(&ext, ell)
}

/// `ell`-periodic when `2·ell ≤ n`, almost `ell`-periodic when
/// `n < 2·ell ≤ 2n`, false otherwise.
pub(crate) fn is_periodic_or_almost(w: &[u8], ell: usize) -> bool {
    if ell == 0 {
        false
    } else if 2 * ell <= w.len() {
        is_ell_periodic(w, ell)
    } else if ell <= w.len() {
        is_almost_ell_periodic(w, ell)
    } else {
        false
    }
}

pub(crate) fn digit(letter: u8) -> char {
    char::from_digit(u32::from(letter), MAX_ALPHABET).expect("letter below 36")
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters.iter().try_for_each(|&a| write!(f, "{}", digit(a)))
    }
}

/// Serializes as the digit string; the alphabet travels separately.
impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"/{}", self.alphabet)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PeriodKind {
    Periodic,
    AlmostPeriodic,
    None,
}

/// How a word relates to a candidate period length `ell`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PeriodClass {
    pub kind: PeriodKind,
    pub ell: usize,
}

impl PeriodClass {
    fn of(w: &[u8], ell: usize) -> Self {
        let kind = if is_ell_periodic(w, ell) {
            PeriodKind::Periodic
        } else if ell >= 1 && 2 * ell > w.len() && ell <= w.len() && is_almost_ell_periodic(w, ell) {
            PeriodKind::AlmostPeriodic
        } else {
            PeriodKind::None
        };
        Self { kind, ell }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Word::parse(s, 2).unwrap()
    }

    fn w3(s: &str) -> Word {
        Word::parse(s, 3).unwrap()
    }

    /// Definition-level oracle: try every extension word.
    fn almost_by_enumeration(word: &Word, ell: usize) -> bool {
        let d = word.alphabet_size();
        let extra = 2 * ell - word.len();
        (0..(d as usize).pow(extra as u32)).any(|mut code| {
            let mut letters = word.letters().to_vec();
            let mut tail = vec![0u8; extra];
            for slot in tail.iter_mut().rev() {
                *slot = (code % d as usize) as u8;
                code /= d as usize;
            }
            letters.extend(tail);
            is_ell_periodic(&letters, ell)
        })
    }

    #[test]
    fn slice_examples() {
        assert_eq!(w("01101").slice(2, 4).unwrap(), w("110"));
        assert_eq!(w("0110").slice(1, 3).unwrap(), w("011"));
        assert_eq!(w("0110").slice(2, 4).unwrap(), w("110"));
        assert_eq!(w("0110").prefix().unwrap(), w("011"));
        assert_eq!(w("0110").suffix().unwrap(), w("110"));
    }

    #[test]
    fn slice_out_of_range() {
        assert!(matches!(w("0110").slice(0, 2), Err(Error::Range(_))));
        assert!(matches!(w("0110").slice(3, 2), Err(Error::Range(_))));
        assert!(matches!(w("0110").slice(2, 5), Err(Error::Range(_))));
    }

    #[test]
    fn concat_examples() {
        assert_eq!(w("01").concat(&w("101")).unwrap(), w("01101"));
        assert_eq!(Word::empty(2).unwrap().concat(&w("10")).unwrap(), w("10"));
        assert_eq!(w3("2").concat(&w3("01")).unwrap(), w3("201"));
        assert!(matches!(
            w("01").concat(&w3("01")),
            Err(Error::Alphabet { left: 2, right: 3 })
        ));
    }

    #[test]
    fn shift_letter_examples() {
        assert_eq!(w3("0120").shift_letter(2, 2).unwrap(), w3("0020"));
        assert_eq!(w("111").shift_letter(3, 1).unwrap(), w("110"));
        assert_eq!(w3("012").shift_letter(1, -1).unwrap(), w3("212"));
        assert!(w("111").shift_letter(4, 1).is_err());
        assert!(w("111").shift_letter(0, 1).is_err());
    }

    #[test]
    fn period_examples() {
        assert!(w("010101").has_period(2));
        assert!(w("0010").has_period(3));
        assert!(!w("0110").has_period(2));
        assert!(w("0110").has_period(4));
        assert!(w("0110").has_period(9));

        assert!(w("010101").is_ell_periodic(2));
        assert!(!w("000000").is_ell_periodic(2));
        assert!(w("000000").is_ell_periodic(1));
        assert!(!w("0010").is_ell_periodic(3));
    }

    #[test]
    fn almost_periodic_examples() {
        assert!(w("01101").is_almost_ell_periodic(3).unwrap());
        assert!(!w("0000").is_almost_ell_periodic(3).unwrap());
        assert!(!w("0101").is_almost_ell_periodic(3).unwrap());
        // the enumeration oracle agrees on the same three
        assert!(almost_by_enumeration(&w("01101"), 3));
        assert!(!almost_by_enumeration(&w("0000"), 3));
        assert!(!almost_by_enumeration(&w("0101"), 3));
    }

    #[test]
    fn almost_periodic_preconditions() {
        assert!(matches!(
            w("010101").is_almost_ell_periodic(3),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            w("01").is_almost_ell_periodic(3),
            Err(Error::Precondition(_))
        ));
        // ell = n is allowed: the extension is the word itself
        assert!(w("011").is_almost_ell_periodic(3).unwrap());
        assert!(!w("000").is_almost_ell_periodic(3).unwrap());
    }

    #[test]
    fn forced_extension_matches_enumeration_exhaustively() {
        for d in [2u32, 3] {
            for n in 1..=7usize {
                let total = (d as usize).pow(n as u32);
                for code in 0..total {
                    let word = word_of_code(code, d, n);
                    for ell in (n / 2 + 1)..=n {
                        if 2 * ell <= n {
                            continue;
                        }
                        assert_eq!(
                            word.is_almost_ell_periodic(ell).unwrap(),
                            almost_by_enumeration(&word, ell),
                            "{word:?} ell={ell}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn period_class_kinds() {
        assert_eq!(w("0101").period_class(2).kind, PeriodKind::Periodic);
        assert_eq!(w("01101").period_class(3).kind, PeriodKind::AlmostPeriodic);
        assert_eq!(w("0000").period_class(3).kind, PeriodKind::None);
        assert_eq!(w("0110").period_class(2).kind, PeriodKind::None);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w3("0120").to_string(), "0120");
        assert!(Word::parse("012", 2).is_err());
        assert!(Word::parse("01", 1).is_err());
        let big = Word::parse("0a9z", 36).unwrap();
        assert_eq!(big.letters(), &[0, 10, 9, 35]);
        assert_eq!(big.to_string(), "0a9z");
    }

    fn word_of_code(mut code: usize, d: u32, n: usize) -> Word {
        let mut letters = vec![0u8; n];
        for slot in letters.iter_mut().rev() {
            *slot = (code % d as usize) as u8;
            code /= d as usize;
        }
        Word::new(letters, d).unwrap()
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        (2u32..=5).prop_flat_map(|d| {
            prop::collection::vec(0u8..d as u8, 0..12).prop_map(move |v| Word::new(v, d).unwrap())
        })
    }

    proptest! {
        #[test]
        fn slice_concat_round_trip(word in arb_word(), k in 1usize..12) {
            let n = word.len();
            prop_assume!(k < n);
            let left = word.slice(1, k).unwrap();
            let right = word.slice(k + 1, n).unwrap();
            prop_assert_eq!(left.concat(&right).unwrap(), word);
        }

        #[test]
        fn shift_then_unshift(word in arb_word(), t in 1usize..12, m in -40i64..40) {
            prop_assume!(t <= word.len());
            let d = i64::from(word.alphabet_size());
            let back = word.shift_letter(t, m).unwrap().shift_letter(t, d - m).unwrap();
            prop_assert_eq!(back, word.clone());
            prop_assert_eq!(word.shift_letter(t, 0).unwrap(), word);
        }

        #[test]
        fn long_periods_are_vacuous(word in arb_word(), extra in 0usize..5) {
            prop_assert!(word.has_period(word.len() + extra));
            prop_assert!(word.is_empty() || word.has_period(word.len()));
        }
    }
}
