//! Words over the two-letter alphabet `{x, y}`: the monomials of the
//! noncommutative polynomial ring `Q<x, y>`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A letter of the free monoid underlying `Q<x, y>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    Y,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::X => write!(f, "x"),
            Letter::Y => write!(f, "y"),
        }
    }
}

/// A word over `{x, y}`; the empty word is the monomial 1.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Split into prefix of length `k` and the remaining suffix.
    pub fn split_at(&self, k: usize) -> (Word, Word) {
        let (a, b) = self.0.split_at(k);
        (Word(a.to_vec()), Word(b.to_vec()))
    }

    /// The duality involution: reverse the word and exchange `x <-> y`
    /// (the substitution `t -> 1 - t` on iterated integrals).
    pub fn sigma_dual(&self) -> Word {
        Word(
            self.0
                .iter()
                .rev()
                .map(|l| match l {
                    Letter::X => Letter::Y,
                    Letter::Y => Letter::X,
                })
                .collect(),
        )
    }

    /// Count of a given letter, for homogeneity checks.
    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }
}

/// Length-lexicographic order with `x < y`; the canonical term order.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parse a string of `x`/`y` letters; ASCII whitespace is ignored,
    /// the empty string is the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                'x' => letters.push(Letter::X),
                'y' => letters.push(Letter::Y),
                c if c.is_ascii_whitespace() => {}
                c => {
                    return Err(Error::Parse(format!(
                        "invalid letter `{c}` in word `{s}` (expected x or y)"
                    )))
                }
            }
        }
        Ok(Word(letters))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w("xxyy").to_string(), "xxyy");
        assert_eq!(w("").to_string(), "");
        assert_eq!(w(" x y "), w("xy"));
        assert!("xz".parse::<Word>().is_err());
        assert!("1".parse::<Word>().is_err());
    }

    #[test]
    fn canonical_order_is_length_then_lex() {
        assert!(w("y") > w("x"));
        assert!(w("xx") > w("y"));
        assert!(w("xyxy") > w("xxyy"));
        assert!(w("") < w("x"));
    }

    #[test]
    fn sigma_dual_examples() {
        assert_eq!(w("").sigma_dual(), w(""));
        assert_eq!(w("x").sigma_dual(), w("y"));
        assert_eq!(w("xy").sigma_dual(), w("xy"));
        assert_eq!(w("xxy").sigma_dual(), w("xyy"));
    }

    #[test]
    fn sigma_dual_is_an_involution() {
        for s in ["", "x", "y", "xxyy", "yxyxx", "xyyxyx"] {
            let word = w(s);
            assert_eq!(word.sigma_dual().sigma_dual(), word);
            assert_eq!(word.sigma_dual().len(), word.len());
        }
    }

    #[test]
    fn concat_and_split() {
        let word = w("xxyy");
        let (a, b) = word.split_at(1);
        assert_eq!(a, w("x"));
        assert_eq!(b, w("xyy"));
        assert_eq!(a.concat(&b), word);
    }
}
