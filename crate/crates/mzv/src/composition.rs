//! Compositions (finite sequences of positive integers): the argument
//! tuples of multiple zeta values, and equally the words of the z-alphabet
//! `z_k = x^{k-1} y` that freely generates `Q + H·y`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// Upper bound on the number of parts a parsed composition may expand to.
/// Guards the `{k}^r` repetition macro against hostile input.
pub const MAX_PARSED_PARTS: usize = 1 << 20;

/// A composition; the empty composition stands for the monomial 1.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Composition(Vec<u32>);

impl Composition {
    /// Build from parts, rejecting any part below 1.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Parse("composition parts must be >= 1".into()));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// `{part}^times`, e.g. `repeat(2, 3)` is `(2, 2, 2)`.
    pub fn repeat(part: u32, times: usize) -> Result<Self> {
        Self::new(vec![part; times])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Sum of parts.
    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    /// Number of parts.
    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// A composition indexes a convergent series iff it is empty or its
    /// first part is at least 2.
    pub fn is_admissible(&self) -> bool {
        self.0.first().map_or(true, |&k| k >= 2)
    }

    /// Concatenation of argument lists.
    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = Vec::with_capacity(self.depth() + other.depth());
        parts.extend_from_slice(&self.0);
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// Prepend one part.
    pub fn with_prefix(&self, part: u32) -> Result<Composition> {
        if part == 0 {
            return Err(Error::Parse("composition parts must be >= 1".into()));
        }
        let mut parts = Vec::with_capacity(self.depth() + 1);
        parts.push(part);
        parts.extend_from_slice(&self.0);
        Ok(Composition(parts))
    }
}

/// Length-first, then lexicographic on parts; the canonical term order for
/// z-alphabet polynomials.
impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.depth()
            .cmp(&other.depth())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Grammar: comma-separated parts, each either an integer or the
    /// repetition macro `{k}^r`. Whitespace is ignored; the empty string
    /// (and `()`) is the empty composition.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_ascii_whitespace()).collect();
        if compact.is_empty() || compact == "()" {
            return Ok(Composition::empty());
        }
        let mut parts: Vec<u32> = Vec::new();
        for token in compact.split(',') {
            if token.is_empty() {
                return Err(Error::Parse(format!("empty part in composition `{s}`")));
            }
            let (part, times) = if let Some(rest) = token.strip_prefix('{') {
                let (inner, exp) = rest.split_once("}^").ok_or_else(|| {
                    Error::Parse(format!("malformed repetition `{token}` (expected {{k}}^r)"))
                })?;
                let part: u32 = inner.parse().map_err(|_| {
                    Error::Parse(format!("invalid part `{inner}` in `{token}`"))
                })?;
                let times: usize = exp.parse().map_err(|_| {
                    Error::Parse(format!("invalid repetition count `{exp}` in `{token}`"))
                })?;
                (part, times)
            } else {
                let part: u32 = token
                    .parse()
                    .map_err(|_| Error::Parse(format!("invalid part `{token}`")))?;
                (part, 1)
            };
            if part == 0 {
                return Err(Error::Parse("composition parts must be >= 1".into()));
            }
            if parts.len() + times > MAX_PARSED_PARTS {
                return Err(Error::Parse(format!(
                    "composition expands to more than {MAX_PARSED_PARTS} parts"
                )));
            }
            parts.extend(std::iter::repeat(part).take(times));
        }
        Ok(Composition(parts))
    }
}

/// Encode a composition as a word: each part `k` becomes `x^{k-1} y`.
pub fn encode_z(c: &Composition) -> Word {
    let mut letters = Vec::with_capacity(c.weight() as usize);
    for &k in c.parts() {
        for _ in 0..k - 1 {
            letters.push(Letter::X);
        }
        letters.push(Letter::Y);
    }
    Word::new(letters)
}

/// Decode a word of `Q + H·y` into the unique composition encoding it.
/// Words ending in `x` are rejected.
pub fn decode_z(w: &Word) -> Result<Composition> {
    if w.last() == Some(Letter::X) {
        return Err(Error::NotZDecodable(w.to_string()));
    }
    let mut parts = Vec::new();
    let mut run = 0u32;
    for &l in w.letters() {
        match l {
            Letter::X => run += 1,
            Letter::Y => {
                parts.push(run + 1);
                run = 0;
            }
        }
    }
    Ok(Composition(parts))
}
