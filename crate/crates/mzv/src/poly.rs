//! Formal linear combinations of monomials with exact rational
//! coefficients, kept in normal form (no zero coefficient is ever stored).
//!
//! [`WordPoly`] is an element of `Q<x, y>`; [`ZPoly`] an element of the
//! free algebra on the z-alphabet. Serialization uses the canonical term
//! order (length first, then lexicographic) with the leading term printed
//! first.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::word::Word;

/// A monomial of a free algebra: a word of some free monoid.
pub trait Monomial: Ord + Clone {
    /// The empty word / unit monomial.
    fn unit() -> Self;
    fn is_unit(&self) -> bool;
    /// Monoid concatenation.
    fn concat(&self, other: &Self) -> Self;
    /// The single-letter factors, in order.
    fn factors(&self) -> Vec<Self>;
    /// Term text inside a polynomial.
    fn render(&self) -> String;
    /// Parse term text back into a monomial.
    fn parse_key(s: &str) -> Result<Self>;
    /// Whether the unit monomial is written as a bare coefficient (`3`)
    /// rather than with an explicit token (`3*()`).
    const UNIT_AS_COEFF: bool;
}

impl Monomial for Word {
    fn unit() -> Self {
        Word::empty()
    }

    fn is_unit(&self) -> bool {
        self.is_empty()
    }

    fn concat(&self, other: &Self) -> Self {
        Word::concat(self, other)
    }

    fn factors(&self) -> Vec<Self> {
        self.letters().iter().map(|&l| Word::new(vec![l])).collect()
    }

    fn render(&self) -> String {
        self.to_string()
    }

    fn parse_key(s: &str) -> Result<Self> {
        s.parse()
    }

    const UNIT_AS_COEFF: bool = true;
}

impl Monomial for Composition {
    fn unit() -> Self {
        Composition::empty()
    }

    fn is_unit(&self) -> bool {
        self.is_empty()
    }

    fn concat(&self, other: &Self) -> Self {
        Composition::concat(self, other)
    }

    fn factors(&self) -> Vec<Self> {
        self.parts()
            .iter()
            .map(|&p| Composition::new(vec![p]).expect("parts are valid"))
            .collect()
    }

    fn render(&self) -> String {
        if self.is_empty() {
            // distinguish the unit from the one-part composition `1`
            "()".to_string()
        } else {
            self.to_string()
        }
    }

    fn parse_key(s: &str) -> Result<Self> {
        s.parse()
    }

    const UNIT_AS_COEFF: bool = false;
}

/// A finite linear combination of monomials over `Q`, in normal form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly<M: Monomial> {
    terms: BTreeMap<M, Rational>,
}

/// Element of `Q<x, y>`.
pub type WordPoly = Poly<Word>;
/// Element of the free algebra on z-letters, i.e. a combination of
/// compositions.
pub type ZPoly = Poly<Composition>;

impl<M: Monomial> Poly<M> {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    /// The unit polynomial `1`.
    pub fn one() -> Self {
        Self::monomial(M::unit())
    }

    /// A single monomial with coefficient 1.
    pub fn monomial(m: M) -> Self {
        Self::term(m, Rational::one())
    }

    /// A single term `coeff * m`; collapses to zero if `coeff == 0`.
    pub fn term(m: M, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(m, coeff);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `m` (zero if absent).
    pub fn coeff(&self, m: &M) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&M, &Rational)> {
        self.terms.iter()
    }

    /// Add `coeff * m` in place, preserving normal form.
    pub fn add_term(&mut self, m: M, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }

    /// `r * self`.
    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * r))
                .collect(),
        }
    }

    /// Left-multiply every monomial by `m` (coefficients unchanged).
    /// Order is preserved, so the map rebuilds without re-sorting.
    pub fn prepend(&self, m: &M) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (m.concat(k), c.clone()))
                .collect(),
        }
    }

    /// Apply a monomial map termwise, merging any collisions.
    pub fn map_monomials<N: Monomial>(&self, f: impl Fn(&M) -> N) -> Poly<N> {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }

    /// Sum of all coefficients (the image under "every monomial -> 1").
    pub fn coefficient_sum(&self) -> Rational {
        let mut sum = Rational::zero();
        for c in self.terms.values() {
            sum += c;
        }
        sum
    }

    fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        // leading (largest) term first
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c < &Rational::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if m.is_unit() && M::UNIT_AS_COEFF {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&m.render());
            } else {
                out.push_str(&abs.to_string());
                out.push('*');
                out.push_str(&m.render());
            }
        }
        out
    }
}

impl<M: Monomial> Add for Poly<M> {
    type Output = Poly<M>;

    fn add(mut self, rhs: Poly<M>) -> Poly<M> {
        self.add_assign(&rhs);
        self
    }
}

impl<M: Monomial> Sub for Poly<M> {
    type Output = Poly<M>;

    fn sub(mut self, rhs: Poly<M>) -> Poly<M> {
        self.sub_assign(&rhs);
        self
    }
}

impl<M: Monomial> Neg for Poly<M> {
    type Output = Poly<M>;

    fn neg(self) -> Poly<M> {
        Poly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

/// Concatenation product, extended bilinearly.
impl<M: Monomial> Mul for &Poly<M> {
    type Output = Poly<M>;

    fn mul(self, rhs: &Poly<M>) -> Poly<M> {
        let mut out = Poly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.concat(b), ca * cb);
            }
        }
        out
    }
}

impl<M: Monomial> fmt::Display for Poly<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<M: Monomial> FromStr for Poly<M> {
    type Err = Error;

    /// Parse `[-] term ((+|-) term)*` where a term is `coeff`, `key`, or
    /// `coeff*key`, and `coeff` is an integer or `a/b`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_ascii_whitespace()).collect();
        if compact.is_empty() || compact == "0" {
            return Ok(Poly::zero());
        }
        let mut poly = Poly::zero();
        let mut rest: &str = &compact;
        let mut sign = Rational::one();
        if let Some(r) = rest.strip_prefix('-') {
            sign = -sign;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        }
        loop {
            let split = rest.find(['+', '-']);
            let (token, remainder) = match split {
                Some(i) => (&rest[..i], Some(&rest[i..])),
                None => (rest, None),
            };
            if token.is_empty() {
                return Err(Error::Parse(format!("empty term in polynomial `{s}`")));
            }
            let (coeff, key) = parse_term::<M>(token)?;
            poly.add_term(key, coeff * &sign);
            match remainder {
                None => break,
                Some(r) => {
                    sign = if r.starts_with('-') {
                        -Rational::one()
                    } else {
                        Rational::one()
                    };
                    rest = &r[1..];
                }
            }
        }
        Ok(poly)
    }
}

fn parse_term<M: Monomial>(token: &str) -> Result<(Rational, M)> {
    if let Some((c, k)) = token.split_once('*') {
        let coeff: Rational = c
            .parse()
            .map_err(|_| Error::Parse(format!("invalid coefficient `{c}`")))?;
        if k.is_empty() {
            return Err(Error::Parse(format!("missing monomial after `{c}*`")));
        }
        return Ok((coeff, M::parse_key(k)?));
    }
    // bare token: a monomial, or (for alphabets that print the unit as a
    // bare coefficient) a rational constant
    match M::parse_key(token) {
        Ok(k) => Ok((Rational::one(), k)),
        Err(key_err) => {
            if M::UNIT_AS_COEFF {
                let coeff: Rational = token.parse().map_err(|_| key_err)?;
                Ok((coeff, M::unit()))
            } else if let Ok(coeff) = token.parse::<Rational>() {
                // a slashed constant like `3/4` in z-alphabet text
                Ok((coeff, M::unit()))
            } else {
                Err(key_err)
            }
        }
    }
}

/// Linear extension of the z-encoding `z_k -> x^{k-1} y`.
pub fn encode_zpoly(p: &ZPoly) -> WordPoly {
    p.map_monomials(crate::composition::encode_z)
}

/// Termwise decoding of a polynomial all of whose words lie in `Q + H·y`.
pub fn decode_zpoly(p: &WordPoly) -> Result<ZPoly> {
    let mut out = ZPoly::zero();
    for (w, c) in p.iter() {
        out.add_term(crate::composition::decode_z(w)?, c.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn wp(s: &str) -> WordPoly {
        s.parse().unwrap()
    }

    fn zp(s: &str) -> ZPoly {
        s.parse().unwrap()
    }

    #[test]
    fn addition_cancels_to_normal_form() {
        let p = WordPoly::term(w("xy"), rat(2)) + WordPoly::term(w("xy"), rat(-2));
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn scale_and_concat() {
        let p = WordPoly::monomial(w("xxyy")).scale(&rat(4));
        assert_eq!(p.to_string(), "4*xxyy");
        let q = WordPoly::monomial(w("xyxy")).prepend(&w("y"));
        assert_eq!(q.to_string(), "yxyxy");
        let product = &WordPoly::monomial(w("y")) * &WordPoly::monomial(w("xyxy"));
        assert_eq!(product.to_string(), "yxyxy");
    }

    #[test]
    fn display_leading_term_first() {
        let mut p = WordPoly::zero();
        p.add_term(w("xxyy"), rat(4));
        p.add_term(w("xyxy"), rat(2));
        assert_eq!(p.to_string(), "2*xyxy + 4*xxyy");

        let mut q = WordPoly::zero();
        q.add_term(w("xy"), rat(1));
        q.add_term(w("yx"), rat(-1));
        assert_eq!(q.to_string(), "-yx + xy");
    }

    #[test]
    fn display_units_and_fractions() {
        assert_eq!(WordPoly::one().to_string(), "1");
        assert_eq!(WordPoly::term(Word::empty(), rat(-3)).to_string(), "-3");
        assert_eq!(
            WordPoly::term(w("xy"), Rational::new(1.into(), 2.into())).to_string(),
            "1/2*xy"
        );
        assert_eq!(ZPoly::one().to_string(), "()");
        assert_eq!(ZPoly::term(Composition::empty(), rat(3)).to_string(), "3*()");
        assert_eq!(ZPoly::monomial(c("3,1")).scale(&rat(4)).to_string(), "4*3,1");
    }

    #[test]
    fn parse_round_trips() {
        for s in [
            "2*xyxy + 4*xxyy",
            "-yx + xy",
            "1",
            "0",
            "1/2*xy - 3",
            "xy",
        ] {
            let p = wp(s);
            assert_eq!(wp(&p.to_string()), p, "word poly `{s}`");
        }
        for s in ["3,2,1 + 3,1,2 + 2,3,1", "4*3,1 + 2*2,2", "()", "3*()", "-1,2 + 2,1"] {
            let p = zp(s);
            assert_eq!(zp(&p.to_string()), p, "z poly `{s}`");
        }
    }

    #[test]
    fn parse_bare_integer_in_z_alphabet_is_a_composition() {
        let p = zp("2");
        assert_eq!(p, ZPoly::monomial(c("2")));
        // constants need the explicit unit token
        assert_eq!(zp("2*()"), ZPoly::term(Composition::empty(), rat(2)));
    }

    #[test]
    fn parse_rejections() {
        assert!("2**xy".parse::<WordPoly>().is_err());
        assert!("xz".parse::<WordPoly>().is_err());
        assert!("+".parse::<WordPoly>().is_err());
        assert!("2*".parse::<WordPoly>().is_err());
        assert!("1,0".parse::<ZPoly>().is_err());
    }

    #[test]
    fn encode_decode_polys() {
        let p = ZPoly::term(c("2"), rat(2)) + ZPoly::term(c("3,1"), rat(3));
        assert_eq!(encode_zpoly(&p).to_string(), "3*xxyy + 2*xy");
        assert_eq!(decode_zpoly(&encode_zpoly(&p)).unwrap(), p);
        assert!(decode_zpoly(&WordPoly::monomial(w("yx"))).is_err());
        assert!(encode_zpoly(&ZPoly::zero()).is_zero());
    }

    #[test]
    fn coefficient_sum() {
        let p = wp("2*xyxy + 4*xxyy");
        assert_eq!(p.coefficient_sum(), rat(6));
    }
}
