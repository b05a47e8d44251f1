//! The two shuffle products: on `{x, y}`-words and on z-alphabet words
//! (z-letters stay atomic).
//!
//! Both satisfy the same recursion
//! `a·u sh b·v = a·(u sh b·v) + b·(a·u sh v)` with `1 sh w = w sh 1 = w`,
//! extended bilinearly. Monomial pairs are expanded by a suffix-pair table
//! (the memoized form of the recursion): entry `(i, j)` holds the shuffle
//! of the suffixes `u[i..]` and `v[j..]`, filled from the ends of both
//! words, two rows at a time.

use crate::composition::Composition;
use crate::poly::{Monomial, Poly, WordPoly, ZPoly};
use crate::word::Word;

/// Shuffle of two monomials.
pub fn shuffle_monomials<M: Monomial>(u: &M, v: &M) -> Poly<M> {
    let uf = u.factors();
    let vf = v.factors();
    // row for i = |u|: suffixes of v alone
    let mut below: Vec<Poly<M>> = Vec::with_capacity(vf.len() + 1);
    for j in 0..=vf.len() {
        below.push(Poly::monomial(concat_all(&vf[j..])));
    }
    for i in (0..uf.len()).rev() {
        let mut row: Vec<Poly<M>> = vec![Poly::zero(); vf.len() + 1];
        row[vf.len()] = Poly::monomial(concat_all(&uf[i..]));
        for j in (0..vf.len()).rev() {
            let mut cell = below[j].prepend(&uf[i]);
            cell.add_assign(&row[j + 1].prepend(&vf[j]));
            row[j] = cell;
        }
        below = row;
    }
    below.swap_remove(0)
}

fn concat_all<M: Monomial>(factors: &[M]) -> M {
    factors
        .iter()
        .fold(M::unit(), |acc, f| acc.concat(f))
}

fn shuffle_bilinear<M: Monomial>(a: &Poly<M>, b: &Poly<M>) -> Poly<M> {
    let mut out = Poly::zero();
    for (u, cu) in a.iter() {
        for (v, cv) in b.iter() {
            out.add_assign(&shuffle_monomials(u, v).scale(&(cu * cv)));
        }
    }
    out
}

/// Shuffle of two `{x, y}`-words.
pub fn shuffle_words(u: &Word, v: &Word) -> WordPoly {
    shuffle_monomials(u, v)
}

/// Shuffle product on `Q<x, y>`.
pub fn shuffle_xy(a: &WordPoly, b: &WordPoly) -> WordPoly {
    shuffle_bilinear(a, b)
}

/// Shuffle of two z-alphabet words; parts are never split into letters.
pub fn shuffle_compositions(u: &Composition, v: &Composition) -> ZPoly {
    shuffle_monomials(u, v)
}

/// Shuffle product on z-alphabet polynomials.
pub fn shuffle_z(a: &ZPoly, b: &ZPoly) -> ZPoly {
    shuffle_bilinear(a, b)
}
