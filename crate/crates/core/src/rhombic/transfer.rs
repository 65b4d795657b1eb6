//! Recovers the transfer matrices from tableau enumeration: appending a
//! letter to a word extends each filling, and the total weight gained,
//! sorted by the new row index, must reproduce a row of `D`, `A_s` or `E`.

use std::collections::BTreeMap;

use crate::ansatz::{row, IndexTuple, Op, SparseVec};
use crate::pasep::{Letter, Word};
use crate::polyring::LaurentPoly;
use crate::rhombic::filling::{enumerate_fillings, Filling, Symbol};

/// A filling of `word` whose extensions do not match the matrix row.
#[derive(Clone, Debug)]
pub struct TransferMismatch {
    pub word: Word,
    pub letter: Letter,
    pub row: IndexTuple,
    pub expected: SparseVec,
    pub found: SparseVec,
}

fn index_of(f: &Filling, k: usize) -> IndexTuple {
    let j = (1..k).map(|s| f.word().count(Letter::A(s as u8))).collect();
    IndexTuple::new(f.free_d_strips(), j)
}

/// Compares every filling of `w` against the row of the matrix for
/// `letter`; an empty result means every row matched.
pub fn transfer_check(w: &Word, letter: Letter, k: usize) -> Vec<TransferMismatch> {
    let n = w.len();
    let mut extended = w.0.clone();
    extended.push(letter);
    let mut by_restriction: BTreeMap<BTreeMap<(usize, usize), Symbol>, Vec<Filling>> = BTreeMap::new();
    for g in enumerate_fillings(&Word(extended)) {
        let restricted = g
            .symbols()
            .iter()
            .filter(|(t, _)| t.1 < n)
            .map(|(&t, &s)| (t, s))
            .collect();
        by_restriction.entry(restricted).or_default().push(g);
    }
    let boundary = if matches!(letter, Letter::D | Letter::E) {
        LaurentPoly::abq(1, 1, 0)
    } else {
        LaurentPoly::one()
    };
    let op = Op::of(letter);
    let mut out = Vec::new();
    for f in enumerate_fillings(w) {
        let idx = index_of(&f, k);
        let (a, b, q) = f.exponents();
        let mut found = SparseVec::new();
        for g in by_restriction.get(f.symbols()).into_iter().flatten() {
            let (a2, b2, q2) = g.exponents();
            *found.entry(index_of(g, k)).or_default() += &LaurentPoly::abq(a2 - a, b2 - b, q2 - q);
        }
        let expected: SparseVec = row(op, &idx)
            .into_iter()
            .map(|(col, v)| (col, &boundary * &v))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        if found != expected {
            out.push(TransferMismatch {
                word: w.clone(),
                letter,
                row: idx,
                expected,
                found,
            });
        }
    }
    out
}
