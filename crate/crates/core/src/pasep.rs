//! The k-species PASEP on `n` sites with open boundaries, as an explicit
//! finite Markov chain on one sector at a time.
//!
//! Letters are ordered `d < a1 < ... < a(k-1) < e`; this is also the order
//! used to sort states. A species `x` followed by `y` with `x` heavier than
//! `y` in the order `e < a1 < ... < a(k-1) < d` swaps at rate 1; the reverse
//! swap happens at the corresponding `q` parameter. A `d` enters at site 1
//! by replacing an `e` at rate `alpha` and leaves at site `n` at rate `beta`.
//! Every rate is a numerator over `n + 1`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyring::{LaurentPoly, Rational};

/// A particle species or hole.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    D,
    /// Intermediate species `a_s`, `1 <= s <= k - 1`.
    A(u8),
    E,
}

impl Letter {
    /// Position in the sorted boundary order `e < a1 < ... < d`, where `d`
    /// is given the value `u8::MAX`.
    pub fn class(self) -> u8 {
        match self {
            Letter::E => 0,
            Letter::A(s) => s,
            Letter::D => u8::MAX,
        }
    }

    /// True when `self` at some position and `other` at a later one cross.
    pub fn crosses(self, other: Letter) -> bool {
        self.class() > other.class()
    }

    pub fn is_a(self) -> bool {
        matches!(self, Letter::A(_))
    }

    fn valid_for(self, k: usize) -> bool {
        match self {
            Letter::A(s) => s >= 1 && (s as usize) < k,
            _ => true,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::D => f.write_str("d"),
            Letter::E => f.write_str("e"),
            Letter::A(s) => write!(f, "a{s}"),
        }
    }
}

/// A configuration of the lattice, read left to right.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    /// Smallest `k` for which every letter is valid.
    pub fn min_k(&self) -> usize {
        self.0
            .iter()
            .map(|l| match l {
                Letter::A(s) => *s as usize + 1,
                _ => 1,
            })
            .max()
            .unwrap_or(1)
    }

    /// Counts `(r_1, ..., r_{k-1})` of each intermediate species.
    pub fn sector(&self, k: usize) -> Sector {
        Sector((1..k).map(|s| self.count(Letter::A(s as u8))).collect())
    }

    /// Fails if some letter is not valid for `k` species.
    pub fn check_k(&self, k: usize) -> Result<()> {
        if k == 0 {
            return Err(Error::InvalidWord("k must be at least 1".into()));
        }
        match self.0.iter().find(|l| !l.valid_for(k)) {
            Some(l) => Err(Error::InvalidWord(format!("letter {l} is not valid for k = {k}"))),
            None => Ok(()),
        }
    }

    /// Reverses the word and exchanges `d` with `e`.
    pub fn reversal_dual(&self) -> Word {
        Word(
            self.0
                .iter()
                .rev()
                .map(|&l| match l {
                    Letter::D => Letter::E,
                    Letter::E => Letter::D,
                    a => a,
                })
                .collect(),
        )
    }
}

impl fmt::Display for Word {
    /// Writes `a` for `a1` when no other intermediate species occurs.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let plain_a = self.0.iter().all(|l| !matches!(l, Letter::A(s) if *s != 1));
        for l in &self.0 {
            match l {
                Letter::A(1) if plain_a => f.write_str("a")?,
                other => write!(f, "{other}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts `d`, `e`, `a` (same as `a1`) and `a1` through `a9`.
    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut chars = s.trim().chars().peekable();
        while let Some(c) = chars.next() {
            let letter = match c {
                'd' => Letter::D,
                'e' => Letter::E,
                'a' => match chars.peek().and_then(|c| c.to_digit(10)) {
                    Some(0) => return Err(Error::InvalidWord(format!("`{s}`: no species a0"))),
                    Some(digit) => {
                        chars.next();
                        Letter::A(digit as u8)
                    }
                    None => Letter::A(1),
                },
                other => return Err(Error::InvalidWord(format!("`{s}`: unexpected character `{other}`"))),
            };
            letters.push(letter);
        }
        if letters.is_empty() {
            return Err(Error::InvalidWord("empty word".into()));
        }
        Ok(Word(letters))
    }
}

/// Counts `(r_1, ..., r_{k-1})` of the intermediate species.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sector(pub Vec<usize>);

impl Sector {
    pub fn k(&self) -> usize {
        self.0.len() + 1
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if n == 0 || self.total() > n {
            return Err(Error::InfeasibleSector {
                n,
                k: self.k(),
                sector: self.0.clone(),
            });
        }
        Ok(())
    }
}

impl FromStr for Sector {
    type Err = Error;

    /// Comma-separated counts; the empty string is the one-species sector.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Sector(Vec::new()));
        }
        s.split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("invalid sector `{s}`")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Sector)
    }
}

/// Every feasible sector for `n` sites and `k` species, in lexicographic
/// order.
pub fn sectors(n: usize, k: usize) -> Vec<Sector> {
    fn go(slots: usize, left: usize, current: &mut Vec<usize>, out: &mut Vec<Sector>) {
        if current.len() == slots {
            out.push(Sector(current.clone()));
            return;
        }
        for c in 0..=left {
            current.push(c);
            go(slots, left - c, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(k.saturating_sub(1), n, &mut Vec::new(), &mut out);
    out
}

/// All words of length `n` in the sector, in lexicographic order.
pub fn sector_states(n: usize, sector: &Sector) -> Result<Vec<Word>> {
    sector.check(n)?;
    let mut remaining = sector.0.clone();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    fill_states(n, &mut remaining, &mut current, &mut out);
    Ok(out)
}

fn fill_states(n: usize, remaining: &mut [usize], current: &mut Vec<Letter>, out: &mut Vec<Word>) {
    let left = n - current.len();
    let needed: usize = remaining.iter().sum();
    if left == 0 {
        out.push(Word(current.clone()));
        return;
    }
    if left > needed {
        current.push(Letter::D);
        fill_states(n, remaining, current, out);
        current.pop();
    }
    for s in 0..remaining.len() {
        if remaining[s] > 0 {
            remaining[s] -= 1;
            current.push(Letter::A(s as u8 + 1));
            fill_states(n, remaining, current, out);
            current.pop();
            remaining[s] += 1;
        }
    }
    if left > needed {
        current.push(Letter::E);
        fill_states(n, remaining, current, out);
        current.pop();
    }
}

/// The label of a transition, independent of numeric parameter values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RateLabel {
    One,
    Alpha,
    Beta,
    /// Reverse swap of the two classes, stored heavier first.
    Swap(Letter, Letter),
}

impl RateLabel {
    /// The label as a polynomial when every swap parameter equals `q`.
    pub fn symbolic(self) -> LaurentPoly {
        match self {
            RateLabel::One => LaurentPoly::one(),
            RateLabel::Alpha => LaurentPoly::alpha(),
            RateLabel::Beta => LaurentPoly::beta(),
            RateLabel::Swap(..) => LaurentPoly::q(),
        }
    }
}

/// Every move out of `w`: bulk swaps left to right, then entry, then exit.
pub fn moves(w: &Word) -> Vec<(Word, RateLabel)> {
    let letters = w.letters();
    let n = letters.len();
    let mut out = Vec::new();
    for p in 0..n.saturating_sub(1) {
        let (x, y) = (letters[p], letters[p + 1]);
        if x == y {
            continue;
        }
        let mut next = letters.to_vec();
        next.swap(p, p + 1);
        let label = if x.crosses(y) {
            RateLabel::One
        } else {
            RateLabel::Swap(y, x)
        };
        out.push((Word(next), label));
    }
    if letters.first() == Some(&Letter::E) {
        let mut next = letters.to_vec();
        next[0] = Letter::D;
        out.push((Word(next), RateLabel::Alpha));
    }
    if letters.last() == Some(&Letter::D) {
        let mut next = letters.to_vec();
        next[n - 1] = Letter::E;
        out.push((Word(next), RateLabel::Beta));
    }
    out
}

/// Entry, exit and swap rates of the k-species PASEP.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RateParams {
    pub alpha: Rational,
    pub beta: Rational,
    pub q0inf: Rational,
    pub q0i: BTreeMap<u8, Rational>,
    pub qiinf: BTreeMap<u8, Rational>,
    /// Keyed by `(i, j)` with `i > j`.
    pub qij: BTreeMap<(u8, u8), Rational>,
}

impl RateParams {
    /// Every swap parameter set to `q`.
    pub fn uniform(k: usize, alpha: Rational, beta: Rational, q: Rational) -> Self {
        let species = 1..k as u8;
        RateParams {
            alpha,
            beta,
            q0inf: q.clone(),
            q0i: species.clone().map(|s| (s, q.clone())).collect(),
            qiinf: species.clone().map(|s| (s, q.clone())).collect(),
            qij: species
                .clone()
                .flat_map(|i| (1..i).map(move |j| (i, j)))
                .map(|key| (key, q.clone()))
                .collect(),
        }
    }

    /// Checks ranges and that every parameter needed for `k` species exists.
    pub fn validate(&self, k: usize) -> Result<()> {
        let unit = |r: &Rational| *r >= Rational::zero() && *r <= Rational::one();
        for (name, v) in [("alpha", &self.alpha), ("beta", &self.beta)] {
            if v.is_zero() || !unit(v) {
                return Err(Error::InvalidRate(format!("{name} = {v} is outside (0, 1]")));
            }
        }
        for s in 1..k as u8 {
            self.swap_rate(Letter::D, Letter::A(s))?;
            self.swap_rate(Letter::A(s), Letter::E)?;
            for j in 1..s {
                self.swap_rate(Letter::A(s), Letter::A(j))?;
            }
        }
        let all = std::iter::once(&self.q0inf)
            .chain(self.q0i.values())
            .chain(self.qiinf.values())
            .chain(self.qij.values());
        for v in all {
            if !unit(v) {
                return Err(Error::InvalidRate(format!("swap rate {v} is outside [0, 1]")));
            }
        }
        Ok(())
    }

    /// Rate of the reverse swap between two distinct classes, given in
    /// either order.
    pub fn swap_rate(&self, x: Letter, y: Letter) -> Result<Rational> {
        let (hi, lo) = if x.class() > y.class() { (x, y) } else { (y, x) };
        let missing = || Error::InvalidRate(format!("no swap rate for the pair {hi}{lo}"));
        match (hi, lo) {
            (Letter::D, Letter::E) => Ok(self.q0inf.clone()),
            (Letter::D, Letter::A(s)) => self.q0i.get(&s).cloned().ok_or_else(missing),
            (Letter::A(s), Letter::E) => self.qiinf.get(&s).cloned().ok_or_else(missing),
            (Letter::A(i), Letter::A(j)) if i != j => self.qij.get(&(i, j)).cloned().ok_or_else(missing),
            _ => Err(missing()),
        }
    }

    pub fn rate(&self, label: RateLabel) -> Result<Rational> {
        match label {
            RateLabel::One => Ok(Rational::one()),
            RateLabel::Alpha => Ok(self.alpha.clone()),
            RateLabel::Beta => Ok(self.beta.clone()),
            RateLabel::Swap(x, y) => self.swap_rate(x, y),
        }
    }

    /// Exchanges `alpha` and `beta`.
    pub fn swap_boundaries(&self) -> Self {
        RateParams {
            alpha: self.beta.clone(),
            beta: self.alpha.clone(),
            ..self.clone()
        }
    }
}

/// Outgoing moves of `w` with numeric rates (numerators over `n + 1`).
pub fn out_transitions(w: &Word, params: &RateParams) -> Result<Vec<(Word, Rational)>> {
    moves(w)
        .into_iter()
        .map(|(next, label)| Ok((next, params.rate(label)?)))
        .collect()
}

/// An explicit finite Markov chain. Each transition `(i, j)` has
/// probability `trans[(i, j)] / denom`, and each state keeps the remaining
/// probability as a self-loop.
#[derive(Clone, Debug)]
pub struct ChainSystem<S> {
    pub states: Vec<S>,
    pub trans: BTreeMap<(usize, usize), Rational>,
    pub denom: u64,
}

impl<S> ChainSystem<S> {
    /// Builds a chain, merging parallel transitions and dropping zero rates
    /// and self-loops.
    pub fn new(states: Vec<S>, edges: impl IntoIterator<Item = (usize, usize, Rational)>, denom: u64) -> Self {
        let mut trans: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for (from, to, rate) in edges {
            if from != to {
                *trans.entry((from, to)).or_insert_with(Rational::zero) += rate;
            }
        }
        trans.retain(|_, r| !r.is_zero());
        ChainSystem { states, trans, denom }
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Total outgoing rate of each state.
    pub fn out_rates(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.len()];
        for ((from, _), r) in &self.trans {
            out[*from] += r;
        }
        out
    }

    /// True when every row's off-diagonal mass is at most 1.
    pub fn is_stochastic(&self) -> bool {
        let cap = Rational::from_integer(self.denom.into());
        self.out_rates().iter().all(|r| *r <= cap) && self.trans.values().all(|r| *r > Rational::zero())
    }

    /// Strong connectivity of the positive-rate transition graph.
    pub fn is_irreducible(&self) -> bool {
        let n = self.len();
        if n <= 1 {
            return true;
        }
        let mut fwd = vec![Vec::new(); n];
        let mut bwd = vec![Vec::new(); n];
        for &(a, b) in self.trans.keys() {
            fwd[a].push(b);
            bwd[b].push(a);
        }
        let reach_all = |adj: &[Vec<usize>]| {
            let mut seen = vec![false; n];
            seen[0] = true;
            let mut queue = VecDeque::from([0]);
            let mut count = 1;
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        count += 1;
                        queue.push_back(w);
                    }
                }
            }
            count == n
        };
        reach_all(&fwd) && reach_all(&bwd)
    }

    /// `pi P - pi` for a candidate vector `pi`, using rates in place of
    /// probabilities (the common factor `1 / denom` is dropped).
    pub fn balance_residual(&self, pi: &[Rational]) -> Vec<Rational> {
        let mut res = vec![Rational::zero(); self.len()];
        for ((from, to), r) in &self.trans {
            let flow = &pi[*from] * r;
            res[*to] += &flow;
            res[*from] -= flow;
        }
        res
    }

    /// True when `pi` is a probability vector fixed by the chain.
    pub fn is_stationary(&self, pi: &[Rational]) -> bool {
        pi.len() == self.len()
            && pi.iter().sum::<Rational>().is_one()
            && self.balance_residual(pi).iter().all(Zero::is_zero)
    }

    /// The unique stationary distribution, by exact Gaussian elimination.
    pub fn stationary(&self) -> Result<Vec<Rational>> {
        if !self.is_irreducible() {
            return Err(Error::Reducible);
        }
        let n = self.len();
        // Columns of the generator as rows; the last is replaced by sum(pi) = 1.
        let mut m = vec![vec![Rational::zero(); n + 1]; n];
        for ((from, to), r) in &self.trans {
            m[*to][*from] += r;
            m[*from][*from] -= r;
        }
        m[n - 1] = vec![Rational::one(); n + 1];
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[r][col].is_zero()).ok_or(Error::Reducible)?;
            m.swap(col, pivot);
            let inv = m[col][col].recip();
            for x in m[col][col..].iter_mut().filter(|x| !x.is_zero()) {
                *x *= &inv;
            }
            let (head, tail) = m.split_at_mut(col);
            let (prow, rest) = tail.split_first_mut().expect("col < n");
            let nonzero: Vec<usize> = (col..=n).filter(|&c| !prow[c].is_zero()).collect();
            for row in head.iter_mut().chain(rest.iter_mut()) {
                if row[col].is_zero() {
                    continue;
                }
                let f = row[col].clone();
                for &c in &nonzero {
                    let delta = &f * &prow[c];
                    row[c] -= delta;
                }
            }
        }
        Ok(m.into_iter().map(|row| row[n].clone()).collect())
    }
}

/// The PASEP restricted to one sector.
pub fn build_chain(n: usize, sector: &Sector, params: &RateParams) -> Result<ChainSystem<Word>> {
    let k = sector.k();
    params.validate(k)?;
    let states = sector_states(n, sector)?;
    let index: BTreeMap<&Word, usize> = states.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut edges = Vec::new();
    for (i, w) in states.iter().enumerate() {
        for (next, rate) in out_transitions(w, params)? {
            edges.push((i, index[&next], rate));
        }
    }
    let chain = ChainSystem::new(states.clone(), edges, n as u64 + 1);
    debug_assert!(chain.is_stochastic());
    Ok(chain)
}

/// Exact stationary probabilities of every state in the sector.
pub fn stationary_exact(n: usize, sector: &Sector, params: &RateParams) -> Result<BTreeMap<Word, Rational>> {
    let chain = build_chain(n, sector, params)?;
    let pi = chain.stationary()?;
    Ok(chain.states.into_iter().zip(pi).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rat;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn q_params(k: usize) -> RateParams {
        RateParams::uniform(k, rat(1, 2), rat(1, 3), rat(1, 5))
    }

    #[test]
    fn word_round_trip() {
        assert_eq!(w("daae").to_string(), "daae");
        assert_eq!(w("a2da1e").to_string(), "a2da1e");
        assert_eq!(w("a1d"), w("ad"));
        assert!("dxe".parse::<Word>().is_err());
        assert!("a0".parse::<Word>().is_err());
        assert!(w("a3").check_k(3).is_err());
    }

    #[test]
    fn sector_state_counts() {
        let s = sector_states(2, &Sector(vec![1])).unwrap();
        assert_eq!(s, vec![w("da"), w("ad"), w("ae"), w("ea")]);
        assert_eq!(sector_states(4, &Sector(vec![1])).unwrap().len(), 32);
        assert_eq!(sector_states(1, &Sector(vec![])).unwrap(), vec![w("d"), w("e")]);
        assert!(sector_states(2, &Sector(vec![3])).is_err());
        assert_eq!(sector_states(4, &Sector(vec![1, 1])).unwrap().len(), 48);
    }

    #[test]
    fn sectors_cover_all_words() {
        assert_eq!(sectors(3, 1), vec![Sector(vec![])]);
        assert_eq!(sectors(2, 2).len(), 3);
        assert_eq!(sectors(2, 3).len(), 6);
        let total: usize = sectors(4, 3).iter().map(|s| sector_states(4, s).unwrap().len()).sum();
        assert_eq!(total, 4usize.pow(4));
    }

    #[test]
    fn transitions_single_species() {
        let p = RateParams::uniform(1, rat(1, 2), rat(1, 3), rat(1, 5));
        assert_eq!(
            out_transitions(&w("ed"), &p).unwrap(),
            vec![(w("de"), rat(1, 5)), (w("dd"), rat(1, 2)), (w("ee"), rat(1, 3))]
        );
        assert_eq!(out_transitions(&w("de"), &p).unwrap(), vec![(w("ed"), rat(1, 1))]);
    }

    #[test]
    fn transitions_between_intermediate_species() {
        let mut p = RateParams::uniform(3, rat(1, 1), rat(1, 1), rat(1, 2));
        p.qij.insert((2, 1), rat(1, 7));
        assert_eq!(out_transitions(&w("a1a2"), &p).unwrap(), vec![(w("a2a1"), rat(1, 7))]);
        assert_eq!(out_transitions(&w("a2a1"), &p).unwrap(), vec![(w("a1a2"), rat(1, 1))]);
    }

    #[test]
    fn distinct_rates_are_looked_up_by_pair() {
        let mut p = RateParams::uniform(2, rat(1, 1), rat(1, 1), rat(0, 1));
        p.q0i.insert(1, rat(1, 2));
        p.qiinf.insert(1, rat(1, 3));
        p.q0inf = rat(1, 4);
        assert_eq!(out_transitions(&w("ad"), &p).unwrap()[0], (w("da"), rat(1, 2)));
        assert_eq!(out_transitions(&w("ea"), &p).unwrap()[0], (w("ae"), rat(1, 3)));
        assert_eq!(out_transitions(&w("ed"), &p).unwrap()[0], (w("de"), rat(1, 4)));
    }

    #[test]
    fn rate_validation() {
        assert!(RateParams::uniform(2, rat(0, 1), rat(1, 2), rat(1, 2))
            .validate(2)
            .is_err());
        assert!(RateParams::uniform(2, rat(1, 2), rat(3, 2), rat(1, 2))
            .validate(2)
            .is_err());
        assert!(RateParams::uniform(2, rat(1, 2), rat(1, 2), rat(-1, 2))
            .validate(2)
            .is_err());
        assert!(RateParams::uniform(2, rat(1, 2), rat(1, 2), rat(0, 1))
            .validate(2)
            .is_ok());
        assert!(RateParams::uniform(2, rat(1, 2), rat(1, 2), rat(1, 2))
            .validate(3)
            .is_err());
    }

    #[test]
    fn two_state_chain() {
        let (a, b) = (rat(1, 2), rat(1, 3));
        let p = RateParams::uniform(1, a.clone(), b.clone(), rat(1, 5));
        let pi = stationary_exact(1, &Sector(vec![]), &p).unwrap();
        assert_eq!(pi[&w("d")], &a / (&a + &b));
        assert_eq!(pi[&w("e")], &b / (&a + &b));
    }

    #[test]
    fn solved_vectors_are_stationary() {
        for (n, sector, k) in [(2, vec![], 1), (2, vec![1], 2), (3, vec![1], 2), (3, vec![1, 1], 3)] {
            let chain = build_chain(n, &Sector(sector), &q_params(k)).unwrap();
            assert!(chain.is_stochastic());
            let pi = chain.stationary().unwrap();
            assert!(chain.is_stationary(&pi));
        }
        let ones = RateParams::uniform(2, rat(1, 1), rat(1, 1), rat(1, 1));
        let pi = stationary_exact(2, &Sector(vec![1]), &ones).unwrap();
        assert!(pi.values().sum::<Rational>().is_one());
    }

    #[test]
    fn irreducibility() {
        let tasep = RateParams::uniform(1, rat(1, 2), rat(1, 3), rat(0, 1));
        assert!(build_chain(2, &Sector(vec![]), &tasep).unwrap().is_irreducible());
        let sym = RateParams::uniform(2, rat(1, 2), rat(1, 2), rat(1, 1));
        assert!(build_chain(3, &Sector(vec![1]), &sym).unwrap().is_irreducible());
        let single: ChainSystem<()> = ChainSystem::new(vec![()], [], 1);
        assert!(single.is_irreducible());
        let split: ChainSystem<u8> = ChainSystem::new(vec![0, 1], [(0, 1, rat(1, 1))], 2);
        assert!(!split.is_irreducible());
        assert!(matches!(split.stationary(), Err(Error::Reducible)));
    }

    #[test]
    fn reversal_symmetry() {
        let p = RateParams::uniform(2, rat(1, 2), rat(1, 3), rat(1, 5));
        for n in 1..=4 {
            for r in 0..=n {
                let sector = Sector(vec![r]);
                let pi = stationary_exact(n, &sector, &p).unwrap();
                let dual = stationary_exact(n, &sector, &p.swap_boundaries()).unwrap();
                for (word, prob) in &pi {
                    assert_eq!(&dual[&word.reversal_dual()], prob, "{word}");
                }
            }
        }
    }

    fn arb_word(k: usize) -> impl Strategy<Value = Word> {
        let letter = (0..=k).prop_map(move |i| match i {
            0 => Letter::D,
            i if i == k => Letter::E,
            s => Letter::A(s as u8),
        });
        proptest::collection::vec(letter, 1..8).prop_map(Word)
    }

    proptest! {
        #[test]
        fn moves_preserve_sector(word in arb_word(4)) {
            let p = RateParams::uniform(4, rat(1, 1), rat(1, 1), rat(1, 1));
            let total: Rational = out_transitions(&word, &p).unwrap().iter().map(|(_, r)| r.clone()).sum();
            prop_assert!(total <= Rational::from_integer((word.len() as i64 + 1).into()));
            for (next, _) in out_transitions(&word, &p).unwrap() {
                prop_assert_eq!(next.sector(4), word.sector(4));
            }
        }
    }
}
