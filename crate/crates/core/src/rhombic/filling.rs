//! Fillings of a tiling with `alpha` and `beta` symbols, their weights, and
//! the generating functions built from them.
//!
//! A tile `(x, y)` lies in the d-strip of `x` when `x` is a `d`, and in the
//! e-strip of `y` when `y` is an `e`. Along each strip the tiles are taken in
//! the order the line meets them. Nothing may follow an `alpha` in its
//! e-strip or a `beta` in its d-strip, and an empty tile counts as `q`
//! unless it follows one of those.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::pasep::{sector_states, Letter, Sector, Word};
use crate::polyring::{binomial, LaurentPoly, Monomial};
use crate::rhombic::tiling::Tiling;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Alpha,
    Beta,
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Symbol::Alpha => "alpha",
            Symbol::Beta => "beta",
        })
    }
}

/// What a tile contributes to the weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TileStatus {
    Alpha,
    Beta,
    FreeQ,
    ForcedEmpty,
}

/// Kind of a tile, by the letters of its two lines (heavier first).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TileKind {
    DE,
    DA,
    AE,
    AA,
}

impl TileKind {
    pub fn of(x: Letter, y: Letter) -> TileKind {
        match (x, y) {
            (Letter::D, Letter::E) => TileKind::DE,
            (Letter::D, Letter::A(_)) => TileKind::DA,
            (Letter::A(_), Letter::E) => TileKind::AE,
            (Letter::A(_), Letter::A(_)) => TileKind::AA,
            _ => panic!("{x}{y} is not a tile"),
        }
    }

    pub fn allows(self, sym: Symbol) -> bool {
        matches!(
            (self, sym),
            (TileKind::DE, _) | (TileKind::DA, Symbol::Beta) | (TileKind::AE, Symbol::Alpha)
        )
    }
}

impl fmt::Display for TileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TileKind::DE => "de",
            TileKind::DA => "da",
            TileKind::AE => "ae",
            TileKind::AA => "aa",
        })
    }
}

/// Exponents of `alpha`, `beta`, `q` in a filling's weight.
pub type Exponents = (i32, i32, u32);

/// A tiling together with a symbol for some of its tiles.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Filling {
    tiling: Tiling,
    symbols: BTreeMap<(usize, usize), Symbol>,
}

impl Filling {
    /// Checks admissibility before building.
    pub fn new(tiling: Tiling, symbols: BTreeMap<(usize, usize), Symbol>) -> Result<Filling> {
        let f = Filling { tiling, symbols };
        if !f.is_valid() {
            return Err(Error::InvalidTiling("inadmissible symbols".into()));
        }
        Ok(f)
    }

    pub(crate) fn new_unchecked(tiling: Tiling, symbols: BTreeMap<(usize, usize), Symbol>) -> Filling {
        debug_assert!(Filling {
            tiling: tiling.clone(),
            symbols: symbols.clone()
        }
        .is_valid());
        Filling { tiling, symbols }
    }

    pub fn tiling(&self) -> &Tiling {
        &self.tiling
    }

    pub fn word(&self) -> &Word {
        self.tiling.word()
    }

    pub fn symbols(&self) -> &BTreeMap<(usize, usize), Symbol> {
        &self.symbols
    }

    pub fn symbol(&self, tile: (usize, usize)) -> Option<Symbol> {
        self.symbols.get(&tile).copied()
    }

    pub fn kind(&self, tile: (usize, usize)) -> TileKind {
        TileKind::of(self.tiling.letter(tile.0), self.tiling.letter(tile.1))
    }

    fn is_valid(&self) -> bool {
        let tiles = self.tiling.tiles();
        if self.symbols.keys().any(|t| tiles.binary_search(t).is_err()) {
            return false;
        }
        if self.symbols.iter().any(|(&t, &s)| !self.kind(t).allows(s)) {
            return false;
        }
        // nothing after an alpha in an e-strip or a beta in a d-strip
        for (line, stop) in self.strips() {
            let mut blocked = false;
            for t in self.strip_tiles(line) {
                if let Some(s) = self.symbol(t) {
                    if blocked {
                        return false;
                    }
                    blocked = s == stop;
                }
            }
        }
        true
    }

    /// Every `d` line with `Beta` and every `e` line with `Alpha`.
    fn strips(&self) -> impl Iterator<Item = (usize, Symbol)> + '_ {
        (0..self.tiling.n()).filter_map(|p| match self.tiling.letter(p) {
            Letter::D => Some((p, Symbol::Beta)),
            Letter::E => Some((p, Symbol::Alpha)),
            Letter::A(_) => None,
        })
    }

    /// Tiles of line `p` in the order the line meets them.
    pub fn strip_tiles(&self, p: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.tiling.order(p).iter().map(move |&o| (p.min(o), p.max(o)))
    }

    /// Status of every tile.
    pub fn statuses(&self) -> BTreeMap<(usize, usize), TileStatus> {
        let mut blocked: HashMap<(usize, usize), bool> = HashMap::new();
        for (line, stop) in self.strips() {
            let mut seen = false;
            for t in self.strip_tiles(line) {
                *blocked.entry(t).or_default() |= seen;
                if self.symbol(t) == Some(stop) {
                    seen = true;
                }
            }
        }
        self.tiling
            .tiles()
            .into_iter()
            .map(|t| {
                let status = match self.symbol(t) {
                    Some(Symbol::Alpha) => TileStatus::Alpha,
                    Some(Symbol::Beta) => TileStatus::Beta,
                    None if blocked.get(&t).copied().unwrap_or(false) => TileStatus::ForcedEmpty,
                    None => TileStatus::FreeQ,
                };
                (t, status)
            })
            .collect()
    }

    pub fn exponents(&self) -> Exponents {
        let w = self.word();
        let (mut a, mut b, mut q) = (w.count(Letter::D) as i32, w.count(Letter::E) as i32, 0);
        for s in self.statuses().values() {
            match s {
                TileStatus::Alpha => a += 1,
                TileStatus::Beta => b += 1,
                TileStatus::FreeQ => q += 1,
                TileStatus::ForcedEmpty => {}
            }
        }
        (a, b, q)
    }

    /// `alpha^(#d) beta^(#e)` times the symbols and the free `q`s.
    pub fn wt(&self) -> LaurentPoly {
        let (a, b, q) = self.exponents();
        LaurentPoly::abq(a, b, q)
    }

    /// Number of `d` lines whose strip holds no `beta`.
    pub fn free_d_strips(&self) -> usize {
        (0..self.tiling.n())
            .filter(|&p| self.tiling.letter(p) == Letter::D)
            .filter(|&p| self.strip_tiles(p).all(|t| self.symbol(t) != Some(Symbol::Beta)))
            .count()
    }
}

/// Walks every admissible filling of `tiling`, in sweep order, reporting the
/// symbols and weight exponents.
fn walk<F>(tiling: &Tiling, mut visit: F)
where
    F: FnMut(&[(usize, usize, Option<Symbol>)], Exponents),
{
    let l = tiling.word().letters();
    let tiles = tiling.sweep();
    let n = l.len();
    let base = (
        l.iter().filter(|&&x| x == Letter::D).count() as i32,
        l.iter().filter(|&&x| x == Letter::E).count() as i32,
        0,
    );
    let mut stack: Vec<(usize, usize, Option<Symbol>)> = Vec::with_capacity(tiles.len());
    let mut alpha_used = vec![false; n];
    let mut beta_used = vec![false; n];

    #[allow(clippy::too_many_arguments)]
    fn go<F>(
        idx: usize,
        tiles: &[(usize, usize)],
        l: &[Letter],
        exps: Exponents,
        alpha_used: &mut [bool],
        beta_used: &mut [bool],
        stack: &mut Vec<(usize, usize, Option<Symbol>)>,
        visit: &mut F,
    ) where
        F: FnMut(&[(usize, usize, Option<Symbol>)], Exponents),
    {
        let Some(&(x, y)) = tiles.get(idx) else {
            visit(stack, exps);
            return;
        };
        let kind = TileKind::of(l[x], l[y]);
        let in_e = l[y] == Letter::E;
        let in_d = l[x] == Letter::D;
        let blocked = (in_e && alpha_used[y]) || (in_d && beta_used[x]);
        let (a, b, q) = exps;

        stack.push((x, y, None));
        let q_exps = if blocked { (a, b, q) } else { (a, b, q + 1) };
        go(idx + 1, tiles, l, q_exps, alpha_used, beta_used, stack, visit);
        stack.pop();

        if blocked {
            return;
        }
        if kind.allows(Symbol::Alpha) {
            alpha_used[y] = true;
            stack.push((x, y, Some(Symbol::Alpha)));
            go(idx + 1, tiles, l, (a + 1, b, q), alpha_used, beta_used, stack, visit);
            stack.pop();
            alpha_used[y] = false;
        }
        if kind.allows(Symbol::Beta) {
            beta_used[x] = true;
            stack.push((x, y, Some(Symbol::Beta)));
            go(idx + 1, tiles, l, (a, b + 1, q), alpha_used, beta_used, stack, visit);
            stack.pop();
            beta_used[x] = false;
        }
    }

    go(
        0,
        &tiles,
        l,
        base,
        &mut alpha_used,
        &mut beta_used,
        &mut stack,
        &mut visit,
    );
}

/// Every admissible filling of `tiling`.
pub fn enumerate_fillings_on(tiling: &Tiling) -> Vec<Filling> {
    let mut out = Vec::new();
    walk(tiling, |stack, _| {
        let symbols = stack.iter().filter_map(|&(x, y, s)| s.map(|s| ((x, y), s))).collect();
        out.push(Filling::new_unchecked(tiling.clone(), symbols));
    });
    out
}

/// Every admissible filling on the maximal tiling of `w`.
pub fn enumerate_fillings(w: &Word) -> Vec<Filling> {
    enumerate_fillings_on(&Tiling::maximal(w))
}

/// Number of fillings of `tiling` for each weight monomial.
pub fn weight_counts_on(tiling: &Tiling) -> BTreeMap<Exponents, u64> {
    let mut counts: HashMap<Exponents, u64> = HashMap::new();
    walk(tiling, |_, exps| *counts.entry(exps).or_default() += 1);
    counts.into_iter().collect()
}

/// Sum of `wt` over all fillings of `tiling`.
pub fn weight_on(tiling: &Tiling) -> LaurentPoly {
    LaurentPoly::from_counts(weight_counts_on(tiling))
}

/// Sum of `wt` over the fillings of the maximal tiling of `w`.
pub fn weight(w: &Word) -> LaurentPoly {
    weight_on(&Tiling::maximal(w))
}

/// Partition function of a sector: the sum of `weight` over its words.
pub fn z(n: usize, sector: &Sector) -> Result<LaurentPoly> {
    let mut counts: HashMap<Exponents, u64> = HashMap::new();
    for w in sector_states(n, sector)? {
        for (e, c) in weight_counts_on(&Tiling::maximal(&w)) {
            *counts.entry(e).or_default() += c;
        }
    }
    Ok(LaurentPoly::from_counts(counts))
}

/// Number of fillings of maximal tilings over the two-species sector `r`.
pub fn count_classes(n: usize, r: usize) -> Result<u64> {
    let mut total = 0;
    for w in sector_states(n, &Sector(vec![r]))? {
        walk(&Tiling::maximal(&w), |_, _| total += 1);
    }
    Ok(total)
}

/// `C(n, r) (n + 1)! / (r + 1)!`.
pub fn class_count_formula(n: usize, r: usize) -> BigUint {
    let falling: BigUint = (r as u64 + 2..=n as u64 + 1).map(BigUint::from).product();
    let c = binomial(n as u64, r as u64);
    c.numer().to_biguint().expect("non-negative") * falling
}

/// `C(n, r) prod_{i=r}^{n-1} (alpha + beta + i alpha beta)`.
pub fn closed_form_q1(n: usize, r: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::constant(binomial(n as u64, r as u64));
    for i in r..n {
        let mut factor = LaurentPoly::alpha() + LaurentPoly::beta();
        factor.add_term(Monomial::abq(1, 1, 0), crate::polyring::rat(i as i64, 1));
        acc = &acc * &factor;
    }
    acc
}
