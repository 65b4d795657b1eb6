//! Weight-preserving flips of two-species fillings, tableau classes, and
//! tiling-independence checks.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::pasep::{Letter, Word};
use crate::polyring::LaurentPoly;
use crate::rhombic::filling::{enumerate_fillings_on, weight, weight_on, Filling, Symbol};
use crate::rhombic::tiling::{Hexagon, Orientation, Tiling};

type Local = (Option<Symbol>, Option<Symbol>, Option<Symbol>);

const A: Option<Symbol> = Some(Symbol::Alpha);
const B: Option<Symbol> = Some(Symbol::Beta);

/// Contents `(da, de, ae)` before and after a `Max -> Min` flip when neither
/// the d-strip nor the e-strip is blocked ahead of the hexagon.
const FREE_FLIPS: [(Local, Local); 7] = [
    ((B, None, A), (B, None, A)),
    ((B, None, None), (None, B, None)),
    ((None, A, None), (None, None, A)),
    ((None, B, A), (B, A, None)),
    ((None, B, None), (B, None, None)),
    ((None, None, A), (None, A, None)),
    ((None, None, None), (None, None, None)),
];

fn blocked_before(f: &Filling, line: usize, stop: Symbol, first_partner: usize) -> bool {
    f.strip_tiles(line)
        .take_while(|&(a, b)| a != first_partner && b != first_partner)
        .any(|t| f.symbol(t) == Some(stop))
}

/// Flips a hexagon of a two-species filling. The local rule is the unique
/// bijection that keeps the weight and every other tile's status.
pub fn filling_flip(f: &Filling, hex: &Hexagon) -> Result<Filling> {
    let [x, y, z] = hex.lines;
    let t = f.tiling();
    if (t.letter(x), t.letter(y), t.letter(z)) != (Letter::D, Letter::A(1), Letter::E) {
        return Err(Error::Unsupported(
            "filling flips are defined for d, a, e hexagons".into(),
        ));
    }
    let flipped = t.flip(hex)?;
    let (da, de, ae) = ((x, y), (x, z), (y, z));
    let current = (f.symbol(da), f.symbol(de), f.symbol(ae));
    let (first_x, first_z) = match hex.orientation {
        Orientation::Max => (y, x),
        Orientation::Min => (z, y),
    };
    let context = blocked_before(f, x, Symbol::Beta, first_x) || blocked_before(f, z, Symbol::Alpha, first_z);
    let next = if context {
        current
    } else {
        let found = FREE_FLIPS.iter().find_map(|&(max, min)| match hex.orientation {
            Orientation::Max if max == current => Some(min),
            Orientation::Min if min == current => Some(max),
            _ => None,
        });
        found.ok_or_else(|| Error::InvalidTiling("inadmissible hexagon contents".into()))?
    };
    let mut symbols = f.symbols().clone();
    for (tile, sym) in [(da, next.0), (de, next.1), (ae, next.2)] {
        match sym {
            Some(s) => symbols.insert(tile, s),
            None => symbols.remove(&tile),
        };
    }
    Ok(Filling::new_unchecked(flipped, symbols))
}

/// Flips `Min` hexagons until the tiling is maximal.
pub fn canonicalize(f: &Filling) -> Filling {
    let mut current = f.clone();
    while let Some(hex) = current
        .tiling()
        .hexagons()
        .into_iter()
        .find(|h| h.orientation == Orientation::Min)
    {
        current = filling_flip(&current, &hex).expect("two-species hexagon");
    }
    debug_assert!(current.tiling().is_maximal());
    current
}

/// Every filling reachable from `f` by filling flips, in breadth-first
/// order starting with `f`.
pub fn flip_equivalents(f: &Filling) -> Vec<Filling> {
    let mut seen = BTreeSet::from([f.clone()]);
    let mut out = vec![f.clone()];
    let mut queue = VecDeque::from([f.clone()]);
    while let Some(g) = queue.pop_front() {
        for hex in g.tiling().hexagons() {
            let h = filling_flip(&g, &hex).expect("two-species hexagon");
            if seen.insert(h.clone()) {
                out.push(h.clone());
                queue.push_back(h);
            }
        }
    }
    out
}

/// The first flip-equivalent filling (breadth-first) that has a tile at the
/// boundary pair `(p, p + 1)`.
pub fn with_corner_tile(f: &Filling, p: usize) -> Option<Filling> {
    if f.tiling().is_corner_tile(p) {
        return Some(f.clone());
    }
    let mut seen = BTreeSet::from([f.clone()]);
    let mut queue = VecDeque::from([f.clone()]);
    while let Some(g) = queue.pop_front() {
        for hex in g.tiling().hexagons() {
            let h = filling_flip(&g, &hex).expect("two-species hexagon");
            if h.tiling().is_corner_tile(p) {
                return Some(h);
            }
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    None
}

/// Weight sums on every flip-reachable tiling of a word.
#[derive(Clone, Debug)]
pub struct TilingReport {
    pub word: Word,
    pub reference: LaurentPoly,
    pub sums: Vec<(Tiling, LaurentPoly)>,
}

impl TilingReport {
    pub fn agree(&self) -> bool {
        self.sums.iter().all(|(_, s)| *s == self.reference)
    }
}

/// Compares the weight sum on every flip-reachable tiling with the sum on
/// the maximal tiling.
pub fn tiling_independence_check(w: &Word) -> TilingReport {
    let sums = Tiling::maximal(w).flip_class().into_iter().map(|t| {
        let s = weight_on(&t);
        (t, s)
    });
    TilingReport {
        word: w.clone(),
        reference: weight(w),
        sums: sums.collect(),
    }
}

/// Result of comparing one tiling's weight sum with the maximal tiling's.
#[derive(Clone, Debug)]
pub struct ProbeReport {
    pub on_tiling: LaurentPoly,
    pub on_maximal: LaurentPoly,
}

impl ProbeReport {
    pub fn equal(&self) -> bool {
        self.on_tiling == self.on_maximal
    }
}

/// Exploratory comparison for any number of species; never an error when
/// the sums differ.
pub fn conjecture_probe(t: &Tiling) -> ProbeReport {
    ProbeReport {
        on_tiling: weight_on(t),
        on_maximal: weight(t.word()),
    }
}

/// Groups fillings of every flip-reachable tiling of `w` by their canonical
/// representative.
pub fn classes(w: &Word) -> BTreeMap<Filling, Vec<Filling>> {
    let mut out: BTreeMap<Filling, Vec<Filling>> = BTreeMap::new();
    for t in Tiling::maximal(w).flip_class() {
        for f in enumerate_fillings_on(&t) {
            out.entry(canonicalize(&f)).or_default().push(f);
        }
    }
    out
}
