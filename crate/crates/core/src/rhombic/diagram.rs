//! Rhombic diagrams as sets of crossing pairs.

use crate::pasep::{Letter, Word};

/// The tiles of a word's diagram: pairs `(x, y)`, `x < y`, where the letter
/// at `x` is heavier than the letter at `y` in the order `e < a1 < ... < d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhombicDiagram {
    pub word: Word,
    pub tiles: Vec<((usize, usize), (Letter, Letter))>,
}

impl RhombicDiagram {
    pub fn area(&self) -> usize {
        self.tiles.len()
    }
}

pub fn tiles_of(w: &Word) -> RhombicDiagram {
    let l = w.letters();
    let tiles = (0..l.len())
        .flat_map(|x| (x + 1..l.len()).map(move |y| (x, y)))
        .filter(|&(x, y)| l[x].crosses(l[y]))
        .map(|(x, y)| ((x, y), (l[x], l[y])))
        .collect();
    RhombicDiagram { word: w.clone(), tiles }
}
