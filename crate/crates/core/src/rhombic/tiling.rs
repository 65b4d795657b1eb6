//! Tilings of a rhombic diagram, encoded as pseudoline arrangements.
//!
//! Each letter of the word is a line. Two lines cross exactly when they form
//! a tile, and a tiling is determined by the order in which every line meets
//! its partners, read from the boundary path spelled by the word toward the
//! sorted path. For a `d` line that order runs right to left along its
//! d-strip; for an `e` line it runs bottom to top along its e-strip.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::pasep::{Letter, Word};

/// Orientation of a hexagon of three pairwise crossing lines `x < y < z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    /// Crossings met in the order `(x,y)`, `(x,z)`, `(y,z)`; every hexagon
    /// of the maximal tiling looks like this.
    Max,
    /// Crossings met in the order `(y,z)`, `(x,z)`, `(x,y)`.
    Min,
}

/// Three tiles forming a hexagon, given by their lines in word order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hexagon {
    pub lines: [usize; 3],
    pub orientation: Orientation,
}

/// A rhombus of the geometric realization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Placement {
    pub tile: (usize, usize),
    pub anchor: (i64, i64),
    /// Direction vectors of the two lines, heavier line first.
    pub sides: [(i64, i64); 2],
}

/// A tiling of the rhombic diagram of `word`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tiling {
    word: Word,
    order: Vec<Vec<usize>>,
}

fn partners(word: &Word, p: usize) -> impl Iterator<Item = usize> + '_ {
    let l = word.letters();
    (0..l.len()).filter(move |&o| {
        if o < p {
            l[o].crosses(l[p])
        } else {
            o > p && l[p].crosses(l[o])
        }
    })
}

impl Tiling {
    /// The canonical tiling: lines are inserted left to right, each passing
    /// its earlier partners heaviest first.
    pub fn maximal(word: &Word) -> Tiling {
        let l = word.letters();
        let n = l.len();
        let mut order: Vec<Vec<usize>> = vec![Vec::new(); n];
        for y in 0..n {
            let mut earlier: Vec<usize> = (0..y).filter(|&x| l[x].crosses(l[y])).collect();
            earlier.sort_by(|&a, &b| (l[b].class(), b).cmp(&(l[a].class(), a)));
            for x in earlier {
                order[y].push(x);
                order[x].push(y);
            }
        }
        Tiling {
            word: word.clone(),
            order,
        }
    }

    /// The opposite extreme: lines are inserted right to left, each passing
    /// its later partners lightest first.
    pub fn minimal(word: &Word) -> Tiling {
        let l = word.letters();
        let n = l.len();
        let mut order: Vec<Vec<usize>> = vec![Vec::new(); n];
        for x in (0..n).rev() {
            let mut later: Vec<usize> = (x + 1..n).filter(|&y| l[x].crosses(l[y])).collect();
            later.sort_by_key(|&y| (l[y].class(), y));
            for y in later {
                order[x].push(y);
                order[y].push(x);
            }
        }
        Tiling {
            word: word.clone(),
            order,
        }
    }

    /// Builds a tiling from explicit partner orders, checking that they
    /// describe a valid arrangement.
    pub fn from_orders(word: &Word, order: Vec<Vec<usize>>) -> Result<Tiling> {
        if order.len() != word.len() {
            return Err(Error::InvalidTiling("one order per letter is required".into()));
        }
        for (p, list) in order.iter().enumerate() {
            let expected: BTreeSet<usize> = partners(word, p).collect();
            let got: BTreeSet<usize> = list.iter().copied().collect();
            if got != expected || got.len() != list.len() {
                return Err(Error::InvalidTiling(format!("line {} has the wrong partners", p + 1)));
            }
        }
        let t = Tiling {
            word: word.clone(),
            order,
        };
        t.try_sweep()?;
        Ok(t)
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    /// Partners of line `p` in the order they are met.
    pub fn order(&self, p: usize) -> &[usize] {
        &self.order[p]
    }

    pub fn orders(&self) -> &[Vec<usize>] {
        &self.order
    }

    pub fn letter(&self, p: usize) -> Letter {
        self.word.letters()[p]
    }

    /// All tiles `(x, y)` with `x < y`, sorted.
    pub fn tiles(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = (0..self.n())
            .flat_map(|x| self.order[x].iter().filter(move |&&y| y > x).map(move |&y| (x, y)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn area(&self) -> usize {
        self.order.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// A sequence of adjacent transpositions realizing the tiling, always
    /// taking the leftmost available crossing.
    pub fn sweep(&self) -> Vec<(usize, usize)> {
        self.try_sweep().expect("tilings are validated on construction")
    }

    fn try_sweep(&self) -> Result<Vec<(usize, usize)>> {
        let n = self.n();
        let mut arr: Vec<usize> = (0..n).collect();
        let mut next = vec![0usize; n];
        let total = self.area();
        let mut out = Vec::with_capacity(total);
        let ready = |arr: &[usize], next: &[usize], s: usize| {
            let (a, b) = (arr[s], arr[s + 1]);
            self.order[a].get(next[a]) == Some(&b) && self.order[b].get(next[b]) == Some(&a)
        };
        while out.len() < total {
            match (0..n.saturating_sub(1)).find(|&s| ready(&arr, &next, s)) {
                Some(found) => {
                    let (a, b) = (arr[found], arr[found + 1]);
                    next[a] += 1;
                    next[b] += 1;
                    arr.swap(found, found + 1);
                    out.push((a.min(b), a.max(b)));
                }
                None => return Err(Error::InvalidTiling("partner orders are inconsistent".into())),
            }
        }
        Ok(out)
    }

    /// Every hexagon of the tiling, sorted.
    pub fn hexagons(&self) -> Vec<Hexagon> {
        let mut out = BTreeSet::new();
        let adjacent = |p: usize, a: usize, b: usize| self.order[p].windows(2).any(|w| w == [a, b]);
        for x in 0..self.n() {
            for w in self.order[x].windows(2) {
                let (a, b) = (w[0], w[1]);
                if a <= x || b <= x {
                    continue;
                }
                let (y, z) = (a.min(b), a.max(b));
                if !self.crossing(y, z) {
                    continue;
                }
                let orientation = if a < b { Orientation::Max } else { Orientation::Min };
                let ok = match orientation {
                    Orientation::Max => adjacent(y, x, z) && adjacent(z, x, y),
                    Orientation::Min => adjacent(y, z, x) && adjacent(z, y, x),
                };
                if ok {
                    out.insert(Hexagon {
                        lines: [x, y, z],
                        orientation,
                    });
                }
            }
        }
        out.into_iter().collect()
    }

    fn crossing(&self, x: usize, y: usize) -> bool {
        x < y && self.letter(x).crosses(self.letter(y))
    }

    /// Rotates a hexagon, exchanging its two tilings.
    pub fn flip(&self, hex: &Hexagon) -> Result<Tiling> {
        if !self.hexagons().contains(hex) {
            return Err(Error::NotAHexagon);
        }
        let [x, y, z] = hex.lines;
        let mut order = self.order.clone();
        for (line, a, b) in [(x, y, z), (y, x, z), (z, x, y)] {
            let list = &mut order[line];
            let i = list.iter().position(|&v| v == a).expect("hexagon partner");
            let j = list.iter().position(|&v| v == b).expect("hexagon partner");
            list.swap(i, j);
        }
        Ok(Tiling {
            word: self.word.clone(),
            order,
        })
    }

    /// True when no hexagon is in the `Min` orientation.
    pub fn is_maximal(&self) -> bool {
        *self == Tiling::maximal(&self.word)
    }

    /// Every tiling reachable from this one by flips, sorted.
    pub fn flip_class(&self) -> Vec<Tiling> {
        let mut seen: HashSet<Tiling> = HashSet::from([self.clone()]);
        let mut queue = VecDeque::from([self.clone()]);
        while let Some(t) = queue.pop_front() {
            for hex in t.hexagons() {
                let next = t.flip(&hex).expect("hexagon of t");
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let mut out: Vec<Tiling> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// True when `(p, p + 1)` is a tile lying on the boundary path.
    pub fn is_corner_tile(&self, p: usize) -> bool {
        p + 1 < self.n() && self.order[p].first() == Some(&(p + 1)) && self.order[p + 1].first() == Some(&p)
    }

    /// Removes the boundary tile `(p, p + 1)`; the two letters swap places.
    pub fn remove_corner(&self, p: usize) -> Result<Tiling> {
        if !self.is_corner_tile(p) {
            return Err(Error::InvalidTiling(format!("no corner tile at {}", p + 1)));
        }
        let swap = |v: usize| {
            if v == p {
                p + 1
            } else if v == p + 1 {
                p
            } else {
                v
            }
        };
        let mut order = vec![Vec::new(); self.n()];
        for (old, list) in self.order.iter().enumerate() {
            let skip = usize::from(old == p || old == p + 1);
            order[swap(old)] = list[skip..].iter().map(|&v| swap(v)).collect();
        }
        Ok(Tiling {
            word: swapped(&self.word, p),
            order,
        })
    }

    /// Glues a tile onto the boundary at a pair `(p, p + 1)` that does not
    /// cross; the two letters swap places.
    pub fn add_corner(&self, p: usize) -> Result<Tiling> {
        if p + 1 >= self.n() || !self.letter(p + 1).crosses(self.letter(p)) {
            return Err(Error::InvalidTiling(format!("no inner corner at {}", p + 1)));
        }
        let swap = |v: usize| {
            if v == p {
                p + 1
            } else if v == p + 1 {
                p
            } else {
                v
            }
        };
        let mut order = vec![Vec::new(); self.n()];
        for (old, list) in self.order.iter().enumerate() {
            let mut new_list = Vec::with_capacity(list.len() + 1);
            if old == p || old == p + 1 {
                // the other line of the pair, after relabeling, has id `old`
                new_list.push(old);
            }
            new_list.extend(list.iter().map(|&v| swap(v)));
            order[swap(old)] = new_list;
        }
        Ok(Tiling {
            word: swapped(&self.word, p),
            order,
        })
    }

    /// Deletes line `p` together with its strip.
    pub fn remove_line(&self, p: usize) -> Tiling {
        let shift = |v: usize| if v > p { v - 1 } else { v };
        let order = self
            .order
            .iter()
            .enumerate()
            .filter(|&(old, _)| old != p)
            .map(|(_, list)| list.iter().filter(|&&v| v != p).map(|&v| shift(v)).collect())
            .collect();
        let mut letters = self.word.0.clone();
        letters.remove(p);
        Tiling {
            word: Word(letters),
            order,
        }
    }

    /// Inserts a new `d` or `e` line before position `slot` and sweeps it
    /// toward the sorted path as early as possible: a `d` moves right past
    /// lighter lines, an `e` moves left past heavier ones.
    pub fn insert_line(&self, slot: usize, letter: Letter) -> Tiling {
        assert!(
            matches!(letter, Letter::D | Letter::E),
            "only d and e lines are inserted"
        );
        assert!(slot <= self.n());
        let shift = |v: usize| if v >= slot { v + 1 } else { v };
        let mut letters = self.word.0.clone();
        letters.insert(slot, letter);
        let word = Word(letters);
        let l = word.letters();
        let steps: Vec<(usize, usize)> = self.sweep().into_iter().map(|(a, b)| (shift(a), shift(b))).collect();
        let mut arr: Vec<usize> = (0..word.len()).collect();
        let mut sequence = Vec::with_capacity(steps.len() + word.len());
        let advance = |arr: &mut Vec<usize>, sequence: &mut Vec<(usize, usize)>| {
            let mut pos = arr.iter().position(|&v| v == slot).expect("new line present");
            loop {
                let neighbor = match letter {
                    Letter::D if pos + 1 < arr.len() && l[arr[pos + 1]].class() < letter.class() => pos + 1,
                    Letter::E if pos > 0 && l[arr[pos - 1]].class() > letter.class() => pos - 1,
                    _ => break,
                };
                sequence.push((arr[neighbor], slot));
                arr.swap(pos, neighbor);
                pos = neighbor;
            }
        };
        advance(&mut arr, &mut sequence);
        for (a, b) in steps {
            let i = arr.iter().position(|&v| v == a).expect("line present");
            debug_assert!(arr[i + 1] == b, "new line separates a crossing pair");
            arr.swap(i, i + 1);
            sequence.push((a, b));
            advance(&mut arr, &mut sequence);
        }
        let mut order = vec![Vec::new(); word.len()];
        for (a, b) in sequence {
            order[a].push(b);
            order[b].push(a);
        }
        Tiling { word, order }
    }

    /// Geometric rhombi in sweep order, with `d` pointing down, `e` pointing
    /// left and `a_i` in between; the word's path starts at the origin.
    pub fn placements(&self, k: usize) -> Vec<Placement> {
        let l = self.word.letters();
        let dirs: Vec<(i64, i64)> = l.iter().map(|&x| direction(x, k)).collect();
        let mut arr: Vec<usize> = (0..self.n()).collect();
        let mut out = Vec::with_capacity(self.area());
        for (a, b) in self.sweep() {
            let s = arr.iter().position(|&v| v == a).expect("line present");
            let anchor = arr[..s]
                .iter()
                .fold((0, 0), |(x, y), &v| (x + dirs[v].0, y + dirs[v].1));
            out.push(Placement {
                tile: (a, b),
                anchor,
                sides: [dirs[a], dirs[b]],
            });
            arr.swap(s, s + 1);
        }
        out
    }
}

/// Unit step of a letter in the plane, with `y` pointing up.
pub fn direction(letter: Letter, k: usize) -> (i64, i64) {
    let k = k as i64;
    match letter {
        Letter::E => (-k, 0),
        Letter::D => (0, -k),
        Letter::A(i) => (-(k - i as i64), -(i as i64)),
    }
}

fn swapped(word: &Word, p: usize) -> Word {
    let mut letters = word.0.clone();
    letters.swap(p, p + 1);
    Word(letters)
}
