//! A Markov chain on two-species tableau classes that projects onto the
//! two-species PASEP.
//!
//! States are fillings of maximal tilings, one per flip class. Every move of
//! the PASEP out of a state's word lifts to exactly one move of the tableau
//! chain, built by local surgery on a representative and then
//! re-canonicalized.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::pasep::{moves, sector_states, stationary_exact, ChainSystem, Letter, RateLabel, RateParams, Sector, Word};
use crate::polyring::{LaurentPoly, Rational};
use crate::rhombic::filling::{enumerate_fillings, Exponents, Filling, Symbol, TileStatus};
use crate::rhombic::flip::{canonicalize, with_corner_tile};
use crate::rhombic::tiling::Tiling;

/// Where a move of the chain happens. Positions are 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Locus {
    /// Letters at `at`, `at + 1` with the heavier one first.
    Corner { at: usize, pair: (Letter, Letter) },
    /// Letters at `at`, `at + 1` with the lighter one first.
    InnerCorner { at: usize, pair: (Letter, Letter) },
    /// The word starts with `e`.
    EmptyEStrip,
    /// The word ends with `d`.
    EmptyDStrip,
}

impl fmt::Display for Locus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Locus::Corner { at, pair } => write!(f, "corner({}, {}{})", at + 1, pair.0, pair.1),
            Locus::InnerCorner { at, pair } => write!(f, "inner({}, {}{})", at + 1, pair.0, pair.1),
            Locus::EmptyEStrip => f.write_str("empty-e-strip"),
            Locus::EmptyDStrip => f.write_str("empty-d-strip"),
        }
    }
}

/// Content of a corner tile once it sits on the boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CornerClass {
    Alpha,
    Beta,
    Q,
}

impl fmt::Display for CornerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CornerClass::Alpha => "alpha",
            CornerClass::Beta => "beta",
            CornerClass::Q => "q",
        })
    }
}

fn check_two_species(f: &Filling) -> Result<()> {
    if f.word().min_k() > 2 {
        return Err(Error::Unsupported(
            "the tableau chain is defined for two species".into(),
        ));
    }
    Ok(())
}

fn is_corner(w: &Word, p: usize) -> bool {
    let l = w.letters();
    p + 1 < l.len() && l[p].crosses(l[p + 1])
}

fn direct(sym: Option<Symbol>) -> CornerClass {
    match sym {
        Some(Symbol::Alpha) => CornerClass::Alpha,
        Some(Symbol::Beta) => CornerClass::Beta,
        None => CornerClass::Q,
    }
}

/// Classifies a corner by flipping until the corner tile exists.
pub fn classify_corner(f: &Filling, p: usize) -> Result<CornerClass> {
    check_two_species(f)?;
    if !is_corner(f.word(), p) {
        return Err(Error::NotALocus);
    }
    let g = with_corner_tile(f, p).ok_or_else(|| Error::InvalidTiling("no flip exposes the corner".into()))?;
    Ok(direct(g.symbol((p, p + 1))))
}

/// Classifies a corner without flipping, by reading the strip that leads
/// to it.
pub fn classify_corner_by_strip(f: &Filling, p: usize) -> Result<CornerClass> {
    check_two_species(f)?;
    if !is_corner(f.word(), p) {
        return Err(Error::NotALocus);
    }
    let corner = (p, p + 1);
    if f.tiling().is_corner_tile(p) {
        return Ok(direct(f.symbol(corner)));
    }
    let (line, target) = match (f.tiling().letter(p), f.tiling().letter(p + 1)) {
        (Letter::D, Letter::A(_)) => (p, Symbol::Beta),
        (Letter::A(_), Letter::E) => (p + 1, Symbol::Alpha),
        _ => return Err(Error::InvalidTiling("a de corner always carries its tile".into())),
    };
    let statuses = f.statuses();
    let mut strip = f.strip_tiles(line).collect::<Vec<_>>();
    let end = strip
        .iter()
        .position(|&t| t == corner)
        .expect("corner tile lies in the strip");
    strip.truncate(end + 1);
    let first = strip
        .into_iter()
        .find(|t| statuses[t] != TileStatus::ForcedEmpty)
        .expect("the corner tile is never forced");
    Ok(if f.symbol(first) == Some(target) {
        direct(Some(target))
    } else {
        CornerClass::Q
    })
}

/// Every locus of a state, by position, then entry, then exit.
pub fn loci(f: &Filling) -> Vec<Locus> {
    let l = f.word().letters();
    let n = l.len();
    let mut out = Vec::new();
    for at in 0..n.saturating_sub(1) {
        let pair = (l[at], l[at + 1]);
        if pair.0.crosses(pair.1) {
            out.push(Locus::Corner { at, pair });
        } else if pair.1.crosses(pair.0) {
            out.push(Locus::InnerCorner { at, pair });
        }
    }
    if l.first() == Some(&Letter::E) {
        out.push(Locus::EmptyEStrip);
    }
    if l.last() == Some(&Letter::D) {
        out.push(Locus::EmptyDStrip);
    }
    out
}

type Symbols = BTreeMap<(usize, usize), Symbol>;

fn relabel(symbols: &Symbols, map: impl Fn(usize) -> Option<usize>) -> Symbols {
    symbols
        .iter()
        .filter_map(|(&(a, b), &s)| {
            let (a, b) = (map(a)?, map(b)?);
            Some(((a.min(b), a.max(b)), s))
        })
        .collect()
}

fn finish(tiling: Tiling, symbols: Symbols) -> Filling {
    let f = Filling::new(tiling, symbols).expect("surgery keeps the filling admissible");
    canonicalize(&f)
}

/// Removes line `p` and inserts a fresh `d` or `e` line at `slot` whose
/// first tile, if any, carries `sym`.
fn move_line(f: &Filling, p: usize, letter: Letter, slot: impl Fn(&Word) -> usize, sym: Symbol) -> Filling {
    let removed = f.tiling().remove_line(p);
    let symbols = relabel(f.symbols(), |v| match v.cmp(&p) {
        std::cmp::Ordering::Less => Some(v),
        std::cmp::Ordering::Equal => None,
        std::cmp::Ordering::Greater => Some(v - 1),
    });
    let s = slot(removed.word());
    let inserted = removed.insert_line(s, letter);
    let mut symbols = relabel(&symbols, |v| Some(if v >= s { v + 1 } else { v }));
    if let Some(&o) = inserted.order(s).first() {
        symbols.insert((s.min(o), s.max(o)), sym);
    }
    finish(inserted, symbols)
}

fn lighter(x: &Letter) -> bool {
    *x != Letter::D
}

fn heavier(x: &Letter) -> bool {
    *x != Letter::E
}

/// Largest slot with exactly `count` non-`d` letters after it.
fn d_slot(count: usize) -> impl Fn(&Word) -> usize {
    move |w| {
        let l = w.letters();
        (0..=l.len())
            .rev()
            .find(|&s| l[s..].iter().filter(|x| lighter(x)).count() == count)
            .expect("slot exists")
    }
}

/// Smallest slot with exactly `count` non-`e` letters before it.
fn e_slot(count: usize) -> impl Fn(&Word) -> usize {
    move |w| {
        let l = w.letters();
        (0..=l.len())
            .find(|&s| l[..s].iter().filter(|x| heavier(x)).count() == count)
            .expect("slot exists")
    }
}

/// One move of the chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transition {
    pub locus: Locus,
    pub class: Option<CornerClass>,
    pub target: Filling,
    pub label: RateLabel,
}

impl Transition {
    pub fn rate(&self) -> LaurentPoly {
        self.label.symbolic()
    }
}

/// The move of `f` at `locus`.
pub fn transition(f: &Filling, locus: Locus) -> Result<Transition> {
    check_two_species(f)?;
    if !loci(f).contains(&locus) {
        return Err(Error::NotALocus);
    }
    let n = f.tiling().n();
    let (class, target, label) = match locus {
        Locus::Corner { at: p, .. } => {
            let class = classify_corner(f, p)?;
            let g = with_corner_tile(f, p).expect("classified corners have a tile");
            let target = match class {
                CornerClass::Q => {
                    let swap = |v: usize| {
                        if v == p {
                            p + 1
                        } else if v == p + 1 {
                            p
                        } else {
                            v
                        }
                    };
                    let mut symbols = g.symbols().clone();
                    symbols.remove(&(p, p + 1));
                    finish(g.tiling().remove_corner(p)?, relabel(&symbols, |v| Some(swap(v))))
                }
                CornerClass::Beta => {
                    let len = g.tiling().order(p).len();
                    move_line(&g, p, Letter::D, d_slot(len - 1), Symbol::Beta)
                }
                CornerClass::Alpha => {
                    let len = g.tiling().order(p + 1).len();
                    move_line(&g, p + 1, Letter::E, e_slot(len - 1), Symbol::Alpha)
                }
            };
            (Some(class), target, RateLabel::One)
        }
        Locus::InnerCorner { at: p, pair } => {
            let swap = |v: usize| {
                if v == p {
                    p + 1
                } else if v == p + 1 {
                    p
                } else {
                    v
                }
            };
            let target = finish(f.tiling().add_corner(p)?, relabel(f.symbols(), |v| Some(swap(v))));
            (None, target, RateLabel::Swap(pair.1, pair.0))
        }
        Locus::EmptyEStrip => {
            let slot = |w: &Word| w.letters().iter().position(lighter).unwrap_or(w.len());
            (None, move_line(f, 0, Letter::D, slot, Symbol::Beta), RateLabel::Alpha)
        }
        Locus::EmptyDStrip => {
            let slot = |w: &Word| w.letters().iter().rposition(heavier).map_or(0, |i| i + 1);
            (
                None,
                move_line(f, n - 1, Letter::E, slot, Symbol::Alpha),
                RateLabel::Beta,
            )
        }
    };
    Ok(Transition {
        locus,
        class,
        target,
        label,
    })
}

/// Every move out of `f`, in the order of `loci`.
pub fn transitions(f: &Filling) -> Result<Vec<Transition>> {
    loci(f).into_iter().map(|l| transition(f, l)).collect()
}

/// Exponent change `wt(target) / wt(source)` promised for a move.
pub fn weight_contract(f: &Filling, t: &Transition) -> (i32, i32, i32) {
    let l = f.word().letters();
    let n = l.len();
    match (t.locus, t.class) {
        (Locus::InnerCorner { .. }, _) => (0, 0, 1),
        (Locus::Corner { .. }, Some(CornerClass::Q)) => (0, 0, -1),
        (Locus::Corner { at, .. }, Some(CornerClass::Beta)) => {
            let len = l[at + 1..].iter().filter(|x| lighter(x)).count();
            if len == 1 {
                (0, -1, 0)
            } else {
                (0, 0, 0)
            }
        }
        (Locus::Corner { at, .. }, Some(CornerClass::Alpha)) => {
            let len = l[..at + 1].iter().filter(|x| heavier(x)).count();
            if len == 1 {
                (-1, 0, 0)
            } else {
                (0, 0, 0)
            }
        }
        (Locus::Corner { .. }, None) => unreachable!("corners are classified"),
        // the new line has no tile for its symbol when nothing can cross it
        (Locus::EmptyEStrip, _) if !l[1..].iter().any(lighter) => (1, -1, 0),
        (Locus::EmptyEStrip, _) => (1, 0, 0),
        (Locus::EmptyDStrip, _) if !l[..n - 1].iter().any(heavier) => (-1, 1, 0),
        (Locus::EmptyDStrip, _) => (0, 1, 0),
    }
}

fn delta(a: Exponents, b: Exponents) -> (i32, i32, i32) {
    (b.0 - a.0, b.1 - a.1, b.2 as i32 - a.2 as i32)
}

/// Counts of the features of a state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    /// Corners holding `alpha` or `beta`.
    pub c: usize,
    /// Corners holding `q`.
    pub c0: usize,
    pub inner: usize,
    /// The word starts with `e`.
    pub delta_r: bool,
    /// The word ends with `d`.
    pub delta_l: bool,
    /// The first corner holds `beta`.
    pub delta_r_beta: bool,
    /// The last corner holds `alpha`.
    pub delta_l_alpha: bool,
    /// Strip lengths of the `d` lines in word order.
    pub lambda: Vec<usize>,
}

impl Profile {
    pub fn of(f: &Filling) -> Result<Profile> {
        let mut classes = Vec::new();
        let mut inner = 0;
        let ls = loci(f);
        for l in &ls {
            match *l {
                Locus::Corner { at, .. } => classes.push(classify_corner(f, at)?),
                Locus::InnerCorner { .. } => inner += 1,
                _ => {}
            }
        }
        let t = f.tiling();
        Ok(Profile {
            c: classes.iter().filter(|&&c| c != CornerClass::Q).count(),
            c0: classes.iter().filter(|&&c| c == CornerClass::Q).count(),
            inner,
            delta_r: ls.contains(&Locus::EmptyEStrip),
            delta_l: ls.contains(&Locus::EmptyDStrip),
            delta_r_beta: classes.first() == Some(&CornerClass::Beta),
            delta_l_alpha: classes.last() == Some(&CornerClass::Alpha),
            lambda: (0..t.n())
                .filter(|&p| t.letter(p) == Letter::D)
                .map(|p| t.order(p).len())
                .collect(),
        })
    }

    /// Total outgoing rate predicted by the profile.
    pub fn outflow_rate(&self) -> LaurentPoly {
        let mut total = LaurentPoly::from_int((self.c + self.c0) as i64)
            + LaurentPoly::from_int(self.inner as i64) * LaurentPoly::q();
        if self.delta_r {
            total += &LaurentPoly::alpha();
        }
        if self.delta_l {
            total += &LaurentPoly::beta();
        }
        total
    }
}

/// The tableau chain of a two-species sector with symbolic rates.
#[derive(Clone, Debug)]
pub struct RatChain {
    pub n: usize,
    pub r: usize,
    pub states: Vec<Filling>,
    /// Moves out of each state, with the index of the target.
    pub moves: Vec<Vec<(usize, Transition)>>,
}

impl RatChain {
    pub fn build(n: usize, r: usize) -> Result<RatChain> {
        let sector = Sector(vec![r]);
        let states: Vec<Filling> = sector_states(n, &sector)?.iter().flat_map(enumerate_fillings).collect();
        let index: BTreeMap<&Filling, usize> = states.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let mut all = Vec::with_capacity(states.len());
        for f in &states {
            let out = transitions(f)?
                .into_iter()
                .map(|t| {
                    let j = *index
                        .get(&t.target)
                        .ok_or_else(|| Error::InvalidTiling("target is not canonical".into()))?;
                    Ok((j, t))
                })
                .collect::<Result<Vec<_>>>()?;
            all.push(out);
        }
        Ok(RatChain {
            n,
            r,
            states,
            moves: all,
        })
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// The chain with numeric rates; each move has probability
    /// `rate / (n + 1)`.
    pub fn system(&self, alpha: Rational, beta: Rational, q: Rational) -> Result<ChainSystem<Filling>> {
        let params = RateParams::uniform(2, alpha, beta, q);
        params.validate(2)?;
        let mut edges = Vec::new();
        for (i, out) in self.moves.iter().enumerate() {
            for (j, t) in out {
                edges.push((i, *j, params.rate(t.label)?));
            }
        }
        Ok(ChainSystem::new(self.states.clone(), edges, self.n as u64 + 1))
    }

    /// True when every move changes the weight as promised.
    pub fn contracts_hold(&self) -> bool {
        self.moves.iter().enumerate().all(|(i, out)| {
            let f = &self.states[i];
            out.iter()
                .all(|(j, t)| delta(f.exponents(), self.states[*j].exponents()) == weight_contract(f, t))
        })
    }
}

/// The chain of a two-species sector.
pub fn chain(n: usize, r: usize) -> Result<RatChain> {
    RatChain::build(n, r)
}

/// Outcome of comparing the tableau chain with the PASEP move by move.
#[derive(Clone, Debug, Default)]
pub struct ProjectionReport {
    pub states: usize,
    pub pasep_states: usize,
    /// Every tableau move is a PASEP move with the same rate.
    pub forward_ok: bool,
    /// Every PASEP move lifts to exactly one tableau move from each preimage.
    pub lift_ok: bool,
    /// Each state keeps the same self-loop mass as its word.
    pub self_loop_ok: bool,
    pub failures: Vec<String>,
}

impl ProjectionReport {
    pub fn passed(&self) -> bool {
        self.forward_ok && self.lift_ok && self.self_loop_ok
    }
}

/// Checks that the chain projects onto the PASEP under `type`.
pub fn projection_check(rc: &RatChain) -> Result<ProjectionReport> {
    let words = sector_states(rc.n, &Sector(vec![rc.r]))?;
    let mut report = ProjectionReport {
        states: rc.len(),
        pasep_states: words.len(),
        forward_ok: true,
        lift_ok: true,
        self_loop_ok: true,
        failures: Vec::new(),
    };
    for (i, out) in rc.moves.iter().enumerate() {
        let f = &rc.states[i];
        let pasep: BTreeMap<Word, RateLabel> = moves(f.word()).into_iter().collect();
        let mut lifted: BTreeMap<&Word, Vec<RateLabel>> = BTreeMap::new();
        for (j, t) in out {
            let to = rc.states[*j].word();
            lifted.entry(to).or_default().push(t.label);
            if pasep.get(to) != Some(&t.label) {
                report.forward_ok = false;
                report
                    .failures
                    .push(format!("{} at {}: no matching PASEP move", f.word(), t.locus));
            }
        }
        for (to, label) in &pasep {
            if lifted.get(to).map(Vec::as_slice) != Some(&[*label][..]) {
                report.lift_ok = false;
                report
                    .failures
                    .push(format!("{} -> {}: not lifted exactly once", f.word(), to));
            }
        }
        let ours = out.iter().fold(LaurentPoly::zero(), |acc, (_, t)| acc + t.rate());
        let theirs = pasep.values().fold(LaurentPoly::zero(), |acc, l| acc + l.symbolic());
        if ours != theirs {
            report.self_loop_ok = false;
            report
                .failures
                .push(format!("{}: total outgoing rate differs", f.word()));
        }
    }
    Ok(report)
}

/// Weighted flow through one state, with symbolic rates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceReport {
    pub state: Filling,
    /// `wt(F)` times the total rate of the moves out of `F`.
    pub outflow: LaurentPoly,
    /// Sum of `wt(S)` times the rate of `S -> F` over all moves into `F`.
    pub inflow: LaurentPoly,
    /// `wt(F)` times the outgoing rate predicted by the profile.
    pub profile_outflow: LaurentPoly,
}

impl BalanceReport {
    pub fn passed(&self) -> bool {
        self.outflow == self.inflow && self.outflow == self.profile_outflow
    }
}

/// Balance of weighted flow at every state of the chain.
pub fn detailed_balance_check(rc: &RatChain) -> Result<Vec<BalanceReport>> {
    let weights: Vec<LaurentPoly> = rc.states.iter().map(Filling::wt).collect();
    let mut inflow = vec![LaurentPoly::zero(); rc.len()];
    let mut reports = Vec::with_capacity(rc.len());
    for (i, out) in rc.moves.iter().enumerate() {
        for (j, t) in out {
            inflow[*j] += &(&weights[i] * &t.rate());
        }
    }
    for (i, (f, inflow)) in rc.states.iter().zip(inflow).enumerate() {
        let rate = rc.moves[i]
            .iter()
            .fold(LaurentPoly::zero(), |acc, (_, t)| acc + t.rate());
        reports.push(BalanceReport {
            state: f.clone(),
            outflow: &weights[i] * &rate,
            inflow,
            profile_outflow: &weights[i] * &Profile::of(f)?.outflow_rate(),
        });
    }
    Ok(reports)
}

/// Weights of the states at numeric parameters, normalized to sum to one.
pub fn weight_distribution(rc: &RatChain, alpha: &Rational, beta: &Rational, q: &Rational) -> Result<Vec<Rational>> {
    let assign = crate::polyring::assign_abq(alpha.clone(), beta.clone(), q.clone());
    let raw = rc
        .states
        .iter()
        .map(|f| f.wt().eval(&assign))
        .collect::<Result<Vec<_>>>()?;
    let total: Rational = raw.iter().sum();
    Ok(raw.into_iter().map(|x| x / &total).collect())
}

/// Sums a distribution on tableau states over each word.
pub fn pushforward(rc: &RatChain, pi: &[Rational]) -> BTreeMap<Word, Rational> {
    let mut out: BTreeMap<Word, Rational> = BTreeMap::new();
    for (f, p) in rc.states.iter().zip(pi) {
        *out.entry(f.word().clone()).or_default() += p;
    }
    out
}

/// Outcome of the stationary comparisons at one parameter point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StationaryReport {
    pub irreducible: bool,
    /// The normalized weights are fixed by the chain.
    pub weights_stationary: bool,
    /// Their pushforward is the PASEP's stationary distribution.
    pub pushforward_matches: bool,
}

impl StationaryReport {
    pub fn passed(&self) -> bool {
        self.irreducible && self.weights_stationary && self.pushforward_matches
    }
}

/// Compares the chain's stationary behavior with the weights and with the
/// PASEP. Since the chain is irreducible, a fixed probability vector is the
/// unique stationary distribution.
pub fn stationary_check(rc: &RatChain, alpha: &Rational, beta: &Rational, q: &Rational) -> Result<StationaryReport> {
    let system = rc.system(alpha.clone(), beta.clone(), q.clone())?;
    let pi = weight_distribution(rc, alpha, beta, q)?;
    let params = RateParams::uniform(2, alpha.clone(), beta.clone(), q.clone());
    let pasep = stationary_exact(rc.n, &Sector(vec![rc.r]), &params)?;
    Ok(StationaryReport {
        irreducible: system.is_irreducible(),
        weights_stationary: system.is_stationary(&pi),
        pushforward_matches: pushforward(rc, &pi) == pasep,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rat;
    use crate::rhombic::filling::enumerate_fillings_on;
    use crate::rhombic::tiling::Tiling;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn only(word: &str, symbols: &[((usize, usize), Symbol)]) -> Filling {
        Filling::new(Tiling::maximal(&w(word)), symbols.iter().copied().collect()).unwrap()
    }

    #[test]
    fn loci_of_two_letter_words() {
        let ad = only("ad", &[]);
        let pair = (Letter::A(1), Letter::D);
        assert_eq!(loci(&ad), vec![Locus::InnerCorner { at: 0, pair }, Locus::EmptyDStrip]);
        let ea = only("ea", &[]);
        let pair = (Letter::E, Letter::A(1));
        assert_eq!(loci(&ea), vec![Locus::InnerCorner { at: 0, pair }, Locus::EmptyEStrip]);
        let da = only("da", &[]);
        assert_eq!(
            loci(&da),
            vec![Locus::Corner {
                at: 0,
                pair: (Letter::D, Letter::A(1))
            }]
        );
    }

    #[test]
    fn small_chain_moves() {
        let da_beta = only("da", &[((0, 1), Symbol::Beta)]);
        assert_eq!(classify_corner(&da_beta, 0).unwrap(), CornerClass::Beta);
        let t = transition(&da_beta, loci(&da_beta)[0]).unwrap();
        assert_eq!(t.target, only("ad", &[]));
        assert_eq!(t.rate(), LaurentPoly::one());

        let ea = only("ea", &[]);
        let t = transition(&ea, Locus::EmptyEStrip).unwrap();
        assert_eq!(t.target, da_beta);
        assert_eq!(t.rate(), LaurentPoly::alpha());

        let ad = only("ad", &[]);
        let t = transition(&ad, loci(&ad)[0]).unwrap();
        assert_eq!(t.target, only("da", &[]));
        assert_eq!(t.rate(), LaurentPoly::q());
        assert!(matches!(transition(&ad, Locus::EmptyEStrip), Err(Error::NotALocus)));
    }

    #[test]
    fn two_one_has_six_states() {
        let rc = chain(2, 1).unwrap();
        assert_eq!(rc.len(), 6);
        assert!(rc.contracts_hold());
        assert!(projection_check(&rc).unwrap().passed());
    }

    #[test]
    fn balance_at_ad_and_ea() {
        let rc = chain(2, 1).unwrap();
        let reports = detailed_balance_check(&rc).unwrap();
        let ad = reports.iter().find(|r| r.state == only("ad", &[])).unwrap();
        assert_eq!(ad.outflow, "alpha*beta + alpha*q".parse().unwrap());
        assert!(ad.passed());
        let ea = reports.iter().find(|r| r.state == only("ea", &[])).unwrap();
        assert_eq!(ea.outflow, "alpha*beta + beta*q".parse().unwrap());
        assert!(reports.iter().all(BalanceReport::passed));
    }

    #[test]
    fn classification_routes_agree_on_every_tiling() {
        for n in 2..=4 {
            for r in 0..=n {
                for word in sector_states(n, &Sector(vec![r])).unwrap() {
                    for t in Tiling::maximal(&word).flip_class() {
                        for f in enumerate_fillings_on(&t) {
                            for p in 0..n - 1 {
                                if is_corner(&word, p) {
                                    assert_eq!(
                                        classify_corner(&f, p).unwrap(),
                                        classify_corner_by_strip(&f, p).unwrap()
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn not_a_corner() {
        let f = only("ad", &[]);
        assert!(matches!(classify_corner(&f, 0), Err(Error::NotALocus)));
    }

    #[test]
    fn stationary_for_small_sectors() {
        let (a, b, q) = (rat(1, 2), rat(1, 3), rat(1, 5));
        for (n, r) in [(2, 1), (3, 1), (3, 2)] {
            let rc = chain(n, r).unwrap();
            let report = stationary_check(&rc, &a, &b, &q).unwrap();
            assert!(report.passed(), "{n} {r}: {report:?}");
            let solved = rc
                .system(a.clone(), b.clone(), q.clone())
                .unwrap()
                .stationary()
                .unwrap();
            assert_eq!(solved, weight_distribution(&rc, &a, &b, &q).unwrap());
        }
    }
}
