//! Infinite transfer matrices `D`, `E` and `A_s` indexed by tuples
//! `(i, j_1, ..., j_{k-1})`, with a single swap parameter `q`.
//!
//! Every row has finitely many nonzero entries, so products are computed by
//! sparse left-to-right contraction starting from the bra (the indicator of
//! `(0, 0, ..., 0)`) and closed with the all-ones ket.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use crate::error::Result;
use crate::pasep::{sector_states, Letter, Sector, Word};
use crate::polyring::{binomial, qint, LaurentPoly, Monomial, Rational, Var};

/// Row or column index: `i` free d-strips and `j[s-1]` letters `a_s`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexTuple {
    pub i: usize,
    pub j: Vec<usize>,
}

impl IndexTuple {
    pub fn new(i: usize, j: Vec<usize>) -> Self {
        IndexTuple { i, j }
    }

    /// The bra's support, `(0, 0, ..., 0)` for `k` species.
    pub fn origin(k: usize) -> Self {
        IndexTuple {
            i: 0,
            j: vec![0; k - 1],
        }
    }

    pub fn j_total(&self) -> usize {
        self.j.iter().sum()
    }

    /// All tuples with `i <= imax` and `sum(j) <= jmax`.
    pub fn window(k: usize, imax: usize, jmax: usize) -> Vec<IndexTuple> {
        let mut js = vec![Vec::new()];
        for _ in 1..k {
            js = js
                .into_iter()
                .flat_map(|prefix: Vec<usize>| {
                    let used: usize = prefix.iter().sum();
                    (0..=jmax - used).map(move |x| {
                        let mut v = prefix.clone();
                        v.push(x);
                        v
                    })
                })
                .collect();
        }
        (0..=imax)
            .flat_map(|i| js.iter().map(move |j| IndexTuple::new(i, j.clone())))
            .collect()
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.i)?;
        for j in &self.j {
            write!(f, ",{j}")?;
        }
        f.write_str(")")
    }
}

/// One of the transfer matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Op {
    D,
    A(u8),
    E,
}

impl Op {
    pub fn of(letter: Letter) -> Op {
        match letter {
            Letter::D => Op::D,
            Letter::A(s) => Op::A(s),
            Letter::E => Op::E,
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Op::D => f.write_str("D"),
            Op::A(s) => write!(f, "A{s}"),
            Op::E => f.write_str("E"),
        }
    }
}

fn int(n: Rational) -> LaurentPoly {
    LaurentPoly::constant(n)
}

/// The nonzero entries of one row of `op`.
pub fn row(op: Op, idx: &IndexTuple) -> Vec<(IndexTuple, LaurentPoly)> {
    let i = idx.i;
    match op {
        Op::D => vec![(IndexTuple::new(i + 1, idx.j.clone()), LaurentPoly::abq(0, -1, 0))],
        Op::A(s) => {
            let s = s as usize;
            let mut j = idx.j.clone();
            j[s - 1] += 1;
            let heavier: usize = idx.j[s..].iter().sum();
            (0..=i)
                .map(|u| {
                    let m = Monomial::abq(0, (i - u) as i32, (u + heavier) as u32);
                    (
                        IndexTuple::new(u, j.clone()),
                        LaurentPoly::term(m, binomial(i as u64, u as u64)),
                    )
                })
                .collect()
        }
        Op::E => {
            let jt = idx.j_total() as u32;
            let alpha = LaurentPoly::alpha();
            let inner = &LaurentPoly::abq(0, 0, jt) + &(&alpha * &qint(jt));
            (0..=i)
                .map(|u| {
                    let head = &(&int(binomial(i as u64, u as u64)) * &LaurentPoly::abq(0, 0, u as u32)) * &inner;
                    let mut tail = LaurentPoly::zero();
                    for w in 0..u {
                        tail.add_term(
                            Monomial::abq(0, 0, w as u32),
                            binomial((i - u + w) as u64, (i - u) as u64),
                        );
                    }
                    let bracket = &head + &(&alpha * &tail);
                    let value = &LaurentPoly::abq(-1, (i - u) as i32, 0) * &bracket;
                    (IndexTuple::new(u, idx.j.clone()), value)
                })
                .collect()
        }
    }
}

/// A single matrix entry.
pub fn entry(op: Op, row_idx: &IndexTuple, col: &IndexTuple) -> LaurentPoly {
    row(op, row_idx)
        .into_iter()
        .find(|(c, _)| c == col)
        .map(|(_, v)| v)
        .unwrap_or_default()
}

pub fn entry_d(row_idx: &IndexTuple, col: &IndexTuple) -> LaurentPoly {
    entry(Op::D, row_idx, col)
}

pub fn entry_a(s: u8, row_idx: &IndexTuple, col: &IndexTuple) -> LaurentPoly {
    entry(Op::A(s), row_idx, col)
}

pub fn entry_e(row_idx: &IndexTuple, col: &IndexTuple) -> LaurentPoly {
    entry(Op::E, row_idx, col)
}

/// A sparse row vector.
pub type SparseVec = BTreeMap<IndexTuple, LaurentPoly>;

/// `v * op`.
pub fn apply(v: &SparseVec, op: Op) -> SparseVec {
    let mut out = SparseVec::new();
    for (idx, coeff) in v {
        for (col, value) in row(op, idx) {
            *out.entry(col).or_default() += &(coeff * &value);
        }
    }
    out.retain(|_, p| !p.is_zero());
    out
}

/// `v * (op_1 op_2 ... op_m)`.
pub fn apply_all(v: &SparseVec, ops: &[Op]) -> SparseVec {
    ops.iter().fold(v.clone(), |acc, &op| apply(&acc, op))
}

/// Contraction with the all-ones ket.
pub fn ket(v: &SparseVec) -> LaurentPoly {
    v.values().fold(LaurentPoly::zero(), |acc, p| &acc + p)
}

pub fn bra(k: usize) -> SparseVec {
    SparseVec::from([(IndexTuple::origin(k), LaurentPoly::one())])
}

/// `<w| X(W) |v>`, where `X(W)` replaces each letter by its matrix.
pub fn bracket(w: &Word, k: usize) -> LaurentPoly {
    let ops: Vec<Op> = w.letters().iter().map(|&l| Op::of(l)).collect();
    ket(&apply_all(&bra(k), &ops))
}

/// Sum of brackets over a sector.
pub fn z_partition(n: usize, sector: &Sector) -> Result<LaurentPoly> {
    let k = sector.k();
    Ok(sector_states(n, sector)?
        .iter()
        .fold(LaurentPoly::zero(), |acc, w| &acc + &bracket(w, k)))
}

/// The same partition function read off as the coefficient of
/// `y_1^{r_1} ... y_{k-1}^{r_{k-1}}` in `<w|(D + sum y_s A_s + E)^n|v>`.
pub fn z_partition_markers(n: usize, sector: &Sector) -> Result<LaurentPoly> {
    sector.check(n)?;
    let k = sector.k();
    let mut v = bra(k);
    for _ in 0..n {
        let mut next = apply(&v, Op::D);
        for (idx, p) in apply(&v, Op::E) {
            *next.entry(idx).or_default() += &p;
        }
        for s in 1..k as u8 {
            let y = LaurentPoly::var(Var::Y(s));
            for (idx, p) in apply(&v, Op::A(s)) {
                *next.entry(idx).or_default() += &(&y * &p);
            }
        }
        next.retain(|_, p| !p.is_zero());
        v = next;
    }
    let mut total = ket(&v);
    for (s, &r) in sector.0.iter().enumerate() {
        total = total.coeff_extract(Var::Y(s as u8 + 1), r as i32);
    }
    Ok(total)
}

/// A quadratic relation checked entrywise as `lhs - lambda * rhs = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `DE - qED = lambda (D + E)`
    DE,
    /// `D A_s - q A_s D = lambda A_s`
    DA(u8),
    /// `A_s E - q E A_s = lambda A_s`
    AE(u8),
    /// `A_t A_s = q A_s A_t` for `t > s`
    AA(u8, u8),
}

impl Relation {
    /// Every relation for `k` species.
    pub fn all(k: usize) -> Vec<Relation> {
        let mut out = vec![Relation::DE];
        for s in 1..k as u8 {
            out.push(Relation::DA(s));
            out.push(Relation::AE(s));
        }
        for t in 1..k as u8 {
            for s in 1..t {
                out.push(Relation::AA(t, s));
            }
        }
        out
    }

    /// Signed operator words whose sum must vanish.
    fn terms(self, lambda: &LaurentPoly) -> Vec<(LaurentPoly, Vec<Op>)> {
        let one = LaurentPoly::one();
        let mq = -LaurentPoly::q();
        let ml = -lambda;
        match self {
            Relation::DE => vec![
                (one, vec![Op::D, Op::E]),
                (mq, vec![Op::E, Op::D]),
                (ml.clone(), vec![Op::D]),
                (ml, vec![Op::E]),
            ],
            Relation::DA(s) => vec![
                (one, vec![Op::D, Op::A(s)]),
                (mq, vec![Op::A(s), Op::D]),
                (ml, vec![Op::A(s)]),
            ],
            Relation::AE(s) => vec![
                (one, vec![Op::A(s), Op::E]),
                (mq, vec![Op::E, Op::A(s)]),
                (ml, vec![Op::A(s)]),
            ],
            Relation::AA(t, s) => vec![(one, vec![Op::A(t), Op::A(s)]), (mq, vec![Op::A(s), Op::A(t)])],
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::DE => f.write_str("DE-qED=lambda(D+E)"),
            Relation::DA(s) => write!(f, "DA{s}-qA{s}D=lambda*A{s}"),
            Relation::AE(s) => write!(f, "A{s}E-qEA{s}=lambda*A{s}"),
            Relation::AA(t, s) => write!(f, "A{t}A{s}=qA{s}A{t}"),
        }
    }
}

/// Result of checking one relation on a window of rows.
#[derive(Clone, Debug)]
pub struct RelationReport {
    pub relation: Relation,
    pub lambda: LaurentPoly,
    pub imax: usize,
    pub jmax: usize,
    /// Nonzero entries `(row, col, value)` of `lhs - lambda * rhs`.
    pub residuals: Vec<(IndexTuple, IndexTuple, LaurentPoly)>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.residuals.is_empty()
    }
}

/// Checks a relation on every row with `i <= imax`, `sum(j) <= jmax`, over
/// all columns those rows reach.
pub fn relation_check(k: usize, relation: Relation, imax: usize, jmax: usize, lambda: &LaurentPoly) -> RelationReport {
    let terms = relation.terms(lambda);
    let mut residuals = Vec::new();
    for idx in IndexTuple::window(k, imax, jmax) {
        let start = SparseVec::from([(idx.clone(), LaurentPoly::one())]);
        let mut total = SparseVec::new();
        for (coeff, ops) in &terms {
            for (col, p) in apply_all(&start, ops) {
                *total.entry(col).or_default() += &(coeff * &p);
            }
        }
        for (col, p) in total {
            if !p.is_zero() {
                residuals.push((idx.clone(), col, p));
            }
        }
    }
    RelationReport {
        relation,
        lambda: lambda.clone(),
        imax,
        jmax,
        residuals,
    }
}

/// Checks `<w| E = (1/alpha) <w|` and that every row of `D` in the window
/// sums to `1/beta`, i.e. `D |v> = (1/beta) |v>`.
pub fn boundary_check(k: usize, imax: usize, jmax: usize) -> bool {
    let origin_row = apply(&bra(k), Op::E);
    let expected = SparseVec::from([(IndexTuple::origin(k), LaurentPoly::abq(-1, 0, 0))]);
    let inv_beta = LaurentPoly::abq(0, -1, 0);
    origin_row == expected
        && IndexTuple::window(k, imax, jmax).iter().all(|idx| {
            let sum = row(Op::D, idx)
                .into_iter()
                .fold(LaurentPoly::zero(), |acc, (_, v)| &acc + &v);
            sum == inv_beta
        })
}

/// The constant 1, the value of lambda the matrices satisfy.
pub fn lambda_one() -> LaurentPoly {
    LaurentPoly::constant(Rational::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(i: usize, j: &[usize]) -> IndexTuple {
        IndexTuple::new(i, j.to_vec())
    }

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn d_entries() {
        assert_eq!(entry_d(&t(0, &[0]), &t(1, &[0])), p("beta^-1"));
        assert!(entry_d(&t(2, &[1]), &t(2, &[1])).is_zero());
        assert_eq!(entry_d(&t(3, &[1, 2]), &t(4, &[1, 2])), p("beta^-1"));
    }

    #[test]
    fn a_entries() {
        assert_eq!(entry_a(1, &t(2, &[0]), &t(1, &[1])), p("2*beta*q"));
        assert_eq!(entry_a(1, &t(0, &[0]), &t(0, &[1])), LaurentPoly::one());
        assert_eq!(entry_a(1, &t(0, &[0, 2]), &t(0, &[1, 2])), p("q^2"));
        assert!(entry_a(1, &t(1, &[0]), &t(2, &[1])).is_zero());
        assert!(entry_a(2, &t(0, &[0, 2]), &t(0, &[1, 2])).is_zero());
    }

    #[test]
    fn e_entries() {
        assert_eq!(entry_e(&t(0, &[0]), &t(0, &[0])), p("alpha^-1"));
        assert_eq!(entry_e(&t(1, &[0]), &t(0, &[0])), p("alpha^-1*beta"));
        assert_eq!(entry_e(&t(1, &[0]), &t(1, &[0])), p("1 + alpha^-1*q"));
        assert!(entry_e(&t(1, &[0]), &t(2, &[0])).is_zero());
        assert!(entry_e(&t(1, &[0]), &t(1, &[1])).is_zero());
    }

    #[test]
    fn brackets() {
        assert_eq!(bracket(&w("d"), 1), p("beta^-1"));
        assert_eq!(bracket(&w("de"), 1), p("alpha^-1*beta^-1*q + alpha^-1 + beta^-1"));
        assert_eq!(bracket(&w("a"), 2), LaurentPoly::one());
    }

    #[test]
    fn partition_functions() {
        assert_eq!(z_partition(1, &Sector(vec![])).unwrap(), p("alpha^-1 + beta^-1"));
        let z2 = z_partition(2, &Sector(vec![])).unwrap();
        let expected = &(&bracket(&w("de"), 1) + &p("alpha^-1*beta^-1")) + &p("beta^-2 + alpha^-2");
        assert_eq!(z2, expected);
        for (n, sector) in [(2, vec![1]), (3, vec![1]), (3, vec![1, 1]), (4, vec![2, 1])] {
            let sector = Sector(sector);
            assert_eq!(
                z_partition(n, &sector).unwrap(),
                z_partition_markers(n, &sector).unwrap()
            );
        }
    }

    #[test]
    fn relations_hold_with_lambda_one() {
        for k in [2, 3] {
            for rel in Relation::all(k) {
                let report = relation_check(k, rel, 4, 2, &lambda_one());
                assert!(report.passed(), "{rel}: {:?}", report.residuals.first());
            }
            assert!(boundary_check(k, 4, 2));
        }
    }

    #[test]
    fn relations_fail_with_lambda_alpha_beta() {
        let ab = LaurentPoly::abq(1, 1, 0);
        assert!(!relation_check(2, Relation::DE, 2, 2, &ab).passed());
        assert!(!relation_check(2, Relation::DA(1), 2, 2, &ab).passed());
    }

    #[test]
    fn window_size() {
        assert_eq!(IndexTuple::window(2, 8, 4).len(), 9 * 5);
        assert_eq!(IndexTuple::window(3, 8, 4).len(), 9 * 15);
        assert_eq!(IndexTuple::window(1, 3, 4).len(), 4);
    }
}
