//! Exact Laurent polynomials in `alpha`, `beta`, `q` and species markers
//! `y1, y2, ...` with arbitrary-precision rational coefficients.
//!
//! `alpha` and `beta` may carry negative exponents; `q` and the markers may
//! not. Every value is kept canonical: no zero coefficients are stored, and
//! terms are ordered lexicographically on the variable order
//! `alpha < beta < q < y1 < y2 < ...`.
//!
//! The string format produced by [`LaurentPoly`]'s `Display` impl is parsed
//! back by its `FromStr` impl. Terms are printed largest first and joined by
//! `" + "`; a term is a rational coefficient (omitted when it is 1, `-` when
//! it is -1) followed by `*`-separated powers such as `alpha^-1` or `q^3`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rational = BigRational;

/// Builds the rational `num/den`.
///
/// Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"`, `"p"` or `"-p/q"` into a rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Renders a rational as `p` or `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A polynomial variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Alpha,
    Beta,
    Q,
    /// Species marker `y_s`, `s >= 1`.
    Y(u8),
}

impl Var {
    fn allows_negative(self) -> bool {
        matches!(self, Var::Alpha | Var::Beta)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Alpha => f.write_str("alpha"),
            Var::Beta => f.write_str("beta"),
            Var::Q => f.write_str("q"),
            Var::Y(s) => write!(f, "y{s}"),
        }
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "alpha" => Ok(Var::Alpha),
            "beta" => Ok(Var::Beta),
            "q" => Ok(Var::Q),
            _ => s
                .strip_prefix('y')
                .and_then(|idx| idx.parse::<u8>().ok())
                .filter(|&idx| idx >= 1)
                .map(Var::Y)
                .ok_or_else(|| Error::Parse(format!("unknown variable `{s}`"))),
        }
    }
}

/// A monomial `alpha^a * beta^b * q^c * y1^d1 * ...`.
///
/// The derived ordering is lexicographic in the canonical variable order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    alpha: i32,
    beta: i32,
    q: u32,
    // trailing zeros trimmed
    y: Vec<u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    /// `alpha^a beta^b q^c`.
    pub fn abq(alpha: i32, beta: i32, q: u32) -> Self {
        Monomial {
            alpha,
            beta,
            q,
            y: Vec::new(),
        }
    }

    /// Single-variable power. Fails for a negative power of `q` or `y_s`.
    pub fn var_pow(var: Var, exp: i32) -> Result<Self> {
        let mut m = Self::one();
        m.set(var, exp)?;
        Ok(m)
    }

    pub fn exponent(&self, var: Var) -> i32 {
        match var {
            Var::Alpha => self.alpha,
            Var::Beta => self.beta,
            Var::Q => self.q as i32,
            Var::Y(s) => self.y.get(s as usize - 1).copied().unwrap_or(0) as i32,
        }
    }

    fn set(&mut self, var: Var, exp: i32) -> Result<()> {
        if exp < 0 && !var.allows_negative() {
            return Err(Error::NegativeExponent(var));
        }
        match var {
            Var::Alpha => self.alpha = exp,
            Var::Beta => self.beta = exp,
            Var::Q => self.q = exp as u32,
            Var::Y(s) => {
                let idx = s as usize - 1;
                if self.y.len() <= idx {
                    self.y.resize(idx + 1, 0);
                }
                self.y[idx] = exp as u32;
                while self.y.last() == Some(&0) {
                    self.y.pop();
                }
            }
        }
        Ok(())
    }

    /// Variables with nonzero exponent, in canonical order.
    pub fn powers(&self) -> impl Iterator<Item = (Var, i32)> + '_ {
        let head = [
            (Var::Alpha, self.alpha),
            (Var::Beta, self.beta),
            (Var::Q, self.q as i32),
        ];
        head.into_iter()
            .chain(self.y.iter().enumerate().map(|(i, &e)| (Var::Y(i as u8 + 1), e as i32)))
            .filter(|&(_, e)| e != 0)
    }

    pub fn is_one(&self) -> bool {
        self.alpha == 0 && self.beta == 0 && self.q == 0 && self.y.is_empty()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut y = vec![0; self.y.len().max(other.y.len())];
        for (i, slot) in y.iter_mut().enumerate() {
            *slot = self.y.get(i).copied().unwrap_or(0) + other.y.get(i).copied().unwrap_or(0);
        }
        Monomial {
            alpha: self.alpha + other.alpha,
            beta: self.beta + other.beta,
            q: self.q + other.q,
            y,
        }
    }

    fn without(&self, var: Var) -> Monomial {
        let mut m = self.clone();
        m.set(var, 0).expect("zero exponent is always valid");
        m
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (var, exp) in self.powers() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if exp == 1 {
                write!(f, "{var}")?;
            } else {
                write!(f, "{var}^{exp}")?;
            }
        }
        Ok(())
    }
}

/// Values substituted for variables by [`LaurentPoly::eval`].
pub type Assignment = BTreeMap<Var, Rational>;

/// Convenience constructor for an `alpha, beta, q` assignment.
pub fn assign_abq(alpha: Rational, beta: Rational, q: Rational) -> Assignment {
    [(Var::Alpha, alpha), (Var::Beta, beta), (Var::Q, q)]
        .into_iter()
        .collect()
}

/// A Laurent polynomial with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Rational::one())
    }

    pub fn var(var: Var) -> Self {
        Self::monomial(Monomial::var_pow(var, 1).expect("positive exponent"))
    }

    pub fn alpha() -> Self {
        Self::var(Var::Alpha)
    }

    pub fn beta() -> Self {
        Self::var(Var::Beta)
    }

    pub fn q() -> Self {
        Self::var(Var::Q)
    }

    /// `alpha^a beta^b q^c` with coefficient 1.
    pub fn abq(alpha: i32, beta: i32, q: u32) -> Self {
        Self::monomial(Monomial::abq(alpha, beta, q))
    }

    /// Builds a polynomial in `alpha, beta, q` from integer counts keyed by
    /// exponent triples.
    pub fn from_counts<I>(counts: I) -> Self
    where
        I: IntoIterator<Item = ((i32, i32, u32), u64)>,
    {
        let mut p = Self::zero();
        for ((a, b, c), n) in counts {
            p.add_term(Monomial::abq(a, b, c), Rational::from_integer(n.into()));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (ascending) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation; a ring homomorphism into the rationals.
    pub fn eval(&self, assign: &Assignment) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (var, exp) in m.powers() {
                let x = assign.get(&var).ok_or(Error::MissingAssignment(var))?;
                if exp < 0 && x.is_zero() {
                    return Err(Error::DivisionByZero(var));
                }
                v *= Pow::pow(x, exp);
            }
            total += v;
        }
        Ok(total)
    }

    /// Coefficient of `var^power`, as a polynomial free of `var`.
    pub fn coeff_extract(&self, var: Var, power: i32) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if m.exponent(var) == power {
                out.add_term(m.without(var), c.clone());
            }
        }
        out
    }

    /// Substitutes a rational for one variable, leaving the rest symbolic.
    pub fn substitute(&self, var: Var, value: &Rational) -> Result<Self> {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let exp = m.exponent(var);
            if exp < 0 && value.is_zero() {
                return Err(Error::DivisionByZero(var));
            }
            out.add_term(m.without(var), c * Pow::pow(value, exp));
        }
        Ok(out)
    }

    /// True when every coefficient is a positive rational.
    pub fn has_positive_coefficients(&self) -> bool {
        self.terms.values().all(Signed::is_positive)
    }
}

/// `[j]_q = 1 + q + ... + q^(j-1)`, with `[0]_q = 0`.
pub fn qint(j: u32) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for e in 0..j {
        p.add_term(Monomial::abq(0, 0, e), Rational::one());
    }
    p
}

/// Binomial coefficient as a rational.
pub fn binomial(n: u64, k: u64) -> Rational {
    if k > n {
        return Rational::zero();
    }
    Rational::from_integer(num_integer::binomial(BigInt::from(n), BigInt::from(k)))
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if m.is_one() {
                f.write_str(&format_rational(c))?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else if (-c).is_one() {
                write!(f, "-{m}")?;
            } else {
                write!(f, "{}*{m}", format_rational(c))?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut p = LaurentPoly::zero();
        for term in s.split(" + ") {
            let term = term.trim();
            let (sign, body) = match term.strip_prefix('-') {
                Some(rest) if rest.starts_with(|c: char| c.is_ascii_alphabetic()) => (-1, rest),
                _ => (1, term),
            };
            let mut coeff = Rational::from_integer(sign.into());
            let mut mono = Monomial::one();
            for factor in body.split('*') {
                let factor = factor.trim();
                if factor.starts_with(|c: char| c.is_ascii_digit() || c == '-') {
                    coeff *= parse_rational(factor)?;
                    continue;
                }
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => (
                        n,
                        e.parse::<i32>()
                            .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?,
                    ),
                    None => (factor, 1),
                };
                let var: Var = name.parse()?;
                let current = mono.exponent(var);
                mono.set(var, current + exp)?;
            }
            p.add_term(mono, coeff);
        }
        Ok(p)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}
