//! Exact rationals, monomials under graded reverse lexicographic order and
//! sparse multivariate polynomials.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `a` or `a/b` with an optional leading sign.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("expected a point with {expected} coordinates, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("polynomial is not homogeneous")]
    Inhomogeneous,
}

/// Exponent vector. Ordered by total degree, ties broken reverse
/// lexicographically from the last variable, so `x0 > x1 > ...`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
    deg: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let deg = exps.iter().sum();
        Monomial { exps, deg }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars], deg: 0 }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps, deg: 1 }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        Monomial::new(other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i)
    }
}

impl Mul for &Monomial {
    type Output = Monomial;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&rhs.exps).map(|(a, b)| a + b).collect(), deg: self.deg + rhs.deg }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg.cmp(&other.deg).then_with(|| {
            for (a, b) in self.exps.iter().zip(&other.exps).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Degree(u32),
    Inhomogeneous,
}

/// Sparse polynomial: no stored zero coefficients, largest term last.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(nvars, i), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Polynomial::zero(m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars);
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn term_map(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn into_term_map(self) -> BTreeMap<Monomial, Rational> {
        self.terms
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.last_key_value()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.last_key_value().map(|(m, _)| m)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => Homogeneity::Zero,
            Some(d) if degs.all(|e| e == d) => Homogeneity::Degree(d),
            Some(_) => Homogeneity::Inhomogeneous,
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneity() != Homogeneity::Inhomogeneous
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * shift * g`.
    pub fn add_scaled_shifted(&mut self, g: &Polynomial, c: &Rational, shift: &Monomial) {
        for (m, d) in &g.terms {
            self.add_term(m * shift, c * d);
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect() }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::constant(self.nvars, Rational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative. Panics on an out-of-range index.
    pub fn partial(&self, var: usize) -> Polynomial {
        assert!(var < self.nvars, "variable index out of range");
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exps[var];
            if e > 0 {
                let mut exps = m.exps.clone();
                exps[var] -= 1;
                out.add_term(Monomial::new(exps), c * rat(e as i64));
            }
        }
        out
    }

    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.nvars).map(|i| self.partial(i)).collect()
    }

    /// Evaluation at a point over any field containing the rationals.
    pub fn eval_in<F: crate::linalg::Field>(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.nvars, "point dimension mismatch");
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = F::from_rational(c);
            for (i, &e) in m.exps.iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&point[i]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Replaces `x_i` by `images[i]`; all images share one ambient ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut out = Polynomial::zero(target);
        let mut powers: Vec<Vec<Polynomial>> =
            images.iter().map(|p| vec![Polynomial::constant(target, Rational::one()), p.clone()]).collect();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            out = &out + &t;
        }
        out
    }

    /// Same polynomial viewed in a ring with more variables.
    pub fn extend_vars(&self, nvars: usize) -> Polynomial {
        assert!(nvars >= self.nvars);
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = m.exps.clone();
            exps.resize(nvars, 0);
            (Monomial::new(exps), c.clone())
        });
        Polynomial { nvars, terms: terms.collect() }
    }
}

pub fn partial_derivative(p: &Polynomial, var: usize) -> Result<Polynomial, ArithError> {
    if var >= p.nvars {
        return Err(ArithError::VariableOutOfRange { index: var, nvars: p.nvars });
    }
    Ok(p.partial(var))
}

pub fn evaluate(p: &Polynomial, point: &[Rational]) -> Result<Rational, ArithError> {
    if point.len() != p.nvars {
        return Err(ArithError::DimensionMismatch { expected: p.nvars, found: point.len() });
    }
    Ok(p.eval_in(point))
}

/// `sum_i x_i * dp/dx_i`, which equals `deg(p) * p` for homogeneous `p`.
pub fn euler_weighted_sum(p: &Polynomial) -> Result<Polynomial, ArithError> {
    if !p.is_homogeneous() {
        return Err(ArithError::Inhomogeneous);
    }
    let mut out = Polynomial::zero(p.nvars);
    for i in 0..p.nvars {
        out = &out + &(&Polynomial::var(p.nvars, i) * &p.partial(i));
    }
    Ok(out)
}

/// All monomials of total degree `d` in `nvars` variables, ascending.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if nvars == 0 {
        return if d == 0 { vec![Monomial::one(0)] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; nvars], &mut out);
    out.sort();
    out
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for c in self.terms.values_mut() {
            *c = -&*c;
        }
        self
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                out.add_term(a * b, c * d);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        write!(f, "x{i}")?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Prints largest term first, e.g. `x2^2 - x1*x3` or `3/2*x0*x1 + 5`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at offset {pos}")]
pub struct ParseError {
    pub pos: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character '{0}'")]
    Unexpected(char),
    #[error("unexpected end of input")]
    End,
    #[error("unknown variable '{0}'")]
    UnknownVariable(String),
    #[error("variable index {index} out of range for {nvars} variables")]
    OutOfRange { index: usize, nvars: usize },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("bad exponent")]
    BadExponent,
}

/// Maps a variable token (letters followed by optional digits) to a scaled
/// variable: `Some((c, i))` means the token stands for `c * x_i`.
pub type Resolver<'a> = dyn Fn(&str, &str) -> Option<(Rational, usize)> + 'a;

/// `x<k>` and its alias `y<k>`.
pub fn default_resolver(letters: &str, digits: &str) -> Option<(Rational, usize)> {
    match letters {
        "x" | "y" => digits.parse().ok().map(|i| (Rational::one(), i)),
        _ => None,
    }
}

pub fn parse_poly(text: &str, nvars: usize) -> Result<Polynomial, ParseError> {
    parse_poly_with(text, nvars, &default_resolver)
}

pub fn parse_poly_with(text: &str, nvars: usize, resolver: &Resolver<'_>) -> Result<Polynomial, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, nvars, resolver };
    p.skip_ws();
    if p.peek().is_none() {
        return Err(p.err(ParseErrorKind::End));
    }
    let out = p.expr()?;
    p.skip_ws();
    match p.peek() {
        None => Ok(out),
        Some(c) => Err(p.err(ParseErrorKind::Unexpected(c as char))),
    }
}

struct Parser<'s, 'r> {
    src: &'s [u8],
    pos: usize,
    nvars: usize,
    resolver: &'r Resolver<'r>,
}

impl<'s> Parser<'s, '_> {
    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { pos: self.pos, kind }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut sign = Rational::one();
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                sign = -sign;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        let mut acc = self.term()?.scale(&sign);
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn digits(&mut self) -> &'s str {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let src: &'s [u8] = self.src;
        core::str::from_utf8(&src[start..self.pos]).unwrap()
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let d = self.digits();
        d.parse().map_err(|_| self.err(ParseErrorKind::BadExponent))
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let c = match self.peek() {
            None => return Err(self.err(ParseErrorKind::End)),
            Some(c) => c,
        };
        let base = if c == b'(' {
            self.pos += 1;
            let inner = self.expr()?;
            match self.peek() {
                Some(b')') => self.pos += 1,
                Some(c) => return Err(self.err(ParseErrorKind::Unexpected(c as char))),
                None => return Err(self.err(ParseErrorKind::End)),
            }
            inner
        } else if c.is_ascii_digit() {
            let num: BigInt = self.digits().parse().unwrap();
            let mut value = Rational::from_integer(num);
            if self.peek() == Some(b'/') {
                self.pos += 1;
                self.skip_ws();
                let at = self.pos;
                let d = self.digits();
                if d.is_empty() {
                    return Err(match self.peek() {
                        Some(c) => self.err(ParseErrorKind::Unexpected(c as char)),
                        None => self.err(ParseErrorKind::End),
                    });
                }
                let den: BigInt = d.parse().unwrap();
                if den.is_zero() {
                    return Err(ParseError { pos: at, kind: ParseErrorKind::ZeroDenominator });
                }
                value /= Rational::from_integer(den);
            }
            Polynomial::constant(self.nvars, value)
        } else if c.is_ascii_alphabetic() {
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
                self.pos += 1;
            }
            let src: &'s [u8] = self.src;
            let letters = core::str::from_utf8(&src[start..self.pos]).unwrap();
            let digits = self.digits();
            let name = core::str::from_utf8(&src[start..self.pos]).unwrap();
            let (scale, index) = (self.resolver)(letters, digits)
                .ok_or_else(|| ParseError { pos: start, kind: ParseErrorKind::UnknownVariable(name.into()) })?;
            if index >= self.nvars {
                return Err(ParseError { pos: start, kind: ParseErrorKind::OutOfRange { index, nvars: self.nvars } });
            }
            Polynomial::var(self.nvars, index).scale(&scale)
        } else {
            return Err(self.err(ParseErrorKind::Unexpected(c as char)));
        };
        let e = self.exponent()?;
        Ok(if e == 1 { base } else { base.pow(e) })
    }
}
