//! Dense exact linear algebra over ℚ and ℚ(i), plus an incremental sparse
//! row-echelon span used for membership and coordinate extraction.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{rat, Rational};

pub trait Field: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_rational(r: &Rational) -> Self;

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv().expect("division by zero"))
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

/// `re + im·i` with rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational { re, im: rat(0) }
    }

    pub fn i() -> Self {
        GaussianRational { re: rat(0), im: rat(1) }
    }

    pub fn is_real(&self) -> bool {
        Zero::is_zero(&self.im)
    }

    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -&self.im }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (Zero::is_zero(&self.re), Zero::is_zero(&self.im)) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) if self.im.is_negative() => write!(f, "{}-{}i", self.re, -&self.im),
            _ => write!(f, "{}+{}i", self.re, self.im),
        }
    }
}

impl Field for GaussianRational {
    fn zero() -> Self {
        GaussianRational::real(rat(0))
    }
    fn one() -> Self {
        GaussianRational::real(rat(1))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn add(&self, o: &Self) -> Self {
        GaussianRational { re: &self.re + &o.re, im: &self.im + &o.im }
    }
    fn sub(&self, o: &Self) -> Self {
        GaussianRational { re: &self.re - &o.re, im: &self.im - &o.im }
    }
    fn mul(&self, o: &Self) -> Self {
        GaussianRational { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }
    fn neg(&self) -> Self {
        GaussianRational { re: -&self.re, im: -&self.im }
    }
    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if Zero::is_zero(&n) {
            return None;
        }
        Some(GaussianRational { re: &self.re / &n, im: -&self.im / &n })
    }
    fn from_rational(r: &Rational) -> Self {
        GaussianRational::real(r.clone())
    }
}

pub type Matrix<F> = Vec<Vec<F>>;

pub fn zeros<F: Field>(rows: usize, cols: usize) -> Matrix<F> {
    vec![vec![F::zero(); cols]; rows]
}

pub fn identity<F: Field>(n: usize) -> Matrix<F> {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = F::one();
    }
    m
}

pub fn lift<F: Field>(m: &Matrix<Rational>) -> Matrix<F> {
    m.iter().map(|r| r.iter().map(F::from_rational).collect()).collect()
}

pub fn transpose<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn mat_mul<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    let cols = b.first().map_or(0, Vec::len);
    let mut out: Matrix<F> = zeros(a.len(), cols);
    for (i, row) in a.iter().enumerate() {
        for (k, aik) in row.iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for (j, bkj) in b[k].iter().enumerate() {
                if !bkj.is_zero() {
                    out[i][j] = out[i][j].add(&aik.mul(bkj));
                }
            }
        }
    }
    out
}

pub fn mat_vec<F: Field>(a: &Matrix<F>, v: &[F]) -> Vec<F> {
    a.iter()
        .map(|row| row.iter().zip(v).filter(|(x, y)| !x.is_zero() && !y.is_zero()).fold(F::zero(), |s, (x, y)| s.add(&x.mul(y))))
        .collect()
}

pub fn mat_add<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x.add(y)).collect()).collect()
}

pub fn mat_sub<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x.sub(y)).collect()).collect()
}

pub fn mat_scale<F: Field>(a: &Matrix<F>, c: &F) -> Matrix<F> {
    a.iter().map(|r| r.iter().map(|x| x.mul(c)).collect()).collect()
}

pub fn is_zero_matrix<F: Field>(a: &Matrix<F>) -> bool {
    a.iter().all(|r| r.iter().all(Field::is_zero))
}

pub fn dot<F: Field>(u: &[F], v: &[F]) -> F {
    u.iter().zip(v).fold(F::zero(), |s, (a, b)| s.add(&a.mul(b)))
}

/// `uᵀ M v`.
pub fn bilinear<F: Field>(m: &Matrix<F>, u: &[F], v: &[F]) -> F {
    dot(u, &mat_vec(m, v))
}

/// In-place reduced row echelon form; returns pivot columns.
pub fn rref<F: Field>(m: &mut Matrix<F>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().unwrap();
        for x in m[r].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    if !m[r][j].is_zero() {
                        let t = m[r][j].mul(&f);
                        m[i][j] = m[i][j].sub(&t);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Basis of `{v : M v = 0}`.
pub fn kernel<F: Field>(m: &Matrix<F>, cols: usize) -> Vec<Vec<F>> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![F::zero(); cols];
        v[free] = F::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = a[r][free].neg();
        }
        basis.push(v);
    }
    basis
}

pub fn inverse<F: Field>(m: &Matrix<F>) -> Option<Matrix<F>> {
    let n = m.len();
    let mut aug: Matrix<F> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn determinant<F: Field>(m: &Matrix<F>) -> F {
    let n = m.len();
    let mut a = m.clone();
    let mut det = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else { return F::zero() };
        if p != c {
            a.swap(p, c);
            det = det.neg();
        }
        det = det.mul(&a[c][c]);
        let inv = a[c][c].inv().unwrap();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].mul(&inv);
            for j in c..n {
                let t = a[c][j].mul(&f);
                a[i][j] = a[i][j].sub(&t);
            }
        }
    }
    det
}

/// Solves `M x = b` for one solution, if any.
pub fn solve<F: Field>(m: &Matrix<F>, b: &[F]) -> Option<Vec<F>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut aug: Matrix<F> = m
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut row = r.clone();
            row.push(x.clone());
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![F::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Some(x)
}

/// Characteristic polynomial `det(tI - M)` as coefficients, constant first
/// (Faddeev–LeVerrier).
pub fn characteristic_polynomial(m: &Matrix<Rational>) -> Vec<Rational> {
    let n = m.len();
    let mut coeffs = vec![rat(0); n + 1];
    coeffs[n] = rat(1);
    let mut mk: Matrix<Rational> = zeros(n, n);
    for k in 1..=n {
        let mut next = mat_mul(m, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        mk = next;
        let am = mat_mul(m, &mk);
        let tr: Rational = (0..n).map(|i| am[i][i].clone()).fold(rat(0), |a, b| a + b);
        coeffs[n - k] = -tr / rat(k as i64);
    }
    coeffs
}

fn eval_gauss_int(coeffs: &[BigInt], re: &BigInt, im: &BigInt) -> (BigInt, BigInt) {
    let (mut a, mut b) = (BigInt::zero(), BigInt::zero());
    for c in coeffs.iter().rev() {
        let na = &a * re - &b * im + c;
        let nb = &a * im + &b * re;
        a = na;
        b = nb;
    }
    (a, b)
}

/// Distinct roots in ℚ(i) of a rational polynomial (coefficients constant
/// first). Returns `None` when the search bound is too large to enumerate.
pub fn gaussian_rational_roots(coeffs: &[Rational], max_radius: u64) -> Option<Vec<GaussianRational>> {
    let mut c: Vec<Rational> = coeffs.to_vec();
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    let mut roots = Vec::new();
    let lead = c.last()?.clone();
    let mut c: Vec<Rational> = c.iter().map(|x| x / &lead).collect();
    let mut shift = 0;
    while c.len() > 1 && Zero::is_zero(&c[0]) {
        c.remove(0);
        shift += 1;
    }
    if shift > 0 {
        roots.push(GaussianRational::zero());
    }
    let deg = c.len() - 1;
    if deg == 0 {
        return Some(roots);
    }
    // y = D t turns the monic rational polynomial into a monic integer one
    let d = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut ints = Vec::with_capacity(deg + 1);
    let mut dp = BigInt::one();
    for k in (0..=deg).rev() {
        ints.push((&c[k] * Rational::from_integer(dp.clone())).to_integer());
        dp *= &d;
    }
    ints.reverse();
    let bound = ints[..deg].iter().map(|x| x.abs()).max().unwrap_or_default() + BigInt::one();
    let r: u64 = bound.try_into().ok().filter(|r| *r <= max_radius)?;
    let ri = r as i64;
    let const_norm = &ints[0] * &ints[0];
    for a in -ri..=ri {
        for b in -ri..=ri {
            if a * a + b * b > ri * ri || (a == 0 && b == 0) {
                continue;
            }
            let n = BigInt::from(a * a + b * b);
            if !(&const_norm % &n).is_zero() {
                continue;
            }
            let (x, y) = eval_gauss_int(&ints, &BigInt::from(a), &BigInt::from(b));
            if x.is_zero() && y.is_zero() {
                let df = Rational::from_integer(d.clone());
                roots.push(GaussianRational::new(rat(a) / &df, rat(b) / &df));
            }
        }
    }
    Some(roots)
}

/// Incremental echelon basis of sparse vectors keyed by `K`. Every stored row
/// remembers how it combines the vectors originally inserted, so membership
/// queries also return coordinates.
#[derive(Clone, Debug)]
pub struct SparseSpan<K: Ord + Clone> {
    rows: Vec<(BTreeMap<K, Rational>, BTreeMap<usize, Rational>)>,
    pivots: BTreeMap<K, usize>,
    inserted: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Insertion {
    /// The vector was new; its insertion index.
    Independent(usize),
    /// Coefficients of a vanishing combination of inserted vectors,
    /// including the rejected one at its own insertion index.
    Dependent(BTreeMap<usize, Rational>),
}

impl<K: Ord + Clone> Default for SparseSpan<K> {
    fn default() -> Self {
        SparseSpan { rows: Vec::new(), pivots: BTreeMap::new(), inserted: 0 }
    }
}

fn axpy<K: Ord + Clone>(target: &mut BTreeMap<K, Rational>, src: &BTreeMap<K, Rational>, c: &Rational) {
    for (k, v) in src {
        let t = v * c;
        match target.get_mut(k) {
            Some(x) => {
                *x += t;
                if Zero::is_zero(x) {
                    target.remove(k);
                }
            }
            None => {
                target.insert(k.clone(), t);
            }
        }
    }
}

impl<K: Ord + Clone> SparseSpan<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn inserted(&self) -> usize {
        self.inserted
    }

    /// Returns `(r, c)` with `v = r + sum c_j * inserted_j` and no key of `r`
    /// a pivot.
    pub fn reduce(&self, v: &BTreeMap<K, Rational>) -> (BTreeMap<K, Rational>, BTreeMap<usize, Rational>) {
        let mut r = v.clone();
        let mut combo = BTreeMap::new();
        let mut upper: Option<K> = None;
        loop {
            let next = match &upper {
                None => r.iter().rev().find(|(k, _)| self.pivots.contains_key(*k)),
                Some(u) => r.range(..u.clone()).rev().find(|(k, _)| self.pivots.contains_key(*k)),
            };
            let Some((k, c)) = next else { break };
            let (k, c) = (k.clone(), c.clone());
            let (row, rc) = &self.rows[self.pivots[&k]];
            axpy(&mut r, row, &-&c);
            axpy(&mut combo, rc, &c);
            upper = Some(k);
        }
        (r, combo)
    }

    pub fn contains(&self, v: &BTreeMap<K, Rational>) -> bool {
        self.reduce(v).0.is_empty()
    }

    /// Coefficients over inserted vectors, when `v` is in the span.
    pub fn coordinates(&self, v: &BTreeMap<K, Rational>) -> Option<BTreeMap<usize, Rational>> {
        let (r, c) = self.reduce(v);
        r.is_empty().then_some(c)
    }

    pub fn insert(&mut self, v: &BTreeMap<K, Rational>) -> Insertion {
        let idx = self.inserted;
        self.inserted += 1;
        let (r, mut combo) = self.reduce(v);
        if r.is_empty() {
            for x in combo.values_mut() {
                *x = -&*x;
            }
            combo.insert(idx, rat(1));
            return Insertion::Dependent(combo);
        }
        let (pk, pc) = r.last_key_value().map(|(k, c)| (k.clone(), c.clone())).unwrap();
        let inv = pc.recip();
        let row: BTreeMap<K, Rational> = r.into_iter().map(|(k, x)| (k, x * &inv)).collect();
        // row = (v - sum combo) / pc
        let mut rc: BTreeMap<usize, Rational> = combo.into_iter().map(|(j, x)| (j, -x * &inv)).collect();
        rc.insert(idx, inv);
        self.pivots.insert(pk, self.rows.len());
        self.rows.push((row, rc));
        Insertion::Independent(idx)
    }
}
