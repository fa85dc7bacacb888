//! The Lie algebra spanned by the quadrics of an ideal: structure constants,
//! Killing form, a Cartan subalgebra, the root decomposition and the Dynkin
//! type. Also exponentials of nilpotent elements acting on `V` and the block
//! form of 𝔰𝔭 elements in a symplectic basis adapted to a base point.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::arith::{rat, Homogeneity, Monomial, Polynomial, Rational};
use crate::legendrian::{RationalSampler, VarietyPresentation};
use crate::linalg::{self, Field, GaussianRational, Insertion, Matrix, SparseSpan};
use crate::symplectic::{poisson_bracket, quadric_to_sp, QuadraticForm, SymplecticForm};

type G = GaussianRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("quadric {0} is linearly dependent on the earlier ones")]
    DependentInput(usize),
    #[error("element {0} is not a quadratic form in the ambient variables")]
    NotQuadratic(usize),
    #[error("bracket of basis elements {i} and {j} leaves the span")]
    NotClosed { i: usize, j: usize },
    #[error("the algebra is not semisimple")]
    NotSemisimple,
    #[error("basis not adapted: {0}")]
    BasisNotAdapted(String),
    #[error("Cartan integer {value} between simple roots {i} and {j} is not crystallographic")]
    NonCrystallographic { i: usize, j: usize, value: String },
    #[error("unrecognized Dynkin diagram: {0}")]
    UnknownDiagram(String),
    #[error("matrix is not nilpotent within the budget")]
    NotNilpotent,
    #[error("not in sp for the standard form: {0}")]
    BlockShape(String),
}

/// Degree-two generators, keeping each one that is independent of those
/// before it.
pub fn quadratic_part(v: &VarietyPresentation) -> Vec<Polynomial> {
    let mut span: SparseSpan<Monomial> = SparseSpan::new();
    let mut out = Vec::new();
    for g in v.generators() {
        if g.homogeneity() == Homogeneity::Degree(2) {
            if let Insertion::Independent(_) = span.insert(g.term_map()) {
                out.push(g.clone());
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct LieAlgebraPresentation {
    form: SymplecticForm,
    basis: Vec<Polynomial>,
    span: SparseSpan<Monomial>,
    /// `structure[i][j]` holds the coordinates of `[b_i, b_j]`.
    structure: Vec<Vec<BTreeMap<usize, Rational>>>,
}

/// Spans the quadrics, checks that every bracket of two of them stays in the
/// span and records the structure constants.
pub fn close_and_present(quadrics: &[Polynomial], form: &SymplecticForm) -> Result<LieAlgebraPresentation, LieError> {
    let mut span: SparseSpan<Monomial> = SparseSpan::new();
    for (i, q) in quadrics.iter().enumerate() {
        if q.nvars() != form.dim() || q.homogeneity() != Homogeneity::Degree(2) {
            return Err(LieError::NotQuadratic(i));
        }
        if let Insertion::Dependent(_) = span.insert(q.term_map()) {
            return Err(LieError::DependentInput(i));
        }
    }
    let d = quadrics.len();
    let mut structure = vec![vec![BTreeMap::new(); d]; d];
    for i in 0..d {
        for j in i + 1..d {
            let b = poisson_bracket(&quadrics[i], &quadrics[j], form).expect("dimensions checked");
            let c = span.coordinates(b.term_map()).ok_or(LieError::NotClosed { i, j })?;
            structure[j][i] = c.iter().map(|(k, x)| (*k, -x)).collect();
            structure[i][j] = c;
        }
    }
    Ok(LieAlgebraPresentation { form: form.clone(), basis: quadrics.to_vec(), span, structure })
}

impl LieAlgebraPresentation {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn form(&self) -> &SymplecticForm {
        &self.form
    }

    pub fn structure_constants(&self, i: usize, j: usize) -> &BTreeMap<usize, Rational> {
        &self.structure[i][j]
    }

    pub fn coordinates(&self, p: &Polynomial) -> Option<Vec<Rational>> {
        let c = self.span.coordinates(p.term_map())?;
        let mut v = vec![rat(0); self.dim()];
        for (k, x) in c {
            v[k] = x;
        }
        Some(v)
    }

    pub fn element(&self, coords: &[Rational]) -> Polynomial {
        let n = self.form.dim();
        let mut p = Polynomial::zero(n);
        for (c, b) in coords.iter().zip(&self.basis) {
            if !Zero::is_zero(c) {
                p.add_scaled_shifted(b, c, &Monomial::one(n));
            }
        }
        p
    }

    pub fn bracket<F: Field>(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.mul(b);
                for (k, c) in &self.structure[i][j] {
                    out[*k] = out[*k].add(&ab.mul(&F::from_rational(c)));
                }
            }
        }
        out
    }

    /// Matrix of `ad(x)` in the presentation basis.
    pub fn ad<F: Field>(&self, x: &[F]) -> Matrix<F> {
        let d = self.dim();
        let mut m: Matrix<F> = linalg::zeros(d, d);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..d {
                for (k, c) in &self.structure[i][j] {
                    m[*k][j] = m[*k][j].add(&a.mul(&F::from_rational(c)));
                }
            }
        }
        m
    }

    /// `ρ(b_i) = 2WA_i` acting on `V`.
    pub fn rho_basis(&self, i: usize) -> Matrix<Rational> {
        let q = QuadraticForm::from_polynomial(&self.basis[i]).expect("basis elements are quadrics");
        quadric_to_sp(&q, &self.form).expect("dimensions checked").into_matrix()
    }

    pub fn rho<F: Field>(&self, x: &[F]) -> Matrix<F> {
        let n = self.form.dim();
        let mut m: Matrix<F> = linalg::zeros(n, n);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let r = self.rho_basis(i);
            for (row, rrow) in m.iter_mut().zip(&r) {
                for (e, c) in row.iter_mut().zip(rrow) {
                    if !Zero::is_zero(c) {
                        *e = e.add(&a.mul(&F::from_rational(c)));
                    }
                }
            }
        }
        m
    }

    pub fn is_antisymmetric(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| {
            self.structure[i][i].is_empty()
                && (0..d).all(|j| {
                    let (a, b) = (&self.structure[i][j], &self.structure[j][i]);
                    a.len() == b.len() && a.iter().all(|(k, x)| b.get(k) == Some(&-x))
                })
        })
    }

    /// Jacobi identity on all basis triples.
    pub fn jacobi_holds(&self) -> bool {
        let d = self.dim();
        let e = |i: usize| -> Vec<Rational> { (0..d).map(|k| rat((k == i) as i64)).collect() };
        for i in 0..d {
            for j in i + 1..d {
                let bij = self.bracket(&e(i), &e(j));
                for k in j + 1..d {
                    let a = self.bracket(&e(k), &bij);
                    let b = self.bracket(&e(i), &self.bracket(&e(j), &e(k)));
                    let c = self.bracket(&e(j), &self.bracket(&e(k), &e(i)));
                    if (0..d).any(|t| !Zero::is_zero(&(&a[t] + &b[t] + &c[t]))) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// `K(b_i, b_j) = tr(ad b_i ad b_j)`.
pub fn killing_form(l: &LieAlgebraPresentation) -> Matrix<Rational> {
    let d = l.dim();
    let mut k = linalg::zeros(d, d);
    for i in 0..d {
        for j in i..d {
            let mut t = rat(0);
            for m in 0..d {
                for (n, x) in &l.structure[i][m] {
                    if let Some(y) = l.structure[j][*n].get(&m) {
                        t += x * y;
                    }
                }
            }
            k[j][i] = t.clone();
            k[i][j] = t;
        }
    }
    k
}

pub fn is_semisimple(l: &LieAlgebraPresentation) -> bool {
    l.dim() > 0 && linalg::rank(&killing_form(l)) == l.dim()
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootSpace {
    pub root: Vec<G>,
    /// Coordinates, in the presentation basis, of a spanning set.
    pub vectors: Vec<Vec<G>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CartanData {
    /// Coordinates of a basis of 𝔥.
    pub cartan: Vec<Vec<Rational>>,
    /// Presentation indices of the Cartan basis when it consists of basis
    /// elements.
    pub cartan_basis: Vec<usize>,
    pub roots: Vec<RootSpace>,
    /// `Σ_α α(h_k) α(h_l)` on the Cartan basis.
    pub killing: Matrix<Rational>,
    /// Whether every `ρ(h_k)` is diagonal in the coordinates of `V`.
    pub diagonal: bool,
}

impl CartanData {
    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// Roots of presentation basis elements that are themselves root vectors.
    pub fn root_vectors(&self) -> BTreeMap<usize, Vec<G>> {
        let mut out = BTreeMap::new();
        for rs in &self.roots {
            for v in &rs.vectors {
                let support: Vec<usize> = (0..v.len()).filter(|&k| !v[k].is_zero()).collect();
                if support.len() == 1 {
                    out.insert(support[0], rs.root.clone());
                }
            }
        }
        out
    }

    /// `(α, β) = αᵀ K⁻¹ β`, real for roots of a semisimple algebra.
    pub fn inner_product(&self, a: &[G], b: &[G]) -> Result<Rational, LieError> {
        let kinv = linalg::inverse(&self.killing).ok_or(LieError::NotSemisimple)?;
        let kinv: Matrix<G> = linalg::lift(&kinv);
        let v = linalg::bilinear(&kinv, a, b);
        if !Zero::is_zero(&v.im) {
            return Err(LieError::BasisNotAdapted(format!("non-real inner product {v}")));
        }
        Ok(v.re)
    }
}

fn unit_vec(d: usize, i: usize) -> Vec<Rational> {
    (0..d).map(|k| rat((k == i) as i64)).collect()
}

fn is_diagonal(m: &Matrix<Rational>) -> bool {
    m.iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(j, x)| i == j || Zero::is_zero(x)))
}

/// Elements of the algebra with diagonal `ρ`-image, as coordinate vectors.
pub fn diagonal_elements(l: &LieAlgebraPresentation) -> Vec<Vec<Rational>> {
    let d = l.dim();
    let mut span: SparseSpan<(usize, usize)> = SparseSpan::new();
    let mut out = Vec::new();
    for i in 0..d {
        let r = l.rho_basis(i);
        let mut off = BTreeMap::new();
        for (a, row) in r.iter().enumerate() {
            for (b, x) in row.iter().enumerate() {
                if a != b && !Zero::is_zero(x) {
                    off.insert((a, b), x.clone());
                }
            }
        }
        if let Insertion::Dependent(rel) = span.insert(&off) {
            let mut v = vec![rat(0); d];
            for (k, c) in rel {
                v[k] = c;
            }
            out.push(v);
        }
    }
    // prefer single basis elements when the relation is one
    out.iter()
        .map(|v| {
            let s: Vec<usize> = (0..d).filter(|&k| !Zero::is_zero(&v[k])).collect();
            if s.len() == 1 {
                unit_vec(d, s[0])
            } else {
                v.clone()
            }
        })
        .collect()
}

fn centralizer(l: &LieAlgebraPresentation, torus: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let d = l.dim();
    let mut rows: Matrix<Rational> = Vec::new();
    for t in torus {
        rows.extend(l.ad(t));
    }
    if rows.is_empty() {
        return (0..d).map(|i| unit_vec(d, i)).collect();
    }
    linalg::kernel(&rows, d)
}

/// Distinct eigenvalues in ℚ(i) when the matrix is diagonalizable over ℚ(i).
fn gaussian_spectrum(m: &Matrix<Rational>) -> Option<Vec<G>> {
    let roots = linalg::gaussian_rational_roots(&linalg::characteristic_polynomial(m), 1 << 12)?;
    let gm: Matrix<G> = linalg::lift(m);
    let n = m.len();
    let mut total = 0;
    for r in &roots {
        let mut s = gm.clone();
        for (i, row) in s.iter_mut().enumerate() {
            row[i] = row[i].sub(r);
        }
        total += n - linalg::rank(&s);
    }
    (total == n).then_some(roots)
}

/// A maximal toral subalgebra: the diagonal elements, extended by
/// semisimple elements of the centralizer until it is self-centralizing.
pub fn cartan_subalgebra(l: &LieAlgebraPresentation) -> Result<Vec<Vec<Rational>>, LieError> {
    let mut torus = diagonal_elements(l);
    loop {
        let z = centralizer(l, &torus);
        if z.len() == torus.len() {
            return Ok(torus);
        }
        let in_torus = |v: &Vec<Rational>| {
            let mut m = torus.clone();
            m.push(v.clone());
            linalg::rank(&m) == torus.len()
        };
        let mut candidates: Vec<Vec<Rational>> = z.iter().filter(|v| !in_torus(v)).cloned().collect();
        let mut sampler = RationalSampler::new(0x5eed);
        for _ in 0..4 {
            let c = sampler.next_vector(z.len());
            let mut v = vec![rat(0); l.dim()];
            for (zi, ci) in z.iter().zip(&c) {
                for (a, b) in v.iter_mut().zip(zi) {
                    *a += ci * b;
                }
            }
            candidates.push(v);
        }
        let next = candidates.into_iter().find(|v| !in_torus(v) && gaussian_spectrum(&l.rho(v)).is_some());
        match next {
            Some(v) => torus.push(v),
            None => return Err(LieError::BasisNotAdapted("no semisimple element extends the torus".into())),
        }
    }
}

/// Joint eigenspaces of the torus acting by `ad`.
pub fn root_decomposition(l: &LieAlgebraPresentation, torus: &[Vec<Rational>]) -> Result<CartanData, LieError> {
    let diagonal = torus.iter().all(|t| is_diagonal(&l.rho(t)));
    let spaces = if diagonal { monomial_weight_spaces(l, torus)? } else { gaussian_weight_spaces(l, torus)? };
    let r = torus.len();
    let mut roots = Vec::new();
    let mut zero_dim = 0;
    for (w, vs) in spaces {
        if w.iter().all(Field::is_zero) {
            zero_dim += vs.len();
        } else {
            if vs.len() != 1 {
                return Err(LieError::BasisNotAdapted(format!("root space of dimension {}", vs.len())));
            }
            roots.push(RootSpace { root: w, vectors: vs });
        }
    }
    if zero_dim != r {
        return Err(LieError::BasisNotAdapted(format!("zero weight space of dimension {zero_dim}, torus of rank {r}")));
    }
    for a in &roots {
        let neg: Vec<G> = a.root.iter().map(Field::neg).collect();
        if !roots.iter().any(|b| b.root == neg) {
            return Err(LieError::NotSemisimple);
        }
    }
    let mut killing = linalg::zeros::<G>(r, r);
    for a in &roots {
        for k in 0..r {
            for m in 0..r {
                killing[k][m] = killing[k][m].add(&a.root[k].mul(&a.root[m]));
            }
        }
    }
    if killing.iter().flatten().any(|x| !Zero::is_zero(&x.im)) {
        return Err(LieError::BasisNotAdapted("Killing form on the torus is not rational".into()));
    }
    let killing: Matrix<Rational> = killing.into_iter().map(|row| row.into_iter().map(|x| x.re).collect()).collect();
    let cartan_basis = torus
        .iter()
        .filter_map(|t| {
            let s: Vec<usize> = (0..t.len()).filter(|&k| !Zero::is_zero(&t[k])).collect();
            (s.len() == 1).then(|| s[0])
        })
        .collect::<Vec<_>>();
    let cartan_basis = if cartan_basis.len() == r { cartan_basis } else { Vec::new() };
    roots.sort_by(|a, b| root_order(&a.root, &b.root));
    Ok(CartanData { cartan: torus.to_vec(), cartan_basis, roots, killing, diagonal })
}

/// With every `ρ(t)` diagonal, monomials are weight vectors, so each basis
/// element splits into weight components that stay in the algebra.
fn monomial_weight_spaces(l: &LieAlgebraPresentation, torus: &[Vec<Rational>]) -> Result<Vec<(Vec<G>, Vec<Vec<G>>)>, LieError> {
    let n = l.form.dim();
    // [t, x_a] = λ_a(t) x_a
    let lambdas: Vec<Vec<Rational>> = torus
        .iter()
        .map(|t| {
            let tp = l.element(t);
            (0..n)
                .map(|a| {
                    let b = poisson_bracket(&tp, &Polynomial::var(n, a), &l.form).expect("dimensions checked");
                    b.coefficient(&Monomial::var(n, a))
                })
                .collect()
        })
        .collect();
    let weight = |m: &Monomial| -> Vec<Rational> {
        lambdas.iter().map(|lam| m.exponents().iter().zip(lam).fold(rat(0), |s, (e, x)| s + x * rat(*e as i64))).collect()
    };
    let mut spaces: BTreeMap<Vec<Rational>, (SparseSpan<Monomial>, Vec<Vec<G>>)> = BTreeMap::new();
    for b in &l.basis {
        let mut parts: BTreeMap<Vec<Rational>, Polynomial> = BTreeMap::new();
        for (m, c) in b.terms() {
            parts.entry(weight(m)).or_insert_with(|| Polynomial::zero(n)).add_term(m.clone(), c.clone());
        }
        for (w, p) in parts {
            let entry = spaces.entry(w).or_insert_with(|| (SparseSpan::new(), Vec::new()));
            if let Insertion::Independent(_) = entry.0.insert(p.term_map()) {
                let coords = l.coordinates(&p).ok_or_else(|| LieError::BasisNotAdapted("weight component outside the algebra".into()))?;
                entry.1.push(coords.iter().map(|x| G::real(x.clone())).collect());
            }
        }
    }
    Ok(spaces.into_iter().map(|(w, (_, vs))| (w.into_iter().map(G::real).collect(), vs)).collect())
}

fn gaussian_weight_spaces(l: &LieAlgebraPresentation, torus: &[Vec<Rational>]) -> Result<Vec<(Vec<G>, Vec<Vec<G>>)>, LieError> {
    let d = l.dim();
    let mut spaces: Vec<(Vec<G>, Matrix<G>)> =
        vec![(Vec::new(), (0..d).map(|i| unit_vec(d, i).into_iter().map(G::real).collect()).collect())];
    for t in torus {
        let spec =
            gaussian_spectrum(&l.rho(t)).ok_or_else(|| LieError::BasisNotAdapted("torus element not diagonalizable over Q(i)".into()))?;
        let mut cands: Vec<G> = Vec::new();
        for a in &spec {
            for b in &spec {
                let s = a.add(b);
                if !cands.contains(&s) {
                    cands.push(s);
                }
            }
        }
        let ad: Matrix<G> = linalg::lift(&l.ad(t));
        let mut next = Vec::new();
        for (w, basis) in spaces {
            // columns of `basis` span an ad(t)-stable subspace
            let cols = linalg::transpose(&basis);
            let image = linalg::mat_mul(&ad, &cols);
            let mut found = 0;
            for s in &cands {
                let shifted = linalg::mat_sub(&image, &linalg::mat_scale(&cols, s));
                let ker = linalg::kernel(&shifted, basis.len());
                if ker.is_empty() {
                    continue;
                }
                found += ker.len();
                let vecs: Matrix<G> = ker.iter().map(|c| linalg::mat_vec(&cols, c)).collect();
                let mut w2 = w.clone();
                w2.push(s.clone());
                next.push((w2, vecs));
            }
            if found != basis.len() {
                return Err(LieError::BasisNotAdapted("ad action not diagonalizable over Q(i)".into()));
            }
        }
        spaces = next;
    }
    Ok(spaces)
}

fn root_key(r: &[G]) -> Vec<Rational> {
    r.iter().flat_map(|z| [z.re.clone(), z.im.clone()]).collect()
}

/// Lexicographic order on `(Re α₁, Im α₁, Re α₂, …)`.
pub fn root_order(a: &[G], b: &[G]) -> Ordering {
    root_key(a).cmp(&root_key(b))
}

pub fn is_positive(a: &[G]) -> bool {
    root_key(a).into_iter().find(|x| !Zero::is_zero(x)).is_some_and(|x| x.is_positive())
}

/// Positive roots that are not sums of two positive roots.
pub fn simple_roots(cd: &CartanData) -> Vec<Vec<G>> {
    let pos: Vec<&Vec<G>> = cd.roots.iter().map(|r| &r.root).filter(|r| is_positive(r)).collect();
    pos.iter()
        .filter(|a| {
            !pos.iter().any(|b| {
                let diff: Vec<G> = a.iter().zip(b.iter()).map(|(x, y)| x.sub(y)).collect();
                is_positive(&diff) && pos.iter().any(|c| **c == diff)
            })
        })
        .map(|a| (*a).clone())
        .collect()
}

/// `A_ij = 2(α_i, α_j)/(α_j, α_j)`.
pub fn cartan_matrix(cd: &CartanData) -> Result<(Vec<Vec<i64>>, Vec<Rational>), LieError> {
    let simple = simple_roots(cd);
    let r = simple.len();
    let mut ip = vec![vec![rat(0); r]; r];
    for i in 0..r {
        for j in 0..r {
            ip[i][j] = cd.inner_product(&simple[i], &simple[j])?;
        }
    }
    let mut a = vec![vec![0i64; r]; r];
    for i in 0..r {
        for j in 0..r {
            let v = rat(2) * &ip[i][j] / &ip[j][j];
            let ok = v.is_integer() && if i == j { v == rat(2) } else { v <= rat(0) && v >= rat(-3) };
            if !ok {
                return Err(LieError::NonCrystallographic { i, j, value: format!("{v}") });
            }
            a[i][j] = v.to_integer().try_into().unwrap();
        }
    }
    let lengths = (0..r).map(|i| ip[i][i].clone()).collect();
    Ok((a, lengths))
}

/// Connected components of the Dynkin diagram, each named `A_r … G₂`,
/// sorted by letter then rank.
pub fn dynkin_labels(a: &[Vec<i64>], lengths: &[Rational]) -> Result<Vec<String>, LieError> {
    let r = a.len();
    let mut seen = vec![false; r];
    let mut labels = Vec::new();
    for s in 0..r {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < comp.len() {
            let v = comp[k];
            for w in 0..r {
                if !seen[w] && a[v][w] != 0 {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        labels.push(component_label(a, lengths, &comp)?);
    }
    labels.sort_by_key(|(c, n)| (*c, *n));
    Ok(labels.into_iter().map(|(c, n)| format!("{c}{n}")).collect())
}

fn component_label(a: &[Vec<i64>], lengths: &[Rational], comp: &[usize]) -> Result<(char, usize), LieError> {
    let r = comp.len();
    let unknown = || {
        LieError::UnknownDiagram(format!(
            "{:?}",
            comp.iter().map(|&i| comp.iter().map(|&j| a[i][j]).collect::<Vec<_>>()).collect::<Vec<_>>()
        ))
    };
    if r == 1 {
        return Ok(('A', 1));
    }
    let mut edges = Vec::new();
    for (x, &i) in comp.iter().enumerate() {
        for (y, &j) in comp.iter().enumerate().skip(x + 1) {
            if a[i][j] != 0 {
                edges.push((x, y, a[i][j] * a[j][i]));
            }
        }
    }
    if edges.len() != r - 1 {
        return Err(unknown());
    }
    let degree = |v: usize| edges.iter().filter(|(x, y, _)| *x == v || *y == v).count();
    let max_mult = edges.iter().map(|e| e.2).max().unwrap();
    match max_mult {
        3 if r == 2 => Ok(('G', 2)),
        2 => {
            if edges.iter().filter(|e| e.2 == 2).count() != 1 || (0..r).any(|v| degree(v) > 2) {
                return Err(unknown());
            }
            if r == 2 {
                return Ok(('B', 2));
            }
            let (x, y, _) = *edges.iter().find(|e| e.2 == 2).unwrap();
            if degree(x) == 2 && degree(y) == 2 {
                return if r == 4 { Ok(('F', 4)) } else { Err(unknown()) };
            }
            let min = comp.iter().map(|&i| &lengths[i]).min().unwrap();
            let short = comp.iter().filter(|&&i| &lengths[i] == min).count();
            if short == 1 {
                Ok(('B', r))
            } else if short == r - 1 {
                Ok(('C', r))
            } else {
                Err(unknown())
            }
        }
        1 => {
            let branch: Vec<usize> = (0..r).filter(|&v| degree(v) == 3).collect();
            if branch.is_empty() && (0..r).all(|v| degree(v) <= 2) {
                return Ok(('A', r));
            }
            if branch.len() != 1 || (0..r).any(|v| degree(v) > 3) {
                return Err(unknown());
            }
            let c = branch[0];
            let mut arms: Vec<usize> = edges
                .iter()
                .filter_map(|&(x, y, _)| {
                    if x == c {
                        Some(y)
                    } else if y == c {
                        Some(x)
                    } else {
                        None
                    }
                })
                .map(|start| arm_length(&edges, c, start))
                .collect();
            arms.sort_unstable();
            match (arms[0], arms[1], arms[2]) {
                (1, 1, _) => Ok(('D', r)),
                (1, 2, 2) => Ok(('E', 6)),
                (1, 2, 3) => Ok(('E', 7)),
                (1, 2, 4) => Ok(('E', 8)),
                _ => Err(unknown()),
            }
        }
        _ => Err(unknown()),
    }
}

fn arm_length(edges: &[(usize, usize, i64)], from: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (from, start, 1);
    loop {
        let next = edges.iter().find_map(|&(x, y, _)| {
            if x == cur && y != prev {
                Some(y)
            } else if y == cur && x != prev {
                Some(x)
            } else {
                None
            }
        });
        match next {
            Some(n) => {
                prev = cur;
                cur = n;
                len += 1;
            }
            None => return len,
        }
    }
}

pub fn identify_type(cd: &CartanData) -> Result<Vec<String>, LieError> {
    let (a, lengths) = cartan_matrix(cd)?;
    dynkin_labels(&a, &lengths)
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraSummary {
    pub dim: usize,
    pub semisimple: bool,
    pub rank: Option<usize>,
    pub root_count: Option<usize>,
    pub types: Vec<String>,
}

impl AlgebraSummary {
    pub fn label(&self) -> String {
        self.types.join("+")
    }
}

/// Quadratic part, structure constants, semisimplicity and type.
pub fn analyze(v: &VarietyPresentation) -> Result<(LieAlgebraPresentation, Option<CartanData>, AlgebraSummary), LieError> {
    let l = close_and_present(&quadratic_part(v), v.form())?;
    if !is_semisimple(&l) {
        let summary = AlgebraSummary { dim: l.dim(), semisimple: false, rank: None, root_count: None, types: Vec::new() };
        return Ok((l, None, summary));
    }
    let torus = cartan_subalgebra(&l)?;
    let cd = root_decomposition(&l, &torus)?;
    let types = identify_type(&cd)?;
    let summary = AlgebraSummary { dim: l.dim(), semisimple: true, rank: Some(cd.rank()), root_count: Some(cd.roots.len()), types };
    Ok((l, Some(cd), summary))
}

/// `Σ_k M^k v / k!`, after checking `M^{budget} = 0`.
pub fn exp_nilpotent_action<F: Field>(m: &Matrix<F>, v: &[F], budget: usize) -> Result<Vec<F>, LieError> {
    let mut out = v.to_vec();
    let mut term = v.to_vec();
    let mut power = m.clone();
    for _ in 1..budget {
        power = linalg::mat_mul(&power, m);
    }
    if !linalg::is_zero_matrix(&power) {
        return Err(LieError::NotNilpotent);
    }
    for k in 1..=budget {
        term = linalg::mat_vec(m, &term);
        if term.iter().all(Field::is_zero) {
            break;
        }
        let inv = F::from_rational(&Rational::new(1.into(), (k as i64).into()));
        term = term.iter().map(|x| x.mul(&inv)).collect();
        out = out.iter().zip(&term).map(|(a, b)| a.add(b)).collect();
    }
    Ok(out)
}

/// Points `exp(c₁ρ(e₁))⋯exp(c_s ρ(e_s))·p` for random root vectors `e_k` and
/// small rationals `c_k`.
pub fn orbit_points(
    l: &LieAlgebraPresentation,
    cd: &CartanData,
    base: &[G],
    seed: u64,
    count: usize,
    steps: usize,
) -> Result<Vec<Vec<G>>, LieError> {
    let mut sampler = RationalSampler::new(seed);
    let rhos: Vec<Matrix<G>> = cd.roots.iter().map(|r| l.rho(&r.vectors[0])).collect();
    let dim = l.form.dim();
    let mut out = Vec::new();
    for _ in 0..count {
        let mut p = base.to_vec();
        for _ in 0..steps {
            let k = (sampler.next_u64() % rhos.len() as u64) as usize;
            let c = G::real(sampler.next_rational());
            p = exp_nilpotent_action(&linalg::mat_scale(&rhos[k], &c), &p, dim)?;
        }
        out.push(p);
    }
    Ok(out)
}

/// Blocks of `M ∈ 𝔰𝔭` for the standard form with respect to the splitting
/// `e₀ | e₁…e_{n−1} | e_n | e_{n+1}…e_{2n−1}`:
///
/// ```text
/// λ₀  a₂ᵀ  ν   cᵀ
/// a₁  A    c   C
/// μ   bᵀ  −λ₀ −a₁ᵀ
/// b   B   −a₂ −Aᵀ
/// ```
#[derive(Clone, Debug, PartialEq)]
pub struct BlockView {
    pub lam0: Rational,
    pub a1: Vec<Rational>,
    pub a2: Vec<Rational>,
    pub b: Vec<Rational>,
    pub c: Vec<Rational>,
    pub mu: Rational,
    pub nu: Rational,
    pub a: Matrix<Rational>,
    pub bb: Matrix<Rational>,
    pub cc: Matrix<Rational>,
}

pub fn block_view(m: &Matrix<Rational>, n: usize) -> Result<BlockView, LieError> {
    if n == 0 || m.len() != 2 * n || m.iter().any(|r| r.len() != 2 * n) {
        return Err(LieError::BlockShape(format!("expected a {0}x{0} matrix", 2 * n)));
    }
    for i in 0..n {
        for j in 0..n {
            if m[i][n + j] != m[j][n + i] || m[n + i][j] != m[n + j][i] {
                return Err(LieError::BlockShape("off-diagonal blocks are not symmetric".into()));
            }
            if m[n + i][n + j] != -&m[j][i] {
                return Err(LieError::BlockShape("lower right block is not -P^T".into()));
            }
        }
    }
    let sub = |r0: usize, c0: usize| -> Matrix<Rational> { (1..n).map(|i| (1..n).map(|j| m[r0 + i][c0 + j].clone()).collect()).collect() };
    Ok(BlockView {
        lam0: m[0][0].clone(),
        a1: (1..n).map(|i| m[i][0].clone()).collect(),
        a2: (1..n).map(|j| m[0][j].clone()).collect(),
        b: (1..n).map(|i| m[n + i][0].clone()).collect(),
        c: (1..n).map(|i| m[i][n].clone()).collect(),
        mu: m[n][0].clone(),
        nu: m[0][n].clone(),
        a: sub(0, 0),
        bb: sub(n, 0),
        cc: sub(0, n),
    })
}

/// Rank of `g ↦ (λ₀(g), a₁(g))` over the given 𝔰𝔭 elements.
pub fn lambda_a1_rank(views: &[BlockView]) -> usize {
    let rows: Matrix<Rational> = views
        .iter()
        .map(|v| {
            let mut r = vec![v.lam0.clone()];
            r.extend(v.a1.iter().cloned());
            r
        })
        .collect();
    if rows.is_empty() {
        0
    } else {
        linalg::rank(&rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_poly;
    use crate::catalog;
    use crate::symplectic::{standard_form, symplectic_completion};

    fn cubic() -> LieAlgebraPresentation {
        let e = catalog::twisted_cubic();
        close_and_present(&quadratic_part(&e.presentation), e.presentation.form()).unwrap()
    }

    #[test]
    fn twisted_cubic_algebra() {
        let l = cubic();
        assert_eq!(l.dim(), 3);
        assert!(l.is_antisymmetric() && l.jacobi_holds());
        // basis (f₊, f₋, h′): [f₊, f₋] = h′, [h′, f₊] = 2f₊, [h′, f₋] = −2f₋
        assert_eq!(l.structure_constants(0, 1), &BTreeMap::from([(2, rat(1))]));
        assert_eq!(l.structure_constants(2, 0), &BTreeMap::from([(0, rat(2))]));
        assert_eq!(l.structure_constants(2, 1), &BTreeMap::from([(1, rat(-2))]));
        assert!(is_semisimple(&l));
        let torus = cartan_subalgebra(&l).unwrap();
        assert_eq!(torus, vec![unit_vec(3, 2)]);
        let cd = root_decomposition(&l, &torus).unwrap();
        assert_eq!(cd.cartan_basis, vec![2]);
        let roots: Vec<G> = cd.roots.iter().map(|r| r.root[0].clone()).collect();
        assert_eq!(roots, vec![G::real(rat(-2)), G::real(rat(2))]);
        assert_eq!(identify_type(&cd).unwrap(), vec!["A1"]);
    }

    #[test]
    fn small_examples() {
        let v =
            VarietyPresentation::new("lin", standard_form(2).unwrap(), vec![parse_poly("x2", 4).unwrap(), parse_poly("x3", 4).unwrap()])
                .unwrap();
        assert!(quadratic_part(&v).is_empty());
        let l = close_and_present(&[parse_poly("x0*x1", 2).unwrap()], &standard_form(1).unwrap()).unwrap();
        assert_eq!(l.dim(), 1);
        assert!(l.structure_constants(0, 0).is_empty());
        assert!(!is_semisimple(&l));
        let bad = close_and_present(&[parse_poly("x0^2", 2).unwrap(), parse_poly("x1^2", 2).unwrap()], &standard_form(1).unwrap());
        assert_eq!(bad.unwrap_err(), LieError::NotClosed { i: 0, j: 1 });
    }

    #[test]
    fn segre_three_goes_through_gaussian_path() {
        let e = catalog::segre_line_quadric(3).unwrap();
        let (l, cd, s) = analyze(&e.presentation).unwrap();
        assert_eq!(s.dim, 6);
        assert_eq!(s.types, vec!["A1", "A1"]);
        assert!(!cd.unwrap().diagonal);
        assert!(l.jacobi_holds());
    }

    #[test]
    fn segre_families() {
        for (n, label) in [(4, "A1+A1+A1"), (5, "A1+B2"), (6, "A1+A3")] {
            let e = catalog::segre_line_quadric(n).unwrap();
            let (_, _, s) = analyze(&e.presentation).unwrap();
            assert_eq!(s.dim, n * (n - 1) / 2 + 3);
            assert_eq!(s.label(), label);
            assert_eq!(e.presentation.expected_algebra.as_deref(), Some(label));
        }
    }

    #[test]
    fn lagrangian_grassmannian_is_c3() {
        let e = catalog::lagrangian_grassmannian_36().unwrap();
        let (l, cd, s) = analyze(&e.presentation).unwrap();
        assert_eq!((s.dim, s.rank, s.root_count), (21, Some(3), Some(18)));
        assert_eq!(s.types, vec!["C3"]);
        assert!(cd.unwrap().diagonal);
        assert!(l.jacobi_holds());
    }

    #[test]
    fn grassmannian_cartan_is_last_five() {
        let e = catalog::grassmannian_36().unwrap();
        let (_, cd, s) = analyze(&e.presentation).unwrap();
        assert_eq!(s.types, vec!["A5"]);
        assert_eq!(cd.unwrap().cartan_basis, vec![30, 31, 32, 33, 34]);
    }

    #[test]
    fn exp_examples() {
        let z: Matrix<Rational> = linalg::zeros(4, 4);
        let v = vec![rat(1), rat(2), rat(3), rat(4)];
        assert_eq!(exp_nilpotent_action(&z, &v, 4).unwrap(), v);
        assert_eq!(exp_nilpotent_action(&linalg::identity::<Rational>(2), &[rat(1), rat(0)], 2), Err(LieError::NotNilpotent));
        let e = catalog::twisted_cubic();
        let l = cubic();
        // f₋ has root −2
        let m = linalg::mat_scale(&l.rho(&unit_vec(3, 1)), &rat(3));
        let p = exp_nilpotent_action(&m, &[rat(1), rat(0), rat(0), rat(0)], 4).unwrap();
        assert_eq!(e.presentation.is_on_cone(&p), None);
        assert_ne!(p, vec![rat(1), rat(0), rat(0), rat(0)]);
    }

    #[test]
    fn block_views() {
        let zero = block_view(&linalg::zeros(6, 6), 3).unwrap();
        assert!(Zero::is_zero(&zero.lam0) && zero.a1.iter().all(Zero::is_zero) && Zero::is_zero(&zero.mu));
        assert!(block_view(&linalg::identity(4), 2).is_err());
        // h = Σ x_k x_{n+k} of the segre family: λ₀ = 1 with ρ = 2JA
        let e = catalog::segre_line_quadric(3).unwrap();
        let l = close_and_present(e.presentation.generators(), e.presentation.form()).unwrap();
        let bv = block_view(&l.rho_basis(l.dim() - 1), 3).unwrap();
        assert_eq!(bv.lam0, rat(1));
        assert_eq!(bv.a, linalg::identity(2));
    }

    #[test]
    fn twisted_cubic_in_adapted_basis() {
        let e = catalog::twisted_cubic();
        let form = e.presentation.form();
        let u = |i: usize| unit_vec(4, i);
        let p = symplectic_completion(form, &[u(0), u(1)], &[u(3), u(2)]).unwrap();
        let l = cubic();
        let mut views = Vec::new();
        for i in 0..3 {
            let m = crate::symplectic::change_basis(&l.rho_basis(i), &p).unwrap();
            let bv = block_view(&m, 2).unwrap();
            assert!(Zero::is_zero(&bv.mu) && bv.b.iter().all(Zero::is_zero) && Zero::is_zero(&bv.nu));
            views.push(bv);
        }
        assert_eq!(lambda_a1_rank(&views), 2);
    }

    #[test]
    fn spinor_and_e7() {
        for (e, dim, label) in [(catalog::spinor_s6(), 66, "D6"), (catalog::e7_variety().unwrap(), 133, "E7")] {
            let (_, cd, s) = analyze(&e.presentation).unwrap();
            assert_eq!(s.dim, dim);
            assert_eq!(s.label(), label);
            let cd = cd.unwrap();
            assert!(cd.diagonal);
            assert_eq!(cd.roots.len() + cd.rank(), dim);
        }
    }
}
