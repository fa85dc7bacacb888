//! Symplectic forms, the Poisson bracket on the polynomial ring and the
//! dictionary between quadrics and the symplectic Lie algebra.
//!
//! Conventions: `ω(u, v) = uᵀ J v`. The induced form on covectors is
//! `ω′ = (φ⁻¹)*ω` for `φ(v) = ω(v, ·)`, whose matrix is `W = J⁻ᵀ`. The bracket
//! is `[f, g] = Σ W_ab ∂_a f ∂_b g`, a quadric `xᵀAx` maps to `ρ(A) = 2WA`
//! acting on `V`, and `[A, B] = 2(AWB − BWA)`. For the block form
//! `J = (0 I; −I 0)` we have `W = J`, so `ρ(A) = 2JA`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;
use thiserror::Error;

use crate::arith::{rat, Homogeneity, Monomial, Polynomial, Rational};
use crate::linalg::{self, Field, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymplecticError {
    #[error("the symplectic half-dimension must be positive")]
    ZeroDimension,
    #[error("form matrix must be square of even size, got {rows}x{cols}")]
    Shape { rows: usize, cols: usize },
    #[error("form matrix is not skew-symmetric")]
    NotSkew,
    #[error("form matrix is degenerate")]
    Degenerate,
    #[error("expected objects over {expected} variables, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("polynomial is not a quadratic form")]
    NotQuadratic,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("vectors are not isotropic or the completion is singular")]
    BadCompletion,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SymplecticForm {
    matrix: Matrix<Rational>,
    dual: Matrix<Rational>,
    dual_entries: Vec<(usize, usize, Rational)>,
}

impl SymplecticForm {
    pub fn new(matrix: Matrix<Rational>) -> Result<Self, SymplecticError> {
        let n = matrix.len();
        if n == 0 || n % 2 == 1 || matrix.iter().any(|r| r.len() != n) {
            return Err(SymplecticError::Shape { rows: n, cols: matrix.first().map_or(0, Vec::len) });
        }
        for i in 0..n {
            for j in 0..n {
                if matrix[i][j] != -&matrix[j][i] {
                    return Err(SymplecticError::NotSkew);
                }
            }
        }
        let inv = linalg::inverse(&matrix).ok_or(SymplecticError::Degenerate)?;
        let dual = linalg::transpose(&inv);
        let mut dual_entries = Vec::new();
        for (a, row) in dual.iter().enumerate() {
            for (b, w) in row.iter().enumerate() {
                if !Zero::is_zero(w) {
                    dual_entries.push((a, b, w.clone()));
                }
            }
        }
        Ok(SymplecticForm { matrix, dual, dual_entries })
    }

    pub fn from_integers(rows: &[&[i64]]) -> Result<Self, SymplecticError> {
        Self::new(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn half_dim(&self) -> usize {
        self.matrix.len() / 2
    }

    pub fn matrix(&self) -> &Matrix<Rational> {
        &self.matrix
    }

    /// Matrix `W` of ω′ on the dual space.
    pub fn dual_matrix(&self) -> &Matrix<Rational> {
        &self.dual
    }

    pub fn dual_entries(&self) -> &[(usize, usize, Rational)] {
        &self.dual_entries
    }

    pub fn is_standard(&self) -> bool {
        standard_matrix(self.half_dim()) == self.matrix
    }

    pub fn omega<F: Field>(&self, u: &[F], v: &[F]) -> F {
        linalg::bilinear(&linalg::lift(&self.matrix), u, v)
    }

    pub fn omega_dual<F: Field>(&self, a: &[F], b: &[F]) -> F {
        self.dual_entries.iter().fold(F::zero(), |s, (i, j, w)| {
            if a[*i].is_zero() || b[*j].is_zero() {
                s
            } else {
                s.add(&F::from_rational(w).mul(&a[*i].mul(&b[*j])))
            }
        })
    }
}

fn standard_matrix(n: usize) -> Matrix<Rational> {
    let mut j = linalg::zeros(2 * n, 2 * n);
    for k in 0..n {
        j[k][n + k] = rat(1);
        j[n + k][k] = rat(-1);
    }
    j
}

/// `J = (0 I_n; −I_n 0)`.
pub fn standard_form(n: usize) -> Result<SymplecticForm, SymplecticError> {
    if n == 0 {
        return Err(SymplecticError::ZeroDimension);
    }
    SymplecticForm::new(standard_matrix(n))
}

/// The form ω′ on the dual space, as a symplectic form in its own right.
pub fn dual_form(form: &SymplecticForm) -> SymplecticForm {
    SymplecticForm::new(form.dual.clone()).expect("the dual of a symplectic form is symplectic")
}

fn check_vars(form: &SymplecticForm, p: &Polynomial) -> Result<(), SymplecticError> {
    if p.nvars() != form.dim() {
        return Err(SymplecticError::DimensionMismatch { expected: form.dim(), found: p.nvars() });
    }
    Ok(())
}

/// Poisson bracket. Two quadrics go through the sparse matrix formula,
/// everything else through derivatives.
pub fn poisson_bracket(f: &Polynomial, g: &Polynomial, form: &SymplecticForm) -> Result<Polynomial, SymplecticError> {
    check_vars(form, f)?;
    check_vars(form, g)?;
    if f.homogeneity() == Homogeneity::Degree(2) && g.homogeneity() == Homogeneity::Degree(2) {
        return Ok(sparse_quadric_bracket(f, g, form));
    }
    Ok(differential_bracket(f, g, form))
}

/// `Σ W_ab ∂_a f ∂_b g` without shortcuts.
pub fn differential_bracket(f: &Polynomial, g: &Polynomial, form: &SymplecticForm) -> Polynomial {
    let n = form.dim();
    let mut df: Vec<Option<Polynomial>> = (0..n).map(|_| None).collect();
    let mut dg: Vec<Option<Polynomial>> = (0..n).map(|_| None).collect();
    let mut out = Polynomial::zero(n);
    for (a, b, w) in form.dual_entries() {
        let fa = df[*a].get_or_insert_with(|| f.partial(*a));
        if fa.is_zero() {
            continue;
        }
        let fa = fa.clone();
        let gb = dg[*b].get_or_insert_with(|| g.partial(*b));
        if gb.is_zero() {
            continue;
        }
        let prod = &fa * gb;
        out.add_scaled_shifted(&prod, w, &Monomial::one(n));
    }
    out
}

type Sparse = BTreeMap<usize, BTreeMap<usize, Rational>>;

fn sparse_symmetric(p: &Polynomial) -> Sparse {
    let mut a: Sparse = BTreeMap::new();
    let half = Rational::new(1.into(), 2.into());
    for (m, c) in p.terms() {
        let s: Vec<usize> = m.support().collect();
        if s.len() == 1 {
            a.entry(s[0]).or_default().insert(s[0], c.clone());
        } else {
            let v = c * &half;
            a.entry(s[0]).or_default().insert(s[1], v.clone());
            a.entry(s[1]).or_default().insert(s[0], v);
        }
    }
    a
}

fn sparse_product(a: &Sparse, b: &Sparse) -> Sparse {
    let mut out: Sparse = BTreeMap::new();
    for (i, row) in a {
        for (k, x) in row {
            if let Some(brow) = b.get(k) {
                let target = out.entry(*i).or_default();
                for (j, y) in brow {
                    *target.entry(*j).or_insert_with(|| rat(0)) += x * y;
                }
            }
        }
    }
    out
}

fn sparse_quadric_bracket(f: &Polynomial, g: &Polynomial, form: &SymplecticForm) -> Polynomial {
    let n = form.dim();
    let a = sparse_symmetric(f);
    let b = sparse_symmetric(g);
    let mut w: Sparse = BTreeMap::new();
    for (i, j, x) in form.dual_entries() {
        w.entry(*i).or_default().insert(*j, x.clone());
    }
    // 2(AWB − BWA) = 2(C + Cᵀ) with C = AWB, so the quadric is 4·xᵀCx
    let c = sparse_product(&sparse_product(&a, &w), &b);
    let four = rat(4);
    let mut out = Polynomial::zero(n);
    for (i, row) in c {
        for (j, x) in row {
            let mut e = alloc::vec![0u32; n];
            e[i] += 1;
            e[j] += 1;
            out.add_term(Monomial::new(e), &x * &four);
        }
    }
    out
}

/// Symmetric matrix `A` with polynomial `xᵀAx`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticForm {
    matrix: Matrix<Rational>,
}

impl QuadraticForm {
    pub fn new(matrix: Matrix<Rational>) -> Result<Self, SymplecticError> {
        let n = matrix.len();
        for i in 0..n {
            if matrix[i].len() != n {
                return Err(SymplecticError::Shape { rows: n, cols: matrix[i].len() });
            }
            for j in 0..i {
                if matrix[i][j] != matrix[j][i] {
                    return Err(SymplecticError::NotSymmetric);
                }
            }
        }
        Ok(QuadraticForm { matrix })
    }

    pub fn from_polynomial(p: &Polynomial) -> Result<Self, SymplecticError> {
        if !matches!(p.homogeneity(), Homogeneity::Degree(2) | Homogeneity::Zero) {
            return Err(SymplecticError::NotQuadratic);
        }
        let n = p.nvars();
        let mut m = linalg::zeros(n, n);
        for (i, row) in sparse_symmetric(p) {
            for (j, x) in row {
                m[i][j] = x;
            }
        }
        Ok(QuadraticForm { matrix: m })
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let n = self.matrix.len();
        let mut p = Polynomial::zero(n);
        for i in 0..n {
            for j in i..n {
                let x = &self.matrix[i][j];
                if Zero::is_zero(x) {
                    continue;
                }
                let mut e = alloc::vec![0u32; n];
                e[i] += 1;
                e[j] += 1;
                p.add_term(Monomial::new(e), if i == j { x.clone() } else { x * rat(2) });
            }
        }
        p
    }

    pub fn matrix(&self) -> &Matrix<Rational> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }
}

/// Element of 𝔰𝔭(V): `MᵀJ + JM = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpElement {
    matrix: Matrix<Rational>,
}

impl SpElement {
    pub fn new(matrix: Matrix<Rational>, form: &SymplecticForm) -> Option<Self> {
        sp_membership(&matrix, form).then_some(SpElement { matrix })
    }

    pub fn matrix(&self) -> &Matrix<Rational> {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix<Rational> {
        self.matrix
    }
}

fn check_dim(form: &SymplecticForm, n: usize) -> Result<(), SymplecticError> {
    if n != form.dim() {
        return Err(SymplecticError::DimensionMismatch { expected: form.dim(), found: n });
    }
    Ok(())
}

/// `ρ(A) = 2WA`, which is `2JA` for the block form.
pub fn quadric_to_sp(q: &QuadraticForm, form: &SymplecticForm) -> Result<SpElement, SymplecticError> {
    check_dim(form, q.dim())?;
    let m = linalg::mat_scale(&linalg::mat_mul(form.dual_matrix(), q.matrix()), &rat(2));
    Ok(SpElement { matrix: m })
}

/// Dense matrix bracket `2(AWB − BWA)`.
pub fn quadric_bracket_matrix(a: &QuadraticForm, b: &QuadraticForm, form: &SymplecticForm) -> Result<QuadraticForm, SymplecticError> {
    check_dim(form, a.dim())?;
    check_dim(form, b.dim())?;
    let w = form.dual_matrix();
    let awb = linalg::mat_mul(&linalg::mat_mul(a.matrix(), w), b.matrix());
    let bwa = linalg::mat_mul(&linalg::mat_mul(b.matrix(), w), a.matrix());
    Ok(QuadraticForm { matrix: linalg::mat_scale(&linalg::mat_sub(&awb, &bwa), &rat(2)) })
}

pub fn sp_membership(m: &Matrix<Rational>, form: &SymplecticForm) -> bool {
    if m.len() != form.dim() || m.iter().any(|r| r.len() != form.dim()) {
        return false;
    }
    let j = form.matrix();
    let lhs = linalg::mat_add(&linalg::mat_mul(&linalg::transpose(m), j), &linalg::mat_mul(j, m));
    linalg::is_zero_matrix(&lhs)
}

/// Completes a basis `e_0..e_{n-1}` of a Lagrangian subspace to a basis
/// `(e, f)` with `ω(e_i, f_j) = δ_ij` and `ω(f_i, f_j) = 0`, so the form reads
/// `(0 I; −I 0)` in it. `hints` seed the `f`'s and must pair
/// nondegenerately with the `e`'s. Columns of the result are the new basis.
pub fn symplectic_completion<F: Field>(
    form: &SymplecticForm,
    lagrangian: &[Vec<F>],
    hints: &[Vec<F>],
) -> Result<Matrix<F>, SymplecticError> {
    let n = form.half_dim();
    if lagrangian.len() != n || hints.len() != n {
        return Err(SymplecticError::BadCompletion);
    }
    for a in lagrangian {
        for b in lagrangian {
            if !form.omega(a, b).is_zero() {
                return Err(SymplecticError::BadCompletion);
            }
        }
    }
    // f = hints · G⁻¹ with G_ij = ω(e_i, h_j)
    let g: Matrix<F> = (0..n).map(|i| (0..n).map(|j| form.omega(&lagrangian[i], &hints[j])).collect()).collect();
    let ginv = linalg::inverse(&g).ok_or(SymplecticError::BadCompletion)?;
    let dim = form.dim();
    let mut fs: Vec<Vec<F>> =
        (0..n).map(|i| (0..dim).map(|c| (0..n).fold(F::zero(), |s, j| s.add(&hints[j][c].mul(&ginv[j][i])))).collect()).collect();
    for i in 0..n {
        for k in 0..i {
            let c = form.omega(&fs[k], &fs[i]);
            if c.is_zero() {
                continue;
            }
            for (x, e) in fs[i].iter_mut().zip(&lagrangian[k]) {
                *x = x.add(&c.mul(e));
            }
        }
    }
    let mut cols: Vec<Vec<F>> = lagrangian.to_vec();
    cols.extend(fs);
    Ok(linalg::transpose(&cols))
}

/// `P⁻¹ M P`.
pub fn change_basis<F: Field>(m: &Matrix<F>, p: &Matrix<F>) -> Option<Matrix<F>> {
    let pinv = linalg::inverse(p)?;
    Some(linalg::mat_mul(&pinv, &linalg::mat_mul(m, p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_poly, ratio};
    use alloc::vec;
    use proptest::prelude::*;

    fn tc_paper() -> SymplecticForm {
        SymplecticForm::from_integers(&[&[0, 0, 0, -1], &[0, 0, 3, 0], &[0, -3, 0, 0], &[1, 0, 0, 0]]).unwrap()
    }

    fn p(s: &str, n: usize) -> Polynomial {
        parse_poly(s, n).unwrap()
    }

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn standard_forms() {
        assert_eq!(standard_form(1).unwrap().matrix(), &m(&[&[0, 1], &[-1, 0]]));
        let j2 = standard_form(2).unwrap();
        assert_eq!(j2.matrix(), &m(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[-1, 0, 0, 0], &[0, -1, 0, 0]]));
        assert_eq!(standard_form(3).unwrap().dim(), 6);
        assert_eq!(standard_form(0), Err(SymplecticError::ZeroDimension));
    }

    #[test]
    fn rejects_bad_matrices() {
        assert_eq!(SymplecticForm::from_integers(&[&[0, 1], &[1, 0]]), Err(SymplecticError::NotSkew));
        assert_eq!(SymplecticForm::from_integers(&[&[0, 0], &[0, 0]]), Err(SymplecticError::Degenerate));
        assert!(matches!(SymplecticForm::from_integers(&[&[0]]), Err(SymplecticError::Shape { .. })));
    }

    #[test]
    fn dual_forms() {
        for n in 1..4 {
            let j = standard_form(n).unwrap();
            assert_eq!(dual_form(&j).matrix(), j.matrix());
        }
        let f = SymplecticForm::from_integers(&[&[0, 2], &[-2, 0]]).unwrap();
        let expect: Matrix<Rational> = vec![vec![rat(0), ratio(1, 2)], vec![ratio(-1, 2), rat(0)]];
        assert_eq!(dual_form(&f).matrix(), &expect);
        // J⁻ᵀ of the antidiagonal (−1, 3, −3, 1) form
        let expect: Matrix<Rational> = vec![
            vec![rat(0), rat(0), rat(0), rat(-1)],
            vec![rat(0), rat(0), ratio(1, 3), rat(0)],
            vec![rat(0), ratio(-1, 3), rat(0), rat(0)],
            vec![rat(1), rat(0), rat(0), rat(0)],
        ];
        assert_eq!(dual_form(&tc_paper()).matrix(), &expect);
    }

    #[test]
    fn dual_pairs_images_under_phi() {
        // ω′(φu, φv) = ω(u, v) with φ(v) = Jᵀv
        let form = tc_paper();
        let u = vec![rat(1), rat(2), rat(-1), rat(3)];
        let v = vec![rat(0), ratio(1, 2), rat(5), rat(-2)];
        let jt = linalg::transpose(form.matrix());
        let (pu, pv) = (linalg::mat_vec(&jt, &u), linalg::mat_vec(&jt, &v));
        assert_eq!(form.omega_dual(&pu, &pv), form.omega(&u, &v));
    }

    #[test]
    fn bracket_of_linear_forms_is_dual_pairing() {
        let j = standard_form(2).unwrap();
        assert_eq!(poisson_bracket(&p("x0", 4), &p("x2", 4), &j).unwrap(), p("1", 4));
        assert_eq!(poisson_bracket(&p("x2", 4), &p("x0", 4), &j).unwrap(), p("-1", 4));
        assert!(poisson_bracket(&p("x0", 4), &p("x1", 4), &j).unwrap().is_zero());
    }

    #[test]
    fn paper_form_scales_the_twisted_cubic_table() {
        // with ω as printed, [f+, f−] comes out as −h′/3
        let form = tc_paper();
        let b = poisson_bracket(&p("x2^2 - x1*x3", 4), &p("x0*x2 - x1^2", 4), &form).unwrap();
        assert_eq!(b, p("-1/3*(x0*x3 - x1*x2)", 4));
    }

    #[test]
    fn quadric_to_sp_examples() {
        let j = standard_form(1).unwrap();
        let zero = QuadraticForm::new(linalg::zeros(2, 2)).unwrap();
        assert!(linalg::is_zero_matrix(quadric_to_sp(&zero, &j).unwrap().matrix()));
        let q = QuadraticForm::from_polynomial(&p("x0*x1", 2)).unwrap();
        assert_eq!(q.matrix(), &vec![vec![rat(0), ratio(1, 2)], vec![ratio(1, 2), rat(0)]]);
        assert_eq!(quadric_to_sp(&q, &j).unwrap().matrix(), &m(&[&[1, 0], &[0, -1]]));
    }

    #[test]
    fn sp_membership_examples() {
        let j = standard_form(1).unwrap();
        assert!(sp_membership(&m(&[&[0, 1], &[-1, 0]]), &j));
        assert!(!sp_membership(&linalg::identity(2), &j));
        assert!(!sp_membership(&linalg::identity(3), &j));
    }

    #[test]
    fn completion_gives_standard_form() {
        let form = tc_paper();
        let e = vec![vec![rat(1), rat(0), rat(0), rat(0)], vec![rat(0), rat(1), rat(0), rat(0)]];
        let h = vec![vec![rat(0), rat(0), rat(0), rat(1)], vec![rat(0), rat(0), rat(1), rat(0)]];
        let pm = symplectic_completion(&form, &e, &h).unwrap();
        let pulled = linalg::mat_mul(&linalg::transpose(&pm), &linalg::mat_mul(form.matrix(), &pm));
        assert_eq!(&pulled, standard_form(2).unwrap().matrix());
    }

    fn arb_quadric(n: usize) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(-4i64..=4, n * (n + 1) / 2).prop_map(move |cs| {
            let mut q = Polynomial::zero(n);
            let mut k = 0;
            for i in 0..n {
                for j in i..n {
                    let mut e = vec![0u32; n];
                    e[i] += 1;
                    e[j] += 1;
                    q.add_term(Monomial::new(e), rat(cs[k]));
                    k += 1;
                }
            }
            q
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn sparse_and_dense_quadric_brackets_agree(a in arb_quadric(4), b in arb_quadric(4)) {
            let form = tc_paper();
            let qa = QuadraticForm::from_polynomial(&a).unwrap();
            let qb = QuadraticForm::from_polynomial(&b).unwrap();
            let dense = quadric_bracket_matrix(&qa, &qb, &form).unwrap().to_polynomial();
            prop_assert_eq!(&dense, &differential_bracket(&a, &b, &form));
            prop_assert_eq!(&dense, &poisson_bracket(&a, &b, &form).unwrap());
        }

        #[test]
        fn rho_lands_in_sp(a in arb_quadric(4)) {
            let form = tc_paper();
            let q = QuadraticForm::from_polynomial(&a).unwrap();
            prop_assert!(sp_membership(quadric_to_sp(&q, &form).unwrap().matrix(), &form));
        }
    }
}
