//! Example varieties: generated families and bundled equation files.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::arith::{monomials_of_degree, parse_poly, parse_poly_with, rat, ratio, Homogeneity, Monomial, Polynomial, Rational};
use crate::legendrian::{GradedIdeal, LegendrianError, Parametrization, VarietyPresentation};
use crate::linalg::{GaussianRational, Insertion, Matrix, SparseSpan};
use crate::symplectic::{standard_form, SymplecticForm};

pub const GR36_DATA: &str = include_str!("../data/gr36.txt");
pub const GRL36_DATA: &str = include_str!("../data/grl36.txt");
pub const E7_DATA: &str = include_str!("../data/e7.txt");

pub const GR36_SHA256: &str = "4e1ffe3dc6edab2ec4a0c8547d9ff6bda7cbbb293111a89ededc23c1e6bc9d7f";
pub const GRL36_SHA256: &str = "3492a85f514bc01d2911e469c4b13e93cdc3a7909d75c7aa69a31387fb8920df";
pub const E7_SHA256: &str = "c56b1cebe153b1e7ac21c0f2c92e835e61822df1869bf927a12e0bed66cfc27d";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("checksum mismatch for {0}")]
    Checksum(&'static str),
    #[error("{file}, line {line}: {message}")]
    Data { file: &'static str, line: usize, message: String },
    #[error("expected {expected} equations in {file}, found {found}")]
    Count { file: &'static str, expected: usize, found: usize },
    #[error("the segre family needs n >= 3, got {0}")]
    SegreTooSmall(usize),
    #[error("f must be a nonzero homogeneous polynomial")]
    Inhomogeneous,
    #[error("cross-check failed: {0}")]
    CrossCheck(String),
    #[error("unknown catalog entry '{0}'")]
    Unknown(String),
    #[error(transparent)]
    Presentation(#[from] LegendrianError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Generated,
    Transcribed { file: &'static str, sha256: &'static str },
}

#[derive(Clone, Debug, PartialEq)]
pub struct CatalogEntry {
    pub presentation: VarietyPresentation,
    pub source: Source,
    pub base_point: Vec<GaussianRational>,
    pub provenance_note: String,
}

impl CatalogEntry {
    /// The base point when all its coordinates are rational.
    pub fn rational_base_point(&self) -> Option<Vec<Rational>> {
        self.base_point.iter().map(|z| z.is_real().then(|| z.re.clone())).collect()
    }
}

pub const ENTRY_NAMES: [&str; 13] = [
    "twisted-cubic",
    "four-lines",
    "segre-3",
    "segre-4",
    "segre-5",
    "gr-3-6",
    "gr-l-3-6",
    "spinor-s6",
    "e7",
    "complete-intersection",
    "xf-f1",
    "xf-f2",
    "xf-f3",
];

/// Looks up an entry by its command-line name; `segre-<n>` accepts any
/// `n >= 3`.
pub fn by_name(name: &str) -> Result<CatalogEntry, CatalogError> {
    match name {
        "twisted-cubic" => Ok(twisted_cubic()),
        "four-lines" => Ok(four_lines()),
        "gr-3-6" => grassmannian_36(),
        "gr-l-3-6" => lagrangian_grassmannian_36(),
        "spinor-s6" => Ok(spinor_s6()),
        "e7" => e7_variety(),
        "complete-intersection" => Ok(complete_intersection_complex()),
        "xf-f1" => x_f(&parse_poly("x0^3", 2).unwrap()),
        "xf-f2" => x_f(&parse_poly("x0^2*x1", 2).unwrap()),
        "xf-f3" => x_f(&parse_poly("x0*x1*(x0 + x1)", 2).unwrap()),
        _ => match name.strip_prefix("segre-").and_then(|n| n.parse().ok()) {
            Some(n) => segre_line_quadric(n),
            None => Err(CatalogError::Unknown(name.to_owned())),
        },
    }
}

fn real_point(v: Vec<Rational>) -> Vec<GaussianRational> {
    v.into_iter().map(GaussianRational::real).collect()
}

fn unit(n: usize, i: usize) -> Vec<GaussianRational> {
    real_point((0..n).map(|k| rat((k == i) as i64)).collect())
}

fn polys(src: &[&str], n: usize) -> Vec<Polynomial> {
    src.iter().map(|s| parse_poly(s, n).expect("built-in polynomial")).collect()
}

/// The twisted-cubic form, `ω′` having matrix `(0 0 0 3; 0 0 −1 0; 0 1 0 0; −3 0 0 0)`.
pub fn twisted_cubic_form() -> SymplecticForm {
    SymplecticForm::new(vec![
        vec![rat(0), rat(0), rat(0), ratio(1, 3)],
        vec![rat(0), rat(0), rat(-1), rat(0)],
        vec![rat(0), rat(1), rat(0), rat(0)],
        vec![ratio(-1, 3), rat(0), rat(0), rat(0)],
    ])
    .expect("valid form")
}

/// `f₊ = x₂² − x₁x₃`, `f₋ = x₀x₂ − x₁²`, `h′ = x₀x₃ − x₁x₂`.
pub fn twisted_cubic() -> CatalogEntry {
    let gens = polys(&["x2^2 - x1*x3", "x0*x2 - x1^2", "x0*x3 - x1*x2"], 4);
    let (l, m) = (Polynomial::var(2, 0), Polynomial::var(2, 1));
    let param = Parametrization::new(2, vec![l.pow(3), &l.pow(2) * &m, &l * &m.pow(2), m.pow(3)]).unwrap();
    let mut v = VarietyPresentation::new("twisted-cubic", twisted_cubic_form(), gens).unwrap().with_parametrization(param).unwrap();
    v.expected_algebra = Some("A1".into());
    v.expected_dim = Some(3);
    CatalogEntry {
        presentation: v,
        source: Source::Generated,
        base_point: unit(4, 0),
        provenance_note: "image of (λ:μ) ↦ (λ³:λ²μ:λμ²:μ³); generators f+, f-, h'".into(),
    }
}

pub fn four_lines() -> CatalogEntry {
    let v = VarietyPresentation::new("four-lines", standard_form(2).unwrap(), polys(&["x0*x2", "x1*x3"], 4)).unwrap();
    CatalogEntry {
        presentation: v,
        source: Source::Generated,
        base_point: unit(4, 0),
        provenance_note: "union of four legendrian lines, reducible".into(),
    }
}

/// Type of `𝔰𝔬_n` as sorted simple labels.
pub fn so_type(n: usize) -> Vec<String> {
    match n {
        0..=2 => Vec::new(),
        3 => vec!["A1".into()],
        4 => vec!["A1".into(), "A1".into()],
        6 => vec!["A3".into()],
        _ if n % 2 == 1 => vec![format!("B{}", (n - 1) / 2)],
        _ => vec![format!("D{}", n / 2)],
    }
}

/// Sorts labels by family letter, then rank, and joins them with `+`.
pub fn join_labels(labels: &[String]) -> String {
    let mut l: Vec<(char, usize)> = labels.iter().map(|s| (s.chars().next().unwrap(), s[1..].parse().unwrap())).collect();
    l.sort();
    l.iter().map(|(c, r)| format!("{c}{r}")).collect::<Vec<_>>().join("+")
}

/// `ℙ¹ × Q^{n−2} ⊂ ℙ^{2n−1}` with generators `f_ij`, `g₊`, `g₋`, `h`.
pub fn segre_line_quadric(n: usize) -> Result<CatalogEntry, CatalogError> {
    if n < 3 {
        return Err(CatalogError::SegreTooSmall(n));
    }
    let m = 2 * n;
    let x = |i: usize| Polynomial::var(m, i);
    let mut gens = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            gens.push(&(&x(i) * &x(n + j)) - &(&x(j) * &x(n + i)));
        }
    }
    let half = ratio(1, 2);
    let mut gp = Polynomial::zero(m);
    let mut gm = Polynomial::zero(m);
    let mut h = Polynomial::zero(m);
    for k in 0..n {
        gp = &gp + &(&x(n + k) * &x(n + k)).scale(&half);
        gm = &gm - &(&x(k) * &x(k)).scale(&half);
        h = &h + &(&x(k) * &x(n + k));
    }
    gens.extend([gp, gm, h]);
    let mut v = VarietyPresentation::new(format!("segre-{n}"), standard_form(n).unwrap(), gens)?;
    let mut labels = so_type(n);
    labels.push("A1".into());
    v.expected_algebra = Some(join_labels(&labels));
    v.expected_dim = Some(n * (n - 1) / 2 + 3);
    // Σx_k² = 0 has no nonzero rational solution, so the base point is Gaussian
    let mut base = vec![<GaussianRational as crate::linalg::Field>::zero(); m];
    base[0] = GaussianRational::real(rat(1));
    base[1] = GaussianRational::i();
    Ok(CatalogEntry {
        presentation: v,
        source: Source::Generated,
        base_point: base,
        provenance_note: format!("P^1 x Q^{} in P^{}, standard form", n - 2, m - 1),
    })
}

fn verify(data: &'static str, file: &'static str, sha: &'static str) -> Result<(), CatalogError> {
    let digest = Sha256::digest(data.as_bytes());
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    if hex != sha {
        return Err(CatalogError::Checksum(file));
    }
    Ok(())
}

fn data_lines(data: &'static str) -> impl Iterator<Item = (usize, &'static str)> {
    data.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// The 20 increasing triples of `1..=6`, in lexicographic order.
pub fn plucker_triples() -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 1..=6 {
        for b in a + 1..=6 {
            for c in b + 1..=6 {
                out.push([a, b, c]);
            }
        }
    }
    out
}

fn permutation_sign(seq: &[usize]) -> i64 {
    let mut s = 1;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                s = -s;
            }
        }
    }
    s
}

/// Resolves `x<ijk>` to `±x_I` with `I` the sorted triple.
pub fn plucker_index(digits: &str) -> Option<(i64, usize)> {
    let d: Vec<usize> = digits.bytes().map(|b| (b as usize).wrapping_sub(b'0' as usize)).collect();
    if d.len() != 3 || d.iter().any(|&k| !(1..=6).contains(&k)) || d[0] == d[1] || d[1] == d[2] || d[0] == d[2] {
        return None;
    }
    let mut s = d.clone();
    s.sort_unstable();
    let idx = plucker_triples().iter().position(|t| t[..] == s[..])?;
    Some((permutation_sign(&d), idx))
}

pub fn plucker_name(index: usize) -> String {
    let t = plucker_triples()[index];
    format!("x{}{}{}", t[0], t[1], t[2])
}

/// `ω(e_I, e_K) = sign(I K)` for complementary triples, from
/// `Λ³ℂ⁶ × Λ³ℂ⁶ → Λ⁶ℂ⁶`.
pub fn wedge_form() -> SymplecticForm {
    let t = plucker_triples();
    let mut j: Matrix<Rational> = vec![vec![rat(0); 20]; 20];
    for (a, i) in t.iter().enumerate() {
        for (b, k) in t.iter().enumerate() {
            if i.iter().all(|x| !k.contains(x)) {
                let cat: Vec<usize> = i.iter().chain(k).copied().collect();
                j[a][b] = rat(permutation_sign(&cat));
            }
        }
    }
    SymplecticForm::new(j).expect("the wedge pairing is symplectic")
}

fn gr36_equations() -> Result<Vec<Polynomial>, CatalogError> {
    verify(GR36_DATA, "gr36.txt", GR36_SHA256)?;
    let resolver = |letters: &str, digits: &str| -> Option<(Rational, usize)> {
        if letters != "x" {
            return None;
        }
        plucker_index(digits).map(|(s, i)| (rat(s), i))
    };
    let mut out = Vec::new();
    for (line, text) in data_lines(GR36_DATA) {
        let p = parse_poly_with(text, 20, &resolver).map_err(|e| CatalogError::Data { file: "gr36.txt", line, message: e.to_string() })?;
        out.push(p);
    }
    if out.len() != 35 {
        return Err(CatalogError::Count { file: "gr36.txt", expected: 35, found: out.len() });
    }
    Ok(out)
}

/// `Gr(3,6) ⊂ ℙ(Λ³ℂ⁶)`, 35 Plücker quadrics.
pub fn grassmannian_36() -> Result<CatalogEntry, CatalogError> {
    let gens = gr36_equations()?;
    // rowspace of (I | A): x_I is the minor on columns I
    let a = |r: usize, c: usize| Polynomial::var(9, 3 * r + c);
    let column = |c: usize, r: usize| -> Polynomial {
        if c <= 3 {
            Polynomial::constant(9, rat((r + 1 == c) as i64))
        } else {
            a(r, c - 4)
        }
    };
    let comps: Vec<Polynomial> = plucker_triples()
        .iter()
        .map(|t| {
            let m: Vec<Vec<Polynomial>> = (0..3).map(|r| t.iter().map(|&c| column(c, r)).collect()).collect();
            det3(&m)
        })
        .collect();
    let mut v = VarietyPresentation::new("gr-3-6", wedge_form(), gens)?.with_parametrization(Parametrization::new(9, comps)?)?;
    v.expected_algebra = Some("A5".into());
    v.expected_dim = Some(35);
    Ok(CatalogEntry {
        presentation: v,
        source: Source::Transcribed { file: "gr36.txt", sha256: GR36_SHA256 },
        base_point: unit(20, 0),
        provenance_note: "Pluecker quadrics, coordinates x_ijk ordered lexicographically by sorted triple".into(),
    })
}

fn det3(m: &[Vec<Polynomial>]) -> Polynomial {
    let t = |a: usize, b: usize, c: usize| &(&m[0][a] * &m[1][b]) * &m[2][c];
    let pos = &(&t(0, 1, 2) + &t(1, 2, 0)) + &t(2, 0, 1);
    let neg = &(&t(2, 1, 0) + &t(0, 2, 1)) + &t(1, 0, 2);
    &pos - &neg
}

fn grl36_equations() -> Result<Vec<Polynomial>, CatalogError> {
    verify(GRL36_DATA, "grl36.txt", GRL36_SHA256)?;
    let mut out = Vec::new();
    for (line, text) in data_lines(GRL36_DATA) {
        let p = parse_poly(text, 14).map_err(|e| CatalogError::Data { file: "grl36.txt", line, message: e.to_string() })?;
        out.push(p);
    }
    if out.len() != 21 {
        return Err(CatalogError::Count { file: "grl36.txt", expected: 21, found: out.len() });
    }
    Ok(out)
}

/// Images of `y₀…y₁₃` in `Λ³ℂ⁶` as (Plücker name, coefficient) lists.
pub const LAGRANGIAN_EMBEDDING: [&[(&str, (i64, i64))]; 14] = [
    &[("123", (1, 1))],
    &[("126", (1, 1))],
    &[("135", (1, 1))],
    &[("243", (1, 1))],
    &[("124", (1, 1)), ("263", (-1, 1))],
    &[("125", (1, 1)), ("136", (-1, 1))],
    &[("134", (1, 1)), ("235", (-1, 1))],
    &[("456", (1, 1))],
    &[("354", (1, 1))],
    &[("264", (1, 1))],
    &[("156", (1, 1))],
    &[("365", (1, 2)), ("145", (-1, 2))],
    &[("346", (1, 2)), ("245", (-1, 2))],
    &[("256", (1, 2)), ("146", (-1, 2))],
];

/// 20 × 14 matrix `E` with `x = E y`.
pub fn lagrangian_embedding_matrix() -> Matrix<Rational> {
    let mut e = vec![vec![rat(0); 14]; 20];
    for (y, images) in LAGRANGIAN_EMBEDDING.iter().enumerate() {
        for (name, (p, q)) in images.iter() {
            let (s, i) = plucker_index(name).expect("valid name");
            e[i][y] += ratio(s * p, *q);
        }
    }
    e
}

/// Pulls the 35 Plücker quadrics back along `x = E y` and compares the span
/// with the 21 listed quadrics.
pub fn lagrangian_cross_check() -> Result<(), CatalogError> {
    let e = lagrangian_embedding_matrix();
    let images: Vec<Polynomial> = (0..20)
        .map(|i| Polynomial::from_terms(14, (0..14).filter(|&y| !e[i][y].is_zero()).map(|y| (Monomial::var(14, y), e[i][y].clone()))))
        .collect();
    let mut pulled = SparseSpan::new();
    for q in gr36_equations()? {
        pulled.insert(q.substitute(&images).term_map());
    }
    let listed = grl36_equations()?;
    let mut own = SparseSpan::new();
    for q in &listed {
        own.insert(q.term_map());
        if !pulled.contains(q.term_map()) {
            return Err(CatalogError::CrossCheck(format!("{q} is not a pulled-back Pluecker relation")));
        }
    }
    if own.dim() != 21 || pulled.dim() != 21 {
        return Err(CatalogError::CrossCheck(format!("span dimensions {} and {}", own.dim(), pulled.dim())));
    }
    Ok(())
}

/// `Gr_L(3,6) ⊂ ℙ¹³`, 21 quadrics in `y₀…y₁₃`, `y_i` dual to `y_{7+i}`.
pub fn lagrangian_grassmannian_36() -> Result<CatalogEntry, CatalogError> {
    let mut v = VarietyPresentation::new("gr-l-3-6", standard_form(7).unwrap(), grl36_equations()?)?;
    v.expected_algebra = Some("C3".into());
    v.expected_dim = Some(21);
    Ok(CatalogEntry {
        presentation: v,
        source: Source::Transcribed { file: "grl36.txt", sha256: GRL36_SHA256 },
        base_point: unit(14, 0),
        provenance_note: "21 quadrics in y0..y13; y_i embed in Lambda^3 C^6 by LAGRANGIAN_EMBEDDING".into(),
    })
}

fn pfaffian(m: &[Vec<Polynomial>], rows: &[usize], nvars: usize) -> Polynomial {
    if rows.is_empty() {
        return Polynomial::constant(nvars, rat(1));
    }
    let i = rows[0];
    let mut s = Polynomial::zero(nvars);
    for (k, &j) in rows[1..].iter().enumerate() {
        if m[i][j].is_zero() {
            continue;
        }
        let rest: Vec<usize> = rows[1..].iter().copied().filter(|&r| r != j).collect();
        let term = &m[i][j] * &pfaffian(m, &rest, nvars);
        s = if k % 2 == 0 { &s + &term } else { &s - &term };
    }
    s
}

/// Index pairs `i < j` of `0..6` in lexicographic order.
pub fn skew_pairs() -> Vec<(usize, usize)> {
    (0..6).flat_map(|i| (i + 1..6).map(move |j| (i, j))).collect()
}

fn skew_matrix(entries: &[Polynomial], nvars: usize) -> Vec<Vec<Polynomial>> {
    let mut m = vec![vec![Polynomial::zero(nvars); 6]; 6];
    for (k, (i, j)) in skew_pairs().into_iter().enumerate() {
        m[i][j] = entries[k].clone();
        m[j][i] = -&entries[k];
    }
    m
}

/// `P(M)_ij = (−1)^{i+j+1} Pf(M without rows and columns i, j)` for `i < j`.
fn pfaffian_adjugate(m: &[Vec<Polynomial>], nvars: usize) -> Vec<Polynomial> {
    skew_pairs()
        .into_iter()
        .map(|(i, j)| {
            let rest: Vec<usize> = (0..6).filter(|&r| r != i && r != j).collect();
            let p = pfaffian(m, &rest, nvars);
            if (i + j) % 2 == 0 {
                -p
            } else {
                p
            }
        })
        .collect()
}

/// Spinor variety `𝕊₆ ⊂ ℙ³¹` in `(x, m_ij, n_ij, y)`: the entries of
/// `MN − xy·Id`, of `Pf_M + xN` and of `Pf_N − yM`.
pub fn spinor_s6() -> CatalogEntry {
    let nv = 32;
    let var = |i| Polynomial::var(nv, i);
    let mvars: Vec<Polynomial> = (1..16).map(var).collect();
    let nvars_: Vec<Polynomial> = (16..31).map(var).collect();
    let (x, y) = (var(0), var(31));
    let m = skew_matrix(&mvars, nv);
    let n = skew_matrix(&nvars_, nv);
    let xy = &x * &y;
    let mut gens = Vec::new();
    for i in 0..6 {
        for j in 0..6 {
            let mut e = Polynomial::zero(nv);
            for k in 0..6 {
                e = &e + &(&m[i][k] * &n[k][j]);
            }
            if i == j {
                e = &e - &xy;
            }
            gens.push(e);
        }
    }
    for (k, p) in pfaffian_adjugate(&m, nv).into_iter().enumerate() {
        gens.push(&p + &(&x * &nvars_[k]));
    }
    for (k, p) in pfaffian_adjugate(&n, nv).into_iter().enumerate() {
        gens.push(&p - &(&y * &mvars[k]));
    }
    gens.retain(|g| !g.is_zero());
    let mut j = vec![vec![rat(0); nv]; nv];
    j[0][31] = rat(1);
    j[31][0] = rat(-1);
    for k in 0..15 {
        j[1 + k][16 + k] = rat(1);
        j[16 + k][1 + k] = rat(-1);
    }
    let form = SymplecticForm::new(j).expect("valid form");
    // pure spinors: x = 1, M = A, N_ij = (−1)^{i+j} Pf(A without i, j), y = Pf A
    let a: Vec<Polynomial> = (0..15).map(|k| Polynomial::var(15, k)).collect();
    let am = skew_matrix(&a, 15);
    let mut comps = vec![Polynomial::constant(15, rat(1))];
    comps.extend(a.iter().cloned());
    comps.extend(pfaffian_adjugate(&am, 15).into_iter().map(|p| -p));
    comps.push(pfaffian(&am, &[0, 1, 2, 3, 4, 5], 15));
    let mut v =
        VarietyPresentation::new("spinor-s6", form, gens).unwrap().with_parametrization(Parametrization::new(15, comps).unwrap()).unwrap();
    v.expected_algebra = Some("D6".into());
    v.expected_dim = Some(66);
    CatalogEntry {
        presentation: v,
        source: Source::Generated,
        base_point: unit(32, 0),
        provenance_note: "generated from MN = xy Id, Pf(M) = -xN, Pf(N) = yM; x pairs with y, m_ij with n_ij".into(),
    }
}

fn e7_equations() -> Result<Vec<Polynomial>, CatalogError> {
    verify(E7_DATA, "e7.txt", E7_SHA256)?;
    let mut out = Vec::new();
    for (line, text) in data_lines(E7_DATA) {
        let p = parse_poly(text, 56).map_err(|e| CatalogError::Data { file: "e7.txt", line, message: e.to_string() })?;
        out.push(p);
    }
    if out.len() != 133 {
        return Err(CatalogError::Count { file: "e7.txt", expected: 133, found: out.len() });
    }
    Ok(out)
}

/// Closed `E₇` orbit in `ℙ⁵⁵`, 133 quadrics, `x_i` dual to `x_{28+i}`.
pub fn e7_variety() -> Result<CatalogEntry, CatalogError> {
    let mut v = VarietyPresentation::new("e7", standard_form(28).unwrap(), e7_equations()?)?;
    v.expected_algebra = Some("E7".into());
    v.expected_dim = Some(133);
    Ok(CatalogEntry {
        presentation: v,
        source: Source::Transcribed { file: "e7.txt", sha256: E7_SHA256 },
        base_point: unit(56, 0),
        provenance_note: "133 quadrics; the pairing x_i <-> x_(28+i) is read off the equations".into(),
    })
}

/// `u₀v₀ − u₁v₁`, `u₀v₀ − u₂v₂`, `u₀u₁u₂ − v₀v₁v₂` in `(u₀,u₁,u₂,v₀,v₁,v₂)`.
pub fn complete_intersection_complex() -> CatalogEntry {
    let gens = polys(&["x0*x3 - x1*x4", "x0*x3 - x2*x5", "x0*x1*x2 - x3*x4*x5"], 6);
    let v = VarietyPresentation::new("complete-intersection", standard_form(3).unwrap(), gens).unwrap();
    CatalogEntry {
        presentation: v,
        source: Source::Generated,
        base_point: real_point(vec![rat(1); 6]),
        provenance_note: "singular along the six lines u0=v0=u1=v2=0, u0=v0=v1=u2=0, u1=v1=u0=v2=0, \
                          u1=v1=v0=u2=0, u2=v2=u0=v1=0, u2=v2=v0=u1=0"
            .into(),
    }
}

pub const XF_DEFAULT_MAX_DEGREE: u32 = 3;

/// The five equations attached to `f = y₁y₂(y₁ + y₂)`.
pub const XF_F3_EQUATIONS: [&str; 5] = [
    "x0*x5 + x1^2 + 2*x1*x2",
    "x0*x4 + 2*x1*x2 + x2^2",
    "3*x0*x3 + x1*x4 + x2*x5",
    "x1*x4^2 - 2*x1*x4*x5 + 9*x2^2*x3 - 5*x2*x4*x5 + 4*x2*x5^2",
    "x1*x3*x4 - 2*x1*x3*x5 + 2*x2*x3*x4 - x2*x3*x5 - x4^2*x5 + x4*x5^2",
];

/// `φ_f(y) = (1, y, (k−2)f(y), −∂f/∂y)` as an affine map in `n − 1`
/// parameters.
pub fn x_f_parametrization(f: &Polynomial) -> Result<Parametrization, CatalogError> {
    let k = match f.homogeneity() {
        Homogeneity::Degree(k) => k,
        _ => return Err(CatalogError::Inhomogeneous),
    };
    let m = f.nvars();
    let mut comps = vec![Polynomial::constant(m, rat(1))];
    comps.extend((0..m).map(|i| Polynomial::var(m, i)));
    comps.push(f.scale(&rat(k as i64 - 2)));
    comps.extend((0..m).map(|i| -f.partial(i)));
    Ok(Parametrization::new(m, comps)?)
}

/// Same map homogenized with an extra parameter `t` (the last one):
/// `(t^k, t^{k−1}y, (k−2)f(y), −t ∂f/∂y)`.
fn x_f_homogeneous(f: &Polynomial, k: u32) -> Vec<Polynomial> {
    let m = f.nvars();
    let t = Polynomial::var(m + 1, m);
    let ext = f.extend_vars(m + 1);
    let mut comps = vec![t.pow(k)];
    comps.extend((0..m).map(|i| &t.pow(k.saturating_sub(1)) * &Polynomial::var(m + 1, i)));
    comps.push(ext.scale(&rat(k as i64 - 2)));
    comps.extend((0..m).map(|i| &t * &(-ext.partial(i))));
    comps
}

/// Homogeneous equations of the closure of the image of a homogeneous map, up
/// to `max_degree`, keeping only those not implied by lower degrees.
pub fn implicit_equations(components: &[Polynomial], max_degree: u32) -> Vec<Polynomial> {
    let n = components.len();
    let mut found: Vec<Polynomial> = Vec::new();
    for d in 1..=max_degree {
        let monos = monomials_of_degree(n, d);
        let mut span: SparseSpan<Monomial> = SparseSpan::new();
        let mut kernel = Vec::new();
        for m in &monos {
            let image = Polynomial::monomial(m.clone(), rat(1)).substitute(components);
            if let Insertion::Dependent(rel) = span.insert(image.term_map()) {
                kernel.push(Polynomial::from_terms(n, rel.into_iter().map(|(j, c)| (monos[j].clone(), c))));
            }
        }
        let lower = found.clone();
        let mut graded = GradedIdeal::new(n, &lower);
        let mut piece: SparseSpan<Monomial> = graded.piece(d).clone();
        for q in kernel {
            if let Insertion::Independent(_) = piece.insert(q.term_map()) {
                found.push(q.monic());
            }
        }
    }
    found
}

pub fn x_f(f: &Polynomial) -> Result<CatalogEntry, CatalogError> {
    x_f_with_degree(f, XF_DEFAULT_MAX_DEGREE)
}

/// `X_f ⊂ ℙ^{2n−1}` for `f` homogeneous in `n − 1` variables. The equations
/// are computed up to `max_degree`, except for `y₁y₂(y₁+y₂)` whose five
/// known equations are attached.
pub fn x_f_with_degree(f: &Polynomial, max_degree: u32) -> Result<CatalogEntry, CatalogError> {
    let param = x_f_parametrization(f)?;
    let k = f.total_degree().ok_or(CatalogError::Inhomogeneous)?;
    let n = f.nvars() + 1;
    let f3 = parse_poly("x0^2*x1 + x0*x1^2", 2).unwrap();
    let (gens, note) = if *f == f3 {
        (polys(&XF_F3_EQUATIONS, 6), "five listed equations of X_f for f = y1 y2 (y1 + y2)".to_string())
    } else {
        (
            implicit_equations(&x_f_homogeneous(f, k), max_degree),
            format!("equations of degree <= {max_degree} computed by exact interpolation"),
        )
    };
    let base = real_point(param.eval(&vec![rat(0); f.nvars()]));
    let v =
        VarietyPresentation::new(format!("X_f, f = {}", display_in_y(f)), standard_form(n).unwrap(), gens)?.with_parametrization(param)?;
    Ok(CatalogEntry { presentation: v, source: Source::Generated, base_point: base, provenance_note: note })
}

/// Prints a polynomial in `y1, y2, …` instead of `x0, x1, …`.
pub fn display_in_y(f: &Polynomial) -> String {
    let s = format!("{f}");
    let mut out = String::new();
    let b = s.as_bytes();
    let mut i = 0;
    while i < b.len() {
        if b[i] == b'x' && i + 1 < b.len() && b[i + 1].is_ascii_digit() {
            let mut j = i + 1;
            while j < b.len() && b[j].is_ascii_digit() {
                j += 1;
            }
            let k: usize = s[i + 1..j].parse().unwrap();
            out.push_str(&format!("y{}", k + 1));
            i = j;
        } else {
            out.push(b[i] as char);
            i += 1;
        }
    }
    out
}

/// All named entries, in `ENTRY_NAMES` order.
pub fn all_entries() -> Result<BTreeMap<&'static str, CatalogEntry>, CatalogError> {
    ENTRY_NAMES.iter().map(|&n| by_name(n).map(|e| (n, e))).collect()
}
