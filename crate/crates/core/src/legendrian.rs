//! Legendrianity verdicts for projective varieties given by homogeneous
//! generators: bracket closure of the ideal plus the cone dimension, pointwise
//! conormal and tangent checks, the ODE for rational curves in ℙ³ and
//! degeneracy detection.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::arith::{monomials_of_degree, rat, Homogeneity, Monomial, Polynomial, Rational};
use crate::groebner::{self, GroebnerBasis, GroebnerError, IdealPresentation};
use crate::linalg::{self, Field, SparseSpan};
use crate::symplectic::{poisson_bracket, SymplecticForm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LegendrianError {
    #[error("generator {0} is not homogeneous")]
    Inhomogeneous(usize),
    #[error("expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the presentation has no generators")]
    NoGenerators,
    #[error("the presentation has no parametrization")]
    NoParametrization,
    #[error("parametrization component {0} lives in the wrong number of parameters")]
    BadParametrization(usize),
    #[error("point is zero")]
    ZeroPoint,
    #[error("point does not lie on the cone: generator {0} does not vanish")]
    NotOnCone(usize),
    #[error("rank {rank} at the point, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// Affine map `k^m → V` whose image is dense in the cone (or in a chart of it).
#[derive(Clone, Debug, PartialEq)]
pub struct Parametrization {
    nparams: usize,
    components: Vec<Polynomial>,
}

impl Parametrization {
    pub fn new(nparams: usize, components: Vec<Polynomial>) -> Result<Self, LegendrianError> {
        if let Some(i) = components.iter().position(|c| c.nvars() != nparams) {
            return Err(LegendrianError::BadParametrization(i));
        }
        Ok(Parametrization { nparams, components })
    }

    pub fn nparams(&self) -> usize {
        self.nparams
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn eval<F: Field>(&self, params: &[F]) -> Vec<F> {
        self.components.iter().map(|c| c.eval_in(params)).collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VarietyPresentation {
    name: String,
    form: SymplecticForm,
    generators: Vec<Polynomial>,
    parametrization: Option<Parametrization>,
    pub expected_algebra: Option<String>,
    pub expected_dim: Option<usize>,
}

impl VarietyPresentation {
    pub fn new(name: impl Into<String>, form: SymplecticForm, generators: Vec<Polynomial>) -> Result<Self, LegendrianError> {
        let n = form.dim();
        for (i, g) in generators.iter().enumerate() {
            if g.nvars() != n {
                return Err(LegendrianError::DimensionMismatch { expected: n, found: g.nvars() });
            }
            if g.homogeneity() == Homogeneity::Inhomogeneous {
                return Err(LegendrianError::Inhomogeneous(i));
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(VarietyPresentation { name: name.into(), form, generators, parametrization: None, expected_algebra: None, expected_dim: None })
    }

    pub fn with_parametrization(mut self, p: Parametrization) -> Result<Self, LegendrianError> {
        if p.components.len() != self.form.dim() {
            return Err(LegendrianError::DimensionMismatch { expected: self.form.dim(), found: p.components.len() });
        }
        self.parametrization = Some(p);
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn nvars(&self) -> usize {
        self.form.dim()
    }

    pub fn half_dim(&self) -> usize {
        self.form.half_dim()
    }

    pub fn form(&self) -> &SymplecticForm {
        &self.form
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn parametrization(&self) -> Option<&Parametrization> {
        self.parametrization.as_ref()
    }

    pub fn ideal(&self) -> IdealPresentation {
        IdealPresentation::new(self.nvars(), self.generators.clone()).expect("generators share the ambient dimension")
    }

    pub fn is_on_cone<F: Field>(&self, point: &[F]) -> Option<usize> {
        self.generators.iter().position(|g| !g.eval_in(point).is_zero())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    /// `[g_i, g_j]` with a nonzero remainder modulo the ideal.
    Pair {
        i: usize,
        j: usize,
        remainder: Polynomial,
    },
    Dimension {
        expected: usize,
        found: usize,
    },
    EmptyCone,
    Point {
        point: Vec<Rational>,
        reason: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Closure {
    Closed,
    NotClosed,
    Undecided,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClosureReport {
    pub status: Closure,
    pub pairs_checked: usize,
    pub witnesses: Vec<Witness>,
    /// Pairs left unchecked when the Gröbner budget ran out.
    pub unchecked: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Legendrian,
    NotLegendrian,
    Undecided,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Legendrian => "legendrian",
            Verdict::NotLegendrian => "not-legendrian",
            Verdict::Undecided => "undecided",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LegendrianVerdict {
    pub bracket_closed: Option<bool>,
    pub cone_dimension: Option<usize>,
    pub degenerate: bool,
    pub linear_form: Option<Polynomial>,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    /// Only the total dimension of the cone is checked, never the dimension of
    /// each component.
    pub equidimensionality_unchecked: bool,
    pub exhausted_budget: bool,
}

fn all_pairs(k: usize) -> Vec<(usize, usize)> {
    (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect()
}

fn closure_against(v: &VarietyPresentation, gb: &GroebnerBasis) -> ClosureReport {
    let gens = v.generators();
    let mut witnesses = Vec::new();
    let pairs = all_pairs(gens.len());
    for &(i, j) in &pairs {
        let b = poisson_bracket(&gens[i], &gens[j], v.form()).expect("dimensions validated on construction");
        let r = groebner::normal_form(&b, gb);
        if !r.is_zero() {
            witnesses.push(Witness::Pair { i, j, remainder: r });
        }
    }
    let status = if witnesses.is_empty() { Closure::Closed } else { Closure::NotClosed };
    ClosureReport { status, pairs_checked: pairs.len(), witnesses, unchecked: Vec::new() }
}

/// Brackets every unordered pair of generators and reduces modulo a Gröbner
/// basis of the ideal.
pub fn bracket_closure_check(v: &VarietyPresentation) -> Result<ClosureReport, LegendrianError> {
    bracket_closure_check_with_budget(v, groebner::DEFAULT_PAIR_BUDGET)
}

pub fn bracket_closure_check_with_budget(v: &VarietyPresentation, budget: usize) -> Result<ClosureReport, LegendrianError> {
    if v.generators().is_empty() {
        return Err(LegendrianError::NoGenerators);
    }
    match groebner::buchberger_with_budget(&v.ideal(), budget) {
        Ok(gb) => Ok(closure_against(v, &gb)),
        Err(GroebnerError::BudgetExceeded { .. }) => Ok(ClosureReport {
            status: Closure::Undecided,
            pairs_checked: 0,
            witnesses: Vec::new(),
            unchecked: all_pairs(v.generators().len()),
        }),
        Err(e) => Err(e.into()),
    }
}

/// Graded pieces `I_d` of a homogeneous ideal, spanned by `m·g` with
/// `deg m + deg g = d`. Membership of a homogeneous polynomial is then plain
/// linear algebra, which avoids a Gröbner basis altogether.
pub struct GradedIdeal<'a> {
    nvars: usize,
    generators: &'a [Polynomial],
    pieces: BTreeMap<u32, SparseSpan<Monomial>>,
}

impl<'a> GradedIdeal<'a> {
    pub fn new(nvars: usize, generators: &'a [Polynomial]) -> Self {
        GradedIdeal { nvars, generators, pieces: BTreeMap::new() }
    }

    pub fn piece(&mut self, d: u32) -> &SparseSpan<Monomial> {
        let (n, gens) = (self.nvars, self.generators);
        self.pieces.entry(d).or_insert_with(|| {
            let mut span = SparseSpan::new();
            for g in gens {
                let Some(dg) = g.total_degree() else { continue };
                if dg > d {
                    continue;
                }
                for m in monomials_of_degree(n, d - dg) {
                    let mut p = Polynomial::zero(n);
                    p.add_scaled_shifted(g, &rat(1), &m);
                    span.insert(p.term_map());
                }
            }
            span
        })
    }

    pub fn contains(&mut self, p: &Polynomial) -> bool {
        match p.homogeneity() {
            Homogeneity::Zero => true,
            Homogeneity::Degree(d) => self.piece(d).contains(p.term_map()),
            Homogeneity::Inhomogeneous => {
                let mut parts: BTreeMap<u32, Polynomial> = BTreeMap::new();
                for (m, c) in p.terms() {
                    parts.entry(m.degree()).or_insert_with(|| Polynomial::zero(p.nvars())).add_term(m.clone(), c.clone());
                }
                parts.values().all(|q| self.contains(q))
            }
        }
    }
}

/// Closure decided degree by degree with linear algebra instead of a Gröbner
/// basis. Exact for homogeneous ideals; suited to large quadratic ideals.
pub fn bracket_closure_by_span(v: &VarietyPresentation) -> Result<ClosureReport, LegendrianError> {
    if v.generators().is_empty() {
        return Err(LegendrianError::NoGenerators);
    }
    let gens = v.generators();
    let mut graded = GradedIdeal::new(v.nvars(), gens);
    let mut witnesses = Vec::new();
    let pairs = all_pairs(gens.len());
    for &(i, j) in &pairs {
        let b = poisson_bracket(&gens[i], &gens[j], v.form()).expect("dimensions validated on construction");
        if !graded.contains(&b) {
            witnesses.push(Witness::Pair { i, j, remainder: b });
        }
    }
    let status = if witnesses.is_empty() { Closure::Closed } else { Closure::NotClosed };
    Ok(ClosureReport { status, pairs_checked: pairs.len(), witnesses, unchecked: Vec::new() })
}

pub fn legendrian_verdict(v: &VarietyPresentation) -> Result<LegendrianVerdict, LegendrianError> {
    legendrian_verdict_with_budget(v, groebner::DEFAULT_PAIR_BUDGET)
}

/// Closure, `dim X̂ = n` and the degeneracy flag, from a single Gröbner basis.
pub fn legendrian_verdict_with_budget(v: &VarietyPresentation, budget: usize) -> Result<LegendrianVerdict, LegendrianError> {
    let undecided = || LegendrianVerdict {
        bracket_closed: None,
        cone_dimension: None,
        degenerate: false,
        linear_form: None,
        verdict: Verdict::Undecided,
        witnesses: Vec::new(),
        equidimensionality_unchecked: true,
        exhausted_budget: true,
    };
    if v.generators().is_empty() {
        // the whole space is never legendrian
        return Ok(LegendrianVerdict {
            bracket_closed: Some(true),
            cone_dimension: Some(v.nvars()),
            degenerate: false,
            linear_form: None,
            verdict: Verdict::NotLegendrian,
            witnesses: alloc::vec![Witness::Dimension { expected: v.half_dim(), found: v.nvars() }],
            equidimensionality_unchecked: true,
            exhausted_budget: false,
        });
    }
    let gb = match groebner::buchberger_with_budget(&v.ideal(), budget) {
        Ok(gb) => gb,
        Err(GroebnerError::BudgetExceeded { .. }) => return Ok(undecided()),
        Err(e) => return Err(e.into()),
    };
    let closure = closure_against(v, &gb);
    let closed = closure.status == Closure::Closed;
    let mut witnesses = closure.witnesses;
    let dim = match groebner::krull_dimension(&gb) {
        Ok(d) => Some(d),
        Err(GroebnerError::Improper) => {
            witnesses.push(Witness::EmptyCone);
            None
        }
        Err(e) => return Err(e.into()),
    };
    if let Some(d) = dim {
        if d != v.half_dim() {
            witnesses.push(Witness::Dimension { expected: v.half_dim(), found: d });
        }
    }
    let linear = groebner::linear_part(&gb).into_iter().next();
    let verdict = if closed && dim == Some(v.half_dim()) { Verdict::Legendrian } else { Verdict::NotLegendrian };
    Ok(LegendrianVerdict {
        bracket_closed: Some(closed),
        cone_dimension: dim,
        degenerate: linear.is_some(),
        linear_form: linear,
        verdict,
        witnesses,
        equidimensionality_unchecked: true,
        exhausted_budget: false,
    })
}

/// Gradients of the generators at a point of the cone must span an
/// `n`-dimensional space isotropic for ω′.
pub fn conormal_point_check<F: Field>(v: &VarietyPresentation, point: &[F]) -> Result<bool, LegendrianError> {
    if point.len() != v.nvars() {
        return Err(LegendrianError::DimensionMismatch { expected: v.nvars(), found: point.len() });
    }
    if point.iter().all(Field::is_zero) {
        return Err(LegendrianError::ZeroPoint);
    }
    if let Some(i) = v.is_on_cone(point) {
        return Err(LegendrianError::NotOnCone(i));
    }
    let grads: Vec<Vec<F>> = v
        .generators()
        .iter()
        .map(|g| (0..v.nvars()).map(|a| g.partial(a).eval_in(point)).collect())
        .filter(|d: &Vec<F>| !d.iter().all(Field::is_zero))
        .collect();
    let rank = if grads.is_empty() { 0 } else { linalg::rank(&grads) };
    if rank != v.half_dim() {
        return Err(LegendrianError::RankDeficient { rank, expected: v.half_dim() });
    }
    for (a, da) in grads.iter().enumerate() {
        for db in &grads[a + 1..] {
            if !v.form().omega_dual(da, db).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Position vector and Jacobian columns of the parametrization at `params`
/// must span an `n`-dimensional ω-isotropic space.
pub fn tangent_point_check<F: Field>(v: &VarietyPresentation, params: &[F]) -> Result<bool, LegendrianError> {
    let p = v.parametrization().ok_or(LegendrianError::NoParametrization)?;
    if params.len() != p.nparams() {
        return Err(LegendrianError::DimensionMismatch { expected: p.nparams(), found: params.len() });
    }
    let mut vectors = alloc::vec![p.eval(params)];
    for k in 0..p.nparams() {
        vectors.push(p.components().iter().map(|c| c.partial(k).eval_in(params)).collect());
    }
    let rank = linalg::rank(&vectors);
    if rank != v.half_dim() {
        return Err(LegendrianError::RankDeficient { rank, expected: v.half_dim() });
    }
    for (a, u) in vectors.iter().enumerate() {
        for w in &vectors[a + 1..] {
            if !v.form().omega(u, w).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn degeneracy_check(v: &VarietyPresentation) -> Result<Option<Polynomial>, LegendrianError> {
    if v.generators().is_empty() {
        return Ok(None);
    }
    let gb = groebner::buchberger(&v.ideal())?;
    Ok(groebner::linear_part(&gb).into_iter().next())
}

/// `num / den` with univariate numerator and denominator.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction {
    pub num: Polynomial,
    pub den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Option<Self> {
        (!den.is_zero() && num.nvars() == 1 && den.nvars() == 1).then_some(RationalFunction { num, den })
    }

    pub fn polynomial(p: Polynomial) -> Self {
        RationalFunction { den: Polynomial::constant(p.nvars(), rat(1)), num: p }
    }

    fn derivative(&self) -> Self {
        RationalFunction { num: &(&self.num.partial(0) * &self.den) - &(&self.num * &self.den.partial(0)), den: &self.den * &self.den }
    }

    fn mul(&self, o: &Self) -> Self {
        RationalFunction { num: &self.num * &o.num, den: &self.den * &o.den }
    }

    fn sub(&self, o: &Self) -> Self {
        RationalFunction { num: &(&self.num * &o.den) - &(&o.num * &self.den), den: &self.den * &o.den }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

/// The curve `t ↦ (1 : f₁ : f₂ : f₃)` is legendrian for the form of
/// [`curve_form`] iff `f₁' = f₂' f₃ − f₃' f₂`.
pub fn rational_curve_check(f1: &RationalFunction, f2: &RationalFunction, f3: &RationalFunction) -> bool {
    let lhs = f1.derivative();
    let rhs = f2.derivative().mul(f3).sub(&f3.derivative().mul(f2));
    lhs.sub(&rhs).is_zero()
}

pub fn polynomial_curve_check(f1: &Polynomial, f2: &Polynomial, f3: &Polynomial) -> bool {
    rational_curve_check(
        &RationalFunction::polynomial(f1.clone()),
        &RationalFunction::polynomial(f2.clone()),
        &RationalFunction::polynomial(f3.clone()),
    )
}

/// `ω = dx₀∧dx₁ + dx₂∧dx₃`, the form in which the curve equation is stated.
pub fn curve_form() -> SymplecticForm {
    SymplecticForm::from_integers(&[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]).expect("valid form")
}

/// Parametrized presentation of `(1 : f₁ : f₂ : f₃)` with no equations.
pub fn curve_presentation(f1: &Polynomial, f2: &Polynomial, f3: &Polynomial) -> VarietyPresentation {
    let p = Parametrization::new(1, alloc::vec![Polynomial::constant(1, rat(1)), f1.clone(), f2.clone(), f3.clone()])
        .expect("univariate components");
    VarietyPresentation::new("curve", curve_form(), Vec::new()).unwrap().with_parametrization(p).unwrap()
}

/// Deterministic stream of small rationals.
pub struct RationalSampler {
    rng: ChaCha8Rng,
    pub max_numerator: u32,
    pub max_denominator: u32,
}

impl RationalSampler {
    pub fn new(seed: u64) -> Self {
        RationalSampler { rng: ChaCha8Rng::seed_from_u64(seed), max_numerator: 5, max_denominator: 3 }
    }

    pub fn next_rational(&mut self) -> Rational {
        let span = 2 * self.max_numerator + 1;
        let num = (self.rng.next_u32() % span) as i64 - self.max_numerator as i64;
        let den = (self.rng.next_u32() % self.max_denominator) as i64 + 1;
        Rational::new(num.into(), den.into())
    }

    pub fn next_vector(&mut self, len: usize) -> Vec<Rational> {
        (0..len).map(|_| self.next_rational()).collect()
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PointSample {
    pub point: Vec<Rational>,
    pub smooth: bool,
    pub lagrangian: Option<bool>,
}

/// Pushes sampled parameters through the parametrization and runs the
/// conormal check at each image. Points of rank below `n` are reported as not
/// smooth and skipped.
pub fn sample_conormal_checks(v: &VarietyPresentation, seed: u64, count: usize) -> Result<Vec<PointSample>, LegendrianError> {
    let p = v.parametrization().ok_or(LegendrianError::NoParametrization)?;
    let mut sampler = RationalSampler::new(seed);
    let mut out = Vec::new();
    for _ in 0..count {
        let point = p.eval(&sampler.next_vector(p.nparams()));
        if point.iter().all(Field::is_zero) {
            continue;
        }
        match conormal_point_check(v, &point) {
            Ok(b) => out.push(PointSample { point, smooth: true, lagrangian: Some(b) }),
            Err(LegendrianError::RankDeficient { .. }) => out.push(PointSample { point, smooth: false, lagrangian: None }),
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_poly, ratio};
    use crate::symplectic::standard_form;
    use alloc::vec;
    use proptest::prelude::*;

    fn p(s: &str, n: usize) -> Polynomial {
        parse_poly(s, n).unwrap()
    }

    fn scaled_cubic_form() -> SymplecticForm {
        SymplecticForm::new(vec![
            vec![rat(0), rat(0), rat(0), ratio(1, 3)],
            vec![rat(0), rat(0), rat(-1), rat(0)],
            vec![rat(0), rat(1), rat(0), rat(0)],
            vec![ratio(-1, 3), rat(0), rat(0), rat(0)],
        ])
        .unwrap()
    }

    fn cubic(gens: &[&str]) -> VarietyPresentation {
        let v = VarietyPresentation::new("twisted cubic", scaled_cubic_form(), gens.iter().map(|s| p(s, 4)).collect()).unwrap();
        let s = Polynomial::var(1, 0);
        let one = Polynomial::constant(1, rat(1));
        v.with_parametrization(Parametrization::new(1, vec![one, s.clone(), s.pow(2), s.pow(3)]).unwrap()).unwrap()
    }

    const CUBIC: [&str; 3] = ["x2^2 - x1*x3", "x0*x2 - x1^2", "x0*x3 - x1*x2"];

    #[test]
    fn twisted_cubic_is_legendrian() {
        let v = cubic(&CUBIC);
        let c = bracket_closure_check(&v).unwrap();
        assert_eq!(c.status, Closure::Closed);
        assert_eq!(c.pairs_checked, 3);
        assert_eq!(bracket_closure_by_span(&v).unwrap().status, Closure::Closed);
        let r = legendrian_verdict(&v).unwrap();
        assert_eq!(r.verdict, Verdict::Legendrian);
        assert_eq!(r.cone_dimension, Some(2));
        assert!(!r.degenerate);
        assert!(r.witnesses.is_empty());
        assert_eq!(degeneracy_check(&v).unwrap(), None);
    }

    #[test]
    fn perturbed_cubic_is_rejected_with_a_pair() {
        let v = cubic(&["x2^2 - x1*x3", "x0*x2 - x1^2", "x0*x3 - 2*x1*x2"]);
        let r = legendrian_verdict(&v).unwrap();
        assert_eq!(r.verdict, Verdict::NotLegendrian);
        assert!(r.witnesses.iter().any(|w| matches!(w, Witness::Pair { .. })));
        assert_eq!(bracket_closure_by_span(&v).unwrap().status, Closure::NotClosed);
    }

    #[test]
    fn four_lines_and_linear_spaces() {
        let j = standard_form(2).unwrap();
        let four = VarietyPresentation::new("four lines", j.clone(), vec![p("x0*x2", 4), p("x1*x3", 4)]).unwrap();
        let r = legendrian_verdict(&four).unwrap();
        assert_eq!(r.verdict, Verdict::Legendrian);
        assert_eq!(r.cone_dimension, Some(2));

        let lag = VarietyPresentation::new("P(W)", j.clone(), vec![p("x2", 4), p("x3", 4)]).unwrap();
        let r = legendrian_verdict(&lag).unwrap();
        assert_eq!(r.verdict, Verdict::Legendrian);
        assert!(r.degenerate);

        let hyper = VarietyPresentation::new("hyperplane", j.clone(), vec![p("x0", 4)]).unwrap();
        let r = legendrian_verdict(&hyper).unwrap();
        assert_eq!(r.verdict, Verdict::NotLegendrian);
        assert!(r.witnesses.contains(&Witness::Dimension { expected: 2, found: 3 }));

        let symp = VarietyPresentation::new("symplectic plane", j, vec![p("x1", 4), p("x3", 4)]).unwrap();
        let r = legendrian_verdict(&symp).unwrap();
        assert_eq!(r.verdict, Verdict::NotLegendrian);
        assert_eq!(r.bracket_closed, Some(false));
    }

    #[test]
    fn degeneracy_examples() {
        let v = VarietyPresentation::new("d", standard_form(2).unwrap(), vec![p("x0 + x1", 4), p("x2*x3", 4)]).unwrap();
        assert_eq!(degeneracy_check(&v).unwrap(), Some(p("x0 + x1", 4)));
    }

    #[test]
    fn conormal_examples() {
        let v = cubic(&CUBIC);
        assert_eq!(conormal_point_check(&v, &[rat(1), rat(1), rat(1), rat(1)]), Ok(true));
        assert_eq!(conormal_point_check(&v, &[rat(1), rat(0), rat(0), rat(0)]), Ok(true));
        assert_eq!(conormal_point_check(&v, &[rat(1), rat(2), rat(0), rat(0)]), Err(LegendrianError::NotOnCone(1)));
        assert_eq!(conormal_point_check::<Rational>(&v, &vec![rat(0); 4]), Err(LegendrianError::ZeroPoint));
        let four = VarietyPresentation::new("four lines", standard_form(2).unwrap(), vec![p("x0*x2", 4), p("x1*x3", 4)]).unwrap();
        assert_eq!(
            conormal_point_check(&four, &[rat(1), rat(0), rat(0), rat(0)]),
            Err(LegendrianError::RankDeficient { rank: 1, expected: 2 })
        );
    }

    #[test]
    fn tangent_examples() {
        let v = cubic(&CUBIC);
        assert_eq!(tangent_point_check(&v, &[rat(2)]), Ok(true));
        let none = VarietyPresentation::new("no param", standard_form(1).unwrap(), vec![p("x0", 2)]).unwrap();
        assert_eq!(tangent_point_check(&none, &[rat(1)]), Err(LegendrianError::NoParametrization));
    }

    #[test]
    fn curve_examples() {
        let t = |s: &str| p(s, 1);
        // f₂ = t^k, f₃ = t^l, f₁ = (k − l)/(k + l) t^{k+l}
        assert!(polynomial_curve_check(&t("-1/5*x0^5"), &t("x0^2"), &t("x0^3")));
        assert!(polynomial_curve_check(&t("0"), &t("0"), &t("0")));
        assert!(!polynomial_curve_check(&t("x0"), &t("x0"), &t("x0")));
        // f₂ = 1/t, f₃ = t: f₂'f₃ − f₃'f₂ = −2/t, so f₁ = −2 log t is not rational
        let inv = RationalFunction::new(t("1"), t("x0")).unwrap();
        let id = RationalFunction::polynomial(t("x0"));
        assert!(!rational_curve_check(&RationalFunction::polynomial(t("0")), &inv, &id));
        // f₂ = 1/t, f₃ = t², f₁ = −3t
        let sq = RationalFunction::polynomial(t("x0^2"));
        assert!(rational_curve_check(&RationalFunction::polynomial(t("-3*x0")), &inv, &sq));
    }

    #[test]
    fn sampled_points_agree_with_verdict() {
        let v = cubic(&CUBIC);
        let samples = sample_conormal_checks(&v, 7, 10).unwrap();
        assert!(samples.iter().filter(|s| s.smooth).count() >= 8);
        assert!(samples.iter().all(|s| s.lagrangian != Some(false)));
    }

    #[test]
    fn sampler_is_deterministic() {
        let a = RationalSampler::new(3).next_vector(6);
        let b = RationalSampler::new(3).next_vector(6);
        assert_eq!(a, b);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn curve_ode_matches_tangent_check(c2 in proptest::collection::vec(-3i64..=3, 3), c3 in proptest::collection::vec(-3i64..=3, 3), t0 in -4i64..=4) {
            // f₁ = ∫(f₂'f₃ − f₃'f₂) is legendrian; f₁ + t is not
            let poly = |cs: &[i64]| Polynomial::from_terms(1, cs.iter().enumerate().map(|(k, c)| (Monomial::new(vec![k as u32 + 1]), rat(*c))));
            let (f2, f3) = (poly(&c2), poly(&c3));
            let d = &(&f2.partial(0) * &f3) - &(&f3.partial(0) * &f2);
            let f1 = Polynomial::from_terms(1, d.terms().map(|(m, c)| {
                let e = m.exponents()[0] + 1;
                (Monomial::new(vec![e]), c / rat(e as i64))
            }));
            prop_assert!(polynomial_curve_check(&f1, &f2, &f3));
            let bad = &f1 + &Polynomial::var(1, 0);
            prop_assert!(!polynomial_curve_check(&bad, &f2, &f3));
            for (f, expect) in [(&bad, false), (&f1, true)] {
                let v = curve_presentation(f, &f2, &f3);
                match tangent_point_check(&v, &[rat(t0)]) {
                    Err(LegendrianError::RankDeficient { .. }) => {}
                    other => prop_assert_eq!(other, Ok(expect)),
                }
            }
        }
    }
}
