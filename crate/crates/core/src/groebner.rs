//! Buchberger's algorithm over ℚ with grevlex, normal forms, Krull dimension
//! of the quotient and extraction of linear elements.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::arith::{Monomial, Polynomial};

pub const DEFAULT_PAIR_BUDGET: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("ideal has no nonzero generators")]
    Empty,
    #[error("generator {index} has {found} variables, expected {expected}")]
    DimensionMismatch { index: usize, expected: usize, found: usize },
    #[error("pair budget of {budget} S-pairs exhausted with {pending} pairs pending")]
    BudgetExceeded { budget: usize, pending: usize },
    #[error("the ideal is the whole ring")]
    Improper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    Grevlex,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdealPresentation {
    nvars: usize,
    generators: Vec<Polynomial>,
}

impl IdealPresentation {
    /// Drops zero generators. An empty list is allowed here (the zero ideal).
    pub fn new(nvars: usize, generators: Vec<Polynomial>) -> Result<Self, GroebnerError> {
        for (index, g) in generators.iter().enumerate() {
            if g.nvars() != nvars {
                return Err(GroebnerError::DimensionMismatch { index, expected: nvars, found: g.nvars() });
            }
        }
        Ok(IdealPresentation { nvars, generators: generators.into_iter().filter(|g| !g.is_zero()).collect() })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis {
    nvars: usize,
    elements: Vec<Polynomial>,
    order: MonomialOrder,
    pairs_processed: usize,
}

impl GroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Reduced, monic, sorted by ascending leading monomial.
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn pairs_processed(&self) -> usize {
        self.pairs_processed
    }

    pub fn is_improper(&self) -> bool {
        self.elements.iter().any(|g| g.leading_monomial().is_some_and(Monomial::is_one))
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        normal_form(p, self).is_zero()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.elements.iter().filter_map(Polynomial::leading_monomial)
    }

    /// One element per line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for g in &self.elements {
            s.push_str(&alloc::format!("{g}\n"));
        }
        s
    }
}

fn reduce_by(p: &Polynomial, basis: &[Polynomial], skip: Option<usize>) -> Polynomial {
    let n = p.nvars();
    let mut work = p.clone();
    let mut rem = Polynomial::zero(n);
    while let Some((m, c)) = work.leading_term() {
        let (m, c) = (m.clone(), c.clone());
        let divisor = basis.iter().enumerate().find(|(i, g)| Some(*i) != skip && g.leading_monomial().is_some_and(|lm| lm.divides(&m)));
        match divisor {
            Some((_, g)) => {
                let (lm, lc) = g.leading_term().unwrap();
                let shift = lm.quotient(&m);
                let k = -(&c / lc);
                work.add_scaled_shifted(g, &k, &shift);
            }
            None => {
                work.add_term(m.clone(), -c.clone());
                rem.add_term(m, c);
            }
        }
    }
    rem
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (lf, cf) = f.leading_term().unwrap();
    let (lg, cg) = g.leading_term().unwrap();
    let l = lf.lcm(lg);
    let n = f.nvars();
    let mut s = Polynomial::zero(n);
    s.add_scaled_shifted(f, &cf.recip(), &lf.quotient(&l));
    s.add_scaled_shifted(g, &-cg.recip(), &lg.quotient(&l));
    s
}

/// Reduced Gröbner basis with the default pair budget.
pub fn buchberger(ideal: &IdealPresentation) -> Result<GroebnerBasis, GroebnerError> {
    buchberger_with_budget(ideal, DEFAULT_PAIR_BUDGET)
}

pub fn buchberger_with_budget(ideal: &IdealPresentation, budget: usize) -> Result<GroebnerBasis, GroebnerError> {
    if ideal.generators.is_empty() {
        return Err(GroebnerError::Empty);
    }
    let n = ideal.nvars;
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut queue: BTreeSet<(Monomial, usize, usize)> = BTreeSet::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut processed = 0usize;

    let add = |h: Polynomial,
               basis: &mut Vec<Polynomial>,
               queue: &mut BTreeSet<(Monomial, usize, usize)>,
               pending: &mut BTreeSet<(usize, usize)>| {
        let h = h.monic();
        let j = basis.len();
        let lh = h.leading_monomial().unwrap().clone();
        for (i, g) in basis.iter().enumerate() {
            let lg = g.leading_monomial().unwrap();
            if lg.is_coprime(&lh) {
                continue;
            }
            queue.insert((lg.lcm(&lh), j, i));
            pending.insert((i, j));
        }
        basis.push(h);
    };

    for g in &ideal.generators {
        let h = reduce_by(g, &basis, None);
        if !h.is_zero() {
            add(h, &mut basis, &mut queue, &mut pending);
        }
    }

    while let Some((l, j, i)) = queue.pop_first() {
        pending.remove(&(i, j));
        if basis[j].leading_monomial().is_some_and(Monomial::is_one) {
            break;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        if processed >= budget {
            return Err(GroebnerError::BudgetExceeded { budget, pending: queue.len() + 1 });
        }
        processed += 1;
        let h = reduce_by(&s_polynomial(&basis[i], &basis[j]), &basis, None);
        if !h.is_zero() {
            add(h, &mut basis, &mut queue, &mut pending);
        }
    }

    Ok(GroebnerBasis { nvars: n, elements: interreduce(basis), order: MonomialOrder::Grevlex, pairs_processed: processed })
}

fn interreduce(basis: Vec<Polynomial>) -> Vec<Polynomial> {
    if let Some(one) = basis.iter().find(|g| g.leading_monomial().is_some_and(Monomial::is_one)) {
        return alloc::vec![one.monic()];
    }
    // minimal basis: drop elements whose leading monomial is divisible by another's
    let mut minimal: Vec<Polynomial> = Vec::new();
    let mut sorted = basis;
    sorted.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    for g in sorted {
        let lm = g.leading_monomial().unwrap();
        if minimal.iter().any(|h| h.leading_monomial().unwrap().divides(lm)) {
            continue;
        }
        minimal.push(g);
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let r = reduce_by(&minimal[i], &minimal, Some(i));
        reduced.push(r.monic());
    }
    reduced.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    reduced
}

/// Full remainder of `p` modulo the basis.
pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    reduce_by(p, &gb.elements, None)
}

/// Dimension of `k[x]/I`: the largest set of variables containing no support
/// of a leading monomial.
pub fn krull_dimension(gb: &GroebnerBasis) -> Result<usize, GroebnerError> {
    if gb.is_improper() {
        return Err(GroebnerError::Improper);
    }
    let supports: Vec<Vec<usize>> = gb.leading_monomials().map(|m| m.support().collect()).collect();
    Ok(max_independent_set(gb.nvars, &supports))
}

/// Largest `S ⊆ {0..n}` containing none of the given supports.
pub fn max_independent_set(n: usize, supports: &[Vec<usize>]) -> usize {
    let mut by_max: BTreeMap<usize, Vec<&Vec<usize>>> = BTreeMap::new();
    for s in supports {
        if let Some(&m) = s.iter().max() {
            by_max.entry(m).or_default().push(s);
        }
    }
    let mut chosen = alloc::vec![false; n];
    let mut best = 0;
    search(0, 0, n, &by_max, &mut chosen, &mut best);
    best
}

fn search(i: usize, size: usize, n: usize, by_max: &BTreeMap<usize, Vec<&Vec<usize>>>, chosen: &mut Vec<bool>, best: &mut usize) {
    if size + (n - i) <= *best {
        return;
    }
    if i == n {
        *best = size;
        return;
    }
    let blocked = by_max.get(&i).is_some_and(|ss| ss.iter().any(|s| s.iter().all(|&v| v == i || chosen[v])));
    if !blocked {
        chosen[i] = true;
        search(i + 1, size + 1, n, by_max, chosen, best);
        chosen[i] = false;
    }
    search(i + 1, size, n, by_max, chosen, best);
}

/// Degree-one elements of the reduced basis.
pub fn linear_part(gb: &GroebnerBasis) -> Vec<Polynomial> {
    gb.elements.iter().filter(|g| g.total_degree() == Some(1) && g.is_homogeneous()).cloned().collect()
}

/// Whether every S-polynomial reduces to zero.
pub fn is_groebner(elements: &[Polynomial]) -> bool {
    for i in 0..elements.len() {
        for j in i + 1..elements.len() {
            if !reduce_by(&s_polynomial(&elements[i], &elements[j]), elements, None).is_zero() {
                return false;
            }
        }
    }
    true
}
