//! Enumeration of irreducible representations that could carry a legendrian
//! highest weight orbit generated by quadrics.
//!
//! Acceptance here means a candidate survives every necessary condition:
//! highest weight on an edge of the Weyl chamber, `dim V = 2·dim X̂`,
//! self-duality, multiplicity-free weights, acute angles in `R_𝔫` and
//! maximality of the acting algebra. Sufficiency comes from the explicit
//! catalog constructions, not from this module.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::arith::{rat, ratio, Rational};
use crate::linalg::{self, Matrix};

pub const DEFAULT_MULTIPLICITY_CAP: u64 = 600;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("no simple Lie algebra of type {0}{1}")]
    InvalidType(char, usize),
    #[error("weight {0:?} is not dominant integral for rank {1}")]
    NotDominant(Vec<i64>, usize),
    #[error("representation of dimension {dim} exceeds the multiplicity cap {cap}")]
    CapExceeded { dim: u64, cap: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    family: char,
    rank: usize,
    /// `(α_i, α_j)` on simple roots.
    gram: Matrix<Rational>,
    /// `⟨α_i, α_j^∨⟩ = 2(α_i, α_j)/(α_j, α_j)`.
    pairing: Vec<Vec<i64>>,
    /// Positive roots in simple root coordinates, by height.
    positive: Vec<Vec<i64>>,
    /// `(ω_i, ω_j)`.
    weight_gram: Matrix<Rational>,
    /// `s·(ω_i, ω_j)` and `s·(α_j, α_j)/2` as integers, for one common `s`.
    weight_gram_int: Vec<Vec<i64>>,
    half_len_int: Vec<i64>,
}

/// Simple roots in Bourbaki numbering, as the Gram matrix of the invariant
/// form normalized so that long roots of simply laced types have length² 2.
fn gram_matrix(family: char, r: usize) -> Result<Matrix<Rational>, ClassifyError> {
    let bad = Err(ClassifyError::InvalidType(family, r));
    let mut g = vec![vec![rat(0); r]; r];
    let link = |g: &mut Matrix<Rational>, i: usize, j: usize, v: Rational| {
        g[i][j] = v.clone();
        g[j][i] = v;
    };
    match family {
        'A' if r >= 1 => {
            for i in 0..r {
                g[i][i] = rat(2);
            }
            for i in 1..r {
                link(&mut g, i - 1, i, rat(-1));
            }
        }
        'B' if r >= 2 => {
            for i in 0..r {
                g[i][i] = rat(2);
            }
            g[r - 1][r - 1] = rat(1);
            for i in 1..r {
                link(&mut g, i - 1, i, rat(-1));
            }
        }
        'C' if r >= 2 => {
            for i in 0..r {
                g[i][i] = rat(2);
            }
            g[r - 1][r - 1] = rat(4);
            for i in 1..r - 1 {
                link(&mut g, i - 1, i, rat(-1));
            }
            link(&mut g, r - 2, r - 1, rat(-2));
        }
        'D' if r >= 3 => {
            for i in 0..r {
                g[i][i] = rat(2);
            }
            for i in 1..r - 1 {
                link(&mut g, i - 1, i, rat(-1));
            }
            link(&mut g, r - 3, r - 1, rat(-1));
        }
        'E' if (6..=8).contains(&r) => {
            for i in 0..r {
                g[i][i] = rat(2);
            }
            link(&mut g, 0, 2, rat(-1));
            link(&mut g, 1, 3, rat(-1));
            for i in 3..r {
                link(&mut g, i - 1, i, rat(-1));
            }
        }
        'F' if r == 4 => {
            for (i, l) in [2, 2, 1, 1].into_iter().enumerate() {
                g[i][i] = rat(l);
            }
            link(&mut g, 0, 1, rat(-1));
            link(&mut g, 1, 2, rat(-1));
            link(&mut g, 2, 3, ratio(-1, 2));
        }
        'G' if r == 2 => {
            g[0][0] = rat(2);
            g[1][1] = rat(6);
            link(&mut g, 0, 1, rat(-3));
        }
        _ => return bad,
    }
    Ok(g)
}

pub fn build_root_system(family: char, rank: usize) -> Result<RootSystem, ClassifyError> {
    let gram = gram_matrix(family, rank)?;
    let r = rank;
    let pairing: Vec<Vec<i64>> =
        (0..r).map(|i| (0..r).map(|j| (rat(2) * &gram[i][j] / &gram[j][j]).to_integer().to_i64().unwrap()).collect()).collect();
    // root strings: β + α_i is a root iff q = p − ⟨β, α_i^∨⟩ > 0
    let mut positive: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|k| (k == i) as i64).collect()).collect();
    let mut known: BTreeSet<Vec<i64>> = positive.iter().cloned().collect();
    let mut layer = positive.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..r {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let coroot: i64 = (0..r).map(|k| beta[k] * pairing[k][i]).sum();
                if p - coroot > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort();
        positive.extend(next.iter().cloned());
        layer = next;
    }
    let ginv = linalg::inverse(&gram).expect("Gram matrix of a root system is nonsingular");
    let half: Vec<Rational> = (0..r).map(|i| &gram[i][i] / rat(2)).collect();
    let weight_gram: Matrix<Rational> = (0..r).map(|i| (0..r).map(|j| &half[i] * &ginv[i][j] * &half[j]).collect()).collect();
    let scale = weight_gram.iter().flatten().chain(&half).fold(1i64, |l, x| num_integer::Integer::lcm(&l, &x.denom().to_i64().unwrap()));
    let to_int = |x: &Rational| (x * rat(scale)).to_integer().to_i64().unwrap();
    let weight_gram_int = weight_gram.iter().map(|row| row.iter().map(to_int).collect()).collect();
    let half_len_int = half.iter().map(to_int).collect();
    Ok(RootSystem { family, rank, gram, pairing, positive, weight_gram, weight_gram_int, half_len_int })
}

/// Simple types of rank at most `max_rank`, each isomorphism class once:
/// `A_{≥1}, B_{≥2}, C_{≥3}, D_{≥4}, E₆₋₈, F₄, G₂`.
pub fn simple_types(max_rank: usize) -> Vec<(char, usize)> {
    let mut out = Vec::new();
    for (f, lo) in [('A', 1), ('B', 2), ('C', 3), ('D', 4)] {
        out.extend((lo..=max_rank).map(|r| (f, r)));
    }
    out.extend([('E', 6), ('E', 7), ('E', 8)].into_iter().filter(|t| t.1 <= max_rank));
    if max_rank >= 4 {
        out.push(('F', 4));
    }
    if max_rank >= 2 {
        out.push(('G', 2));
    }
    out
}

impl RootSystem {
    pub fn label(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    pub fn family(&self) -> char {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gram(&self) -> &Matrix<Rational> {
        &self.gram
    }

    /// Cartan integers `⟨α_i, α_j^∨⟩`.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.pairing
    }

    pub fn simple_roots(&self) -> Vec<Vec<i64>> {
        self.positive[..self.rank].to_vec()
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    /// Fundamental weights in simple root coordinates.
    pub fn fundamental_weights(&self) -> Vec<Vec<Rational>> {
        let ginv = linalg::inverse(&self.gram).unwrap();
        (0..self.rank).map(|i| (0..self.rank).map(|k| &ginv[k][i] * &self.gram[i][i] / rat(2)).collect()).collect()
    }

    /// Half the sum of the positive roots, in simple root coordinates.
    pub fn weyl_vector(&self) -> Vec<Rational> {
        (0..self.rank).map(|k| ratio(self.positive.iter().map(|a| a[k]).sum(), 2)).collect()
    }

    pub fn root_inner(&self, a: &[i64], b: &[i64]) -> Rational {
        let mut s = rat(0);
        for i in 0..self.rank {
            for j in 0..self.rank {
                if a[i] != 0 && b[j] != 0 {
                    s += &self.gram[i][j] * rat(a[i] * b[j]);
                }
            }
        }
        s
    }

    /// `(λ, α)` for `λ` in fundamental weight coordinates, `α` in root coordinates.
    pub fn weight_root(&self, lambda: &[i64], alpha: &[i64]) -> Rational {
        (0..self.rank).fold(rat(0), |s, j| s + &self.gram[j][j] * rat(lambda[j] * alpha[j]) / rat(2))
    }

    fn weight_root_int(&self, lambda: &[i64], alpha: &[i64]) -> i64 {
        (0..self.rank).map(|j| self.half_len_int[j] * lambda[j] * alpha[j]).sum()
    }

    fn weight_inner_int(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            if a[i] != 0 {
                s += a[i] * (0..self.rank).map(|j| self.weight_gram_int[i][j] * b[j]).sum::<i64>();
            }
        }
        s
    }

    pub fn weight_inner(&self, a: &[i64], b: &[i64]) -> Rational {
        let mut s = rat(0);
        for i in 0..self.rank {
            for j in 0..self.rank {
                if a[i] != 0 && b[j] != 0 {
                    s += &self.weight_gram[i][j] * rat(a[i] * b[j]);
                }
            }
        }
        s
    }

    /// A root in fundamental weight coordinates.
    pub fn root_as_weight(&self, alpha: &[i64]) -> Vec<i64> {
        (0..self.rank).map(|j| (0..self.rank).map(|i| alpha[i] * self.pairing[i][j]).sum()).collect()
    }

    /// Permutation of the nodes induced by `−w₀`.
    pub fn duality_involution(&self) -> Vec<usize> {
        let r = self.rank;
        match self.family {
            'A' => (0..r).rev().collect(),
            'D' if r % 2 == 1 => {
                let mut p: Vec<usize> = (0..r).collect();
                p.swap(r - 2, r - 1);
                p
            }
            'E' if r == 6 => vec![5, 1, 4, 3, 2, 0],
            _ => (0..r).collect(),
        }
    }

    /// Orbits of the diagram automorphism group on the nodes; the first node of
    /// each orbit is its representative.
    pub fn node_orbits(&self) -> Vec<Vec<usize>> {
        let r = self.rank;
        let mut orbits: Vec<Vec<usize>> = match (self.family, r) {
            ('D', 4) => vec![vec![0, 2, 3], vec![1]],
            ('D', _) => {
                let mut o: Vec<Vec<usize>> = (0..r - 2).map(|i| vec![i]).collect();
                o.push(vec![r - 1, r - 2]);
                o
            }
            ('A', _) | ('E', 6) => {
                let p = self.duality_involution();
                (0..r).filter(|&i| p[i] >= i).map(|i| if p[i] == i { vec![i] } else { vec![i, p[i]] }).collect()
            }
            _ => (0..r).map(|i| vec![i]).collect(),
        };
        orbits.sort();
        orbits
    }

    fn check_dominant(&self, lambda: &[i64]) -> Result<(), ClassifyError> {
        if lambda.len() != self.rank || lambda.iter().any(|&m| m < 0) {
            return Err(ClassifyError::NotDominant(lambda.to_vec(), self.rank));
        }
        Ok(())
    }
}

/// `∏_{α>0} (λ+ρ, α)/(ρ, α)`.
pub fn weyl_dimension(rs: &RootSystem, lambda: &[i64]) -> Result<u64, ClassifyError> {
    rs.check_dominant(lambda)?;
    let rho = vec![1i64; rs.rank];
    let shifted: Vec<i64> = lambda.iter().map(|m| m + 1).collect();
    let mut d = rat(1);
    for a in &rs.positive {
        d = d * rs.weight_root(&shifted, a) / rs.weight_root(&rho, a);
    }
    Ok(d.to_integer().to_u64().expect("Weyl dimension is a positive integer"))
}

/// `1 + #{α > 0 : (λ, α) ≠ 0}`, the dimension of the cone over the orbit of
/// a highest weight vector.
pub fn cone_orbit_dimension(rs: &RootSystem, lambda: &[i64]) -> Result<u64, ClassifyError> {
    rs.check_dominant(lambda)?;
    Ok(1 + rs.positive.iter().filter(|a| !rs.weight_root(lambda, a).is_zero()).count() as u64)
}

pub fn is_self_dual(rs: &RootSystem, lambda: &[i64]) -> Result<bool, ClassifyError> {
    rs.check_dominant(lambda)?;
    let p = rs.duality_involution();
    Ok((0..rs.rank).all(|i| lambda[i] == lambda[p[i]]))
}

/// Freudenthal's recursion, weights in fundamental weight coordinates.
pub fn weight_multiplicities(rs: &RootSystem, lambda: &[i64], cap: u64) -> Result<BTreeMap<Vec<i64>, u64>, ClassifyError> {
    let dim = weyl_dimension(rs, lambda)?;
    if dim > cap {
        return Err(ClassifyError::CapExceeded { dim, cap });
    }
    let r = rs.rank;
    let plus_rho = |w: &[i64]| -> Vec<i64> { w.iter().map(|m| m + 1).collect() };
    // all inner products below carry the common factor s
    let top = rs.weight_inner_int(&plus_rho(lambda), &plus_rho(lambda));
    let lambda_norm = rs.weight_inner_int(lambda, lambda);
    let root_weights: Vec<Vec<i64>> = rs.positive.iter().map(|a| rs.root_as_weight(a)).collect();
    let mut mult: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    mult.insert(lambda.to_vec(), 1);
    let mut layer = vec![lambda.to_vec()];
    while !layer.is_empty() {
        let mut cands: BTreeSet<Vec<i64>> = BTreeSet::new();
        for mu in &layer {
            for i in 0..r {
                cands.insert((0..r).map(|j| mu[j] - rs.pairing[i][j]).collect());
            }
        }
        let mut next = Vec::new();
        for nu in cands {
            let den = top - rs.weight_inner_int(&plus_rho(&nu), &plus_rho(&nu));
            if den <= 0 {
                continue;
            }
            let mut num = 0i64;
            for (a, aw) in rs.positive.iter().zip(&root_weights) {
                let mut w = nu.clone();
                loop {
                    for j in 0..r {
                        w[j] += aw[j];
                    }
                    match mult.get(&w) {
                        Some(&m) => num += 2 * m as i64 * rs.weight_root_int(&w, a),
                        None => {
                            // weights above ν along α stop once they leave λ − Q⁺
                            if rs.weight_inner_int(&w, &w) > lambda_norm {
                                break;
                            }
                        }
                    }
                }
            }
            debug_assert!(num % den == 0 && num >= 0);
            let m = (num / den) as u64;
            if m > 0 {
                mult.insert(nu.clone(), m);
                next.push(nu);
            }
        }
        layer = next;
    }
    Ok(mult)
}

/// Whether the roots of `𝔫` for the parabolic of `λ` pairwise meet at
/// acute or right angles, and exactly one simple root lies in `𝔫`.
pub fn angle_audit(rs: &RootSystem, lambda: &[i64]) -> Result<bool, ClassifyError> {
    rs.check_dominant(lambda)?;
    let rn: Vec<&Vec<i64>> = rs.positive.iter().filter(|a| rs.weight_root(lambda, a).is_positive()).collect();
    for (i, a) in rn.iter().enumerate() {
        for b in &rn[i + 1..] {
            if rs.root_inner(a, b).is_negative() {
                return Ok(false);
            }
        }
    }
    Ok(lambda.iter().filter(|&&m| m != 0).count() == 1)
}

/// Representations whose highest weight orbit is also the highest weight
/// orbit of a strictly larger group acting on the same space.
pub fn larger_symmetry(rs: &RootSystem, lambda: &[i64]) -> Option<String> {
    let r = rs.rank;
    let only = |i: usize| lambda.iter().enumerate().all(|(k, &m)| (m == 1) == (k == i) && (m == 0 || m == 1));
    match rs.family {
        'B' if only(r - 1) => Some(format!("D{} half-spin", r + 1)),
        'C' if only(0) => Some(format!("A{} natural", 2 * r - 1)),
        'G' if only(0) => Some("B3 natural".into()),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rejection {
    Dimension { dim_v: u64, dim_cone: u64 },
    NotSelfDual,
    MultipleWeight { weight: Vec<i64>, multiplicity: u64 },
    ObtuseAngle,
    NotMaximal { larger: String },
    NotTwoWeights,
    DiagramDuplicate,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::Dimension { dim_v, dim_cone } => {
                write!(f, "dimension of V is not twice the dimension of the orbit: dim {dim_v} != 2*{dim_cone}")
            }
            Rejection::NotSelfDual => write!(f, "V is not isomorphic to V*"),
            Rejection::MultipleWeight { weight, multiplicity } => {
                write!(f, "weight {weight:?} has multiplicity {multiplicity}, not all weights have multiplicity 1")
            }
            Rejection::ObtuseAngle => write!(f, "roots of n meet at an obtuse angle or more than one simple root lies in n"),
            Rejection::NotMaximal { larger } => write!(f, "the orbit is also an orbit of the larger group {larger}"),
            Rejection::NotTwoWeights => write!(f, "neither factor has exactly 2 weights"),
            Rejection::DiagramDuplicate => write!(f, "equivalent to another factor under a diagram automorphism"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Accepted,
    Rejected(Vec<Rejection>),
    /// The multiplicity table exceeded the cap.
    Undecided(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateVerdict {
    pub type_label: String,
    /// Highest weight of each simple factor, in fundamental weight coordinates.
    pub highest_weight: Vec<Vec<i64>>,
    pub dim_v: u64,
    pub dim_cone: u64,
    pub self_dual: bool,
    pub multiplicity_free: Option<bool>,
    pub status: Status,
}

impl CandidateVerdict {
    pub fn is_accepted(&self) -> bool {
        self.status == Status::Accepted
    }

    /// `3ω1`, `ω1+ω3`, `ω1⊗ω1`.
    pub fn weight_label(&self) -> String {
        self.highest_weight.iter().map(|w| weight_label(w)).collect::<Vec<_>>().join("⊗")
    }
}

pub fn weight_label(w: &[i64]) -> String {
    let parts: Vec<String> = w
        .iter()
        .enumerate()
        .filter(|(_, &m)| m != 0)
        .map(|(i, &m)| if m == 1 { format!("ω{}", i + 1) } else { format!("{m}ω{}", i + 1) })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

struct Facts {
    dim_v: u64,
    dim_cone: u64,
    self_dual: bool,
    multiplicities: Option<BTreeMap<Vec<i64>, u64>>,
}

fn facts(rs: &RootSystem, lambda: &[i64], cap: u64) -> Result<Facts, ClassifyError> {
    Ok(Facts {
        dim_v: weyl_dimension(rs, lambda)?,
        dim_cone: cone_orbit_dimension(rs, lambda)?,
        self_dual: is_self_dual(rs, lambda)?,
        multiplicities: weight_multiplicities(rs, lambda, cap).ok(),
    })
}

fn multiple_weight(m: &BTreeMap<Vec<i64>, u64>) -> Option<Rejection> {
    m.iter().find(|(_, &k)| k > 1).map(|(w, &k)| Rejection::MultipleWeight { weight: w.clone(), multiplicity: k })
}

fn simple_verdict(rs: &RootSystem, lambda: &[i64], f: &Facts) -> Result<CandidateVerdict, ClassifyError> {
    let mut reasons = Vec::new();
    if f.dim_v != 2 * f.dim_cone {
        reasons.push(Rejection::Dimension { dim_v: f.dim_v, dim_cone: f.dim_cone });
    }
    if !f.self_dual {
        reasons.push(Rejection::NotSelfDual);
    }
    let multiplicity_free = f.multiplicities.as_ref().map(|m| {
        if let Some(r) = multiple_weight(m) {
            reasons.push(r);
            false
        } else {
            true
        }
    });
    if !angle_audit(rs, lambda)? {
        reasons.push(Rejection::ObtuseAngle);
    }
    if let Some(larger) = larger_symmetry(rs, lambda) {
        reasons.push(Rejection::NotMaximal { larger });
    }
    let status = if !reasons.is_empty() {
        Status::Rejected(reasons)
    } else if multiplicity_free.is_none() {
        Status::Undecided("multiplicity cap".into())
    } else {
        Status::Accepted
    };
    Ok(CandidateVerdict {
        type_label: rs.label(),
        highest_weight: vec![lambda.to_vec()],
        dim_v: f.dim_v,
        dim_cone: f.dim_cone,
        self_dual: f.self_dual,
        multiplicity_free,
        status,
    })
}

fn edge_weight(r: usize, i: usize, k: i64) -> Vec<i64> {
    (0..r).map(|j| if j == i { k } else { 0 }).collect()
}

/// Walks `k·ω_i` along every edge of the Weyl chamber of every simple type up
/// to `max_rank`, one edge per orbit of diagram automorphisms. A walk stops
/// once `dim V > 2·dim X̂` (that candidate is still reported) or once
/// `dim V > max_dim` (not reported).
pub fn enumerate_simple(max_rank: usize, max_dim: u64) -> Vec<CandidateVerdict> {
    let mut out = Vec::new();
    for (family, rank) in simple_types(max_rank) {
        let rs = build_root_system(family, rank).expect("listed types are valid");
        for orbit in rs.node_orbits() {
            let i = orbit[0];
            for k in 1.. {
                let lambda = edge_weight(rank, i, k);
                let dim_v = weyl_dimension(&rs, &lambda).unwrap();
                if dim_v > max_dim {
                    break;
                }
                let f = facts(&rs, &lambda, DEFAULT_MULTIPLICITY_CAP.max(max_dim)).unwrap();
                let stop = f.dim_v > 2 * f.dim_cone;
                out.push(simple_verdict(&rs, &lambda, &f).unwrap());
                if stop {
                    break;
                }
            }
        }
    }
    out
}

/// Edge weights `k·ω_i` of a simple type with `dim ≤ max_dim`, including
/// those related by diagram automorphisms.
fn edge_weights(rs: &RootSystem, max_dim: u64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..rs.rank {
        for k in 1.. {
            let lambda = edge_weight(rs.rank, i, k);
            if weyl_dimension(rs, &lambda).unwrap() > max_dim {
                break;
            }
            out.push(lambda);
        }
    }
    out
}

/// Candidates `W_𝔞 ⊗ W_𝔟` for `𝔤 = 𝔞 ⊕ 𝔟` with both factors simple. The cone
/// over the orbit is the Segre cone, of dimension `dim X̂_𝔞 + dim X̂_𝔟 − 1`.
pub fn enumerate_semisimple_pairs(max_rank: usize, max_dim: u64) -> Vec<CandidateVerdict> {
    let types = simple_types(max_rank);
    let systems: Vec<RootSystem> = types.iter().map(|&(f, r)| build_root_system(f, r).unwrap()).collect();
    let mut reps: Vec<(usize, Vec<i64>, Facts, bool)> = Vec::new();
    for (t, rs) in systems.iter().enumerate() {
        let orbits = rs.node_orbits();
        for lambda in edge_weights(rs, max_dim / 2) {
            let i = lambda.iter().position(|&m| m != 0).unwrap();
            let canonical = orbits.iter().any(|o| o[0] == i);
            let f = facts(rs, &lambda, DEFAULT_MULTIPLICITY_CAP.max(max_dim)).unwrap();
            reps.push((t, lambda, f, canonical));
        }
    }
    let mut out = Vec::new();
    for x in 0..reps.len() {
        for y in x..reps.len() {
            let (ta, la, fa, ca) = &reps[x];
            let (tb, lb, fb, cb) = &reps[y];
            let (ra, rb) = (&systems[*ta], &systems[*tb]);
            if ra.rank + rb.rank > max_rank || fa.dim_v * fb.dim_v > max_dim {
                continue;
            }
            let dim_v = fa.dim_v * fb.dim_v;
            let dim_cone = fa.dim_cone + fb.dim_cone - 1;
            let mut reasons = Vec::new();
            let two = |f: &Facts| f.multiplicities.as_ref().is_some_and(|m| m.len() == 2);
            if !two(fa) && !two(fb) {
                reasons.push(Rejection::NotTwoWeights);
            }
            if dim_v != 2 * dim_cone {
                reasons.push(Rejection::Dimension { dim_v, dim_cone });
            }
            let self_dual = fa.self_dual && fb.self_dual;
            if !self_dual {
                reasons.push(Rejection::NotSelfDual);
            }
            let mut multiplicity_free = Some(true);
            for f in [fa, fb] {
                match &f.multiplicities {
                    Some(m) => {
                        if let Some(r) = multiple_weight(m) {
                            reasons.push(r);
                            multiplicity_free = Some(false);
                        }
                    }
                    None => multiplicity_free = multiplicity_free.and(None),
                }
            }
            for (rs, l) in [(ra, la), (rb, lb)] {
                if let Some(larger) = larger_symmetry(rs, l) {
                    reasons.push(Rejection::NotMaximal { larger });
                }
            }
            if !ca || !cb {
                reasons.push(Rejection::DiagramDuplicate);
            }
            let status = if !reasons.is_empty() {
                Status::Rejected(reasons)
            } else if multiplicity_free.is_none() {
                Status::Undecided("multiplicity cap".into())
            } else {
                Status::Accepted
            };
            out.push(CandidateVerdict {
                type_label: format!("{}+{}", ra.label(), rb.label()),
                highest_weight: vec![la.clone(), lb.clone()],
                dim_v,
                dim_cone,
                self_dual,
                multiplicity_free,
                status,
            });
        }
    }
    out
}

/// Whether an accepted pair is `𝔰𝔩₂` on `ℂ²` tensored with the natural
/// representation of some `𝔰𝔬_m`, returning `m`.
pub fn sl2_so_family_member(v: &CandidateVerdict) -> Option<u64> {
    let labels: Vec<&str> = v.type_label.split('+').collect();
    if labels.len() != 2 {
        return None;
    }
    let natural_so = |label: &str, w: &[i64]| -> bool {
        match (label.as_bytes()[0], &label[1..], w) {
            (b'A', "1", [2]) | (b'A', "3", [0, 1, 0]) => true,
            (b'B' | b'D', _, [1, rest @ ..]) => rest.iter().all(|&m| m == 0),
            _ => false,
        }
    };
    for (a, b) in [(0, 1), (1, 0)] {
        if labels[a] == "A1" && v.highest_weight[a] == [1] && natural_so(labels[b], &v.highest_weight[b]) {
            return Some(v.dim_v / 2);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_root_counts() {
        for (f, r, n) in [
            ('A', 1, 1),
            ('A', 5, 15),
            ('B', 3, 9),
            ('C', 3, 9),
            ('D', 6, 30),
            ('E', 6, 36),
            ('E', 7, 63),
            ('E', 8, 120),
            ('F', 4, 24),
            ('G', 2, 6),
        ] {
            let rs = build_root_system(f, r).unwrap();
            assert_eq!(rs.positive_roots().len(), n, "{f}{r}");
        }
        assert!(build_root_system('E', 5).is_err());
        assert!(build_root_system('B', 1).is_err());
    }

    #[test]
    fn weyl_vector_is_sum_of_fundamental_weights() {
        for (f, r) in simple_types(6) {
            let rs = build_root_system(f, r).unwrap();
            let sum: Vec<Rational> = (0..r).map(|k| rs.fundamental_weights().iter().fold(rat(0), |s, w| s + &w[k])).collect();
            assert_eq!(sum, rs.weyl_vector(), "{f}{r}");
        }
    }

    #[test]
    fn dimensions() {
        let a1 = build_root_system('A', 1).unwrap();
        assert_eq!(weyl_dimension(&a1, &[3]).unwrap(), 4);
        assert_eq!(cone_orbit_dimension(&a1, &[3]).unwrap(), 2);
        let c3 = build_root_system('C', 3).unwrap();
        assert_eq!(weyl_dimension(&c3, &[0, 0, 1]).unwrap(), 14);
        let e7 = build_root_system('E', 7).unwrap();
        assert_eq!(weyl_dimension(&e7, &edge_weight(7, 6, 1)).unwrap(), 56);
        assert_eq!(weyl_dimension(&e7, &edge_weight(7, 0, 1)).unwrap(), 133);
        let a5 = build_root_system('A', 5).unwrap();
        assert_eq!(cone_orbit_dimension(&a5, &[0, 0, 1, 0, 0]).unwrap(), 10);
        let d6 = build_root_system('D', 6).unwrap();
        assert_eq!(cone_orbit_dimension(&d6, &edge_weight(6, 5, 1)).unwrap(), 16);
        assert_eq!(weyl_dimension(&d6, &edge_weight(6, 5, 1)).unwrap(), 32);
        let e8 = build_root_system('E', 8).unwrap();
        assert_eq!(weyl_dimension(&e8, &edge_weight(8, 7, 1)).unwrap(), 248);
        assert_eq!(weyl_dimension(&a1, &[-1]), Err(ClassifyError::NotDominant(vec![-1], 1)));
    }

    #[test]
    fn self_duality() {
        let a5 = build_root_system('A', 5).unwrap();
        assert!(is_self_dual(&a5, &[0, 0, 1, 0, 0]).unwrap());
        assert!(!is_self_dual(&a5, &[1, 0, 0, 0, 0]).unwrap());
        let e7 = build_root_system('E', 7).unwrap();
        assert!(is_self_dual(&e7, &edge_weight(7, 6, 1)).unwrap());
    }

    #[test]
    fn multiplicities() {
        let a1 = build_root_system('A', 1).unwrap();
        let m = weight_multiplicities(&a1, &[2], 600).unwrap();
        assert_eq!(m, BTreeMap::from([(vec![2], 1), (vec![0], 1), (vec![-2], 1)]));
        let c3 = build_root_system('C', 3).unwrap();
        let m = weight_multiplicities(&c3, &[0, 0, 1], 600).unwrap();
        assert_eq!(m.len(), 14);
        assert!(m.values().all(|&k| k == 1));
        let m = weight_multiplicities(&c3, &[1, 1, 0], 600).unwrap();
        assert!(m.values().any(|&k| k > 1));
        assert_eq!(m.values().sum::<u64>(), weyl_dimension(&c3, &[1, 1, 0]).unwrap());
        let e8 = build_root_system('E', 8).unwrap();
        let adj = weight_multiplicities(&e8, &edge_weight(8, 7, 1), 600).unwrap();
        assert_eq!(adj[&vec![0; 8]], 8);
        assert_eq!(weight_multiplicities(&e8, &edge_weight(8, 0, 1), 600), Err(ClassifyError::CapExceeded { dim: 3875, cap: 600 }));
    }

    #[test]
    fn angles() {
        let e7 = build_root_system('E', 7).unwrap();
        assert!(angle_audit(&e7, &edge_weight(7, 6, 1)).unwrap());
        let a5 = build_root_system('A', 5).unwrap();
        assert!(angle_audit(&a5, &[0, 0, 1, 0, 0]).unwrap());
        assert!(!angle_audit(&a5, &[1, 0, 1, 0, 0]).unwrap());
    }

    #[test]
    fn edge_walk_dimension_is_increasing() {
        for (f, r) in simple_types(5) {
            let rs = build_root_system(f, r).unwrap();
            for i in 0..r {
                let dims: Vec<u64> = (1..5).map(|k| weyl_dimension(&rs, &edge_weight(r, i, k)).unwrap()).collect();
                assert!(dims.windows(2).all(|w| w[0] < w[1]), "{f}{r} ω{}", i + 1);
            }
        }
    }

    fn accepted(v: &[CandidateVerdict]) -> Vec<(String, String, u64)> {
        v.iter().filter(|c| c.is_accepted()).map(|c| (c.type_label.clone(), c.weight_label(), c.dim_v)).collect()
    }

    #[test]
    fn simple_classification() {
        let v = enumerate_simple(8, 100);
        let expected: Vec<(String, String, u64)> =
            [("A1", "3ω1", 4), ("A5", "ω3", 20), ("C3", "ω3", 14), ("D6", "ω6", 32), ("E7", "ω7", 56)]
                .iter()
                .map(|(a, b, c)| (String::from(*a), String::from(*b), *c))
                .collect();
        let mut got = accepted(&v);
        got.sort();
        assert_eq!(got, expected);
        assert!(v.iter().filter(|c| c.type_label == "G2").all(|c| !c.is_accepted()));
        let a3 = v.iter().find(|c| c.type_label == "A3" && c.highest_weight == [vec![0, 1, 0]]).unwrap();
        assert_eq!(a3.status, Status::Rejected(vec![Rejection::Dimension { dim_v: 6, dim_cone: 5 }]));
        let c3 = v.iter().find(|c| c.type_label == "C3" && c.highest_weight == [vec![2, 0, 0]]).unwrap();
        assert!(matches!(&c3.status, Status::Rejected(r) if r.iter().any(|x| matches!(x, Rejection::MultipleWeight { .. }))));
        let b5 = v.iter().find(|c| c.type_label == "B5" && c.highest_weight == [vec![0, 0, 0, 0, 1]]).unwrap();
        assert_eq!(b5.status, Status::Rejected(vec![Rejection::NotMaximal { larger: "D6 half-spin".into() }]));
        for c in v.iter().filter(|c| c.is_accepted()) {
            assert_eq!(c.dim_v, 2 * c.dim_cone);
        }
        let mut wider = accepted(&enumerate_simple(8, 300));
        wider.sort();
        assert_eq!(wider, expected);
    }

    #[test]
    fn semisimple_classification() {
        let v = enumerate_semisimple_pairs(8, 100);
        let acc: Vec<&CandidateVerdict> = v.iter().filter(|c| c.is_accepted()).collect();
        assert!(!acc.is_empty());
        let mut ms: Vec<u64> = acc.iter().map(|c| sl2_so_family_member(c).expect("only sl2 x so_m")).collect();
        ms.sort();
        // 𝔰𝔬₄ is not simple, so m = 4 needs three factors
        assert_eq!(ms, (3..=15).filter(|&m| m != 4).collect::<Vec<_>>());
        let b2 = acc.iter().find(|c| c.type_label == "A1+B2").unwrap();
        assert_eq!((b2.dim_v, b2.dim_cone), (10, 5));
        let a1a1 = v.iter().find(|c| c.type_label == "A1+A1" && c.highest_weight == [vec![1], vec![1]]).unwrap();
        assert!(matches!(&a1a1.status, Status::Rejected(r) if r.contains(&Rejection::Dimension { dim_v: 4, dim_cone: 3 })));
        let a2a2 = v.iter().find(|c| c.type_label == "A2+A2" && c.highest_weight == [vec![1, 0], vec![1, 0]]).unwrap();
        assert!(matches!(&a2a2.status, Status::Rejected(r) if r.contains(&Rejection::NotTwoWeights)));
        assert!(v.iter().filter(|c| c.type_label.contains("G2")).all(|c| !c.is_accepted()));
    }
}
