//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};
use serde_json::Value;
use subadjoint_cli::commands::classify_report;
use subadjoint_core::arith::{euler_weighted_sum, parse_poly, rat, Monomial, Polynomial};
use subadjoint_core::catalog::{self, CatalogEntry};
use subadjoint_core::classify::{build_root_system, weight_multiplicities, weyl_dimension};
use subadjoint_core::groebner::{buchberger, krull_dimension, IdealPresentation};
use subadjoint_core::legendrian::{legendrian_verdict, VarietyPresentation, Verdict, Witness};
use subadjoint_core::liealg::{analyze, orbit_points};
use subadjoint_core::linalg;
use subadjoint_core::symplectic::{
    differential_bracket, poisson_bracket, quadric_bracket_matrix, quadric_to_sp, sp_membership, standard_form, QuadraticForm,
    SymplecticForm,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn runner(cases: u32, seed: u8) -> TestRunner {
    let config = Config { cases, failure_persistence: None, max_global_rejects: 10_000, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &[seed; 32]))
}

fn cases<S: Strategy>(name: &str, n: u32, seed: u8, s: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<String, String>
where
    S::Value: std::fmt::Debug,
{
    runner(n, seed).run(&s, test).map_err(|e| format!("{name}: {e}"))?;
    Ok(format!("{name} {n}"))
}

fn br(f: &Polynomial, g: &Polynomial, form: &SymplecticForm) -> Polynomial {
    poisson_bracket(f, g, form).unwrap()
}

fn bracket_tables() -> Outcome {
    let cubic = catalog::twisted_cubic();
    let v = &cubic.presentation;
    let g = v.generators();
    let (fp, fm, h) = (&g[0], &g[1], &g[2]);
    let form = v.form();
    ensure(br(fp, fm, form) == *h, || "[f+, f-] != h'".into())?;
    ensure(br(h, fp, form) == fp.scale(&rat(2)), || "[h', f+] != 2 f+".into())?;
    ensure(br(h, fm, form) == fm.scale(&rat(-2)), || "[h', f-] != -2 f-".into())?;

    let mut checked = 0;
    for n in 3..=6 {
        let e = catalog::segre_line_quadric(n).map_err(|e| e.to_string())?;
        let form = e.presentation.form();
        let gens = e.presentation.generators();
        let k = gens.len();
        let (gp, gm, h) = (&gens[k - 3], &gens[k - 2], &gens[k - 1]);
        let x = |i: usize| Polynomial::var(2 * n, i);
        let f = |i: usize, j: usize| &(&x(i) * &x(n + j)) - &(&x(j) * &x(n + i));
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let fij = f(i, j);
                ensure(br(&fij, gp, form).is_zero(), || format!("(iii) fails for n={n}, f_{i}{j}"))?;
                ensure(br(&fij, gm, form).is_zero(), || format!("(iv) fails for n={n}, f_{i}{j}"))?;
                ensure(br(&fij, h, form).is_zero(), || format!("(v) fails for n={n}, f_{i}{j}"))?;
                for kk in 0..n {
                    if kk != i && kk != j {
                        ensure(br(&fij, &f(j, kk), form) == f(kk, i), || format!("(i) fails for n={n}, ({i},{j},{kk})"))?;
                    }
                    for l in 0..n {
                        if ![i, j, kk].contains(&l) && kk != i && kk != j {
                            ensure(br(&fij, &f(kk, l), form).is_zero(), || format!("(ii) fails for n={n}"))?;
                        }
                    }
                }
                checked += 1;
            }
        }
        ensure(br(gp, gm, form) == *h, || format!("(vi) fails for n={n}"))?;
        ensure(br(h, gm, form) == gm.scale(&rat(-2)), || format!("(vii) fails for n={n}"))?;
        ensure(br(h, gp, form) == gp.scale(&rat(2)), || format!("(viii) fails for n={n}"))?;
    }
    Ok(format!("cubic table and relations (i)-(viii) for n=3..6 over {checked} ordered pairs; (i) reads [f_ij, f_jk] = f_ki"))
}

fn algebra_identification() -> Outcome {
    let mut cases: Vec<(CatalogEntry, usize, String)> = vec![(catalog::twisted_cubic(), 3, "A1".into())];
    for n in [3, 4, 5, 7] {
        let e = catalog::segre_line_quadric(n).map_err(|e| e.to_string())?;
        let label = e.presentation.expected_algebra.clone().unwrap_or_default();
        cases.push((e, n * (n - 1) / 2 + 3, label));
    }
    let err = |e: catalog::CatalogError| e.to_string();
    cases.push((catalog::lagrangian_grassmannian_36().map_err(err)?, 21, "C3".into()));
    cases.push((catalog::grassmannian_36().map_err(err)?, 35, "A5".into()));
    cases.push((catalog::spinor_s6(), 66, "D6".into()));
    cases.push((catalog::e7_variety().map_err(err)?, 133, "E7".into()));
    let mut seen = Vec::new();
    for (e, dim, label) in &cases {
        let t = Instant::now();
        let name = e.presentation.name().to_owned();
        let (_, _, s) = analyze(&e.presentation).map_err(|err| format!("{name}: {err}"))?;
        let elapsed = t.elapsed();
        ensure(s.dim == *dim, || format!("{name}: dimension {} != {dim}", s.dim))?;
        ensure(s.label() == *label, || format!("{name}: type {} != {label}", s.label()))?;
        ensure(elapsed < Duration::from_secs(600), || format!("{name}: {:.1}s exceeds 10 minutes", elapsed.as_secs_f64()))?;
        seen.push(format!("{name}={}({}) {:.2}s", s.label(), s.dim, elapsed.as_secs_f64()));
    }
    Ok(seen.join(", "))
}

fn classification() -> Outcome {
    let t = Instant::now();
    let r = classify_report(8, 100);
    let elapsed = t.elapsed();
    ensure(r.status == subadjoint_cli::Status::Ok, || format!("classification status {}", r.status.as_str()))?;
    let hw = |c: &Value| -> Vec<Vec<i64>> { serde_json::from_value(c["highest_weight"].clone()).unwrap_or_default() };
    let mut accepted: Vec<(String, u64, Vec<Vec<i64>>)> = r.result["accepted_simple"]
        .as_array()
        .ok_or("missing accepted_simple")?
        .iter()
        .map(|c| (c["type"].as_str().unwrap_or("").to_owned(), c["dim_v"].as_u64().unwrap_or(0), hw(c)))
        .collect();
    accepted.sort_by_key(|a| a.1);
    let expected: Vec<(String, u64, Vec<Vec<i64>>)> = vec![
        ("A1".into(), 4, vec![vec![3]]),
        ("C3".into(), 14, vec![vec![0, 0, 1]]),
        ("A5".into(), 20, vec![vec![0, 0, 1, 0, 0]]),
        ("D6".into(), 32, vec![vec![0, 0, 0, 0, 0, 1]]),
        ("E7".into(), 56, vec![vec![0, 0, 0, 0, 0, 0, 1]]),
    ];
    ensure(accepted == expected, || format!("accepted simple set {accepted:?}"))?;
    let family: Vec<u64> = serde_json::from_value(r.result["sl2_so_family"].clone()).map_err(|e| e.to_string())?;
    let expected_family: Vec<u64> = std::iter::once(3).chain(5..=15).collect();
    ensure(family == expected_family, || format!("sl2 x so_m family {family:?}"))?;
    let pairs = r.result["accepted_pairs"].as_array().ok_or("missing accepted_pairs")?;
    ensure(pairs.len() == family.len(), || format!("{} accepted pairs outside the sl2 x so_m family", pairs.len() - family.len()))?;
    let simple = r.result["simple"].as_array().ok_or("missing simple")?;
    let g2: Vec<&Value> = simple.iter().filter(|c| c["type"] == "G2").collect();
    ensure(!g2.is_empty() && g2.iter().all(|c| c["status"] == "rejected"), || "a G2 candidate was not rejected".into())?;
    ensure(pairs.iter().all(|c| !c["type"].as_str().unwrap_or("").contains("G2")), || "a G2 pair was accepted".into())?;
    ensure(elapsed < Duration::from_secs(300), || format!("{:.1}s exceeds 5 minutes", elapsed.as_secs_f64()))?;
    Ok(format!(
        "simple {{A1:3w1(4), C3:w3(14), A5:w3(20), D6:w6(32), E7:w7(56)}}, sl2 x so_m for m in {family:?}, {} G2 candidates rejected, {:.2}s",
        g2.len(),
        elapsed.as_secs_f64()
    ))
}

fn legendrian_verdicts() -> Outcome {
    let err = |e: catalog::CatalogError| e.to_string();
    let entries = vec![
        catalog::twisted_cubic(),
        catalog::four_lines(),
        catalog::segre_line_quadric(3).map_err(err)?,
        catalog::segre_line_quadric(4).map_err(err)?,
        catalog::lagrangian_grassmannian_36().map_err(err)?,
        catalog::by_name("xf-f2").map_err(err)?,
        catalog::complete_intersection_complex(),
    ];
    let mut names = Vec::new();
    for e in &entries {
        let name = e.presentation.name();
        let v = legendrian_verdict(&e.presentation).map_err(|e| format!("{name}: {e}"))?;
        ensure(v.verdict == Verdict::Legendrian, || format!("{name}: {}", v.verdict.as_str()))?;
        ensure(v.bracket_closed == Some(true), || format!("{name}: closure not established"))?;
        names.push(name.to_owned());
    }

    let mut out = Vec::new();
    let code = subadjoint_cli::run(["subadjoint", "xf", "y1^3", "--vars", "2"], &mut std::io::empty(), &mut out, &mut std::io::sink());
    let report: Value = serde_json::from_slice(&out).map_err(|e| format!("xf report: {e}"))?;
    ensure(report["result"]["degenerate"] == true, || format!("X_(y1^3) not flagged degenerate (exit {code})"))?;
    ensure(report["result"]["note"] == "contained in a hyperplane", || "missing hyperplane note".into())?;

    let cubic = catalog::twisted_cubic();
    let mut gens = cubic.presentation.generators().to_vec();
    gens[0] = &gens[0] + &parse_poly("x0*x1", 4).map_err(|e| e.to_string())?;
    let perturbed = VarietyPresentation::new("perturbed-cubic", cubic.presentation.form().clone(), gens).map_err(|e| e.to_string())?;
    let v = legendrian_verdict(&perturbed).map_err(|e| e.to_string())?;
    ensure(v.verdict == Verdict::NotLegendrian, || format!("perturbed cubic: {}", v.verdict.as_str()))?;
    let pair = v.witnesses.iter().find_map(|w| match w {
        Witness::Pair { i, j, .. } => Some((*i, *j)),
        _ => None,
    });
    let (i, j) = pair.ok_or("perturbed cubic has no witness pair")?;
    Ok(format!("legendrian: {}; X_(y1^3) degenerate; perturbed cubic witness pair ({i}, {j})", names.join(", ")))
}

fn nonstandard_form() -> SymplecticForm {
    SymplecticForm::from_integers(&[&[0, 0, 1, 2], &[0, 0, 0, 1], &[-1, 0, 0, 0], &[-2, -1, 0, 0]]).unwrap()
}

fn arb_poly(max_deg: u32) -> impl Strategy<Value = Polynomial> {
    let term = (proptest::collection::vec(0..=max_deg, 4), -4i64..=4);
    proptest::collection::vec(term, 0..5).prop_map(move |ts| {
        let mut p = Polynomial::zero(4);
        for (e, c) in ts {
            if e.iter().sum::<u32>() <= max_deg {
                p.add_term(Monomial::new(e), rat(c));
            }
        }
        p
    })
}

fn arb_homogeneous(nvars: usize) -> impl Strategy<Value = Polynomial> {
    (1u32..=4, proptest::collection::vec((proptest::collection::vec(0u32..=4, nvars), -5i64..=5), 1..6)).prop_map(move |(d, ts)| {
        let mut p = Polynomial::zero(nvars);
        for (mut e, c) in ts {
            let s: u32 = e.iter().sum();
            if s > d {
                continue;
            }
            e[0] += d - s;
            p.add_term(Monomial::new(e), rat(c));
        }
        p
    })
}

fn arb_quadric(nvars: usize) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec(-4i64..=4, nvars * (nvars + 1) / 2).prop_map(move |cs| {
        let mut q = Polynomial::zero(nvars);
        let mut k = 0;
        for i in 0..nvars {
            for j in i..nvars {
                let mut e = vec![0u32; nvars];
                e[i] += 1;
                e[j] += 1;
                q.add_term(Monomial::new(e), rat(cs[k]));
                k += 1;
            }
        }
        q
    })
}

fn property_suites() -> Outcome {
    let form = nonstandard_form();
    let mut done = Vec::new();
    done.push(cases("antisymmetry", 100, 1, (arb_poly(3), arb_poly(3)), |(f, g)| {
        prop_assert_eq!(br(&f, &g, &form), -br(&g, &f, &form));
        Ok(())
    })?);
    done.push(cases("leibniz", 100, 2, (arb_poly(2), arb_poly(2), arb_poly(2)), |(f, g, h)| {
        prop_assert_eq!(br(&f, &(&g * &h), &form), &(&br(&f, &g, &form) * &h) + &(&g * &br(&f, &h, &form)));
        Ok(())
    })?);
    done.push(cases("jacobi", 100, 3, (arb_poly(3), arb_poly(3), arb_poly(3)), |(f, g, h)| {
        let s = &(&br(&f, &br(&g, &h, &form), &form) + &br(&g, &br(&h, &f, &form), &form)) + &br(&h, &br(&f, &g, &form), &form);
        prop_assert!(s.is_zero());
        Ok(())
    })?);
    done.push(cases("rho", 100, 4, (arb_quadric(4), arb_quadric(4)), |(a, b)| {
        let rho = |p: &Polynomial| quadric_to_sp(&QuadraticForm::from_polynomial(p).unwrap(), &form).unwrap().into_matrix();
        let (ra, rb) = (rho(&a), rho(&b));
        prop_assert!(sp_membership(&ra, &form));
        let commutator = linalg::mat_sub(&linalg::mat_mul(&ra, &rb), &linalg::mat_mul(&rb, &ra));
        let c = br(&a, &b, &form);
        if c.is_zero() {
            prop_assert!(linalg::is_zero_matrix(&commutator));
        } else {
            prop_assert_eq!(rho(&c), commutator);
        }
        Ok(())
    })?);
    done.push(cases("euler", 100, 5, arb_homogeneous(5), |p| {
        let d = p.total_degree().unwrap_or(0);
        prop_assert_eq!(euler_weighted_sum(&p).unwrap(), p.scale(&rat(d as i64)));
        Ok(())
    })?);
    let systems = [('A', 1), ('A', 2), ('A', 3), ('A', 4), ('B', 2), ('B', 3), ('B', 4), ('C', 3), ('C', 4), ('D', 4), ('F', 4), ('G', 2)];
    let weights = (0..systems.len(), proptest::collection::vec(0i64..=2, 4));
    let sampled = std::cell::Cell::new(0u32);
    done.push(cases("freudenthal", 100, 6, weights, |(t, w)| {
        let (family, rank) = systems[t];
        let rs = build_root_system(family, rank).unwrap();
        let lambda = &w[..rank];
        let dim = weyl_dimension(&rs, lambda).unwrap();
        prop_assume!(dim <= 600);
        let m = weight_multiplicities(&rs, lambda, 600).unwrap();
        prop_assert_eq!(m.values().sum::<u64>(), dim);
        sampled.set(sampled.get() + 1);
        Ok(())
    })?);
    ensure(sampled.get() >= 20, || format!("only {} dominant weights sampled", sampled.get()))?;
    Ok(format!("{} cases each: {}", 100, done.iter().map(|s| s.split(' ').next().unwrap()).collect::<Vec<_>>().join(", ")))
}

fn brute_force_dimension(n: usize, supports: &[Vec<usize>]) -> usize {
    (0u32..1 << n).filter(|mask| !supports.iter().any(|s| s.iter().all(|v| mask & (1 << v) != 0))).map(u32::count_ones).max().unwrap_or(0)
        as usize
}

fn oracle_equivalence() -> Outcome {
    let form = standard_form(3).map_err(|e| e.to_string())?;
    cases("quadric brackets", 50, 7, (arb_quadric(6), arb_quadric(6)), |(a, b)| {
        let qa = QuadraticForm::from_polynomial(&a).unwrap();
        let qb = QuadraticForm::from_polynomial(&b).unwrap();
        prop_assert_eq!(quadric_bracket_matrix(&qa, &qb, &form).unwrap().to_polynomial(), differential_bracket(&a, &b, &form));
        Ok(())
    })?;
    let monomials = proptest::collection::vec(proptest::collection::vec(0u32..2, 10), 1..7);
    cases("krull", 20, 8, (1usize..=10, monomials), |(n, mons)| {
        let gens: Vec<Polynomial> = mons
            .into_iter()
            .map(|e| Polynomial::monomial(Monomial::new(e[..n].to_vec()), rat(1)))
            .filter(|m| !m.leading_monomial().unwrap().is_one())
            .collect();
        prop_assume!(!gens.is_empty());
        let g = buchberger(&IdealPresentation::new(n, gens.clone()).unwrap()).unwrap();
        let supports: Vec<Vec<usize>> = gens.iter().map(|m| m.leading_monomial().unwrap().support().collect()).collect();
        prop_assert_eq!(krull_dimension(&g).unwrap(), brute_force_dimension(n, &supports));
        Ok(())
    })?;
    Ok("50 quadric pairs on the standard form of dimension 6, 20 monomial ideals in at most 10 variables".into())
}

fn orbit_consistency() -> Outcome {
    let err = |e: catalog::CatalogError| e.to_string();
    let entries = [catalog::twisted_cubic(), catalog::segre_line_quadric(3).map_err(err)?, catalog::grassmannian_36().map_err(err)?];
    let mut notes = Vec::new();
    for e in &entries {
        let v = &e.presentation;
        let name = v.name();
        let (l, cd, _) = analyze(v).map_err(|e| format!("{name}: {e}"))?;
        let cd = cd.ok_or_else(|| format!("{name}: no Cartan data"))?;
        let pts = orbit_points(&l, &cd, &e.base_point, 20_250_101, 10, 3).map_err(|e| format!("{name}: {e}"))?;
        ensure(pts.len() == 10, || format!("{name}: {} points", pts.len()))?;
        if let Some(k) = pts.iter().find_map(|p| v.is_on_cone(p)) {
            return Err(format!("{name}: generator {k} does not vanish on an orbit point"));
        }
        let moved = pts.iter().filter(|p| **p != e.base_point).count();
        ensure(moved > 0, || format!("{name}: orbit never left the base point"))?;
        notes.push(format!("{name} 10/10 on {} generators", v.generators().len()));
    }
    Ok(notes.join(", "))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("bracket tables", bracket_tables),
        ("algebra identification", algebra_identification),
        ("classification rerun", classification),
        ("legendrian verdicts", legendrian_verdicts),
        ("property suites", property_suites),
        ("oracle equivalence", oracle_equivalence),
        ("orbit consistency", orbit_consistency),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {}. {name} ({secs:.2}s): {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}. {name} ({secs:.2}s): {why}", k + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
