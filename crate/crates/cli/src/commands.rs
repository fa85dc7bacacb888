use std::io::Read;
use std::path::Path;

use serde_json::{json, Value};
use subadjoint_core::arith::{parse_poly_with, rat, Polynomial, Rational};
use subadjoint_core::catalog::{self, CatalogEntry, Source};
use subadjoint_core::classify::{self, CandidateVerdict, Status as CandidateStatus};
use subadjoint_core::groebner::{self, GroebnerError};
use subadjoint_core::legendrian::{
    self, bracket_closure_by_span, Closure, LegendrianVerdict, RationalFunction, RationalSampler, VarietyPresentation, Verdict, Witness,
};
use subadjoint_core::liealg::{self, LieError};
use subadjoint_core::symplectic::poisson_bracket;

use crate::input::{self, CheckFile};
use crate::{Cli, Command, Output, Report, Status};

pub fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> Result<Output, String> {
    match &cli.command {
        Command::Check { file } => check(cli, &load(cli, file, stdin)?, file).map(Output::Report),
        Command::Bracket { file, f, g } => bracket(&load(cli, file, stdin)?, file, f, g).map(Output::Report),
        Command::Gb { file } => gb(cli, &load(cli, file, stdin)?, file, None).map(Output::Report),
        Command::Nf { file, poly } => gb(cli, &load(cli, file, stdin)?, file, Some(poly)).map(Output::Report),
        Command::Algebra { file } => algebra(&load(cli, file, stdin)?, file).map(Output::Report),
        Command::Classify { max_rank, max_dim } => Ok(Output::Report(classify_report(*max_rank, *max_dim))),
        Command::Catalog { name: Some(name) } => {
            let e = catalog::by_name(name).map_err(|e| e.to_string())?;
            Ok(Output::Raw(input::render_check_file(&e)))
        }
        Command::Catalog { name: None } => catalog_list().map(Output::Report),
        Command::Curve { f1, f2, f3 } => curve(f1, f2, f3).map(Output::Report),
        Command::Xf { poly, vars } => xf(cli, poly, *vars).map(Output::Report),
    }
}

fn load(cli: &Cli, file: &str, stdin: &mut dyn Read) -> Result<CheckFile, String> {
    let (text, base) = if file == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(|e| format!("cannot read stdin: {e}"))?;
        (s, None)
    } else {
        let s = std::fs::read_to_string(file).map_err(|e| format!("cannot read {file}: {e}"))?;
        (s, Path::new(file).parent().map(Path::to_path_buf))
    };
    input::parse_check_file(&text, base.as_deref(), cli.form.as_deref()).map_err(|e| format!("{file}: {e}"))
}

fn file_inputs(f: &CheckFile, file: &str) -> Value {
    json!({
        "file": file,
        "name": f.name,
        "n": f.half_dim,
        "form": f.form_spec,
        "generators": f.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
    })
}

pub fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Pair { i, j, remainder } => json!({"kind": "pair", "i": i, "j": j, "remainder": remainder.to_string()}),
        Witness::Dimension { expected, found } => json!({"kind": "dimension", "expected": expected, "found": found}),
        Witness::EmptyCone => json!({"kind": "empty-cone"}),
        Witness::Point { point, reason } => {
            json!({"kind": "point", "point": point.iter().map(|x| x.to_string()).collect::<Vec<_>>(), "reason": reason})
        }
    }
}

fn verdict_json(v: &LegendrianVerdict) -> Value {
    json!({
        "bracket_closed": v.bracket_closed,
        "dimension": v.cone_dimension,
        "degenerate": v.degenerate,
        "linear_form": v.linear_form.as_ref().map(|p| p.to_string()),
        "verdict": v.verdict.as_str(),
        "witnesses": v.witnesses.iter().map(witness_json).collect::<Vec<_>>(),
        "equidimensionality_unchecked": v.equidimensionality_unchecked,
    })
}

fn verdict_status(v: Verdict) -> Status {
    match v {
        Verdict::Legendrian => Status::Ok,
        Verdict::NotLegendrian => Status::Negative,
        Verdict::Undecided => Status::Undecided,
    }
}

/// Verdict by Gröbner basis; when the pair budget runs out the closure
/// question is still answered by graded spans.
fn verdict_with_fallback(r: &mut Report, v: &VarietyPresentation, budget: usize) -> Result<Value, String> {
    let out = r.time("verdict", || legendrian::legendrian_verdict_with_budget(v, budget)).map_err(|e| e.to_string())?;
    let mut result = verdict_json(&out);
    r.status = verdict_status(out.verdict);
    if out.verdict == Verdict::Undecided {
        r.budget = Some("groebner_pairs".into());
        if v.generators().iter().all(Polynomial::is_homogeneous) {
            let c = r.time("span_closure", || bracket_closure_by_span(v)).map_err(|e| e.to_string())?;
            result["bracket_closed"] = match c.status {
                Closure::Closed => json!(true),
                Closure::NotClosed => json!(false),
                Closure::Undecided => Value::Null,
            };
            result["witnesses"] = json!(c.witnesses.iter().map(witness_json).collect::<Vec<_>>());
            if c.status == Closure::NotClosed {
                result["verdict"] = json!(Verdict::NotLegendrian.as_str());
                r.status = Status::Negative;
                r.budget = None;
            }
        }
    }
    Ok(result)
}

fn check(cli: &Cli, f: &CheckFile, file: &str) -> Result<Report, String> {
    let mut inputs = file_inputs(f, file);
    inputs["seed"] = json!(cli.seed);
    inputs["budget"] = json!(cli.budget);
    let mut r = Report::new("check", inputs);
    let v = f.presentation()?;
    r.result = verdict_with_fallback(&mut r, &v, cli.budget)?;
    Ok(r)
}

fn bracket(f: &CheckFile, file: &str, a: &str, b: &str) -> Result<Report, String> {
    let mut inputs = file_inputs(f, file);
    inputs["f"] = json!(a);
    inputs["g"] = json!(b);
    let mut r = Report::new("bracket", inputs);
    let (pa, pb) = (f.parse_poly(a)?, f.parse_poly(b)?);
    let c = r.time("bracket", || poisson_bracket(&pa, &pb, &f.form)).map_err(|e| e.to_string())?;
    r.result = json!({"bracket": c.to_string()});
    Ok(r)
}

fn gb(cli: &Cli, f: &CheckFile, file: &str, poly: Option<&String>) -> Result<Report, String> {
    let mut inputs = file_inputs(f, file);
    inputs["budget"] = json!(cli.budget);
    let command = if poly.is_some() { "nf" } else { "gb" };
    if let Some(p) = poly {
        inputs["poly"] = json!(p);
    }
    let target = poly.map(|p| f.parse_poly(p)).transpose()?;
    let mut r = Report::new(command, inputs);
    let ideal = f.presentation()?.ideal();
    match r.time("groebner", || groebner::buchberger_with_budget(&ideal, cli.budget)) {
        Ok(basis) => {
            r.result = match target {
                Some(p) => {
                    let nf = groebner::normal_form(&p, &basis);
                    json!({"normal_form": nf.to_string(), "in_ideal": nf.is_zero()})
                }
                None => json!({
                    "order": "grevlex",
                    "elements": basis.elements().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                    "pairs_processed": basis.pairs_processed(),
                    "improper": basis.is_improper(),
                }),
            };
        }
        Err(GroebnerError::BudgetExceeded { budget, pending }) => {
            r.status = Status::Undecided;
            r.budget = Some("groebner_pairs".into());
            r.result = json!({"budget": budget, "pending_pairs": pending});
        }
        Err(e) => return Err(e.to_string()),
    }
    Ok(r)
}

fn algebra(f: &CheckFile, file: &str) -> Result<Report, String> {
    let mut r = Report::new("algebra", file_inputs(f, file));
    let v = f.presentation()?;
    let quadrics = liealg::quadratic_part(&v);
    match r.time("analyze", || liealg::analyze(&v)) {
        Ok((_, cd, s)) => {
            r.result = json!({
                "quadrics": quadrics.len(),
                "dim": s.dim,
                "semisimple": s.semisimple,
                "rank": s.rank,
                "root_count": s.root_count,
                "types": s.types,
                "label": s.label(),
                "diagonal_cartan": cd.as_ref().map(|c| c.diagonal),
            });
        }
        Err(LieError::NotClosed { i, j }) => {
            r.status = Status::Negative;
            r.result = json!({
                "quadrics": quadrics.len(),
                "closed": false,
                "witness": {"i": i, "j": j, "f": quadrics[i].to_string(), "g": quadrics[j].to_string()},
            });
        }
        Err(e) => {
            r.status = Status::Undecided;
            r.budget = Some("cartan_search".into());
            r.result = json!({"quadrics": quadrics.len(), "reason": e.to_string()});
        }
    }
    Ok(r)
}

fn candidate_json(c: &CandidateVerdict) -> Value {
    let (status, reasons) = match &c.status {
        CandidateStatus::Accepted => ("accepted", Vec::new()),
        CandidateStatus::Rejected(rs) => ("rejected", rs.iter().map(|x| x.to_string()).collect()),
        CandidateStatus::Undecided(why) => ("undecided", vec![why.clone()]),
    };
    json!({
        "type": c.type_label,
        "weight": c.weight_label(),
        "highest_weight": c.highest_weight,
        "dim_v": c.dim_v,
        "dim_cone": c.dim_cone,
        "self_dual": c.self_dual,
        "multiplicity_free": c.multiplicity_free,
        "status": status,
        "reasons": reasons,
    })
}

fn table(rows: &[CandidateVerdict]) -> String {
    let mut out = format!("  {:<8} {:<10} {:>6} {:>6}  {:<9} {}\n", "type", "weight", "dim V", "cone", "status", "reason");
    for c in rows {
        let (status, reason) = match &c.status {
            CandidateStatus::Accepted => ("accepted", String::new()),
            CandidateStatus::Rejected(rs) => ("rejected", rs[0].to_string()),
            CandidateStatus::Undecided(w) => ("undecided", w.clone()),
        };
        out.push_str(&format!(
            "  {:<8} {:<10} {:>6} {:>6}  {:<9} {}\n",
            c.type_label,
            c.weight_label(),
            c.dim_v,
            c.dim_cone,
            status,
            reason
        ));
    }
    out
}

pub fn classify_report(max_rank: usize, max_dim: u64) -> Report {
    let mut r = Report::new("classify", json!({"max_rank": max_rank, "max_dim": max_dim}));
    let simple = r.time("simple", || classify::enumerate_simple(max_rank, max_dim));
    let pairs = r.time("semisimple_pairs", || classify::enumerate_semisimple_pairs(max_rank, max_dim));
    let accepted = |v: &[CandidateVerdict]| -> Vec<CandidateVerdict> { v.iter().filter(|c| c.is_accepted()).cloned().collect() };
    let (acc_simple, acc_pairs) = (accepted(&simple), accepted(&pairs));
    let mut family: Vec<u64> = acc_pairs.iter().filter_map(classify::sl2_so_family_member).collect();
    family.sort_unstable();
    let mut text = String::from("simple candidates\n");
    text.push_str(&table(&simple));
    text.push_str("semisimple pairs (accepted)\n");
    text.push_str(&table(&acc_pairs));
    r.result = json!({
        "accepted_simple": acc_simple.iter().map(candidate_json).collect::<Vec<_>>(),
        "accepted_pairs": acc_pairs.iter().map(candidate_json).collect::<Vec<_>>(),
        "sl2_so_family": family,
        "simple": simple.iter().map(candidate_json).collect::<Vec<_>>(),
        "semisimple_pairs_examined": pairs.len(),
        "rejected_pairs_sample": pairs.iter().filter(|c| !c.is_accepted()).take(20).map(candidate_json).collect::<Vec<_>>(),
        "table": text,
    });
    if simple.iter().chain(&pairs).any(|c| matches!(c.status, CandidateStatus::Undecided(_))) {
        r.status = Status::Undecided;
        r.budget = Some("multiplicity_cap".into());
    }
    r
}

fn entry_summary(name: &str, e: &CatalogEntry) -> Value {
    let v = &e.presentation;
    json!({
        "name": name,
        "nvars": v.nvars(),
        "generators": v.generators().len(),
        "expected_algebra": v.expected_algebra,
        "parametrized": v.parametrization().is_some(),
        "source": match &e.source {
            Source::Generated => json!("generated"),
            Source::Transcribed { file, sha256 } => json!({"file": file, "sha256": sha256}),
        },
    })
}

fn catalog_list() -> Result<Report, String> {
    let mut r = Report::new("catalog", Value::Null);
    let entries = r.time("build", catalog::all_entries).map_err(|e| e.to_string())?;
    r.result = json!({
        "entries": entries.iter().map(|(n, e)| entry_summary(n, e)).collect::<Vec<_>>(),
        "also": "segre-<n> for any n >= 3",
    });
    Ok(r)
}

fn curve_resolver(letters: &str, digits: &str) -> Option<(Rational, usize)> {
    match (letters, digits) {
        ("t", "") | ("x", "0") | ("y", "0") => Some((rat(1), 0)),
        _ => None,
    }
}

fn parse_rational_function(s: &str) -> Result<RationalFunction, String> {
    let parse = |t: &str| parse_poly_with(t, 1, &curve_resolver).map_err(|e| format!("{e} in '{t}'"));
    let s = s.trim();
    if let Some(k) = s.find(")/(") {
        let (num, den) = (&s[..=k], &s[k + 2..]);
        return RationalFunction::new(parse(num)?, parse(den)?).ok_or_else(|| format!("zero denominator in '{s}'"));
    }
    Ok(RationalFunction::polynomial(parse(s)?))
}

fn curve(f1: &str, f2: &str, f3: &str) -> Result<Report, String> {
    let mut r = Report::new("curve", json!({"f1": f1, "f2": f2, "f3": f3}));
    let (a, b, c) = (parse_rational_function(f1)?, parse_rational_function(f2)?, parse_rational_function(f3)?);
    let ok = r.time("ode", || legendrian::rational_curve_check(&a, &b, &c));
    r.result = json!({"equation": "f1' = f2' f3 - f3' f2", "satisfied": ok, "verdict": if ok { "legendrian" } else { "not-legendrian" }});
    r.status = if ok { Status::Ok } else { Status::Negative };
    Ok(r)
}

/// Variables `y1…` (or `x1…`) are numbered from 1 as in `X_f`; a polynomial
/// mentioning `y0` is taken as 0-based.
fn parse_xf_poly(s: &str, vars: Option<usize>) -> Result<Polynomial, String> {
    const WIDE: usize = 64;
    let p = parse_poly_with(s, WIDE, &subadjoint_core::arith::default_resolver).map_err(|e| format!("{e} in '{s}'"))?;
    let used: Vec<usize> = (0..WIDE).filter(|&i| p.terms().any(|(m, _)| m.exponents()[i] > 0)).collect();
    let (lo, hi) = match (used.first(), used.last()) {
        (Some(&lo), Some(&hi)) => (lo, hi),
        _ => return Err("f must be a nonconstant homogeneous polynomial".into()),
    };
    let shift = usize::from(lo >= 1);
    let nvars = hi + 1 - shift;
    let nvars = match vars {
        Some(m) if m < nvars => return Err(format!("f uses {nvars} variables but --vars is {m}")),
        Some(m) => m,
        None => nvars,
    };
    let images: Vec<Polynomial> = (0..WIDE)
        .map(|i| if i >= shift && i - shift < nvars { Polynomial::var(nvars, i - shift) } else { Polynomial::zero(nvars) })
        .collect();
    Ok(p.substitute(&images))
}

fn xf(cli: &Cli, s: &str, vars: Option<usize>) -> Result<Report, String> {
    let mut r = Report::new("xf", json!({"f": s, "vars": vars, "seed": cli.seed, "budget": cli.budget}));
    let f = parse_xf_poly(s, vars)?;
    let e = r.time("construct", || catalog::x_f(&f)).map_err(|e| e.to_string())?;
    let v = &e.presentation;
    let mut sampler = RationalSampler::new(cli.seed);
    let p = v.parametrization().expect("X_f carries its parametrization");
    let mut tangent = Vec::new();
    for _ in 0..5 {
        let params = sampler.next_vector(p.nparams());
        tangent.push(legendrian::tangent_point_check(v, &params).map_err(|e| e.to_string())?);
    }
    let mut result = verdict_with_fallback(&mut r, v, cli.budget)?;
    result["n"] = json!(v.half_dim());
    result["equations"] = json!(v.generators().iter().map(catalog::display_in_y).collect::<Vec<_>>());
    result["tangent_checks"] = json!(tangent);
    if result["degenerate"] == json!(true) {
        result["note"] = json!("contained in a hyperplane");
    }
    if tangent.iter().any(|t| !t) {
        r.status = Status::Negative;
    }
    r.result = result;
    Ok(r)
}
