//! The `check` input format:
//!
//! ```text
//! # comment
//! n=2
//! form=standard
//! x2^2 - x1*x3
//! x0*x2 - x1^2
//! ```
//!
//! `form=` is optional and takes `standard`, a path to a JSON matrix, or the
//! JSON matrix itself (an array of rows of rational strings).

use std::fmt;
use std::path::Path;

use serde_json::Value;
use subadjoint_core::arith::{parse_poly, parse_rational, Polynomial, Rational};
use subadjoint_core::catalog::CatalogEntry;
use subadjoint_core::legendrian::VarietyPresentation;
use subadjoint_core::symplectic::{standard_form, SymplecticForm};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for InputError {}

#[derive(Debug, Clone)]
pub struct CheckFile {
    pub name: String,
    pub half_dim: usize,
    pub form: SymplecticForm,
    pub form_spec: String,
    pub generators: Vec<Polynomial>,
}

impl CheckFile {
    pub fn nvars(&self) -> usize {
        2 * self.half_dim
    }

    pub fn presentation(&self) -> Result<VarietyPresentation, String> {
        VarietyPresentation::new(self.name.clone(), self.form.clone(), self.generators.clone()).map_err(|e| e.to_string())
    }

    pub fn parse_poly(&self, text: &str) -> Result<Polynomial, String> {
        parse_poly(text, self.nvars()).map_err(|e| format!("{e} in '{text}'"))
    }
}

fn err(line: usize, column: usize, message: impl Into<String>) -> InputError {
    InputError { line, column, message: message.into() }
}

pub fn parse_form_json(text: &str) -> Result<SymplecticForm, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| format!("form is not valid JSON: {e}"))?;
    let rows = v.as_array().ok_or("form must be an array of rows")?;
    let mut m: Vec<Vec<Rational>> = Vec::new();
    for row in rows {
        let row = row.as_array().ok_or("form rows must be arrays")?;
        let mut r = Vec::new();
        for x in row {
            let s = match x {
                Value::String(s) => s.clone(),
                Value::Number(n) if n.is_i64() => n.to_string(),
                _ => return Err(format!("form entry {x} is not a rational string")),
            };
            r.push(parse_rational(s.trim()).ok_or_else(|| format!("form entry '{s}' is not a rational"))?);
        }
        m.push(r);
    }
    SymplecticForm::new(m).map_err(|e| e.to_string())
}

pub fn form_to_json(form: &SymplecticForm) -> Value {
    Value::Array(form.matrix().iter().map(|row| Value::Array(row.iter().map(|x| Value::String(x.to_string())).collect())).collect())
}

/// Resolves a `form=` value or `--form` flag.
pub fn resolve_form(spec: &str, half_dim: usize, base: Option<&Path>) -> Result<SymplecticForm, String> {
    let spec = spec.trim();
    if spec == "standard" {
        return standard_form(half_dim).map_err(|e| e.to_string());
    }
    let form = if spec.starts_with('[') {
        parse_form_json(spec)?
    } else {
        let path = match base {
            Some(b) if Path::new(spec).is_relative() => b.join(spec),
            _ => Path::new(spec).to_path_buf(),
        };
        let text = std::fs::read_to_string(&path).map_err(|e| format!("cannot read form file {}: {e}", path.display()))?;
        parse_form_json(&text)?
    };
    if form.dim() != 2 * half_dim {
        return Err(format!("form has dimension {}, expected {}", form.dim(), 2 * half_dim));
    }
    Ok(form)
}

pub fn parse_check_file(text: &str, base: Option<&Path>, form_override: Option<&str>) -> Result<CheckFile, InputError> {
    let mut name = String::from("input");
    let mut half_dim: Option<usize> = None;
    let mut form_spec: Option<(usize, String)> = None;
    let mut generators = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let indent = raw.len() - raw.trim_start().len();
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(c) = line.strip_prefix('#') {
            if let Some(n) = c.trim().strip_prefix("name:") {
                name = n.trim().to_owned();
            }
            continue;
        }
        if let Some(v) = line.strip_prefix("n=") {
            if half_dim.is_some() {
                return Err(err(line_no, indent + 1, "duplicate n= header"));
            }
            let n: usize =
                v.trim().parse().map_err(|_| err(line_no, indent + 3, format!("n must be a positive integer, got '{}'", v.trim())))?;
            if n == 0 {
                return Err(err(line_no, indent + 3, "n must be positive"));
            }
            half_dim = Some(n);
            continue;
        }
        if let Some(v) = line.strip_prefix("form=") {
            if !generators.is_empty() {
                return Err(err(line_no, indent + 1, "form= must precede the generators"));
            }
            form_spec = Some((line_no, v.to_owned()));
            continue;
        }
        let n = half_dim.ok_or_else(|| err(line_no, indent + 1, "expected header n=<n> before the generators"))?;
        let p = parse_poly(line, 2 * n).map_err(|e| err(line_no, indent + e.pos + 1, e.kind.to_string()))?;
        generators.push(p);
    }
    let half_dim = half_dim.ok_or_else(|| err(1, 1, "missing header n=<n>"))?;
    let (form_line, spec) = match (form_override, form_spec) {
        (Some(o), _) => (0, o.to_owned()),
        (None, Some((l, s))) => (l, s),
        (None, None) => (0, "standard".to_owned()),
    };
    let form = resolve_form(&spec, half_dim, base).map_err(|m| err(form_line, 6, m))?;
    Ok(CheckFile { name, half_dim, form, form_spec: spec.trim().to_owned(), generators })
}

/// A catalog entry in the `check` input format.
pub fn render_check_file(entry: &CatalogEntry) -> String {
    let v = &entry.presentation;
    let mut out = format!("# name: {}\n", v.name());
    if let Some(a) = &v.expected_algebra {
        out.push_str(&format!("# algebra: {a}\n"));
    }
    if !entry.provenance_note.is_empty() {
        for l in entry.provenance_note.lines() {
            out.push_str(&format!("# {l}\n"));
        }
    }
    out.push_str(&format!("n={}\n", v.half_dim()));
    if v.form().is_standard() {
        out.push_str("form=standard\n");
    } else {
        out.push_str(&format!("form={}\n", form_to_json(v.form())));
    }
    for g in v.generators() {
        out.push_str(&format!("{g}\n"));
    }
    out
}
