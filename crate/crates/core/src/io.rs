//! Text format for monomial ideals.
//!
//! ```text
//! vars: x y z t
//! x*y
//! y^2
//! z*t
//! ```
//!
//! Blank lines and `#` comments are ignored. `1` denotes the unit monomial.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// A parsed ideal file: variable names plus the ideal they index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealFile {
    pub names: Vec<String>,
    pub ideal: MonomialIdeal,
}

impl IdealFile {
    pub fn new(names: Vec<String>, ideal: MonomialIdeal) -> Self {
        debug_assert_eq!(names.len(), ideal.num_vars());
        Self { names, ideal }
    }

    /// Names `x1 .. xn`.
    pub fn default_names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("x{i}")).collect()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut names: Option<Vec<String>> = None;
        let mut gens = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("vars:") {
                if names.is_some() {
                    return Err(parse_err(line_no, "duplicate vars line"));
                }
                let list: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                for (i, n) in list.iter().enumerate() {
                    if n.contains(['*', '^']) || n == "1" {
                        return Err(parse_err(line_no, format!("invalid variable name {n:?}")));
                    }
                    if list[..i].contains(n) {
                        return Err(parse_err(line_no, format!("duplicate variable name {n:?}")));
                    }
                }
                names = Some(list);
                continue;
            }
            let Some(names) = names.as_ref() else {
                return Err(parse_err(line_no, "generator before vars line"));
            };
            gens.push(parse_monomial(line, names, line_no)?);
        }
        let names = names.ok_or_else(|| parse_err(1, "missing vars line"))?;
        let ideal = MonomialIdeal::new(names.len(), gens)?;
        Ok(Self { names, ideal })
    }

    /// Canonical text form.
    pub fn to_text(&self) -> String {
        let mut out = format!("vars: {}\n", self.names.join(" "));
        for g in self.ideal.generators() {
            out.push_str(&format_monomial(g, &self.names));
            out.push('\n');
        }
        out
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Parses `x^2*y*z` against the given variable names.
pub fn parse_monomial(text: &str, names: &[String], line: usize) -> Result<Monomial> {
    let mut exps = vec![0u32; names.len()];
    let text = text.trim();
    if text == "1" {
        return Ok(Monomial::new(exps));
    }
    for factor in text.split('*') {
        let factor = factor.trim();
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => {
                let e: u32 = e
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(line, format!("bad exponent in {factor:?}")))?;
                (n.trim(), e)
            }
            None => (factor, 1),
        };
        let var = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| parse_err(line, format!("unknown variable {name:?}")))?;
        exps[var] += exp;
    }
    Ok(Monomial::new(exps))
}

/// Formats a monomial as `x^2*y`, or `1` for the unit.
pub fn format_monomial(m: &Monomial, names: &[String]) -> String {
    let parts: Vec<String> = m
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{e}", names[i]) })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Names of polarized slot variables: `x_1, x_2, ...` for base name `x`.
pub fn polarized_names(names: &[String], caps: &[u32]) -> Vec<String> {
    names
        .iter()
        .zip(caps)
        .flat_map(|(n, &c)| (1..=c).map(move |l| format!("{n}_{l}")))
        .collect()
}
