//! Line-oriented system files.
//!
//! ```text
//! components: 3
//! levels: 3
//! states: 3              # or `states i: m_i` per component
//! p 1: 0.1 0.2 0.3 0.4   # or `p: ...` for every component
//! family: ms_k_of_n 3 2 2
//! ```
//!
//! Instead of a `family:` line, `paths j:` opens a block of minimal j-paths,
//! one state vector per line. Components are numbered from 1.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::reliability::probability::ProbabilityTable;
use crate::reliability::system::{SystemSource, SystemSpec};
use crate::scalar::{parse_rational_at, to_exact_string, Rational};

/// A parsed system file.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemFile {
    pub system: SystemSpec,
    pub probabilities: Option<ProbabilityTable<Rational>>,
}

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_u32(text: &str, line: usize) -> Result<u32> {
    text.parse().map_err(|_| perr(line, format!("not a non-negative integer: {text:?}")))
}

impl SystemFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut components: Option<usize> = None;
        let mut levels: Option<u32> = None;
        let mut uniform_states: Option<u32> = None;
        let mut states: Vec<(usize, u32, usize)> = Vec::new();
        let mut uniform_p: Option<Vec<Rational>> = None;
        let mut rows: Vec<(usize, Vec<Rational>, usize)> = Vec::new();
        let mut family: Option<SystemSource> = None;
        let mut paths: Vec<(u32, Vec<Vec<u32>>)> = Vec::new();
        let mut in_paths = false;

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let Some((key, value)) = content.split_once(':') else {
                if !in_paths {
                    return Err(perr(line, format!("expected `key: value`, found {content:?}")));
                }
                let v = content
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|t| !t.is_empty())
                    .map(|t| parse_u32(t, line))
                    .collect::<Result<Vec<u32>>>()?;
                paths.last_mut().expect("inside a block").1.push(v);
                continue;
            };
            in_paths = false;
            let value = value.trim();
            let mut key_parts = key.split_whitespace();
            let name = key_parts.next().unwrap_or("");
            let index = key_parts.next().map(|t| parse_u32(t, line)).transpose()?;
            if key_parts.next().is_some() {
                return Err(perr(line, format!("malformed key {key:?}")));
            }
            let component = |i: Option<u32>| -> Result<Option<usize>> {
                match i {
                    None => Ok(None),
                    Some(0) => Err(perr(line, "components are numbered from 1")),
                    Some(i) => Ok(Some(i as usize - 1)),
                }
            };
            match name {
                "components" => components = Some(parse_u32(value, line)? as usize),
                "levels" => levels = Some(parse_u32(value, line)?),
                "states" => match component(index)? {
                    None => uniform_states = Some(parse_u32(value, line)?),
                    Some(i) => states.push((i, parse_u32(value, line)?, line)),
                },
                "p" => {
                    let row = value
                        .split_whitespace()
                        .map(|t| parse_rational_at(t, line))
                        .collect::<Result<Vec<Rational>>>()?;
                    match component(index)? {
                        None => uniform_p = Some(row),
                        Some(i) => rows.push((i, row, line)),
                    }
                }
                "family" => {
                    let mut words = value.split_whitespace();
                    let kind = words.next().unwrap_or("");
                    let args = words.map(|w| parse_u32(w, line).map(|v| v as usize)).collect::<Result<Vec<usize>>>()?;
                    let one_arg = |args: &[usize]| -> Result<usize> {
                        match args {
                            [k] => Ok(*k),
                            _ => Err(perr(line, format!("family {kind} takes one argument"))),
                        }
                    };
                    family = Some(match kind {
                        "ms_k_of_n" => SystemSource::MsKOfN(args),
                        "flow" if args.is_empty() => SystemSource::Flow,
                        "consecutive" => SystemSource::Consecutive(one_arg(&args)?),
                        "binary_k_of_n" => SystemSource::BinaryKOfN(one_arg(&args)?),
                        _ => return Err(perr(line, format!("unknown family {value:?}"))),
                    });
                }
                "paths" => {
                    let j = index.ok_or_else(|| perr(line, "`paths` needs a level, e.g. `paths 1:`"))?;
                    if !value.is_empty() {
                        return Err(perr(line, "path vectors go on the following lines"));
                    }
                    paths.push((j, Vec::new()));
                    in_paths = true;
                }
                _ => return Err(perr(line, format!("unknown key {name:?}"))),
            }
        }

        let n = components.ok_or_else(|| perr(0, "missing `components:`"))?;
        let m = levels.ok_or_else(|| perr(0, "missing `levels:`"))?;
        let mut tops: Vec<Option<u32>> = vec![uniform_states; n];
        for (i, s, line) in states {
            *tops.get_mut(i).ok_or_else(|| perr(line, format!("component {} out of range", i + 1)))? = Some(s);
        }
        let tops: Vec<u32> = tops
            .into_iter()
            .enumerate()
            .map(|(i, t)| t.ok_or_else(|| perr(0, format!("missing states of component {}", i + 1))))
            .collect::<Result<_>>()?;

        let source = match (family, paths.is_empty()) {
            (Some(f), true) => f,
            (None, false) => {
                let mut blocks = vec![Vec::new(); m as usize];
                for (j, block) in paths {
                    if j == 0 || j > m {
                        return Err(Error::LevelOutOfRange { level: j, max: m });
                    }
                    blocks[j as usize - 1].extend(block);
                }
                SystemSource::Paths(blocks)
            }
            (Some(_), false) => return Err(perr(0, "give either `family:` or `paths` blocks, not both")),
            (None, true) => return Err(perr(0, "missing `family:` or `paths` blocks")),
        };
        let system = SystemSpec::new(tops, m, source)?;

        let probabilities = if uniform_p.is_none() && rows.is_empty() {
            None
        } else {
            let mut table: Vec<Option<Vec<Rational>>> = vec![uniform_p; n];
            for (i, row, line) in rows {
                *table.get_mut(i).ok_or_else(|| perr(line, format!("component {} out of range", i + 1)))? = Some(row);
            }
            let table: Vec<Vec<Rational>> = table
                .into_iter()
                .enumerate()
                .map(|(i, r)| r.ok_or_else(|| perr(0, format!("missing probabilities of component {}", i + 1))))
                .collect::<Result<_>>()?;
            let table = ProbabilityTable::new(table)?;
            table.check_states(system.states())?;
            Some(table)
        };
        Ok(Self { system, probabilities })
    }

    /// Canonical text; parsing it gives back an equal value.
    pub fn to_text(&self) -> String {
        let s = &self.system;
        let mut out = String::new();
        writeln!(out, "components: {}", s.num_components()).unwrap();
        writeln!(out, "levels: {}", s.levels()).unwrap();
        let tops = s.states();
        if tops.iter().all(|&t| t == tops[0]) {
            writeln!(out, "states: {}", tops[0]).unwrap();
        } else {
            for (i, t) in tops.iter().enumerate() {
                writeln!(out, "states {}: {t}", i + 1).unwrap();
            }
        }
        if let Some(p) = &self.probabilities {
            let fmt = |row: &[Rational]| row.iter().map(to_exact_string).collect::<Vec<_>>().join(" ");
            let rows = p.points();
            if rows.iter().all(|r| r == &rows[0]) {
                writeln!(out, "p: {}", fmt(&rows[0])).unwrap();
            } else {
                for (i, r) in rows.iter().enumerate() {
                    writeln!(out, "p {}: {}", i + 1, fmt(r)).unwrap();
                }
            }
        }
        let join = |v: &[usize]| v.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(" ");
        match s.source() {
            SystemSource::MsKOfN(k) => writeln!(out, "family: ms_k_of_n {}", join(k)).unwrap(),
            SystemSource::Flow => writeln!(out, "family: flow").unwrap(),
            SystemSource::Consecutive(k) => writeln!(out, "family: consecutive {k}").unwrap(),
            SystemSource::BinaryKOfN(k) => writeln!(out, "family: binary_k_of_n {k}").unwrap(),
            SystemSource::Paths(blocks) => {
                for (j, block) in blocks.iter().enumerate() {
                    writeln!(out, "paths {}:", j + 1).unwrap();
                    for p in block {
                        let v: Vec<String> = p.iter().map(|e| e.to_string()).collect();
                        writeln!(out, "{}", v.join(" ")).unwrap();
                    }
                }
            }
        }
        out
    }
}
