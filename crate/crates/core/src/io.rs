//! Line-based group files and the corpus manifest.
//!
//! ```text
//! # comment
//! degree 7
//! order 168
//! gen (1 2 3 4 5 6 7)
//! gen (2 3)(4 7)
//! ```
//!
//! Manifest lines have the form
//! `case <name> group=<file> subgroup=<file> pi=<p1,p2,...>`; paths are
//! relative to the manifest's directory and an empty `pi=` marks a pair that
//! is not claimed to be Hall.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{PermutationGroup, Subgroup};
use crate::perm::Permutation;
use crate::structure::PrimeSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFile {
    pub degree: usize,
    /// Optional declared order, checked when the group is built.
    pub order: Option<usize>,
    pub generators: Vec<Permutation>,
}

fn parse_error(path: &str, line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        path: path.to_string(),
        line,
        message: message.into(),
    }
}

impl GroupFile {
    /// `origin` only labels error messages.
    pub fn parse(text: &str, origin: &str) -> Result<Self> {
        let mut degree = None;
        let mut order = None;
        let mut generators = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let lineno = k + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (keyword, rest) = line
                .split_once(char::is_whitespace)
                .map(|(a, b)| (a, b.trim()))
                .unwrap_or((line, ""));
            match keyword {
                "degree" => {
                    if degree.is_some() {
                        return Err(parse_error(origin, lineno, "duplicate degree line"));
                    }
                    let n: usize = rest
                        .parse()
                        .map_err(|_| parse_error(origin, lineno, format!("bad degree {rest:?}")))?;
                    if n == 0 {
                        return Err(parse_error(origin, lineno, "degree must be positive"));
                    }
                    degree = Some(n);
                }
                "order" => {
                    let n: usize = rest
                        .parse()
                        .map_err(|_| parse_error(origin, lineno, format!("bad order {rest:?}")))?;
                    order = Some(n);
                }
                "gen" => {
                    let n = degree
                        .ok_or_else(|| parse_error(origin, lineno, "gen before degree"))?;
                    let p = Permutation::parse_cycles(n, rest)
                        .map_err(|e| parse_error(origin, lineno, e.to_string()))?;
                    generators.push(p);
                }
                other => {
                    return Err(parse_error(
                        origin,
                        lineno,
                        format!("unknown keyword {other:?}"),
                    ))
                }
            }
        }
        let degree = degree.ok_or_else(|| parse_error(origin, 0, "missing degree line"))?;
        Ok(GroupFile {
            degree,
            order,
            generators,
        })
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = crate::error::read_file(path)?;
        Self::parse(&text, &path.display().to_string())
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("degree {}\n", self.degree);
        if let Some(n) = self.order {
            let _ = writeln!(out, "order {n}");
        }
        for g in &self.generators {
            let _ = writeln!(out, "gen {g}");
        }
        out
    }

    pub fn build(&self, cap: usize) -> Result<Arc<PermutationGroup>> {
        let g = PermutationGroup::generate(self.degree, &self.generators, cap)?;
        self.check_order(g.order())?;
        Ok(g)
    }

    fn check_order(&self, actual: usize) -> Result<()> {
        match self.order {
            Some(declared) if declared != actual => Err(Error::OrderMismatch { declared, actual }),
            _ => Ok(()),
        }
    }

    /// Interprets this file as a subgroup of `group`; the degree must match.
    pub fn subgroup_of(&self, group: &Arc<PermutationGroup>, origin: &str) -> Result<Subgroup> {
        if self.degree != group.degree() {
            return Err(parse_error(
                origin,
                0,
                format!(
                    "subgroup degree {} does not match group degree {}",
                    self.degree,
                    group.degree()
                ),
            ));
        }
        group
            .subgroup_from_perms(&self.generators)
            .map_err(|e| match e {
                Error::ElementNotInAmbient(_) => Error::NotSubgroup,
                other => other,
            })
            .and_then(|h| self.check_order(h.order()).map(|_| h))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseEntry {
    pub name: String,
    pub group: PathBuf,
    pub subgroup: PathBuf,
    /// `None` for pairs that are not declared Hall.
    pub pi: Option<PrimeSet>,
}

pub fn parse_manifest(text: &str, base: &Path, origin: &str) -> Result<Vec<CaseEntry>> {
    let mut cases = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let lineno = k + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        if words.next() != Some("case") {
            return Err(parse_error(origin, lineno, "expected `case`"));
        }
        let name = words
            .next()
            .ok_or_else(|| parse_error(origin, lineno, "missing case name"))?
            .to_string();
        let (mut group, mut subgroup, mut pi) = (None, None, None);
        for word in words {
            let (key, value) = word
                .split_once('=')
                .ok_or_else(|| parse_error(origin, lineno, format!("expected key=value, got {word:?}")))?;
            match key {
                "group" => group = Some(base.join(value)),
                "subgroup" => subgroup = Some(base.join(value)),
                "pi" => {
                    let set: PrimeSet = value
                        .parse()
                        .map_err(|e: Error| parse_error(origin, lineno, e.to_string()))?;
                    pi = Some(if set.is_empty() { None } else { Some(set) });
                }
                other => {
                    return Err(parse_error(origin, lineno, format!("unknown key {other:?}")))
                }
            }
        }
        cases.push(CaseEntry {
            name,
            group: group.ok_or_else(|| parse_error(origin, lineno, "missing group="))?,
            subgroup: subgroup.ok_or_else(|| parse_error(origin, lineno, "missing subgroup="))?,
            pi: pi.ok_or_else(|| parse_error(origin, lineno, "missing pi="))?,
        });
    }
    Ok(cases)
}

/// Reads `manifest.txt` from a corpus directory.
pub fn read_manifest(dir: &Path) -> Result<Vec<CaseEntry>> {
    let path = dir.join("manifest.txt");
    let text = crate::error::read_file(&path)?;
    parse_manifest(&text, dir, &path.display().to_string())
}
