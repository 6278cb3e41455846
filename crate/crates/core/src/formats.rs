//! APX and TGF readers and writers.
//!
//! APX: `arg(a).` and `att(a,b).` statements, several per line allowed,
//! `%` starts a comment. TGF: one argument per line, a `#` line, then one
//! `attacker target` pair per line.

use std::collections::HashMap;
use std::fmt::Write;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::framework::ArgumentationFramework;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Apx,
    Tgf,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "apx" => Ok(Format::Apx),
            "tgf" => Ok(Format::Tgf),
            other => Err(format!("unknown format `{other}` (expected apx or tgf)")),
        }
    }
}

pub fn parse(text: &str, format: Format) -> Result<ArgumentationFramework> {
    match format {
        Format::Apx => parse_apx(text),
        Format::Tgf => parse_tgf(text),
    }
}

pub fn write(af: &ArgumentationFramework, format: Format) -> String {
    match format {
        Format::Apx => write_apx(af),
        Format::Tgf => write_tgf(af),
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Collects declarations and attacks with their line numbers, then resolves.
#[derive(Default)]
struct Collector {
    names: Vec<String>,
    index: HashMap<String, usize>,
    attacks: Vec<(usize, String, String)>,
}

impl Collector {
    fn declare(&mut self, line: usize, name: &str) -> Result<()> {
        if self.index.contains_key(name) {
            return Err(parse_err(line, format!("duplicate argument `{name}`")));
        }
        self.index.insert(name.to_string(), self.names.len());
        self.names.push(name.to_string());
        Ok(())
    }

    fn finish(self) -> Result<ArgumentationFramework> {
        let mut pairs = Vec::with_capacity(self.attacks.len());
        for (line, a, b) in &self.attacks {
            let lookup = |n: &String| {
                self.index
                    .get(n)
                    .copied()
                    .ok_or_else(|| parse_err(*line, format!("attack uses undeclared argument `{n}`")))
            };
            pairs.push((lookup(a)?, lookup(b)?));
        }
        ArgumentationFramework::new(self.names, pairs)
    }
}

fn valid_name(s: &str) -> bool {
    !s.is_empty() && !s.chars().any(|c| c.is_whitespace() || matches!(c, '(' | ')' | ',' | '%'))
}

pub fn parse_apx(text: &str) -> Result<ArgumentationFramework> {
    let mut c = Collector::default();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let mut rest = raw.split('%').next().unwrap_or("").trim();
        while !rest.is_empty() {
            let (head, tail) = rest
                .split_once('(')
                .ok_or_else(|| parse_err(line, format!("malformed statement `{rest}`")))?;
            let (inner, after) = tail
                .split_once(')')
                .ok_or_else(|| parse_err(line, "missing `)`"))?;
            let after = after.trim_start();
            let after = after
                .strip_prefix('.')
                .ok_or_else(|| parse_err(line, "missing `.` after statement"))?;
            match head.trim() {
                "arg" => {
                    let name = inner.trim();
                    if !valid_name(name) {
                        return Err(parse_err(line, format!("invalid argument name `{name}`")));
                    }
                    c.declare(line, name)?;
                }
                "att" => {
                    let (a, b) = inner
                        .split_once(',')
                        .ok_or_else(|| parse_err(line, "att needs two arguments"))?;
                    let (a, b) = (a.trim(), b.trim());
                    if !valid_name(a) || !valid_name(b) {
                        return Err(parse_err(line, format!("malformed attack `{inner}`")));
                    }
                    c.attacks.push((line, a.to_string(), b.to_string()));
                }
                other => return Err(parse_err(line, format!("unknown predicate `{other}`"))),
            }
            rest = after.trim_start();
        }
    }
    c.finish()
}

pub fn parse_tgf(text: &str) -> Result<ArgumentationFramework> {
    let mut c = Collector::default();
    let mut in_edges = false;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let s = raw.trim();
        if s.is_empty() {
            continue;
        }
        if s == "#" {
            if in_edges {
                return Err(parse_err(line, "second `#` separator"));
            }
            in_edges = true;
            continue;
        }
        let mut tokens = s.split_whitespace();
        let first = tokens.next().expect("non-empty line");
        if in_edges {
            let second = tokens
                .next()
                .ok_or_else(|| parse_err(line, "edge line needs two arguments"))?;
            c.attacks.push((line, first.to_string(), second.to_string()));
        } else {
            c.declare(line, first)?;
        }
    }
    c.finish()
}

pub fn write_apx(af: &ArgumentationFramework) -> String {
    let mut s = String::new();
    for name in af.names() {
        writeln!(s, "arg({name}).").unwrap();
    }
    for &(a, b) in af.attacks() {
        writeln!(s, "att({},{}).", af.name(a), af.name(b)).unwrap();
    }
    s
}

pub fn write_tgf(af: &ArgumentationFramework) -> String {
    let mut s = String::new();
    for name in af.names() {
        writeln!(s, "{name}").unwrap();
    }
    s.push_str("#\n");
    for &(a, b) in af.attacks() {
        writeln!(s, "{} {}", af.name(a), af.name(b)).unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::framework::fixtures::surfing;

    #[test]
    fn apx_self_attack() {
        let f = parse_apx("arg(a).\natt(a,a).").unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f.attacks(), &[(0, 0)]);
    }

    #[test]
    fn apx_comments_whitespace_and_several_statements() {
        let f = parse_apx("% header\n arg( a ). arg(b).  % two\natt(a , b).\n\n").unwrap();
        assert_eq!(f.names(), &["a", "b"]);
        assert_eq!(f.attacks(), &[(0, 1)]);
    }

    #[test]
    fn apx_errors_carry_line_numbers() {
        let undeclared = parse_apx("att(a,b).").unwrap_err();
        assert!(matches!(undeclared, Error::Parse { line: 1, .. }), "{undeclared}");
        let dup = parse_apx("arg(a).\narg(a).").unwrap_err();
        assert!(matches!(dup, Error::Parse { line: 2, .. }));
        let bad = parse_apx("arg(a).\n\nfoo\n").unwrap_err();
        assert!(matches!(bad, Error::Parse { line: 3, .. }));
        assert!(matches!(parse_apx("arg(a)").unwrap_err(), Error::Parse { line: 1, .. }));
    }

    #[test]
    fn tgf_cases() {
        let f = parse_tgf("a\n#\na a\n").unwrap();
        assert_eq!((f.len(), f.attacks().len()), (1, 1));
        assert!(matches!(parse_tgf("#\na b\n").unwrap_err(), Error::Parse { line: 2, .. }));
        assert!(matches!(parse_tgf("").unwrap_err(), Error::EmptyFramework));
        let e = parse_tgf("a\n#\na b\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
        assert!(matches!(parse_tgf("a\na\n").unwrap_err(), Error::Parse { line: 2, .. }));
    }

    #[test]
    fn round_trips() {
        let f = surfing();
        assert_eq!(f.attacks().len(), 10);
        for fmt in [Format::Apx, Format::Tgf] {
            let g = parse(&write(&f, fmt), fmt).unwrap();
            assert_eq!(g, f);
        }
    }
}
