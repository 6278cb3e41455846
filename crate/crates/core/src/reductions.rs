//! CNF formulas and translations into argumentation frameworks whose
//! credulous (projected) counts equal model counts of the formula.
//!
//! Naming: `x<i>` and `nx<i>` for the literals of variable `i`, `C<j>` for
//! clause `j`, `s<i>` for the guard of variable `i`, plus `t`, `nt`, `b`.

use std::collections::HashSet;

use crate::argset::ArgSet;
use crate::error::{Error, Result};
use crate::framework::ArgumentationFramework;

/// Conjunction of clauses over variables `1..=vars`; literal `-v` is the
/// negation of `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    vars: usize,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    /// Validates literals and removes duplicate literals within a clause.
    pub fn new(vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        let mut out = Vec::with_capacity(clauses.len());
        for (j, clause) in clauses.into_iter().enumerate() {
            if clause.is_empty() {
                return Err(Error::InvalidCnf(format!("clause {} is empty", j + 1)));
            }
            let mut seen = HashSet::new();
            let mut lits = Vec::with_capacity(clause.len());
            for lit in clause {
                let v = lit.unsigned_abs() as usize;
                if lit == 0 || v > vars {
                    return Err(Error::InvalidCnf(format!(
                        "clause {}: literal {lit} outside 1..={vars}",
                        j + 1
                    )));
                }
                if seen.insert(lit) {
                    lits.push(lit);
                }
            }
            out.push(lits);
        }
        Ok(CnfFormula { vars, clauses: out })
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// Bit `v-1` of `assignment` is the value of variable `v`.
    pub fn satisfied_by(&self, assignment: u64) -> bool {
        self.clauses.iter().all(|c| {
            c.iter().any(|&l| {
                let bit = assignment >> (l.unsigned_abs() - 1) & 1 == 1;
                bit == (l > 0)
            })
        })
    }

    /// Model count by enumerating all assignments.
    pub fn count_models(&self) -> u64 {
        assert!(self.vars < 40, "brute-force model counting limited to 39 variables");
        (0..1u64 << self.vars).filter(|&a| self.satisfied_by(a)).count() as u64
    }

    /// Number of assignments to `projected` (1-based variables) that extend
    /// to a model.
    pub fn count_projected_models(&self, projected: &[usize]) -> u64 {
        assert!(self.vars < 40, "brute-force model counting limited to 39 variables");
        let mask: u64 = projected.iter().fold(0, |m, &v| m | 1 << (v - 1));
        let seen: HashSet<u64> = (0..1u64 << self.vars)
            .filter(|&a| self.satisfied_by(a))
            .map(|a| a & mask)
            .collect();
        seen.len() as u64
    }
}

/// DIMACS input with an optional `c ind` projection line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dimacs {
    pub formula: CnfFormula,
    pub projected: Option<Vec<usize>>,
}

pub fn parse_dimacs(text: &str) -> Result<Dimacs> {
    let perr = |line: usize, message: String| Error::Parse { line, message };
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    let mut projected: Option<Vec<usize>> = None;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let l = raw.trim();
        if l.is_empty() || l == "%" {
            continue;
        }
        if let Some(rest) = l.strip_prefix('c') {
            let rest = rest.trim_start();
            if let Some(ind) = rest.strip_prefix("ind") {
                let list = projected.get_or_insert_with(Vec::new);
                for tok in ind.split_whitespace() {
                    let v: usize = tok
                        .parse()
                        .map_err(|_| perr(line, format!("bad projected variable `{tok}`")))?;
                    if v != 0 {
                        list.push(v);
                    }
                }
            }
            continue;
        }
        if let Some(rest) = l.strip_prefix("p ") {
            let toks: Vec<&str> = rest.split_whitespace().collect();
            if toks.len() != 3 || toks[0] != "cnf" {
                return Err(perr(line, "expected `p cnf <vars> <clauses>`".into()));
            }
            let nums: Vec<usize> = toks[1..]
                .iter()
                .map(|t| t.parse().map_err(|_| perr(line, format!("bad number `{t}`"))))
                .collect::<Result<_>>()?;
            header = Some((nums[0], nums[1]));
            continue;
        }
        if header.is_none() {
            return Err(perr(line, "clause before `p cnf` header".into()));
        }
        for tok in l.split_whitespace() {
            let lit: i32 = tok
                .parse()
                .map_err(|_| perr(line, format!("bad literal `{tok}`")))?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(lit);
            }
        }
    }
    let (vars, declared) = header.ok_or_else(|| perr(0, "missing `p cnf` header".into()))?;
    if !current.is_empty() {
        clauses.push(current);
    }
    if clauses.len() != declared {
        return Err(perr(
            0,
            format!("header declares {declared} clauses, found {}", clauses.len()),
        ));
    }
    if let Some(p) = &projected {
        if let Some(&v) = p.iter().find(|&&v| v > vars) {
            return Err(Error::InvalidCnf(format!("projected variable {v} outside 1..={vars}")));
        }
    }
    Ok(Dimacs {
        formula: CnfFormula::new(vars, clauses)?,
        projected,
    })
}

/// A generated framework together with the argument to query and the
/// projection set (all arguments unless stated otherwise).
#[derive(Debug, Clone)]
pub struct Reduced {
    pub framework: ArgumentationFramework,
    pub target: String,
    pub projection: Vec<String>,
}

impl Reduced {
    pub fn target_index(&self) -> usize {
        self.framework.index_of(&self.target).expect("target exists")
    }

    pub fn projection_set(&self) -> ArgSet {
        let names: Vec<&str> = self.projection.iter().map(String::as_str).collect();
        self.framework.set_of(&names).expect("projection exists")
    }
}

fn lit_name(lit: i32) -> String {
    if lit > 0 {
        format!("x{lit}")
    } else {
        format!("nx{}", -lit)
    }
}

struct Builder {
    names: Vec<String>,
    attacks: Vec<(String, String)>,
}

impl Builder {
    fn arg(&mut self, name: impl Into<String>) {
        self.names.push(name.into());
    }

    fn att(&mut self, a: impl Into<String>, b: impl Into<String>) {
        self.attacks.push((a.into(), b.into()));
    }

    fn literals_and_clauses(&mut self, phi: &CnfFormula) {
        for i in 1..=phi.vars {
            self.arg(format!("x{i}"));
            self.arg(format!("nx{i}"));
            self.att(format!("x{i}"), format!("nx{i}"));
            self.att(format!("nx{i}"), format!("x{i}"));
        }
        for (j, clause) in phi.clauses.iter().enumerate() {
            let c = format!("C{}", j + 1);
            self.arg(c.clone());
            for &lit in clause {
                self.att(lit_name(lit), c.clone());
            }
            self.att(c, "t");
        }
    }

    fn finish(self) -> ArgumentationFramework {
        let attacks: Vec<(&str, &str)> = self
            .attacks
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        let names: Vec<&str> = self.names.iter().map(String::as_str).collect();
        ArgumentationFramework::from_names(&names, &attacks).expect("generated framework is valid")
    }
}

fn all_names(af: &ArgumentationFramework) -> Vec<String> {
    af.names().to_vec()
}

/// Stable extensions containing `t` correspond one-to-one to models.
pub fn cnf_to_af_stable(phi: &CnfFormula) -> Reduced {
    let mut b = Builder {
        names: Vec::new(),
        attacks: Vec::new(),
    };
    b.literals_and_clauses(phi);
    b.arg("t");
    b.arg("nt");
    b.att("t", "nt");
    b.att("nt", "t");
    let framework = b.finish();
    Reduced {
        projection: all_names(&framework),
        framework,
        target: "t".into(),
    }
}

/// Adds guards `s<i>` attacking `t` that only a literal of variable `i`
/// can defend against, so admissible extensions containing `t` assign
/// every variable.
pub fn cnf_to_af_admissible(phi: &CnfFormula) -> Reduced {
    let mut b = Builder {
        names: Vec::new(),
        attacks: Vec::new(),
    };
    b.literals_and_clauses(phi);
    b.arg("t");
    b.arg("nt");
    b.att("t", "nt");
    b.att("nt", "t");
    for i in 1..=phi.vars {
        b.arg(format!("s{i}"));
        b.att(format!("s{i}"), "t");
        b.att(format!("x{i}"), format!("s{i}"));
        b.att(format!("nx{i}"), format!("s{i}"));
    }
    let framework = b.finish();
    Reduced {
        projection: all_names(&framework),
        framework,
        target: "t".into(),
    }
}

/// For `∃Y ψ(X, Y)` with `X = projected`: the number of X-assignments that
/// extend to a model equals the projected credulous count of `t` onto the
/// literal arguments of X, for admissible, stable and complete semantics.
pub fn sigma1_to_projected(psi: &CnfFormula, projected: &[usize]) -> Result<Reduced> {
    if let Some(&v) = projected.iter().find(|&&v| v == 0 || v > psi.vars) {
        return Err(Error::InvalidCnf(format!(
            "projected variable {v} outside 1..={}",
            psi.vars
        )));
    }
    let mut b = Builder {
        names: Vec::new(),
        attacks: Vec::new(),
    };
    b.literals_and_clauses(psi);
    for name in ["t", "nt", "b"] {
        b.arg(name);
    }
    b.att("b", "b");
    b.att("t", "nt");
    b.att("nt", "t");
    b.att("t", "b");
    for i in 1..=psi.vars {
        b.arg(format!("s{i}"));
        b.att(format!("s{i}"), "t");
        b.att(format!("x{i}"), format!("s{i}"));
        b.att(format!("nx{i}"), format!("s{i}"));
    }
    let framework = b.finish();
    let mut xs: Vec<usize> = projected.to_vec();
    xs.sort_unstable();
    xs.dedup();
    let projection = xs
        .iter()
        .flat_map(|v| [format!("x{v}"), format!("nx{v}")])
        .collect();
    Ok(Reduced {
        framework,
        target: "t".into(),
        projection,
    })
}
