//! Argumentation frameworks and the definition-level semantics predicates.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::argset::ArgSet;
use crate::error::{Error, Result};

/// Default limit on the number of arguments for the brute-force predicates
/// that quantify over every subset of the arguments.
pub const DEFAULT_ORACLE_CAP: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SemanticsKind {
    ConflictFree,
    Admissible,
    Complete,
    Preferred,
    SemiStable,
    Stable,
    Stage,
}

impl SemanticsKind {
    pub const ALL: [SemanticsKind; 7] = [
        SemanticsKind::ConflictFree,
        SemanticsKind::Admissible,
        SemanticsKind::Complete,
        SemanticsKind::Preferred,
        SemanticsKind::SemiStable,
        SemanticsKind::Stable,
        SemanticsKind::Stage,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SemanticsKind::ConflictFree => "conflict-free",
            SemanticsKind::Admissible => "admissible",
            SemanticsKind::Complete => "complete",
            SemanticsKind::Preferred => "preferred",
            SemanticsKind::SemiStable => "semi-stable",
            SemanticsKind::Stable => "stable",
            SemanticsKind::Stage => "stage",
        }
    }

    /// Semantics whose definition quantifies over all other candidate sets.
    pub fn is_maximizing(self) -> bool {
        matches!(
            self,
            SemanticsKind::Preferred | SemanticsKind::SemiStable | SemanticsKind::Stage
        )
    }
}

impl fmt::Display for SemanticsKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SemanticsKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let kind = match s.to_ascii_lowercase().as_str() {
            "conflict-free" | "cf" | "conf" => SemanticsKind::ConflictFree,
            "admissible" | "adm" => SemanticsKind::Admissible,
            "complete" | "co" | "comp" => SemanticsKind::Complete,
            "preferred" | "pr" | "pref" => SemanticsKind::Preferred,
            "semi-stable" | "semistable" | "sst" | "semi" => SemanticsKind::SemiStable,
            "stable" | "stb" | "stab" => SemanticsKind::Stable,
            "stage" | "stg" | "stag" => SemanticsKind::Stage,
            other => return Err(format!("unknown semantics `{other}`")),
        };
        Ok(kind)
    }
}

/// A directed attack graph over named arguments.
///
/// Arguments are identified by their index in declaration order. The
/// framework is immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArgumentationFramework {
    names: Vec<String>,
    index: HashMap<String, usize>,
    attacks: Vec<(usize, usize)>,
    attackers: Vec<ArgSet>,
    targets: Vec<ArgSet>,
}

impl ArgumentationFramework {
    /// Builds a framework from argument names and index pairs `(attacker, target)`.
    /// Duplicate attacks are collapsed.
    pub fn new(names: Vec<String>, attacks: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::EmptyFramework);
        }
        let n = names.len();
        let mut index = HashMap::with_capacity(n);
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(Error::InvalidName(name.clone()));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateArgument(name.clone()));
            }
        }
        let mut attackers = vec![ArgSet::empty(n); n];
        let mut targets = vec![ArgSet::empty(n); n];
        let mut list = Vec::new();
        for (a, b) in attacks {
            if a >= n || b >= n {
                return Err(Error::Invariant(format!(
                    "attack ({a},{b}) references an argument outside 0..{n}"
                )));
            }
            if !targets[a].contains(b) {
                targets[a].insert(b);
                attackers[b].insert(a);
                list.push((a, b));
            }
        }
        list.sort_unstable();
        Ok(ArgumentationFramework {
            names,
            index,
            attacks: list,
            attackers,
            targets,
        })
    }

    /// Convenience constructor from string names.
    pub fn from_names(args: &[&str], attacks: &[(&str, &str)]) -> Result<Self> {
        let names: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        let lookup: HashMap<&str, usize> = args.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let mut pairs = Vec::with_capacity(attacks.len());
        for (a, b) in attacks {
            let ia = *lookup.get(a).ok_or_else(|| Error::UnknownArgument(a.to_string()))?;
            let ib = *lookup.get(b).ok_or_else(|| Error::UnknownArgument(b.to_string()))?;
            pairs.push((ia, ib));
        }
        Self::new(names, pairs)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownArgument(name.to_string()))
    }

    /// Attack pairs in sorted order.
    pub fn attacks(&self) -> &[(usize, usize)] {
        &self.attacks
    }

    pub fn attacks_arg(&self, a: usize, b: usize) -> bool {
        self.targets[a].contains(b)
    }

    pub fn attackers_of(&self, a: usize) -> &ArgSet {
        &self.attackers[a]
    }

    pub fn targets_of(&self, a: usize) -> &ArgSet {
        &self.targets[a]
    }

    pub fn empty_set(&self) -> ArgSet {
        ArgSet::empty(self.len())
    }

    pub fn full_set(&self) -> ArgSet {
        ArgSet::full(self.len())
    }

    pub fn set_of(&self, names: &[&str]) -> Result<ArgSet> {
        let mut s = self.empty_set();
        for n in names {
            s.insert(self.index_of(n)?);
        }
        Ok(s)
    }

    pub fn names_of(&self, set: &ArgSet) -> Vec<&str> {
        set.iter().map(|i| self.name(i)).collect()
    }

    /// Formats a set as `{a,b,c}` in argument order.
    pub fn format_set(&self, set: &ArgSet) -> String {
        format!("{{{}}}", self.names_of(set).join(","))
    }

    /// Members of `s` that attack some member of `t`.
    pub fn attackers_into(&self, s: &ArgSet, t: &ArgSet) -> ArgSet {
        let mut out = self.empty_set();
        for i in s.iter() {
            if self.targets[i].intersects(t) {
                out.insert(i);
            }
        }
        out
    }

    /// Members of `s` attacked by some member of `t`.
    pub fn attacked_from(&self, s: &ArgSet, t: &ArgSet) -> ArgSet {
        let mut out = self.empty_set();
        for i in s.iter() {
            if self.attackers[i].intersects(t) {
                out.insert(i);
            }
        }
        out
    }

    /// Everything attacked by some member of `s`.
    pub fn attacked_by(&self, s: &ArgSet) -> ArgSet {
        let mut out = self.empty_set();
        for i in s.iter() {
            out.union_with(&self.targets[i]);
        }
        out
    }

    /// `s` together with everything it attacks.
    pub fn range(&self, s: &ArgSet) -> ArgSet {
        let mut out = self.attacked_by(s);
        out.union_with(s);
        out
    }

    /// Arguments all of whose attackers are attacked by `s`.
    pub fn defended_set(&self, s: &ArgSet) -> ArgSet {
        let hit = self.attacked_by(s);
        let mut out = self.empty_set();
        for a in 0..self.len() {
            if self.attackers[a].is_subset(&hit) {
                out.insert(a);
            }
        }
        out
    }

    pub fn is_conflict_free(&self, s: &ArgSet) -> bool {
        s.iter().all(|i| self.targets[i].is_disjoint(s))
    }

    pub fn is_admissible(&self, s: &ArgSet) -> bool {
        self.is_conflict_free(s) && s.is_subset(&self.defended_set(s))
    }

    pub fn is_complete(&self, s: &ArgSet) -> bool {
        self.is_admissible(s) && self.defended_set(s) == *s
    }

    pub fn is_stable(&self, s: &ArgSet) -> bool {
        self.is_conflict_free(s) && self.range(s) == self.full_set()
    }

    /// Decides membership of `s` in the extensions of `sem`, following each
    /// definition directly. The maximizing semantics quantify over all
    /// subsets of the arguments and refuse frameworks above `cap`.
    pub fn is_extension_capped(&self, s: &ArgSet, sem: SemanticsKind, cap: usize) -> Result<bool> {
        if sem.is_maximizing() && self.len() > cap {
            return Err(Error::OracleCap {
                args: self.len(),
                cap,
            });
        }
        Ok(match sem {
            SemanticsKind::ConflictFree => self.is_conflict_free(s),
            SemanticsKind::Admissible => self.is_admissible(s),
            SemanticsKind::Complete => self.is_complete(s),
            SemanticsKind::Stable => self.is_stable(s),
            SemanticsKind::Preferred => {
                self.is_admissible(s)
                    && !self.any_subset(|t| t != s && s.is_subset(t) && self.is_admissible(t))
            }
            SemanticsKind::SemiStable => {
                self.is_admissible(s) && {
                    let r = self.range(s);
                    !self.any_subset(|t| {
                        let rt = self.range(t);
                        rt != r && r.is_subset(&rt) && self.is_admissible(t)
                    })
                }
            }
            SemanticsKind::Stage => {
                self.is_conflict_free(s) && {
                    let r = self.range(s);
                    !self.any_subset(|t| {
                        let rt = self.range(t);
                        rt != r && r.is_subset(&rt) && self.is_conflict_free(t)
                    })
                }
            }
        })
    }

    pub fn is_extension(&self, s: &ArgSet, sem: SemanticsKind) -> Result<bool> {
        self.is_extension_capped(s, sem, DEFAULT_ORACLE_CAP)
    }

    fn any_subset(&self, mut pred: impl FnMut(&ArgSet) -> bool) -> bool {
        let n = self.len();
        (0u64..(1u64 << n)).any(|m| pred(&ArgSet::from_mask(n, m)))
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::ArgumentationFramework;

    /// v isolated, w <-> x, w -> y, z -> z, z -> x.
    pub fn f1() -> ArgumentationFramework {
        ArgumentationFramework::from_names(
            &["v", "w", "x", "y", "z"],
            &[("w", "x"), ("x", "w"), ("w", "y"), ("z", "z"), ("z", "x")],
        )
        .unwrap()
    }

    /// Surfing vs. cocktails.
    pub fn surfing() -> ArgumentationFramework {
        ArgumentationFramework::from_names(
            &["d", "s", "e", "p", "c", "a", "r"],
            &[
                ("e", "s"),
                ("d", "p"),
                ("p", "e"),
                ("p", "c"),
                ("c", "p"),
                ("c", "e"),
                ("a", "r"),
                ("r", "a"),
                ("a", "d"),
                ("r", "s"),
            ],
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::{f1, surfing};
    use super::*;

    #[test]
    fn attackers_into_and_back() {
        let f = f1();
        let w = f.set_of(&["w"]).unwrap();
        let x = f.set_of(&["x"]).unwrap();
        assert_eq!(f.attackers_into(&w, &x), w);
        assert!(f.attackers_into(&f.empty_set(), &f.full_set()).is_empty());
        let z = f.set_of(&["z"]).unwrap();
        assert_eq!(f.attackers_into(&z, &z), z);
        // x is attacked by w and z
        assert_eq!(f.attacked_from(&x, &f.set_of(&["z"]).unwrap()), x);
    }

    #[test]
    fn range_examples() {
        let f = f1();
        let w = f.set_of(&["w"]).unwrap();
        assert_eq!(f.range(&w), f.set_of(&["w", "x", "y"]).unwrap());
        assert!(f.range(&f.empty_set()).is_empty());
        let g = surfing();
        assert_eq!(g.range(&g.set_of(&["s", "a", "c"]).unwrap()), g.full_set());
    }

    #[test]
    fn defended_set_examples() {
        let f = f1();
        assert_eq!(f.defended_set(&f.empty_set()), f.set_of(&["v"]).unwrap());
        assert_eq!(
            f.defended_set(&f.set_of(&["w"]).unwrap()),
            f.set_of(&["v", "w"]).unwrap()
        );
        let free = ArgumentationFramework::from_names(&["a", "b", "c"], &[]).unwrap();
        for m in 0..8 {
            assert_eq!(free.defended_set(&ArgSet::from_mask(3, m)), free.full_set());
        }
    }

    #[test]
    fn is_extension_examples() {
        let f = f1();
        let vw = f.set_of(&["v", "w"]).unwrap();
        assert!(f.is_extension(&vw, SemanticsKind::Admissible).unwrap());
        assert!(!f
            .is_extension(&f.set_of(&["w"]).unwrap(), SemanticsKind::Complete)
            .unwrap());
        assert!(f
            .is_extension(&f.empty_set(), SemanticsKind::ConflictFree)
            .unwrap());
        for sem in [SemanticsKind::Preferred, SemanticsKind::SemiStable, SemanticsKind::Stage] {
            assert!(f.is_extension(&vw, sem).unwrap(), "{sem}");
        }
    }

    #[test]
    fn quantified_semantics_respect_cap() {
        let f = f1();
        let err = f
            .is_extension_capped(&f.empty_set(), SemanticsKind::Preferred, 4)
            .unwrap_err();
        assert!(matches!(err, Error::OracleCap { args: 5, cap: 4 }));
        assert!(f
            .is_extension_capped(&f.empty_set(), SemanticsKind::Admissible, 4)
            .is_ok());
    }

    #[test]
    fn rejects_bad_frameworks() {
        assert!(matches!(
            ArgumentationFramework::new(vec![], []),
            Err(Error::EmptyFramework)
        ));
        assert!(matches!(
            ArgumentationFramework::from_names(&["a", "a"], &[]),
            Err(Error::DuplicateArgument(_))
        ));
        assert!(matches!(
            ArgumentationFramework::from_names(&["a"], &[("a", "b")]),
            Err(Error::UnknownArgument(_))
        ));
        assert!(matches!(
            ArgumentationFramework::new(vec![String::new()], []),
            Err(Error::InvalidName(_))
        ));
    }

    #[test]
    fn semantics_names_round_trip() {
        for s in SemanticsKind::ALL {
            assert_eq!(s.name().parse::<SemanticsKind>().unwrap(), s);
        }
        assert_eq!("STB".parse::<SemanticsKind>().unwrap(), SemanticsKind::Stable);
        assert!("grounded".parse::<SemanticsKind>().is_err());
    }
}
