//! Brute-force enumeration over all subsets of the arguments.
//!
//! Exponential by construction; used as ground truth for the tree
//! decomposition solver on small frameworks.

use std::collections::HashSet;

use crate::argset::ArgSet;
use crate::error::{Error, Result};
use crate::framework::{ArgumentationFramework, SemanticsKind, DEFAULT_ORACLE_CAP};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub extensions: Vec<ArgSet>,
    pub count: u64,
    pub projected_count: Option<u64>,
}

pub struct Oracle<'a> {
    af: &'a ArgumentationFramework,
    targets: Vec<u64>,
    attackers: Vec<u64>,
    all: u64,
}

impl<'a> Oracle<'a> {
    pub fn new(af: &'a ArgumentationFramework) -> Result<Self> {
        Self::with_cap(af, DEFAULT_ORACLE_CAP)
    }

    pub fn with_cap(af: &'a ArgumentationFramework, cap: usize) -> Result<Self> {
        let n = af.len();
        if n > cap || n > 63 {
            return Err(Error::OracleCap { args: n, cap });
        }
        let targets = (0..n).map(|i| af.targets_of(i).low_mask()).collect();
        let attackers = (0..n).map(|i| af.attackers_of(i).low_mask()).collect();
        Ok(Oracle {
            af,
            targets,
            attackers,
            all: (1u64 << n) - 1,
        })
    }

    pub fn framework(&self) -> &ArgumentationFramework {
        self.af
    }

    fn attacked(&self, s: u64) -> u64 {
        bits(s).fold(0, |acc, i| acc | self.targets[i])
    }

    fn conflict_free(&self, s: u64) -> bool {
        self.attacked(s) & s == 0
    }

    fn range(&self, s: u64) -> u64 {
        s | self.attacked(s)
    }

    fn defended(&self, s: u64) -> u64 {
        let hit = self.attacked(s);
        (0..self.attackers.len())
            .filter(|&a| self.attackers[a] & !hit == 0)
            .fold(0, |acc, a| acc | (1 << a))
    }

    fn admissible(&self, s: u64) -> bool {
        self.conflict_free(s) && s & !self.defended(s) == 0
    }

    fn family(&self, pred: impl Fn(u64) -> bool) -> Vec<u64> {
        (0..=self.all).filter(|&m| pred(m)).collect()
    }

    /// Extensions as masks, in increasing mask order.
    pub fn enumerate_masks(&self, sem: SemanticsKind) -> Vec<u64> {
        match sem {
            SemanticsKind::ConflictFree => self.family(|m| self.conflict_free(m)),
            SemanticsKind::Admissible => self.family(|m| self.admissible(m)),
            SemanticsKind::Complete => {
                self.family(|m| self.conflict_free(m) && self.defended(m) == m)
            }
            SemanticsKind::Stable => {
                self.family(|m| self.conflict_free(m) && self.range(m) == self.all)
            }
            SemanticsKind::Preferred => {
                let adm = self.family(|m| self.admissible(m));
                adm.iter()
                    .copied()
                    .filter(|&s| !adm.iter().any(|&t| t != s && s & !t == 0))
                    .collect()
            }
            SemanticsKind::SemiStable => {
                let adm = self.family(|m| self.admissible(m));
                self.range_maximal(&adm)
            }
            SemanticsKind::Stage => {
                let cf = self.family(|m| self.conflict_free(m));
                self.range_maximal(&cf)
            }
        }
    }

    fn range_maximal(&self, family: &[u64]) -> Vec<u64> {
        let ranges: HashSet<u64> = family.iter().map(|&s| self.range(s)).collect();
        let maximal: HashSet<u64> = ranges
            .iter()
            .copied()
            .filter(|&r| !ranges.iter().any(|&q| q != r && r & !q == 0))
            .collect();
        family
            .iter()
            .copied()
            .filter(|&s| maximal.contains(&self.range(s)))
            .collect()
    }

    pub fn enumerate(&self, sem: SemanticsKind) -> Vec<ArgSet> {
        let n = self.af.len();
        self.enumerate_masks(sem)
            .into_iter()
            .map(|m| ArgSet::from_mask(n, m))
            .collect()
    }

    pub fn count(&self, sem: SemanticsKind) -> u64 {
        self.enumerate_masks(sem).len() as u64
    }

    pub fn count_credulous(&self, sem: SemanticsKind, arg: &str) -> Result<u64> {
        let a = self.af.index_of(arg)?;
        Ok(self.count_credulous_index(sem, Some(a)))
    }

    pub fn count_credulous_index(&self, sem: SemanticsKind, arg: Option<usize>) -> u64 {
        let filter = arg.map_or(0, |a| 1u64 << a);
        self.enumerate_masks(sem)
            .into_iter()
            .filter(|m| m & filter == filter)
            .count() as u64
    }

    pub fn count_projected_credulous(
        &self,
        sem: SemanticsKind,
        arg: &str,
        projection: &[&str],
    ) -> Result<u64> {
        let a = self.af.index_of(arg)?;
        let p = self.af.set_of(projection)?;
        Ok(self.count_projected_index(sem, Some(a), &p))
    }

    /// Number of distinct restrictions `S ∩ P` over extensions `S` that
    /// contain `arg` (all extensions when `arg` is `None`).
    pub fn count_projected_index(&self, sem: SemanticsKind, arg: Option<usize>, p: &ArgSet) -> u64 {
        let filter = arg.map_or(0, |a| 1u64 << a);
        let pm = p.low_mask();
        let seen: HashSet<u64> = self
            .enumerate_masks(sem)
            .into_iter()
            .filter(|m| m & filter == filter)
            .map(|m| m & pm)
            .collect();
        seen.len() as u64
    }

    pub fn decide_credulous(&self, sem: SemanticsKind, arg: &str) -> Result<bool> {
        Ok(self.count_credulous(sem, arg)? > 0)
    }

    /// True iff every extension contains `arg`; vacuously true without extensions.
    pub fn decide_skeptical(&self, sem: SemanticsKind, arg: &str) -> Result<bool> {
        let a = self.af.index_of(arg)?;
        Ok(self
            .enumerate_masks(sem)
            .into_iter()
            .all(|m| m & (1 << a) != 0))
    }

    pub fn result(
        &self,
        sem: SemanticsKind,
        arg: Option<usize>,
        projection: Option<&ArgSet>,
    ) -> OracleResult {
        let filter = arg.map_or(0, |a| 1u64 << a);
        let n = self.af.len();
        let extensions: Vec<ArgSet> = self
            .enumerate_masks(sem)
            .into_iter()
            .filter(|m| m & filter == filter)
            .map(|m| ArgSet::from_mask(n, m))
            .collect();
        let projected_count = projection.map(|p| self.count_projected_index(sem, arg, p));
        OracleResult {
            count: extensions.len() as u64,
            extensions,
            projected_count,
        }
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}
