//! Projected counting over a purged tabled decomposition.
//!
//! [`run_proj`] is the inclusion-exclusion pass: for every node and every
//! non-empty row set `σ` inside one bucket it stores the intersection
//! projected count `ipmc(σ)`, derived from the stored values of the child
//! tables through the row origins. Row sets that straddle buckets have
//! disjoint projections, so their intersection is zero and never stored.
//!
//! The pass is exponential in the bucket size. It fails fast past
//! [`ProjectionLimits`]; [`count_projected`] then falls back to
//! [`count_by_signatures`], which carries the explicit set of projected
//! restrictions per row.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::argset::ArgSet;
use crate::dp::{LocalAlgorithm, Origin, Phase, Table, Ttd};
use crate::error::{Error, Result};
use crate::td::{NiceTreeDecomposition, NodeKind};

pub const DEFAULT_BUCKET_CAP: usize = 20;
pub const DEFAULT_PROJECTION_BUDGET: u128 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProjectionLimits {
    /// Largest bucket (rows with equal projected extension part) per node.
    pub max_bucket: usize,
    /// Total number of inclusion-exclusion terms over the whole pass.
    pub budget: u128,
}

impl Default for ProjectionLimits {
    fn default() -> Self {
        ProjectionLimits {
            max_bucket: DEFAULT_BUCKET_CAP,
            budget: DEFAULT_PROJECTION_BUDGET,
        }
    }
}

/// `⟨σ, c⟩`: a set of row indices of the purged table and its ipmc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionEntry {
    pub sigma: Vec<usize>,
    pub count: BigUint,
}

/// The π-table of one node.
#[derive(Debug, Clone, Default)]
pub struct ProjectionTable {
    entries: Vec<ProjectionEntry>,
    index: HashMap<Vec<usize>, usize>,
    bucket_of: Vec<usize>,
}

impl ProjectionTable {
    pub fn entries(&self) -> &[ProjectionEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Bucket id of every row of the underlying purged table.
    pub fn bucket_of(&self) -> &[usize] {
        &self.bucket_of
    }

    fn push(&mut self, sigma: Vec<usize>, count: BigUint) {
        self.index.insert(sigma.clone(), self.entries.len());
        self.entries.push(ProjectionEntry { sigma, count });
    }
}

/// Stored ipmc of `sigma` (sorted row indices), zero when absent.
pub fn sipmc(table: &ProjectionTable, sigma: &[usize]) -> BigUint {
    table
        .index
        .get(sigma)
        .map(|&i| table.entries[i].count.clone())
        .unwrap_or_default()
}

/// Product of stored values over a sequence of (table, row set) pairs.
pub fn sipmc_product(parts: &[(&ProjectionTable, &[usize])]) -> BigUint {
    parts
        .iter()
        .fold(BigUint::one(), |acc, (t, s)| acc * sipmc(t, s))
}

/// Classes of rows with equal `E(u) ∩ P`, each sorted, ordered by first row.
pub fn buckets<A: LocalAlgorithm>(alg: &A, table: &Table<A::Row>, p: &ArgSet) -> Vec<Vec<usize>> {
    let mut ids: HashMap<ArgSet, usize> = HashMap::new();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for (i, row) in table.rows.iter().enumerate() {
        let key = alg.extension(row) & p;
        let next = out.len();
        let id = *ids.entry(key).or_insert(next);
        if id == next {
            out.push(Vec::new());
        }
        out[id].push(i);
    }
    out
}

/// Result of the projection pass: one π-table per node plus the final count.
#[derive(Debug, Clone)]
pub struct Projection<'t> {
    ntd: &'t NiceTreeDecomposition,
    tables: Vec<ProjectionTable>,
    count: BigUint,
}

impl<'t> Projection<'t> {
    pub fn ntd(&self) -> &'t NiceTreeDecomposition {
        self.ntd
    }

    pub fn table(&self, t: usize) -> &ProjectionTable {
        &self.tables[t]
    }

    pub fn tables(&self) -> &[ProjectionTable] {
        &self.tables
    }

    /// Number of distinct restrictions to `P` of accepted extensions.
    pub fn count(&self) -> &BigUint {
        &self.count
    }

    /// Whether the root π-table has exactly one entry, as it has whenever
    /// the purged root table has one row.
    pub fn root_is_singleton(&self) -> bool {
        self.tables[self.ntd.root()].len() == 1
    }
}

struct Work {
    node: usize,
    used: u128,
    budget: u128,
}

impl Work {
    fn spend(&mut self, n: u128) -> Result<()> {
        self.used = self.used.saturating_add(n);
        if self.used > self.budget {
            return Err(Error::ProjectionBudget {
                node: self.node,
                work: self.used,
                budget: self.budget,
            });
        }
        Ok(())
    }

    fn spend_subsets(&mut self, n: usize) -> Result<()> {
        let terms = if n >= 127 { u128::MAX } else { 1u128 << n };
        self.spend(terms)
    }
}

fn signed(sign_negative: bool, v: BigUint) -> BigInt {
    let s = if sign_negative { Sign::Minus } else { Sign::Plus };
    BigInt::from_biguint(s, v)
}

/// Alternating sum over the non-empty subsets of `items`.
fn inclusion_exclusion<T>(
    items: &[T],
    work: &mut Work,
    mut term: impl FnMut(&[&T]) -> BigUint,
) -> Result<BigInt> {
    work.spend_subsets(items.len())?;
    let mut total = BigInt::zero();
    let mut chosen: Vec<&T> = Vec::with_capacity(items.len());
    for mask in 1u64..(1u64 << items.len()) {
        chosen.clear();
        chosen.extend((0..items.len()).filter(|i| mask >> i & 1 == 1).map(|i| &items[i]));
        let v = term(&chosen);
        if !v.is_zero() {
            total += signed(chosen.len() % 2 == 0, v);
        }
    }
    Ok(total)
}

fn sorted_dedup(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v.dedup();
    v
}

/// The inclusion-exclusion pass over a purged TTD.
pub fn run_proj<'t, A: LocalAlgorithm>(
    alg: &A,
    ttd: &Ttd<'t, A::Row>,
    p: &ArgSet,
    limits: ProjectionLimits,
) -> Result<Projection<'t>> {
    if ttd.phase() != Phase::Purged {
        return Err(Error::NotPurged);
    }
    let ntd = ttd.ntd();
    let mut work = Work {
        node: 0,
        used: 0,
        budget: limits.budget,
    };
    let mut tables: Vec<ProjectionTable> = Vec::with_capacity(ntd.len());
    let mut root_pmc = BigUint::zero();
    for t in 0..ntd.len() {
        work.node = t;
        let node = ntd.node(t);
        let table = ttd.table(t);
        let classes = buckets(alg, table, p);
        let mut pt = ProjectionTable {
            bucket_of: vec![0; table.len()],
            ..ProjectionTable::default()
        };
        for (b, class) in classes.iter().enumerate() {
            for &i in class {
                pt.bucket_of[i] = b;
            }
        }
        for class in &classes {
            if class.len() > limits.max_bucket {
                return Err(Error::BucketCap {
                    node: t,
                    size: class.len(),
                    cap: limits.max_bucket,
                });
            }
            let size = class.len();
            work.spend(3u128.pow(size as u32))?;
            // ipmc indexed by submask of `class`
            let mut ipmc: Vec<BigInt> = vec![BigInt::zero(); 1 << size];
            for mask in 1usize..(1 << size) {
                let sigma: Vec<usize> = (0..size).filter(|i| mask >> i & 1 == 1).map(|i| class[i]).collect();
                let value = if node.kind == NodeKind::Leaf {
                    BigUint::one()
                } else {
                    let pmc = pmc(&node.kind, &node.children, table, &tables, &sigma, &mut work)?;
                    if t == ntd.root() && mask == (1 << size) - 1 {
                        root_pmc = pmc.to_biguint().unwrap_or_default();
                    }
                    let mut acc = pmc;
                    let mut sub = (mask - 1) & mask;
                    while sub > 0 {
                        let phi_len = sub.count_ones();
                        if phi_len % 2 == 1 {
                            acc -= &ipmc[sub];
                        } else {
                            acc += &ipmc[sub];
                        }
                        sub = (sub - 1) & mask;
                    }
                    let expected_negative = sigma.len() % 2 == 0;
                    let wrong_sign = match acc.sign() {
                        Sign::Minus => !expected_negative,
                        Sign::Plus => expected_negative,
                        Sign::NoSign => false,
                    };
                    if wrong_sign {
                        return Err(Error::Invariant(format!(
                            "node {t}: intersection count of {sigma:?} has the wrong sign"
                        )));
                    }
                    acc.magnitude().clone()
                };
                ipmc[mask] = BigInt::from(value.clone());
                pt.push(sigma, value);
            }
        }
        if t == ntd.root() && node.kind == NodeKind::Leaf {
            root_pmc = BigUint::from(u8::from(!table.is_empty()));
        }
        tables.push(pt);
    }
    Ok(Projection {
        ntd,
        tables,
        count: root_pmc,
    })
}

/// `pmc(t, σ)`: inclusion-exclusion over the origin sets of `σ`. Origin sets
/// that straddle child buckets store nothing and contribute zero, so the
/// sum runs per child bucket (per pair of buckets at joins).
fn pmc<R>(
    kind: &NodeKind,
    children: &[usize],
    table: &Table<R>,
    done: &[ProjectionTable],
    sigma: &[usize],
    work: &mut Work,
) -> Result<BigInt> {
    let origins = sigma.iter().flat_map(|&u| table.origins[u].iter().copied());
    let mut total = BigInt::zero();
    match kind {
        NodeKind::Leaf => unreachable!("leaves are handled by the caller"),
        NodeKind::Introduce(_) | NodeKind::Remove(_) => {
            let child = &done[children[0]];
            let ks = sorted_dedup(
                origins
                    .map(|o| match o {
                        Origin::Single(k) => k,
                        other => unreachable!("unary node with origin {other:?}"),
                    })
                    .collect(),
            );
            let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
            for k in ks {
                groups.entry(child.bucket_of[k]).or_default().push(k);
            }
            let mut keys: Vec<usize> = groups.keys().copied().collect();
            keys.sort_unstable();
            for b in keys {
                let group = &groups[&b];
                total += inclusion_exclusion(group, work, |o| {
                    let set: Vec<usize> = o.iter().map(|&&k| k).collect();
                    sipmc(child, &set)
                })?;
            }
        }
        NodeKind::Join => {
            let (left, right) = (&done[children[0]], &done[children[1]]);
            let mut pairs: Vec<(usize, usize)> = origins
                .map(|o| match o {
                    Origin::Pair(k, m) => (k, m),
                    other => unreachable!("join node with origin {other:?}"),
                })
                .collect();
            pairs.sort_unstable();
            pairs.dedup();
            let mut groups: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
            for (k, m) in pairs {
                groups
                    .entry((left.bucket_of[k], right.bucket_of[m]))
                    .or_default()
                    .push((k, m));
            }
            let mut keys: Vec<(usize, usize)> = groups.keys().copied().collect();
            keys.sort_unstable();
            for key in keys {
                let group = &groups[&key];
                total += inclusion_exclusion(group, work, |o| {
                    let ls = sorted_dedup(o.iter().map(|p| p.0).collect());
                    let rs = sorted_dedup(o.iter().map(|p| p.1).collect());
                    sipmc_product(&[(left, &ls), (right, &rs)])
                })?;
            }
        }
    }
    Ok(total)
}

/// Projected count by carrying, for every row, the set of restrictions to
/// `P` of the partial extensions below it. Exact; memory grows with the
/// number of distinct restrictions.
pub fn count_by_signatures<A: LocalAlgorithm>(alg: &A, ttd: &Ttd<A::Row>, p: &ArgSet) -> Result<BigUint> {
    if ttd.phase() != Phase::Purged {
        return Err(Error::NotPurged);
    }
    let ntd = ttd.ntd();
    let mut sigs: Vec<Vec<Vec<ArgSet>>> = Vec::with_capacity(ntd.len());
    for t in 0..ntd.len() {
        let children = &ntd.node(t).children;
        let table = ttd.table(t);
        let mut node_sigs = Vec::with_capacity(table.len());
        for (row, origins) in table.rows.iter().zip(&table.origins) {
            let e = alg.extension(row) & p;
            let mut out: Vec<ArgSet> = Vec::new();
            for o in origins {
                match *o {
                    Origin::Leaf => out.push(e.clone()),
                    Origin::Single(k) => out.extend(sigs[children[0]][k].iter().map(|s| s | &e)),
                    Origin::Pair(k, m) => {
                        for l in &sigs[children[0]][k] {
                            let le = l | &e;
                            out.extend(sigs[children[1]][m].iter().map(|r| &le | r));
                        }
                    }
                }
            }
            out.sort();
            out.dedup();
            node_sigs.push(out);
        }
        sigs.push(node_sigs);
    }
    let mut all: Vec<ArgSet> = sigs[ntd.root()].iter().flatten().cloned().collect();
    all.sort();
    all.dedup();
    Ok(BigUint::from(all.len()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProjectionRoute {
    InclusionExclusion,
    Signatures,
}

/// Projected count via [`run_proj`], falling back to
/// [`count_by_signatures`] when a limit is exceeded.
pub fn count_projected<A: LocalAlgorithm>(
    alg: &A,
    ttd: &Ttd<A::Row>,
    p: &ArgSet,
    limits: ProjectionLimits,
) -> Result<(BigUint, ProjectionRoute)> {
    match run_proj(alg, ttd, p, limits) {
        Ok(proj) => Ok((proj.count, ProjectionRoute::InclusionExclusion)),
        Err(Error::BucketCap { .. } | Error::ProjectionBudget { .. }) => {
            Ok((count_by_signatures(alg, ttd, p)?, ProjectionRoute::Signatures))
        }
        Err(e) => Err(e),
    }
}
