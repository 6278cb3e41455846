//! Generic dynamic programming over nice tree decompositions.
//!
//! A [`LocalAlgorithm`] maps a node and its child tables to a table. The
//! engine runs it bottom-up ([`run_dp`]), records for every row the child
//! rows it came from, and offers the top-down [`purge`] plus counting and
//! reconstruction on top of those origins.

mod bag;
mod table;

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub use bag::BagFramework;
pub use table::{Origin, Phase, Table, Ttd};

use crate::argset::ArgSet;
use crate::error::{Error, Result};
use crate::framework::ArgumentationFramework;
use crate::td::{NiceTreeDecomposition, NodeKind};

/// Everything a handler may look at: the node type, its bag, the bag
/// framework and the credulous argument.
pub struct NodeContext<'a> {
    pub node: usize,
    pub kind: NodeKind,
    pub bag: &'a ArgSet,
    pub framework: BagFramework,
    pub cred: Option<usize>,
}

impl NodeContext<'_> {
    /// `J ∩ {c} = χ(t) ∩ {c}`; always true without a credulous argument.
    pub fn cred_ok(&self, j: &ArgSet) -> bool {
        match self.cred {
            Some(c) if self.bag.contains(c) => j.contains(c),
            _ => true,
        }
    }
}

/// Per-semantics table algorithm. Handlers act on one child row (or one
/// pair of rows at joins) at a time, which is how origins are recorded.
pub trait LocalAlgorithm: Sync {
    type Row: Clone + Eq + Hash + Debug + Send + Sync;
    type Key: Eq + Hash;

    fn name(&self) -> &'static str;
    fn leaf(&self, ctx: &NodeContext) -> Self::Row;
    fn introduce(&self, ctx: &NodeContext, a: usize, row: &Self::Row, out: &mut Vec<Self::Row>);
    fn remove(&self, ctx: &NodeContext, a: usize, row: &Self::Row) -> Option<Self::Row>;
    /// Rows can only be joined when their keys agree.
    fn join_key(&self, row: &Self::Row) -> Self::Key;
    fn join(&self, ctx: &NodeContext, left: &Self::Row, right: &Self::Row) -> Option<Self::Row>;
    fn accept_root(&self, _row: &Self::Row) -> bool {
        true
    }
    /// The extension part `E(u)`.
    fn extension<'r>(&self, row: &'r Self::Row) -> &'r ArgSet;
    /// Every argument set stored in the row, for locality checks.
    fn row_sets<'r>(&self, row: &'r Self::Row) -> Vec<&'r ArgSet>;
    fn describe(&self, af: &ArgumentationFramework, row: &Self::Row) -> String;
}

fn context<'a>(
    ntd: &'a NiceTreeDecomposition,
    af: &ArgumentationFramework,
    cred: Option<usize>,
    t: usize,
) -> NodeContext<'a> {
    let node = ntd.node(t);
    NodeContext {
        node: t,
        kind: node.kind,
        bag: &node.bag,
        framework: BagFramework::new(af, &node.bag),
        cred,
    }
}

struct TableBuilder<R> {
    index: HashMap<R, usize>,
    table: Table<R>,
}

impl<R: Clone + Eq + Hash> TableBuilder<R> {
    fn new() -> Self {
        TableBuilder {
            index: HashMap::new(),
            table: Table::default(),
        }
    }

    fn insert(&mut self, row: R, origin: Origin) {
        match self.index.get(&row) {
            Some(&i) => self.table.origins[i].push(origin),
            None => {
                self.index.insert(row.clone(), self.table.rows.len());
                self.table.rows.push(row);
                self.table.origins.push(vec![origin]);
            }
        }
    }
}

/// Applies the handler of node `t` to the given child tables.
pub fn compute_node<A: LocalAlgorithm>(
    alg: &A,
    ctx: &NodeContext,
    children: &[&Table<A::Row>],
) -> Table<A::Row> {
    let mut b = TableBuilder::new();
    match ctx.kind {
        NodeKind::Leaf => b.insert(alg.leaf(ctx), Origin::Leaf),
        NodeKind::Introduce(a) => {
            let mut buf = Vec::new();
            for (i, row) in children[0].rows.iter().enumerate() {
                buf.clear();
                alg.introduce(ctx, a, row, &mut buf);
                for r in buf.drain(..) {
                    b.insert(r, Origin::Single(i));
                }
            }
        }
        NodeKind::Remove(a) => {
            for (i, row) in children[0].rows.iter().enumerate() {
                if let Some(r) = alg.remove(ctx, a, row) {
                    b.insert(r, Origin::Single(i));
                }
            }
        }
        NodeKind::Join => {
            let (left, right) = (children[0], children[1]);
            let mut by_key: HashMap<A::Key, Vec<usize>> = HashMap::new();
            for (j, row) in right.rows.iter().enumerate() {
                by_key.entry(alg.join_key(row)).or_default().push(j);
            }
            for (i, l) in left.rows.iter().enumerate() {
                if let Some(js) = by_key.get(&alg.join_key(l)) {
                    for &j in js {
                        if let Some(r) = alg.join(ctx, l, &right.rows[j]) {
                            b.insert(r, Origin::Pair(i, j));
                        }
                    }
                }
            }
        }
    }
    b.table
}

/// Bottom-up traversal producing the computed tables `τ`. With a thread
/// pool, the two subtrees below every join are processed concurrently;
/// the tables are identical to the sequential schedule.
pub fn run_dp<'t, A: LocalAlgorithm>(
    alg: &A,
    ntd: &'t NiceTreeDecomposition,
    af: &ArgumentationFramework,
    cred: Option<usize>,
    pool: Option<&rayon::ThreadPool>,
) -> Ttd<'t, A::Row> {
    let tables = match pool {
        None => {
            let mut tables: Vec<Table<A::Row>> = Vec::with_capacity(ntd.len());
            for t in 0..ntd.len() {
                let ctx = context(ntd, af, cred, t);
                let kids: Vec<&Table<A::Row>> =
                    ntd.node(t).children.iter().map(|&c| &tables[c]).collect();
                let table = compute_node(alg, &ctx, &kids);
                tables.push(table);
            }
            tables
        }
        Some(pool) => {
            let parts = pool.install(|| solve_subtree(alg, ntd, af, cred, ntd.root()));
            let mut slots: Vec<Option<Table<A::Row>>> = (0..ntd.len()).map(|_| None).collect();
            for (t, table) in parts {
                slots[t] = Some(table);
            }
            slots.into_iter().map(|t| t.expect("every node solved")).collect()
        }
    };
    Ttd::new(ntd, tables, Phase::Computed)
}

fn solve_subtree<A: LocalAlgorithm>(
    alg: &A,
    ntd: &NiceTreeDecomposition,
    af: &ArgumentationFramework,
    cred: Option<usize>,
    top: usize,
) -> Vec<(usize, Table<A::Row>)> {
    // walk down the chain of unary nodes to the first join or leaf
    let mut chain = vec![top];
    loop {
        let x = *chain.last().expect("non-empty");
        match ntd.node(x).kind {
            NodeKind::Introduce(_) | NodeKind::Remove(_) => chain.push(ntd.node(x).children[0]),
            _ => break,
        }
    }
    let bottom = chain.pop().expect("non-empty");
    let mut out: Vec<(usize, Table<A::Row>)>;
    let ctx = context(ntd, af, cred, bottom);
    if ntd.node(bottom).kind == NodeKind::Join {
        let (l, r) = (ntd.node(bottom).children[0], ntd.node(bottom).children[1]);
        let (mut left, right) = rayon::join(
            || solve_subtree(alg, ntd, af, cred, l),
            || solve_subtree(alg, ntd, af, cred, r),
        );
        let table = {
            let lt = &left.last().expect("left subtree").1;
            let rt = &right.last().expect("right subtree").1;
            compute_node(alg, &ctx, &[lt, rt])
        };
        left.extend(right);
        out = left;
        out.push((bottom, table));
    } else {
        out = vec![(bottom, compute_node(alg, &ctx, &[]))];
    }
    for &x in chain.iter().rev() {
        let ctx = context(ntd, af, cred, x);
        let table = compute_node(alg, &ctx, &[&out.last().expect("child").1]);
        out.push((x, table));
    }
    out
}

/// Recomputes the origins of row `i` at node `t` by running the handler on
/// every single child row (or pair of rows).
pub fn origins<A: LocalAlgorithm>(
    alg: &A,
    ttd: &Ttd<A::Row>,
    af: &ArgumentationFramework,
    cred: Option<usize>,
    t: usize,
    i: usize,
) -> Result<Vec<Origin>> {
    let ntd = ttd.ntd();
    let row = ttd
        .table(t)
        .rows
        .get(i)
        .ok_or_else(|| Error::Invariant(format!("node {t} has no row {i}")))?;
    let ctx = context(ntd, af, cred, t);
    let kids: Vec<&Table<A::Row>> = ntd.node(t).children.iter().map(|&c| ttd.table(c)).collect();
    let single = |table: &Table<A::Row>, k: usize| Table {
        rows: vec![table.rows[k].clone()],
        origins: vec![vec![Origin::Leaf]],
    };
    let mut out = Vec::new();
    match ctx.kind {
        NodeKind::Leaf => {
            if compute_node(alg, &ctx, &[]).rows.contains(row) {
                out.push(Origin::Leaf);
            }
        }
        NodeKind::Introduce(_) | NodeKind::Remove(_) => {
            for k in 0..kids[0].rows.len() {
                if compute_node(alg, &ctx, &[&single(kids[0], k)]).rows.contains(row) {
                    out.push(Origin::Single(k));
                }
            }
        }
        NodeKind::Join => {
            for k in 0..kids[0].rows.len() {
                let l = single(kids[0], k);
                for m in 0..kids[1].rows.len() {
                    let r = single(kids[1], m);
                    if compute_node(alg, &ctx, &[&l, &r]).rows.contains(row) {
                        out.push(Origin::Pair(k, m));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Top-down pruning: keeps accepted root rows and, below, exactly the rows
/// that are origins of kept rows. Yields `ν` with re-indexed origins.
pub fn purge<'t, A: LocalAlgorithm>(alg: &A, ttd: &Ttd<'t, A::Row>) -> Ttd<'t, A::Row> {
    let ntd = ttd.ntd();
    let n = ntd.len();
    let mut keep: Vec<Vec<bool>> = (0..n).map(|t| vec![false; ttd.table(t).rows.len()]).collect();
    let root = ntd.root();
    for (i, row) in ttd.table(root).rows.iter().enumerate() {
        keep[root][i] = alg.accept_root(row);
    }
    for t in (0..n).rev() {
        let children = &ntd.node(t).children;
        for i in 0..keep[t].len() {
            if !keep[t][i] {
                continue;
            }
            for o in &ttd.table(t).origins[i] {
                match *o {
                    Origin::Leaf => {}
                    Origin::Single(k) => keep[children[0]][k] = true,
                    Origin::Pair(k, m) => {
                        keep[children[0]][k] = true;
                        keep[children[1]][m] = true;
                    }
                }
            }
        }
    }
    let new_index: Vec<Vec<usize>> = keep
        .iter()
        .map(|k| {
            let mut next = 0;
            k.iter()
                .map(|&kept| {
                    let idx = next;
                    next += usize::from(kept);
                    idx
                })
                .collect()
        })
        .collect();
    let tables = (0..n)
        .map(|t| {
            let children = &ntd.node(t).children;
            let old = ttd.table(t);
            let mut table = Table::default();
            for (i, row) in old.rows.iter().enumerate() {
                if !keep[t][i] {
                    continue;
                }
                table.rows.push(row.clone());
                table.origins.push(
                    old.origins[i]
                        .iter()
                        .map(|o| match *o {
                            Origin::Leaf => Origin::Leaf,
                            Origin::Single(k) => Origin::Single(new_index[children[0]][k]),
                            Origin::Pair(k, m) => {
                                Origin::Pair(new_index[children[0]][k], new_index[children[1]][m])
                            }
                        })
                        .collect(),
                );
            }
            table
        })
        .collect();
    Ttd::new(ntd, tables, Phase::Purged)
}

/// Number of extensions below every row: 1 at leaves, summed over origins,
/// multiplied at joins.
pub fn row_counts<R>(ttd: &Ttd<R>) -> Vec<Vec<BigUint>> {
    let ntd = ttd.ntd();
    let mut counts: Vec<Vec<BigUint>> = Vec::with_capacity(ntd.len());
    for t in 0..ntd.len() {
        let children = &ntd.node(t).children;
        let row_counts = ttd
            .table(t)
            .origins
            .iter()
            .map(|origins| {
                origins.iter().fold(BigUint::zero(), |acc, o| {
                    acc + match *o {
                        Origin::Leaf => BigUint::one(),
                        Origin::Single(k) => counts[children[0]][k].clone(),
                        Origin::Pair(k, m) => &counts[children[0]][k] * &counts[children[1]][m],
                    }
                })
            })
            .collect();
        counts.push(row_counts);
    }
    counts
}

/// Number of extensions (containing the credulous argument, if one was
/// given to [`run_dp`]): the counters of accepted root rows.
pub fn count_extensions<A: LocalAlgorithm>(alg: &A, ttd: &Ttd<A::Row>) -> BigUint {
    let counts = row_counts(ttd);
    let root = ttd.ntd().root();
    ttd.table(root)
        .rows
        .iter()
        .zip(&counts[root])
        .filter(|(row, _)| alg.accept_root(row))
        .map(|(_, c)| c.clone())
        .sum()
}

/// All extensions, one per origin chain from an accepted root row. Exponential;
/// meant for checking small instances.
pub fn extensions<A: LocalAlgorithm>(alg: &A, ttd: &Ttd<A::Row>) -> Vec<ArgSet> {
    let ntd = ttd.ntd();
    let universe = ntd.universe();
    let mut below: Vec<Vec<Vec<ArgSet>>> = Vec::with_capacity(ntd.len());
    for t in 0..ntd.len() {
        let children = &ntd.node(t).children;
        let table = ttd.table(t);
        let sets = table
            .rows
            .iter()
            .zip(&table.origins)
            .map(|(row, origins)| {
                let e = alg.extension(row);
                let mut out = Vec::new();
                for o in origins {
                    match *o {
                        Origin::Leaf => out.push(e.clone()),
                        Origin::Single(k) => {
                            out.extend(below[children[0]][k].iter().map(|s| s | e));
                        }
                        Origin::Pair(k, m) => {
                            for l in &below[children[0]][k] {
                                for r in &below[children[1]][m] {
                                    out.push(&(l | r) | e);
                                }
                            }
                        }
                    }
                }
                out
            })
            .collect();
        below.push(sets);
    }
    let root = ntd.root();
    let mut out: Vec<ArgSet> = Vec::new();
    for (i, row) in ttd.table(root).rows.iter().enumerate() {
        if alg.accept_root(row) {
            out.extend(below[root][i].iter().cloned());
        }
    }
    debug_assert!(out.iter().all(|s| s.len() <= universe));
    out.sort();
    out
}

/// One block per node: type, bag and rows.
pub fn trace<A: LocalAlgorithm>(alg: &A, ttd: &Ttd<A::Row>, af: &ArgumentationFramework) -> String {
    use std::fmt::Write;
    let ntd = ttd.ntd();
    let mut s = String::new();
    for t in 0..ntd.len() {
        let node = ntd.node(t);
        let kind = match node.kind {
            NodeKind::Introduce(a) => format!("int {}", af.name(a)),
            NodeKind::Remove(a) => format!("rem {}", af.name(a)),
            k => k.to_string(),
        };
        let table = ttd.table(t);
        writeln!(
            s,
            "node {t} [{kind}] bag={} children={:?} rows={}",
            af.format_set(&node.bag),
            node.children,
            table.rows.len()
        )
        .unwrap();
        for row in &table.rows {
            writeln!(s, "  {}", alg.describe(af, row)).unwrap();
        }
    }
    s
}

/// Largest table of the TTD.
pub fn max_table<R>(ttd: &Ttd<R>) -> usize {
    (0..ttd.ntd().len())
        .map(|t| ttd.table(t).rows.len())
        .max()
        .unwrap_or(0)
}
