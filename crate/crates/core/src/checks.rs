//! Structural invariant checks on decompositions and tables. Each returns a
//! description of the first violation found.

use crate::dp::{LocalAlgorithm, NodeContext, Origin, Ttd};
use crate::dp::BagFramework;
use crate::framework::ArgumentationFramework;
use crate::projection::Projection;
use crate::semantics::{CwRow, Dominance};
use crate::td::{validate_nice, NiceTreeDecomposition, NodeKind, UndirectedGraph};

pub type Check = std::result::Result<(), String>;

/// The nice decomposition is valid for `g`, its leaf and root bags are
/// empty and its width equals `width`.
pub fn nice_td(g: &UndirectedGraph, ntd: &NiceTreeDecomposition, width: usize) -> Check {
    let v = validate_nice(g, ntd);
    if let Some(first) = v.first() {
        return Err(format!("invalid nice decomposition: {first}"));
    }
    if ntd.width() != width {
        return Err(format!("width {} after normalizing, {width} before", ntd.width()));
    }
    if !ntd.node(ntd.root()).bag.is_empty() {
        return Err("root bag not empty".into());
    }
    for (t, node) in ntd.nodes().iter().enumerate() {
        if node.kind == NodeKind::Leaf && !node.bag.is_empty() {
            return Err(format!("leaf {t} has a non-empty bag"));
        }
    }
    Ok(())
}

/// Every set stored in every row is inside the node's bag.
pub fn locality<A: LocalAlgorithm>(alg: &A, ttd: &Ttd<A::Row>) -> Check {
    let ntd = ttd.ntd();
    for t in 0..ntd.len() {
        let bag = &ntd.node(t).bag;
        for row in &ttd.table(t).rows {
            if alg.row_sets(row).iter().any(|s| !s.is_subset(bag)) {
                return Err(format!("node {t}: row {row:?} leaves the bag"));
            }
        }
    }
    Ok(())
}

/// Every row outside a leaf has at least one origin.
pub fn origins_present<R>(ttd: &Ttd<R>) -> Check {
    let ntd = ttd.ntd();
    for t in 0..ntd.len() {
        let leaf = ntd.node(t).kind == NodeKind::Leaf;
        for (i, o) in ttd.table(t).origins.iter().enumerate() {
            if o.is_empty() || (leaf != (o == &[Origin::Leaf])) {
                return Err(format!("node {t} row {i}: origins {o:?}"));
            }
        }
    }
    Ok(())
}

/// After purging: every root row is accepted and every other row is an
/// origin of some row of its parent, so an origin chain leads to the root.
pub fn purge_reachability<A: LocalAlgorithm>(alg: &A, purged: &Ttd<A::Row>) -> Check {
    let ntd = purged.ntd();
    let root = ntd.root();
    if let Some(row) = purged.table(root).rows.iter().find(|r| !alg.accept_root(r)) {
        return Err(format!("rejected root row {row:?} survived"));
    }
    let mut used: Vec<Vec<bool>> = (0..ntd.len()).map(|t| vec![false; purged.table(t).len()]).collect();
    used[root].iter_mut().for_each(|u| *u = true);
    for t in (0..ntd.len()).rev() {
        let children = &ntd.node(t).children;
        for (i, origins) in purged.table(t).origins.iter().enumerate() {
            if !used[t][i] {
                return Err(format!("node {t} row {i} reaches no root row"));
            }
            for o in origins {
                match *o {
                    Origin::Leaf => {}
                    Origin::Single(k) => used[children[0]][k] = true,
                    Origin::Pair(k, m) => {
                        used[children[0]][k] = true;
                        used[children[1]][m] = true;
                    }
                }
            }
        }
    }
    Ok(())
}

/// A flagged counter-witness passes its flag on to everything derived
/// from it along every origin.
pub fn flag_monotonicity<C: Dominance>(
    ttd: &Ttd<CwRow<C>>,
    af: &ArgumentationFramework,
) -> Check {
    let ntd = ttd.ntd();
    for t in 0..ntd.len() {
        let node = ntd.node(t);
        let ctx = NodeContext {
            node: t,
            kind: node.kind,
            bag: &node.bag,
            framework: BagFramework::new(af, &node.bag),
            cred: None,
        };
        let table = ttd.table(t);
        for (row, origins) in table.rows.iter().zip(&table.origins) {
            let has = |c: &C| row.cws.contains(&(c.clone(), true));
            for o in origins {
                let lost = match (node.kind, *o) {
                    (NodeKind::Introduce(a), Origin::Single(k)) => {
                        flagged(&ttd.table(node.children[0]).rows[k]).any(|c| {
                            let mut grown = Vec::new();
                            c.introduce(&ctx, a, &mut grown);
                            grown
                                .iter()
                                .any(|g| C::dominates(g, &row.core).is_some() && !has(g))
                        })
                    }
                    (NodeKind::Remove(a), Origin::Single(k)) => {
                        flagged(&ttd.table(node.children[0]).rows[k])
                            .any(|c| c.remove(a).is_some_and(|g| !has(&g)))
                    }
                    (NodeKind::Join, Origin::Pair(k, m)) => {
                        let l = &ttd.table(node.children[0]).rows[k];
                        let r = &ttd.table(node.children[1]).rows[m];
                        let crossed = |x: &CwRow<C>, y: &CwRow<C>| {
                            flagged(x).any(|c| {
                                y.cws
                                    .iter()
                                    .any(|(d, _)| d.key() == c.key() && !has(&c.join(d)) && !has(&d.join(c)))
                            })
                        };
                        crossed(l, r) || crossed(r, l)
                    }
                    _ => false,
                };
                if lost {
                    return Err(format!("node {t}: a counter-witness lost its flag"));
                }
            }
        }
    }
    Ok(())
}

fn flagged<C>(row: &CwRow<C>) -> impl Iterator<Item = &C> {
    row.cws.iter().filter(|cw| cw.1).map(|cw| &cw.0)
}

/// Stored intersection counts are non-negative by type; this checks the
/// root π-table is a single entry when the purged root table is one row.
pub fn projection_root<R>(proj: &Projection, purged: &Ttd<R>) -> Check {
    let root_rows = purged.table(purged.ntd().root()).len();
    if root_rows == 1 && !proj.root_is_singleton() {
        return Err("root π-table is not a singleton".into());
    }
    if root_rows == 0 && !proj.table(purged.ntd().root()).is_empty() {
        return Err("empty root table with π entries".into());
    }
    Ok(())
}
