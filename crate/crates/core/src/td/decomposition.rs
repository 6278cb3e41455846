use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::UndirectedGraph;
use crate::argset::ArgSet;

pub const DEFAULT_TD_PASSES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TdNode {
    pub bag: ArgSet,
    pub children: Vec<usize>,
}

/// A rooted tree decomposition with arbitrary (not necessarily nice) bags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub universe: usize,
    pub nodes: Vec<TdNode>,
    pub root: usize,
}

impl TreeDecomposition {
    pub fn width(&self) -> usize {
        self.nodes
            .iter()
            .map(|n| n.bag.len())
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Parent of every node, `None` for the root and for unreachable nodes.
    pub fn parents(&self) -> Vec<Option<usize>> {
        let mut parent = vec![None; self.nodes.len()];
        for (i, n) in self.nodes.iter().enumerate() {
            for &c in &n.children {
                if c < parent.len() {
                    parent[c] = Some(i);
                }
            }
        }
        parent
    }
}

/// Computes a tree decomposition from `passes` randomized min-fill
/// elimination orderings and keeps the narrowest. Deterministic for a
/// fixed seed.
pub fn compute_td(g: &UndirectedGraph, seed: u64, passes: usize) -> TreeDecomposition {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<TreeDecomposition> = None;
    for _ in 0..passes.max(1) {
        let order = min_fill_order(g, &mut rng);
        let td = from_elimination_order(g, &order);
        if best.as_ref().is_none_or(|b| td.width() < b.width()) {
            best = Some(td);
        }
    }
    best.expect("at least one pass")
}

fn fill_in(adj: &[BTreeSet<usize>], v: usize) -> usize {
    let ns: Vec<usize> = adj[v].iter().copied().collect();
    let mut missing = 0;
    for (i, &a) in ns.iter().enumerate() {
        for &b in &ns[i + 1..] {
            if !adj[a].contains(&b) {
                missing += 1;
            }
        }
    }
    missing
}

/// Min-fill elimination with uniformly random tie-breaking.
pub fn min_fill_order(g: &UndirectedGraph, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let n = g.vertex_count();
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).clone()).collect();
    let mut fill: Vec<usize> = (0..n).map(|v| fill_in(&adj, v)).collect();
    let mut alive = vec![true; n];
    // random priority as tie-breaker
    let mut tiebreak: Vec<usize> = (0..n).collect();
    tiebreak.shuffle(rng);
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (fill[v], tiebreak[v]))
            .expect("vertex left");
        alive[v] = false;
        order.push(v);
        let ns: Vec<usize> = adj[v].iter().copied().collect();
        for (i, &a) in ns.iter().enumerate() {
            adj[a].remove(&v);
            for &b in &ns[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        adj[v].clear();
        let mut touched: BTreeSet<usize> = ns.iter().copied().collect();
        for &a in &ns {
            touched.extend(adj[a].iter().copied());
        }
        for u in touched {
            if alive[u] {
                fill[u] = fill_in(&adj, u);
            }
        }
    }
    order
}

/// Standard construction: the bag of `v` is `v` plus its neighbours at
/// elimination time, hung below the bag of the earliest-eliminated of those
/// neighbours. Components are chained together, isolated vertices last so
/// they sit just below the root.
pub fn from_elimination_order(g: &UndirectedGraph, order: &[usize]) -> TreeDecomposition {
    let n = g.vertex_count();
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).clone()).collect();
    let mut bags: Vec<ArgSet> = Vec::with_capacity(n);
    let mut parent_vertex: Vec<Option<usize>> = Vec::with_capacity(n);
    for &v in order {
        let ns: Vec<usize> = adj[v].iter().copied().collect();
        let mut bag = ArgSet::from_indices(n, ns.iter().copied());
        bag.insert(v);
        bags.push(bag);
        parent_vertex.push(ns.iter().copied().min_by_key(|&u| position[u]));
        for (i, &a) in ns.iter().enumerate() {
            adj[a].remove(&v);
            for &b in &ns[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        adj[v].clear();
    }

    // node i corresponds to order[i]
    let mut parent: Vec<Option<usize>> = parent_vertex
        .iter()
        .map(|p| p.map(|u| position[u]))
        .collect();
    let mut roots: Vec<usize> = (0..n).filter(|&i| parent[i].is_none()).collect();
    roots.sort_by_key(|&i| (g.neighbors(order[i]).is_empty(), i));
    for w in roots.windows(2) {
        parent[w[0]] = Some(w[1]);
    }
    let root = *roots.last().unwrap_or(&0);

    // contract bags contained in their parent
    let mut alias: Vec<usize> = (0..n).collect();
    for i in 0..n {
        if let Some(p) = parent[i] {
            if bags[i].is_subset(&bags[p]) && !roots.contains(&i) {
                alias[i] = p;
            }
        }
    }
    let resolve = |mut i: usize| {
        while alias[i] != i {
            i = alias[i];
        }
        i
    };
    let kept: Vec<usize> = (0..n).filter(|&i| alias[i] == i).collect();
    let mut new_id = vec![usize::MAX; n];
    for (k, &i) in kept.iter().enumerate() {
        new_id[i] = k;
    }
    let mut nodes: Vec<TdNode> = kept
        .iter()
        .map(|&i| TdNode {
            bag: bags[i].clone(),
            children: Vec::new(),
        })
        .collect();
    for &i in &kept {
        if let Some(p) = parent[i] {
            let p = resolve(p);
            nodes[new_id[p]].children.push(new_id[i]);
        }
    }
    if n == 0 {
        return TreeDecomposition {
            universe: 0,
            nodes: vec![TdNode {
                bag: ArgSet::empty(0),
                children: vec![],
            }],
            root: 0,
        };
    }
    TreeDecomposition {
        universe: n,
        nodes,
        root: new_id[resolve(root)],
    }
}
