use std::fmt;

use super::{NiceTreeDecomposition, NodeKind, TreeDecomposition, UndirectedGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Empty,
    BadRoot(usize),
    ChildOutOfRange { node: usize, child: usize },
    MultipleParents(usize),
    Unreachable(usize),
    VertexOutOfRange { node: usize, vertex: usize },
    VertexUncovered(usize),
    EdgeUncovered(usize, usize),
    Disconnected(usize),
    NotPostOrder(usize),
    RootBagNotEmpty,
    LeafBagNotEmpty(usize),
    ChildCount(usize),
    BadIntroduce(usize),
    BadRemove(usize),
    BadJoin(usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            Empty => write!(f, "decomposition has no nodes"),
            BadRoot(r) => write!(f, "root {r} is not a node"),
            ChildOutOfRange { node, child } => write!(f, "node {node}: child {child} is not a node"),
            MultipleParents(n) => write!(f, "node {n} has more than one parent"),
            Unreachable(n) => write!(f, "node {n} is not reachable from the root"),
            VertexOutOfRange { node, vertex } => write!(f, "node {node}: vertex {vertex} out of range"),
            VertexUncovered(v) => write!(f, "vertex-uncovered: {v}"),
            EdgeUncovered(u, v) => write!(f, "edge-uncovered: {{{u},{v}}}"),
            Disconnected(v) => write!(f, "connectedness: bags containing {v} do not form a subtree"),
            NotPostOrder(n) => write!(f, "node {n} precedes one of its children"),
            RootBagNotEmpty => write!(f, "root bag is not empty"),
            LeafBagNotEmpty(n) => write!(f, "leaf {n} has a non-empty bag"),
            ChildCount(n) => write!(f, "node {n} has the wrong number of children for its type"),
            BadIntroduce(n) => write!(f, "node {n} does not introduce exactly its argument"),
            BadRemove(n) => write!(f, "node {n} does not remove exactly its argument"),
            BadJoin(n) => write!(f, "join {n} has children with different bags"),
        }
    }
}

/// Tree shape, vertex range and connectedness; everything that can be
/// checked without the graph.
pub fn structural_violations(td: &TreeDecomposition) -> Vec<Violation> {
    let n = td.nodes.len();
    let mut out = Vec::new();
    if n == 0 {
        return vec![Violation::Empty];
    }
    if td.root >= n {
        return vec![Violation::BadRoot(td.root)];
    }
    let mut parent: Vec<Option<usize>> = vec![None; n];
    for (i, node) in td.nodes.iter().enumerate() {
        for &c in &node.children {
            if c >= n {
                out.push(Violation::ChildOutOfRange { node: i, child: c });
            } else if parent[c].is_some() || c == td.root {
                out.push(Violation::MultipleParents(c));
            } else {
                parent[c] = Some(i);
            }
        }
        if let Some(v) = node.bag.iter().find(|&v| v >= td.universe) {
            out.push(Violation::VertexOutOfRange { node: i, vertex: v });
        }
    }
    if !out.is_empty() {
        return out;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![td.root];
    while let Some(x) = stack.pop() {
        if std::mem::replace(&mut seen[x], true) {
            continue;
        }
        stack.extend(td.nodes[x].children.iter().copied());
    }
    out.extend((0..n).filter(|&i| !seen[i]).map(Violation::Unreachable));
    if !out.is_empty() {
        return out;
    }
    // a vertex's nodes form a subtree iff exactly one of them has a parent
    // that lacks the vertex (or is the root)
    let mut tops = vec![0usize; td.universe];
    for (i, node) in td.nodes.iter().enumerate() {
        for v in node.bag.iter() {
            let lifted = parent[i].is_some_and(|p| td.nodes[p].bag.contains(v));
            if !lifted {
                tops[v] += 1;
            }
        }
    }
    out.extend((0..td.universe).filter(|&v| tops[v] > 1).map(Violation::Disconnected));
    out
}

/// All violations of the decomposition conditions; empty iff `td` is a
/// valid tree decomposition of `g`.
pub fn validate(g: &UndirectedGraph, td: &TreeDecomposition) -> Vec<Violation> {
    let mut out = structural_violations(td);
    if !out.is_empty() {
        return out;
    }
    let mut covered = vec![false; g.vertex_count()];
    for node in &td.nodes {
        for v in node.bag.iter() {
            if v < covered.len() {
                covered[v] = true;
            }
        }
    }
    out.extend((0..g.vertex_count()).filter(|&v| !covered[v]).map(Violation::VertexUncovered));
    for (u, v) in g.edges() {
        if !td.nodes.iter().any(|n| n.bag.contains(u) && n.bag.contains(v)) {
            out.push(Violation::EdgeUncovered(u, v));
        }
    }
    out
}

/// [`validate`] plus the nice-form rules for every node type.
pub fn validate_nice(g: &UndirectedGraph, td: &NiceTreeDecomposition) -> Vec<Violation> {
    let mut out = validate(g, &td.to_plain());
    let nodes = td.nodes();
    if !nodes[td.root()].bag.is_empty() {
        out.push(Violation::RootBagNotEmpty);
    }
    for (i, node) in nodes.iter().enumerate() {
        if node.children.iter().any(|&c| c >= i) {
            out.push(Violation::NotPostOrder(i));
            continue;
        }
        let arity = match node.kind {
            NodeKind::Leaf => 0,
            NodeKind::Introduce(_) | NodeKind::Remove(_) => 1,
            NodeKind::Join => 2,
        };
        if node.children.len() != arity {
            out.push(Violation::ChildCount(i));
            continue;
        }
        match node.kind {
            NodeKind::Leaf => {
                if !node.bag.is_empty() {
                    out.push(Violation::LeafBagNotEmpty(i));
                }
            }
            NodeKind::Introduce(a) => {
                let child = &nodes[node.children[0]].bag;
                if child.contains(a) || *child != node.bag.without(a) || !node.bag.contains(a) {
                    out.push(Violation::BadIntroduce(i));
                }
            }
            NodeKind::Remove(a) => {
                let child = &nodes[node.children[0]].bag;
                if node.bag.contains(a) || node.bag != child.without(a) || !child.contains(a) {
                    out.push(Violation::BadRemove(i));
                }
            }
            NodeKind::Join => {
                let l = &nodes[node.children[0]].bag;
                let r = &nodes[node.children[1]].bag;
                if *l != node.bag || *r != node.bag || node.bag.is_empty() {
                    out.push(Violation::BadJoin(i));
                }
            }
        }
    }
    out
}
