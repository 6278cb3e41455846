use std::fmt;

use super::{structural_violations, TreeDecomposition, Violation};
use crate::argset::ArgSet;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Leaf,
    Introduce(usize),
    Remove(usize),
    Join,
}

impl fmt::Display for NodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeKind::Leaf => f.write_str("leaf"),
            NodeKind::Introduce(a) => write!(f, "int {a}"),
            NodeKind::Remove(a) => write!(f, "rem {a}"),
            NodeKind::Join => f.write_str("join"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceNode {
    pub kind: NodeKind,
    pub bag: ArgSet,
    pub children: Vec<usize>,
}

/// Nice tree decomposition stored in post-order: children precede their
/// parent and the root is the last node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceTreeDecomposition {
    universe: usize,
    nodes: Vec<NiceNode>,
    subtree_start: Vec<usize>,
}

impl NiceTreeDecomposition {
    /// Wraps nodes already in post-order; checks only the shape, see
    /// [`crate::td::validate_nice`] for the full check.
    pub fn from_post_order(universe: usize, nodes: Vec<NiceNode>) -> Result<Self> {
        let mut subtree_start = Vec::with_capacity(nodes.len());
        for (i, n) in nodes.iter().enumerate() {
            if n.children.iter().any(|&c| c >= i) {
                return Err(Error::InvalidDecomposition(vec![Violation::NotPostOrder(i)]));
            }
            let start = n.children.iter().map(|&c| subtree_start[c]).min().unwrap_or(i);
            subtree_start.push(start);
        }
        if nodes.is_empty() {
            return Err(Error::InvalidDecomposition(vec![Violation::Empty]));
        }
        Ok(NiceTreeDecomposition {
            universe,
            nodes,
            subtree_start,
        })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn nodes(&self) -> &[NiceNode] {
        &self.nodes
    }

    pub fn node(&self, t: usize) -> &NiceNode {
        &self.nodes[t]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    /// First node (in post-order) of the subtree rooted at `t`.
    pub fn subtree_start(&self, t: usize) -> usize {
        self.subtree_start[t]
    }

    pub fn width(&self) -> usize {
        self.nodes
            .iter()
            .map(|n| n.bag.len())
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    pub fn parents(&self) -> Vec<Option<usize>> {
        let mut p = vec![None; self.nodes.len()];
        for (i, n) in self.nodes.iter().enumerate() {
            for &c in &n.children {
                p[c] = Some(i);
            }
        }
        p
    }

    /// Forgets the node types.
    pub fn to_plain(&self) -> TreeDecomposition {
        TreeDecomposition {
            universe: self.universe,
            nodes: self
                .nodes
                .iter()
                .map(|n| super::TdNode {
                    bag: n.bag.clone(),
                    children: n.children.clone(),
                })
                .collect(),
            root: self.root(),
        }
    }
}

struct Builder {
    universe: usize,
    nodes: Vec<NiceNode>,
}

impl Builder {
    fn push(&mut self, kind: NodeKind, bag: ArgSet, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode {
            kind,
            bag,
            children,
        });
        self.nodes.len() - 1
    }

    fn leaf(&mut self) -> usize {
        self.push(NodeKind::Leaf, ArgSet::empty(self.universe), vec![])
    }

    /// Removes `from ∖ to` then introduces `to ∖ from`, one argument per node.
    fn chain(&mut self, mut top: usize, from: &ArgSet, to: &ArgSet) -> usize {
        let mut bag = from.clone();
        for v in (from - to).iter() {
            bag.remove(v);
            top = self.push(NodeKind::Remove(v), bag.clone(), vec![top]);
        }
        for v in (to - from).iter() {
            bag.insert(v);
            top = self.push(NodeKind::Introduce(v), bag.clone(), vec![top]);
        }
        top
    }

    fn join(&mut self, a: usize, b: usize) -> usize {
        let bag = self.nodes[a].bag.clone();
        self.push(NodeKind::Join, bag, vec![a, b])
    }
}

/// Converts a tree decomposition into nice form without changing its width.
pub fn make_nice(td: &TreeDecomposition) -> Result<NiceTreeDecomposition> {
    let violations = structural_violations(td);
    if !violations.is_empty() {
        return Err(Error::InvalidDecomposition(violations));
    }
    let mut b = Builder {
        universe: td.universe,
        nodes: Vec::new(),
    };
    let empty = ArgSet::empty(td.universe);
    let top = build(&mut b, td, td.root, None);
    let root = b.chain(top, &td.nodes[td.root].bag, &empty);
    let nodes = renumber(b.nodes, root);
    NiceTreeDecomposition::from_post_order(td.universe, nodes)
}

/// Builds the nice subtree for `x`, returning its top node (bag = bag of
/// `x`). When `base` is given it replaces the leftmost leaf; this threads
/// the children of an empty bag on top of each other, since joins need
/// non-empty bags.
fn build(b: &mut Builder, td: &TreeDecomposition, x: usize, base: Option<usize>) -> usize {
    let node = &td.nodes[x];
    let bag = &node.bag;
    if node.children.is_empty() {
        let start = base.unwrap_or_else(|| b.leaf());
        let empty = ArgSet::empty(td.universe);
        return b.chain(start, &empty, bag);
    }
    if bag.is_empty() {
        let mut cur = base;
        for &c in &node.children {
            let sub = build(b, td, c, cur);
            cur = Some(b.chain(sub, &td.nodes[c].bag, bag));
        }
        return cur.expect("has children");
    }
    let mut acc: Option<usize> = None;
    let mut base = base;
    for &c in &node.children {
        let sub = build(b, td, c, base.take());
        let lifted = b.chain(sub, &td.nodes[c].bag, bag);
        acc = Some(match acc {
            None => lifted,
            Some(prev) => b.join(prev, lifted),
        });
    }
    acc.expect("has children")
}

fn renumber(nodes: Vec<NiceNode>, root: usize) -> Vec<NiceNode> {
    let mut order = Vec::with_capacity(nodes.len());
    let mut stack = vec![(root, false)];
    while let Some((x, expanded)) = stack.pop() {
        if expanded {
            order.push(x);
            continue;
        }
        stack.push((x, true));
        for &c in nodes[x].children.iter().rev() {
            stack.push((c, false));
        }
    }
    let mut new_id = vec![usize::MAX; nodes.len()];
    for (k, &x) in order.iter().enumerate() {
        new_id[x] = k;
    }
    order
        .iter()
        .map(|&x| {
            let n = &nodes[x];
            NiceNode {
                kind: n.kind,
                bag: n.bag.clone(),
                children: n.children.iter().map(|&c| new_id[c]).collect(),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::td::{compute_td, validate_nice, TdNode, UndirectedGraph};

    fn single(universe: usize, bag: &[usize]) -> TreeDecomposition {
        TreeDecomposition {
            universe,
            nodes: vec![TdNode {
                bag: ArgSet::from_indices(universe, bag.iter().copied()),
                children: vec![],
            }],
            root: 0,
        }
    }

    #[test]
    fn single_bag_becomes_three_node_chain() {
        let nice = make_nice(&single(1, &[0])).unwrap();
        let kinds: Vec<NodeKind> = nice.nodes().iter().map(|n| n.kind).collect();
        assert_eq!(kinds, [NodeKind::Leaf, NodeKind::Introduce(0), NodeKind::Remove(0)]);
        assert!(nice.node(nice.root()).bag.is_empty());
        assert_eq!(nice.width(), 0);
    }

    #[test]
    fn path_graph_keeps_width() {
        let g = UndirectedGraph::from_edges(8, (0..7).map(|i| (i, i + 1)));
        let td = compute_td(&g, 3, 4);
        let nice = make_nice(&td).unwrap();
        assert_eq!(nice.width(), td.width());
        assert!(validate_nice(&g, &nice).is_empty());
    }

    #[test]
    fn empty_bag_with_several_children() {
        let u = 4;
        let td = TreeDecomposition {
            universe: u,
            nodes: vec![
                TdNode { bag: ArgSet::empty(u), children: vec![1, 2, 3] },
                TdNode { bag: ArgSet::from_indices(u, [0, 1]), children: vec![] },
                TdNode { bag: ArgSet::from_indices(u, [2]), children: vec![] },
                TdNode { bag: ArgSet::from_indices(u, [3]), children: vec![] },
            ],
            root: 0,
        };
        let g = UndirectedGraph::from_edges(u, [(0, 1)]);
        let nice = make_nice(&td).unwrap();
        assert!(validate_nice(&g, &nice).is_empty(), "{:?}", validate_nice(&g, &nice));
        assert_eq!(nice.width(), 1);
        let leaves = nice.nodes().iter().filter(|n| n.kind == NodeKind::Leaf).count();
        assert_eq!(leaves, 1);
    }

    #[test]
    fn wide_joins_are_split_into_binary_ones() {
        let u = 4;
        let bag = |v: &[usize]| ArgSet::from_indices(u, v.iter().copied());
        let td = TreeDecomposition {
            universe: u,
            nodes: vec![
                TdNode { bag: bag(&[0]), children: vec![1, 2, 3] },
                TdNode { bag: bag(&[0, 1]), children: vec![] },
                TdNode { bag: bag(&[0, 2]), children: vec![] },
                TdNode { bag: bag(&[0, 3]), children: vec![] },
            ],
            root: 0,
        };
        let g = UndirectedGraph::from_edges(u, [(0, 1), (0, 2), (0, 3)]);
        let nice = make_nice(&td).unwrap();
        assert!(validate_nice(&g, &nice).is_empty());
        let joins: Vec<&NiceNode> = nice.nodes().iter().filter(|n| n.kind == NodeKind::Join).collect();
        assert_eq!(joins.len(), 2);
        for j in joins {
            assert_eq!(j.children.len(), 2);
            for &c in &j.children {
                assert_eq!(nice.node(c).bag, j.bag);
            }
        }
    }

    #[test]
    fn invalid_input_is_rejected() {
        let u = 2;
        let td = TreeDecomposition {
            universe: u,
            nodes: vec![
                TdNode { bag: ArgSet::from_indices(u, [0]), children: vec![1] },
                TdNode { bag: ArgSet::from_indices(u, [1]), children: vec![2] },
                TdNode { bag: ArgSet::from_indices(u, [0]), children: vec![] },
            ],
            root: 0,
        };
        assert!(matches!(make_nice(&td), Err(Error::InvalidDecomposition(_))));
    }
}
