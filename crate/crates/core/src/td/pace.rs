//! PACE `.td` text format: `s td <bags> <max bag size> <vertices>`, one
//! `b <id> <v...>` line per bag (1-based), then tree edges `<i> <j>`.
//! Lines starting with `c` are comments.

use std::fmt::Write;

use super::{TdNode, TreeDecomposition};
use crate::argset::ArgSet;
use crate::error::{Error, Result};

pub fn write_pace(td: &TreeDecomposition) -> String {
    let mut s = String::new();
    let max_bag = td.nodes.iter().map(|n| n.bag.len()).max().unwrap_or(0);
    // bags are renumbered so the root comes first
    let mut order = vec![td.root];
    order.extend((0..td.nodes.len()).filter(|&i| i != td.root));
    let mut id = vec![0; td.nodes.len()];
    for (k, &i) in order.iter().enumerate() {
        id[i] = k + 1;
    }
    writeln!(s, "s td {} {} {}", td.nodes.len(), max_bag, td.universe).unwrap();
    for &i in &order {
        write!(s, "b {}", id[i]).unwrap();
        for v in td.nodes[i].bag.iter() {
            write!(s, " {}", v + 1).unwrap();
        }
        s.push('\n');
    }
    for (i, n) in td.nodes.iter().enumerate() {
        for &c in &n.children {
            writeln!(s, "{} {}", id[i], id[c]).unwrap();
        }
    }
    s
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn number(tok: Option<&str>, line: usize) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, "missing number"))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("`{tok}` is not a number")))
}

/// Reads a PACE decomposition rooted at bag 1.
pub fn read_pace(text: &str) -> Result<TreeDecomposition> {
    let mut header: Option<(usize, usize)> = None;
    let mut bags: Vec<Option<ArgSet>> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('c') {
            continue;
        }
        let mut toks = l.split_whitespace();
        match toks.next() {
            Some("s") => {
                if toks.next() != Some("td") {
                    return Err(parse_err(line, "expected `s td`"));
                }
                let nb = number(toks.next(), line)?;
                let _width = number(toks.next(), line)?;
                let nv = number(toks.next(), line)?;
                header = Some((nb, nv));
                bags = vec![None; nb];
            }
            Some("b") => {
                let (nb, nv) = header.ok_or_else(|| parse_err(line, "bag before header"))?;
                let id = number(toks.next(), line)?;
                if id == 0 || id > nb {
                    return Err(parse_err(line, format!("bag id {id} out of range")));
                }
                let mut bag = ArgSet::empty(nv);
                for t in toks {
                    let v = number(Some(t), line)?;
                    if v == 0 || v > nv {
                        return Err(parse_err(line, format!("vertex {v} out of range")));
                    }
                    bag.insert(v - 1);
                }
                if bags[id - 1].replace(bag).is_some() {
                    return Err(parse_err(line, format!("bag {id} defined twice")));
                }
            }
            Some(first) => {
                let (nb, _) = header.ok_or_else(|| parse_err(line, "edge before header"))?;
                let u = number(Some(first), line)?;
                let v = number(toks.next(), line)?;
                if u == 0 || v == 0 || u > nb || v > nb {
                    return Err(parse_err(line, "tree edge references unknown bag"));
                }
                edges.push((u - 1, v - 1));
            }
            None => {}
        }
    }
    let (nb, nv) = header.ok_or_else(|| parse_err(0, "missing `s td` header"))?;
    let bags: Vec<ArgSet> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| parse_err(0, format!("bag {} missing", i + 1))))
        .collect::<Result<_>>()?;
    if nb == 0 {
        return Err(parse_err(0, "no bags"));
    }
    let mut adj = vec![Vec::new(); nb];
    for &(u, v) in &edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut nodes: Vec<TdNode> = bags
        .into_iter()
        .map(|bag| TdNode {
            bag,
            children: Vec::new(),
        })
        .collect();
    let mut seen = vec![false; nb];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        let mut ns = adj[x].clone();
        ns.sort_unstable();
        for y in ns {
            if !seen[y] {
                seen[y] = true;
                nodes[x].children.push(y);
                stack.push(y);
            }
        }
    }
    if edges.len() != nb - 1 || seen.iter().any(|s| !s) {
        return Err(parse_err(0, "tree edges do not form a tree"));
    }
    Ok(TreeDecomposition {
        universe: nv,
        nodes,
        root: 0,
    })
}
