//! Tree decompositions of the undirected attack graph.

mod decomposition;
mod graph;
mod nice;
mod pace;
mod validate;

pub use decomposition::{
    compute_td, from_elimination_order, min_fill_order, TdNode, TreeDecomposition,
    DEFAULT_TD_PASSES,
};
pub use graph::UndirectedGraph;
pub use nice::{make_nice, NiceNode, NiceTreeDecomposition, NodeKind};
pub use pace::{read_pace, write_pace};
pub use validate::{structural_violations, validate, validate_nice, Violation};

use crate::framework::ArgumentationFramework;

pub fn underlying_graph(af: &ArgumentationFramework) -> UndirectedGraph {
    UndirectedGraph::underlying(af)
}

/// Heuristic decomposition of `af` in nice form.
pub fn nice_decomposition(
    af: &ArgumentationFramework,
    seed: u64,
    passes: usize,
) -> NiceTreeDecomposition {
    let td = compute_td(&underlying_graph(af), seed, passes);
    make_nice(&td).expect("heuristic decompositions are valid")
}
